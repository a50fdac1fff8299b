"""Command-line front end: analyze, certify, census, facewidth.

All output is UTF-8 JSON on stdout (JSON-lines for the census), fully
deterministic for identical invocations.  Exit codes: 0 success, 1 input
or usage error, 2 hypotheses failed (certify only), 3 a constructive
theorem check failed under satisfied hypotheses.
"""

from __future__ import annotations

import argparse
import hashlib
import sys

from .certify import certify
from .diagram import parse_diagram, serialize_diagram, validate_map
from .errors import (
    CapExceededError,
    DiagramSyntaxError,
    InternalContradiction,
    StructureError,
)
from .generator import CensusSpec, enumerate_diagrams, random_diagram
from .report import analyze, dumps

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_HYPOTHESES_FAILED = 2
EXIT_INTERNAL_CONTRADICTION = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gadc",
        description="Analyze and certify link diagrams on closed orientable surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full analysis report of a diagram file")
    p_analyze.add_argument("file")
    p_analyze.add_argument("--out", default=None)

    p_certify = sub.add_parser("certify", help="emit a certificate for a diagram file")
    p_certify.add_argument("file")
    p_certify.add_argument("--out", default=None)

    p_census = sub.add_parser("census", help="stream a diagram census as JSON lines")
    p_census.add_argument("--crossings", type=int, required=True)
    p_census.add_argument("--genus", type=int, default=0)
    p_census.add_argument("--filter", action="append", default=[],
                          choices=["alternating", "reduced", "prime", "knot", "link"])
    p_census.add_argument("--random", type=int, default=None, metavar="COUNT",
                          help="emit COUNT seeded random diagrams instead of enumerating")
    p_census.add_argument("--seed", type=int, default=0)
    p_census.add_argument("--out", default=None)

    p_fw = sub.add_parser("facewidth", help="face-width fragment of a diagram file")
    p_fw.add_argument("file")
    p_fw.add_argument("--out", default=None)

    return parser


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DiagramSyntaxError(f"cannot read {path}: {exc}") from exc
    return parse_diagram(text)


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _census_lines(args) -> list[str]:
    lines = []
    if args.random is not None:
        for k in range(args.random):
            d = random_diagram(args.crossings, args.seed + k)
            cert = certify(d)
            digest = hashlib.sha256(dumps(cert.as_dict()).encode()).hexdigest()
            lines.append(dumps({"diagram": serialize_diagram(d), "certificate": digest}))
        return lines
    spec = CensusSpec(
        max_crossings=args.crossings,
        genus_range=(0, args.genus),
        filters=frozenset(args.filter),
    )
    for d in enumerate_diagrams(spec):
        cert = certify(d)
        digest = hashlib.sha256(dumps(cert.as_dict()).encode()).hexdigest()
        lines.append(dumps({"diagram": serialize_diagram(d), "certificate": digest}))
    return lines


def run(argv: list[str]) -> int:
    """Execute one CLI invocation; returns the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT_ERROR

    try:
        if args.command == "analyze":
            d = _load(args.file)
            _emit(dumps(analyze(d)), args.out)
            return EXIT_OK
        if args.command == "certify":
            d = _load(args.file)
            report = validate_map(d)
            if not report.ok:
                print("invalid diagram:", file=sys.stderr)
                for v in report.violations:
                    print(f"  [{v.rule}] {v.message}", file=sys.stderr)
                return EXIT_INPUT_ERROR
            cert = certify(d)
            _emit(dumps(cert.as_dict()), args.out)
            return EXIT_OK if cert.all_hypotheses_hold else EXIT_HYPOTHESES_FAILED
        if args.command == "census":
            _emit("\n".join(_census_lines(args)), args.out)
            return EXIT_OK
        if args.command == "facewidth":
            d = _load(args.file)
            from .report import face_width_fragment

            _emit(dumps({"face_width": face_width_fragment(d)}), args.out)
            return EXIT_OK
    except (DiagramSyntaxError, StructureError, CapExceededError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except InternalContradiction as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_CONTRADICTION
    return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
