"""Command-line entry point: ``flowgraph build`` and ``flowgraph validate``."""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .errors import FlowgraphError
from .flowspec import emit_spec, parse_spec, render_report, validate
from .pipeline import STAGES, analyze
from .serialize import EMITTERS

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_INPUT = 2
EXIT_IO = 3


@dataclass
class PipelineConfig:
    source: Path
    stage: str = "pdg"
    format: str = "json"
    spec: Optional[Path] = None
    oracle: Optional[str] = None
    output: Optional[Path] = None

    def __post_init__(self) -> None:
        if self.spec is not None and self.stage != "pdg":
            raise ValueError("a spec can only be checked against the pdg stage")
        if self.oracle is not None and self.stage != "pdg":
            raise ValueError("--oracle requires --stage pdg")


class _Abort(Exception):
    def __init__(self, code: int):
        self.code = code


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        print(f"flowgraph: cannot read {path}: {exc}", file=sys.stderr)
        raise _Abort(EXIT_IO)


def _write(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"flowgraph: cannot write {path}: {exc}", file=sys.stderr)
        raise _Abort(EXIT_IO)


def _analyze(path: Path, stage: str, oracle: Optional[str] = None):
    try:
        return analyze(_read(path), stage, oracle)
    except FlowgraphError as exc:
        print(f"{path}:{exc.line}:{exc.column}: error: {exc.message}", file=sys.stderr)
        raise _Abort(EXIT_INPUT)


def cmd_build(config: PipelineConfig) -> int:
    graphs = _analyze(config.source, config.stage, config.oracle)
    _write(EMITTERS[config.format](graphs), config.output)
    return EXIT_OK


def cmd_validate(source: Path, spec_path: Optional[Path], emit: bool = False) -> int:
    graphs = _analyze(source, "pdg")
    if emit:
        _write(emit_spec(graphs), spec_path)
        return EXIT_OK
    if spec_path is None:
        print("flowgraph: validate needs a spec file (or --emit-spec)", file=sys.stderr)
        return EXIT_INPUT
    try:
        spec = parse_spec(_read(spec_path))
    except FlowgraphError as exc:
        print(f"{spec_path}:{exc.line}:{exc.column}: error: {exc.message}", file=sys.stderr)
        return EXIT_INPUT
    report = validate(graphs, spec)
    sys.stdout.write(render_report(report))
    return EXIT_OK if report.ok else EXIT_FINDINGS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flowgraph",
        description="Derive control-flow and data-flow graphs of mini-Java methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="emit the structure graph, CFG, or PDG of a source file")
    b.add_argument("file", type=Path)
    b.add_argument("--stage", choices=STAGES, default="pdg")
    b.add_argument("--format", choices=sorted(EMITTERS), default="json")
    b.add_argument("--oracle", choices=("rd", "path"), help="take df edges from a reference computation")
    b.add_argument("-o", "--output", type=Path)

    v = sub.add_parser("validate", help="check a source file against a flow specification")
    v.add_argument("file", type=Path)
    v.add_argument("spec", type=Path, nargs="?")
    v.add_argument(
        "--emit-spec",
        action="store_true",
        help="write the computed edges as a spec (to SPEC if given, else stdout)",
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "build":
            try:
                config = PipelineConfig(args.file, args.stage, args.format, oracle=args.oracle, output=args.output)
            except ValueError as exc:
                parser.error(str(exc))
            return cmd_build(config)
        return cmd_validate(args.file, args.spec, emit=args.emit_spec)
    except _Abort as abort:
        return abort.code


if __name__ == "__main__":
    sys.exit(main())
