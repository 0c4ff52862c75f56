"""Flow specifications: parsing, validation against graphs, and reports.

A specification lists the expected cf/df links of each method, naming
nodes by their txt labels::

    method m {
      cf "int a = 1;" --> "return a;";
      df "int a = 1;" --> "return a;";
    }
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import SpecParseError
from .structure import FlowGraph

KINDS = ("cf", "df")


@dataclass(frozen=True)
class LinkSpec:
    kind: str
    src: str
    dst: str
    pos: tuple[int, int] = field(default=(0, 0), compare=False)

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.kind, self.src, self.dst)


@dataclass
class MethodSpec:
    name: str
    links: list[LinkSpec] = field(default_factory=list)


@dataclass
class FlowSpec:
    methods: list[MethodSpec] = field(default_factory=list)


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<string>"(?:[^"\\\n]|\\["\\])*")
  | (?P<arrow>-->)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[{};])
    """,
    re.VERBOSE,
)


def _lex(source: str) -> list[tuple[str, str, int, int]]:
    out = []
    i, line, line_start = 0, 1, 0
    while i < len(source):
        m = _TOKEN.match(source, i)
        col = i - line_start + 1
        if m is None:
            if source[i] == '"':
                raise SpecParseError("unterminated or malformed string literal", line, col)
            raise SpecParseError(f"unexpected character {source[i]!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        if kind != "ws":
            out.append((kind, text, line, col))
        nl = text.count("\n")
        if nl:
            line += nl
            line_start = i + text.rindex("\n") + 1
        i = m.end()
    return out


def _unquote(literal: str) -> str:
    return re.sub(r"\\([\"\\])", r"\1", literal[1:-1])


def quote(txt: str) -> str:
    return '"' + txt.replace("\\", "\\\\").replace('"', '\\"') + '"'


def parse_spec(source: str) -> FlowSpec:
    tokens = _lex(source)
    pos = 0

    def expect(kind: str, text: str | None = None) -> tuple[str, str, int, int]:
        nonlocal pos
        if pos >= len(tokens):
            line, col = (tokens[-1][2], tokens[-1][3]) if tokens else (1, 1)
            raise SpecParseError(f"unexpected end of input, expected {text or kind}", line, col)
        tok = tokens[pos]
        if tok[0] != kind or (text is not None and tok[1] != text):
            raise SpecParseError(f"unexpected {tok[1]!r}, expected {text or kind}", tok[2], tok[3])
        pos += 1
        return tok

    spec = FlowSpec()
    names: set[str] = set()
    while pos < len(tokens):
        expect("ident", "method")
        name_tok = expect("ident")
        if name_tok[1] in names:
            raise SpecParseError(f"duplicate method {name_tok[1]!r}", name_tok[2], name_tok[3])
        names.add(name_tok[1])
        mspec = MethodSpec(name_tok[1])
        expect("punct", "{")
        while pos < len(tokens) and tokens[pos][1] != "}":
            kind_tok = tokens[pos]
            if kind_tok[0] != "ident" or kind_tok[1] not in KINDS:
                raise SpecParseError(f"unexpected {kind_tok[1]!r}, expected 'cf' or 'df'", kind_tok[2], kind_tok[3])
            pos += 1
            src = _unquote(expect("string")[1])
            expect("arrow")
            dst = _unquote(expect("string")[1])
            expect("punct", ";")
            if not src or not dst:
                raise SpecParseError("empty txt in link", kind_tok[2], kind_tok[3])
            mspec.links.append(LinkSpec(kind_tok[1], src, dst, pos=(kind_tok[2], kind_tok[3])))
        expect("punct", "}")
        spec.methods.append(mspec)
    return spec


# -- validation ----------------------------------------------------------------


@dataclass
class MethodReport:
    name: str
    missing: list[LinkSpec] = field(default_factory=list)
    false: list[tuple[str, str, str]] = field(default_factory=list)
    unmatched: list[str] = field(default_factory=list)
    checked: int = 0


@dataclass
class ValidationReport:
    methods: list[MethodReport] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return sum(m.checked for m in self.methods)

    @property
    def missing(self) -> int:
        return sum(len(m.missing) for m in self.methods)

    @property
    def false(self) -> int:
        return sum(len(m.false) for m in self.methods)

    @property
    def unmatched(self) -> int:
        return sum(len(m.unmatched) for m in self.methods)

    @property
    def ok(self) -> bool:
        return not (self.missing or self.false or self.unmatched)


def edge_keys(graph: FlowGraph) -> set[tuple[str, str, str]]:
    """The graph's edges as (kind, src txt, dst txt) triples."""
    keys = {("cf", graph[a].txt, graph[b].txt) for a, b in graph.cf_edges()}
    keys |= {("df", graph[a].txt, graph[b].txt) for a, b in graph.df_edges()}
    return keys


def _validate_method(name: str, graph: FlowGraph | None, links: Sequence[LinkSpec]) -> MethodReport:
    report = MethodReport(name, checked=len(links))
    labels = {n.txt for n in graph.nodes} if graph is not None else set()
    present = edge_keys(graph) if graph is not None else set()

    for link in links:
        bad = [t for t in (link.src, link.dst) if t not in labels]
        for t in bad:
            if t not in report.unmatched:
                report.unmatched.append(t)
        if not bad and link.key not in present:
            report.missing.append(link)

    specified = {link.key for link in links}
    report.false = sorted((k for k in present if k not in specified), key=lambda k: (k[1], k[2], k[0]))
    return report


def validate(graphs: Iterable[FlowGraph], spec: FlowSpec) -> ValidationReport:
    """Compare graph edges with a specification, matching nodes by txt.

    Methods that exist only in the graphs are checked against an empty link
    list, so all of their edges count as false links.
    """
    by_name = {g.method: g for g in graphs}
    report = ValidationReport()
    for mspec in spec.methods:
        report.methods.append(_validate_method(mspec.name, by_name.get(mspec.name), mspec.links))
    named = {m.name for m in spec.methods}
    for name, graph in by_name.items():
        if name not in named:
            report.methods.append(_validate_method(name, graph, []))
    return report


def render_report(report: ValidationReport) -> str:
    lines = []
    for m in report.methods:
        for txt in m.unmatched:
            lines.append(f"ERROR unmatched: {quote(txt)} in method {m.name}")
        for link in m.missing:
            lines.append(f"MISSING {link.kind}: {quote(link.src)} --> {quote(link.dst)}")
        for kind, src, dst in m.false:
            lines.append(f"FALSE {kind}: {quote(src)} --> {quote(dst)}")
    lines.append(f"RESULT: {report.checked} checked, {report.missing} missing, {report.false} false")
    return "\n".join(lines) + "\n"


def emit_spec(graphs: Iterable[FlowGraph]) -> str:
    """Write the graphs' own edges as a specification."""
    chunks = []
    for g in graphs:
        keys = sorted(edge_keys(g), key=lambda k: (KINDS.index(k[0]), k[1], k[2]))
        body = "".join(f"  {kind} {quote(src)} --> {quote(dst)};\n" for kind, src, dst in keys)
        chunks.append(f"method {g.method} {{\n{body}}}\n")
    return "".join(chunks)
