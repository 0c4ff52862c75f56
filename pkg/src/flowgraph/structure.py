"""Per-method structure graphs: flow nodes, txt labels, and variable tables.

Node ids follow a fixed pre-order: the Method node is 0, the Exit node is 1,
and the body statements are numbered from 2 in source order (a compound
statement precedes its condition, which precedes its branches).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Union

from . import syntax as s
from .printer import get_text


class FlowNodeKind(str, enum.Enum):
    METHOD = "Method"
    EXIT = "Exit"
    BLOCK = "Block"
    IF = "If"
    LOOP = "Loop"
    RETURN = "Return"
    JUMP_STMT = "JumpStmt"  # kept for completeness; no construct in the subset produces it
    LABEL = "Label"
    CONTINUE = "Continue"
    BREAK = "Break"
    SIMPLE_STMT = "SimpleStmt"
    EXPR = "Expr"
    VAR = "Var"
    PARAM = "Param"

    def __str__(self) -> str:
        return self.value


K = FlowNodeKind

CONTAINER_KINDS = frozenset({K.BLOCK, K.IF, K.LOOP, K.LABEL})
FLOW_KINDS = frozenset({K.METHOD, K.EXIT, K.SIMPLE_STMT, K.RETURN, K.BREAK, K.CONTINUE, K.EXPR})


@dataclass
class FlowNode:
    id: int
    kind: FlowNodeKind
    txt: str
    parent: Optional[int] = None
    expr: Optional[int] = None
    body: list[int] = field(default_factory=list)
    then: list[int] = field(default_factory=list)
    orelse: list[int] = field(default_factory=list)
    target: Optional[int] = None  # Loop node a Break/Continue jumps to
    cf_next: set[int] = field(default_factory=set)
    df_next: set[int] = field(default_factory=set)
    ast: Union[s.Node, None] = field(default=None, compare=False, repr=False)

    @property
    def is_flow(self) -> bool:
        return self.kind in FLOW_KINDS

    def children(self) -> list[int]:
        head = [self.expr] if self.expr is not None else []
        return head + self.body + self.then + self.orelse


@dataclass
class VarInfo:
    name: str
    kind: FlowNodeKind  # VAR or PARAM
    decl: int
    definers: list[int] = field(default_factory=list)
    users: list[int] = field(default_factory=list)


@dataclass
class FlowGraph:
    method: str
    nodes: list[FlowNode]
    entry: int = 0
    exit: int = 1
    vars: list[VarInfo] = field(default_factory=list)
    defs: dict[int, frozenset[str]] = field(default_factory=dict)
    uses: dict[int, frozenset[str]] = field(default_factory=dict)

    def __getitem__(self, node_id: int) -> FlowNode:
        return self.nodes[node_id]

    def flow_nodes(self) -> list[FlowNode]:
        return [n for n in self.nodes if n.is_flow]

    def cf_edges(self) -> list[tuple[int, int]]:
        return sorted((n.id, m) for n in self.nodes for m in n.cf_next)

    def df_edges(self) -> list[tuple[int, int]]:
        return sorted((n.id, m) for n in self.nodes for m in n.df_next)

    def predecessors(self) -> dict[int, set[int]]:
        preds: dict[int, set[int]] = {n.id: set() for n in self.nodes}
        for n in self.nodes:
            for m in n.cf_next:
                preds[m].add(n.id)
        return preds

    def find(self, txt: str) -> list[FlowNode]:
        return [n for n in self.nodes if n.txt == txt]

    def var(self, name: str) -> VarInfo:
        for v in self.vars:
            if v.name == name:
                return v
        raise KeyError(name)


class _Builder:
    def __init__(self, method: s.Method):
        self.method = method
        self.nodes: list[FlowNode] = []
        self.loops: list[tuple[Optional[str], int]] = []  # (label, Loop node id)

    def new(self, kind: FlowNodeKind, txt: str, parent: Optional[int], ast) -> FlowNode:
        node = FlowNode(len(self.nodes), kind, txt, parent=parent, ast=ast)
        self.nodes.append(node)
        return node

    def build(self) -> FlowGraph:
        m = self.new(K.METHOD, get_text(self.method), None, self.method)
        self.new(K.EXIT, "Exit", None, None)
        m.body = [self.stmt(st, m.id) for st in self.method.body.stmts]
        return FlowGraph(self.method.name, self.nodes)

    def stmt(self, st: s.Stmt, parent: int, label: Optional[str] = None) -> int:
        if isinstance(st, s.Block):
            node = self.new(K.BLOCK, get_text(st), parent, st)
            node.body = [self.stmt(c, node.id) for c in st.stmts]
        elif isinstance(st, s.If):
            node = self.new(K.IF, get_text(st), parent, st)
            node.expr = self.new(K.EXPR, get_text(st.cond), node.id, st.cond).id
            node.then = [self.stmt(st.then, node.id)]
            if st.orelse is not None:
                node.orelse = [self.stmt(st.orelse, node.id)]
        elif isinstance(st, s.While):
            node = self.new(K.LOOP, get_text(st), parent, st)
            node.expr = self.new(K.EXPR, get_text(st.cond), node.id, st.cond).id
            self.loops.append((label, node.id))
            node.body = [self.stmt(st.body, node.id)]
            self.loops.pop()
        elif isinstance(st, s.Labeled):
            node = self.new(K.LABEL, get_text(st), parent, st)
            node.body = [self.stmt(st.loop, node.id, label=st.label)]
        elif isinstance(st, (s.Break, s.Continue)):
            kind = K.BREAK if isinstance(st, s.Break) else K.CONTINUE
            node = self.new(kind, get_text(st), parent, st)
            node.target = self.jump_target(st.label)
        elif isinstance(st, s.Return):
            node = self.new(K.RETURN, get_text(st), parent, st)
        else:
            node = self.new(K.SIMPLE_STMT, get_text(st), parent, st)
        return node.id

    def jump_target(self, label: Optional[str]) -> Optional[int]:
        # Unresolvable targets stay None and are reported by control_flow.
        if label is None:
            return self.loops[-1][1] if self.loops else None
        for name, loop_id in reversed(self.loops):
            if name == label:
                return loop_id
        return None


def build_graph(method: s.Method) -> FlowGraph:
    """Map one method AST onto a structure graph with empty edge sets."""
    return _Builder(method).build()


# -- def/use extraction --------------------------------------------------------


def _defs_of(ast) -> set[str]:
    if ast is None:
        return set()
    if isinstance(ast, s.Method):
        return {p.name for p in ast.params}
    out = set()
    if isinstance(ast, s.VarDecl):
        out.add(ast.name)
    for node in s.walk(ast):
        if isinstance(node, s.Assign):
            out.add(node.target.name)
        elif isinstance(node, s.PostfixIncDec):
            out.add(node.operand.name)
    return out


def _uses_of(ast) -> set[str]:
    if ast is None or isinstance(ast, s.Method):
        return set()
    # Only the target of a plain "=" is a pure write.
    write_only = {id(n.target) for n in s.walk(ast) if isinstance(n, s.Assign) and n.op == "="}
    return {n.name for n in s.walk(ast) if isinstance(n, s.VarRef) and id(n) not in write_only}


def _flow_ast(node: FlowNode):
    # Containers carry no def/use; If/Loop conditions live on their Expr child.
    if node.kind in CONTAINER_KINDS or node.kind == K.EXIT:
        return None
    return node.ast


def collect_defs(graph: FlowGraph) -> dict[int, frozenset[str]]:
    return {n.id: frozenset(_defs_of(_flow_ast(n))) for n in graph.nodes}


def collect_uses(graph: FlowGraph) -> dict[int, frozenset[str]]:
    return {n.id: frozenset(_uses_of(_flow_ast(n))) for n in graph.nodes}


def populate_var_table(graph: FlowGraph) -> FlowGraph:
    """Fill ``graph.defs``, ``graph.uses`` and ``graph.vars``.

    The declaring node (or the Method node, for a parameter) is always the
    first definer, whether or not the declaration has an initializer.
    """
    graph.defs = collect_defs(graph)
    graph.uses = collect_uses(graph)

    method = graph[graph.entry].ast
    decls: list[tuple[str, FlowNodeKind, int]] = [(p.name, K.PARAM, graph.entry) for p in method.params]
    for n in graph.nodes:
        if isinstance(n.ast, s.VarDecl) and n.kind == K.SIMPLE_STMT:
            decls.append((n.ast.name, K.VAR, n.id))

    graph.vars = []
    for name, kind, decl in decls:
        definers = [decl] + [i for i in sorted(graph.defs) if name in graph.defs[i] and i != decl]
        users = [i for i in sorted(graph.uses) if name in graph.uses[i]]
        graph.vars.append(VarInfo(name, kind, decl, definers, users))
    return graph


def build_graphs(cls: s.Class) -> list[FlowGraph]:
    """Structure graphs, with variable tables, for every method of a class."""
    return [populate_var_table(build_graph(m)) for m in cls.methods]
