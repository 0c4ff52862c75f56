"""Concrete execution traces over the AST, independent of control_flow.

``run`` interprets a method and records the flow node ids visited: the
Method node, every executed simple statement / return / break / continue,
every evaluated If/While condition, and finally Exit. Any real execution
must follow cfNext edges, which makes the trace a soundness oracle for
the computed CFG.
"""
from __future__ import annotations

from flowgraph import syntax as s


def _wrap(v):
    """Java int overflow semantics."""
    return (v + 2**31) % 2**32 - 2**31


class _Jump(Exception):
    def __init__(self, kind, label=None):
        self.kind = kind
        self.label = label


class _StepLimit(Exception):
    pass


class Tracer:
    def __init__(self, graph, max_steps=400):
        self.graph = graph
        self.by_ast = {id(n.ast): n.id for n in graph.nodes if n.ast is not None}
        # If/While conditions map to their Expr node
        self.trace = []
        self.env = {}
        self.max_steps = max_steps

    def visit(self, ast_node):
        self.trace.append(self.by_ast[id(ast_node)])
        if len(self.trace) > self.max_steps:
            raise _StepLimit

    def run(self, args):
        method = self.graph[self.graph.entry].ast
        self.env = {p.name: a for p, a in zip(method.params, args)}
        self.trace = [self.graph.entry]
        try:
            self.block(method.body.stmts)
        except _Jump as j:
            if j.kind != "return":
                raise
        except _StepLimit:
            return self.trace, False
        self.trace.append(self.graph.exit)
        return self.trace, True

    def block(self, stmts):
        for st in stmts:
            self.stmt(st)

    def stmt(self, st, label=None):
        if isinstance(st, s.Block):
            self.block(st.stmts)
        elif isinstance(st, s.VarDecl):
            self.visit(st)
            self.env[st.name] = self.eval(st.init) if st.init is not None else 0
        elif isinstance(st, s.ExprStmt):
            self.visit(st)
            self.eval(st.expr)
        elif isinstance(st, s.Return):
            self.visit(st)
            if st.value is not None:
                self.eval(st.value)
            raise _Jump("return")
        elif isinstance(st, s.Break):
            self.visit(st)
            raise _Jump("break", st.label)
        elif isinstance(st, s.Continue):
            self.visit(st)
            raise _Jump("continue", st.label)
        elif isinstance(st, s.If):
            self.visit(st.cond)
            if self.truthy(self.eval(st.cond)):
                self.stmt(st.then)
            elif st.orelse is not None:
                self.stmt(st.orelse)
        elif isinstance(st, s.Labeled):
            self.stmt(st.loop, label=st.label)
        elif isinstance(st, s.While):
            while True:
                self.visit(st.cond)
                if not self.truthy(self.eval(st.cond)):
                    break
                try:
                    self.stmt(st.body)
                except _Jump as j:
                    mine = j.label is None or j.label == label
                    if j.kind == "break" and mine:
                        break
                    if j.kind == "continue" and mine:
                        continue
                    raise
        else:
            raise TypeError(st)

    @staticmethod
    def truthy(v):
        return v != 0

    def eval(self, e):
        if isinstance(e, s.IntLit):
            return int(e.value)
        if isinstance(e, s.BoolLit):
            return int(e.value)
        if isinstance(e, s.VarRef):
            return self.env.get(e.name, 0)
        if isinstance(e, s.Paren):
            return self.eval(e.inner)
        if isinstance(e, s.Assign):
            v = self.eval(e.value)
            old = self.env.get(e.target.name, 0)
            new = _wrap({"=": v, "+=": old + v, "-=": old - v}[e.op])
            self.env[e.target.name] = new
            return new
        if isinstance(e, s.PostfixIncDec):
            old = self.env.get(e.operand.name, 0)
            self.env[e.operand.name] = _wrap(old + (1 if e.op == "++" else -1))
            return old
        if isinstance(e, s.Unary):
            v = self.eval(e.operand)
            return _wrap(-v) if e.op == "-" else int(v == 0)
        if isinstance(e, s.Call):
            return sum(self.eval(a) for a in e.args) % 5
        if isinstance(e, s.Binary):
            a, b = self.eval(e.left), self.eval(e.right)
            op = e.op
            if op in ("/", "%"):
                if b == 0:
                    return 0
                q = abs(a) // abs(b) * (1 if (a >= 0) == (b >= 0) else -1)
                return _wrap(q if op == "/" else a - q * b)
            return _wrap({
                "+": lambda: a + b, "-": lambda: a - b, "*": lambda: a * b,
                "<": lambda: a < b, ">": lambda: a > b, "<=": lambda: a <= b,
                ">=": lambda: a >= b, "==": lambda: a == b, "!=": lambda: a != b,
            }[op]())
        raise TypeError(e)


def run(graph, args, max_steps=400):
    """Return (trace of flow node ids, whether the method terminated)."""
    return Tracer(graph, max_steps).run(args)
