"""Concrete-syntax rendering of AST nodes.

These strings become the ``txt`` labels of flow nodes, which are the only
key shared between computed graphs and hand-written flow specifications, so
the output format must stay stable.
"""
from __future__ import annotations

from functools import singledispatch

from . import syntax as s


@singledispatch
def get_text(node) -> str:
    raise TypeError(f"cannot render {type(node).__name__}")


@get_text.register
def _(node: s.VarRef) -> str:
    return node.name


@get_text.register
def _(node: s.IntLit) -> str:
    return node.value


@get_text.register
def _(node: s.BoolLit) -> str:
    return "true" if node.value else "false"


@get_text.register
def _(node: s.Paren) -> str:
    return "(" + get_text(node.inner) + ")"


@get_text.register
def _(node: s.Assign) -> str:
    return get_text(node.target) + " " + node.op + " " + get_text(node.value)


@get_text.register
def _(node: s.Binary) -> str:
    return get_text(node.left) + " " + node.op + " " + get_text(node.right)


@get_text.register
def _(node: s.Unary) -> str:
    operand = get_text(node.operand)
    # "- -a" must not collapse into the "--" token.
    if node.op == "-" and operand.startswith("-"):
        return node.op + " " + operand
    return node.op + operand


@get_text.register
def _(node: s.PostfixIncDec) -> str:
    return get_text(node.operand) + node.op


@get_text.register
def _(node: s.Call) -> str:
    return node.name + "(" + ", ".join(get_text(a) for a in node.args) + ")"


@get_text.register
def _(node: s.ExprStmt) -> str:
    return get_text(node.expr) + ";"


@get_text.register
def _(node: s.VarDecl) -> str:
    text = node.type + " " + node.name
    if node.init is not None:
        text += " = " + get_text(node.init)
    return text + ";"


@get_text.register
def _(node: s.Return) -> str:
    if node.value is None:
        return "return;"
    return "return " + get_text(node.value) + ";"


@get_text.register
def _(node: s.Break) -> str:
    return "break;" if node.label is None else f"break {node.label};"


@get_text.register
def _(node: s.Continue) -> str:
    return "continue;" if node.label is None else f"continue {node.label};"


# Compound statements render as their header only; their bodies become
# separate flow nodes.


@get_text.register
def _(node: s.If) -> str:
    return "if (" + get_text(node.cond) + ")"


@get_text.register
def _(node: s.While) -> str:
    return "while (" + get_text(node.cond) + ")"


@get_text.register
def _(node: s.Labeled) -> str:
    return node.label + ":"


@get_text.register
def _(node: s.Block) -> str:
    return "{...}"


@get_text.register
def _(node: s.Param) -> str:
    return node.type + " " + node.name


@get_text.register
def _(node: s.Method) -> str:
    return node.name + "(" + ", ".join(get_text(p) for p in node.params) + ")"
