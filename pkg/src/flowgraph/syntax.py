"""AST node classes for the mini-Java subset.

Positions are excluded from equality so that two trees parsed from
differently formatted text compare equal when their structure matches.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

Pos = tuple[int, int]

_NOPOS: Pos = (0, 0)


def _pos() -> Pos:
    return field(default=_NOPOS, compare=False, repr=False)


# -- expressions -------------------------------------------------------------


@dataclass
class VarRef:
    name: str
    pos: Pos = _pos()


@dataclass
class IntLit:
    value: str
    pos: Pos = _pos()


@dataclass
class BoolLit:
    value: bool
    pos: Pos = _pos()


@dataclass
class Paren:
    inner: Expr
    pos: Pos = _pos()


@dataclass
class Assign:
    target: VarRef
    op: str  # "=", "+=", "-="
    value: Expr
    pos: Pos = _pos()


@dataclass
class Binary:
    op: str
    left: Expr
    right: Expr
    pos: Pos = _pos()


@dataclass
class Unary:
    op: str  # "-", "!"
    operand: Expr
    pos: Pos = _pos()


@dataclass
class PostfixIncDec:
    operand: VarRef
    op: str  # "++", "--"
    pos: Pos = _pos()


@dataclass
class Call:
    name: str
    args: list[Expr]
    pos: Pos = _pos()


Expr = Union[VarRef, IntLit, BoolLit, Paren, Assign, Binary, Unary, PostfixIncDec, Call]


# -- statements --------------------------------------------------------------


@dataclass
class Block:
    stmts: list[Stmt]
    pos: Pos = _pos()


@dataclass
class VarDecl:
    type: str
    name: str
    init: Optional[Expr]
    pos: Pos = _pos()


@dataclass
class If:
    cond: Expr
    then: Stmt
    orelse: Optional[Stmt]
    pos: Pos = _pos()


@dataclass
class While:
    cond: Expr
    body: Stmt
    pos: Pos = _pos()


@dataclass
class Return:
    value: Optional[Expr]
    pos: Pos = _pos()


@dataclass
class Break:
    label: Optional[str]
    pos: Pos = _pos()


@dataclass
class Continue:
    label: Optional[str]
    pos: Pos = _pos()


@dataclass
class Labeled:
    label: str
    loop: While
    pos: Pos = _pos()


@dataclass
class ExprStmt:
    expr: Expr
    pos: Pos = _pos()


Stmt = Union[Block, VarDecl, If, While, Return, Break, Continue, Labeled, ExprStmt]


# -- declarations ------------------------------------------------------------


@dataclass
class Param:
    type: str
    name: str
    pos: Pos = _pos()


@dataclass
class Method:
    modifiers: list[str]
    return_type: str
    name: str
    params: list[Param]
    body: Block
    pos: Pos = _pos()


@dataclass
class Class:
    name: str
    methods: list[Method]
    public: bool = False
    pos: Pos = _pos()


Node = Union[Expr, Stmt, Param, Method, Class]


def children(node: Node) -> Iterator[Node]:
    """Yield the direct AST children of ``node`` in source order."""
    if isinstance(node, Class):
        yield from node.methods
    elif isinstance(node, Method):
        yield from node.params
        yield node.body
    elif isinstance(node, Block):
        yield from node.stmts
    elif isinstance(node, VarDecl):
        if node.init is not None:
            yield node.init
    elif isinstance(node, If):
        yield node.cond
        yield node.then
        if node.orelse is not None:
            yield node.orelse
    elif isinstance(node, While):
        yield node.cond
        yield node.body
    elif isinstance(node, Return):
        if node.value is not None:
            yield node.value
    elif isinstance(node, Labeled):
        yield node.loop
    elif isinstance(node, ExprStmt):
        yield node.expr
    elif isinstance(node, Paren):
        yield node.inner
    elif isinstance(node, Assign):
        yield node.target
        yield node.value
    elif isinstance(node, Binary):
        yield node.left
        yield node.right
    elif isinstance(node, Unary):
        yield node.operand
    elif isinstance(node, PostfixIncDec):
        yield node.operand
    elif isinstance(node, Call):
        yield from node.args


def walk(node: Node) -> Iterator[Node]:
    """Pre-order traversal."""
    yield node
    for child in children(node):
        yield from walk(child)
