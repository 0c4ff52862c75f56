"""Recursive-descent parser and name binder for the mini-Java subset.

``parse`` returns a bound :class:`~flowgraph.syntax.Class`. The lower-level
``parse_statement`` and ``parse_expression`` skip binding; they exist so that
pretty-printed node labels can be re-parsed in isolation.
"""
from __future__ import annotations

from typing import Optional, Sequence

from . import syntax as s
from .errors import BindError, ParseError
from .lexer import Token, tokenize

TYPES = ("int", "boolean", "void")
MODIFIERS = ("public", "private", "static")
ASSIGN_OPS = ("=", "+=", "-=")

# Binary precedence levels, loosest first.
BINARY_LEVELS = (
    ("==", "!="),
    ("<", ">", "<=", ">="),
    ("+", "-"),
    ("*", "/", "%"),
)


class Parser:
    def __init__(self, tokens: Sequence[Token]):
        self.tokens = list(tokens)
        self.i = 0

    # -- token helpers --------------------------------------------------------

    def peek(self, offset: int = 0) -> Optional[Token]:
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else None

    def at(self, lexeme: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok is not None and tok.kind != "identifier" and tok.lexeme == lexeme

    def at_kind(self, kind: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok is not None and tok.kind == kind

    def fail(self, expected: Sequence[str]) -> ParseError:
        tok = self.peek()
        want = " or ".join(repr(e) for e in expected)
        if tok is None:
            last = self.tokens[-1] if self.tokens else None
            line, col = (last.line, last.column + len(last.lexeme)) if last else (1, 1)
            return ParseError(f"unexpected end of input, expected {want}", line, col, tuple(expected))
        return ParseError(f"unexpected {tok.lexeme!r}, expected {want}", tok.line, tok.column, tuple(expected))

    def expect(self, lexeme: str) -> Token:
        if not self.at(lexeme):
            raise self.fail([lexeme])
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_ident(self) -> Token:
        if not self.at_kind("identifier"):
            raise self.fail(["identifier"])
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_type(self) -> Token:
        for t in TYPES:
            if self.at(t):
                return self.expect(t)
        raise self.fail(TYPES)

    def expect_end(self) -> None:
        if self.peek() is not None:
            raise self.fail(["end of input"])

    # -- declarations ---------------------------------------------------------

    def parse_class(self) -> s.Class:
        first = self.peek()
        public = False
        if self.at("public"):
            self.expect("public")
            public = True
        kw = self.expect("class")
        name = self.expect_ident()
        self.expect("{")
        methods = []
        while not self.at("}"):
            if self.peek() is None:
                raise self.fail(["}"])
            methods.append(self.parse_method())
        self.expect("}")
        self.expect_end()
        start = first if public else kw
        return s.Class(name.lexeme, methods, public, pos=(start.line, start.column))

    def parse_method(self) -> s.Method:
        first = self.peek()
        modifiers = []
        while any(self.at(m) for m in MODIFIERS):
            modifiers.append(self.tokens[self.i].lexeme)
            self.i += 1
        rtype = self.expect_type()
        name = self.expect_ident()
        self.expect("(")
        params = []
        if not self.at(")"):
            params.append(self.parse_param())
            while self.at(","):
                self.expect(",")
                params.append(self.parse_param())
        self.expect(")")
        body = self.parse_block()
        return s.Method(modifiers, rtype.lexeme, name.lexeme, params, body, pos=(first.line, first.column))

    def parse_param(self) -> s.Param:
        t = self.expect_type()
        name = self.expect_ident()
        return s.Param(t.lexeme, name.lexeme, pos=(t.line, t.column))

    # -- statements -----------------------------------------------------------

    def parse_block(self) -> s.Block:
        lb = self.expect("{")
        stmts = []
        while not self.at("}"):
            if self.peek() is None:
                raise self.fail(["}"])
            stmts.append(self.parse_stmt())
        self.expect("}")
        return s.Block(stmts, pos=(lb.line, lb.column))

    def parse_stmt(self) -> s.Stmt:
        tok = self.peek()
        if tok is None:
            raise self.fail(["statement"])
        pos = (tok.line, tok.column)
        if self.at("{"):
            return self.parse_block()
        if any(self.at(t) for t in TYPES):
            t = self.expect_type()
            name = self.expect_ident()
            init = None
            if self.at("="):
                self.expect("=")
                init = self.parse_expr()
            self.expect(";")
            return s.VarDecl(t.lexeme, name.lexeme, init, pos=pos)
        if self.at("if"):
            self.expect("if")
            self.expect("(")
            cond = self.parse_expr()
            self.expect(")")
            then = self.parse_stmt()
            orelse = None
            if self.at("else"):
                self.expect("else")
                orelse = self.parse_stmt()
            return s.If(cond, then, orelse, pos=pos)
        if self.at("while"):
            return self.parse_while()
        if self.at("return"):
            self.expect("return")
            value = None if self.at(";") else self.parse_expr()
            self.expect(";")
            return s.Return(value, pos=pos)
        if self.at("break") or self.at("continue"):
            kw = tok.lexeme
            self.i += 1
            label = self.expect_ident().lexeme if self.at_kind("identifier") else None
            self.expect(";")
            return s.Break(label, pos=pos) if kw == "break" else s.Continue(label, pos=pos)
        if self.at_kind("identifier") and self.at(":", 1):
            label = self.expect_ident()
            self.expect(":")
            if not self.at("while"):
                raise self.fail(["while"])
            return s.Labeled(label.lexeme, self.parse_while(), pos=pos)
        expr = self.parse_expr()
        self.expect(";")
        return s.ExprStmt(expr, pos=pos)

    def parse_while(self) -> s.While:
        kw = self.expect("while")
        self.expect("(")
        cond = self.parse_expr()
        self.expect(")")
        body = self.parse_stmt()
        return s.While(cond, body, pos=(kw.line, kw.column))

    # -- expressions ----------------------------------------------------------

    def parse_expr(self) -> s.Expr:
        return self.parse_assignment()

    def parse_assignment(self) -> s.Expr:
        if self.at_kind("identifier") and any(self.at(op, 1) for op in ASSIGN_OPS):
            name = self.expect_ident()
            op = self.tokens[self.i].lexeme
            self.i += 1
            value = self.parse_assignment()
            target = s.VarRef(name.lexeme, pos=(name.line, name.column))
            return s.Assign(target, op, value, pos=target.pos)
        return self.parse_binary(0)

    def parse_binary(self, level: int) -> s.Expr:
        if level == len(BINARY_LEVELS):
            return self.parse_unary()
        left = self.parse_binary(level + 1)
        ops = BINARY_LEVELS[level]
        while any(self.at(op) for op in ops):
            op = self.tokens[self.i].lexeme
            self.i += 1
            right = self.parse_binary(level + 1)
            left = s.Binary(op, left, right, pos=left.pos)
        return left

    def parse_unary(self) -> s.Expr:
        if self.at("-") or self.at("!"):
            tok = self.tokens[self.i]
            self.i += 1
            return s.Unary(tok.lexeme, self.parse_unary(), pos=(tok.line, tok.column))
        return self.parse_postfix()

    def parse_postfix(self) -> s.Expr:
        expr = self.parse_primary()
        if self.at("++") or self.at("--"):
            tok = self.tokens[self.i]
            if not isinstance(expr, s.VarRef):
                raise ParseError(f"operand of {tok.lexeme!r} must be a variable", tok.line, tok.column, ("variable",))
            self.i += 1
            return s.PostfixIncDec(expr, tok.lexeme, pos=expr.pos)
        return expr

    def parse_primary(self) -> s.Expr:
        tok = self.peek()
        if tok is None:
            raise self.fail(["expression"])
        pos = (tok.line, tok.column)
        if tok.kind == "integer":
            self.i += 1
            return s.IntLit(tok.lexeme, pos=pos)
        if self.at("true") or self.at("false"):
            self.i += 1
            return s.BoolLit(tok.lexeme == "true", pos=pos)
        if tok.kind == "identifier":
            self.i += 1
            if self.at("("):
                self.expect("(")
                args = []
                if not self.at(")"):
                    args.append(self.parse_expr())
                    while self.at(","):
                        self.expect(",")
                        args.append(self.parse_expr())
                self.expect(")")
                return s.Call(tok.lexeme, args, pos=pos)
            return s.VarRef(tok.lexeme, pos=pos)
        if self.at("("):
            self.expect("(")
            inner = self.parse_expr()
            self.expect(")")
            return s.Paren(inner, pos=pos)
        raise self.fail(["expression"])


# -- binding ------------------------------------------------------------------


class _Binder:
    """Checks name resolution, label scoping, and jump placement for one method.

    Declared names must be unique across the whole method (parameters
    included), which also rules out shadowing.
    """

    def __init__(self, method: s.Method):
        self.method = method
        self.declared: set[str] = set()
        self.scopes: list[set[str]] = []
        self.labels: list[str] = []
        self.loop_depth = 0

    def declare(self, name: str, pos: s.Pos) -> None:
        if name in self.declared:
            raise BindError(f"variable {name!r} is already declared in method {self.method.name!r}", *pos)
        self.declared.add(name)
        self.scopes[-1].add(name)

    def visible(self, name: str) -> bool:
        return any(name in scope for scope in self.scopes)

    def run(self) -> None:
        self.scopes.append(set())
        for p in self.method.params:
            self.declare(p.name, p.pos)
        self.block(self.method.body)
        self.scopes.pop()

    def block(self, block: s.Block) -> None:
        self.scopes.append(set())
        for stmt in block.stmts:
            self.stmt(stmt)
        self.scopes.pop()

    def nested(self, stmt: s.Stmt) -> None:
        # A non-block branch or loop body still gets its own scope.
        self.scopes.append(set())
        self.stmt(stmt)
        self.scopes.pop()

    def stmt(self, stmt: s.Stmt) -> None:
        if isinstance(stmt, s.Block):
            self.block(stmt)
        elif isinstance(stmt, s.VarDecl):
            if stmt.init is not None:
                self.expr(stmt.init)
            self.declare(stmt.name, stmt.pos)
        elif isinstance(stmt, s.If):
            self.expr(stmt.cond)
            self.nested(stmt.then)
            if stmt.orelse is not None:
                self.nested(stmt.orelse)
        elif isinstance(stmt, s.While):
            self.loop(stmt)
        elif isinstance(stmt, s.Labeled):
            if stmt.label in self.labels:
                raise BindError(f"duplicate label {stmt.label!r}", *stmt.pos)
            self.labels.append(stmt.label)
            self.loop(stmt.loop)
            self.labels.pop()
        elif isinstance(stmt, (s.Break, s.Continue)):
            kw = "break" if isinstance(stmt, s.Break) else "continue"
            if stmt.label is not None:
                if stmt.label not in self.labels:
                    raise BindError(f"undefined label {stmt.label!r} in {kw}", *stmt.pos)
            elif self.loop_depth == 0:
                raise BindError(f"{kw} outside of loop", *stmt.pos)
        elif isinstance(stmt, s.Return):
            if stmt.value is not None:
                self.expr(stmt.value)
        elif isinstance(stmt, s.ExprStmt):
            self.expr(stmt.expr)

    def loop(self, loop: s.While) -> None:
        self.expr(loop.cond)
        self.loop_depth += 1
        self.nested(loop.body)
        self.loop_depth -= 1

    def expr(self, expr: s.Expr) -> None:
        for node in s.walk(expr):
            if isinstance(node, s.VarRef) and not self.visible(node.name):
                raise BindError(f"unresolved variable {node.name!r}", *node.pos)


def bind(cls: s.Class) -> s.Class:
    seen: set[str] = set()
    for method in cls.methods:
        if method.name in seen:
            raise BindError(f"duplicate method {method.name!r}", *method.pos)
        seen.add(method.name)
        _Binder(method).run()
    return cls


def parse(tokens: Sequence[Token]) -> s.Class:
    """Parse a whole compilation unit and check name binding."""
    return bind(Parser(tokens).parse_class())


def parse_source(source: str) -> s.Class:
    return parse(tokenize(source))


def parse_statement(source: str) -> s.Stmt:
    p = Parser(tokenize(source))
    stmt = p.parse_stmt()
    p.expect_end()
    return stmt


def parse_expression(source: str) -> s.Expr:
    p = Parser(tokenize(source))
    expr = p.parse_expr()
    p.expect_end()
    return expr
