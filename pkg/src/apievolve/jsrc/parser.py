"""Recursive-descent parser for the supported Java subset.

Anything outside the subset (loops, try, switch, lambdas, casts, ternaries,
anonymous classes, array creation ...) is still parsed far enough to find its
extent and then collapsed into an ``OpaqueStmt`` or ``OpaqueExpr``. Input that
is not bracket-balanced, or that ends mid-declaration, raises ``ParseError``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import nodes as n
from .errors import ParseError
from .lexer import (
    CHAR, EOF, IDENT, KEYWORD, NUMBER, OP, PRIMITIVES, STRING,
    Token, check_balance, line_col, tokenize,
)

MODIFIER_WORDS = frozenset(
    "public private protected static final abstract native synchronized "
    "transient volatile strictfp default".split()
)
_TYPE_DECL_WORDS = ("class", "interface", "enum")
_OPAQUE_STMT_WORDS = frozenset(
    "for while do try switch synchronized throw break continue assert".split()
)
_ASSIGN_OPS = frozenset("= += -= *= /= %= &= |= ^= <<=".split())
_CAST_FOLLOW = frozenset({IDENT, NUMBER, STRING, CHAR})
_CAST_FOLLOW_KW = frozenset("this super new true false null switch".split()) | PRIMITIVES
_TYPE_TOKENS = frozenset(". < > , ? [ ] & @".split())


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        check_balance(text, self.toks)
        self.match = _bracket_table(self.toks)
        self.i = 0

    # -- token helpers ------------------------------------------------------

    def peek(self, k: int = 0) -> Token:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else self.toks[-1]

    def advance(self) -> Token:
        tok = self.toks[self.i]
        if tok.kind != EOF:
            self.i += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        return self.peek().is_op(*ops)

    def at_kw(self, *words: str) -> bool:
        return self.peek().is_kw(*words)

    def at_eof(self) -> bool:
        return self.peek().kind == EOF

    def expect_op(self, op: str) -> Token:
        tok = self.peek()
        if not tok.is_op(op):
            self.fail(f"expected {op!r}", tok)
        return self.advance()

    def expect_ident(self) -> Token:
        tok = self.peek()
        if tok.kind != IDENT:
            self.fail("expected identifier", tok)
        return self.advance()

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        if tok.kind == EOF:
            message = f"{message} (unexpected end of input)"
        else:
            message = f"{message}, found {tok.text!r}"
        raise ParseError(message, *line_col(self.text, tok.start))

    @property
    def here(self) -> int:
        return self.peek().start

    @property
    def prev_end(self) -> int:
        return self.toks[self.i - 1].end if self.i else 0

    def skip_balanced(self) -> None:
        """Advance past the bracket group opening at the current token."""
        close = self.match.get(self.i)
        if close is None:
            self.fail("expected bracket")
        self.i = close + 1

    # -- compilation unit ---------------------------------------------------

    def compilation_unit(self) -> n.CompilationUnit:
        members: list[n.Node] = []
        snippet = not self._looks_like_declarations()
        while not self.at_eof():
            members.append(self._snippet_item() if snippet else self._top_level_item())
        return n.CompilationUnit(start=0, end=len(self.text), members=members)

    def _looks_like_declarations(self) -> bool:
        j = self.i
        toks = self.toks
        while True:
            tok = toks[j]
            if tok.kind == EOF or tok.is_kw("package", "import", *_TYPE_DECL_WORDS):
                return True
            if tok.is_op(";"):
                return True
            if tok.kind == IDENT and tok.text == "record" and toks[j + 1].kind == IDENT:
                return True
            if tok.is_op("@"):
                if toks[j + 1].is_kw("interface"):
                    return True
                j += 2
                while toks[j].is_op(".") and toks[j + 1].kind == IDENT:
                    j += 2
                if toks[j].is_op("("):
                    j = self.match[j] + 1
                continue
            if tok.kind == KEYWORD and tok.text in MODIFIER_WORDS:
                j += 1
                continue
            return False

    def _top_level_item(self) -> n.Node:
        start = self.here
        if self.at_kw("package", "import"):
            is_package = self.advance().text == "package"
            static = False
            if self.at_kw("static"):
                self.advance()
                static = True
            name_start = self.here
            while not self.at_op(";"):
                if self.at_eof():
                    self.fail("expected ';'")
                self.advance()
            name = "".join(self.text[name_start:self.prev_end].split())
            self.expect_op(";")
            return n.Import(start=start, end=self.prev_end, name=name,
                            static=static, package=is_package)
        if self.at_op(";"):
            self.advance()
            return n.OpaqueStmt(start=start, end=self.prev_end)
        mods = self._modifiers()
        if self._at_type_decl():
            return self._class_decl(mods, start)
        self.fail("expected type declaration")

    def _snippet_item(self) -> n.Node:
        """Statement if possible, otherwise a class member."""
        save = self.i
        start = self.here
        mods = self._modifiers()
        if self._at_type_decl():
            return self._class_decl(mods, start)
        self.i = save
        try:
            return self.statement()
        except ParseError:
            self.i = save
        return self._member()

    # -- declarations -------------------------------------------------------

    def _modifiers(self) -> list[n.Modifier]:
        mods: list[n.Modifier] = []
        while True:
            tok = self.peek()
            if tok.is_op("@") and not self.peek(1).is_kw("interface"):
                start = tok.start
                self.advance()
                self.expect_ident()
                while self.at_op(".") and self.peek(1).kind == IDENT:
                    self.advance()
                    self.advance()
                if self.at_op("("):
                    self.skip_balanced()
                mods.append(n.Modifier(self.text[start:self.prev_end], start, self.prev_end))
            elif tok.kind == KEYWORD and tok.text in MODIFIER_WORDS:
                if tok.text == "default" and self.peek(1).is_op(":"):
                    return mods
                self.advance()
                mods.append(n.Modifier(tok.text, tok.start, tok.end))
            else:
                return mods

    def _at_type_decl(self) -> bool:
        tok = self.peek()
        if tok.is_kw(*_TYPE_DECL_WORDS):
            return True
        if tok.is_op("@") and self.peek(1).is_kw("interface"):
            return True
        return tok.kind == IDENT and tok.text == "record" and self.peek(1).kind == IDENT

    def _class_decl(self, mods: list[n.Modifier], start: int) -> n.ClassDecl:
        if self.at_op("@"):
            self.advance()
            keyword = "@interface"
        else:
            keyword = self.peek().text
        self.advance()
        name_tok = self.expect_ident()
        while not self.at_op("{"):
            if self.at_eof() or self.at_op(";", "}"):
                self.fail("expected class body")
            if self.at_op("(", "["):
                self.skip_balanced()
            else:
                self.advance()
        body_start = self.here
        self.expect_op("{")
        members: list[n.Node] = []
        if keyword == "enum":
            const_start = self.here
            while not self.at_op(";", "}"):
                if self.at_op("(", "{", "["):
                    self.skip_balanced()
                else:
                    self.advance()
            if self.at_op(";"):
                self.advance()
            if self.prev_end > const_start:
                members.append(n.OpaqueStmt(start=const_start, end=self.prev_end))
        while not self.at_op("}"):
            if self.at_eof():
                self.fail("expected '}'")
            members.append(self._member())
        self.expect_op("}")
        return n.ClassDecl(
            start=start, end=self.prev_end, name=name_tok.text, keyword=keyword,
            modifiers=mods, members=members, body_start=body_start,
            name_start=name_tok.start,
        )

    def _member(self) -> n.Node:
        start = self.here
        if self.at_op(";"):
            self.advance()
            return n.OpaqueStmt(start=start, end=self.prev_end)
        if self.at_op("{") or (self.at_kw("static") and self.peek(1).is_op("{")):
            if self.at_kw("static"):
                self.advance()
            self.skip_balanced()
            return n.OpaqueStmt(start=start, end=self.prev_end)
        mods = self._modifiers()
        if self._at_type_decl():
            return self._class_decl(mods, start)
        if self.at_op("<"):
            self._skip_type_args()
        if self.peek().kind == IDENT and self.peek(1).is_op("("):
            name_tok = self.advance()
            return self._method_rest(mods, start, None, name_tok)
        type_text = self._type()
        name_tok = self.expect_ident()
        if self.at_op("("):
            return self._method_rest(mods, start, type_text, name_tok)
        declarators = self._declarators(name_tok)
        self.expect_op(";")
        return n.FieldDecl(start=start, end=self.prev_end, type=type_text,
                           modifiers=mods, declarators=declarators)

    def _method_rest(self, mods, start, return_type, name_tok) -> n.MethodDecl:
        params = self._params()
        while self.at_op("["):
            self.skip_balanced()
        if self.at_kw("throws"):
            self.advance()
            while not self.at_op("{", ";"):
                if self.at_eof():
                    self.fail("expected method body")
                self.advance()
        if self.at_kw("default"):
            while not self.at_op(";"):
                if self.at_op("(", "{", "["):
                    self.skip_balanced()
                else:
                    self.advance()
        body = None
        if self.at_op("{"):
            body = self.block()
        else:
            self.expect_op(";")
        return n.MethodDecl(
            start=start, end=self.prev_end, name=name_tok.text, return_type=return_type,
            modifiers=mods, params=params, body=body, name_start=name_tok.start,
        )

    def _params(self) -> list[n.Param]:
        self.expect_op("(")
        params: list[n.Param] = []
        while not self.at_op(")"):
            start = self.here
            mods = self._modifiers()
            type_start = self.here
            self._type()
            if self.at_op("..."):
                self.advance()
            type_text = self.text[type_start:self.prev_end]
            if self.at_kw("this"):
                name = self.advance().text
            else:
                name = self.expect_ident().text
            while self.at_op("["):
                self.skip_balanced()
            params.append(n.Param(start=start, end=self.prev_end, type=type_text,
                                  name=name, modifiers=mods))
            if not self.at_op(")"):
                self.expect_op(",")
        self.expect_op(")")
        return params

    def _skip_type_args(self) -> None:
        self.expect_op("<")
        depth = 1
        while depth:
            tok = self.advance()
            if tok.kind == EOF:
                self.fail("unterminated type arguments", tok)
            if tok.is_op("<"):
                depth += 1
            elif tok.is_op(">"):
                depth -= 1
            elif tok.is_op("(", "{", ";"):
                self.fail("malformed type arguments", tok)

    def _type(self) -> str:
        start = self.here
        tok = self.peek()
        while tok.is_op("@"):
            self._modifiers()
            tok = self.peek()
        if tok.kind == KEYWORD and tok.text in PRIMITIVES:
            self.advance()
        elif tok.kind == IDENT:
            self.advance()
            if self.at_op("<"):
                self._skip_type_args()
            while self.at_op(".") and self.peek(1).kind == IDENT:
                self.advance()
                self.advance()
                if self.at_op("<"):
                    self._skip_type_args()
        else:
            self.fail("expected type", tok)
        while self.at_op("[") and self.peek(1).is_op("]"):
            self.advance()
            self.advance()
        return self.text[start:self.prev_end]

    def _declarators(self, first: Token) -> list[n.Declarator]:
        out: list[n.Declarator] = []
        name_tok = first
        while True:
            dims_start = self.here
            while self.at_op("[") and self.peek(1).is_op("]"):
                self.advance()
                self.advance()
            dims = self.text[dims_start:self.prev_end] if self.prev_end > dims_start else ""
            init = None
            if self.at_op("="):
                self.advance()
                init = self._var_init()
            out.append(n.Declarator(name_tok.text, name_tok.start, name_tok.end, init, dims))
            if not self.at_op(","):
                return out
            self.advance()
            name_tok = self.expect_ident()

    def _var_init(self) -> n.Node:
        if self.at_op("{"):
            start = self.here
            self.skip_balanced()
            return n.OpaqueExpr(start=start, end=self.prev_end)
        return self.expression()

    # -- statements ---------------------------------------------------------

    def block(self) -> n.Block:
        start = self.here
        self.expect_op("{")
        stmts: list[n.Node] = []
        while not self.at_op("}"):
            if self.at_eof():
                self.fail("expected '}'")
            stmts.append(self.statement())
        self.expect_op("}")
        return n.Block(start=start, end=self.prev_end, stmts=stmts)

    def statement(self) -> n.Node:
        tok = self.peek()
        start = tok.start
        if tok.is_op("{"):
            return self.block()
        if tok.is_op(";"):
            self.advance()
            return n.OpaqueStmt(start=start, end=self.prev_end)
        if tok.is_kw("if"):
            return self._if()
        if tok.is_kw("return"):
            self.advance()
            expr = None if self.at_op(";") else self.expression()
            self.expect_op(";")
            return n.ReturnStmt(start=start, end=self.prev_end, expr=expr)
        if tok.kind == KEYWORD and tok.text in _OPAQUE_STMT_WORDS:
            if not (tok.text == "synchronized" and not self.peek(1).is_op("(")):
                self._skip_opaque_statement()
                return n.OpaqueStmt(start=start, end=self.prev_end)
        if tok.kind == IDENT and self.peek(1).is_op(":") and not self.peek(2).is_op(":"):
            self.advance()
            self.advance()
            self.statement()
            return n.OpaqueStmt(start=start, end=self.prev_end)
        if tok.kind == IDENT and tok.text == "yield" and not self.peek(1).is_op("=", "(", "."):
            self._skip_to_semicolon()
            return n.OpaqueStmt(start=start, end=self.prev_end)
        if tok.kind == KEYWORD and tok.text in MODIFIER_WORDS - {"final"}:
            save = self.i
            self._modifiers()
            if self._at_type_decl():
                self._class_decl([], start)
                return n.OpaqueStmt(start=start, end=self.prev_end)
            self.i = save
            self.fail("modifier not allowed in statement")
        decl = self._try_local_var_decl()
        if decl is not None:
            return decl
        first = self.i
        expr = self.expression()
        self.expect_op(";")
        if self._holds_code_body(first, self.i):
            return n.OpaqueStmt(start=start, end=self.prev_end)
        return n.ExprStmt(start=start, end=self.prev_end, expr=expr)

    def _holds_code_body(self, lo: int, hi: int) -> bool:
        """True when tokens lo..hi contain a lambda or an anonymous class body."""
        toks = self.toks[lo:hi]
        return any(
            t.is_op("->") or (t.is_op("{") and k and toks[k - 1].is_op(")"))
            for k, t in enumerate(toks)
        )

    def _if(self) -> n.IfStmt:
        start = self.here
        self.advance()
        self.expect_op("(")
        cond = self.expression()
        self.expect_op(")")
        then = self.statement()
        else_ = None
        if self.at_kw("else"):
            self.advance()
            else_ = self.statement()
        return n.IfStmt(start=start, end=self.prev_end, cond=cond, then=then, else_=else_)

    def _skip_to_semicolon(self) -> None:
        while not self.at_op(";"):
            if self.at_eof() or self.at_op("}"):
                self.fail("expected ';'")
            if self.at_op("(", "[", "{"):
                self.skip_balanced()
            else:
                self.advance()
        self.advance()

    def _skip_opaque_statement(self) -> None:
        word = self.advance().text
        if word in ("for", "while"):
            self.skip_balanced()
            self.statement()
        elif word in ("switch", "synchronized"):
            self.skip_balanced()
            if not self.at_op("{"):
                self.fail("expected '{'")
            self.skip_balanced()
        elif word == "do":
            self.statement()
            if not self.at_kw("while"):
                self.fail("expected 'while'")
            self.advance()
            self.skip_balanced()
            self.expect_op(";")
        elif word == "try":
            if self.at_op("("):
                self.skip_balanced()
            self.block()
            while self.at_kw("catch"):
                self.advance()
                self.skip_balanced()
                self.block()
            if self.at_kw("finally"):
                self.advance()
                self.block()
        else:
            self._skip_to_semicolon()

    def _try_local_var_decl(self) -> n.Node | None:
        save = self.i
        start = self.here
        try:
            mods = self._modifiers()
            if self._at_type_decl():
                self._class_decl(mods, start)
                return n.OpaqueStmt(start=start, end=self.prev_end)
            type_text = self._type()
            if self.peek().kind != IDENT or not self.peek(1).is_op("=", ";", ",", "["):
                raise ParseError("not a declaration")
            name_tok = self.advance()
        except ParseError:
            self.i = save
            return None
        declarators = self._declarators(name_tok)
        self.expect_op(";")
        return n.LocalVarDecl(start=start, end=self.prev_end, type=type_text,
                              modifiers=mods, declarators=declarators)

    # -- expressions --------------------------------------------------------

    def expression(self) -> n.Node:
        start = self.here
        if self._at_lambda():
            return self._lambda()
        lhs = self._conditional()
        op = self._assign_op()
        if op is None:
            return lhs
        value = self.expression()
        return n.AssignExpr(start=start, end=self.prev_end, op=op, target=lhs, value=value)

    def _assign_op(self) -> str | None:
        tok = self.peek()
        if tok.kind == OP and tok.text in _ASSIGN_OPS:
            self.advance()
            return tok.text
        if tok.is_op(">"):
            # '>>=' and '>>>=' arrive as '>' runs followed by '>='
            j = 0
            while self.peek(j).is_op(">") and self.peek(j).end == self.peek(j + 1).start:
                j += 1
            if 1 <= j <= 2 and self.peek(j).is_op(">="):
                for _ in range(j + 1):
                    self.advance()
                return ">" * (j + 1) + "="
        return None

    def _conditional(self) -> n.Node:
        start = self.here
        cond = self._binary(1)
        if not self.at_op("?"):
            return cond
        self.advance()
        self.expression()
        self.expect_op(":")
        if self._at_lambda():
            self._lambda()
        else:
            self._conditional()
        return n.OpaqueExpr(start=start, end=self.prev_end)

    def _peek_binop(self) -> tuple[str, int] | None:
        tok = self.peek()
        if tok.kind == KEYWORD and tok.text == "instanceof":
            return "instanceof", 1
        if tok.kind != OP:
            return None
        if tok.text == ">":
            nxt, third = self.peek(1), self.peek(2)
            if nxt.is_op(">") and tok.end == nxt.start:
                if third.is_op(">") and nxt.end == third.start:
                    if self.peek(3).is_op(">=") and third.end == self.peek(3).start:
                        return None
                    return ">>>", 3
                if third.is_op(">=") and nxt.end == third.start:
                    return None
                return ">>", 2
            if nxt.is_op(">=") and tok.end == nxt.start:
                return None
            return ">", 1
        if tok.text in n.BINARY_PRECEDENCE:
            return tok.text, 1
        return None

    def _binary(self, min_prec: int) -> n.Node:
        start = self.here
        left = self._unary()
        while True:
            found = self._peek_binop()
            if found is None:
                return left
            op, width = found
            prec = 7 if op == "instanceof" else n.BINARY_PRECEDENCE[op]
            if prec < min_prec:
                return left
            for _ in range(width):
                self.advance()
            if op == "instanceof":
                if self.at_kw("final"):
                    self.advance()
                self._type()
                if self.peek().kind == IDENT:
                    self.advance()
                left = n.OpaqueExpr(start=start, end=self.prev_end)
                continue
            right = self._binary(prec + 1)
            left = n.BinaryExpr(start=start, end=self.prev_end, op=op, left=left, right=right)

    def _unary(self) -> n.Node:
        tok = self.peek()
        start = tok.start
        if tok.is_op("+", "-"):
            nxt = self.peek(1)
            if nxt.kind == NUMBER and nxt.start == tok.end:
                self.advance()
                self.advance()
                lit = n.Literal(start=start, end=self.prev_end, value=self.text[start:self.prev_end])
                return self._postfix(lit, start)
            self.advance()
            self._unary()
            return n.OpaqueExpr(start=start, end=self.prev_end)
        if tok.is_op("++", "--", "!", "~"):
            self.advance()
            self._unary()
            return n.OpaqueExpr(start=start, end=self.prev_end)
        if tok.is_op("("):
            if self._at_cast():
                self.skip_balanced()
                if self._at_lambda():
                    self._lambda()
                else:
                    self._unary()
                return n.OpaqueExpr(start=start, end=self.prev_end)
            self.advance()
            inner = self.expression()
            self.expect_op(")")
            inner.parens += 1
            inner.outer_start, inner.outer_end = start, self.prev_end
            return self._postfix(inner, start)
        return self._postfix(self._primary(), start)

    def _at_cast(self) -> bool:
        close = self.match[self.i]
        inner = self.toks[self.i + 1:close]
        if not inner:
            return False
        after = self.toks[close + 1]
        for t in inner:
            if t.kind == IDENT or (t.kind == KEYWORD and t.text in PRIMITIVES | {"extends", "super"}):
                continue
            if t.kind == OP and t.text in _TYPE_TOKENS:
                continue
            return False
        if len(inner) == 1 and inner[0].kind == KEYWORD:
            return True  # primitive cast: (int) -x is legal
        if inner[0].kind == KEYWORD and inner[0].text in PRIMITIVES and all(
            t.is_op("[", "]") for t in inner[1:]
        ):
            return True
        if after.kind in _CAST_FOLLOW:
            return True
        if after.kind == KEYWORD and after.text in _CAST_FOLLOW_KW:
            return True
        return after.is_op("(", "!", "~")

    def _at_lambda(self) -> bool:
        tok = self.peek()
        if tok.kind == IDENT and self.peek(1).is_op("->"):
            return True
        if tok.is_op("("):
            close = self.match.get(self.i)
            return close is not None and self.toks[close + 1].is_op("->")
        return False

    def _lambda(self) -> n.Node:
        start = self.here
        if self.at_op("("):
            self.skip_balanced()
        else:
            self.advance()
        self.expect_op("->")
        if self.at_op("{"):
            self.skip_balanced()
        else:
            self.expression()
        return n.OpaqueExpr(start=start, end=self.prev_end)

    def _postfix(self, node: n.Node, start: int) -> n.Node:
        while True:
            if self.at_op("."):
                nxt = self.peek(1)
                if nxt.kind == IDENT:
                    self.advance()
                    name_tok = self.advance()
                    if self.at_op("("):
                        args = self._args()
                        node = n.MethodInvocation(
                            start=start, end=self.prev_end, receiver=node, name=name_tok.text,
                            args=args, name_start=name_tok.start,
                        )
                    else:
                        node = n.FieldAccess(start=start, end=self.prev_end, scope=node,
                                             name=name_tok.text)
                elif nxt.is_op("<"):
                    self.advance()
                    ta_start = self.here
                    self._skip_type_args()
                    type_args = self.text[ta_start:self.prev_end]
                    name_tok = self.expect_ident()
                    args = self._args()
                    node = n.MethodInvocation(
                        start=start, end=self.prev_end, receiver=node, name=name_tok.text,
                        args=args, type_args=type_args, name_start=name_tok.start,
                    )
                elif nxt.is_kw("new"):
                    self.advance()
                    self._creator()
                    node = n.OpaqueExpr(start=start, end=self.prev_end)
                elif nxt.is_kw("this", "class", "super"):
                    self.advance()
                    word = self.advance().text
                    node = n.FieldAccess(start=start, end=self.prev_end, scope=node, name=word)
                else:
                    self.fail("expected member name", nxt)
            elif self.at_op("["):
                self.skip_balanced()
                node = n.OpaqueExpr(start=start, end=self.prev_end)
            elif self.at_op("::"):
                self.advance()
                if self.at_op("<"):
                    self._skip_type_args()
                tok = self.advance()
                if tok.kind != IDENT and not tok.is_kw("new"):
                    self.fail("expected method reference", tok)
                node = n.OpaqueExpr(start=start, end=self.prev_end)
            elif self.at_op("++", "--"):
                self.advance()
                node = n.OpaqueExpr(start=start, end=self.prev_end)
            else:
                return node

    def _primary(self) -> n.Node:
        tok = self.peek()
        start = tok.start
        if tok.kind in (NUMBER, STRING, CHAR) or tok.is_kw("true", "false", "null"):
            self.advance()
            return n.Literal(start=start, end=tok.end, value=tok.text)
        if tok.is_kw("this", "super"):
            self.advance()
            if self.at_op("("):
                args = self._args()
                return n.MethodInvocation(start=start, end=self.prev_end, receiver=None,
                                          name=tok.text, args=args, name_start=start)
            return n.Literal(start=start, end=tok.end, value=tok.text)
        if tok.is_kw("new"):
            return self._creator()
        if tok.kind == IDENT:
            self.advance()
            if self.at_op("("):
                args = self._args()
                return n.MethodInvocation(start=start, end=self.prev_end, receiver=None,
                                          name=tok.text, args=args, name_start=start)
            return n.NameExpr(start=start, end=tok.end, name=tok.text)
        if tok.kind == KEYWORD and tok.text in PRIMITIVES:
            self._type()
            self.expect_op(".")
            if not self.at_kw("class"):
                self.fail("expected 'class'")
            self.advance()
            return n.OpaqueExpr(start=start, end=self.prev_end)
        if tok.is_kw("switch"):
            self.advance()
            self.skip_balanced()
            self.skip_balanced()
            return n.OpaqueExpr(start=start, end=self.prev_end)
        self.fail("expected expression", tok)

    def _creator(self) -> n.Node:
        start = self.here
        self.advance()  # 'new'
        if self.at_op("<"):
            self._skip_type_args()
        type_start = self.here
        while self.at_op("@"):
            self._modifiers()
        tok = self.peek()
        if tok.kind == KEYWORD and tok.text in PRIMITIVES:
            self.advance()
        elif tok.kind == IDENT:
            self.advance()
            if self.at_op("<"):
                self._skip_type_args()
            while self.at_op(".") and self.peek(1).kind == IDENT:
                self.advance()
                self.advance()
                if self.at_op("<"):
                    self._skip_type_args()
        else:
            self.fail("expected type after 'new'", tok)
        type_text = self.text[type_start:self.prev_end]
        if self.at_op("["):
            while self.at_op("["):
                self.skip_balanced()
            if self.at_op("{"):
                self.skip_balanced()
            return n.OpaqueExpr(start=start, end=self.prev_end)
        args = self._args()
        if self.at_op("{"):
            self.skip_balanced()
            return n.OpaqueExpr(start=start, end=self.prev_end)
        return n.ObjectCreation(start=start, end=self.prev_end, type=type_text, args=args)

    def _args(self) -> list[n.Node]:
        self.expect_op("(")
        args: list[n.Node] = []
        while not self.at_op(")"):
            args.append(self.expression())
            if not self.at_op(")"):
                self.expect_op(",")
        self.expect_op(")")
        return args


def _bracket_table(tokens: list[Token]) -> dict[int, int]:
    table: dict[int, int] = {}
    stack: list[int] = []
    for idx, tok in enumerate(tokens):
        if tok.kind != OP:
            continue
        if tok.text in ("(", "[", "{"):
            stack.append(idx)
        elif tok.text in (")", "]", "}"):
            table[stack.pop()] = idx
    return table


@dataclass(frozen=True, eq=False)
class SourceUnit:
    """A parsed file: original text plus its span-annotated tree."""

    path: str
    text: str
    root: n.CompilationUnit

    @cached_property
    def spans(self) -> dict[n.Node, n.Span]:
        return {node: node.span for node in self.root.walk()}

    @cached_property
    def nodes(self) -> list[n.Node]:
        return list(self.root.walk())

    def owns(self, node: n.Node) -> bool:
        top = node
        for top in node.ancestors():
            pass
        return top is self.root or node is self.root

    def slice(self, node: n.Node) -> str:
        return self.text[node.start:node.end]


def parse(text: str, path: str = "<string>") -> SourceUnit:
    """Parse a Java file, or a bare snippet of statements and members."""
    root = Parser(text).compilation_unit()
    n.link(root)
    return SourceUnit(path, text, root)


def parse_expression(text: str) -> n.Node:
    """Parse a standalone expression; its offsets index into ``text``."""
    p = Parser(text)
    expr = p.expression()
    if not p.at_eof():
        p.fail("trailing input after expression")
    return n.link(expr)
