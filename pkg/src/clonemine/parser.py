"""Recursive-descent parser for a Java subset.

Handles class/interface/enum shells, fields, methods and constructors, and
method bodies built from declarations, assignments, calls, if/else, while,
for, for-each, do-while, switch, try/catch/finally, return, throw, break,
continue and the usual expression grammar. Statements the grammar does not
cover (lambdas, local classes, ``synchronized``, ``assert``...) are kept as
``opaque`` nodes holding their raw text.

Node shapes produced here (``value`` / ``children``):

    method_decl   name        / (block,)
    var_decl      type text   / declarator...
    declarator    var name    / (init,) or ()
    if            -           / (cond, then[, else])
    while         -           / (cond, body)
    do_while      -           / (body, cond)
    for           -           / (for_init, cond | empty, for_update, body)
    foreach       -           / (var_decl, iterable, body)
    switch        -           / (selector, case...)
    case          "default"?  / (case_labels, block)
    try           -           / ([resources,] block, catch..., [finally])
    catch         type text   / (identifier, block)
    call          name        / ([receiver,] arguments)
    field_access  name        / (object,)
    new           type text   / (arguments[, opaque body])
    new_array     "T[]..."    / (dim exprs...[, array_init])
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lexer import (
    IDENTIFIER,
    KEYWORD,
    LITERAL,
    PRIMITIVE_TYPES,
    LexError,
    Token,
    tokenize,
)
from .syntax import AstNode

ASSIGN_OPS = frozenset({"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<="})
MODIFIERS = frozenset(
    {
        "public", "protected", "private", "static", "final", "abstract", "native",
        "synchronized", "transient", "volatile", "strictfp", "default",
    }
)
# Binary precedence levels, loosest first. Shift is handled separately.
_BINARY_LEVELS = (
    ("||",),
    ("&&",),
    ("|",),
    ("^",),
    ("&",),
    ("==", "!="),
)
_ADDITIVE = ("+", "-")
_MULTIPLICATIVE = ("*", "/", "%")
_CAST_FOLLOWERS_CLS = (IDENTIFIER, LITERAL)
_CAST_FOLLOWERS = frozenset({"(", "!", "~", "this", "new", "super"})


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass
class ParsedMethod:
    name: str
    class_name: str
    params: list[tuple[str, str]]
    return_type: str
    node: AstNode
    is_constructor: bool = False


@dataclass
class ParsedUnit:
    methods: list[ParsedMethod] = field(default_factory=list)
    # class name -> {field name -> declared type}
    fields: dict[str, dict[str, str]] = field(default_factory=dict)


_EOF = Token("<eof>", "eof")


class Parser:
    def __init__(self, source: str):
        self.source = source
        try:
            self.tokens = tokenize(source)
        except LexError as exc:
            raise ParseError(str(exc), exc.offset) from exc
        self.pos = 0

    # -- token helpers -------------------------------------------------

    def peek(self, k: int = 0) -> Token:
        i = self.pos + k
        return self.tokens[i] if i < len(self.tokens) else _EOF

    def at(self, *texts: str) -> bool:
        return self.peek().text in texts and self.peek().cls != "eof"

    def next(self) -> Token:
        tok = self.peek()
        if tok.cls == "eof":
            raise ParseError("unexpected end of input", len(self.source))
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.text != text or tok.cls == "eof":
            raise self.error(f"expected {text!r}, found {tok.text!r}")
        self.pos += 1
        return tok

    def accept(self, text: str) -> Token | None:
        if self.at(text):
            return self.next()
        return None

    def expect_ident(self) -> Token:
        tok = self.peek()
        if tok.cls != IDENTIFIER:
            raise self.error(f"expected identifier, found {tok.text!r}")
        self.pos += 1
        return tok

    def error(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.start if tok.cls != "eof" else len(self.source))

    def _adjacent(self, k: int) -> bool:
        """True when token k+1 starts exactly where token k ends."""
        a, b = self.peek(k), self.peek(k + 1)
        return a.cls != "eof" and b.cls != "eof" and a.end == b.start

    def _start(self) -> int:
        tok = self.peek()
        return tok.start if tok.cls != "eof" else len(self.source)

    def _end(self) -> int:
        return self.tokens[self.pos - 1].end if self.pos else 0

    def skip_balanced(self, open_: str, close: str) -> None:
        self.expect(open_)
        depth = 1
        while depth:
            tok = self.next()
            if tok.text == open_:
                depth += 1
            elif tok.text == close:
                depth -= 1

    # -- compilation unit ----------------------------------------------

    def parse_unit(self) -> ParsedUnit:
        unit = ParsedUnit()
        if self.at("package"):
            self._skip_to_semicolon()
        while self.at("import"):
            self._skip_to_semicolon()
        while self.peek().cls != "eof":
            if self.accept(";"):
                continue
            self._member(unit, None)
        return unit

    def _skip_to_semicolon(self) -> None:
        while not self.at(";"):
            self.next()
        self.next()

    def _skip_annotation(self) -> None:
        self.expect("@")
        self.expect_ident()
        while self.at(".") and self.peek(1).cls == IDENTIFIER:
            self.pos += 2
        if self.at("("):
            self.skip_balanced("(", ")")

    def _modifiers(self) -> None:
        while True:
            if self.at("@") and self.peek(1).text != "interface":
                self._skip_annotation()
            elif self.peek().text in MODIFIERS and self.peek().cls == KEYWORD or self.at("default", "sealed", "non-sealed"):
                self.next()
            else:
                return

    def _type_params(self) -> None:
        if not self.at("<"):
            return
        depth = 0
        while True:
            tok = self.next()
            if tok.text == "<":
                depth += 1
            elif tok.text == ">":
                depth -= 1
                if depth == 0:
                    return

    def _member(self, unit: ParsedUnit, class_name: str | None) -> None:
        self._modifiers()
        if self.at("class", "interface", "enum") or (
            self.at("@") and self.peek(1).text == "interface"
        ) or (self.peek().text == "record" and self.peek(1).cls == IDENTIFIER and self.peek(2).text in ("(", "<")):
            self._type_decl(unit, class_name)
            return
        if class_name is not None and self.at("{"):
            # instance initializer
            self.skip_balanced("{", "}")
            return
        if class_name is not None and self.at("static") and self.peek(1).text == "{":
            self.next()
            self.skip_balanced("{", "}")
            return
        self._type_params()
        start = self._start()
        # constructor: Name (
        simple = class_name.rsplit(".", 1)[-1] if class_name else None
        if (
            self.peek().cls == IDENTIFIER
            and self.peek(1).text == "("
            and simple is not None
            and self.peek().text == simple
        ):
            name = self.next().text
            self._method_rest(unit, class_name, name, simple, start, is_constructor=True)
            return
        type_text = self.parse_type()
        name_tok = self.expect_ident()
        if self.at("("):
            self._method_rest(unit, class_name, name_tok.text, type_text, start)
            return
        # field declaration
        fields = unit.fields.setdefault(class_name or "", {})
        self.pos -= 1
        while True:
            fname = self.expect_ident().text
            dims = self._dims()
            fields.setdefault(fname, type_text + dims)
            if self.accept("="):
                self._skip_initializer()
            if not self.accept(","):
                break
        self.expect(";")

    def _skip_initializer(self) -> None:
        save = self.pos
        try:
            if self.at("{"):
                self._array_init()
            else:
                self.parse_expression()
            if self.at(",", ";"):
                return
        except ParseError:
            pass
        self.pos = save
        depth = 0
        while True:
            tok = self.peek()
            if tok.cls == "eof":
                raise self.error("unterminated field initializer")
            if depth == 0 and tok.text in (",", ";"):
                return
            if tok.text in "({[":
                depth += 1
            elif tok.text in ")}]":
                depth -= 1
                if depth < 0:
                    raise self.error("unbalanced initializer")
            self.next()

    def _type_decl(self, unit: ParsedUnit, outer: str | None) -> None:
        if self.at("@"):
            self.next()
            self.next()
            self.expect_ident()
            self.skip_balanced("{", "}")
            return
        keyword = self.next().text
        name = self.expect_ident().text
        qualified = f"{outer}.{name}" if outer else name
        unit.fields.setdefault(qualified, {})
        self._type_params()
        if keyword == "record" and self.at("("):
            self.skip_balanced("(", ")")
        while not self.at("{"):
            if self.peek().cls == "eof":
                raise self.error("expected class body")
            self.next()
        self.expect("{")
        if keyword == "enum":
            self._enum_constants()
        while not self.at("}"):
            if self.peek().cls == "eof":
                raise self.error("unterminated class body")
            if self.accept(";"):
                continue
            self._member(unit, qualified)
        self.expect("}")

    def _enum_constants(self) -> None:
        depth = 0
        while True:
            tok = self.peek()
            if tok.cls == "eof":
                raise self.error("unterminated enum body")
            if depth == 0 and tok.text == ";":
                self.next()
                return
            if depth == 0 and tok.text == "}":
                return
            if tok.text in "({":
                depth += 1
            elif tok.text in ")}":
                depth -= 1
            self.next()

    def _method_rest(self, unit, class_name, name, return_type, start, is_constructor=False):
        params = self._params()
        self._dims()
        if self.accept("throws"):
            self.parse_type()
            while self.accept(","):
                self.parse_type()
        if self.accept(";"):
            return  # abstract or interface method: no body to analyse
        body = self.parse_block()
        node = AstNode("method_decl", (body,), (start, body.span[1]), name)
        unit.methods.append(
            ParsedMethod(name, class_name or "", params, return_type, node, is_constructor)
        )

    def _params(self) -> list[tuple[str, str]]:
        self.expect("(")
        params: list[tuple[str, str]] = []
        while not self.at(")"):
            self._modifiers()
            ptype = self.parse_type()
            if self.accept("..."):
                ptype += "..."
            if self.at("this"):  # receiver parameter
                self.next()
            else:
                pname = self.expect_ident().text
                ptype += self._dims()
                params.append((pname, ptype))
            if not self.accept(","):
                break
        self.expect(")")
        return params

    # -- types -----------------------------------------------------------

    def _dims(self) -> str:
        out = ""
        while self.at("[") and self.peek(1).text == "]":
            self.pos += 2
            out += "[]"
        return out

    def parse_type(self) -> str:
        tok = self.peek()
        if tok.cls == KEYWORD and tok.text in PRIMITIVE_TYPES:
            self.next()
            return tok.text + self._dims()
        if tok.cls != IDENTIFIER:
            raise self.error(f"expected type, found {tok.text!r}")
        parts = [self.next().text + self._type_args()]
        while self.at(".") and self.peek(1).cls == IDENTIFIER:
            self.next()
            parts.append(self.next().text + self._type_args())
        return ".".join(parts) + self._dims()

    def _type_args(self) -> str:
        if not self.at("<"):
            return ""
        self.next()
        args = []
        if self.at(">"):  # diamond
            self.next()
            return "<>"
        while True:
            while self.at("@"):
                self._skip_annotation()
            if self.accept("?"):
                arg = "?"
                if self.at("extends", "super"):
                    bound = self.next().text
                    arg += f" {bound} {self.parse_type()}"
            else:
                arg = self.parse_type()
            args.append(arg)
            if not self.accept(","):
                break
        self.expect(">")
        return "<" + ", ".join(args) + ">"

    def _try_local_decl_head(self) -> str | None:
        """Parse ``[final] Type`` if a declaration follows; else rewind."""
        save = self.pos
        try:
            while self.at("final") or (self.at("@") and self.peek(1).cls == IDENTIFIER):
                if self.at("final"):
                    self.next()
                else:
                    self._skip_annotation()
            type_text = self.parse_type()
        except ParseError:
            self.pos = save
            return None
        if self.peek().cls == IDENTIFIER and self.peek(1).text in ("=", ";", ",", "[", ":"):
            return type_text
        self.pos = save
        return None

    # -- statements ------------------------------------------------------

    def parse_block(self) -> AstNode:
        start = self.expect("{").start
        stmts = []
        while not self.at("}"):
            if self.peek().cls == "eof":
                raise self.error("unterminated block")
            stmts.append(self.parse_statement())
        end = self.expect("}").end
        return AstNode("block", tuple(stmts), (start, end))

    def parse_statement(self) -> AstNode:
        save = self.pos
        try:
            return self._statement()
        except ParseError:
            self.pos = save
            return self._opaque_statement()

    def _opaque_statement(self) -> AstNode:
        """Consume one statement the grammar does not model, verbatim."""
        start = self._start()
        depth = 0
        consumed = False
        while True:
            tok = self.peek()
            if tok.cls == "eof":
                raise self.error("unterminated statement")
            if tok.text in ("(", "[", "{"):
                depth += 1
            elif tok.text in (")", "]", "}"):
                if depth == 0:
                    if not consumed:
                        raise self.error(f"unexpected {tok.text!r}")
                    break
                depth -= 1
                if depth == 0 and tok.text == "}":
                    self.next()
                    if self.at("else", "catch", "finally"):
                        continue
                    self.accept(";")
                    break
            elif tok.text == ";" and depth == 0:
                self.next()
                break
            self.next()
            consumed = True
        end = self._end()
        return AstNode("opaque", (), (start, end), self.source[start:end])

    def _statement(self) -> AstNode:
        tok = self.peek()
        start = self._start()
        text = tok.text
        if text == "{" and tok.cls != LITERAL:
            return self.parse_block()
        if text == ";":
            self.next()
            return AstNode("empty", (), (start, self._end()))
        if tok.cls == KEYWORD:
            handler = {
                "if": self._if,
                "while": self._while,
                "do": self._do,
                "for": self._for,
                "switch": self._switch,
                "try": self._try,
                "return": self._return,
                "throw": self._throw,
                "break": self._jump,
                "continue": self._jump,
            }.get(text)
            if handler is not None:
                return handler()
            if text in ("synchronized", "assert", "class", "interface", "enum", "abstract", "static"):
                raise self.error(f"unsupported statement {text!r}")
        if tok.cls == IDENTIFIER and self.peek(1).text == ":" and self.peek(2).text != ":":
            # labelled statement: the label is dropped
            self.pos += 2
            return self.parse_statement()
        if tok.cls == IDENTIFIER and tok.text in ("yield", "record") and self.peek(1).cls == IDENTIFIER:
            raise self.error(f"unsupported statement {text!r}")
        type_text = self._try_local_decl_head()
        if type_text is not None:
            decl = self._declarators(type_text, start)
            self.expect(";")
            return AstNode("var_decl", decl.children, (start, self._end()), type_text)
        expr = self.parse_expression()
        self.expect(";")
        return AstNode("expr_stmt", (expr,), (start, self._end()))

    def _declarators(self, type_text: str, start: int) -> AstNode:
        decls = []
        while True:
            name_tok = self.expect_ident()
            self._dims()
            kids: tuple[AstNode, ...] = ()
            if self.accept("="):
                if self.at("{"):
                    kids = (self._array_init(),)
                else:
                    kids = (self.parse_expression(),)
            decls.append(AstNode("declarator", kids, (name_tok.start, self._end()), name_tok.text))
            if not self.accept(","):
                break
        return AstNode("var_decl", tuple(decls), (start, self._end()), type_text)

    def _paren_expr(self) -> AstNode:
        self.expect("(")
        expr = self.parse_expression()
        self.expect(")")
        return expr

    def _if(self) -> AstNode:
        start = self.next().start
        cond = self._paren_expr()
        then = self.parse_statement()
        kids = [cond, then]
        if self.accept("else"):
            kids.append(self.parse_statement())
        return AstNode("if", tuple(kids), (start, self._end()))

    def _while(self) -> AstNode:
        start = self.next().start
        cond = self._paren_expr()
        body = self.parse_statement()
        return AstNode("while", (cond, body), (start, self._end()))

    def _do(self) -> AstNode:
        start = self.next().start
        body = self.parse_statement()
        self.expect("while")
        cond = self._paren_expr()
        self.expect(";")
        return AstNode("do_while", (body, cond), (start, self._end()))

    def _for(self) -> AstNode:
        start = self.next().start
        self.expect("(")
        head_start = self._start()
        type_text = self._try_local_decl_head()
        if type_text is not None and self.peek(1).text == ":":
            name_tok = self.expect_ident()
            self.expect(":")
            var = AstNode(
                "var_decl",
                (AstNode("declarator", (), (name_tok.start, name_tok.end), name_tok.text),),
                (head_start, name_tok.end),
                type_text,
            )
            iterable = self.parse_expression()
            self.expect(")")
            body = self.parse_statement()
            return AstNode("foreach", (var, iterable, body), (start, self._end()))
        init: list[AstNode] = []
        if type_text is not None:
            init.append(self._declarators(type_text, head_start))
        else:
            while not self.at(";"):
                e_start = self._start()
                expr = self.parse_expression()
                init.append(AstNode("expr_stmt", (expr,), (e_start, self._end())))
                if not self.accept(","):
                    break
        init_span = (head_start, self._end()) if init else (head_start, head_start)
        self.expect(";")
        if self.at(";"):
            cond = AstNode("empty", (), (self._start(), self._start()))
        else:
            cond = self.parse_expression()
        self.expect(";")
        upd_start = self._start()
        updates = []
        while not self.at(")"):
            updates.append(self.parse_expression())
            if not self.accept(","):
                break
        upd_span = (upd_start, self._end()) if updates else (upd_start, upd_start)
        self.expect(")")
        body = self.parse_statement()
        return AstNode(
            "for",
            (
                AstNode("for_init", tuple(init), init_span),
                cond,
                AstNode("for_update", tuple(updates), upd_span),
                body,
            ),
            (start, self._end()),
        )

    def _switch(self) -> AstNode:
        start = self.next().start
        selector = self._paren_expr()
        self.expect("{")
        cases = []
        while not self.at("}"):
            c_start = self._start()
            labels = []
            is_default = False
            if self.accept("default"):
                is_default = True
            else:
                self.expect("case")
                while True:
                    labels.append(self._ternary())
                    if not self.accept(","):
                        break
            if self.at("->"):
                raise self.error("arrow-form switch is not supported")
            self.expect(":")
            label_end = self._end()
            body_start = self._start()
            stmts = []
            while not self.at("case", "default", "}"):
                if self.peek().cls == "eof":
                    raise self.error("unterminated switch")
                stmts.append(self.parse_statement())
            body_span = (body_start, self._end()) if stmts else (label_end, label_end)
            cases.append(
                AstNode(
                    "case",
                    (
                        AstNode("case_labels", tuple(labels), (c_start, label_end)),
                        AstNode("block", tuple(stmts), body_span),
                    ),
                    (c_start, self._end()),
                    "default" if is_default else None,
                )
            )
        self.expect("}")
        return AstNode("switch", (selector, *cases), (start, self._end()))

    def _try(self) -> AstNode:
        start = self.next().start
        kids = []
        if self.at("("):
            r_start = self.next().start
            resources = []
            while not self.at(")"):
                d_start = self._start()
                type_text = self._try_local_decl_head()
                if type_text is None:
                    expr = self.parse_expression()
                    resources.append(AstNode("expr_stmt", (expr,), (d_start, self._end())))
                else:
                    resources.append(self._declarators(type_text, d_start))
                if not self.accept(";"):
                    break
            self.expect(")")
            kids.append(AstNode("resources", tuple(resources), (r_start, self._end())))
        kids.append(self.parse_block())
        while self.at("catch"):
            c_start = self.next().start
            self.expect("(")
            self._modifiers()
            types = [self.parse_type()]
            while self.accept("|"):
                types.append(self.parse_type())
            name_tok = self.expect_ident()
            self.expect(")")
            block = self.parse_block()
            param = AstNode("identifier", (), (name_tok.start, name_tok.end), name_tok.text)
            kids.append(AstNode("catch", (param, block), (c_start, self._end()), " | ".join(types)))
        if self.at("finally"):
            f_start = self.next().start
            block = self.parse_block()
            kids.append(AstNode("finally", (block,), (f_start, self._end())))
        if kids[0].kind != "resources" and len(kids) == 1:
            raise self.error("try without catch or finally")
        return AstNode("try", tuple(kids), (start, self._end()))

    def _return(self) -> AstNode:
        start = self.next().start
        kids = () if self.at(";") else (self.parse_expression(),)
        self.expect(";")
        return AstNode("return", kids, (start, self._end()))

    def _throw(self) -> AstNode:
        start = self.next().start
        expr = self.parse_expression()
        self.expect(";")
        return AstNode("throw", (expr,), (start, self._end()))

    def _jump(self) -> AstNode:
        tok = self.next()
        label = self.next().text if self.peek().cls == IDENTIFIER else None
        self.expect(";")
        return AstNode(tok.text, (), (tok.start, self._end()), label)

    # -- expressions -----------------------------------------------------

    def parse_expression(self) -> AstNode:
        start = self._start()
        left = self._ternary()
        op = self._assign_op()
        if op is not None:
            value = self.parse_expression()
            return AstNode("assignment", (left, value), (start, self._end()), op)
        return left

    def _assign_op(self) -> str | None:
        tok = self.peek()
        if tok.cls == "eof":
            return None
        if tok.text in ASSIGN_OPS:
            self.next()
            return tok.text
        # >>= and >>>= arrive as '>' '>=' and '>' '>' '>='
        if tok.text == ">" and self._adjacent(0):
            if self.peek(1).text == ">=":
                self.pos += 2
                return ">>="
            if self.peek(1).text == ">" and self._adjacent(1) and self.peek(2).text == ">=":
                self.pos += 3
                return ">>>="
        return None

    def _ternary(self) -> AstNode:
        start = self._start()
        cond = self._binary(0)
        if self.accept("?"):
            a = self._ternary_branch()
            self.expect(":")
            b = self._ternary_branch()
            return AstNode("conditional", (cond, a, b), (start, self._end()))
        return cond

    def _ternary_branch(self) -> AstNode:
        start = self._start()
        node = self._ternary()
        op = self._assign_op()
        if op is not None:
            value = self.parse_expression()
            return AstNode("assignment", (node, value), (start, self._end()), op)
        return node

    def _binary(self, level: int) -> AstNode:
        if level == len(_BINARY_LEVELS):
            return self._relational()
        start = self._start()
        left = self._binary(level + 1)
        ops = _BINARY_LEVELS[level]
        while self.peek().text in ops and self.peek().cls == "operator":
            op = self.next().text
            right = self._binary(level + 1)
            left = AstNode("binary_expr", (left, right), (start, self._end()), op)
        return left

    def _relational(self) -> AstNode:
        start = self._start()
        left = self._shift()
        while True:
            tok = self.peek()
            if tok.text == "instanceof" and tok.cls == KEYWORD:
                self.next()
                self.accept("final")
                type_text = self.parse_type()
                if self.peek().cls == IDENTIFIER:
                    raise self.error("pattern matching instanceof is not supported")
                left = AstNode("instanceof", (left,), (start, self._end()), type_text)
            elif tok.cls == "operator" and tok.text in ("<", "<=", ">=") or (
                tok.text == ">" and tok.cls == "operator" and not self._is_shift()
            ):
                op = self.next().text
                right = self._shift()
                left = AstNode("binary_expr", (left, right), (start, self._end()), op)
            else:
                return left

    def _is_shift(self) -> bool:
        return (
            self.peek().text == ">"
            and self._adjacent(0)
            and self.peek(1).text in (">", ">=")
        )

    def _shift(self) -> AstNode:
        start = self._start()
        left = self._additive()
        while True:
            if self.at("<<"):
                self.next()
                op = "<<"
            elif self._is_shift() and self.peek(1).text == ">":
                if self._adjacent(1) and self.peek(2).text == ">":
                    if self._adjacent(2) and self.peek(3).text == ">=":
                        return left  # >>>= handled by assignment
                    self.pos += 3
                    op = ">>>"
                elif self._adjacent(1) and self.peek(2).text == ">=":
                    return left
                else:
                    self.pos += 2
                    op = ">>"
            else:
                return left
            right = self._additive()
            left = AstNode("binary_expr", (left, right), (start, self._end()), op)

    def _additive(self) -> AstNode:
        start = self._start()
        left = self._multiplicative()
        while self.peek().text in _ADDITIVE and self.peek().cls == "operator":
            op = self.next().text
            right = self._multiplicative()
            left = AstNode("binary_expr", (left, right), (start, self._end()), op)
        return left

    def _multiplicative(self) -> AstNode:
        start = self._start()
        left = self._unary()
        while self.peek().text in _MULTIPLICATIVE and self.peek().cls == "operator":
            op = self.next().text
            right = self._unary()
            left = AstNode("binary_expr", (left, right), (start, self._end()), op)
        return left

    def _unary(self) -> AstNode:
        tok = self.peek()
        start = self._start()
        if tok.cls == "operator" and tok.text in ("!", "~", "-", "+", "++", "--"):
            self.next()
            operand = self._unary()
            return AstNode("unary_expr", (operand,), (start, self._end()), tok.text)
        if tok.text == "(":
            cast_type = self._try_cast()
            if cast_type is not None:
                operand = self._unary()
                return AstNode("cast", (operand,), (start, self._end()), cast_type)
        return self._postfix()

    def _try_cast(self) -> str | None:
        save = self.pos
        self.next()
        nxt = self.peek()
        try:
            if nxt.cls == KEYWORD and nxt.text in PRIMITIVE_TYPES:
                type_text = self.parse_type()
                self.expect(")")
                return type_text
            if nxt.cls != IDENTIFIER:
                raise self.error("not a cast")
            type_text = self.parse_type()
            while self.accept("&"):
                type_text += " & " + self.parse_type()
            self.expect(")")
        except ParseError:
            self.pos = save
            return None
        follow = self.peek()
        if follow.cls in _CAST_FOLLOWERS_CLS or (
            follow.text in _CAST_FOLLOWERS and follow.cls != LITERAL
        ):
            if follow.text == "->":
                self.pos = save
                return None
            return type_text
        self.pos = save
        return None

    def _postfix(self) -> AstNode:
        start = self._start()
        node = self._primary()
        while True:
            if self.at("."):
                self.next()
                if self.at("<"):
                    self._type_args()
                if self.at("new"):
                    raise self.error("qualified inner class creation is not supported")
                if self.at("class"):
                    self.next()
                    node = AstNode("class_literal", (), (start, self._end()), _expr_as_type(node))
                    continue
                name_tok = self.next()
                if name_tok.cls not in (IDENTIFIER, KEYWORD):
                    raise self.error("expected member name")
                if self.at("("):
                    args = self._arguments()
                    node = AstNode("call", (node, args), (start, self._end()), name_tok.text)
                else:
                    node = AstNode("field_access", (node,), (start, self._end()), name_tok.text)
            elif self.at("["):
                self.next()
                idx = self.parse_expression()
                self.expect("]")
                node = AstNode("index", (node, idx), (start, self._end()))
            elif self.at("++", "--"):
                op = self.next().text
                node = AstNode("postfix_expr", (node,), (start, self._end()), op)
            elif self.at("::", "->"):
                raise self.error("lambdas and method references are not supported")
            else:
                return node

    def _arguments(self) -> AstNode:
        start = self.expect("(").start
        args = []
        while not self.at(")"):
            args.append(self.parse_expression())
            if not self.accept(","):
                break
        self.expect(")")
        return AstNode("arguments", tuple(args), (start, self._end()))

    def _primary(self) -> AstNode:
        tok = self.peek()
        start = self._start()
        if tok.cls == LITERAL:
            self.next()
            return AstNode("literal", (), (tok.start, tok.end), tok.text)
        if tok.cls == IDENTIFIER:
            self.next()
            if self.at("("):
                args = self._arguments()
                return AstNode("call", (args,), (start, self._end()), tok.text)
            if self.at("->"):
                raise self.error("lambdas are not supported")
            return AstNode("identifier", (), (tok.start, tok.end), tok.text)
        if tok.text in ("this", "super") and tok.cls == KEYWORD:
            self.next()
            if self.at("("):
                args = self._arguments()
                return AstNode("call", (args,), (start, self._end()), tok.text)
            return AstNode("this", (), (tok.start, tok.end), tok.text)
        if tok.text == "(":
            self.next()
            inner = self.parse_expression()
            self.expect(")")
            if self.at("->"):
                raise self.error("lambdas are not supported")
            return AstNode("paren", (inner,), (start, self._end()))
        if tok.text == "new" and tok.cls == KEYWORD:
            return self._new()
        if tok.cls == KEYWORD and tok.text in PRIMITIVE_TYPES:
            type_text = self.parse_type()
            self.expect(".")
            self.expect("class")
            return AstNode("class_literal", (), (start, self._end()), type_text)
        raise self.error(f"unexpected token {tok.text!r}")

    def _new(self) -> AstNode:
        start = self.next().start
        while self.at("@"):
            self._skip_annotation()
        tok = self.peek()
        if tok.cls == KEYWORD and tok.text in PRIMITIVE_TYPES:
            self.next()
            base = tok.text
        else:
            base = self.parse_type()
        if self.at("["):
            dims = []
            count = 0
            while self.at("["):
                self.next()
                if self.at("]"):
                    self.next()
                else:
                    dims.append(self.parse_expression())
                    self.expect("]")
                count += 1
            kids = list(dims)
            if self.at("{"):
                kids.append(self._array_init())
            return AstNode("new_array", tuple(kids), (start, self._end()), base + "[]" * count)
        if base.endswith("[]"):
            kids = (self._array_init(),)
            return AstNode("new_array", kids, (start, self._end()), base)
        args = self._arguments()
        kids = [args]
        if self.at("{"):
            b_start = self._start()
            self.skip_balanced("{", "}")
            b_end = self._end()
            kids.append(AstNode("opaque", (), (b_start, b_end), self.source[b_start:b_end]))
        return AstNode("new", tuple(kids), (start, self._end()), base)

    def _array_init(self) -> AstNode:
        start = self.expect("{").start
        elems = []
        while not self.at("}"):
            elems.append(self._array_init() if self.at("{") else self.parse_expression())
            if not self.accept(","):
                break
        self.expect("}")
        return AstNode("array_init", tuple(elems), (start, self._end()))


def _expr_as_type(node: AstNode) -> str:
    if node.kind == "identifier":
        return node.value
    if node.kind == "field_access":
        return f"{_expr_as_type(node.children[0])}.{node.value}"
    raise ParseError("invalid class literal", node.span[0])


def parse_unit(source: str) -> ParsedUnit:
    """Parse a whole source file. Raises ParseError on a top-level error."""
    return Parser(source).parse_unit()


def parse_expression(source: str) -> AstNode:
    parser = Parser(source)
    expr = parser.parse_expression()
    if parser.peek().cls != "eof":
        raise parser.error("trailing input after expression")
    return expr


def parse_statements(source: str) -> list[AstNode]:
    """Parse a sequence of statements (no surrounding braces)."""
    parser = Parser(source)
    out = []
    while parser.peek().cls != "eof":
        if parser.at("}"):
            raise parser.error("unmatched '}'")
        out.append(parser.parse_statement())
    return out
