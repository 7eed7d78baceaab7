"""Canonical text rendering of AST nodes.

Expressions render with single spaces around binary operators and no space
inside brackets; parentheses are inserted only where precedence requires.
Statements render as compact Java source.
"""

from __future__ import annotations

import re

from .syntax import AstNode

_BINARY_PREC = {
    "||": 3, "&&": 4, "|": 5, "^": 6, "&": 7, "==": 8, "!=": 8,
    "<": 9, ">": 9, "<=": 9, ">=": 9,
    "<<": 10, ">>": 10, ">>>": 10,
    "+": 11, "-": 11, "*": 12, "/": 12, "%": 12,
}
_UNARY_PREC = 13
_POSTFIX_PREC = 14
_PRIMARY_PREC = 15

_WS = re.compile(r"\s+")


def precedence(node: AstNode) -> int:
    kind = node.kind
    if kind == "assignment":
        return 1
    if kind == "conditional":
        return 2
    if kind == "binary_expr":
        return _BINARY_PREC[node.value]
    if kind == "instanceof":
        return 9
    if kind in ("unary_expr", "cast"):
        return _UNARY_PREC
    if kind == "postfix_expr":
        return _POSTFIX_PREC
    return _PRIMARY_PREC


def _wrap(node: AstNode, min_prec: int) -> str:
    text = expr_text(node)
    return f"({text})" if precedence(node) < min_prec else text


def expr_text(node: AstNode) -> str:
    kind = node.kind
    kids = node.children
    if kind in ("literal", "identifier", "this"):
        return node.value
    if kind == "paren":
        return f"({expr_text(kids[0])})"
    if kind == "binary_expr":
        prec = _BINARY_PREC[node.value]
        return f"{_wrap(kids[0], prec)} {node.value} {_wrap(kids[1], prec + 1)}"
    if kind == "unary_expr":
        operand = _wrap(kids[0], _UNARY_PREC)
        if node.value in ("+", "-", "++", "--") and operand[:1] in ("+", "-"):
            operand = f"({operand})"
        return f"{node.value}{operand}"
    if kind == "postfix_expr":
        return f"{_wrap(kids[0], _POSTFIX_PREC)}{node.value}"
    if kind == "cast":
        return f"({node.value}) {_wrap(kids[0], _UNARY_PREC)}"
    if kind == "instanceof":
        return f"{_wrap(kids[0], 9)} instanceof {node.value}"
    if kind == "conditional":
        return f"{_wrap(kids[0], 3)} ? {_wrap(kids[1], 2)} : {_wrap(kids[2], 2)}"
    if kind == "assignment":
        return f"{_wrap(kids[0], 2)} {node.value} {expr_text(kids[1])}"
    if kind == "arguments":
        return "(" + ", ".join(expr_text(a) for a in kids) + ")"
    if kind == "call":
        args = expr_text(kids[-1])
        if len(kids) == 2:
            return f"{_wrap(kids[0], _POSTFIX_PREC)}.{node.value}{args}"
        return f"{node.value}{args}"
    if kind == "field_access":
        return f"{_wrap(kids[0], _POSTFIX_PREC)}.{node.value}"
    if kind == "index":
        return f"{_wrap(kids[0], _POSTFIX_PREC)}[{expr_text(kids[1])}]"
    if kind == "new":
        text = f"new {node.value}{expr_text(kids[0])}"
        if len(kids) > 1:
            text += " " + normalize_space(kids[1].value)
        return text
    if kind == "new_array":
        return _new_array_text(node)
    if kind == "array_init":
        return "{" + ", ".join(expr_text(e) for e in kids) + "}"
    if kind == "class_literal":
        return f"{node.value}.class"
    if kind == "opaque":
        return normalize_space(node.value)
    raise ValueError(f"not an expression node: {kind}")


def _new_array_text(node: AstNode) -> str:
    value = node.value
    base = value[: value.index("[")] if "[" in value else value
    ndims = value.count("[]")
    kids = list(node.children)
    init = kids.pop() if kids and kids[-1].kind == "array_init" else None
    brackets = "".join(f"[{expr_text(d)}]" for d in kids) + "[]" * (ndims - len(kids))
    text = f"new {base}{brackets}"
    if init is not None:
        text += " " + expr_text(init)
    return text


def normalize_space(text: str) -> str:
    return _WS.sub(" ", text).strip()


def declarators_text(node: AstNode) -> str:
    parts = []
    for d in node.children:
        if d.children:
            parts.append(f"{d.value} = {expr_text(d.children[0])}")
        else:
            parts.append(d.value)
    return f"{node.value} " + ", ".join(parts)


def unparse(node: AstNode) -> str:
    """Render a statement (or expression) as Java source."""
    kind = node.kind
    kids = node.children
    if kind == "block":
        if not kids:
            return "{}"
        return "{ " + " ".join(unparse(s) for s in kids) + " }"
    if kind == "var_decl":
        return declarators_text(node) + ";"
    if kind == "expr_stmt":
        return expr_text(kids[0]) + ";"
    if kind == "if":
        text = f"if ({expr_text(kids[0])}) {unparse(kids[1])}"
        if len(kids) == 3:
            text += f" else {unparse(kids[2])}"
        return text
    if kind == "while":
        return f"while ({expr_text(kids[0])}) {unparse(kids[1])}"
    if kind == "do_while":
        return f"do {unparse(kids[0])} while ({expr_text(kids[1])});"
    if kind == "for":
        init, cond, update, body = kids
        init_text = ", ".join(
            declarators_text(s) if s.kind == "var_decl" else expr_text(s.children[0])
            for s in init.children
        )
        cond_text = "" if cond.kind == "empty" else expr_text(cond)
        upd_text = ", ".join(expr_text(e) for e in update.children)
        return f"for ({init_text}; {cond_text}; {upd_text}) {unparse(body)}"
    if kind == "foreach":
        var, iterable, body = kids
        return f"for ({declarators_text(var)} : {expr_text(iterable)}) {unparse(body)}"
    if kind == "switch":
        parts = [f"switch ({expr_text(kids[0])}) {{"]
        for case in kids[1:]:
            labels, block = case.children
            if case.value == "default":
                parts.append("default:")
            else:
                parts.append("case " + ", ".join(expr_text(l) for l in labels.children) + ":")
            parts.extend(unparse(s) for s in block.children)
        parts.append("}")
        return " ".join(parts)
    if kind == "try":
        parts = ["try"]
        for child in kids:
            if child.kind == "resources":
                res = "; ".join(
                    declarators_text(s) if s.kind == "var_decl" else expr_text(s.children[0])
                    for s in child.children
                )
                parts.append(f"({res})")
            elif child.kind == "block":
                parts.append(unparse(child))
            elif child.kind == "catch":
                parts.append(f"catch ({child.value} {child.children[0].value}) {unparse(child.children[1])}")
            elif child.kind == "finally":
                parts.append(f"finally {unparse(child.children[0])}")
        return " ".join(parts)
    if kind == "return":
        return f"return {expr_text(kids[0])};" if kids else "return;"
    if kind == "throw":
        return f"throw {expr_text(kids[0])};"
    if kind in ("break", "continue"):
        return f"{kind} {node.value};" if node.value else f"{kind};"
    if kind == "empty":
        return ";"
    if kind == "opaque":
        return normalize_space(node.value)
    return expr_text(node)
