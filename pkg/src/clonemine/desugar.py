"""Syntax-level normalization: every loop becomes ``while``, every switch
becomes an ``if``/``else if``/``else`` chain.

    for (init; cond; inc) body   ->  init; while (cond) { body; inc; }
    do body while (cond);        ->  while (true) { body; if (!(cond)) break; }
    for (T x : xs) body          ->  while (xs.hasNext()) { T x = xs.next(); body }
    switch (e) { case v: s; break; default: d; }
                                 ->  if (e == v) { s; } else { d; }

``continue`` statements that would skip the moved increment (``for``) or the
moved condition check (``do``) get those statements copied in front of them.
A switch whose case labels are not constants, or whose cases break out from
a nested position, is kept as a single ``opaque`` node.
"""

from __future__ import annotations

from .render import unparse
from .syntax import AstNode

_TERMINATORS = ("break", "continue", "return", "throw")


def normalize_syntax(stmts, diagnostics: list[str] | None = None) -> list[AstNode]:
    """Desugar a statement list; nested statement lists are rewritten too."""
    out: list[AstNode] = []
    for stmt in stmts:
        out.extend(_desugar(stmt, diagnostics))
    return out


def _block(stmts, span) -> AstNode:
    return AstNode("block", tuple(stmts), span)


def _as_one(stmts: list[AstNode], span) -> AstNode:
    return stmts[0] if len(stmts) == 1 else _block(stmts, span)


def _true(span) -> AstNode:
    return AstNode("literal", (), (span[0], span[0]), "true")


def _desugar(node: AstNode, diags) -> list[AstNode]:
    kind = node.kind
    kids = node.children
    span = node.span
    if kind == "block":
        return [node.with_children(normalize_syntax(kids, diags))]
    if kind == "if":
        new = [kids[0], _as_one(_desugar(kids[1], diags), kids[1].span)]
        if len(kids) == 3:
            new.append(_as_one(_desugar(kids[2], diags), kids[2].span))
        return [node.with_children(new)]
    if kind == "while":
        body = _as_one(_desugar(kids[1], diags), kids[1].span)
        return [node.with_children((kids[0], body))]
    if kind == "for":
        return _desugar_for(node, diags)
    if kind == "do_while":
        return _desugar_do(node, diags)
    if kind == "foreach":
        return _desugar_foreach(node, diags)
    if kind == "switch":
        return _desugar_switch(node, diags)
    if kind == "try":
        new = []
        for child in kids:
            if child.kind == "block":
                new.append(_desugar(child, diags)[0])
            elif child.kind == "catch":
                new.append(child.with_children((child.children[0], _desugar(child.children[1], diags)[0])))
            elif child.kind == "finally":
                new.append(child.with_children((_desugar(child.children[0], diags)[0],)))
            else:
                new.append(child)
        return [node.with_children(new)]
    if kind == "empty":
        return []
    return [node]


def _body_list(node: AstNode, diags) -> list[AstNode]:
    out = _desugar(node, diags)
    if len(out) == 1 and out[0].kind == "block":
        return list(out[0].children)
    return out


def _rewrite_continue(stmts, before_continue: list[AstNode]) -> list[AstNode]:
    """Prefix each loop-level unlabeled ``continue`` with ``before_continue``."""
    if not before_continue:
        return list(stmts)
    return [_rewrite_continue_node(s, before_continue) for s in stmts]


def _rewrite_continue_node(node: AstNode, before: list[AstNode]) -> AstNode:
    kind = node.kind
    if kind == "continue" and node.value is None:
        return _block([*before, node], node.span)
    if kind == "while" or kind == "opaque":
        return node
    if kind in ("block", "if", "try", "catch", "finally"):
        return node.with_children(
            _rewrite_continue_node(c, before) if c.kind not in _EXPR_SLOTS else c
            for c in node.children
        )
    return node


# expression kinds never contain statements; skip them when rewriting
_EXPR_SLOTS = frozenset(
    {
        "assignment", "conditional", "binary_expr", "unary_expr", "postfix_expr",
        "instanceof", "cast", "call", "field_access", "index", "new", "new_array",
        "literal", "identifier", "this", "class_literal", "paren", "resources",
    }
)


def _desugar_for(node: AstNode, diags) -> list[AstNode]:
    init, cond, update, body = node.children
    span = node.span
    init_stmts = normalize_syntax(init.children, diags)
    updates = [AstNode("expr_stmt", (e,), e.span) for e in update.children]
    if cond.kind == "empty":
        cond = _true(span)
    body_stmts = _rewrite_continue(_body_list(body, diags), updates)
    loop = AstNode("while", (cond, _block([*body_stmts, *updates], span)), span)
    return [*init_stmts, loop]


def _desugar_do(node: AstNode, diags) -> list[AstNode]:
    body, cond = node.children
    span = node.span
    negated = AstNode("unary_expr", (AstNode("paren", (cond,), cond.span),), cond.span, "!")
    exit_check = AstNode(
        "if", (negated, AstNode("break", (), (span[1], span[1]))), span
    )
    body_stmts = _rewrite_continue(_body_list(body, diags), [exit_check])
    loop = AstNode("while", (_true(span), _block([*body_stmts, exit_check], span)), span)
    return [loop]


def _desugar_foreach(node: AstNode, diags) -> list[AstNode]:
    var, iterable, body = node.children
    span = node.span
    empty_args = AstNode("arguments", (), (iterable.span[1], iterable.span[1]))
    has_next = AstNode("call", (iterable, empty_args), iterable.span, "hasNext")
    nxt = AstNode("call", (iterable, empty_args), iterable.span, "next")
    decl = var.children[0]
    element = AstNode(
        "var_decl",
        (AstNode("declarator", (nxt,), decl.span, decl.value),),
        var.span,
        var.value,
    )
    loop = AstNode("while", (has_next, _block([element, *_body_list(body, diags)], span)), span)
    return [loop]


def _is_constant(node: AstNode) -> bool:
    kind = node.kind
    if kind in ("literal", "identifier"):
        return True
    if kind == "field_access":
        return _is_constant(node.children[0]) and node.children[0].kind in ("identifier", "field_access")
    if kind == "paren":
        return _is_constant(node.children[0])
    if kind == "unary_expr" and node.value in ("-", "+", "~"):
        return node.children[0].kind == "literal"
    return False


def _has_escaping_break(stmts) -> bool:
    for stmt in stmts:
        for node in _statements_outside_loops(stmt):
            if node.kind == "break" and node.value is None:
                return True
    return False


def _statements_outside_loops(node: AstNode):
    yield node
    if node.kind in ("while", "opaque"):
        return
    for child in node.children:
        if child.kind not in _EXPR_SLOTS:
            yield from _statements_outside_loops(child)


def _desugar_switch(node: AstNode, diags) -> list[AstNode]:
    selector, *cases = node.children
    span = node.span

    def keep_opaque(reason: str) -> list[AstNode]:
        if diags is not None:
            diags.append(f"switch at offset {span[0]} left opaque: {reason}")
        return [AstNode("opaque", (), span, unparse(node))]

    for case in cases:
        for label in case.children[0].children:
            if not _is_constant(label):
                return keep_opaque("non-constant case label")

    bodies = [_body_list(case.children[1], diags) for case in cases]
    branches: list[tuple[list[AstNode], bool, list[AstNode]]] = []
    pending: list[AstNode] = []
    pending_default = False
    for i, case in enumerate(cases):
        pending.extend(case.children[0].children)
        pending_default = pending_default or case.value == "default"
        if not bodies[i] and i + 1 < len(cases):
            continue  # empty group falls through to the next label
        merged: list[AstNode] = []
        for j in range(i, len(cases)):
            merged.extend(bodies[j])
            if bodies[j] and bodies[j][-1].kind in _TERMINATORS:
                break
        if merged and merged[-1].kind == "break" and merged[-1].value is None:
            merged = merged[:-1]
        if _has_escaping_break(merged):
            return keep_opaque("break from a nested position inside a case")
        branches.append((pending, pending_default, merged))
        pending = []
        pending_default = False

    default_body = None
    conditional = []
    for labels, is_default, body in branches:
        if is_default:
            default_body = body
        else:
            conditional.append((labels, body))

    chain: AstNode | None = _block(default_body, span) if default_body is not None else None
    for labels, body in reversed(conditional):
        cond = None
        for label in labels:
            test = AstNode("binary_expr", (selector, label), span, "==")
            cond = test if cond is None else AstNode("binary_expr", (cond, test), span, "||")
        kids = [cond, _block(body, span)]
        if chain is not None:
            kids.append(chain)
        chain = AstNode("if", tuple(kids), span)
    if chain is None:
        return []
    if chain.kind == "block":
        return list(chain.children)
    return [chain]
