"""AST node type shared by the parser, desugaring, PDG and normalization."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Iterator

# Closed set of node kinds. Anything the parser cannot model becomes OPAQUE.
STATEMENT_KINDS = frozenset(
    {
        "block", "var_decl", "declarator", "expr_stmt", "if", "while",
        "do_while", "for", "for_init", "for_update", "foreach", "switch", "case",
        "case_labels", "try", "resources", "catch", "finally", "return", "throw",
        "break", "continue", "empty", "opaque",
    }
)
EXPRESSION_KINDS = frozenset(
    {
        "assignment", "conditional", "binary_expr", "unary_expr", "postfix_expr",
        "instanceof", "cast", "call", "arguments", "field_access", "index", "new",
        "new_array", "array_init", "literal", "identifier", "this",
        "class_literal", "paren",
    }
)
NODE_KINDS = STATEMENT_KINDS | EXPRESSION_KINDS | {"method_decl"}

OPAQUE = "opaque"


@dataclass(frozen=True)
class AstNode:
    """Immutable syntax tree node.

    ``value`` carries the kind-specific payload: operator text for
    expressions, the simple name for calls and field accesses, the declared
    type text for declarations and casts, raw source text for opaque nodes.
    """

    kind: str
    children: tuple["AstNode", ...] = ()
    span: tuple[int, int] = (0, 0)
    value: str | None = None

    def __post_init__(self):
        if self.kind not in NODE_KINDS:
            raise ValueError(f"unknown node kind {self.kind!r}")

    def walk(self) -> Iterator["AstNode"]:
        """Pre-order traversal including ``self``."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def with_children(self, children) -> "AstNode":
        return replace(self, children=tuple(children))

    def with_value(self, value) -> "AstNode":
        return replace(self, value=value)


def transform(node: AstNode, fn: Callable[[AstNode], AstNode]) -> AstNode:
    """Rebuild ``node`` bottom-up, applying ``fn`` to every rebuilt node."""
    if node.children:
        kids = tuple(transform(c, fn) for c in node.children)
        if kids != node.children:
            node = node.with_children(kids)
    return fn(node)


def statement_children(node: AstNode) -> list[AstNode]:
    """Statements directly owned by a block-like node (blocks are flattened)."""
    if node.kind == "block":
        out: list[AstNode] = []
        for child in node.children:
            out.extend(statement_children(child) if child.kind == "block" else [child])
        return out
    return [node]


def call_args(call: AstNode) -> tuple[AstNode, ...]:
    return call.children[-1].children


def call_receiver(call: AstNode) -> AstNode | None:
    return call.children[0] if len(call.children) == 2 else None


def contains_call(node: AstNode) -> bool:
    return any(n.kind == "call" for n in node.walk())
