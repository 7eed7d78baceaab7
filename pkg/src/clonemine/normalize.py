"""Variable- and expression-level normalization of sliced statements, and
rendering of a slice into the item sequence that gets mined.

Loop and switch desugaring lives in :mod:`clonemine.desugar`; it runs on the
whole caller body before the PDG is built.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from .corpus import MethodDecl
from .lexer import JAVA_KEYWORDS
from .pdg import Statement
from .render import expr_text
from .syntax import AstNode, contains_call, transform
from .usage import CallSite

COMMUTATIVE_OPS = frozenset({"+", "*", "==", "!=", "&&", "||", "&", "|", "^"})
MIRRORED_OPS = {"<": ">", ">": "<", "<=": ">=", ">=": "<="}

UNKNOWN_TYPE = "var"
_PLACEHOLDER = re.compile(r"^(arg\d+|ref|var)$")
_IDENT = re.compile(r"^[A-Za-z_$][\w$]*$")
_PACKAGE_PREFIX = re.compile(r"\b(?:[a-z_$][\w$]*\.)+(?=[A-Z])")
_QUALIFIED = re.compile(r"^(?:[a-z_$][\w$]*\.)+[A-Z]")


@dataclass(frozen=True, eq=False)
class NormStatement:
    """A mining item. Identity is the rendered text alone."""

    text: str
    kind: str
    keywords: frozenset[str]

    def __eq__(self, other):
        if isinstance(other, NormStatement):
            return self.text == other.text
        return NotImplemented

    def __hash__(self):
        return hash(self.text)

    def __repr__(self):
        return f"NormStatement({self.text!r})"


@dataclass(frozen=True)
class NormSeq:
    example_id: str
    items: tuple[NormStatement, ...]
    call_index: int

    def __post_init__(self):
        if not 0 <= self.call_index < len(self.items):
            raise ValueError("call_index out of range")
        if "call" not in self.items[self.call_index].keywords:
            raise ValueError("designated call item lacks the call keyword")

    def texts(self) -> tuple[str, ...]:
        return tuple(i.text for i in self.items)

    @property
    def call_item(self) -> NormStatement:
        return self.items[self.call_index]

    def to_text(self) -> str:
        lines = [f"# example {self.example_id}", f"# call_index {self.call_index}"]
        lines += [i.text for i in self.items]
        return "\n".join(lines) + "\n"


# -- variable level --------------------------------------------------------


def strip_packages(type_text: str) -> str:
    """``java.util.List<java.io.File>`` -> ``List<File>``."""
    return _PACKAGE_PREFIX.sub("", type_text)


def type_environment(caller: MethodDecl) -> dict[str, str]:
    """Declared types visible in ``caller``: parameters, locals, then fields."""
    env: dict[str, str] = {}
    for name, type_text in caller.params:
        env.setdefault(name, type_text.replace("...", "[]"))
    for node in caller.body.walk():
        if node.kind == "var_decl":
            for d in node.children:
                env.setdefault(d.value, node.value)
        elif node.kind == "catch":
            env.setdefault(node.children[0].value, node.value)
    for name, type_text in caller.fields.items():
        env.setdefault(name, type_text)
    return {name: strip_packages(t) for name, t in env.items()}


def _package_roots(head: AstNode, known) -> set[tuple[int, int]]:
    """Spans of identifiers that start a qualified class name such as ``java.io.File``."""
    roots = set()
    for node in head.walk():
        if node.kind != "field_access":
            continue
        root = node
        while root.kind == "field_access":
            root = root.children[0]
        if root.kind == "identifier" and root.value not in known and _QUALIFIED.match(expr_text(node)):
            roots.add(root.span)
    return roots


def _already_normal(name: str) -> bool:
    return bool(_PLACEHOLDER.match(name)) or not _IDENT.match(name) or name in JAVA_KEYWORDS


def variable_renames(site: CallSite) -> dict[str, str]:
    """Bare-variable arguments become argI (lowest index wins), the return receiver ref."""
    renames: dict[str, str] = {}
    for i, arg in enumerate(site.arg_exprs):
        if arg.kind == "identifier" and arg.value not in renames:
            renames[arg.value] = f"arg{i}"
    if site.assigned_to and site.assigned_to not in renames:
        renames[site.assigned_to] = "ref"
    return renames


def _normal_name(name: str, renames: dict[str, str], types: dict[str, str]) -> str:
    if name in renames:
        return renames[name]
    if _already_normal(name):
        return name
    if name in types:
        return types[name]
    if name[:1].isupper():
        # undeclared capitalized names are class references or constants
        return name
    return UNKNOWN_TYPE


def normalize_variables(
    statements: list[Statement], site: CallSite, types: dict[str, str]
) -> list[Statement]:
    renames = variable_renames(site)
    keep: set[tuple[int, int]] = set()

    def rename(node: AstNode) -> AstNode:
        if node.kind == "identifier" and node.span in keep:
            return node
        if node.kind == "var_decl":
            return node.with_value(strip_packages(node.value))
        if node.kind in ("identifier", "declarator"):
            new = _normal_name(node.value, renames, types)
            if new != node.value:
                return node.with_value(new)
        return node

    out = []
    for stmt in statements:
        if stmt.head is None or stmt.kind == "catch":
            out.append(stmt)
            continue
        keep = _package_roots(stmt.head, renames.keys() | types.keys())
        out.append(replace(stmt, head=transform(stmt.head, rename)))
    return out


# -- expression level ------------------------------------------------------


def _is_concatenation(node: AstNode) -> bool:
    """A ``+`` chain with a string literal operand joins strings; order matters."""
    if node.kind == "literal":
        return node.value.startswith('"')
    if node.kind == "binary_expr" and node.value == "+":
        return any(_is_concatenation(c) for c in node.children)
    return False


def _reorder(node: AstNode) -> AstNode:
    if node.kind != "binary_expr":
        return node
    op = node.value
    left, right = node.children
    lt, rt = expr_text(left), expr_text(right)
    if op == "+" and _is_concatenation(node):
        return node
    if op in COMMUTATIVE_OPS:
        if rt < lt:
            return node.with_children((right, left))
        return node
    if op in MIRRORED_OPS:
        if rt < lt:
            return AstNode("binary_expr", (right, left), node.span, MIRRORED_OPS[op])
        if rt == lt:
            return node.with_value(min(op, MIRRORED_OPS[op]))
    return node


def normalize_expr(node: AstNode) -> AstNode:
    """Order operands of commutative and mirrorable operators, bottom-up."""
    return transform(node, _reorder)


def normalize_statement_exprs(stmt: Statement) -> Statement:
    if stmt.head is None or stmt.kind == "catch":
        return stmt
    return replace(stmt, head=normalize_expr(stmt.head))


# -- sequence construction -------------------------------------------------


def rename_callee(stmt: Statement, call_span: tuple[int, int], name: str) -> Statement:
    """Give the designated call the target's name so clone calls line up."""
    if stmt.head is None:
        return stmt

    def fn(node: AstNode) -> AstNode:
        if node.kind == "call" and node.span == call_span and node.value != name:
            return node.with_value(name)
        return node

    return replace(stmt, head=transform(stmt.head, fn))


def item_keywords(stmt: Statement) -> frozenset[str]:
    words: set[str] = set()
    if stmt.kind == "predicate":
        words.add(stmt.keyword)
    elif stmt.kind in ("try", "catch", "finally", "return", "throw"):
        words.add(stmt.kind)
    elif stmt.kind == "jump":
        words.add(stmt.head.kind)
    if stmt.head is not None and stmt.kind != "catch" and contains_call(stmt.head):
        words.add("call")
    return frozenset(words)


def to_norm_statement(stmt: Statement, designated: bool = False) -> NormStatement:
    words = item_keywords(stmt)
    if designated:
        words = words | {"call"}
    return NormStatement(stmt.text(), stmt.kind, words)


def to_norm_seq(example_id: str, statements: list[Statement], call_stmt_id: int) -> NormSeq:
    items = []
    call_index = None
    for i, stmt in enumerate(statements):
        designated = stmt.id == call_stmt_id
        if designated:
            call_index = i
        items.append(to_norm_statement(stmt, designated))
    if call_index is None:
        raise ValueError("designated call statement is not in the slice")
    return NormSeq(example_id, tuple(items), call_index)
