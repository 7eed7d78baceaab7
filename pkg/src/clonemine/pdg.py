"""Approximate intraprocedural program dependence graph and one-hop slicing.

Nodes are statements in source (pre-order) order. Compound statements
contribute one node for their header: ``if``/``while`` conditions become
predicate nodes, ``try`` a marker node, each ``catch`` header a node that
defines the exception variable. Data edges come from reaching definitions
over a structured control-flow graph; control edges link a guard to the
statements immediately nested under it.

Exceptional flow is modeled only for try/catch: every statement inside a
try block (at any depth) has a CFG edge and a control edge to each catch
header of that try.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .render import declarators_text, expr_text, normalize_space
from .syntax import AstNode, call_receiver, statement_children

_LOOP_SUGAR = ("for", "do_while", "foreach", "switch")


@dataclass(frozen=True)
class Statement:
    id: int
    kind: str
    ast: AstNode
    head: AstNode | None
    defs: frozenset[str]
    uses: frozenset[str]
    keyword: str | None = None

    @property
    def is_guard(self) -> bool:
        return self.kind in ("predicate", "try", "catch", "finally")

    def text(self) -> str:
        return item_text(self.kind, self.keyword, self.head)


@dataclass(frozen=True)
class Pdg:
    nodes: tuple[Statement, ...]
    data_edges: tuple[tuple[int, int, str], ...]
    control_edges: tuple[tuple[int, int], ...]
    cfg: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    def find_call_statement(self, call_span: tuple[int, int]) -> Statement:
        """The statement whose own header holds the call at ``call_span``."""
        for stmt in self.nodes:
            if stmt.head is not None and any(
                n.kind == "call" and n.span == call_span for n in stmt.head.walk()
            ):
                return stmt
        best = None
        for stmt in self.nodes:
            lo, hi = stmt.ast.span
            if lo <= call_span[0] and call_span[1] <= hi:
                if best is None or (hi - lo) <= (best.ast.span[1] - best.ast.span[0]):
                    best = stmt
        if best is None:
            raise LookupError(f"no statement contains call at {call_span}")
        return best

    def to_text(self) -> str:
        lines = [f"node {s.id} {s.kind} {s.text()}" for s in self.nodes]
        lines += [f"data {a} -> {b} [{v}]" for a, b, v in self.data_edges]
        lines += [f"control {p} -> {s}" for p, s in self.control_edges]
        return "\n".join(lines) + "\n"


def simple_type(type_text: str) -> str:
    parts = [p.strip() for p in type_text.split("|")]
    return " | ".join(p.rsplit(".", 1)[-1] for p in parts)


def item_text(kind: str, keyword: str | None, head: AstNode | None) -> str:
    """Single-line rendering of a statement header."""
    if kind == "predicate":
        return f"{keyword} ({expr_text(head)})"
    if kind in ("try", "finally"):
        return kind
    if kind == "catch":
        return f"catch ({simple_type(head.value)})"
    if kind == "decl":
        return declarators_text(head)
    if kind == "opaque":
        return normalize_space(head.value)
    if head.kind == "expr_stmt":
        return expr_text(head.children[0])
    if head.kind in ("return", "throw"):
        return f"{head.kind} {expr_text(head.children[0])}" if head.children else head.kind
    if head.kind in ("break", "continue"):
        return f"{head.kind} {head.value}" if head.value else head.kind
    return expr_text(head)


# -- defs / uses ---------------------------------------------------------


def _collect(expr: AstNode, defs: set[str], uses: set[str]) -> None:
    kind = expr.kind
    if kind == "identifier":
        uses.add(expr.value)
        return
    if kind == "assignment":
        target, value = expr.children
        name = _assigned_name(target)
        if name is not None:
            defs.add(name)
            if expr.value != "=":
                uses.add(name)
        else:
            _collect(target, defs, uses)
        _collect(value, defs, uses)
        return
    if kind in ("unary_expr", "postfix_expr") and expr.value in ("++", "--"):
        name = _assigned_name(expr.children[0])
        if name is not None:
            defs.add(name)
            uses.add(name)
            return
    if kind == "opaque":
        return
    for child in expr.children:
        _collect(child, defs, uses)


def _assigned_name(target: AstNode) -> str | None:
    if target.kind == "identifier":
        return target.value
    if target.kind == "field_access" and target.children[0].kind == "this":
        return target.value
    return None


def defs_uses(kind: str, head: AstNode | None) -> tuple[frozenset[str], frozenset[str]]:
    """Variables written and read by a statement header.

    Predicates never define. A statement-level call on a plain variable
    receiver (``writer.close();``) counts as a write of that receiver, since
    calls usually mutate the receiver's state.
    """
    defs: set[str] = set()
    uses: set[str] = set()
    if head is None or kind in ("opaque", "try", "finally", "jump"):
        return frozenset(), frozenset()
    if kind == "catch":
        return frozenset({head.children[0].value}), frozenset()
    if kind == "predicate":
        _collect(head, defs, uses)
        return frozenset(), frozenset(uses)
    if kind == "decl":
        for d in head.children:
            if d.children:
                defs.add(d.value)
                _collect(d.children[0], defs, uses)
        return frozenset(defs), frozenset(uses)
    for child in head.children:
        _collect(child, defs, uses)
    if head.kind == "expr_stmt" and head.children[0].kind == "call":
        receiver = call_receiver(head.children[0])
        if receiver is not None and receiver.kind == "identifier":
            defs.add(receiver.value)
    return frozenset(defs), frozenset(uses)


def _simple_kind(node: AstNode) -> str:
    if node.kind == "var_decl":
        return "decl"
    if node.kind == "expr_stmt":
        expr = node.children[0]
        if expr.kind == "assignment":
            return "assign"
        if expr.kind in ("unary_expr", "postfix_expr") and expr.value in ("++", "--"):
            return "assign"
        if expr.kind == "call":
            return "call"
        return "expr"
    if node.kind in ("break", "continue"):
        return "jump"
    if node.kind in ("return", "throw", "opaque"):
        return node.kind
    raise ValueError(f"unexpected statement kind {node.kind!r}")


# -- construction ----------------------------------------------------------


class _Loop:
    def __init__(self, head: int):
        self.head = head
        self.breaks: set[int] = set()


class _Builder:
    def __init__(self):
        self.nodes: list[Statement] = []
        self.succ: list[set[int]] = []
        self.control: set[tuple[int, int]] = set()
        self.loops: list[_Loop] = []

    def add(self, kind, ast, head, controller, keyword=None) -> int:
        sid = len(self.nodes)
        defs, uses = defs_uses(kind, head)
        self.nodes.append(Statement(sid, kind, ast, head, defs, uses, keyword))
        self.succ.append(set())
        if controller is not None:
            self.control.add((controller, sid))
        return sid

    def link(self, preds, target: int) -> None:
        for p in preds:
            self.succ[p].add(target)

    def seq(self, stmts, preds: set[int], controller) -> set[int]:
        for stmt in stmts:
            preds = self.stmt(stmt, preds, controller)
        return preds

    def branch(self, node: AstNode, preds, controller) -> set[int]:
        return self.seq(statement_children(node), preds, controller)

    def stmt(self, node: AstNode, preds: set[int], controller) -> set[int]:
        kind = node.kind
        if kind == "block":
            return self.seq(node.children, preds, controller)
        if kind == "empty":
            return preds
        if kind in _LOOP_SUGAR:
            raise ValueError(f"{kind} must be desugared before PDG construction")
        if kind == "if":
            p = self.add("predicate", node, node.children[0], controller, "if")
            self.link(preds, p)
            out = self.branch(node.children[1], {p}, p)
            if len(node.children) == 3:
                out |= self.branch(node.children[2], {p}, p)
            else:
                out.add(p)
            return out
        if kind == "while":
            p = self.add("predicate", node, node.children[0], controller, "while")
            self.link(preds, p)
            loop = _Loop(p)
            self.loops.append(loop)
            out = self.branch(node.children[1], {p}, p)
            self.link(out, p)
            self.loops.pop()
            return {p} | loop.breaks
        if kind == "try":
            return self._try(node, preds, controller)
        sid = self.add(_simple_kind(node), node, node, controller)
        self.link(preds, sid)
        if kind in ("return", "throw"):
            return set()
        if kind == "break":
            if self.loops:
                self.loops[-1].breaks.add(sid)
            return set()
        if kind == "continue":
            if self.loops:
                self.link({sid}, self.loops[-1].head)
            return set()
        return {sid}

    def _try(self, node: AstNode, preds, controller) -> set[int]:
        t = self.add("try", node, None, controller)
        self.link(preds, t)
        first = len(self.nodes)
        inner_preds = {t}
        catches = []
        fin = None
        for child in node.children:
            if child.kind == "resources":
                inner_preds = self.seq(child.children, inner_preds, t)
            elif child.kind == "block":
                inner_preds = self.branch(child, inner_preds, t)
            elif child.kind == "catch":
                catches.append(child)
            elif child.kind == "finally":
                fin = child
        inner = range(first, len(self.nodes))
        out = set(inner_preds)
        for c in catches:
            h = self.add("catch", c, c, controller)
            self.link({t, *inner}, h)
            for s in inner:
                self.control.add((s, h))
            out |= self.branch(c.children[1], {h}, h)
        if fin is not None:
            f = self.add("finally", fin, None, controller)
            self.link(out, f)
            out = self.branch(fin.children[0], {f}, f)
        return out


def _reaching_definitions(nodes, succ) -> list[frozenset[tuple[int, str]]]:
    """IN sets of (defining statement, variable) pairs, worklist iteration."""
    n = len(nodes)
    preds: list[list[int]] = [[] for _ in range(n)]
    for a, targets in enumerate(succ):
        for b in targets:
            preds[b].append(a)
    in_sets: list[frozenset] = [frozenset()] * n
    out_sets: list[frozenset] = [frozenset()] * n
    work = list(range(n))
    queued = set(work)
    while work:
        b = work.pop(0)
        queued.discard(b)
        in_b = frozenset().union(*(out_sets[p] for p in preds[b])) if preds[b] else frozenset()
        stmt = nodes[b]
        if stmt.defs:
            out_b = frozenset(d for d in in_b if d[1] not in stmt.defs) | {
                (b, v) for v in stmt.defs
            }
        else:
            out_b = in_b
        in_sets[b] = in_b
        if out_b != out_sets[b]:
            out_sets[b] = out_b
            for s in succ[b]:
                if s not in queued:
                    work.append(s)
                    queued.add(s)
    return in_sets


def pdg_from_statements(stmts) -> Pdg:
    """Build a PDG over already desugared statements."""
    builder = _Builder()
    builder.seq(stmts, set(), None)
    nodes = builder.nodes
    in_sets = _reaching_definitions(nodes, builder.succ)
    data = set()
    for b, stmt in enumerate(nodes):
        for a, v in in_sets[b]:
            if v in stmt.uses:
                data.add((a, b, v))
    return Pdg(
        tuple(nodes),
        tuple(sorted(data)),
        tuple(sorted(builder.control)),
        tuple(tuple(sorted(s)) for s in builder.succ),
    )


def build_pdg(example) -> Pdg:
    """PDG of a usage example's caller body, after syntax desugaring."""
    from .desugar import normalize_syntax

    return pdg_from_statements(normalize_syntax(example.statements))


def slice_pdg(g: Pdg, call_stmt: Statement) -> list[Statement]:
    """The call statement plus its direct data/control neighbours, in source order."""
    if g.nodes[call_stmt.id] is not call_stmt and g.nodes[call_stmt.id] != call_stmt:
        raise ValueError("statement is not a node of this graph")
    keep = {call_stmt.id}
    for a, b, _ in g.data_edges:
        if a == call_stmt.id:
            keep.add(b)
        elif b == call_stmt.id:
            keep.add(a)
    for p, s in g.control_edges:
        if p == call_stmt.id:
            keep.add(s)
        elif s == call_stmt.id:
            keep.add(p)
    return [g.nodes[i] for i in sorted(keep)]
