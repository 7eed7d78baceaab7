"""Call-site discovery and usage-example assembly for a clone class."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .clones import CloneClass, abstract_tokens
from .corpus import CorpusIndex, MethodDecl, body_tokens
from .syntax import AstNode, call_args

DEFAULT_MIN_EXAMPLES = 10


class InsufficientExamples(Exception):
    """Raised when a clone class has too few distinct usage examples to mine."""

    def __init__(self, count: int, minimum: int, examples=()):
        super().__init__(f"insufficient examples ({count} < {minimum})")
        self.count = count
        self.minimum = minimum
        self.examples = list(examples)


@dataclass(frozen=True)
class CallSite:
    caller_id: str
    callee_member_id: str
    call_node: AstNode
    arg_exprs: tuple[AstNode, ...]
    assigned_to: str | None = None
    # position of this call among the caller's matching calls, source order
    ordinal: int = 0


@dataclass(frozen=True)
class UsageExample:
    example_id: str
    call_site: CallSite
    statements: tuple[AstNode, ...]
    dedup_key: str
    caller: MethodDecl = field(compare=False, repr=False)


def _unwrap(node: AstNode) -> AstNode:
    while node.kind in ("paren", "cast"):
        node = node.children[0]
    return node


def _receivers_of_returns(body: AstNode) -> dict[tuple[int, int], str]:
    """Map call spans to the variable that directly receives their value."""
    out: dict[tuple[int, int], str] = {}
    for node in body.walk():
        if node.kind == "assignment" and node.value == "=":
            target, value = node.children
            value = _unwrap(value)
            if value.kind != "call":
                continue
            if target.kind == "identifier":
                out[value.span] = target.value
            elif (
                target.kind == "field_access"
                and target.children[0].kind == "this"
                and target.children[0].value == "this"
            ):
                out[value.span] = target.value
        elif node.kind == "declarator" and node.children:
            value = _unwrap(node.children[0])
            if value.kind == "call":
                out[value.span] = node.value
    return out


def callee_table(cc: CloneClass, corpus: CorpusIndex) -> dict[tuple[str, int], str]:
    """(simple name, arity) -> callee id; the target wins over members."""
    table: dict[tuple[str, int], str] = {}
    for method_id in [cc.target_id, *cc.member_ids()]:
        m = corpus.methods[method_id]
        table.setdefault((m.name, m.arity), method_id)
    return table


def find_call_sites(cc: CloneClass, corpus: CorpusIndex) -> list[CallSite]:
    table = callee_table(cc, corpus)
    sites: list[CallSite] = []
    for caller in corpus.methods.values():
        receivers = None
        ordinal = 0
        for node in caller.body.walk():
            if node.kind != "call":
                continue
            args = call_args(node)
            callee = table.get((node.value, len(args)))
            if callee is None:
                continue
            if receivers is None:
                receivers = _receivers_of_returns(caller.body)
            sites.append(
                CallSite(caller.id, callee, node, args, receivers.get(node.span), ordinal)
            )
            ordinal += 1
    return sites


def collect_usage_examples(
    sites: list[CallSite], corpus: CorpusIndex, min_examples: int = DEFAULT_MIN_EXAMPLES
) -> list[UsageExample]:
    """One example per call site, collapsing callers that are copies of each other.

    Two call sites collapse when their callers have the same abstracted body
    tokens and the call holds the same position within the caller. The
    survivor is the one with the smallest example id.
    """
    abstract_cache: dict[str, str] = {}
    by_key: dict[str, UsageExample] = {}
    for site in sites:
        caller = corpus.methods[site.caller_id]
        if caller.id not in abstract_cache:
            h = hashlib.sha1()
            for text in abstract_tokens(body_tokens(caller)).texts():
                h.update(text.encode("utf-8"))
                h.update(b"\x1f")
            abstract_cache[caller.id] = h.hexdigest()
        key = hashlib.sha1(f"{abstract_cache[caller.id]}:{site.ordinal}".encode()).hexdigest()
        example = UsageExample(
            example_id=f"{caller.id}@{site.call_node.span[0]}",
            call_site=site,
            statements=caller.body.children,
            dedup_key=key,
            caller=caller,
        )
        kept = by_key.get(key)
        if kept is None or example.example_id < kept.example_id:
            by_key[key] = example
    examples = sorted(by_key.values(), key=lambda e: e.example_id)
    if len(examples) < min_examples:
        raise InsufficientExamples(len(examples), min_examples, examples)
    return examples
