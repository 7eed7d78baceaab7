"""Frequent maximal subsequence mining over normalized usage sequences.

A pattern is an ordered, gapped subsequence of items (items compare by
text). Its support is the fraction of sequences in the cluster that
contain it. Only patterns containing a designated target-call item are
reported, and only maximal ones: a pattern that is a subsequence of another
reported pattern is dropped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .normalize import NormSeq, NormStatement

DEFAULT_SIGMA = Fraction(9, 10)
DEFAULT_MAX_PATTERN_LEN = 12

CONDITION_CHECK = "condition_check"
ITERATION = "iteration"
ERROR_HANDLING = "error_handling"
METHOD_CO_OCCURRENCE = "method_co_occurrence"
UNCATEGORIZED = "uncategorized"
CATEGORIES = (CONDITION_CHECK, ITERATION, ERROR_HANDLING, METHOD_CO_OCCURRENCE, UNCATEGORIZED)

_GUARD_WORDS = frozenset({"if", "while", "try", "catch", "finally"})
_NORMALIZED_NAME = re.compile(r"\b(arg\d+|ref)\b")


@dataclass(frozen=True)
class UsagePattern:
    items: tuple[NormStatement, ...]
    support: Fraction
    supporting_examples: tuple[str, ...]
    category: str = UNCATEGORIZED

    def texts(self) -> tuple[str, ...]:
        return tuple(i.text for i in self.items)


def as_fraction(value) -> Fraction:
    """Exact threshold from a float, str or Fraction (0.9 -> 9/10)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value))


def is_subsequence(pattern: Sequence, sequence: Sequence) -> bool:
    it = iter(sequence)
    return all(any(x == y for y in it) for x in pattern)


def _texts(seq) -> tuple[str, ...]:
    if isinstance(seq, NormSeq):
        return seq.texts()
    return tuple(getattr(x, "text", x) for x in seq)


def support(s, cluster) -> Fraction:
    """Fraction of sequences in ``cluster`` that contain ``s`` as a subsequence."""
    if not cluster:
        raise ValueError("support of a pattern over an empty cluster")
    pattern = _texts(s)
    if not pattern:
        raise ValueError("support of an empty pattern")
    hits = sum(1 for seq in cluster if is_subsequence(pattern, _texts(seq)))
    return Fraction(hits, len(cluster))


def filter_maximal(patterns):
    """Drop every pattern that is a subsequence of a different one; dedupe ties."""
    unique = []
    seen = set()
    for p in patterns:
        key = p.texts()
        if key not in seen:
            seen.add(key)
            unique.append(p)
    keys = [p.texts() for p in unique]
    out = []
    for i, p in enumerate(unique):
        dominated = any(
            j != i and len(keys[j]) > len(keys[i]) and is_subsequence(keys[i], keys[j])
            for j in range(len(unique))
        )
        if not dominated:
            out.append(p)
    return out


def _first_after(seq: tuple[str, ...], item: str, start: int) -> int:
    try:
        return seq.index(item, start)
    except ValueError:
        return -1


def mine_frequent(
    cluster: Sequence[NormSeq],
    sigma=DEFAULT_SIGMA,
    max_pattern_len: int = DEFAULT_MAX_PATTERN_LEN,
    call_items: frozenset[str] | None = None,
) -> list[UsagePattern]:
    """Maximal frequent subsequences (support >= sigma) containing a call item.

    Depth-first prefix growth over pseudo-projected sequences: each projection
    keeps, per supporting sequence, the position right after the leftmost
    embedding of the prefix. Items are extended only if frequent in the
    projection. A prefix without a call item is abandoned as soon as no call
    item is frequent in its projection.

    ``call_items`` defaults to the designated call texts of the cluster.
    """
    sigma = as_fraction(sigma)
    if not 0 < sigma <= 1:
        raise ValueError("sigma must be in (0, 1]")
    if not cluster:
        return []
    seqs = [c.texts() for c in cluster]
    ids = [c.example_id for c in cluster]
    n = len(seqs)
    if call_items is None:
        call_items = frozenset(c.call_item.text for c in cluster)
    # smallest count whose ratio reaches sigma
    need = -((-sigma.numerator * n) // sigma.denominator)
    lookup: dict[str, NormStatement] = {}
    for c in cluster:
        for item in c.items:
            lookup.setdefault(item.text, item)

    candidates: list[tuple[tuple[str, ...], list[int]]] = []

    def counts(proj):
        tally: dict[str, int] = {}
        for i, pos in proj:
            for item in set(seqs[i][pos:]):
                tally[item] = tally.get(item, 0) + 1
        return tally

    def grow(prefix, proj, has_call):
        tally = counts(proj)
        frequent = sorted(item for item, k in tally.items() if k >= need)
        extended = False
        if len(prefix) < max_pattern_len:
            for item in frequent:
                new_proj = []
                for i, pos in proj:
                    at = _first_after(seqs[i], item, pos)
                    if at >= 0:
                        new_proj.append((i, at + 1))
                assert len(new_proj) <= len(proj)  # anti-monotone support
                extended = True
                new_has_call = has_call or item in call_items
                if not new_has_call and not _call_reachable(new_proj):
                    continue
                grow(prefix + (item,), new_proj, new_has_call)
        if has_call and not (extended and len(prefix) < max_pattern_len):
            candidates.append((prefix, [i for i, _ in proj]))

    def _call_reachable(proj):
        tally = counts(proj)
        return any(tally.get(c, 0) >= need for c in call_items)

    if n >= need:
        grow((), [(i, 0) for i in range(n)], False)

    patterns = [
        UsagePattern(
            tuple(lookup[t] for t in prefix),
            Fraction(len(members), n),
            tuple(sorted(ids[i] for i in members)),
        )
        for prefix, members in candidates
    ]
    return sort_patterns(filter_maximal(patterns))


def sort_patterns(patterns):
    return sorted(patterns, key=lambda p: (-p.support, p.texts()))


def _call_position(items, call_items) -> int:
    for k, item in enumerate(items):
        if item.text in call_items:
            return k
    for k, item in enumerate(items):
        if "call" in item.keywords and not (item.keywords & _GUARD_WORDS):
            return k
    return -1


def classify(p: UsagePattern, call_items: frozenset[str] = frozenset()) -> str:
    """Assign one category by keyword rules, first match wins.

    1. any try or catch item                      -> error_handling
    2. a while predicate before the call item     -> iteration
    3. an if predicate naming argN or ref         -> condition_check
    4. two or more distinct plain call items      -> method_co_occurrence
    """
    items = p.items
    if any(i.keywords & {"try", "catch"} for i in items):
        return ERROR_HANDLING
    call_at = _call_position(items, call_items)
    if call_at >= 0 and any("while" in i.keywords for i in items[:call_at]):
        return ITERATION
    if any("if" in i.keywords and _NORMALIZED_NAME.search(i.text) for i in items):
        return CONDITION_CHECK
    calls = {i.text for i in items if "call" in i.keywords and not (i.keywords & _GUARD_WORDS)}
    if len(calls) >= 2:
        return METHOD_CO_OCCURRENCE
    return UNCATEGORIZED
