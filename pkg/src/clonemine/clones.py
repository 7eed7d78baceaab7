"""Exact Type-1 / Type-2 clone detection over method bodies."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .corpus import CorpusIndex, MethodDecl, TokenSeq, body_tokens
from .lexer import IDENTIFIER, LITERAL, Token

TYPE1 = "type1"
TYPE2 = "type2"
DEFAULT_MIN_TOKENS = 6


class TargetNotInCorpus(LookupError):
    pass


@dataclass(frozen=True)
class CloneMember:
    method_id: str
    clone_type: str


@dataclass(frozen=True)
class CloneClass:
    target_id: str
    members: tuple[CloneMember, ...]
    abstraction_fingerprint: str

    def member_ids(self) -> list[str]:
        return [m.method_id for m in self.members]

    def counts(self) -> dict[str, int]:
        out = {TYPE1: 0, TYPE2: 0}
        for m in self.members:
            out[m.clone_type] += 1
        return out


def abstract_tokens(tokens: TokenSeq) -> TokenSeq:
    """Replace identifier texts by ``ID`` and literal texts by ``LIT``."""
    out = []
    for t in tokens:
        if t.cls == IDENTIFIER:
            out.append(Token("ID", t.cls, t.start, t.end))
        elif t.cls == LITERAL:
            out.append(Token("LIT", t.cls, t.start, t.end))
        else:
            out.append(t)
    return TokenSeq(tuple(out))


def _digest(texts) -> str:
    h = hashlib.sha1()
    for t in texts:
        h.update(t.encode("utf-8"))
        h.update(b"\x1f")
    return h.hexdigest()


class CloneIndex:
    """Fingerprint index over every method body in a corpus.

    Built once; a per-target query is a dictionary lookup followed by an
    exact comparison of the candidates' token sequences.
    """

    def __init__(self, corpus: CorpusIndex, min_tokens: int = DEFAULT_MIN_TOKENS):
        self.corpus = corpus
        self.min_tokens = min_tokens
        self._raw: dict[str, tuple[str, ...]] = {}
        self._abstract: dict[str, tuple[str, ...]] = {}
        self._buckets: dict[str, list[str]] = {}
        for method_id, m in corpus.methods.items():
            self._add(method_id, m)

    def _add(self, method_id: str, m: MethodDecl) -> None:
        toks = body_tokens(m)
        abstracted = abstract_tokens(toks).texts()
        self._raw[method_id] = toks.texts()
        self._abstract[method_id] = abstracted
        if len(toks) >= self.min_tokens:
            self._buckets.setdefault(_digest(abstracted), []).append(method_id)

    def fingerprint(self, method_id: str) -> str:
        return _digest(self._abstract[method_id])

    def detect(self, target: MethodDecl) -> CloneClass:
        if target.id not in self.corpus.methods:
            raise TargetNotInCorpus(target.id)
        fp = self.fingerprint(target.id)
        members = []
        if len(self._raw[target.id]) >= self.min_tokens:
            raw = self._raw[target.id]
            abstracted = self._abstract[target.id]
            for other in self._buckets.get(fp, ()):
                if other == target.id or self._abstract[other] != abstracted:
                    continue
                kind = TYPE1 if self._raw[other] == raw else TYPE2
                members.append(CloneMember(other, kind))
        return CloneClass(target.id, tuple(members), fp)


def detect_clones(
    target: MethodDecl, corpus: CorpusIndex, min_tokens: int = DEFAULT_MIN_TOKENS
) -> CloneClass:
    """One-shot convenience over :class:`CloneIndex`."""
    return CloneIndex(corpus, min_tokens).detect(target)
