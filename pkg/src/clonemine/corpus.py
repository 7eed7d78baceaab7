"""Corpus ingestion: files on disk to parsed method declarations."""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .lexer import Token, tokenize
from .parser import ParseError, parse_unit
from .syntax import AstNode

log = logging.getLogger(__name__)

DEFAULT_INCLUDE = ("**/*.java",)


class CorpusError(RuntimeError):
    """The corpus root cannot be read at all."""


@dataclass(frozen=True)
class SourceFile:
    path: str
    content: str
    parse_status: str = "ok"
    error: str | None = None


@dataclass(frozen=True)
class TokenSeq:
    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, item):
        return self.tokens[item]

    def texts(self) -> tuple[str, ...]:
        return tuple(t.text for t in self.tokens)

    def classes(self) -> tuple[str, ...]:
        return tuple(t.cls for t in self.tokens)

    def joined(self) -> str:
        return " ".join(self.texts())


@dataclass(frozen=True)
class MethodDecl:
    id: str
    name: str
    params: tuple[tuple[str, str], ...]
    return_type: str
    body: AstNode
    span: tuple[int, int]
    path: str
    class_name: str
    text: str
    # declared types of fields visible from the enclosing class chain
    fields: Mapping[str, str] = field(default_factory=dict, compare=False, hash=False)
    is_constructor: bool = False

    @property
    def arity(self) -> int:
        return len(self.params)

    @property
    def qualified_name(self) -> str:
        return f"{self.class_name}.{self.name}" if self.class_name else self.name

    @property
    def body_text(self) -> str:
        start = self.body.span[0] - self.span[0]
        return self.text[start:]

    def __repr__(self) -> str:
        return f"MethodDecl({self.id!r})"


@dataclass
class CorpusIndex:
    files: dict[str, SourceFile] = field(default_factory=dict)
    methods: dict[str, MethodDecl] = field(default_factory=dict)
    by_name: dict[str, list[str]] = field(default_factory=dict)

    def add_file(self, file: SourceFile, methods: Iterable[MethodDecl] = ()) -> None:
        if file.path in self.files:
            raise ValueError(f"duplicate corpus path {file.path}")
        self.files[file.path] = file
        for m in methods:
            self.methods[m.id] = m
            self.by_name.setdefault(m.name, []).append(m.id)

    @property
    def errors(self) -> list[SourceFile]:
        return [f for f in self.files.values() if f.parse_status == "error"]

    def lookup(self, name: str, arity: int | None = None) -> list[MethodDecl]:
        found = [self.methods[i] for i in self.by_name.get(name, ())]
        if arity is not None:
            found = [m for m in found if m.arity == arity]
        return found


def _signature_hash(params) -> str:
    sig = ",".join(t for _, t in params)
    return hashlib.sha1(sig.encode("utf-8")).hexdigest()[:8]


def _visible_fields(class_name: str, all_fields: dict[str, dict[str, str]]) -> Mapping[str, str]:
    merged: dict[str, str] = dict(all_fields.get("", {}))
    parts = class_name.split(".") if class_name else []
    for i in range(1, len(parts) + 1):
        merged.update(all_fields.get(".".join(parts[:i]), {}))
    return MappingProxyType(merged)


def parse_file(file: SourceFile) -> list[MethodDecl]:
    """Parse one file into method declarations.

    Raises ParseError when the file does not parse at the top level; a bad
    statement inside a method body becomes an ``opaque`` node instead.
    """
    unit = parse_unit(file.content)
    out: list[MethodDecl] = []
    seen: dict[str, int] = {}
    for pm in unit.methods:
        qualified = f"{pm.class_name}.{pm.name}" if pm.class_name else pm.name
        base_id = f"{file.path}#{qualified}/{len(pm.params)}:{_signature_hash(pm.params)}"
        n = seen.get(base_id, 0) + 1
        seen[base_id] = n
        method_id = base_id if n == 1 else f"{base_id}~{n}"
        start, end = pm.node.span
        out.append(
            MethodDecl(
                id=method_id,
                name=pm.name,
                params=tuple(pm.params),
                return_type=pm.return_type,
                body=pm.node.children[0],
                span=(start, end),
                path=file.path,
                class_name=pm.class_name,
                text=file.content[start:end],
                fields=_visible_fields(pm.class_name, unit.fields),
                is_constructor=pm.is_constructor,
            )
        )
    return out


def tokenize_method(m: MethodDecl) -> TokenSeq:
    """Whole-method token sequence (signature and body), comments dropped."""
    return TokenSeq(tuple(tokenize(m.text, m.span[0])))


def body_tokens(m: MethodDecl) -> TokenSeq:
    """Token sequence of the method body block, braces included."""
    return TokenSeq(tuple(tokenize(m.body_text, m.body.span[0])))


def _matching_files(root: Path, include: Iterable[str]) -> list[Path]:
    found: set[Path] = set()
    for pattern in include:
        for p in root.glob(pattern):
            if p.is_file():
                found.add(p)
    return sorted(found, key=lambda p: p.relative_to(root).as_posix())


def load_corpus(root, include: Iterable[str] = DEFAULT_INCLUDE) -> CorpusIndex:
    """Load and parse every file under ``root`` matching one of ``include``.

    Per-file decode or parse failures are recorded on the SourceFile and do
    not stop ingestion.
    """
    root = Path(root)
    if not root.is_dir():
        raise CorpusError(f"corpus root {root} is not a readable directory")
    try:
        paths = _matching_files(root, include)
    except OSError as exc:
        raise CorpusError(f"cannot read corpus root {root}: {exc}") from exc

    index = CorpusIndex()
    for p in paths:
        rel = p.relative_to(root).as_posix()
        try:
            content = p.read_bytes().decode("utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            log.warning("skipping %s: %s", rel, exc)
            index.add_file(SourceFile(rel, "", "error", f"decode error: {exc}"))
            continue
        _add_source(index, rel, content)
    log.info("loaded %d files, %d methods", len(index.files), len(index.methods))
    return index


def _add_source(index: CorpusIndex, path: str, content: str) -> None:
    file = SourceFile(path, content)
    try:
        methods = parse_file(file)
    except ParseError as exc:
        log.warning("parse error in %s: %s", path, exc)
        index.add_file(SourceFile(path, content, "error", str(exc)))
        return
    index.add_file(file, methods)


def corpus_from_sources(sources: Mapping[str, str]) -> CorpusIndex:
    """In-memory corpus from ``{relative path: source text}``, in path order."""
    index = CorpusIndex()
    for path in sorted(sources):
        _add_source(index, path, sources[path])
    return index
