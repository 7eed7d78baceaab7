"""End-to-end run: ingest, clone detection, usage collection, slicing,
normalization, mining and classification, plus report (de)serialization."""

from __future__ import annotations

import difflib
import json
import logging
import re
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from .clones import DEFAULT_MIN_TOKENS, CloneClass, CloneIndex
from .corpus import DEFAULT_INCLUDE, CorpusIndex, MethodDecl, load_corpus
from .desugar import normalize_syntax
from .mining import (
    CATEGORIES,
    DEFAULT_MAX_PATTERN_LEN,
    DEFAULT_SIGMA,
    as_fraction,
    classify,
    mine_frequent,
)
from .normalize import (
    NormSeq,
    normalize_statement_exprs,
    normalize_variables,
    rename_callee,
    to_norm_seq,
    type_environment,
)
from .pdg import Pdg, pdg_from_statements, slice_pdg
from .usage import (
    DEFAULT_MIN_EXAMPLES,
    InsufficientExamples,
    UsageExample,
    collect_usage_examples,
    find_call_sites,
)

log = logging.getLogger(__name__)

SCHEMA = "clonemine.report/1"
_SELECTOR = re.compile(r"^(?:(?P<path>[^#]+)#)?(?P<name>[A-Za-z_$][\w$]*)/(?P<arity>\d+)$")


class ConfigError(ValueError):
    """Invalid configuration or target selector (usage error)."""


class TargetNotFound(LookupError):
    def __init__(self, selector: str, candidates=()):
        msg = f"target not found: {selector}"
        if candidates:
            msg += " (did you mean: " + ", ".join(candidates) + ")"
        super().__init__(msg)
        self.selector = selector
        self.candidates = list(candidates)


class AmbiguousTarget(LookupError):
    def __init__(self, selector: str, candidates):
        super().__init__(
            f"target {selector} matches {len(candidates)} methods; qualify it with a path: "
            + ", ".join(candidates)
        )
        self.candidates = list(candidates)


@dataclass(frozen=True)
class Config:
    corpus_root: str
    target: str
    include_globs: tuple[str, ...] = DEFAULT_INCLUDE
    sigma: Fraction = DEFAULT_SIGMA
    min_examples: int = DEFAULT_MIN_EXAMPLES
    min_clone_tokens: int = DEFAULT_MIN_TOKENS
    max_pattern_len: int = DEFAULT_MAX_PATTERN_LEN
    output_format: str = "json"
    dump_pdg: bool = False
    dump_seqs: bool = False
    use_clones: bool = True

    def __post_init__(self):
        object.__setattr__(self, "sigma", as_fraction(self.sigma))
        object.__setattr__(self, "include_globs", tuple(self.include_globs))
        if not 0 < self.sigma <= 1:
            raise ConfigError(f"sigma must be in (0, 1], got {self.sigma}")
        if self.min_examples < 1:
            raise ConfigError("min_examples must be at least 1")
        if self.min_clone_tokens < 0:
            raise ConfigError("min_clone_tokens must be non-negative")
        if self.max_pattern_len < 1:
            raise ConfigError("max_pattern_len must be at least 1")
        if self.output_format not in ("json", "text"):
            raise ConfigError(f"unknown output format {self.output_format!r}")
        parse_selector(self.target)

    def echo(self) -> dict:
        return {
            "corpus_root": self.corpus_root,
            "target": self.target,
            "include_globs": list(self.include_globs),
            "sigma": f"{self.sigma.numerator}/{self.sigma.denominator}",
            "min_examples": self.min_examples,
            "min_clone_tokens": self.min_clone_tokens,
            "max_pattern_len": self.max_pattern_len,
            "use_clones": self.use_clones,
            "example_counting": "per_call_site",
        }


@dataclass(frozen=True)
class ReportPattern:
    category: str
    support: Fraction
    items: tuple[str, ...]
    supporting_examples: tuple[str, ...]


@dataclass
class Report:
    target: dict
    clone_class: dict
    examples: dict
    patterns: list[ReportPattern] = field(default_factory=list)
    diagnostics: list[dict] = field(default_factory=list)
    config: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        patterns = sorted(self.patterns, key=lambda p: (-p.support, p.items))
        return {
            "schema": SCHEMA,
            "target": self.target,
            "clone_class": self.clone_class,
            "examples": self.examples,
            "patterns": [
                {
                    "category": p.category,
                    "support": float(p.support),
                    "support_ratio": [p.support.numerator, p.support.denominator],
                    "items": list(p.items),
                    "supporting_examples": sorted(p.supporting_examples),
                }
                for p in patterns
            ],
            "diagnostics": self.diagnostics,
            "config": self.config,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        patterns = [
            ReportPattern(
                p["category"],
                Fraction(*p["support_ratio"]),
                tuple(p["items"]),
                tuple(p["supporting_examples"]),
            )
            for p in data["patterns"]
        ]
        return cls(
            data["target"], data["clone_class"], data["examples"], patterns,
            data["diagnostics"], data["config"],
        )


def parse_selector(selector: str) -> tuple[str | None, str, int]:
    m = _SELECTOR.match(selector)
    if m is None:
        raise ConfigError(f"bad target selector {selector!r}; expected [path#]name/arity")
    return m.group("path"), m.group("name"), int(m.group("arity"))


def resolve_target(selector: str, corpus: CorpusIndex) -> MethodDecl:
    path, name, arity = parse_selector(selector)
    found = [m for m in corpus.lookup(name, arity) if path is None or m.path == path]
    if not found:
        known = sorted({f"{m.name}/{m.arity}" for m in corpus.methods.values()})
        close = difflib.get_close_matches(f"{name}/{arity}", known, n=5)
        raise TargetNotFound(selector, close)
    if len(found) > 1:
        raise AmbiguousTarget(selector, [f"{m.path}#{m.name}/{m.arity}" for m in found])
    return found[0]


def example_sequence(
    example: UsageExample, target_name: str, diagnostics: list[str] | None = None
) -> tuple[NormSeq, Pdg]:
    """Slice and normalize one usage example into its item sequence."""
    site = example.call_site
    stmts = normalize_syntax(example.statements, diagnostics)
    graph = pdg_from_statements(stmts)
    call_stmt = graph.find_call_statement(site.call_node.span)
    sliced = slice_pdg(graph, call_stmt)
    sliced = [
        rename_callee(s, site.call_node.span, target_name) if s.id == call_stmt.id else s
        for s in sliced
    ]
    sliced = normalize_variables(sliced, site, type_environment(example.caller))
    sliced = [normalize_statement_exprs(s) for s in sliced]
    return to_norm_seq(example.example_id, sliced, call_stmt.id), graph


def _target_info(m: MethodDecl) -> dict:
    return {
        "id": m.id,
        "name": m.name,
        "arity": m.arity,
        "path": m.path,
        "class": m.class_name,
        "params": [[n, t] for n, t in m.params],
        "return_type": m.return_type,
    }


def _clone_info(cc: CloneClass) -> dict:
    members = sorted(cc.members, key=lambda m: m.method_id)
    return {
        "fingerprint": cc.abstraction_fingerprint,
        "members": [asdict(m) for m in members],
        "counts": cc.counts(),
    }


def run(
    config: Config,
    corpus: CorpusIndex | None = None,
    dump: Callable[[str], object] | None = None,
) -> Report:
    """Run the whole pipeline for one target.

    Raises CorpusError, TargetNotFound or AmbiguousTarget on fatal corpus
    problems. Too few usage examples is not fatal: the report comes back with
    no patterns and an ``insufficient_examples`` diagnostic.
    """
    if corpus is None:
        corpus = load_corpus(config.corpus_root, config.include_globs)
    diagnostics: list[dict] = [
        {"kind": "parse_error", "message": f"{f.path}: {f.error}"} for f in corpus.errors
    ]
    target = resolve_target(config.target, corpus)
    index = CloneIndex(corpus, config.min_clone_tokens)
    cc = index.detect(target)
    if not config.use_clones:
        cc = CloneClass(cc.target_id, (), cc.abstraction_fingerprint)
    log.info("clone class of %s: %d members", target.id, len(cc.members))

    sites = find_call_sites(cc, corpus)
    report = Report(
        target=_target_info(target),
        clone_class=_clone_info(cc),
        examples={"counting": "per_call_site", "raw": len(sites), "deduped": 0, "ids": []},
        diagnostics=diagnostics,
        config=config.echo(),
    )
    try:
        examples = collect_usage_examples(sites, corpus, config.min_examples)
    except InsufficientExamples as exc:
        report.examples["deduped"] = exc.count
        report.examples["ids"] = [e.example_id for e in exc.examples]
        report.diagnostics.append({"kind": "insufficient_examples", "message": str(exc)})
        return report
    report.examples["deduped"] = len(examples)
    report.examples["ids"] = [e.example_id for e in examples]

    cluster = []
    syntax_notes: list[str] = []
    for example in examples:
        seq, graph = example_sequence(example, target.name, syntax_notes)
        cluster.append(seq)
        if dump is not None and config.dump_pdg:
            dump(f"# pdg {example.example_id}\n{graph.to_text()}")
        if dump is not None and config.dump_seqs:
            dump(seq.to_text())
    for note in dict.fromkeys(syntax_notes):
        report.diagnostics.append({"kind": "syntax_normalization", "message": note})

    call_items = frozenset(s.call_item.text for s in cluster)
    mined = mine_frequent(cluster, config.sigma, config.max_pattern_len, call_items)
    report.patterns = [
        ReportPattern(classify(p, call_items), p.support, p.texts(), p.supporting_examples)
        for p in mined
    ]
    if not mined:
        report.diagnostics.append(
            {"kind": "no_patterns", "message": "no pattern above threshold"}
        )
    return report


def render(report: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "text":
        return _render_text(report).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(data: bytes | str) -> Report:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return Report.from_dict(json.loads(data))


def _render_text(report: Report) -> str:
    t = report.target
    cc = report.clone_class
    lines = [
        f"target: {t['name']}/{t['arity']} ({t['path']})",
        f"clones: {cc['counts']['type1']} type-1, {cc['counts']['type2']} type-2",
        f"usage examples: {report.examples['raw']} call sites, {report.examples['deduped']} distinct",
    ]
    by_cat: dict[str, list[ReportPattern]] = {}
    for p in sorted(report.patterns, key=lambda p: (-p.support, p.items)):
        by_cat.setdefault(p.category, []).append(p)
    if not report.patterns:
        lines.append("patterns: none")
    for cat in CATEGORIES:
        if cat not in by_cat:
            continue
        lines.append("")
        lines.append(f"[{cat}]")
        for p in by_cat[cat]:
            lines.append(
                f"  support {float(p.support):.2f}"
                f" ({len(p.supporting_examples)}/{report.examples['deduped']} examples)"
            )
            lines.extend(f"    {item}" for item in p.items)
    if report.diagnostics:
        lines.append("")
        lines.append("diagnostics:")
        lines.extend(f"  {d['kind']}: {d['message']}" for d in report.diagnostics)
    return "\n".join(lines) + "\n"
