"""Mine usage patterns of a Java method from the callers of it and its code clones."""

from .clones import CloneClass, CloneIndex, CloneMember, detect_clones
from .corpus import CorpusError, CorpusIndex, MethodDecl, SourceFile, corpus_from_sources, load_corpus
from .desugar import normalize_syntax
from .mining import UsagePattern, classify, filter_maximal, mine_frequent, support
from .normalize import NormSeq, NormStatement
from .pdg import Pdg, Statement, build_pdg, pdg_from_statements, slice_pdg
from .pipeline import (
    AmbiguousTarget,
    Config,
    ConfigError,
    Report,
    ReportPattern,
    TargetNotFound,
    parse_report,
    render,
    run,
)
from .usage import CallSite, InsufficientExamples, UsageExample, collect_usage_examples, find_call_sites

__all__ = [
    "AmbiguousTarget", "CallSite", "CloneClass", "CloneIndex", "CloneMember", "Config",
    "ConfigError", "CorpusError", "CorpusIndex", "InsufficientExamples", "MethodDecl",
    "NormSeq", "NormStatement", "Pdg", "Report", "ReportPattern", "SourceFile", "Statement",
    "TargetNotFound", "UsageExample", "UsagePattern", "build_pdg", "classify",
    "collect_usage_examples", "corpus_from_sources", "detect_clones", "filter_maximal", "find_call_sites",
    "load_corpus", "mine_frequent", "normalize_syntax", "parse_report", "pdg_from_statements", "render", "run",
    "slice_pdg", "support",
]
