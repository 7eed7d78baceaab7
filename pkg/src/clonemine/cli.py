"""Command line entry point: ``clonemine mine --corpus DIR --target SEL``."""

from __future__ import annotations

import argparse
import logging
import os
import sys

from .clones import DEFAULT_MIN_TOKENS
from .corpus import DEFAULT_INCLUDE, CorpusError
from .mining import DEFAULT_MAX_PATTERN_LEN, DEFAULT_SIGMA
from .pipeline import AmbiguousTarget, Config, ConfigError, TargetNotFound, render, run
from .usage import DEFAULT_MIN_EXAMPLES

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CORPUS = 2
LOG_ENV = "CLONEMINE_LOG_LEVEL"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="clonemine", description="Mine usage patterns of a Java method and its clones.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    mine = sub.add_parser("mine", help="mine usage patterns for one target method")
    mine.add_argument("--corpus", required=True, help="root directory of the Java corpus")
    mine.add_argument("--target", required=True, help="method selector, [path#]name/arity")
    mine.add_argument("--sigma", default=str(float(DEFAULT_SIGMA)), help="support threshold in (0, 1]")
    mine.add_argument("--min-examples", type=int, default=DEFAULT_MIN_EXAMPLES)
    mine.add_argument("--min-clone-tokens", type=int, default=DEFAULT_MIN_TOKENS)
    mine.add_argument("--max-pattern-len", type=int, default=DEFAULT_MAX_PATTERN_LEN)
    mine.add_argument("--format", choices=("json", "text"), default="json")
    mine.add_argument("--dump-pdg", action="store_true", help="write each example's PDG to stderr")
    mine.add_argument("--dump-seqs", action="store_true", help="write each normalized sequence to stderr")
    mine.add_argument("--no-clones", action="store_true", help="collect callers of the target only")
    mine.add_argument(
        "--include", action="append", metavar="GLOB",
        help=f"file glob relative to the corpus root (repeatable, default {DEFAULT_INCLUDE[0]})",
    )
    mine.add_argument("--out", help="write the report here instead of stdout")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, os.environ.get(LOG_ENV, "WARNING").upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = Config(
            corpus_root=args.corpus,
            target=args.target,
            include_globs=tuple(args.include or DEFAULT_INCLUDE),
            sigma=args.sigma,
            min_examples=args.min_examples,
            min_clone_tokens=args.min_clone_tokens,
            max_pattern_len=args.max_pattern_len,
            output_format=args.format,
            dump_pdg=args.dump_pdg,
            dump_seqs=args.dump_seqs,
            use_clones=not args.no_clones,
        )
    except (ConfigError, ValueError, ZeroDivisionError) as exc:
        print(f"clonemine: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run(config, dump=sys.stderr.write)
    except (CorpusError, TargetNotFound, AmbiguousTarget) as exc:
        print(f"clonemine: {exc}", file=sys.stderr)
        return EXIT_CORPUS
    data = render(report, config.output_format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
