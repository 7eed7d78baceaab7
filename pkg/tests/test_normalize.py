from dataclasses import replace

import pytest
from generators import COMMUTATIVE, MIRROR_PAIRS, OPERANDS

from clonemine.clones import detect_clones
from clonemine.corpus import corpus_from_sources, load_corpus
from clonemine.desugar import normalize_syntax
from clonemine.normalize import (
    NormSeq,
    NormStatement,
    normalize_expr,
    normalize_statement_exprs,
    normalize_variables,
    strip_packages,
    type_environment,
)
from clonemine.parser import parse_expression
from clonemine.pdg import pdg_from_statements, slice_pdg
from clonemine.pipeline import example_sequence, resolve_target
from clonemine.render import expr_text
from clonemine.usage import collect_usage_examples, find_call_sites

FIXTURES = {
    "condition_check": "get_img_stream/3",
    "iteration": "csv/CSVReader.java#readNext/0",
    "error_handling": "encodeBytes/4",
    "co_occurrence": "openBrace/0",
}


def norm(src):
    return expr_text(normalize_expr(parse_expression(src)))


def test_commutative_swap_grid():
    cases = 0
    for op in COMMUTATIVE:
        for a in OPERANDS:
            for b in OPERANDS:
                assert norm(f"{a} {op} {b}") == norm(f"{b} {op} {a}"), (a, op, b)
                cases += 1
    assert cases >= 1000


def test_mirror_grid():
    for op, mirror in MIRROR_PAIRS:
        for a in OPERANDS:
            for b in OPERANDS:
                assert norm(f"{a} {op} {b}") == norm(f"{b} {mirror} {a}"), (a, op, b)


def test_non_commutative_ops_untouched():
    assert norm("b - a") == "b - a"
    assert norm("b / a") == "b / a"
    assert norm('name + ": " + value') == 'name + ": " + value'


def test_nested_reordering():
    assert norm("x == (z * y)") == "(y * z) == x"
    assert norm("null != dot") == "dot != null"


def _sites(corpus, selector):
    target = resolve_target(selector, corpus)
    cc = detect_clones(target, corpus)
    return target, collect_usage_examples(find_call_sites(cc, corpus), corpus)


def test_variable_rules_on_snippet():
    corpus = corpus_from_sources({
        "G.java": "class G { byte[] get_img_stream(File d, String t, String r) { int a = 1; a = a + 1; return null; } }",
        "U.java": """class U { File dot; byte[] img_stream; void use(String dotSource, String type, String representationType) {
            dot = writeDotSourceToFile(dotSource);
            if (dot != null) { img_stream = get_img_stream(dot, type, representationType); }
        } }""",
    })
    target = resolve_target("get_img_stream/3", corpus)
    sites = find_call_sites(detect_clones(target, corpus), corpus)
    examples = collect_usage_examples(sites, corpus, min_examples=1)
    seq, _ = example_sequence(examples[0], target.name)
    assert seq.texts() == (
        "arg0 = writeDotSourceToFile(String)",
        "if (arg0 != null)",
        "ref = get_img_stream(arg0, arg1, arg2)",
    )
    assert seq.call_index == 2


def test_qualified_names_and_package_stripping():
    assert strip_packages("java.util.Map<java.lang.String, java.io.File[]>") == "Map<String, File[]>"
    corpus = corpus_from_sources({
        "T.java": "class T { void target(Object o) { int k = 0; k++; k--; } }",
        "U.java": """class U { void u(java.io.File f, java.util.List<String> names) {
            target(f);
            java.nio.file.Files.write(f.toPath(), names);
            count = names.size();
        } }""",
    })
    target = resolve_target("target/1", corpus)
    ex = collect_usage_examples(find_call_sites(detect_clones(target, corpus), corpus), corpus, 1)[0]
    stmts = normalize_syntax(ex.statements)
    g = pdg_from_statements(stmts)
    sliced = normalize_variables(list(g.nodes), ex.call_site, type_environment(ex.caller))
    assert [s.text() for s in sliced] == [
        "target(arg0)",
        "java.nio.file.Files.write(arg0.toPath(), List<String>)",
        "var = List<String>.size()",
    ]


def _fixture_slices(name, selector, fixtures_dir):
    corpus = load_corpus(fixtures_dir / name)
    target, examples = _sites(corpus, selector)
    for ex in examples:
        g = pdg_from_statements(normalize_syntax(ex.statements))
        call = g.find_call_statement(ex.call_site.call_node.span)
        yield ex, slice_pdg(g, call)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_idempotent_on_fixture_statements(name, fixtures_dir):
    count = 0
    for ex, sliced in _fixture_slices(name, FIXTURES[name], fixtures_dir):
        types = type_environment(ex.caller)
        once = [normalize_statement_exprs(s) for s in normalize_variables(sliced, ex.call_site, types)]
        twice = [normalize_statement_exprs(s) for s in normalize_variables(once, ex.call_site, types)]
        assert [s.text() for s in once] == [s.text() for s in twice]
        count += len(once)
    assert count > 20


def test_norm_seq_invariants():
    call = NormStatement("ref = f(arg0)", "assign", frozenset({"call"}))
    plain = NormStatement("if (arg0 != null)", "predicate", frozenset({"if"}))
    seq = NormSeq("e1", (plain, call), 1)
    assert seq.call_item == call
    assert seq.to_text() == "# example e1\n# call_index 1\nif (arg0 != null)\nref = f(arg0)\n"
    with pytest.raises(ValueError):
        NormSeq("e1", (plain, call), 0)
    with pytest.raises(ValueError):
        NormSeq("e1", (plain,), 3)
    assert NormStatement("x", "a", frozenset()) == NormStatement("x", "b", frozenset({"if"}))
