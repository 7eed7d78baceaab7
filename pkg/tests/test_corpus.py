import pytest

from clonemine.corpus import CorpusError, body_tokens, corpus_from_sources, load_corpus, tokenize_method


def test_load_fixture_corpus_sorted_and_clean(fixtures_dir):
    corpus = load_corpus(fixtures_dir / "condition_check")
    paths = list(corpus.files)
    assert paths == sorted(paths)
    assert corpus.errors == []
    [m] = corpus.lookup("get_img_stream", 3)
    assert m.path == "graphviz/GraphViz.java"
    assert m.params[0] == ("dot", "File")
    assert m.id.startswith("graphviz/GraphViz.java#GraphViz.get_img_stream/3:")


def test_bad_file_is_recorded_not_fatal(tmp_path):
    (tmp_path / "Good.java").write_text("class Good { void f() { g(); } }")
    (tmp_path / "Bad.java").write_text("class Bad { void f() { g(); }")
    (tmp_path / "Latin.java").write_bytes(b"class L { String s = \"\xe9\"; }")
    corpus = load_corpus(tmp_path)
    assert {f.path for f in corpus.errors} == {"Bad.java", "Latin.java"}
    assert [m.name for m in corpus.methods.values()] == ["f"]


def test_unreadable_root():
    with pytest.raises(CorpusError):
        load_corpus("/definitely/not/here")


def test_include_globs(tmp_path):
    (tmp_path / "a").mkdir()
    (tmp_path / "a" / "X.java").write_text("class X { void f() {} }")
    (tmp_path / "Y.java").write_text("class Y { void g() {} }")
    corpus = load_corpus(tmp_path, include=("a/*.java",))
    assert list(corpus.files) == ["a/X.java"]


def test_overloads_get_distinct_ids():
    corpus = corpus_from_sources({"O.java": "class O { void f(int a) {} void f(String a) {} void f() {} }"})
    ids = sorted(corpus.methods)
    assert len(ids) == 3 and len(set(ids)) == 3


def test_token_views():
    corpus = corpus_from_sources({"T.java": "class T { int f(int a) { return a + 1; } }"})
    [m] = corpus.methods.values()
    assert body_tokens(m).texts() == ("{", "return", "a", "+", "1", ";", "}")
    assert tokenize_method(m).texts()[:3] == ("int", "f", "(")
    assert m.fields == {}
