"""From one caller to one item sequence.

The caller below mixes relevant and irrelevant statements. The steps are:
desugar the loop, build the dependence graph, keep the one-hop
neighbourhood of the call, then normalize variables and operands.

    python3 walkthroughs/02_slice_and_normalize.py
"""

from clonemine import corpus_from_sources
from clonemine.clones import detect_clones
from clonemine.desugar import normalize_syntax
from clonemine.pdg import pdg_from_statements, slice_pdg
from clonemine.pipeline import example_sequence
from clonemine.render import unparse
from clonemine.usage import collect_usage_examples, find_call_sites

sources = {
    "lib/Graph.java": """class Graph {
        byte[] image(File dot, String type) { return run(dot, type, "dot"); }
    }""",
    "app/Page.java": """class Page {
        void show(String src, Logger log) {
            int tries = 0;
            for (int i = 0; i < 3; i++) { tries++; }
            log.info("start");
            File out = write(src);
            byte[] img = null;
            if (null != out) {
                img = new Graph().image(out, "png");
            }
            render(img);
        }
    }""",
}

corpus = corpus_from_sources(sources)
target = corpus.lookup("image", 2)[0]
[example] = collect_usage_examples(
    find_call_sites(detect_clones(target, corpus), corpus), corpus, min_examples=1
)

print("desugared caller body:")
for stmt in normalize_syntax(example.statements):
    print("  " + unparse(stmt))

graph = pdg_from_statements(normalize_syntax(example.statements))
print("\ndependence graph:")
print(graph.to_text())

call = graph.find_call_statement(example.call_site.call_node.span)
print("one-hop slice around the call:")
for stmt in slice_pdg(graph, call):
    print(f"  [{stmt.id}] {stmt.text()}")

seq, _ = example_sequence(example, target.name)
print("\nnormalized item sequence (the call is marked with *):")
for i, text in enumerate(seq.texts()):
    print(f"  {'*' if i == seq.call_index else ' '} {text}")
