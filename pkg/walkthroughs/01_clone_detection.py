"""Clone detection on a small in-memory corpus.

Three methods share one body shape. `render` is the target, `renderCopy` is a
verbatim copy (Type-1), and `draw` renames every identifier and literal
(Type-2). `drawTwice` adds a statement (Type-3), so it falls out of the
clone class. Callers of all three clones count as usage examples of the
target.

    python3 walkthroughs/01_clone_detection.py
"""

from clonemine import corpus_from_sources
from clonemine.clones import abstract_tokens, detect_clones
from clonemine.corpus import body_tokens
from clonemine.usage import find_call_sites

BODY = """{
        File f = writeSource(src);
        byte[] out = null;
        if (f != null) { out = convert(f, "png"); f.delete(); }
        return out;
    }"""

sources = {
    "a/Renderer.java": f"class Renderer {{ byte[] render(String src) {BODY} }}",
    "b/OldRenderer.java": f"class OldRenderer {{ byte[] renderCopy(String src) {BODY} }}",
    "c/Painter.java": """class Painter { byte[] draw(String text) {
        File tmp = dumpText(text);
        byte[] img = null;
        if (tmp != null) { img = transform(tmp, "gif"); tmp.delete(); }
        return img;
    } }""",
    "d/Painter2.java": """class Painter2 { byte[] drawTwice(String text) {
        File tmp = dumpText(text);
        byte[] img = null;
        if (tmp != null) { img = transform(tmp, "gif"); img = transform(tmp, "gif"); }
        return img;
    } }""",
    "e/Page.java": """class Page {
        void show(String s) { byte[] b = new Painter().draw(s); emit(b); }
        void keep(String s) { byte[] b = new OldRenderer().renderCopy(s); save(b); }
    }""",
}

corpus = corpus_from_sources(sources)
target = corpus.lookup("render", 1)[0]

print("abstracted target body:")
print("  " + " ".join(abstract_tokens(body_tokens(target)).texts()))

cc = detect_clones(target, corpus)
print(f"\nclone class of {target.id}: {cc.counts()}")
for m in cc.members:
    print(f"  {m.clone_type}: {m.method_id}")

print("\ncall sites reaching the clone class:")
for site in find_call_sites(cc, corpus):
    print(f"  {site.caller_id} -> {site.callee_member_id} (result in {site.assigned_to})")
