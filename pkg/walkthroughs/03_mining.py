"""Frequent subsequence mining on hand-written item sequences.

Nine of ten sequences guard the call with a null check and one does not.
At a threshold of 0.9 the guarded pattern survives. At 0.95 only the call
and its setup remain.

    python3 walkthroughs/03_mining.py
"""

from clonemine.mining import classify, mine_frequent, support
from clonemine.normalize import NormSeq, NormStatement

CALL = "ref = get(arg0)"


def item(text):
    keywords = {"call"} if "(" in text and not text.startswith("if") else set()
    if text.startswith("if"):
        keywords.add("if")
    return NormStatement(text, "stmt", frozenset(keywords))


def seq(example_id, texts):
    items = tuple(item(t) for t in texts)
    return NormSeq(example_id, items, texts.index(CALL))


guarded = ["arg0 = open(String)", "if (arg0 != null)", CALL]
cluster = [seq(f"ex{i}", guarded + (["log(ref)"] if i % 2 else [])) for i in range(9)]
cluster.append(seq("ex9", ["arg0 = open(String)", CALL]))

print("support of the guarded pattern:", support(guarded, cluster))
for sigma in ("0.9", "0.95"):
    print(f"\nsigma = {sigma}")
    for p in mine_frequent(cluster, sigma):
        category = classify(p, frozenset({CALL}))
        print(f"  {p.support} [{category}] {' ; '.join(p.texts())}")
