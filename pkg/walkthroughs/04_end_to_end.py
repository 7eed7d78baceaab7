"""The whole pipeline on the bundled condition-check fixture.

Direct callers of the target alone are too few to mine. Adding the callers of
its clones brings the example count above the minimum, and the null-check
pattern appears.

    python3 walkthroughs/04_end_to_end.py
"""

from pathlib import Path

from clonemine.pipeline import Config, render, run

ROOT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "condition_check"

for use_clones in (False, True):
    report = run(Config(str(ROOT), "get_img_stream/3", use_clones=use_clones))
    print(f"=== use_clones={use_clones}")
    print(render(report, "text").decode())
