"""
The verification harness
========================

Corpus-level checking of every bound, extractor, and oracle claim, the
reproducible instance corpus, and fault injection as a self-test of
the harness itself.
"""

import json
import pathlib
import tempfile
from dataclasses import replace

from kindep import (
    VerifyConfig,
    build_random_corpus,
    corpus_instance,
    parse_hg,
    run_verify,
)

# A scaled-down configuration keeps this demo quick; the default
# VerifyConfig() is the full corpus the acceptance tests run.
cfg = VerifyConfig(
    exhaustive_n=4,
    exhaustive_k=(0, 1),
    random_count=40,
    random_n_max=10,
    replication_count=5,
    replication_n_max=6,
)

# Every random instance is derived from the master seed and its index,
# so a corpus is fully reproducible from the config alone.
corpus = build_random_corpus(cfg)
inst = corpus[7]
assert corpus_instance(cfg, "r7").h == inst.h
print(f"instance r7: n={inst.h.n} m={inst.h.e} s={inst.h.s} k={inst.k} "
      f"(rebuilt bit-for-bit from the config)")

work = pathlib.Path(tempfile.mkdtemp(prefix="kindep_demo_"))

# A clean run: seven checks, zero violations, and a report with no
# timings or floats, so the same config gives identical bytes anywhere.
outcome = run_verify(cfg, out_dir=str(work / "clean"))
print("\n--- clean run ---")
print(outcome.report_text, end="")

again = run_verify(cfg, out_dir=str(work / "clean2"))
assert again.report_text == outcome.report_text
print("(re-run report is byte-identical)")

# Fault injection deliberately overstates every bound ceiling by one.
# The harness must catch its own corruption: the run fails and each
# violation is dumped as an .hg file plus a JSON diagnosis.
faulty = replace(cfg, fault_injection="overclaim-bounds")
broken = run_verify(faulty, out_dir=str(work / "faulty"))
print("\n--- fault-injected run ---")
print(f"passed: {broken.passed}   dumps: {len(broken.dumps)}")

stem = broken.dumps[0]
diagnosis = json.loads((work / "faulty" / f"{stem}.json").read_text())
dumped = parse_hg((work / "faulty" / f"{stem}.hg").read_text())
print(f"first counterexample: {stem}")
print(f"  claimed bound {diagnosis['detail']['bound']} "
      f"ceiled to {diagnosis['detail']['ceiled']} "
      f"but alpha = {diagnosis['detail']['alpha']}")

# The dump names the corpus instance it came from, and rebuilding that
# instance from the config reproduces the dumped hypergraph exactly.
rebuilt = corpus_instance(faulty, diagnosis["instance"])
assert rebuilt.h == dumped
print(f"  instance {diagnosis['instance']} rebuilt from config: matches the dump")
