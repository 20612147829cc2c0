"""Run the whole theorem suite on every ring of size at most 16."""
from npure import suite

corpus = suite.build_corpus(16)
print(f"{len(corpus)} rings, first few: {[str(s) for s in corpus[:5]]}")
report = suite.run_suite(corpus, suite.SuiteConfig(max_ring_size=16))
print(suite.summary_table(report))
print("failures:", len(report["totals"]["failures"]))
