"""Score the detector across the full parameter grid against gold spans.

Recall climbs with extra holes (distorted reuses come back) and falls with
larger windows (long exact runs get rare); precision stays high on this
corpus. The best-F cell is the operating point a scholar would start from.
"""

import sys
import tempfile

from palimpsest import CorpusStore, TextPipeline, parameter_sweep, render_sweep_tables
from palimpsest.evaluate import write_sweep_csv
from palimpsest.fixtures import fixture_gold, install_fixture_corpus

store = CorpusStore(tempfile.mkdtemp(prefix="palimpsest-demo-"))
corpus = install_fixture_corpus(store, "demo")
gold = fixture_gold(corpus)
print(f"{len(gold)} gold spans ({sum(g.questionable for g in gold)} questionable, excluded)\n")

result = parameter_sweep(
    corpus, TextPipeline("fr"), gold, n_w_values=range(1, 7), n_h_values=range(0, 6)
)
print(render_sweep_tables(result))
write_sweep_csv(result, sys.stdout)
