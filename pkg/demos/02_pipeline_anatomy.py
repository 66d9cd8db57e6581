"""Walk one verse through the text pipeline.

Tokens keep exact character spans; stop words are flagged, not removed;
stems collapse inflectional variants; strength separates informative stems
from ubiquitous ones.
"""

from palimpsest import TextPipeline, VocabularyStats, classify_strength
from palimpsest.fixtures import FIXTURE_PAIRS

pipeline = TextPipeline("fr")

verse_a = "Ses rides sur son front ont gravé ses exploits."
verse_b = "Ses rides sur son front gravaient tous ses exploits."

for verse in (verse_a, verse_b):
    doc = pipeline.process(verse)
    print(verse)
    for t in doc.tokens:
        role = "stop" if t.is_stop else "content"
        print(f"  {t.span[0]:3d}..{t.span[1]:<3d} {t.surface:12} {role:8} stem={t.stem}")
    print(f"  content stream: {doc.content_stems}\n")

print("the inflection change gravé/gravaient lands on one stem:",
      pipeline.stem("gravé"), "==", pipeline.stem("gravaient"))

stats = VocabularyStats()
for pair in FIXTURE_PAIRS:
    for fixture_doc in (pair.a, pair.b):
        stats.add_document(pipeline.process(fixture_doc.text).content_stems)
strength = classify_strength(stats)
sample = ["rid", "front", "grav", "exploit"]
print("\nstrength over the demo corpus (rare stems stay STRONG):")
for stem in sample:
    print(f"  {stem:10} df={stats.doc_freq.get(stem, 0)}/{stats.doc_count}"
          f"  freq={stats.total_freq.get(stem, 0)}  -> {strength[stem].value}")
