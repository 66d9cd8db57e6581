"""Gapped windows and hole-insensitive fingerprints.

A window anchors at a content word and combines it with following words,
allowing holes. Fingerprints hash the chosen stems only, so the same words
picked across different spacings collide on purpose: that is what lets an
inserted word ("tous") leave the match intact.
"""

from palimpsest import TextPipeline, enumerate_windows, fingerprint, total_window_count

pipeline = TextPipeline("fr")

print("the six member sets of a 3-word window with up to 2 holes over M1..M5:")
for w in enumerate_windows(["M1", "M2", "M3", "M4", "M5"], 3, 2):
    if w.anchor == 0:
        print(f"  members={w.members} stems={'·'.join(w.stems)}")

verse_a = "Ses rides sur son front ont gravé ses exploits."
verse_b = "Ses rides sur son front gravaient tous ses exploits."
stems_a = pipeline.process(verse_a).content_stems
stems_b = pipeline.process(verse_b).content_stems
print(f"\ncontent stems A: {stems_a}")
print(f"content stems B: {stems_b}  (note the extra 'tous')")

prints_a = {w.stems: fingerprint(w) for w in enumerate_windows(stems_a, 3, 2)}
prints_b = {w.stems: fingerprint(w) for w in enumerate_windows(stems_b, 3, 2)}
shared = sorted(set(prints_a) & set(prints_b))
print(f"\nshared fingerprints despite the insertion ({len(shared)}):")
for stems in shared:
    print(f"  {'·'.join(stems):30} -> {prints_a[stems]:016x}")

print("\nwindow counts follow the closed form: for 100 content words,")
for n_w, n_h in [(3, 0), (3, 2), (4, 3)]:
    n = total_window_count(100, n_w, n_h)
    print(f"  n_w={n_w} n_h={n_h}: {n} windows")
