"""Scoring detector output against gold annotations.

A gold span counts as retrieved when some block overlaps it on both axes by
at least a fraction theta of the gold extent; a block counts as spurious
when it overlaps no gold span at all. Questionable annotations are excluded
entirely: they are never retrieved, never missed, and blocks landing only on
them are not spurious. F uses the standard weighted harmonic mean with
beta = 0.5, which weights precision over recall.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence, TextIO, Union

from .corpus import Corpus
from .detect import ReuseBlock, detect_pair
from .index import build_index
from .pipeline import TextPipeline
from .windows import DetectionParams

DEFAULT_OVERLAP_THETA = 0.1
DEFAULT_BETA = 0.5

ND = "nd"  # rendering for undefined ratios


@dataclass(frozen=True)
class GoldSpan:
    doc_a: str
    doc_b: str
    a_span: tuple[int, int]
    b_span: tuple[int, int]
    label: str = ""
    questionable: bool = False


@dataclass
class Metrics:
    true_positives: int
    false_positives: int
    false_negatives: int
    beta: float = DEFAULT_BETA
    precision: Optional[float] = field(init=False)
    recall: Optional[float] = field(init=False)
    f_score: Optional[float] = field(init=False)

    def __post_init__(self):
        tp, fp, fn = self.true_positives, self.false_positives, self.false_negatives
        self.precision = tp / (tp + fp) if tp + fp else None
        self.recall = tp / (tp + fn) if tp + fn else None
        self.f_score = f_beta(self.precision, self.recall, self.beta)


def f_beta(
    precision: Optional[float], recall: Optional[float], beta: float = DEFAULT_BETA
) -> Optional[float]:
    """Standard weighted F: (1 + beta^2) P R / (beta^2 P + R).

    Undefined inputs propagate (None in, None out); P = R = 0 gives 0.
    """
    if precision is None or recall is None:
        return None
    if precision == 0.0 and recall == 0.0:
        return 0.0
    b2 = beta * beta
    return (1.0 + b2) * precision * recall / (b2 * precision + recall)


def _overlap(x: tuple[int, int], y: tuple[int, int]) -> int:
    return max(0, min(x[1], y[1]) - max(x[0], y[0]))


def _retrieves(block: ReuseBlock, gold: GoldSpan, theta: float) -> bool:
    """Both-axis overlap of at least theta, relative to the gold extent."""
    ga = max(1, gold.a_span[1] - gold.a_span[0])
    gb = max(1, gold.b_span[1] - gold.b_span[0])
    return (
        _overlap(block.a_span, gold.a_span) / ga >= theta
        and _overlap(block.b_span, gold.b_span) / gb >= theta
    )


def _touches(block: ReuseBlock, gold: GoldSpan) -> bool:
    """Any overlap at all on both axes; a block touching gold is not spurious."""
    return (
        _overlap(block.a_span, gold.a_span) > 0
        and _overlap(block.b_span, gold.b_span) > 0
    )


def match_gold(
    blocks: Sequence[ReuseBlock],
    gold: Sequence[GoldSpan],
    theta: float = DEFAULT_OVERLAP_THETA,
    beta: float = DEFAULT_BETA,
) -> Metrics:
    """Count (TP, FP, FN) for one document pair's blocks against its gold.

    Order-insensitive in both arguments.
    """
    pairs = {(b.doc_a, b.doc_b) for b in blocks} | {(g.doc_a, g.doc_b) for g in gold}
    if len(pairs) > 1:
        raise ValueError(f"blocks and gold must cover one document pair, got {sorted(pairs)}")
    real = [g for g in gold if not g.questionable]
    questionable = [g for g in gold if g.questionable]
    retrieved = sum(1 for g in real if any(_retrieves(b, g, theta) for b in blocks))
    spurious = sum(
        1 for b in blocks if not any(_touches(b, g) for g in real + questionable)
    )
    return Metrics(
        true_positives=retrieved,
        false_positives=spurious,
        false_negatives=len(real) - retrieved,
        beta=beta,
    )


def combine_pair_counts(per_pair: Iterable[Metrics], beta: float = DEFAULT_BETA) -> Metrics:
    tp = fp = fn = 0
    for m in per_pair:
        tp += m.true_positives
        fp += m.false_positives
        fn += m.false_negatives
    return Metrics(true_positives=tp, false_positives=fp, false_negatives=fn, beta=beta)


# ---------------------------------------------------------------------------
# Gold file IO: JSON lines.
# ---------------------------------------------------------------------------

def load_gold(path: Union[str, Path]) -> list[GoldSpan]:
    spans = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                spans.append(
                    GoldSpan(
                        doc_a=rec["doc_a"],
                        doc_b=rec["doc_b"],
                        a_span=(rec["a_start"], rec["a_end"]),
                        b_span=(rec["b_start"], rec["b_end"]),
                        label=rec.get("label", ""),
                        questionable=bool(rec.get("questionable", False)),
                    )
                )
            except (json.JSONDecodeError, KeyError) as exc:
                raise ValueError(f"{path}:{lineno}: bad gold record: {exc}") from exc
    return spans


def save_gold(spans: Iterable[GoldSpan], path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for g in spans:
            fh.write(
                json.dumps(
                    {
                        "doc_a": g.doc_a,
                        "doc_b": g.doc_b,
                        "a_start": g.a_span[0],
                        "a_end": g.a_span[1],
                        "b_start": g.b_span[0],
                        "b_end": g.b_span[1],
                        "label": g.label,
                        "questionable": g.questionable,
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )


def validate_gold(gold: Sequence[GoldSpan], corpus: Corpus) -> None:
    known = set(corpus.doc_ids())
    for g in gold:
        for doc in (g.doc_a, g.doc_b):
            if doc not in known:
                raise ValueError(f"gold span references unknown document {doc!r}")


# ---------------------------------------------------------------------------
# Parameter sweep.
# ---------------------------------------------------------------------------

@dataclass
class SweepCell:
    n_w: int
    n_h: int
    metrics: Metrics


@dataclass
class SweepResult:
    cells: list[SweepCell]

    def best(self) -> Optional[SweepCell]:
        scored = [c for c in self.cells if c.metrics.f_score is not None]
        if not scored:
            return None
        return max(scored, key=lambda c: (c.metrics.f_score, -c.n_w, -c.n_h))

    def cell(self, n_w: int, n_h: int) -> SweepCell:
        for c in self.cells:
            if (c.n_w, c.n_h) == (n_w, n_h):
                return c
        raise KeyError((n_w, n_h))


def parameter_sweep(
    corpus: Corpus,
    pipeline: TextPipeline,
    gold: Sequence[GoldSpan],
    n_w_values: Sequence[int],
    n_h_values: Sequence[int],
    base_params: Optional[DetectionParams] = None,
    theta: float = DEFAULT_OVERLAP_THETA,
    beta: float = DEFAULT_BETA,
) -> SweepResult:
    """Re-run the full pipeline per grid cell and score it against gold.

    Evaluates every document pair the gold file mentions; counts are summed
    over pairs before computing the cell's ratios.
    """
    validate_gold(gold, corpus)
    base = base_params or DetectionParams()
    doc_pairs = sorted({(g.doc_a, g.doc_b) for g in gold})
    cells = []
    for n_w in n_w_values:
        for n_h in n_h_values:
            params = DetectionParams(
                n_w=n_w, n_h=n_h, s_min=base.s_min, splice_gap=base.splice_gap
            )
            index = build_index(corpus, pipeline, params)
            per_pair = []
            for doc_a, doc_b in doc_pairs:
                report = detect_pair(index, doc_a, doc_b, params)
                pair_gold = [g for g in gold if (g.doc_a, g.doc_b) == (doc_a, doc_b)]
                per_pair.append(match_gold(report.blocks, pair_gold, theta, beta))
            cells.append(
                SweepCell(n_w=n_w, n_h=n_h, metrics=combine_pair_counts(per_pair, beta))
            )
    return SweepResult(cells=cells)


def _fmt(value: Optional[float]) -> str:
    return ND if value is None else f"{value:.2f}"


def render_sweep_tables(result: SweepResult) -> str:
    """Three sub-tables (recall, precision, F-score), one row per n_h."""
    n_ws = sorted({c.n_w for c in result.cells})
    n_hs = sorted({c.n_h for c in result.cells})
    sections = (
        ("Recall", lambda m: m.recall),
        ("Precis.", lambda m: m.precision),
        ("F-score", lambda m: m.f_score),
    )
    lines = []
    for title, pick in sections:
        lines.append("\t".join([title] + [f"n_w={w}" for w in n_ws]))
        for h in n_hs:
            row = [f"n_h={h}"]
            for w in n_ws:
                row.append(_fmt(pick(result.cell(w, h).metrics)))
            lines.append("\t".join(row))
        lines.append("")
    best = result.best()
    if best is not None:
        lines.append(
            f"best F = {_fmt(best.metrics.f_score)} at n_w={best.n_w}, n_h={best.n_h}"
        )
    return "\n".join(lines) + "\n"


def write_sweep_csv(result: SweepResult, out: TextIO) -> None:
    writer = csv.writer(out)
    writer.writerow(["n_w", "n_h", "TP", "FP", "FN", "P", "R", "F"])
    for c in result.cells:
        m = c.metrics
        writer.writerow(
            [
                c.n_w,
                c.n_h,
                m.true_positives,
                m.false_positives,
                m.false_negatives,
                _fmt(m.precision),
                _fmt(m.recall),
                _fmt(m.f_score),
            ]
        )
