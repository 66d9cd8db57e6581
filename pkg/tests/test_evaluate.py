"""Gold matching, the F formula, and parameter sweeps."""

import io
import random

import pytest

from palimpsest import (
    DetectionParams,
    GoldSpan,
    detect_pair,
    f_beta,
    load_gold,
    match_gold,
    parameter_sweep,
    render_sweep_tables,
    save_gold,
)
from palimpsest.detect import ReuseBlock
from palimpsest.evaluate import validate_gold, write_sweep_csv


def block(a_span, b_span):
    return ReuseBlock(
        doc_a="A", doc_b="B", matches=[], a_span=a_span, b_span=b_span,
        strong_count=5, score=6,
    )


def gold(a_span, b_span, questionable=False):
    return GoldSpan(doc_a="A", doc_b="B", a_span=a_span, b_span=b_span,
                    questionable=questionable)


def test_exact_blocks_give_perfect_scores():
    golds = [gold((0, 100), (0, 100)), gold((200, 300), (250, 350))]
    blocks = [block((0, 100), (0, 100)), block((200, 300), (250, 350))]
    m = match_gold(blocks, golds)
    assert (m.true_positives, m.false_positives, m.false_negatives) == (2, 0, 0)
    assert m.precision == m.recall == 1.0


def test_zero_blocks_nonzero_gold_precision_undefined():
    m = match_gold([], [gold((0, 50), (0, 50))])
    assert m.true_positives == 0
    assert m.false_negatives == 1
    assert m.precision is None  # rendered as "nd"
    assert m.f_score is None


def test_block_on_questionable_span_not_counted_either_way():
    m = match_gold([block((0, 50), (0, 50))], [gold((0, 50), (0, 50), questionable=True)])
    assert (m.true_positives, m.false_positives, m.false_negatives) == (0, 0, 0)


def test_theta_threshold_on_gold_extent():
    # 5% overlap on the a-axis: touched but not retrieved
    g = gold((0, 1000), (0, 1000))
    b = block((0, 50), (0, 500))
    m = match_gold([b], [g], theta=0.1)
    assert m.true_positives == 0
    assert m.false_positives == 0  # touching gold is not spurious
    m2 = match_gold([b], [g], theta=0.05)
    assert m2.true_positives == 1


def test_spurious_needs_no_overlap_at_all():
    m = match_gold([block((500, 600), (700, 800))], [gold((0, 100), (0, 100))])
    assert m.false_positives == 1


def test_match_gold_order_insensitive():
    golds = [gold((0, 100), (0, 100)), gold((300, 400), (300, 400))]
    blocks = [block((20, 60), (10, 80)), block((350, 380), (340, 390)),
              block((900, 950), (900, 950))]
    rng = random.Random(5)
    reference = match_gold(blocks, golds)
    for _ in range(5):
        b2, g2 = blocks[:], golds[:]
        rng.shuffle(b2)
        rng.shuffle(g2)
        m = match_gold(b2, g2)
        assert (m.true_positives, m.false_positives, m.false_negatives) == (
            reference.true_positives,
            reference.false_positives,
            reference.false_negatives,
        )


def test_mixed_pairs_rejected():
    with pytest.raises(ValueError, match="one document pair"):
        match_gold(
            [block((0, 1), (0, 1))],
            [GoldSpan(doc_a="X", doc_b="Y", a_span=(0, 1), b_span=(0, 1))],
        )


def test_f_beta_reference_points():
    assert f_beta(1.0, 0.9) == pytest.approx(0.978, abs=0.001)
    assert f_beta(0.63, 0.91) == pytest.approx(0.671, abs=0.001)


def test_f_beta_fixed_point():
    for x in (0.0, 0.25, 0.5, 0.77, 1.0):
        assert f_beta(x, x) == pytest.approx(x)


def test_f_beta_undefined_and_zero_cases():
    assert f_beta(None, 0.5) is None
    assert f_beta(0.5, None) is None
    assert f_beta(0.0, 0.0) == 0.0


def test_gold_round_trip(tmp_path):
    spans = [
        GoldSpan(doc_a="a", doc_b="b", a_span=(3, 14), b_span=(15, 92), label="pi"),
        GoldSpan(doc_a="a", doc_b="b", a_span=(0, 7), b_span=(1, 8), questionable=True),
    ]
    path = tmp_path / "gold.jsonl"
    save_gold(spans, path)
    assert load_gold(path) == spans


def test_gold_unknown_document_rejected(fixture_corpus):
    bad = [GoldSpan(doc_a="nope", doc_b="nada", a_span=(0, 1), b_span=(0, 1))]
    with pytest.raises(ValueError, match="unknown document"):
        validate_gold(bad, fixture_corpus)


def test_sweep_single_cell_perfect(fixture_corpus, french_pipeline, fixture_gold_spans):
    result = parameter_sweep(
        fixture_corpus, french_pipeline, fixture_gold_spans, [3], [2]
    )
    cell = result.cell(3, 2)
    assert cell.metrics.recall == 1.0
    assert cell.metrics.precision == 1.0
    assert cell.metrics.f_score == 1.0
    assert result.best() is cell


def test_sweep_nd_rendering_for_infeasible_cells(fixture_corpus, french_pipeline,
                                                 fixture_gold_spans):
    # windows larger than any document's content stream: zero detections
    result = parameter_sweep(
        fixture_corpus, french_pipeline, fixture_gold_spans, [6], [0],
        base_params=DetectionParams(s_min=50),
    )
    cell = result.cell(6, 0)
    assert cell.metrics.precision is None
    text = render_sweep_tables(result)
    assert "nd" in text
    out = io.StringIO()
    write_sweep_csv(result, out)
    assert "nd" in out.getvalue()


def test_sweep_tables_layout(fixture_corpus, french_pipeline, fixture_gold_spans):
    result = parameter_sweep(
        fixture_corpus, french_pipeline, fixture_gold_spans, [2, 3], [1, 2]
    )
    text = render_sweep_tables(result)
    assert "Recall" in text and "Precis." in text and "F-score" in text
    assert "n_w=2" in text and "n_h=1" in text
    assert "best F" in text


def test_detection_report_json_schema(fixture_index, fixture_gold_spans):
    import json

    g = fixture_gold_spans[0]
    report = detect_pair(fixture_index, g.doc_a, g.doc_b)
    payload = json.loads(report.to_json())
    assert payload["schema_version"] == 1
    assert payload["params"]["n_w"] == 3
    assert payload["blocks"][0]["a_span"]
    assert payload["zones"][0]["block_ids"]
