import json

from sanate import Mode, evaluate
from sanate.reporting import (
    render_metrics_figure,
    report_to_dict,
    report_to_json,
    report_to_tsv,
)


def report_for(records, resources, mode=Mode.SANATE):
    return evaluate(records, mode, resources)


def test_json_contains_metrics_and_pairs(golden_records, golden_resources):
    report = report_for(golden_records, golden_resources)
    payload = json.loads(report_to_json(report))
    assert payload["total"] == len(golden_records)
    assert 0.0 <= payload["accuracy"] <= 1.0
    assert len(payload["per_pair"]) == len(golden_records)
    assert {"id", "gold", "predicted"} == set(payload["per_pair"][0])


def test_json_is_byte_deterministic(golden_records, golden_resources):
    first = report_to_json(report_for(golden_records, golden_resources))
    second = report_to_json(report_for(golden_records, golden_resources))
    assert first.encode("utf-8") == second.encode("utf-8")


def test_json_recomputation_matches(golden_records, golden_resources):
    payload = report_to_dict(report_for(golden_records, golden_resources))
    correct = sum(1 for p in payload["per_pair"] if p["gold"] == p["predicted"])
    assert payload["correct"] == correct
    assert payload["accuracy"] == correct / payload["total"]


def test_tsv_rows(golden_records, golden_resources):
    report = report_for(golden_records, golden_resources)
    lines = report_to_tsv(report).splitlines()
    assert len(lines) == len(golden_records)
    first = lines[0].split("\t")
    assert first[0] == golden_records[0].id
    assert first[1] in {"entails", "not_entails"}
    assert first[2] in {"entails", "not_entails"}


def test_tsv_empty_report():
    from sanate import EvalReport

    empty = EvalReport(
        total=0, correct=0, accuracy=0.0, predicted_entail=0, correct_entail=0,
        gold_entail=0, precision=0.0, recall=0.0, per_pair=(), flags=("empty_dataset",),
    )
    assert report_to_tsv(empty) == ""


def test_metrics_figure_single_report(tmp_path, golden_records, golden_resources):
    report = report_for(golden_records, golden_resources)
    out = tmp_path / "metrics.png"
    render_metrics_figure({"sanate": report}, out)
    assert out.exists()
    assert out.stat().st_size > 0
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_metrics_figure_comparison(tmp_path, golden_records, golden_resources):
    reports = {
        mode.value: report_for(golden_records, golden_resources, mode)
        for mode in Mode
    }
    out = tmp_path / "compare.png"
    render_metrics_figure(reports, out)
    assert out.exists() and out.stat().st_size > 0
