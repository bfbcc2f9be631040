import json

import pytest

from sanate.cli import main


@pytest.fixture
def golden_flags(golden_dir):
    return [
        "--stopwords", str(golden_dir / "stopwords.txt"),
        "--semlex", str(golden_dir / "semantic_lexicon.tsv"),
        "--sentlex", str(golden_dir / "sentiment_combined.csv"),
    ]


class TestJudgeCommand:
    def test_sanate_vetoes_negated_hypothesis(self, capsys, golden_flags):
        code = main([
            "judge",
            "--text", "انا احب قراءة الكتب",
            "--hyp", "انا لا احب قراءة الكتب",
        ] + golden_flags)
        assert code == 0
        assert capsys.readouterr().out.strip() == "not_entails"

    def test_ate_mode_accepts_it(self, capsys, golden_flags):
        code = main([
            "judge", "--mode", "ate",
            "--text", "انا احب قراءة الكتب",
            "--hyp", "انا لا احب قراءة الكتب",
        ] + golden_flags)
        assert code == 0
        assert capsys.readouterr().out.strip() == "entails"

    def test_trace_output(self, capsys, golden_flags):
        code = main([
            "judge", "--trace",
            "--text", "الولد يقرا الكتاب",
            "--hyp", "الولد يقرا الكتاب",
        ] + golden_flags)
        assert code == 0
        trace = json.loads(capsys.readouterr().out)
        assert trace["final"] == "entails"
        assert trace["negation_rule"] == "NoParticles"
        assert trace["ate"]["c"] == 3

    def test_threshold_flag_changes_decision(self, capsys):
        base = ["judge", "--text", "الولد يقرا الكتاب في المكتبة",
                "--hyp", "الولد يقرا الكتاب"]
        assert main(base) == 0
        assert capsys.readouterr().out.strip() == "entails"
        assert main(base + ["--tau1", "0.01"]) == 0
        assert capsys.readouterr().out.strip() == "not_entails"

    def test_sentiment_promote_flag(self, capsys, golden_flags):
        # disjoint sentences, both clearly positive
        base = ["judge", "--text", "الطعام لذيذ رائع جدا",
                "--hyp", "الفندق جميل مفيد تماما"] + golden_flags
        assert main(base) == 0
        assert capsys.readouterr().out.strip() == "not_entails"
        assert main(base + ["--sentiment-promote"]) == 0
        assert capsys.readouterr().out.strip() == "entails"


class TestPolarityCommand:
    def test_reports_label_and_counts(self, capsys, golden_flags):
        code = main(["polarity", "--text", "الطعام لذيذ و الخدمة ممتازة"] + golden_flags)
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["polarity"] == "positive"
        assert payload["pos_tf"] == 2
        assert payload["neg_tf"] == 0

    def test_without_lexicon_everything_is_no_opinion(self, capsys):
        code = main(["polarity", "--text", "الطعام لذيذ و الخدمة ممتازة"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["polarity"] == "no_opinion"


class TestEvalCommand:
    def test_json_report_to_stdout(self, capsys, golden_dir, golden_flags):
        code = main([
            "eval", "--dataset", str(golden_dir / "golden_pairs.jsonl"),
        ] + golden_flags)
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["total"] == 25

    def test_report_written_to_file_with_summary(self, capsys, tmp_path, golden_dir, golden_flags):
        out = tmp_path / "report.json"
        code = main([
            "eval", "--dataset", str(golden_dir / "golden_pairs.jsonl"),
            "--out", str(out),
        ] + golden_flags)
        assert code == 0
        assert "accuracy=" in capsys.readouterr().out
        assert json.loads(out.read_text(encoding="utf-8"))["total"] == 25

    def test_tsv_report(self, tmp_path, golden_dir, golden_flags):
        out = tmp_path / "report.tsv"
        code = main([
            "eval", "--dataset", str(golden_dir / "golden_pairs.jsonl"),
            "--report", "tsv", "--out", str(out),
        ] + golden_flags)
        assert code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 25
        assert all(len(line.split("\t")) == 3 for line in lines)

    def test_figure_rendered_alongside_report(self, tmp_path, golden_dir, golden_flags):
        out = tmp_path / "report.json"
        fig = tmp_path / "metrics.png"
        code = main([
            "eval", "--dataset", str(golden_dir / "golden_pairs.jsonl"),
            "--out", str(out), "--fig", str(fig),
        ] + golden_flags)
        assert code == 0
        assert out.exists()
        assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


class TestConfigFile:
    def test_config_supplies_defaults(self, capsys, tmp_path, golden_dir):
        config = tmp_path / "sanate.conf"
        config.write_text(
            f"stopwords={golden_dir / 'stopwords.txt'}\n"
            f"semlex={golden_dir / 'semantic_lexicon.tsv'}\n"
            "tau1=0.01\n",
            encoding="utf-8",
        )
        base = ["judge", "--text", "الولد يقرا الكتاب في المكتبة",
                "--hyp", "الولد يقرا الكتاب", "--config", str(config)]
        assert main(base) == 0
        assert capsys.readouterr().out.strip() == "not_entails"

    def test_flag_overrides_config(self, capsys, tmp_path):
        config = tmp_path / "sanate.conf"
        config.write_text("tau1=0.01\n", encoding="utf-8")
        base = ["judge", "--text", "الولد يقرا الكتاب في المكتبة",
                "--hyp", "الولد يقرا الكتاب",
                "--config", str(config), "--tau1", "0.095"]
        assert main(base) == 0
        assert capsys.readouterr().out.strip() == "entails"

    def test_unknown_config_key_is_usage_error(self, tmp_path):
        config = tmp_path / "sanate.conf"
        config.write_text("tau9=1\n", encoding="utf-8")
        code = main(["judge", "--text", "نص", "--hyp", "نص", "--config", str(config)])
        assert code == 1


class TestExitCodes:
    def test_missing_required_option_is_usage_error(self):
        assert main(["judge", "--text", "نص"]) == 1

    def test_bad_mode_is_usage_error(self):
        assert main(["judge", "--text", "نص", "--hyp", "نص", "--mode", "x"]) == 1

    def test_unknown_option_is_usage_error(self):
        assert main(["judge", "--text", "نص", "--hyp", "نص", "--frobnicate"]) == 1

    def test_missing_dataset_is_resource_error(self, tmp_path):
        assert main(["eval", "--dataset", str(tmp_path / "absent.jsonl")]) == 2

    def test_malformed_dataset_is_resource_error(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text("not json\n", encoding="utf-8")
        assert main(["eval", "--dataset", str(path)]) == 2

    def test_malformed_semlex_is_resource_error(self, tmp_path):
        lex = tmp_path / "lex.tsv"
        lex.write_text("no tab here\n", encoding="utf-8")
        assert main(["judge", "--text", "نص", "--hyp", "نص",
                     "--semlex", str(lex)]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert "judge" in capsys.readouterr().out
