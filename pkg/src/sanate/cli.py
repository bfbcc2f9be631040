"""Command-line interface.

Subcommands:
    judge     judge one text/hypothesis pair
    eval      evaluate a JSONL dataset and write a report (and figure)
    polarity  classify the polarity of one sentence

Shared options select the resource files, the thresholds and the
experimental sentiment promotion switch. The same keys may be placed in
a ``key=value`` config file passed via ``--config``; explicit flags
override config values.

Exit codes: 0 success, 1 usage error, 2 resource/IO error.
"""

from __future__ import annotations

import json
import sys

import click

from .errors import SanateError
from .lexicons import Resources
from .overlap import Thresholds
from .pipeline import Mode, PairRecord, evaluate, judge, load_dataset
from .reporting import render_metrics_figure, report_to_json, report_to_tsv
from .sentiment import classify_polarity
from .normalize import process_sentence

_CONFIG_KEYS = frozenset(
    {"tau1", "tau2", "tau3", "stopwords", "semlex", "sentlex", "sentiment_promote"}
)
_TRUE_VALUES = {"1", "true", "yes", "on"}
_FALSE_VALUES = {"0", "false", "no", "off"}


def _read_config(path) -> dict:
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        raise SanateError(f"cannot read config file {path}: {exc}") from exc
    values: dict[str, str] = {}
    for number, line in enumerate(lines, start=1):
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        if "=" not in entry:
            raise click.UsageError(f"config line {number}: expected key=value")
        key, _, value = entry.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise click.UsageError(f"config line {number}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def _parse_bool(value: str, key: str) -> bool:
    lowered = value.lower()
    if lowered in _TRUE_VALUES:
        return True
    if lowered in _FALSE_VALUES:
        return False
    raise click.UsageError(f"config key {key!r}: expected a boolean, got {value!r}")


def _parse_float(value: str, key: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise click.UsageError(f"config key {key!r}: expected a number, got {value!r}")


class Settings:
    """Effective settings after merging flags over config over defaults."""

    def __init__(self, flags: dict):
        config = _read_config(flags["config"]) if flags.get("config") else {}

        def pick(key):
            if flags.get(key) is not None:
                return flags[key]
            return config.get(key)

        defaults = Thresholds()
        tau1 = pick("tau1")
        tau2 = pick("tau2")
        tau3 = pick("tau3")
        self.thresholds = Thresholds(
            tau1=_parse_float(tau1, "tau1") if isinstance(tau1, str) else (
                tau1 if tau1 is not None else defaults.tau1
            ),
            tau2=_parse_float(tau2, "tau2") if isinstance(tau2, str) else (
                tau2 if tau2 is not None else defaults.tau2
            ),
            tau3=_parse_float(tau3, "tau3") if isinstance(tau3, str) else (
                tau3 if tau3 is not None else defaults.tau3
            ),
        )
        promote = pick("sentiment_promote")
        if isinstance(promote, str):
            promote = _parse_bool(promote, "sentiment_promote")
        self.sentiment_promote = bool(promote) if promote is not None else False
        self.resources = Resources.from_paths(
            stopwords=pick("stopwords"), semlex=pick("semlex"), sentlex=pick("sentlex")
        )


def shared_options(command):
    options = [
        click.option("--tau1", type=float, default=None, help="Gate threshold tau1."),
        click.option("--tau2", type=float, default=None, help="Gate threshold tau2."),
        click.option("--tau3", type=float, default=None, help="Gate threshold tau3."),
        click.option(
            "--stopwords",
            type=click.Path(),
            default=None,
            help="Stop-word file (one word per line); packaged list by default.",
        ),
        click.option(
            "--semlex",
            type=click.Path(),
            default=None,
            help="Semantic lexicon TSV (headword<TAB>rel1,rel2,...).",
        ),
        click.option(
            "--sentlex",
            type=click.Path(),
            default=None,
            help="Combined sentiment CSV (word,polarity).",
        ),
        click.option(
            "--sentiment-promote/--no-sentiment-promote",
            default=None,
            help="Let equal polarities upgrade a negative decision (experimental).",
        ),
        click.option(
            "--config",
            type=click.Path(),
            default=None,
            help="key=value config file mirroring these options.",
        ),
    ]
    for option in reversed(options):
        command = option(command)
    return command


@click.group()
def cli():
    """Arabic textual entailment: overlap baseline plus negation and sentiment rules."""


@cli.command(name="judge")
@click.option("--text", required=True, help="The entailing text T.")
@click.option("--hyp", required=True, help="The hypothesis H.")
@click.option(
    "--mode",
    type=click.Choice([m.value for m in Mode]),
    default=Mode.SANATE.value,
    show_default=True,
)
@click.option("--trace", is_flag=True, help="Print the full JSON trace instead of the decision.")
@shared_options
def judge_command(text, hyp, mode, trace, **flags):
    """Judge whether TEXT entails HYP."""
    settings = Settings(flags)
    result = judge(
        PairRecord(id="cli", text=text, hypothesis=hyp),
        Mode(mode),
        settings.resources,
        settings.thresholds,
        settings.sentiment_promote,
    )
    if trace:
        click.echo(json.dumps(result.to_dict(), ensure_ascii=False, sort_keys=True, indent=2))
    else:
        click.echo(result.final.value)


@cli.command(name="eval")
@click.option("--dataset", required=True, type=click.Path(), help="JSONL dataset path.")
@click.option(
    "--mode",
    type=click.Choice([m.value for m in Mode]),
    default=Mode.SANATE.value,
    show_default=True,
)
@click.option(
    "--report",
    "report_format",
    type=click.Choice(["json", "tsv"]),
    default="json",
    show_default=True,
)
@click.option("--out", type=click.Path(), default=None, help="Write the report to a file.")
@click.option("--fig", type=click.Path(), default=None, help="Render a metrics figure to a file.")
@shared_options
def eval_command(dataset, mode, report_format, out, fig, **flags):
    """Evaluate a labeled dataset and report accuracy/precision/recall."""
    settings = Settings(flags)
    records = load_dataset(dataset)
    report = evaluate(
        records,
        Mode(mode),
        settings.resources,
        settings.thresholds,
        settings.sentiment_promote,
    )
    rendered = report_to_json(report) if report_format == "json" else report_to_tsv(report)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(rendered)
        click.echo(
            f"pairs={report.total} accuracy={report.accuracy:.4f} "
            f"precision={report.precision:.4f} recall={report.recall:.4f}"
        )
    else:
        click.echo(rendered, nl=False)
    if fig:
        render_metrics_figure({mode: report}, fig)


@cli.command(name="polarity")
@click.option("--text", required=True, help="Sentence to classify.")
@shared_options
def polarity_command(text, **flags):
    """Classify the sentiment polarity of one sentence."""
    settings = Settings(flags)
    sentence = process_sentence(
        text, settings.resources.stop_words, settings.resources.affixes
    )
    result = classify_polarity(sentence, settings.resources.sentiment)
    click.echo(json.dumps(result.to_dict(), ensure_ascii=False, sort_keys=True))


def main(argv=None) -> int:
    """Entry point with the documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.Abort:
        click.echo("Aborted.", err=True)
        return 1
    except SanateError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
