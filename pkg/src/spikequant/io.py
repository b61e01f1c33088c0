"""File codecs: spike-train CSV, trace CSV, results/stats CSV, config JSON.

Train files are UTF-8 CSV with the header ``time,amplitude`` and one
spike per row; rows need not be sorted (loading sorts and merges
simultaneous rows).  Numeric cells in train files are rendered with 15
significant digits, which round-trips through ``float`` exactly.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .experiments import CellStats, ExperimentConfig, TrialResult
from .train import SpikeTrain, from_events

TRAIN_HEADER = ["time", "amplitude"]
TIMES_HEADER = ["time"]
TRACE_HEADER = ["time", "potential"]
RESULTS_HEADER = ["mode", "alpha", "n", "run", "error_norm"]
STATS_HEADER = [
    "mode",
    "alpha",
    "n",
    "n_samples",
    "median",
    "q1",
    "q3",
    "whisker_low",
    "whisker_high",
    "outliers",
]


def _parse_float(cell: str, path: str, row: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ValueError(f"{path}: row {row}: not a number: {cell!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"{path}: row {row}: non-finite value: {cell!r}")
    return value


def _read_rows(path: str | Path, header: list[str]) -> list[tuple[int, list[str]]]:
    """Return (physical line number, cells) per data row, after the header."""
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        rows = [(reader.line_num, row) for row in reader if row]
    if not rows or [c.strip() for c in rows[0][1]] != header:
        raise ValueError(f"{path}: missing header {','.join(header)!r}")
    for line, row in rows[1:]:
        if len(row) != len(header):
            raise ValueError(f"{path}: row {line}: expected {len(header)} columns")
    return rows[1:]


def read_train_csv(path: str | Path) -> SpikeTrain:
    """Load a spike train; simultaneous rows are merged, zeros dropped."""
    rows = _read_rows(path, TRAIN_HEADER)
    events = [
        (_parse_float(row[0], str(path), line), _parse_float(row[1], str(path), line))
        for line, row in rows
    ]
    return from_events(events)


def dump_train_csv(train: SpikeTrain, fh: TextIO) -> None:
    fh.write(",".join(TRAIN_HEADER) + "\n")
    for t, a in zip(train.times, train.amplitudes):
        fh.write(f"{t:.15g},{a:.15g}\n")


def write_train_csv(train: SpikeTrain, path: str | Path) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        dump_train_csv(train, fh)


def read_times_csv(path: str | Path) -> list[float]:
    """Load a single-column ``time`` CSV of sample times."""
    rows = _read_rows(path, TIMES_HEADER)
    return [_parse_float(row[0], str(path), line) for line, row in rows]


def write_trace_csv(trace: Sequence[tuple[float, float]], path: str | Path) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        fh.write(",".join(TRACE_HEADER) + "\n")
        for t, u in trace:
            fh.write(f"{t:.15g},{u:.15g}\n")


def write_results_csv(results: Iterable[TrialResult], path: str | Path) -> None:
    """One row per trial, full round-trip precision."""
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        fh.write(",".join(RESULTS_HEADER) + "\n")
        for row in results:
            fh.write(f"{row.mode.value},{row.alpha!r},{row.n},{row.run},{row.error_norm!r}\n")


def write_stats_csv(cells: Iterable[CellStats], path: str | Path) -> None:
    """One row per study cell, rounded to 12 significant digits."""
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        fh.write(",".join(STATS_HEADER) + "\n")
        for mode, alpha, n, s in cells:
            outliers = ";".join(f"{x:.12g}" for x in s.outliers)
            fh.write(
                f"{mode.value},{alpha!r},{n},{s.n_samples},"
                f"{s.median:.12g},{s.q1:.12g},{s.q3:.12g},"
                f"{s.whisker_low:.12g},{s.whisker_high:.12g},{outliers}\n"
            )


def load_config_json(path: str | Path) -> ExperimentConfig:
    """Load an experiment config; absent fields take the documented defaults."""
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError(f"{path}: config must be a JSON object")
    try:
        return ExperimentConfig.from_dict(data)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{path}: {exc}") from None
