import json
import math

import pytest

from spikequant import ExperimentConfig, ResetMode, TrialResult, from_events
from spikequant.experiments import CellStats, box_stats
from spikequant.io import (
    load_config_json,
    read_times_csv,
    read_train_csv,
    write_results_csv,
    write_stats_csv,
    write_trace_csv,
    write_train_csv,
)


def test_write_then_read_reproduces_rendered_train(tmp_path):
    train = from_events([(0.0, 1.0 / 3.0), (1.5, -2.0), (7.25, 0.125)])
    path = tmp_path / "t.csv"
    write_train_csv(train, path)
    rendered = from_events(
        [(float(f"{t:.15g}"), float(f"{a:.15g}")) for t, a in train]
    )
    assert read_train_csv(path) == rendered


def test_canonical_files_round_trip_byte_identically(tmp_path):
    train = from_events([(0.0, 1.0 / 3.0), (1.5, -2.0), (7.25, 1e-7)])
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    write_train_csv(train, first)
    write_train_csv(read_train_csv(first), second)
    assert first.read_bytes() == second.read_bytes()


def test_header_only_file_is_empty_train(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("time,amplitude\n", encoding="utf-8")
    assert len(read_train_csv(path)) == 0


def test_unsorted_rows_are_sorted_and_merged(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("time,amplitude\n2.0,1.0\n1.0,-1.0\n2.0,0.5\n", encoding="utf-8")
    train = read_train_csv(path)
    assert train.times == (1.0, 2.0)
    assert train.amplitudes == (-1.0, 1.5)


def test_non_numeric_cell_names_row(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("time,amplitude\n1.0,abc\n", encoding="utf-8")
    with pytest.raises(ValueError, match="row 2"):
        read_train_csv(path)


def test_nan_cell_names_row(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("time,amplitude\n1.0,1.0\n2.0,nan\n", encoding="utf-8")
    with pytest.raises(ValueError, match="row 3"):
        read_train_csv(path)


def test_missing_header_is_rejected(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("1.0,2.0\n", encoding="utf-8")
    with pytest.raises(ValueError, match="header"):
        read_train_csv(path)
    path.write_text("", encoding="utf-8")
    with pytest.raises(ValueError, match="header"):
        read_train_csv(path)


def test_wrong_column_count_is_rejected(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("time,amplitude\n1.0,2.0,3.0\n", encoding="utf-8")
    with pytest.raises(ValueError, match="row 2"):
        read_train_csv(path)


def test_times_csv_reads_and_validates(tmp_path):
    path = tmp_path / "times.csv"
    path.write_text("time\n0.5\n1.25\n", encoding="utf-8")
    assert read_times_csv(path) == [0.5, 1.25]
    no_header = tmp_path / "no_header.csv"
    no_header.write_text("0.5\n", encoding="utf-8")
    with pytest.raises(ValueError, match="header"):
        read_times_csv(no_header)
    bad = tmp_path / "bad.csv"
    bad.write_text("time\nxyz\n", encoding="utf-8")
    with pytest.raises(ValueError, match="row 2"):
        read_times_csv(bad)


def test_trace_csv_format(tmp_path):
    path = tmp_path / "trace.csv"
    write_trace_csv([(0.0, 0.5), (1.0, 0.25)], path)
    assert path.read_text(encoding="utf-8") == "time,potential\n0,0.5\n1,0.25\n"


def test_results_csv_format(tmp_path):
    path = tmp_path / "results.csv"
    rows = [
        TrialResult(ResetMode.TO_MOD, 0.1, 10, 0, 0.7832962458321989),
        TrialResult(ResetMode.TO_ZERO, math.inf, 50, 1, 1.25),
    ]
    write_results_csv(rows, path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "mode,alpha,n,run,error_norm"
    assert lines[1] == "mod,0.1,10,0,0.7832962458321989"
    assert lines[2] == "zero,inf,50,1,1.25"


def test_stats_csv_format(tmp_path):
    path = tmp_path / "stats.csv"
    cells = [CellStats(ResetMode.TO_MOD, 0.1, 10, box_stats([1.0, 1.0, 1.0, 1.0, 100.0]))]
    write_stats_csv(cells, path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("mode,alpha,n,n_samples")
    assert lines[1] == "mod,0.1,10,5,1,1,1,1,1,100"


def test_config_json_defaults_and_inf(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"alphas": ["inf", 0.1], "seed": 9}), encoding="utf-8")
    cfg = load_config_json(path)
    assert cfg.alphas == (math.inf, 0.1)
    assert cfg.seed == 9
    assert cfg.runs == 100  # default fills absent fields
    assert cfg == ExperimentConfig(alphas=(math.inf, 0.1), seed=9)


def test_config_json_rejects_unknown_keys_and_bad_json(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"rnus": 10}), encoding="utf-8")
    with pytest.raises(ValueError, match="unknown config keys"):
        load_config_json(path)
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ValueError, match="invalid JSON"):
        load_config_json(path)
    path.write_text("[1,2]", encoding="utf-8")
    with pytest.raises(ValueError, match="JSON object"):
        load_config_json(path)
