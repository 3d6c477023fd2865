"""End-to-end smokes for the argparse front end (tiny sizes only)."""

import json

import numpy as np
import pytest

from cca_decay.cli import build_parser, main
from cca_decay.disorder import load_series, sample_series
from cca_decay.effective import pe_lorentzian, predicted_n
from cca_decay.ensemble import SweepConfig, save_sweep_config
from cca_decay.evolution import load_trajectory
from cca_decay.model import SystemConfig


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "cca-decay" in capsys.readouterr().out


def test_missing_required_argument_exits_with_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["disorder", "--alpha", "2.0", "--out", "x.csv"])  # no --seed
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["figure", "fig99", "--out", "x"])


def test_disorder_command_writes_loadable_series(tmp_path, capsys):
    out = tmp_path / "series.csv"
    rc = main(["disorder", "--n", "101", "--alpha", "2.0", "--seed", "42", "--out", str(out)])
    assert rc == 0
    assert "wrote" in capsys.readouterr().out
    loaded = load_series(out)
    direct = sample_series(101, 2.0, 42)
    assert np.array_equal(loaded.values, direct.values)
    assert loaded.alpha == 2.0 and loaded.seed == 42


def test_trajectory_and_nonmarkov_commands_round_trip(tmp_path, capsys):
    out = tmp_path / "traj.csv"
    rc = main(
        [
            "trajectory",
            "--n", "51",
            "--alpha", "0.0",
            "--seed", "5",
            "--t-max", "20",
            "--out", str(out),
        ]
    )
    assert rc == 0
    capsys.readouterr()
    traj = load_trajectory(out)
    assert traj.times[-1] == 20.0
    assert traj.config_digest["seed"] == 5

    rc = main(["nonmarkov", "--in", str(out)])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    for key in ("n_v", "n_tilde", "n", "method", "n_maxima", "n_minima"):
        assert key in report
    assert report["n_v"] >= 0.0
    assert report["n_tilde"] <= 0.0


def test_spectral_command_outputs(tmp_path, capsys):
    density = tmp_path / "G.csv"
    params = tmp_path / "params.json"
    rc = main(
        [
            "spectral",
            "--n", "101",
            "--alpha", "3.0",
            "--seed", "9",
            "--out-density", str(density),
            "--out-params", str(params),
        ]
    )
    assert rc == 0
    capsys.readouterr()
    table = np.loadtxt(density, delimiter=",", skiprows=1)
    # binned weights conserve the total coupling: sum G * bin = g^2
    assert abs(table[:, 1].sum() * 0.1 - 0.01) < 1e-12
    record = json.loads(params.read_text())
    assert record["n"] == 101 and record["seed"] == 9
    assert record["r"] > 0 and 0 <= record["ell"] < 101
    assert record["xi"] > 1.0


def test_spectral_command_prints_params_without_outfile(capsys):
    rc = main(["spectral", "--n", "101", "--alpha", "0.0", "--seed", "1"])
    assert rc == 0
    record = json.loads(capsys.readouterr().out)
    assert record["gamma"] > 0


def test_effective_command_json_and_csv(tmp_path, capsys):
    out = tmp_path / "pe.csv"
    rc = main(
        [
            "effective",
            "--model", "lorentzian",
            "--r", "1.0",
            "--gamma", "0.1",
            "--t-max", "50",
            "--out", str(out),
        ]
    )
    assert rc == 0
    stdout = capsys.readouterr().out
    report = json.loads(stdout[stdout.index("{"):])
    n_want, valid_want = predicted_n("lorentzian", 1.0)
    assert report["n"] == n_want
    assert report["within_validity"] is valid_want
    table = np.loadtxt(out, delimiter=",", skiprows=1)
    assert np.array_equal(table[:, 1], pe_lorentzian(table[:, 0], 1.0, 0.1))


def test_sweep_command_runs_config_file(tmp_path, capsys):
    config = SweepConfig(
        alphas=(0.0, 3.0),
        n_realizations=1,
        master_seed=11,
        system=SystemConfig(n_cavities=51, coupling=0.1),
        t_max=10.0,
        spectral_n=101,
    )
    cfg_path = tmp_path / "sweep.json"
    save_sweep_config(config, cfg_path)
    out_dir = tmp_path / "results"
    rc = main(["sweep", "--config", str(cfg_path), "--out", str(out_dir)])
    assert rc == 0
    assert "2 realizations, 0 failures" in capsys.readouterr().out
    assert (out_dir / "sweep_manifest.json").exists()
    assert (out_dir / "aggregates.csv").exists()


def test_parser_covers_documented_subcommands():
    parser = build_parser()
    subactions = next(
        a for a in parser._actions if isinstance(a, type(parser._subparsers._group_actions[0]))
    )
    names = set(subactions.choices)
    assert names == {
        "disorder",
        "trajectory",
        "nonmarkov",
        "spectral",
        "effective",
        "sweep",
        "figure",
    }
