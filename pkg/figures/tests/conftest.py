"""Synthetic dataset builders matching the persisted schemas exactly."""

import hashlib
import json

import numpy as np
import pytest


def _write_manifest(dirpath, figure, extra, files):
    payload = {
        "kind": "figure",
        "figure": figure,
        "schema_version": 1,
        "software_version": "synthetic",
        "files": {
            p.name: hashlib.sha256(p.read_bytes()).hexdigest() for p in files
        },
    }
    payload.update(extra)
    path = dirpath / f"{figure}_manifest.json"
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return path


@pytest.fixture
def fig2_dataset(tmp_path):
    alphas = [0.0, 3.0]
    t = np.linspace(0.0, 30.0, 61)
    csv = tmp_path / "fig2_pe.csv"
    with open(csv, "w") as fh:
        fh.write("t," + ",".join(f"pe_alpha_{a:g}" for a in alphas) + ",pe_markov\n")
        for i, ti in enumerate(t):
            cols = [repr(float(ti))]
            cols.append(repr(float(0.4 + 0.6 * np.exp(-0.02 * ti))))
            cols.append(repr(float(np.exp(-0.011 * ti))))
            cols.append(repr(float(np.exp(-0.01 * ti))))
            fh.write(",".join(cols) + "\n")
    _write_manifest(tmp_path, "fig2", {"alphas": alphas, "n_failures": 0}, [csv])
    return tmp_path


@pytest.fixture
def fig3_dataset(tmp_path):
    omega = np.linspace(-2.2, 2.2, 45)
    dens = tmp_path / "fig3_spectral_density.csv"
    with open(dens, "w") as fh:
        fh.write("omega,G,G_homogeneous\n")
        for w in omega:
            g = 0.001 / (1.0 + w**2)
            fh.write(f"{float(w)!r},{float(g)!r},{float(0.8 * g)!r}\n")
    times = np.linspace(0.0, 40.0, 81)
    grid = np.linspace(-3.0, 3.0, 13)
    heat = tmp_path / "fig3_heatmap.csv"
    with open(heat, "w") as fh:
        fh.write("omega_a," + ",".join(repr(float(ti)) for ti in times) + "\n")
        for wa in grid:
            rate = 0.01 if abs(wa) < 2.0 else 0.0001
            row = np.exp(-rate * times)
            fh.write(repr(float(wa)) + "," + ",".join(repr(float(p)) for p in row) + "\n")
    _write_manifest(
        tmp_path,
        "fig3",
        {"alpha": 3.0, "band_edge_min": -2.1, "band_edge_max": 2.1, "t_max": 40.0},
        [dens, heat],
    )
    return tmp_path


@pytest.fixture
def fig4_dataset(tmp_path):
    alphas = np.array([0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0])
    csv = tmp_path / "fig4_n_vs_alpha.csv"
    with open(csv, "w") as fh:
        fh.write(
            "alpha,n_mean,n_sem,r_mean,r_sem,"
            "n_bath_plus_mode,bath_plus_mode_valid,n_lorentzian,lorentzian_valid\n"
        )
        for j, a in enumerate(alphas):
            n = 0.5 * np.exp(-1.2 * a) + 0.01
            r = 0.3 + 0.9 * a
            lor_ok = int(r < 2.0)
            fh.write(
                ",".join(
                    [
                        repr(float(a)),
                        repr(float(n)),
                        repr(float(0.05 * n + 0.002)),
                        repr(float(r)),
                        repr(float(0.05 * r)),
                        repr(float(n * 1.1)),
                        "1",
                        repr(float(n * 0.9) if lor_ok else 0.0),
                        str(lor_ok),
                    ]
                )
                + "\n"
            )
    _write_manifest(tmp_path, "fig4", {"n_records": 700, "n_failures": 0}, [csv])
    return tmp_path
