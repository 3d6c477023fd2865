"""Disorder-ensemble orchestration: sweeps over alpha, averaging, persistence.

Each realization job is a pure function of (master_seed, alpha,
realization_index): the dynamics pipeline draws its own chain (length
system.n_cavities), evolves it, and scores the non-Markovianity of the
trajectory, while the spectral pipeline draws an independent chain (length
spectral_n, the two purposes get separate sub-seeds) and extracts the
effective parameters (gamma, g_ell, r).  Quantities are always computed per
realization first and averaged afterwards; the mean trajectory is never fed
to the non-Markovianity measure.

Reproducibility contract: sub-seeds derive from (master_seed, alpha bits,
realization_index, purpose) through SeedSequence spawn keys, so results are
bitwise independent of worker count and completion order.  Aggregation
always folds realizations in index order.

A sweep pointed at an output directory journals every finished realization
to records.jsonl as it completes (crash loses only in-flight jobs; the
journal's line order follows completion and is not part of the
reproducibility contract), then writes sorted records.csv, the aggregate
tables, and a manifest with sha256 digests of every file.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
import os
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__ as _pkg_version
from .disorder import sample_series
from .effective import predicted_n
from .evolution import PropagatorSettings, Trajectory, evolve
from .model import SystemConfig, build_free_field, build_full_hamiltonian
from .nonmarkov import NonMarkovianityResult, non_markovianity
from .spectral import EffectiveParams, effective_params, spectral_density
from .tridiagonal import diagonalize_tridiagonal

__all__ = [
    "DEFAULT_MASTER_SEED",
    "SCHEMA_VERSION",
    "SweepConfig",
    "SweepResult",
    "RealizationRecord",
    "derive_sub_seed",
    "run_realization",
    "run_sweep",
    "reproduce_figure",
    "load_sweep_config",
    "save_sweep_config",
]

logger = logging.getLogger(__name__)

DEFAULT_MASTER_SEED = 0xCCADECA1
SCHEMA_VERSION = 1
WORKERS_ENV_VAR = "CCA_DECAY_WORKERS"

_PURPOSE_CODES = {"dynamics": 0, "spectral": 1}

# figure-pipeline scales: (n_cavities, n_realizations, t_max)
_SCALES = {
    "desk": (1201, 100, 300.0),
    "paper": (6201, 1000, 600.0),
}

_FIG4_ALPHAS = (0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0)
_FIG2_ALPHAS = (0.0, 1.0, 2.0, 3.0)


def derive_sub_seed(
    master_seed: int, alpha: float, realization_index: int, purpose: str
) -> int:
    """Derive the 64-bit stream seed for one realization and one purpose.

    The spawn key folds in the exact float bits of alpha, so seeds do not
    depend on the sweep grid the value happens to sit in, and the purpose
    tag keeps the dynamics chain and the (differently sized) spectral chain
    statistically independent.
    """
    if realization_index < 0:
        raise ValueError(f"realization_index must be >= 0, got {realization_index}")
    code = _PURPOSE_CODES[purpose]
    alpha_bits = int(np.float64(alpha).view(np.uint64))
    ss = np.random.SeedSequence(
        int(master_seed), spawn_key=(alpha_bits, int(realization_index), code)
    )
    return int(ss.generate_state(1, np.uint64)[0])


@dataclass(frozen=True)
class SweepConfig:
    """Everything a sweep needs; serializes field-for-field to JSON."""

    alphas: tuple
    n_realizations: int
    master_seed: int = DEFAULT_MASTER_SEED
    system: SystemConfig = field(default_factory=lambda: SystemConfig(n_cavities=1201))
    propagator: PropagatorSettings = field(default_factory=PropagatorSettings)
    t_max: float = 300.0
    spectral_n: int = 1001
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        if not self.alphas:
            raise ValueError("alphas must be nonempty")
        if any(a < 0 for a in self.alphas):
            raise ValueError("alphas must be nonnegative")
        if self.n_realizations < 1:
            raise ValueError(f"n_realizations must be >= 1, got {self.n_realizations}")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must fit in 64 bits")
        if self.spectral_n < 3 or self.spectral_n % 2 == 0:
            raise ValueError(f"spectral_n must be odd and >= 3, got {self.spectral_n}")
        if not self.t_max > 0:
            raise ValueError(f"t_max must be positive, got {self.t_max}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    def to_json_dict(self) -> dict:
        return {
            "alphas": list(self.alphas),
            "n_realizations": self.n_realizations,
            "master_seed": self.master_seed,
            "system": {
                "n_cavities": self.system.n_cavities,
                "coupling": self.system.coupling,
                "atom_frequency": self.system.atom_frequency,
                "hopping": self.system.hopping,
            },
            "propagator": {
                "dt": self.propagator.dt,
                "taylor_order": self.propagator.taylor_order,
                "record_stride": self.propagator.record_stride,
            },
            "t_max": self.t_max,
            "spectral_n": self.spectral_n,
            "workers": self.workers,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SweepConfig":
        return cls(
            alphas=tuple(data["alphas"]),
            n_realizations=int(data["n_realizations"]),
            master_seed=int(data.get("master_seed", DEFAULT_MASTER_SEED)),
            system=SystemConfig(**data.get("system", {"n_cavities": 1201})),
            propagator=PropagatorSettings(**data.get("propagator", {})),
            t_max=float(data.get("t_max", 300.0)),
            spectral_n=int(data.get("spectral_n", 1001)),
            workers=int(data.get("workers", 1)),
        )


def load_sweep_config(path) -> SweepConfig:
    with open(path) as fh:
        return SweepConfig.from_json_dict(json.load(fh))


def save_sweep_config(config: SweepConfig, path) -> None:
    with open(path, "w") as fh:
        json.dump(config.to_json_dict(), fh, indent=2)
        fh.write("\n")


@dataclass
class RealizationRecord:
    """Scalar audit record of one realization (curves live elsewhere)."""

    alpha: float
    index: int
    dynamics_seed: int
    spectral_seed: int
    n: float
    n_v: float
    n_tilde: float
    n_v_extrema: float
    n_simplified: float
    p_end: float
    norm_final: float
    gamma: float
    g_ell: float
    r: float
    xi: float
    ell: int


def run_realization(
    alpha: float,
    realization_index: int,
    config: SweepConfig,
    include_spectral: bool = True,
) -> tuple[Trajectory, NonMarkovianityResult, EffectiveParams | None]:
    """One full realization: dynamics trajectory, its N, and spectral params.

    Deterministic in (config.master_seed, alpha, realization_index).  The
    spectral leg runs on its own chain of length config.spectral_n with an
    independently derived sub-seed; with include_spectral=False it is
    skipped and the third element is None.
    """
    dyn_seed = derive_sub_seed(config.master_seed, alpha, realization_index, "dynamics")
    series = sample_series(config.system.n_cavities, alpha, dyn_seed)
    H = build_full_hamiltonian(config.system, series)
    digest = {
        "n_cavities": config.system.n_cavities,
        "coupling": config.system.coupling,
        "atom_frequency": config.system.atom_frequency,
        "hopping": config.system.hopping,
        "alpha": alpha,
        "seed": dyn_seed,
    }
    traj = evolve(H, config.propagator, config.t_max, config_digest=digest)
    nm = non_markovianity(traj)
    params = _spectral_leg(alpha, realization_index, config) if include_spectral else None
    return traj, nm, params


def _spectral_leg(alpha, realization_index, config) -> EffectiveParams:
    spec_seed = derive_sub_seed(config.master_seed, alpha, realization_index, "spectral")
    spec_cfg = SystemConfig(
        n_cavities=config.spectral_n,
        coupling=config.system.coupling,
        atom_frequency=config.system.atom_frequency,
        hopping=config.system.hopping,
    )
    sseries = sample_series(config.spectral_n, alpha, spec_seed)
    fieldop = build_free_field(spec_cfg, sseries)
    decomp = diagonalize_tridiagonal(fieldop.diagonal, fieldop.off_diagonal)
    return effective_params(
        decomp, spec_cfg.coupling, spec_cfg.atom_site, spec_cfg.atom_frequency
    )


def _job(args):
    """Worker entry point; returns (record, times, p_e)."""
    alpha, index, config, include_spectral = args
    traj, nm, params = run_realization(alpha, index, config, include_spectral)
    if params is not None:
        spec_seed = derive_sub_seed(config.master_seed, alpha, index, "spectral")
        gamma, g_ell, r, xi, ell = params.gamma, params.g_ell, params.r, params.xi, params.ell
    else:
        spec_seed = 0
        gamma = g_ell = r = xi = math.nan
        ell = -1
    record = RealizationRecord(
        alpha=float(alpha),
        index=int(index),
        dynamics_seed=int(traj.config_digest["seed"]),
        spectral_seed=spec_seed,
        n=nm.n,
        n_v=nm.n_v,
        n_tilde=nm.n_tilde,
        n_v_extrema=nm.n_v_extrema,
        n_simplified=nm.n_simplified,
        p_end=float(traj.p_e[-1]),
        norm_final=float(traj.norm[-1]),
        gamma=gamma,
        g_ell=g_ell,
        r=r,
        xi=xi,
        ell=ell,
    )
    return record, traj.times, traj.p_e


@dataclass
class SweepResult:
    """Aggregates (index-ordered folds) plus the per-realization audit trail."""

    alphas: tuple
    times: np.ndarray
    pe_mean: np.ndarray
    pe_sem: np.ndarray
    n_mean: np.ndarray
    n_sem: np.ndarray
    r_mean: np.ndarray
    r_sem: np.ndarray
    p_end_mean: np.ndarray
    records: list
    failures: list


def _mean_sem(values: np.ndarray, axis=0) -> tuple[np.ndarray, np.ndarray]:
    n = values.shape[axis]
    mean = values.mean(axis=axis)
    if n < 2:
        return mean, np.zeros_like(mean)
    sem = values.std(axis=axis, ddof=1) / math.sqrt(n)
    return mean, sem


def run_sweep(
    config: SweepConfig, out_dir=None, include_spectral: bool = True
) -> SweepResult:
    """Run the full (alphas x n_realizations) grid and aggregate.

    Worker count comes from config.workers unless the CCA_DECAY_WORKERS
    environment variable overrides it; 1 means run inline.  With out_dir
    set, finished realizations are journaled immediately and the final
    tables plus manifest land there too.  include_spectral=False skips the
    diagonalization leg (the decay-curve figure needs none of it).
    """
    workers = int(os.environ.get(WORKERS_ENV_VAR, config.workers))
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")

    out_path = None
    journal = None
    if out_dir is not None:
        out_path = Path(out_dir)
        out_path.mkdir(parents=True, exist_ok=True)
        journal = open(out_path / "records.jsonl", "w")

    jobs = [
        (alpha, i, config, include_spectral)
        for alpha in config.alphas
        for i in range(config.n_realizations)
    ]
    buffers: dict[float, dict[int, tuple]] = {a: {} for a in config.alphas}
    failures: list[tuple[float, int, str]] = []
    times = None

    def consume(args, outcome, error=None):
        nonlocal times
        alpha, index = args[0], args[1]
        if error is not None:
            failures.append((alpha, index, error))
            logger.error("realization alpha=%g index=%d failed: %s", alpha, index, error)
            return
        record, t, p_e = outcome
        if times is None:
            times = t
        buffers[alpha][index] = (record, p_e)
        if journal is not None:
            journal.write(json.dumps(asdict(record), sort_keys=True) + "\n")
            journal.flush()

    try:
        if workers == 1:
            for args in jobs:
                try:
                    consume(args, _job(args))
                except Exception as exc:  # noqa: BLE001 - recorded and excluded
                    consume(args, None, error=repr(exc))
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                pending = {pool.submit(_job, args): args for args in jobs}
                while pending:
                    done, _ = wait(pending, return_when=FIRST_COMPLETED)
                    for fut in done:
                        args = pending.pop(fut)
                        try:
                            consume(args, fut.result())
                        except Exception as exc:  # noqa: BLE001
                            consume(args, None, error=repr(exc))
    finally:
        if journal is not None:
            journal.close()

    # aggregate in (alpha order, index order) regardless of completion order
    records: list[RealizationRecord] = []
    pe_mean, pe_sem = [], []
    n_mean, n_sem, r_mean, r_sem, p_end_mean = [], [], [], [], []
    for alpha in config.alphas:
        got = buffers[alpha]
        idx = sorted(got)
        recs = [got[i][0] for i in idx]
        records.extend(recs)
        curves = np.stack([got[i][1] for i in idx])
        m, s = _mean_sem(curves)
        pe_mean.append(m)
        pe_sem.append(s)
        n_arr = np.array([rec.n for rec in recs])
        m, s = _mean_sem(n_arr)
        n_mean.append(float(m))
        n_sem.append(float(s))
        r_arr = np.array([rec.r for rec in recs])
        m, s = _mean_sem(r_arr)
        r_mean.append(float(m))
        r_sem.append(float(s))
        p_end_mean.append(float(np.mean([rec.p_end for rec in recs])))
        logger.info(
            "alpha=%g aggregated over %d realizations (N=%.4f, r=%.4f)",
            alpha,
            len(recs),
            n_mean[-1],
            r_mean[-1],
        )
        buffers[alpha] = {}
    if failures:
        logger.warning("%d realizations failed and were excluded", len(failures))

    result = SweepResult(
        alphas=config.alphas,
        times=times,
        pe_mean=np.stack(pe_mean),
        pe_sem=np.stack(pe_sem),
        n_mean=np.array(n_mean),
        n_sem=np.array(n_sem),
        r_mean=np.array(r_mean),
        r_sem=np.array(r_sem),
        p_end_mean=np.array(p_end_mean),
        records=records,
        failures=failures,
    )
    if out_path is not None:
        _persist_sweep(result, config, out_path, include_spectral)
    return result


_RECORD_FIELDS = [
    "alpha",
    "index",
    "dynamics_seed",
    "spectral_seed",
    "n",
    "n_v",
    "n_tilde",
    "n_v_extrema",
    "n_simplified",
    "p_end",
    "norm_final",
    "gamma",
    "g_ell",
    "r",
    "xi",
    "ell",
]


def _fmt(x) -> str:
    if isinstance(x, float):
        return repr(float(x))
    return str(x)


def _write_records_csv(records, path: Path) -> None:
    with open(path, "w") as fh:
        fh.write(",".join(_RECORD_FIELDS) + "\n")
        for rec in records:
            row = asdict(rec)
            fh.write(",".join(_fmt(row[k]) for k in _RECORD_FIELDS) + "\n")


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _write_manifest(path: Path, payload: dict, files: list[Path]) -> None:
    payload = dict(payload)
    payload["schema_version"] = SCHEMA_VERSION
    payload["software_version"] = _pkg_version
    payload["files"] = {p.name: _sha256(p) for p in files}
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _persist_sweep(result, config, out_path: Path, include_spectral: bool) -> None:
    records_csv = out_path / "records.csv"
    _write_records_csv(result.records, records_csv)

    agg = out_path / "aggregates.csv"
    with open(agg, "w") as fh:
        fh.write("alpha,n_mean,n_sem,r_mean,r_sem,p_end_mean\n")
        for j, alpha in enumerate(result.alphas):
            fh.write(
                ",".join(
                    repr(float(v))
                    for v in (
                        alpha,
                        result.n_mean[j],
                        result.n_sem[j],
                        result.r_mean[j],
                        result.r_sem[j],
                        result.p_end_mean[j],
                    )
                )
                + "\n"
            )

    curves = out_path / "mean_pe.csv"
    with open(curves, "w") as fh:
        fh.write("t," + ",".join(f"pe_alpha_{a:g}" for a in result.alphas) + "\n")
        for i, t in enumerate(result.times):
            fh.write(
                repr(float(t))
                + ","
                + ",".join(repr(float(result.pe_mean[j, i])) for j in range(len(result.alphas)))
                + "\n"
            )

    _write_manifest(
        out_path / "sweep_manifest.json",
        {
            "kind": "sweep",
            "config": config.to_json_dict(),
            "include_spectral": include_spectral,
            "n_records": len(result.records),
            "n_expected": len(config.alphas) * config.n_realizations,
            "failures": [list(f) for f in result.failures],
        },
        [records_csv, agg, curves],
    )


def _figure_config(scale: str, master_seed: int, alphas, workers: int) -> SweepConfig:
    if scale not in _SCALES:
        raise ValueError(f"scale must be one of {sorted(_SCALES)}, got {scale!r}")
    n_cav, n_real, t_max = _SCALES[scale]
    return SweepConfig(
        alphas=alphas,
        n_realizations=n_real,
        master_seed=master_seed,
        system=SystemConfig(n_cavities=n_cav, coupling=0.1, atom_frequency=0.0),
        propagator=PropagatorSettings(),
        t_max=t_max,
        spectral_n=1001,
        workers=workers,
    )


def reproduce_figure(
    name: str,
    scale: str = "desk",
    out_dir="results",
    master_seed: int = DEFAULT_MASTER_SEED,
    workers: int = 1,
) -> dict:
    """Run one figure pipeline end to end and persist its CSVs + manifest.

    fig2: mean p_e(t) for alpha in {0,1,2,3} next to the exp(-g^2 t)
    reference.  fig3: one alpha=3 seed at N=1001, its binned G(omega)
    (disordered and homogeneous columns) and a p_e heat map over the atom
    frequency grid omega_a in [-3, 3] step 0.1.  fig4: the 7-point alpha
    sweep with mean N, mean r, and both effective-model predictions fed by
    mean r.  Desk scale is N=1201/100 seeds/t_max=300; paper scale is
    N=6201/1000 seeds/t_max=600 (hours of CPU).  Returns {label: Path}.
    """
    out_path = Path(out_dir)
    out_path.mkdir(parents=True, exist_ok=True)
    if name == "fig2":
        return _figure_fig2(scale, out_path, master_seed, workers)
    if name == "fig3":
        return _figure_fig3(scale, out_path, master_seed)
    if name == "fig4":
        return _figure_fig4(scale, out_path, master_seed, workers)
    raise ValueError(f"unknown figure {name!r}; expected fig2, fig3 or fig4")


def _figure_fig2(scale, out_path, master_seed, workers) -> dict:
    config = _figure_config(scale, master_seed, _FIG2_ALPHAS, workers)
    result = run_sweep(config, include_spectral=False)
    g = config.system.coupling
    ref = np.exp(-(g**2) * result.times)
    csv_path = out_path / "fig2_pe.csv"
    with open(csv_path, "w") as fh:
        fh.write(
            "t,"
            + ",".join(f"pe_alpha_{a:g}" for a in result.alphas)
            + ",pe_markov\n"
        )
        for i, t in enumerate(result.times):
            cols = [repr(float(t))]
            cols += [repr(float(result.pe_mean[j, i])) for j in range(len(result.alphas))]
            cols.append(repr(float(ref[i])))
            fh.write(",".join(cols) + "\n")
    manifest = out_path / "fig2_manifest.json"
    _write_manifest(
        manifest,
        {
            "kind": "figure",
            "figure": "fig2",
            "scale": scale,
            "config": config.to_json_dict(),
            "alphas": list(result.alphas),
            "n_failures": len(result.failures),
        },
        [csv_path],
    )
    return {"fig2_pe": csv_path, "manifest": manifest}


def _figure_fig3(scale, out_path, master_seed) -> dict:
    if scale not in _SCALES:
        raise ValueError(f"scale must be one of {sorted(_SCALES)}, got {scale!r}")
    _, _, t_max = _SCALES[scale]
    alpha = 3.0
    n = 1001
    g = 0.1
    seed = derive_sub_seed(master_seed, alpha, 0, "spectral")
    series = sample_series(n, alpha, seed)
    cfg = SystemConfig(n_cavities=n, coupling=g, atom_frequency=0.0)
    fieldop = build_free_field(cfg, series)
    decomp = diagonalize_tridiagonal(fieldop.diagonal, fieldop.off_diagonal)
    dens = spectral_density(decomp, g, cfg.atom_site)

    homog = build_free_field(cfg, np.zeros(n))
    decomp_h = diagonalize_tridiagonal(homog.diagonal, homog.off_diagonal)
    dens_h = spectral_density(decomp_h, g, cfg.atom_site)
    # align the homogeneous histogram onto the disordered bin grid
    h_interp = np.interp(
        dens.bin_centers, dens_h.bin_centers, dens_h.values, left=0.0, right=0.0
    )

    density_csv = out_path / "fig3_spectral_density.csv"
    with open(density_csv, "w") as fh:
        fh.write("omega,G,G_homogeneous\n")
        for w, gv, gh in zip(dens.bin_centers, dens.values, h_interp):
            fh.write(f"{float(w)!r},{float(gv)!r},{float(gh)!r}\n")

    omega_grid = np.round(np.arange(-3.0, 3.0 + 1e-9, 0.1), 10)
    settings = PropagatorSettings()
    heatmap_csv = out_path / "fig3_heatmap.csv"
    with open(heatmap_csv, "w") as fh:
        header_written = False
        for omega_a in omega_grid:
            cfg_w = SystemConfig(n_cavities=n, coupling=g, atom_frequency=float(omega_a))
            H = build_full_hamiltonian(cfg_w, series)
            traj = evolve(H, settings, t_max)
            if not header_written:
                fh.write(
                    "omega_a," + ",".join(repr(float(t)) for t in traj.times) + "\n"
                )
                header_written = True
            fh.write(
                repr(float(omega_a))
                + ","
                + ",".join(repr(float(p)) for p in traj.p_e)
                + "\n"
            )

    manifest = out_path / "fig3_manifest.json"
    _write_manifest(
        manifest,
        {
            "kind": "figure",
            "figure": "fig3",
            "scale": scale,
            "alpha": alpha,
            "n_cavities": n,
            "coupling": g,
            "seed": seed,
            "t_max": t_max,
            "omega_a_grid": [float(w) for w in omega_grid],
            "band_edge_min": float(decomp.eigenvalues[0]),
            "band_edge_max": float(decomp.eigenvalues[-1]),
        },
        [density_csv, heatmap_csv],
    )
    return {
        "fig3_spectral_density": density_csv,
        "fig3_heatmap": heatmap_csv,
        "manifest": manifest,
    }


def _figure_fig4(scale, out_path, master_seed, workers) -> dict:
    config = _figure_config(scale, master_seed, _FIG4_ALPHAS, workers)
    result = run_sweep(config, out_dir=None, include_spectral=True)

    summary_csv = out_path / "fig4_n_vs_alpha.csv"
    with open(summary_csv, "w") as fh:
        fh.write(
            "alpha,n_mean,n_sem,r_mean,r_sem,"
            "n_bath_plus_mode,bath_plus_mode_valid,n_lorentzian,lorentzian_valid\n"
        )
        for j, alpha in enumerate(result.alphas):
            r_bar = float(result.r_mean[j])
            n_bath, bath_ok = predicted_n("bath_plus_mode", r_bar)
            n_lor, lor_ok = predicted_n("lorentzian", r_bar)
            fh.write(
                ",".join(
                    [
                        repr(float(alpha)),
                        repr(float(result.n_mean[j])),
                        repr(float(result.n_sem[j])),
                        repr(r_bar),
                        repr(float(result.r_sem[j])),
                        repr(n_bath),
                        str(int(bath_ok)),
                        repr(n_lor),
                        str(int(lor_ok)),
                    ]
                )
                + "\n"
            )

    records_csv = out_path / "fig4_records.csv"
    _write_records_csv(result.records, records_csv)

    manifest = out_path / "fig4_manifest.json"
    _write_manifest(
        manifest,
        {
            "kind": "figure",
            "figure": "fig4",
            "scale": scale,
            "config": config.to_json_dict(),
            "n_records": len(result.records),
            "n_expected": len(config.alphas) * config.n_realizations,
            "n_failures": len(result.failures),
        },
        [summary_csv, records_csv],
    )
    return {
        "fig4_n_vs_alpha": summary_csv,
        "fig4_records": records_csv,
        "manifest": manifest,
    }
