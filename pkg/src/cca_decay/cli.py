"""Command-line front end.

Thin argparse layer over the library: every subcommand maps onto one public
function and writes the same CSV/JSON formats the API does.  Examples:

    cca-decay disorder --n 1001 --alpha 2.0 --seed 42 --out series.csv
    cca-decay trajectory --alpha 2 --seed 7 --out traj.csv
    cca-decay nonmarkov --in traj.csv
    cca-decay spectral --n 1001 --alpha 3 --seed 5 --out-density G.csv
    cca-decay effective --model lorentzian --r 1.0 --out pe.csv
    cca-decay sweep --config sweep.json --out results/
    cca-decay figure fig4 --scale desk --out results/

The CCA_DECAY_WORKERS environment variable overrides the worker count of
sweep and figure runs.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

import numpy as np

from . import __version__
from .disorder import sample_series, save_series
from .effective import (
    MODEL_KINDS,
    pe_bath_plus_mode,
    pe_lorentzian,
    predicted_n,
)
from .ensemble import (
    DEFAULT_MASTER_SEED,
    load_sweep_config,
    reproduce_figure,
    run_sweep,
)
from .evolution import PropagatorSettings, evolve, load_trajectory, save_trajectory
from .model import SystemConfig, build_free_field, build_full_hamiltonian
from .nonmarkov import find_extrema, non_markovianity
from .spectral import effective_params, spectral_density
from .tridiagonal import diagonalize_tridiagonal


def _add_system_args(p, n_default=1201):
    p.add_argument("--n", type=int, default=n_default, help="number of cavities (odd)")
    p.add_argument("--g", type=float, default=0.1, help="atom-cavity coupling in units of J")
    p.add_argument("--omega-a", type=float, default=0.0, help="atom frequency in units of J")


def _cmd_disorder(args) -> int:
    series = sample_series(args.n, args.alpha, args.seed)
    save_series(series, args.out)
    print(f"wrote {args.out} and {args.out}.json")
    return 0


def _cmd_trajectory(args) -> int:
    series = sample_series(args.n, args.alpha, args.seed)
    cfg = SystemConfig(n_cavities=args.n, coupling=args.g, atom_frequency=args.omega_a)
    H = build_full_hamiltonian(cfg, series)
    settings = PropagatorSettings(
        dt=args.dt, taylor_order=args.order, record_stride=args.stride
    )
    digest = {
        "n_cavities": args.n,
        "coupling": args.g,
        "atom_frequency": args.omega_a,
        "hopping": 1.0,
        "alpha": args.alpha,
        "seed": args.seed,
    }
    traj = evolve(H, settings, args.t_max, config_digest=digest)
    save_trajectory(traj, args.out)
    print(f"wrote {args.out} ({traj.times.size} samples, final norm {traj.norm[-1]:.10f})")
    return 0


def _cmd_nonmarkov(args) -> int:
    traj = load_trajectory(args.infile)
    res = non_markovianity(traj, noise_floor=args.noise_floor)
    ext = find_extrema(traj, noise_floor=args.noise_floor)
    out = {
        "n_v": res.n_v,
        "n_tilde": res.n_tilde,
        "n": res.n,
        "method": res.method,
        "n_v_extrema": res.n_v_extrema,
        "n_simplified": res.n_simplified,
        "n_maxima": int(ext.maxima.shape[0]),
        "n_minima": int(ext.minima.shape[0]),
    }
    print(json.dumps(out, indent=2))
    return 0


def _cmd_spectral(args) -> int:
    series = sample_series(args.n, args.alpha, args.seed)
    cfg = SystemConfig(n_cavities=args.n, coupling=args.g, atom_frequency=args.omega_a)
    fieldop = build_free_field(cfg, series)
    decomp = diagonalize_tridiagonal(fieldop.diagonal, fieldop.off_diagonal)
    dens = spectral_density(decomp, args.g, cfg.atom_site, bin_width=args.bin)
    if args.out_density:
        with open(args.out_density, "w") as fh:
            fh.write("omega,G\n")
            for w, v in zip(dens.bin_centers, dens.values):
                fh.write(f"{float(w)!r},{float(v)!r}\n")
        print(f"wrote {args.out_density}")
    params = effective_params(decomp, args.g, cfg.atom_site, args.omega_a)
    record = {
        "n": args.n,
        "alpha": args.alpha,
        "seed": args.seed,
        "coupling": args.g,
        "omega_a": args.omega_a,
        "gamma": params.gamma,
        "ell": params.ell,
        "xi": params.xi,
        "g_ell": params.g_ell,
        "r": params.r,
    }
    if args.out_params:
        with open(args.out_params, "w") as fh:
            json.dump(record, fh, indent=2)
            fh.write("\n")
        print(f"wrote {args.out_params}")
    else:
        print(json.dumps(record, indent=2))
    return 0


def _cmd_effective(args) -> int:
    n_pred, valid = predicted_n(args.model, args.r)
    if args.out:
        times = np.arange(0.0, args.t_max + 1e-9, args.dt)
        pe_fn = pe_bath_plus_mode if args.model == "bath_plus_mode" else pe_lorentzian
        pe = pe_fn(times, args.r, args.gamma)
        with open(args.out, "w") as fh:
            fh.write("t,p_e\n")
            for t, p in zip(times, pe):
                fh.write(f"{float(t)!r},{float(p)!r}\n")
        print(f"wrote {args.out}")
    print(
        json.dumps(
            {"model": args.model, "r": args.r, "n": n_pred, "within_validity": valid},
            indent=2,
        )
    )
    return 0


def _cmd_sweep(args) -> int:
    config = load_sweep_config(args.config)
    result = run_sweep(config, out_dir=args.out)
    print(
        f"sweep done: {len(result.records)} realizations, "
        f"{len(result.failures)} failures, results in {args.out}"
    )
    return 1 if result.failures else 0


def _cmd_figure(args) -> int:
    paths = reproduce_figure(
        args.figure,
        scale=args.scale,
        out_dir=args.out,
        master_seed=args.master_seed,
        workers=args.workers,
    )
    for label, path in paths.items():
        print(f"{label}: {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cca-decay",
        description="Spontaneous emission into a disordered coupled-cavity array",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="info-level logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("disorder", help="sample one disorder series to CSV")
    p.add_argument("--n", type=int, default=1001)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_disorder)

    p = sub.add_parser("trajectory", help="evolve one realization and save p_e(t)")
    _add_system_args(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--t-max", type=float, default=300.0)
    p.add_argument("--dt", type=float, default=0.1)
    p.add_argument("--order", type=int, default=12, help="Taylor order")
    p.add_argument("--stride", type=int, default=1, help="record every k-th step")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_trajectory)

    p = sub.add_parser("nonmarkov", help="score a saved trajectory")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--noise-floor", type=float, default=1e-9)
    p.set_defaults(func=_cmd_nonmarkov)

    p = sub.add_parser("spectral", help="diagnostics of one disorder realization")
    _add_system_args(p, n_default=1001)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bin", type=float, default=0.1, help="G(omega) bin width")
    p.add_argument("--out-density", default=None)
    p.add_argument("--out-params", default=None)
    p.set_defaults(func=_cmd_spectral)

    p = sub.add_parser("effective", help="closed-form effective models")
    p.add_argument("--model", choices=MODEL_KINDS, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--gamma", type=float, default=0.1)
    p.add_argument("--t-max", type=float, default=300.0)
    p.add_argument("--dt", type=float, default=0.1)
    p.add_argument("--out", default=None, help="optional p_e(t) CSV")
    p.set_defaults(func=_cmd_effective)

    p = sub.add_parser("sweep", help="run a sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("figure", help="reproduce a figure-feeding dataset")
    p.add_argument("figure", choices=("fig2", "fig3", "fig4"))
    p.add_argument("--scale", choices=("desk", "paper"), default="desk")
    p.add_argument("--out", default="results")
    p.add_argument("--master-seed", type=int, default=DEFAULT_MASTER_SEED)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_figure)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
