"""Unitary propagation by a high-order Taylor expansion of exp(-i H dt).

One step advances the state by

    v(t + dt) = sum_{l=0}^{n0} (-i H dt)^l v(t) / l!

accumulated Horner-style (term_l = (-i dt / l) H term_{l-1}), so the cost per
step is n0 sparse applies and never a matrix power.  With dt = 0.1 and
n0 = 12 the per-step norm drift for spectral radius of order a few J sits
around 1e-13, and the norm stays within 1e-7 of unity over hundreds of time
units.  No renormalization is ever applied: the norm drift is the accuracy
certificate, and a norm outside [0.99, 1.01] aborts the run since it means
the step size is too large for the spectral radius at hand.

The canonical initial condition is the atom excited and every cavity empty,
i.e. the basis vector at index 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import __version__ as _pkg_version
from .model import SingleExcitationHamiltonian

__all__ = [
    "PropagatorSettings",
    "Trajectory",
    "initial_state",
    "taylor_step",
    "evolve",
    "save_trajectory",
    "load_trajectory",
]


@dataclass(frozen=True)
class PropagatorSettings:
    dt: float = 0.1
    taylor_order: int = 12
    record_stride: int = 1

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.taylor_order < 1:
            raise ValueError(f"taylor_order must be >= 1, got {self.taylor_order}")
        if self.record_stride < 1:
            raise ValueError(f"record_stride must be >= 1, got {self.record_stride}")


@dataclass
class Trajectory:
    """Recorded p_e(t) and norm(t) on a uniform time grid."""

    times: np.ndarray
    p_e: np.ndarray
    norm: np.ndarray
    settings: PropagatorSettings
    config_digest: dict = field(default_factory=dict)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=np.float64)
        self.p_e = np.asarray(self.p_e, dtype=np.float64)
        self.norm = np.asarray(self.norm, dtype=np.float64)
        if not (self.times.shape == self.p_e.shape == self.norm.shape):
            raise ValueError("times, p_e and norm must have equal lengths")

    @property
    def t_final(self) -> float:
        return float(self.times[-1])


def initial_state(dimension: int) -> np.ndarray:
    """Atom excited, cavities in vacuum: the basis vector at index 0."""
    if dimension < 2:
        raise ValueError(f"dimension must be >= 2, got {dimension}")
    v = np.zeros(dimension, dtype=np.complex128)
    v[0] = 1.0
    return v


def taylor_step(H, v, settings: PropagatorSettings) -> np.ndarray:
    """One propagation step of length settings.dt."""
    term = np.array(v, dtype=np.complex128, copy=True)
    acc = term.copy()
    scale = -1j * settings.dt
    for l in range(1, settings.taylor_order + 1):
        term = H.apply(term)
        term *= scale / l
        acc += term
    return acc


def _default_digest(H: SingleExcitationHamiltonian) -> dict:
    return {
        "n_cavities": int(H.n_cavities),
        "coupling": float(H.atom_bond),
        "atom_frequency": float(H.diagonal[0]),
        "hopping": float(H.chain_hopping),
        "alpha": None,
        "seed": None,
    }


def evolve(
    H: SingleExcitationHamiltonian,
    settings: PropagatorSettings,
    t_max: float,
    config_digest: dict | None = None,
) -> Trajectory:
    """Propagate from the canonical initial state up to t_max.

    Records p_e = |<atom|psi>|^2 and the state norm every record_stride steps
    (stride 1 by default; extrema detection downstream wants the full
    resolution).  Raises RuntimeError("norm blowup ...") if the norm ever
    leaves [0.99, 1.01].
    """
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    n_steps = int(np.floor(t_max / settings.dt + 1e-9))
    if n_steps < 1:
        raise ValueError(f"t_max={t_max} shorter than one step dt={settings.dt}")
    stride = settings.record_stride

    v = initial_state(H.dimension)
    n_rec = n_steps // stride + 1
    times = np.empty(n_rec)
    p_e = np.empty(n_rec)
    norm = np.empty(n_rec)
    times[0], p_e[0], norm[0] = 0.0, 1.0, 1.0

    rec = 1
    for step in range(1, n_steps + 1):
        v = taylor_step(H, v, settings)
        nrm = float(np.sqrt((v.real**2 + v.imag**2).sum()))
        if not 0.99 <= nrm <= 1.01:
            raise RuntimeError(
                f"norm blowup: |v| = {nrm:.6g} at t = {step * settings.dt:.6g}; "
                "dt too large for this spectral radius"
            )
        if step % stride == 0:
            times[rec] = step * settings.dt
            p_e[rec] = v[0].real**2 + v[0].imag**2
            norm[rec] = nrm
            rec += 1

    digest = dict(config_digest) if config_digest is not None else _default_digest(H)
    return Trajectory(
        times=times[:rec],
        p_e=p_e[:rec],
        norm=norm[:rec],
        settings=settings,
        config_digest=digest,
    )


def save_trajectory(traj: Trajectory, path) -> None:
    """CSV with header t,p_e,norm plus a JSON sidecar with the provenance.

    Floats are written with repr (shortest round-trip), so identical inputs
    give byte-identical files.
    """
    path = str(path)
    with open(path, "w") as fh:
        fh.write("t,p_e,norm\n")
        for t, p, n in zip(traj.times, traj.p_e, traj.norm):
            fh.write(f"{float(t)!r},{float(p)!r},{float(n)!r}\n")
    meta = {
        "schema_version": 1,
        "software_version": _pkg_version,
        "settings": {
            "dt": traj.settings.dt,
            "taylor_order": traj.settings.taylor_order,
            "record_stride": traj.settings.record_stride,
        },
        "config_digest": traj.config_digest,
    }
    with open(path + ".json", "w") as fh:
        json.dump(meta, fh, indent=2)
        fh.write("\n")


def load_trajectory(path) -> Trajectory:
    path = str(path)
    data = np.loadtxt(path, delimiter=",", skiprows=1, dtype=np.float64, ndmin=2)
    with open(path + ".json") as fh:
        meta = json.load(fh)
    settings = PropagatorSettings(**meta["settings"])
    return Trajectory(
        times=data[:, 0],
        p_e=data[:, 1],
        norm=data[:, 2],
        settings=settings,
        config_digest=meta.get("config_digest", {}),
    )
