"""Environment diagnostics derived from the free-field normal modes.

Everything downstream of exact diagonalization lives here: the per-mode
couplings g_k seen by the atom, the binned spectral density G(omega), the
binned local decay rate gamma(omega_a), the participation ratio of a mode,
the selection of the dominant mode ell, and the bundle (gamma, g_ell, r)
that feeds the two effective models.

Conventions.  Mode indices are 0-based positions into the ascending
eigenvalue array.  Cavity site indices are 1-based (site c is the chain
center), matching the lattice labeling; internally site n is column n-1 of
the eigenvector matrix.

The decay-rate estimator is the binned one: pi times the sum of g_k^2
over the window |omega_k - omega_a| <= 0.05 J, divided by the 0.1 J
window, optionally excluding one mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .tridiagonal import EigenDecomposition, diagonalize_tridiagonal

__all__ = [
    "SpectralDensity",
    "EffectiveParams",
    "mode_couplings",
    "spectral_density",
    "decay_rate",
    "participation_ratio",
    "select_mode_ell",
    "effective_params",
    "diagonalize_tridiagonal",
    "EigenDecomposition",
]


@dataclass
class SpectralDensity:
    """Histogram estimate of G(omega) = sum_k g_k^2 delta(omega - omega_k)."""

    bin_centers: np.ndarray
    values: np.ndarray
    bin_width: float = 0.1

    def total_weight(self) -> float:
        """Integral of the histogram; equals sum_k g_k^2 exactly."""
        return float(np.sum(self.values) * self.bin_width)


@dataclass(frozen=True)
class EffectiveParams:
    """Per-realization environment summary feeding the effective models."""

    gamma: float
    ell: int
    xi: float
    g_ell: float
    r: float


def _site_column(decomp: EigenDecomposition, c: int) -> np.ndarray:
    if not 1 <= c <= decomp.size:
        raise ValueError(f"site index c={c} outside 1..{decomp.size}")
    return decomp.eigenvectors[:, c - 1]


def mode_couplings(decomp: EigenDecomposition, g: float, c: int) -> np.ndarray:
    """g_k = g * v_{k,c}: overlap of mode k with the atom's cavity.

    Signs follow the eigensolver's vector convention; only g_k^2 and |g_k|
    matter downstream.
    """
    return g * _site_column(decomp, c)


def spectral_density(
    decomp: EigenDecomposition, g: float, c: int, bin_width: float = 0.1
) -> SpectralDensity:
    """Bin the coupling weights g_k^2 over frequency.

    Uniform bins span [min omega_k - bin_width, max omega_k + bin_width], so
    every mode lands inside and the histogram integrates exactly to
    sum_k g_k^2.
    """
    if not bin_width > 0:
        raise ValueError(f"bin_width must be positive, got {bin_width}")
    gk2 = mode_couplings(decomp, g, c) ** 2
    w = decomp.eigenvalues
    lo = float(w[0]) - bin_width
    hi = float(w[-1]) + bin_width
    n_bins = max(int(np.ceil((hi - lo) / bin_width - 1e-12)), 1)
    edges = lo + bin_width * np.arange(n_bins + 1)
    hist, _ = np.histogram(w, bins=edges, weights=gk2)
    centers = 0.5 * (edges[:-1] + edges[1:])
    return SpectralDensity(bin_centers=centers, values=hist / bin_width, bin_width=bin_width)


def decay_rate(
    decomp: EigenDecomposition,
    g: float,
    c: int,
    omega_a: float,
    half_window: float = 0.05,
    exclude: int | None = None,
) -> float:
    """Binned dissipation rate at the atomic frequency.

    gamma = pi * (sum of g_k^2 over |omega_k - omega_a| <= half_window,
    k != exclude) / (2*half_window).  The windowed sum divided by the bin
    stands in for the delta-function sum pi * sum_k g_k^2 delta(omega_k -
    omega_a) that sets the dissipator strength of the effective models; the
    pi prefactor is part of that definition, not a golden-rule 2*pi.  An
    empty window gives 0 (the atom sits in a gap).
    """
    if not half_window > 0:
        raise ValueError(f"half_window must be positive, got {half_window}")
    gk2 = mode_couplings(decomp, g, c) ** 2
    mask = np.abs(decomp.eigenvalues - omega_a) <= half_window
    if exclude is not None:
        mask = mask.copy()
        mask[exclude] = False
    return float(math.pi * np.sum(gk2[mask]) / (2.0 * half_window))


def participation_ratio(eigenvector) -> float:
    """xi = 1 / sum_n v_n^4 for a normalized mode; 1 for a basis vector,
    N for the uniform one."""
    v = np.asarray(eigenvector, dtype=np.float64)
    nrm2 = float(np.sum(v**2))
    if abs(nrm2 - 1.0) > 1e-10:
        raise ValueError(f"eigenvector is not normalized: |v|^2 = {nrm2:.12g}")
    return float(1.0 / np.sum(v**4))


def select_mode_ell(
    decomp: EigenDecomposition, g: float, c: int, omega_a: float
) -> int:
    """Index of the mode maximizing |g_k| / |omega_k - omega_a|.

    An exact resonance counts as an infinite factor and wins outright.  Ties
    break toward the smaller detuning, then the lower index.
    """
    gk = np.abs(mode_couplings(decomp, g, c))
    det = np.abs(decomp.eigenvalues - omega_a)
    resonant = np.flatnonzero(det == 0.0)
    if resonant.size:
        return int(resonant[0])
    factor = gk / det
    best = np.flatnonzero(factor == factor.max())
    if best.size == 1:
        return int(best[0])
    # smaller detuning first; argmin takes the lowest index among equals
    return int(best[np.argmin(det[best])])


def effective_params(
    decomp: EigenDecomposition, g: float, c: int, omega_a: float
) -> EffectiveParams:
    """Extract (gamma, ell, xi, g_ell, r) from one realization.

    The dominant mode ell is excluded from the gamma window so the rate
    measures the residual quasi-continuum; g_ell = g / sqrt(xi) with unit
    proportionality constant, and r = gamma / g_ell.
    """
    if not g > 0:
        raise ValueError("effective_params needs g > 0 (g_ell would vanish)")
    ell = select_mode_ell(decomp, g, c, omega_a)
    xi = participation_ratio(decomp.eigenvectors[ell])
    g_ell = g / np.sqrt(xi)
    gamma = decay_rate(decomp, g, c, omega_a, exclude=ell)
    return EffectiveParams(
        gamma=float(gamma),
        ell=int(ell),
        xi=float(xi),
        g_ell=float(g_ell),
        r=float(gamma / g_ell),
    )
