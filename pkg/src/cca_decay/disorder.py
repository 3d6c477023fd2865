"""Long-range correlated on-site disorder built from a power-law spectrum.

The on-site frequency sequence is a superposition of cosines whose amplitudes
fall off as k**(-alpha/2), the discrete trace of fractional Brownian motion:

    eps_n = sum_{k=1}^{(N+1)/2} k**(-alpha/2) * cos(2*pi*n*k/L + phi_k)

with independent uniform phases phi_k, n = 1..N, and L = N (the wavelength of
the k = 1 component spans the whole chain; this convention is recorded in the
series metadata).  alpha = 0 gives equal weight to every mode (white noise);
increasing alpha concentrates weight in the long-wavelength components and the
series becomes smooth and persistent.

Every realization is normalized to zero mean and unit population variance, so
alpha changes only the correlation structure, never the overall disorder
strength.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "DisorderSeries",
    "generate_raw_series",
    "normalize_series",
    "sample_series",
    "save_series",
    "load_series",
]

# Sites per chunk when evaluating the cosine sum, keeps the (sites x modes)
# work array around 40 MB at the largest chain sizes used here.
_CHUNK = 1024


def _check_n_sites(n_sites: int) -> int:
    n = int(n_sites)
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n_sites must be odd and >= 3, got {n_sites}")
    return n


def generate_raw_series(n_sites: int, alpha: float, phases) -> np.ndarray:
    """Evaluate the unnormalized cosine sum for one phase draw.

    Parameters
    ----------
    n_sites : odd int >= 3
        Chain length N.  Also fixes the fundamental wavelength L = N.
    alpha : float >= 0
        Correlation exponent.  The spectral weight of mode k is k**(-alpha).
    phases : array_like, shape ((N+1)/2,)
        One phase per mode k = 1..(N+1)/2.

    Returns
    -------
    ndarray of shape (N,) with the raw (unnormalized) values for n = 1..N.
    """
    n = _check_n_sites(n_sites)
    alpha = float(alpha)
    if alpha < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    phases = np.asarray(phases, dtype=np.float64)
    n_modes = (n + 1) // 2
    if phases.shape != (n_modes,):
        raise ValueError(
            f"need {n_modes} phases for n_sites={n}, got shape {phases.shape}"
        )

    k = np.arange(1, n_modes + 1, dtype=np.float64)
    amplitude = k ** (-alpha / 2.0)
    base = 2.0 * np.pi * k / n  # L = N convention
    out = np.empty(n, dtype=np.float64)
    for start in range(0, n, _CHUNK):
        sites = np.arange(start + 1, min(start + _CHUNK, n) + 1, dtype=np.float64)
        # (sites, modes) phase grid; summation over modes is the spectrum sum
        arg = sites[:, None] * base[None, :] + phases[None, :]
        out[start : start + sites.size] = np.sum(np.cos(arg) * amplitude[None, :], axis=1)
    return out


def normalize_series(raw) -> np.ndarray:
    """Affine map of `raw` onto zero mean and unit population variance."""
    values = np.asarray(raw, dtype=np.float64)
    if values.ndim != 1 or values.size < 2:
        raise ValueError("need a 1-d series of length >= 2")
    centered = values - values.mean()
    std = np.sqrt(np.mean(centered**2))
    if not std > 0.0:
        raise ValueError("degenerate series: variance is zero")
    return centered / std


@dataclass
class DisorderSeries:
    """One normalized disorder realization with its provenance.

    values are in units of J; the invariants (mean 0, population variance 1,
    both to 1e-12) are checked on construction and the array is frozen.
    """

    values: np.ndarray
    alpha: float
    seed: int
    n_sites: int = field(default=0)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.n_sites == 0:
            self.n_sites = self.values.size
        if self.values.shape != (self.n_sites,):
            raise ValueError(
                f"values shape {self.values.shape} does not match n_sites={self.n_sites}"
            )
        _check_n_sites(self.n_sites)
        mean = float(self.values.mean())
        if abs(mean) > 1e-12:
            raise ValueError(f"series mean {mean:g} exceeds 1e-12")
        var = float(np.mean(self.values**2) - mean**2)
        if abs(var - 1.0) > 1e-12:
            raise ValueError(f"series variance {var:.15g} is not 1 within 1e-12")
        self.values.flags.writeable = False

    def to_metadata(self) -> dict:
        return {
            "n_sites": int(self.n_sites),
            "alpha": float(self.alpha),
            "seed": int(self.seed),
            "length_convention": "L = n_sites",
        }


def sample_series(n_sites: int, alpha: float, seed: int) -> DisorderSeries:
    """Draw one realization from the stream identified by `seed`.

    The seed names a counter-based Philox stream, so realizations of an
    ensemble can be generated in any order (or concurrently) and still come
    out bitwise identical.  Phases are i.i.d. uniform on [0, 2*pi).
    """
    n = _check_n_sites(n_sites)
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(int(seed))))
    phases = rng.uniform(0.0, 2.0 * np.pi, size=(n + 1) // 2)
    values = normalize_series(generate_raw_series(n, alpha, phases))
    return DisorderSeries(values=values, alpha=float(alpha), seed=int(seed), n_sites=n)


def save_series(series: DisorderSeries, path) -> None:
    """Write one value per line to `path` plus a JSON metadata sidecar."""
    path = str(path)
    with open(path, "w") as fh:
        for x in series.values:
            fh.write(f"{float(x)!r}\n")
    with open(path + ".json", "w") as fh:
        json.dump(series.to_metadata(), fh, indent=2)
        fh.write("\n")


def load_series(path) -> DisorderSeries:
    """Inverse of save_series."""
    path = str(path)
    values = np.loadtxt(path, dtype=np.float64)
    with open(path + ".json") as fh:
        meta = json.load(fh)
    return DisorderSeries(
        values=values,
        alpha=float(meta["alpha"]),
        seed=int(meta["seed"]),
        n_sites=int(meta["n_sites"]),
    )
