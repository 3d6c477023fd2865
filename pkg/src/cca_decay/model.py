"""Single-excitation Hamiltonians for the atom + cavity-array system.

With one excitation shared between a two-level atom and N cavities, the
Hamiltonian acts on an (N+1)-dimensional subspace spanned by (atom, cavity 1,
..., cavity N).  Its matrix is the chain graph with on-site energies eps_n,
nearest-neighbor hopping J, plus a single bond of strength g from the atom
(index 0) to the central cavity c = (N+1)/2.  The operator is kept in this
structural form (diagonal plus two bond rules) and applied matrix-free; the
dense form exists only for small cross-checks.

Energies are measured in units of J and times in 1/J, so J = 1 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .disorder import DisorderSeries

__all__ = [
    "SystemConfig",
    "SingleExcitationHamiltonian",
    "SymmetricTridiagonal",
    "build_full_hamiltonian",
    "build_free_field",
]

_DENSE_LIMIT = 64  # largest cavity count that may be densified (tests only)


@dataclass(frozen=True)
class SystemConfig:
    """Static system parameters (energies in units of J)."""

    n_cavities: int
    coupling: float = 0.1
    atom_frequency: float = 0.0
    hopping: float = 1.0

    def __post_init__(self):
        if self.n_cavities < 1 or self.n_cavities % 2 == 0:
            raise ValueError(f"n_cavities must be odd and positive, got {self.n_cavities}")
        if self.coupling < 0:
            raise ValueError(f"coupling must be >= 0, got {self.coupling}")
        if not self.hopping > 0:
            raise ValueError(f"hopping must be positive, got {self.hopping}")

    @property
    def atom_site(self) -> int:
        """Cavity index the atom couples to: the chain center (N+1)/2."""
        return (self.n_cavities + 1) // 2


def _series_values(series, n_expected: int) -> np.ndarray:
    if isinstance(series, DisorderSeries):
        values = series.values
    else:
        values = np.asarray(series, dtype=np.float64)
    if values.shape != (n_expected,):
        raise ValueError(
            f"series length {values.shape} does not match n_cavities={n_expected}"
        )
    return values


@dataclass
class SymmetricTridiagonal:
    """Symmetric tridiagonal operator (the free field in the cavity basis)."""

    diagonal: np.ndarray
    off_diagonal: np.ndarray

    def __post_init__(self):
        self.diagonal = np.asarray(self.diagonal, dtype=np.float64)
        self.off_diagonal = np.asarray(self.off_diagonal, dtype=np.float64)
        if self.off_diagonal.shape != (self.diagonal.size - 1,):
            raise ValueError("off_diagonal must have length len(diagonal) - 1")

    @property
    def dimension(self) -> int:
        return self.diagonal.size

    def apply(self, v):
        v = np.asarray(v)
        if v.shape != (self.dimension,):
            raise ValueError(f"vector length {v.shape} != dimension {self.dimension}")
        w = self.diagonal * v
        w[:-1] += self.off_diagonal * v[1:]
        w[1:] += self.off_diagonal * v[:-1]
        return w


@dataclass
class SingleExcitationHamiltonian:
    """Structural form of the (N+1) x (N+1) atom + chain Hamiltonian.

    diagonal[0] is the atom frequency, diagonal[1..N] the cavity energies.
    Bonds: (n, n+1) with amplitude chain_hopping for n = 1..N-1, plus
    (0, atom_site) with amplitude atom_bond.  Immutable once built; `apply`
    is reentrant and safe to share across workers.
    """

    diagonal: np.ndarray
    chain_hopping: float
    atom_bond: float
    atom_site: int

    def __post_init__(self):
        self.diagonal = np.asarray(self.diagonal, dtype=np.float64)
        n = self.diagonal.size - 1
        if n < 1 or n % 2 == 0:
            raise ValueError(f"need an odd cavity count, got {n}")
        if not 1 <= self.atom_site <= n:
            raise ValueError(f"atom_site {self.atom_site} outside 1..{n}")
        self.diagonal.flags.writeable = False

    @property
    def dimension(self) -> int:
        return self.diagonal.size

    @property
    def n_cavities(self) -> int:
        return self.diagonal.size - 1

    def apply(self, v):
        """Matrix-vector product H v in O(N) time, preserving the basis."""
        v = np.asarray(v)
        if v.shape != (self.dimension,):
            raise ValueError(f"vector length {v.shape} != dimension {self.dimension}")
        n = self.n_cavities
        w = self.diagonal * v
        # chain bonds between cavities 1..N (matrix indices 1..N)
        w[1:n] += self.chain_hopping * v[2 : n + 1]
        w[2 : n + 1] += self.chain_hopping * v[1:n]
        # the single atom-cavity bond
        w[0] += self.atom_bond * v[self.atom_site]
        w[self.atom_site] += self.atom_bond * v[0]
        return w

    def dense(self) -> np.ndarray:
        """Dense matrix for cross-checks.  Refuses large systems on purpose."""
        if self.n_cavities > _DENSE_LIMIT:
            raise ValueError(
                f"dense form is for tests only (N <= {_DENSE_LIMIT}), got N={self.n_cavities}"
            )
        n = self.n_cavities
        h = np.diag(self.diagonal.copy())
        for i in range(1, n):
            h[i, i + 1] = h[i + 1, i] = self.chain_hopping
        h[0, self.atom_site] = h[self.atom_site, 0] = self.atom_bond
        return h


def build_full_hamiltonian(config: SystemConfig, series) -> SingleExcitationHamiltonian:
    """Assemble atom + chain Hamiltonian from a config and one disorder draw.

    `series` may be a DisorderSeries or any length-N array of on-site
    energies (e.g. zeros for the homogeneous chain).
    """
    values = _series_values(series, config.n_cavities)
    diagonal = np.empty(config.n_cavities + 1, dtype=np.float64)
    diagonal[0] = config.atom_frequency
    diagonal[1:] = values
    return SingleExcitationHamiltonian(
        diagonal=diagonal,
        chain_hopping=config.hopping,
        atom_bond=config.coupling,
        atom_site=config.atom_site,
    )


def build_free_field(config: SystemConfig, series) -> SymmetricTridiagonal:
    """The bare cavity chain (atom row and column dropped)."""
    values = _series_values(series, config.n_cavities)
    off = np.full(config.n_cavities - 1, config.hopping, dtype=np.float64)
    return SymmetricTridiagonal(diagonal=values.copy(), off_diagonal=off)
