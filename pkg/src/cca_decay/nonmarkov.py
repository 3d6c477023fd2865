"""Non-Markovianity of a p_e trajectory from the accessible-volume measure.

The volume of the accessible state region shrinks with the excited-state
population as V(t) = p_e(t)^2.  Any interval where V grows signals
information backflow.  Two bookkeeping routes are implemented:

* slope sums: n_v adds every positive increment of V on the sample grid and
  n_tilde every negative one, so n_v - |n_tilde| telescopes exactly to
  V(end) - V(0);
* extrema sums: n_v = sum of V over interior maxima minus sum over interior
  minima, the form the closed-form model expressions are built from.

The primary scalar measure is N = n_v / |n_tilde| from the slope route.  It
is robust when the decay is incomplete (trapped population at the end of a
finite window), where the simplified N_V/(N_V + 1) form would overstate the
backflow.  Both are reported.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .evolution import Trajectory

__all__ = [
    "ExtremaList",
    "NonMarkovianityResult",
    "find_extrema",
    "n_v_extrema_sum",
    "n_v_integral",
    "non_markovianity",
]


@dataclass
class ExtremaList:
    """Interior extrema of p_e^2(t): arrays of (time, value) rows."""

    maxima: np.ndarray
    minima: np.ndarray

    def __post_init__(self):
        self.maxima = np.asarray(self.maxima, dtype=np.float64).reshape(-1, 2)
        self.minima = np.asarray(self.minima, dtype=np.float64).reshape(-1, 2)


@dataclass
class NonMarkovianityResult:
    n_v: float
    n_tilde: float
    n: float
    method: str
    n_v_extrema: float
    n_simplified: float


def _series(trajectory) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(trajectory, Trajectory):
        return trajectory.times, trajectory.p_e**2
    times, p_e = trajectory
    return np.asarray(times, dtype=np.float64), np.asarray(p_e, dtype=np.float64) ** 2


def find_extrema(trajectory, noise_floor: float = 1e-9) -> ExtremaList:
    """Locate interior extrema of p_e^2 on the sample grid.

    Runs of exactly equal values collapse to their midpoint sample, then
    every strict local extremum of the collapsed sequence is a candidate
    (candidates alternate max/min by construction).  Candidates are pruned
    by topographic prominence: the height of an extremum over its two
    neighboring candidates (trajectory endpoints serve as boundary
    references).  While the weakest prominence is at or below noise_floor,
    that extremum is removed and the like pair it leaves behind collapses
    onto the stronger member, so a micro-ripple never splits one true peak
    into two.  Measured against neighbors rather than adjacent samples, a
    flat-bottomed but deep minimum survives arbitrarily fine sampling while
    integrator roundoff ripple does not.  Endpoints are never extrema, and a
    plateau touching either endpoint is discarded with them.

    `trajectory` is a Trajectory or a (times, p_e) pair on a uniform grid.
    """
    times, s = _series(trajectory)
    if s.size < 3:
        raise ValueError(f"too-short trajectory: {s.size} samples")

    # collapse plateaus; keep the midpoint index of each run
    change = np.flatnonzero(np.diff(s) != 0.0)
    starts = np.concatenate(([0], change + 1))
    ends = np.concatenate((change, [s.size - 1]))  # inclusive run ends
    mids = (starts + ends) // 2
    vals = s[starts]

    cands: list[list[float]] = []  # rows [kind, time, value], kind +1/-1
    for j in range(1, len(vals) - 1):
        rise = vals[j] - vals[j - 1]
        fall = vals[j] - vals[j + 1]
        if rise > 0.0 and fall > 0.0:
            kind = 1.0
        elif rise < 0.0 and fall < 0.0:
            kind = -1.0
        else:
            continue
        if starts[j] == 0 or ends[j] == s.size - 1:
            continue  # plateau reaches an endpoint
        cands.append([kind, times[mids[j]], vals[j]])

    left_ref = vals[0]
    right_ref = vals[-1]
    while cands:
        worst = -1
        worst_prom = np.inf
        for i, (kind, _, v) in enumerate(cands):
            lv = cands[i - 1][2] if i > 0 else left_ref
            rv = cands[i + 1][2] if i < len(cands) - 1 else right_ref
            prom = min(kind * (v - lv), kind * (v - rv))
            if prom < worst_prom:
                worst_prom = prom
                worst = i
        if worst_prom > noise_floor:
            break
        kind = cands[worst][0]
        del cands[worst]
        # the two neighbors (when both exist) are now adjacent like extrema
        if 0 < worst < len(cands):
            a, b = cands[worst - 1], cands[worst]
            if a[0] == b[0]:
                weaker = worst if a[0] * (a[2] - b[2]) > 0 else worst - 1
                del cands[weaker]

    maxima = [(t, v) for k, t, v in cands if k > 0]
    minima = [(t, v) for k, t, v in cands if k < 0]
    return ExtremaList(
        maxima=np.array(maxima, dtype=np.float64).reshape(-1, 2),
        minima=np.array(minima, dtype=np.float64).reshape(-1, 2),
    )


def n_v_extrema_sum(extrema: ExtremaList) -> float:
    """Sum of p_e^2 over maxima minus sum over minima (nonnegative).

    Alternation makes every counted term a completed rise except when the
    series ends on a minimum (one more minimum than maxima): that trailing
    minimum belongs to a rise the trajectory never finished, and naively
    subtracting it can push the sum below zero on trapped, partially
    decayed curves.  It is dropped instead.
    """
    minima = extrema.minima[:, 1]
    if minima.size == extrema.maxima.shape[0] + 1:
        minima = np.delete(minima, int(np.argmax(extrema.minima[:, 0])))
    return float(np.sum(extrema.maxima[:, 1]) - np.sum(minima))


def n_v_integral(trajectory) -> tuple[float, float]:
    """Positive and negative slope sums of p_e^2 on the sample grid.

    Returns (n_v, n_tilde) with n_v >= 0 and n_tilde <= 0; their difference
    n_v - |n_tilde| telescopes exactly to p_e^2(end) - p_e^2(0).
    """
    _, s = _series(trajectory)
    diffs = np.diff(s)
    n_v = float(np.sum(diffs[diffs > 0.0]))
    n_tilde = float(np.sum(diffs[diffs < 0.0]))
    return n_v, n_tilde


def non_markovianity(trajectory, noise_floor: float = 1e-9) -> NonMarkovianityResult:
    """Both measures of backflow for one trajectory.

    The headline N is n_v/|n_tilde| from the slope sums.  The extrema-sum
    N_V and its simplified ratio N_V/(N_V + 1) (exact only when the decay
    completes, p_e(end) -> 0) ride along for comparison.
    """
    n_v, n_tilde = n_v_integral(trajectory)
    if n_tilde == 0.0:
        if n_v == 0.0:
            n = 0.0
        else:
            raise ValueError(
                "pathological trajectory: positive slopes but no negative ones"
            )
    else:
        n = n_v / abs(n_tilde)
    nv_ext = n_v_extrema_sum(find_extrema(trajectory, noise_floor=noise_floor))
    return NonMarkovianityResult(
        n_v=n_v,
        n_tilde=n_tilde,
        n=n,
        method="integral",
        n_v_extrema=nv_ext,
        n_simplified=nv_ext / (nv_ext + 1.0),
    )
