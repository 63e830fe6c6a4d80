"""Convergence sweeps and Schrodinger/Dirac comparison tables.

Pure drivers over the transfer-matrix modules: how fast the short-range
models approach their target connection, how the two frameworks'
transmission probabilities track each other across kinetic energy, and the
closed-form high-energy limits.  Matrix error is the Chebyshev norm (max
componentwise modulus) so sweep values compare directly with per-entry
tolerances.  Rows are independent pure computations; sweeps may run in
parallel as long as output stays ordered by the sweep variable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import dirac, schrodinger
from .connection import ConnectionParams, as_matrix
from .dirac import BarrierParams
from .schrodinger import NonRelMedium

__all__ = [
    "SweepRow",
    "nonrel_convergence",
    "dirac_convergence",
    "correspondence_table",
    "high_energy_asymptote",
    "loglog_slope",
]


@dataclass(frozen=True)
class SweepRow:
    """One point of a sweep: abscissa, value, short series tag."""

    x: float
    value: float
    label: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "value", float(self.value))
        if not self.x > 0.0:
            raise ValueError("sweep abscissa must be positive")
        if not math.isfinite(self.value):
            raise ValueError("sweep value must be finite")


def _chebyshev(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b)))


def nonrel_convergence(
    p: ConnectionParams, m: float, k: float, a_list: Iterable[float]
) -> list[SweepRow]:
    """Chebyshev error of the renormalized three-delta model against p.

    One row per half-spacing, largest spacing first.  Propagates
    SingularRenormalization for beta = 0 targets with alpha + delta = -2.
    """
    target = as_matrix(p)
    rows = []
    for a in sorted(float(a) for a in a_list)[::-1]:
        cfg = schrodinger.renormalized_strengths(p, a, m)
        med = NonRelMedium(m=m, k=k, A=cfg.A)
        err = _chebyshev(schrodinger.three_delta_transfer(cfg, med), target)
        rows.append(SweepRow(a, err, "schrodinger"))
    return rows


def dirac_convergence(
    b: BarrierParams, E: float, m: float, a_list: Iterable[float]
) -> list[SweepRow]:
    """Chebyshev error of the finite step barrier against its zero-width limit."""
    target = dirac.barrier_limit(b)
    rows = []
    for a in sorted(float(a) for a in a_list)[::-1]:
        err = _chebyshev(dirac.finite_barrier_transfer(b, a, E, m), target)
        rows.append(SweepRow(a, err, "dirac"))
    return rows


def correspondence_table(
    p: ConnectionParams, m: float, kinetic_list: Iterable[float]
) -> list[SweepRow]:
    """Transmission in both frameworks at matched kinetic energy.

    For each kinetic energy eps (ascending) three rows are emitted,
    labelled T2_schrodinger (at k = sqrt(2 m eps)), T2_dirac (at
    E = m + eps) and diff (their absolute difference).
    """
    rows = []
    for eps in sorted(float(e) for e in kinetic_list):
        if eps <= 0.0:
            raise ValueError("kinetic energies must be positive")
        t_s = schrodinger.transmission(p, NonRelMedium(m=m, k=math.sqrt(2.0 * m * eps)))
        t_d = dirac.transmission(p, m + eps, m)
        rows.append(SweepRow(eps, t_s, "T2_schrodinger"))
        rows.append(SweepRow(eps, t_d, "T2_dirac"))
        rows.append(SweepRow(eps, abs(t_s - t_d), "diff"))
    return rows


def high_energy_asymptote(p: ConnectionParams) -> tuple[float, float]:
    """Transmission limits of both frameworks as the energy grows unboundedly.

    Non-relativistic: 0 whenever beta != 0 (perfect reflection); for
    beta = 0 the limit is 4/(alpha^2 + delta^2 + 2), which is 1 exactly for
    the plain delta potential and extends the textbook statement to
    alpha != delta.  Dirac: 4/(alpha^2 + delta^2 + 2 + beta^2 + gamma^2),
    equal to 1 for the pure-vector barrier family (alpha = delta = cos v,
    gamma = -beta = sin v).  beta is compared against zero exactly, as in
    renormalized_strengths.
    """
    base = p.alpha * p.alpha + p.delta * p.delta + 2.0
    nonrel = 4.0 / base if p.beta == 0.0 else 0.0
    rel = 4.0 / (base + p.beta * p.beta + p.gamma * p.gamma)
    return nonrel, rel


def loglog_slope(rows: Sequence[SweepRow]) -> float:
    """Least-squares slope of log(value) vs log(x): the empirical decay order."""
    if len(rows) < 2:
        raise ValueError("need at least two rows")
    if any(row.value <= 0.0 for row in rows):
        raise ValueError("log-log slope needs positive values")
    xs = np.log([row.x for row in rows])
    ys = np.log([row.value for row in rows])
    return float(np.polyfit(xs, ys, 1)[0])
