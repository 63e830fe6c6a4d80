"""Relativistic (Dirac) transfer-matrix machinery.

One-dimensional Dirac spinors propagate through constant scalar potential
S, vector-potential time component V and spatial component A via a 2x2
transfer matrix with a trigonometric or hyperbolic branch, set by the sign
of (m+E+S-V)(E-m-S-V).  A single step barrier of shrinking width 2a at
fixed integrated strengths s = 2aS, v = 2aV, theta = 2aA realises a
three-parameter family of point interactions without renormalizing any
coupling; s = v gives the delta connection and s = -v the epsilon
connection, so both arise from one zero-range scalar/vector pair.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .connection import ConnectionParams, ModePair, TransferMatrix

__all__ = [
    "DiracMedium",
    "BarrierParams",
    "BarrierClass",
    "DegenerateModes",
    "propagator",
    "free_mode_vectors",
    "barrier_limit",
    "finite_barrier_transfer",
    "transmission",
    "classify",
]


class DegenerateModes(ValueError):
    """No propagating free modes: E - m is zero or negative."""


@dataclass(frozen=True)
class DiracMedium:
    """Mass, energy, and the three constant potentials S, V, A.

    |E| must exceed m so the exterior free modes propagate.  The spinor
    coupling coefficients are derived on the fly, never stored:
    k_plus = m+E+S-V, k_minus = E-m-S-V, k = sqrt(|k_plus * k_minus|).
    """

    m: float
    E: float
    S: float = 0.0
    V: float = 0.0
    A: float = 0.0

    def __post_init__(self) -> None:
        for name in ("m", "E", "S", "V", "A"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not self.m > 0.0:
            raise ValueError("mass must be positive")
        if not self.E * self.E > self.m * self.m:
            raise ValueError("|E| must exceed m (propagating exterior modes)")

    @property
    def k_plus(self) -> float:
        return self.m + self.E + self.S - self.V

    @property
    def k_minus(self) -> float:
        return self.E - self.m - self.S - self.V

    @property
    def k(self) -> float:
        return math.sqrt(abs(self.k_plus * self.k_minus))


@dataclass(frozen=True)
class BarrierParams:
    """Integrated strengths of a vanishing-width barrier.

    s = 2aS, v = 2aV, theta = 2aA held fixed as the width 2a shrinks.  The
    derived combinations p_plus = s - v and p_minus = -s - v control which
    branch the zero-width limit lands on.
    """

    s: float
    v: float
    theta: float = 0.0

    def __post_init__(self) -> None:
        for name in ("s", "v", "theta"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, value)

    @property
    def p_plus(self) -> float:
        return self.s - self.v

    @property
    def p_minus(self) -> float:
        return -self.s - self.v

    @property
    def p(self) -> float:
        return math.sqrt(abs(self.p_plus * self.p_minus))


class BarrierClass(NamedTuple):
    """Barrier classification; strength is set for delta/epsilon only."""

    kind: str
    strength: Optional[float] = None


def _kernel(w_plus: float, w_minus: float, x: float) -> np.ndarray:
    """exp(x [[0, w_plus], [-w_minus, 0]]) in closed form, all sign branches."""
    product = w_plus * w_minus
    if product > 0.0:
        w = math.sqrt(product)
        c = math.cos(w * x)
        s = math.sin(w * x) / w
    elif product < 0.0:
        w = math.sqrt(-product)
        c = math.cosh(w * x)
        s = math.sinh(w * x) / w
    else:
        # One coefficient vanishes, the exponential series truncates.
        c = 1.0
        s = x
    return np.array([[c, w_plus * s], [-w_minus * s, c]], dtype=complex)


def propagator(x: float, med: DiracMedium) -> TransferMatrix:
    """Spinor transfer matrix over displacement x in constant potentials.

    Oscillatory when k_plus*k_minus > 0, cosh/sinh when it is negative, and
    the linear limit [[1, k_plus x], [-k_minus x, 1]] when either
    coefficient vanishes.  The spatial vector potential only contributes
    the phase e^{iAx}; the determinant is e^{2iAx} on every branch.
    """
    return cmath.exp(1j * med.A * x) * _kernel(med.k_plus, med.k_minus, x)


def free_mode_vectors(E: float, m: float) -> ModePair:
    """Bi-orthogonal plane-wave spinor modes at energy E > m.

    u± = (1, ±i(E-m)/k)/sqrt2 and duals v± = (1, ±i(E+m)/k)/sqrt2 with
    k = sqrt(E^2 - m^2).  For E - m << m these approach the
    non-relativistic modes: the lower spinor component degenerates into the
    scaled derivative of the upper one.
    """
    if m <= 0.0:
        raise ValueError("mass must be positive")
    if E - m < 1e-300:
        raise DegenerateModes("E - m vanishes: no propagating modes")
    k_plus = E + m
    k_minus = E - m
    k = math.sqrt(k_plus * k_minus)
    rt2 = math.sqrt(2.0)
    return ModePair(
        u_plus=np.array([1.0, 1j * k_minus / k]) / rt2,
        u_minus=np.array([1.0, -1j * k_minus / k]) / rt2,
        v_plus=np.array([1.0, 1j * k_plus / k]) / rt2,
        v_minus=np.array([1.0, -1j * k_plus / k]) / rt2,
    )


def barrier_limit(b: BarrierParams) -> TransferMatrix:
    """Zero-width limit of the step barrier at fixed integrated strengths.

    e^{i theta} times the kernel built from p± = ±s - v: trigonometric for
    s^2 < v^2, hyperbolic for s^2 > v^2, and on the boundary s^2 = v^2 the
    linear matrix [[1, p_plus], [-p_minus, 1]], which is the delta
    connection of strength 2s at s = v and the epsilon connection of
    strength 2s at s = -v.
    """
    return cmath.exp(1j * b.theta) * _kernel(b.p_plus, b.p_minus, 1.0)


def finite_barrier_transfer(
    b: BarrierParams, a: float, E: float, m: float
) -> TransferMatrix:
    """Transfer matrix of the width-2a step barrier carrying strengths b.

    Propagation over 2a with S = s/2a, V = v/2a, A = theta/2a; converges to
    barrier_limit(b) as a -> 0 at fixed E and m.
    """
    if a <= 0.0:
        raise ValueError("half-width a must be positive")
    med = DiracMedium(
        m=m, E=E, S=b.s / (2.0 * a), V=b.v / (2.0 * a), A=b.theta / (2.0 * a)
    )
    return propagator(2.0 * a, med)


def transmission(p: ConnectionParams, E: float, m: float) -> float:
    """Transmission probability through connection p at energy E > m.

    4 / [alpha^2 + delta^2 + 2 + beta^2 (E-m)/(E+m) + gamma^2 (E+m)/(E-m)],
    independent of theta.  Always in [0, 1].
    """
    if m <= 0.0:
        raise ValueError("mass must be positive")
    if E <= m:
        raise ValueError("energy must exceed the mass")
    ratio = (E - m) / (E + m)
    bracket = (
        p.alpha * p.alpha
        + p.delta * p.delta
        + 2.0
        + p.beta * p.beta * ratio
        + p.gamma * p.gamma / ratio
    )
    return min(1.0, 4.0 / bracket)


def classify(b: BarrierParams) -> BarrierClass:
    """Name the point interaction realised by the zero-width barrier.

    Equal scalar and vector strengths give a delta of strength 2s, opposite
    ones an epsilon of strength 2s; those identifications hold at theta = 0
    only, so s = ±v with theta != 0 raises ValueError.  Away from the
    boundary the branch is trig (s^2 < v^2) or hyperbolic (s^2 > v^2).
    The comparisons are exact: floating sweeps should band s^2 - v^2
    against their own tolerance before calling this.
    """
    if b.s == b.v or b.s == -b.v:
        if b.theta != 0.0:
            raise ValueError("delta/epsilon identification requires theta = 0")
        kind = "delta" if b.s == b.v else "epsilon"
        return BarrierClass(kind, 2.0 * b.s)
    if b.s * b.s < b.v * b.v:
        return BarrierClass("trig")
    return BarrierClass("hyperbolic")
