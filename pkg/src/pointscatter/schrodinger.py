"""Non-relativistic transfer-matrix machinery.

Propagates the pair (phi, phi'/2m) through constant vector potential,
provides the free plane-wave modes, and builds the three-delta short-range
model of a general point interaction: deltas of strengths v_minus, v_zero,
v_plus at x = -a, 0, +a with a constant vector potential A in between.
renormalized_strengths() makes the strengths a-dependent so the model
converges to a prescribed connection as a -> 0; transmission() is the
closed-form transmission probability through any connection.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .connection import ConnectionParams, ModePair, TransferMatrix, delta_connection

__all__ = [
    "NonRelMedium",
    "DeltaTriple",
    "ModesRequireFreeSpace",
    "SingularRenormalization",
    "propagator",
    "mode_vectors",
    "three_delta_transfer",
    "closed_form_transfer",
    "renormalized_strengths",
    "transmission",
]


class ModesRequireFreeSpace(ValueError):
    """Plane-wave modes are only defined at zero vector potential."""


class SingularRenormalization(ValueError):
    """No renormalization scheme covers beta = 0 with alpha + delta = -2."""


@dataclass(frozen=True)
class NonRelMedium:
    """Mass, wave number k = sqrt(2mE) with E > 0, and vector potential A."""

    m: float
    k: float
    A: float = 0.0

    def __post_init__(self) -> None:
        for name in ("m", "k", "A"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not self.m > 0.0:
            raise ValueError("mass must be positive")
        if not self.k > 0.0:
            raise ValueError("wave number must be positive (scattering states only)")


@dataclass(frozen=True)
class DeltaTriple:
    """Delta strengths at x = +a, 0, -a and the vector potential between them."""

    v_plus: float
    v_zero: float
    v_minus: float
    a: float
    A: float = 0.0

    def __post_init__(self) -> None:
        for name in ("v_plus", "v_zero", "v_minus", "a", "A"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not self.a > 0.0:
            raise ValueError("half-spacing a must be positive")


def propagator(x: float, med: NonRelMedium) -> TransferMatrix:
    """Transfer matrix over displacement x at constant vector potential.

    e^{iAx} [cos(kx) I + sin(kx)/k [[-iA, 2m], [(A^2 - k^2)/2m, iA]]].
    At A = 0 this reduces to the free propagator
    [[cos kx, (2m/k) sin kx], [-(k/2m) sin kx, cos kx]].
    """
    m, k, A = med.m, med.k, med.A
    c = math.cos(k * x)
    s = math.sin(k * x) / k
    traceless = np.array(
        [[-1j * A, 2.0 * m], [(A * A - k * k) / (2.0 * m), 1j * A]], dtype=complex
    )
    return cmath.exp(1j * A * x) * (c * np.eye(2, dtype=complex) + s * traceless)


def mode_vectors(med: NonRelMedium) -> ModePair:
    """Bi-orthogonal plane-wave modes of the free propagator.

    u± = (1, ±ik/2m)/sqrt2 propagate as e^{±ikx}; the duals
    v± = (1, ±i2m/k)/sqrt2 are the matching eigenvectors of the adjoint.
    Only defined in free space: raises ModesRequireFreeSpace for A != 0.
    """
    if med.A != 0.0:
        raise ModesRequireFreeSpace("plane-wave modes require A = 0")
    slope = med.k / (2.0 * med.m)
    rt2 = math.sqrt(2.0)
    return ModePair(
        u_plus=np.array([1.0, 1j * slope]) / rt2,
        u_minus=np.array([1.0, -1j * slope]) / rt2,
        v_plus=np.array([1.0, 1j / slope]) / rt2,
        v_minus=np.array([1.0, -1j / slope]) / rt2,
    )


def three_delta_transfer(cfg: DeltaTriple, med: NonRelMedium) -> TransferMatrix:
    """Transfer matrix of the three-delta model from x = -a-0 to x = +a+0.

    Five factors: delta at -a, propagation over a, delta at 0, propagation
    over a, delta at +a.  The side deltas pick up extra imaginary strengths
    ∓iA/2m from the vector potential switching on and off at x = ∓a;
    delta_connection builds those factors with complex strength unchanged.
    """
    if med.A != cfg.A:
        raise ValueError("medium vector potential must equal the triple's A")
    hop = propagator(cfg.a, med)
    edge = 1j * cfg.A / (2.0 * med.m)
    return (
        delta_connection(cfg.v_plus - edge)
        @ hop
        @ delta_connection(cfg.v_zero)
        @ hop
        @ delta_connection(cfg.v_minus + edge)
    )


def closed_form_transfer(cfg: DeltaTriple, med: NonRelMedium) -> TransferMatrix:
    """Entry-by-entry closed form of the three-delta transfer matrix.

    Fully independent of the matrix product in three_delta_transfer, so the
    two serve as mutual oracles.  The magnetic contribution factors out as
    the phase e^{2iAa} times a real unimodular matrix.
    """
    if med.A != cfg.A:
        raise ValueError("medium vector potential must equal the triple's A")
    m, k = med.m, med.k
    a = cfg.a
    vp, v0, vm = cfg.v_plus, cfg.v_zero, cfg.v_minus
    sin2, cos2 = math.sin(2.0 * k * a), math.cos(2.0 * k * a)
    sin1, cos1 = math.sin(k * a), math.cos(k * a)
    u12 = 2.0 * m * sin2 / k + 4.0 * m * m * sin1 * sin1 / (k * k) * v0
    u11 = cos2 + m * sin2 / k * v0 + u12 * vm
    u22 = cos2 + m * sin2 / k * v0 + u12 * vp
    u21 = (
        cos1 * cos1 * (vp + v0 + vm)
        - sin1 * sin1 * (vp + vm)
        + m * sin2 / k * (v0 * (vp + vm) - k * k / (2.0 * m * m))
        + u12 * vp * vm
    )
    real_part = np.array([[u11, u12], [u21, u22]], dtype=complex)
    return cmath.exp(2j * cfg.A * a) * real_part


def renormalized_strengths(p: ConnectionParams, a: float, m: float) -> DeltaTriple:
    """a-dependent strengths steering the three-delta model to connection p.

    Two disjoint schemes, selected on beta == 0 exactly:

        beta != 0:  v+ = -1/2ma + (delta+1)/beta,
                    v- = -1/2ma + (alpha+1)/beta,
                    v0 = beta/4m^2a^2
        beta == 0:  v+ = (delta-1)/4ma,
                    v- = (alpha-1)/4ma,
                    v0 = 4*gamma/(alpha+delta+2)

    Both carry vector potential A = theta/2a.  The plain delta potential
    (alpha = delta = 1, beta = 0) is the one case needing no a-dependence.
    A tiny nonzero beta makes v0 = beta/4m^2a^2 enormous and downstream
    matrix products lose digits at small a; the CLI warns below |beta| = 1e-6.

    Raises SingularRenormalization when beta = 0 and alpha + delta = -2.
    """
    if a <= 0.0:
        raise ValueError("half-spacing a must be positive")
    if m <= 0.0:
        raise ValueError("mass must be positive")
    if p.beta != 0.0:
        v_plus = -1.0 / (2.0 * m * a) + (p.delta + 1.0) / p.beta
        v_minus = -1.0 / (2.0 * m * a) + (p.alpha + 1.0) / p.beta
        v_zero = p.beta / (4.0 * m * m * a * a)
    else:
        denom = p.alpha + p.delta + 2.0
        if denom == 0.0:
            raise SingularRenormalization(
                "beta = 0 with alpha + delta = -2: "
                "the beta-zero scheme divides by alpha + delta + 2"
            )
        v_plus = (p.delta - 1.0) / (4.0 * m * a)
        v_minus = (p.alpha - 1.0) / (4.0 * m * a)
        v_zero = 4.0 * p.gamma / denom
    return DeltaTriple(v_plus, v_zero, v_minus, a, p.theta / (2.0 * a))


def transmission(p: ConnectionParams, med: NonRelMedium) -> float:
    """Transmission probability through connection p at wave number med.k.

    4 / [alpha^2 + delta^2 + 2 + beta^2 k^2/4m^2 + gamma^2 4m^2/k^2],
    independent of theta and of med.A (the incoming and outgoing modes live
    in free space).  Always in [0, 1].
    """
    m, k = med.m, med.k
    bracket = (
        p.alpha * p.alpha
        + p.delta * p.delta
        + 2.0
        + p.beta * p.beta * k * k / (4.0 * m * m)
        + p.gamma * p.gamma * 4.0 * m * m / (k * k)
    )
    return min(1.0, 4.0 / bracket)
