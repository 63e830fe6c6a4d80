"""Point-interaction boundary conditions as 2x2 transfer matrices.

A point interaction in one dimension is a boundary condition tying the
two-component wave data on the right of a point to the data on the left,
psi(+0) = V psi(-0).  Conservation of the probability current
j = psi† sigma2 psi forces V = e^{i*theta} U with U real and det U = 1,
so the whole family is four real parameters plus one phase.  This module
owns that parametrisation, the delta/epsilon special cases, the current
conservation test, and plane-wave scattering off a single connection.

All operations are pure functions of immutable values and are safe to use
concurrently.  Natural units (hbar = c = 1) throughout the package.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SIGMA2",
    "TransferMatrix",
    "ConnectionParams",
    "ModePair",
    "ScatteringResult",
    "NotConnectionForm",
    "SingularProjection",
    "as_matrix",
    "conserves_current",
    "decompose",
    "delta_connection",
    "epsilon_connection",
    "scatter",
    "wrap_angle",
]

#: 2x2 complex matrix connecting two-component wave data across a region or
#: an interaction point.  A plain ndarray: validity (current conservation,
#: unimodularity) is checked by operations, never at construction.
TransferMatrix = np.ndarray

SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]])

_TWO_PI = 2.0 * math.pi

_DET_TOL = 1e-12          # SL(2,R) membership at construction
_BIORTHO_TOL = 1e-12      # mode-pair projections at construction
_UNITARITY_TOL = 1e-10    # |T|^2 + |R|^2 = 1 on scattering results
_REAL_FORM_TOL = 1e-8     # admission tolerance for decompose
_PROJECTION_FLOOR = 1e-14


class NotConnectionForm(ValueError):
    """Matrix is not e^{i*theta} U with U real and det U = 1 to tolerance."""


class SingularProjection(ValueError):
    """Forward mode projection vanished for a non-current-conserving matrix."""


def wrap_angle(theta: float) -> float:
    """Reduce an angle to the canonical interval (-pi, pi]."""
    t = theta % _TWO_PI
    if t > math.pi:
        t -= _TWO_PI
    return t


@dataclass(frozen=True)
class ConnectionParams:
    """Point-interaction parameters: e^{i*theta} [[alpha, beta], [gamma, delta]].

    alpha*delta - beta*gamma must equal 1 within 1e-12.  theta is stored in
    (-pi, pi]; no canonical range is standard, this one is the package
    convention and matches what decompose() returns.
    """

    alpha: float
    beta: float
    gamma: float
    delta: float
    theta: float = 0.0

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma", "delta", "theta"):
            object.__setattr__(self, name, float(getattr(self, name)))
        det = self.alpha * self.delta - self.beta * self.gamma
        if not math.isfinite(det) or abs(det - 1.0) > _DET_TOL:
            raise ValueError(
                f"alpha*delta - beta*gamma = {det!r}, not 1 within {_DET_TOL}"
            )
        object.__setattr__(self, "theta", wrap_angle(self.theta))


@dataclass(frozen=True)
class ModePair:
    """Right/left movers u_plus/u_minus with their dual modes v_plus/v_minus.

    The duals project amplitudes out of two-component wave data:
    v_s† u_s = 1 and v_s† u_{-s} = 0, checked to 1e-12 at construction.
    """

    u_plus: np.ndarray
    u_minus: np.ndarray
    v_plus: np.ndarray
    v_minus: np.ndarray

    def __post_init__(self) -> None:
        for name in ("u_plus", "u_minus", "v_plus", "v_minus"):
            vec = np.array(getattr(self, name), dtype=complex)
            if vec.shape != (2,):
                raise ValueError(f"{name} must be a 2-component vector")
            vec.setflags(write=False)
            object.__setattr__(self, name, vec)
        projections = (
            ("v_plus† u_plus", self.v_plus, self.u_plus, 1.0),
            ("v_minus† u_minus", self.v_minus, self.u_minus, 1.0),
            ("v_plus† u_minus", self.v_plus, self.u_minus, 0.0),
            ("v_minus† u_plus", self.v_minus, self.u_plus, 0.0),
        )
        for label, dual, mode, want in projections:
            got = complex(np.vdot(dual, mode))
            if abs(got - want) > _BIORTHO_TOL:
                raise ValueError(f"modes not bi-orthogonal: {label} = {got!r}")


@dataclass(frozen=True)
class ScatteringResult:
    """Transmission/reflection amplitudes and their probabilities."""

    t_amp: complex
    r_amp: complex
    t_prob: float
    r_prob: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "t_amp", complex(self.t_amp))
        object.__setattr__(self, "r_amp", complex(self.r_amp))
        object.__setattr__(self, "t_prob", float(self.t_prob))
        object.__setattr__(self, "r_prob", float(self.r_prob))
        for prob, amp, name in (
            (self.t_prob, self.t_amp, "t"),
            (self.r_prob, self.r_amp, "r"),
        ):
            if abs(prob - abs(amp) ** 2) > 1e-12:
                raise ValueError(f"{name}_prob must equal |{name}_amp|^2")
            if prob < 0.0 or prob > 1.0 + _UNITARITY_TOL:
                raise ValueError(f"{name}_prob outside [0, 1]: {prob!r}")
        total = self.t_prob + self.r_prob
        if abs(total - 1.0) > _UNITARITY_TOL:
            raise ValueError(f"non-unitary amplitudes: |T|^2 + |R|^2 = {total!r}")

    @classmethod
    def from_amplitudes(cls, t_amp: complex, r_amp: complex) -> "ScatteringResult":
        t_amp = complex(t_amp)
        r_amp = complex(r_amp)
        return cls(t_amp, r_amp, abs(t_amp) ** 2, abs(r_amp) ** 2)


def as_matrix(p: ConnectionParams) -> TransferMatrix:
    """Connection matrix e^{i*theta} [[alpha, beta], [gamma, delta]]."""
    phase = cmath.exp(1j * p.theta)
    return phase * np.array([[p.alpha, p.beta], [p.gamma, p.delta]], dtype=complex)


def delta_connection(v: float) -> TransferMatrix:
    """Connection of a delta potential of strength v: [[1, 0], [v, 1]].

    The wave function stays continuous and its derivative jumps by 2mv
    times the value; composing two delta connections adds the strengths.
    """
    return np.array([[1.0, 0.0], [v, 1.0]], dtype=complex)


def epsilon_connection(v: float) -> TransferMatrix:
    """Connection of an epsilon potential of strength v: [[1, v], [0, 1]].

    Transpose of the delta case: the derivative stays continuous and the
    value jumps proportionally to it.
    """
    return np.array([[1.0, v], [0.0, 1.0]], dtype=complex)


def conserves_current(M: TransferMatrix, tol: float) -> bool:
    """True iff M† sigma2 M = sigma2 componentwise within tol."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    M = np.asarray(M, dtype=complex)
    residual = M.conj().T @ SIGMA2 @ M - SIGMA2
    return bool(np.max(np.abs(residual)) <= tol)


def decompose(M: TransferMatrix) -> ConnectionParams:
    """Split M = e^{i*theta} U into connection parameters.

    The split is two-valued, (theta, U) vs (theta + pi, -U); the canonical
    representative makes the first nonzero entry of U in row-major order
    positive, with theta in (-pi, pi].  Admission is looser than the
    ConnectionParams invariant: entries may miss the real form and the
    determinant may miss 1 by up to 1e-8, and U is rescaled onto det 1
    before the parameters are built.

    Raises NotConnectionForm when no global phase makes the matrix real to
    tolerance, or the determinant is not 1 to tolerance.
    """
    M = np.asarray(M, dtype=complex)
    mags = np.abs(M)
    scale = float(mags.max())
    if not math.isfinite(scale) or scale == 0.0:
        raise NotConnectionForm("matrix is zero or non-finite")
    # Read the phase off the largest entry; a tiny one would give a noisy
    # argument.  The sign scan below restores the canonical branch.
    row, col = np.unravel_index(int(np.argmax(mags)), mags.shape)
    phase = cmath.phase(complex(M[row, col]))
    rotated = M * cmath.exp(-1j * phase)
    floor = _REAL_FORM_TOL * max(1.0, scale)
    if float(np.max(np.abs(rotated.imag))) > floor:
        raise NotConnectionForm("no global phase makes all entries real")
    u = rotated.real.copy()
    det = float(u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0])
    if abs(det - 1.0) > _REAL_FORM_TOL:
        raise NotConnectionForm(f"determinant {det!r} is not 1 within {_REAL_FORM_TOL}")
    for entry in u.ravel():
        if abs(entry) > floor:
            if entry < 0.0:
                u = -u
                phase += math.pi
            break
    u /= math.sqrt(det)
    return ConnectionParams(u[0, 0], u[0, 1], u[1, 0], u[1, 1], wrap_angle(phase))


def _inverse(M: np.ndarray) -> np.ndarray:
    # Explicit 2x2 adjugate over determinant; exact formula, no factorization.
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    if det == 0:
        raise ValueError("matrix is singular")
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]], dtype=complex) / det


def scatter(M: TransferMatrix, modes: ModePair) -> ScatteringResult:
    """Transmission and reflection of a right mover incident from the left.

    Matching T u+ = M (u+ + R u-) across the interaction and projecting
    with the dual modes gives T = 1 / (v+† M^-1 u+) and
    R = (v-† M^-1 u+) / (v+† M^-1 u+).

    M must conserve current (to ~1e-8) and the modes must be bi-orthogonal.
    If the forward projection vanishes, nothing gets through: for a
    current-conserving M this is reported as perfect reflection with
    r_amp = -1 (the modulus is forced to 1, the phase is not determined by
    the data).  Otherwise SingularProjection is raised.
    """
    M = np.asarray(M, dtype=complex)
    inv = _inverse(M)
    forward = complex(np.vdot(modes.v_plus, inv @ modes.u_plus))
    backward = complex(np.vdot(modes.v_minus, inv @ modes.u_plus))
    if abs(forward) < _PROJECTION_FLOOR:
        if conserves_current(M, 1e-8):
            return ScatteringResult.from_amplitudes(0.0, -1.0)
        raise SingularProjection(
            "forward projection v+† M^-1 u+ vanished and M does not conserve current"
        )
    return ScatteringResult.from_amplitudes(1.0 / forward, backward / forward)
