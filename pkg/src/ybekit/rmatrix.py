"""Parametrized R-matrix families solving the Yang-Baxter equation.

The equation checked throughout is

    R12(p1) R23(p2) R12(p3) = R23(p3) R12(p2) R23(p1)

with the middle parameter fixed by the family's additivity rule:

* galilean:   p2 = p1 + p3 (rational families; for angle-parametrized
  members this is tan(t2) = tan(t1) + tan(t3))
* lorentzian: tan(t2) = (tan(t1) + tan(t3)) / (1 + tan(t1) tan(t3))

Four families are bundled: the rational type-I solution and the
trigonometric type-II solution, each in its 4x4 two-qubit form and in its
2x2 fusion-space form.  A Wigner rotation-matrix route to the same 2x2
solutions is provided through :func:`wigner_d_half` and
:func:`conjugate_by_v`, together with the phase-angle constraints that make
the rotation matrices braid or satisfy the Yang-Baxter equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .braiding import permutation_matrix
from .tensor import IDENTITY_2, kron, norm_inf

TAN_POLE_GUARD = 1e-8
DEFAULT_A0 = -1.0

V_MATRIX = np.array([[1, 1j], [1j, 1]], dtype=complex) / np.sqrt(2)


def type2_r_4x4(theta: float, varphi: float = 0.0) -> np.ndarray:
    """Trigonometric 4x4 solution; unitary for every (theta, varphi).

    At theta = pi/4, varphi = 0 this is the Bell braid matrix.
    """
    c, s = np.cos(theta), np.sin(theta)
    e_plus = np.exp(1j * varphi)
    e_minus = np.exp(-1j * varphi)
    return np.array(
        [
            [c, 0, 0, s * e_plus],
            [0, c, s, 0],
            [0, -s, c, 0],
            [-s * e_minus, 0, 0, c],
        ],
        dtype=complex,
    )


def type1_r_4x4(mu: float) -> np.ndarray:
    """Rational 4x4 solution (I + mu*P)/sqrt(|1 - mu^2|); not unitary for mu != 0."""
    denom = 1.0 - mu * mu
    if abs(denom) < 1e-12:
        raise ValueError(f"normalization pole at |mu| = 1 (mu = {mu})")
    return (np.eye(4, dtype=complex) + mu * permutation_matrix()) / np.sqrt(abs(denom))


def type1_r1_2x2(mu: float) -> np.ndarray:
    """Diagonal member of the rational 2x2 pair."""
    denom = 1.0 - mu * mu
    if abs(denom) < 1e-12:
        raise ValueError(f"normalization pole at |mu| = 1 (mu = {mu})")
    return np.diag([1.0 - mu, 1.0 + mu]).astype(complex) / np.sqrt(abs(denom))


def type1_r2_2x2(mu: float) -> np.ndarray:
    """Mixing member of the rational 2x2 pair."""
    denom = 1.0 - mu * mu
    if abs(denom) < 1e-12:
        raise ValueError(f"normalization pole at |mu| = 1 (mu = {mu})")
    return np.array(
        [[2 + mu, -np.sqrt(3) * mu], [-np.sqrt(3) * mu, 2 - mu]], dtype=complex
    ) / (2 * np.sqrt(abs(denom)))


def type2_r1_2x2(theta: float) -> np.ndarray:
    """Diagonal member of the trigonometric 2x2 pair (full-angle convention)."""
    return np.diag([np.exp(1j * theta), np.exp(-1j * theta)])


def type2_r2_2x2(theta: float) -> np.ndarray:
    """Mixing member of the trigonometric 2x2 pair (full-angle convention)."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, 1j * s], [1j * s, c]], dtype=complex)


def wigner_d_half(theta: float, phi: float) -> np.ndarray:
    """Spin-1/2 rotation matrix [[cos, -sin e^{-i phi}], [sin e^{i phi}, cos]]."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array(
        [[c, -s * np.exp(-1j * phi)], [s * np.exp(1j * phi), c]], dtype=complex
    )


def conjugate_by_v(m: np.ndarray) -> np.ndarray:
    """V M V^dag with V = [[1, i], [i, 1]]/sqrt(2).

    Maps wigner_d_half(theta, 0) to diag(e^{i theta}, e^{-i theta}) and
    wigner_d_half(theta, pi/2) to the trigonometric mixing matrix, i.e. the
    2x2 pair in the full-angle convention.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    return V_MATRIX @ m @ V_MATRIX.conj().T


def phi_from_theta(theta: float) -> float:
    """Phase angle making the rotation matrices braid at a common theta.

    Solves cos(phi) = cos(2 theta) / (1 - cos(2 theta)) on the principal
    branch [0, pi]; raises ValueError when the ratio leaves [-1, 1].
    """
    c2 = np.cos(2.0 * theta)
    denom = 1.0 - c2
    if abs(denom) < 1e-14:
        raise ValueError(f"no phase solution at theta = {theta} (degenerate rotation)")
    ratio = c2 / denom
    if not -1.0 <= ratio <= 1.0:
        raise ValueError(
            f"no phase solution at theta = {theta}: cos(phi) would be {ratio:.6g}"
        )
    return float(np.arccos(ratio))


def phi_from_three_thetas(theta1: float, theta2: float, theta3: float) -> float:
    """Phase angle for the Yang-Baxter equation of rotation matrices.

    cos(phi) = [((tan t1 + tan t3) - tan t2) / (tan t1 tan t2 tan t3) - 1]/2
    on the principal branch.  Galilean triples give 2*pi/3, lorentzian
    triples give pi/2, and equal angles reduce to :func:`phi_from_theta`.
    """
    tans = []
    for t in (theta1, theta2, theta3):
        if abs(np.cos(t)) < TAN_POLE_GUARD:
            raise ValueError(f"tangent pole at theta = {t}")
        tan = np.tan(t)
        if abs(tan) < 1e-14:
            raise ValueError(f"vanishing tangent at theta = {t}")
        tans.append(tan)
    t1, t2, t3 = tans
    ratio = 0.5 * (((t1 + t3) - t2) / (t1 * t2 * t3) - 1.0)
    if not -1.0 - 1e-12 <= ratio <= 1.0 + 1e-12:
        raise ValueError(f"no phase solution: cos(phi) would be {ratio:.6g}")
    return float(np.arccos(np.clip(ratio, -1.0, 1.0)))


# ---------------------------------------------------------------------------
# rational Yang-Baxterization bookkeeping
# ---------------------------------------------------------------------------

def rational_g(mu: float, d: float, a0: float = DEFAULT_A0) -> float:
    """Coupling G(mu) = mu / (a0 - d*mu/2) of the rational scheme."""
    denom = a0 - d * mu / 2.0
    if abs(denom) < 1e-14:
        raise ValueError(f"coupling pole at mu = {mu} for d = {d}, a0 = {a0}")
    return mu / denom


def rational_beta_sq(d: float, a0: float = DEFAULT_A0) -> float:
    """Additivity deformation beta^2 = (d^2 - 4) / (2 a0)^2."""
    return (d * d - 4.0) / (2.0 * a0) ** 2


def rational_f(mu: float, nu: float, d: float, a0: float = DEFAULT_A0) -> float:
    """Composed parameter f(mu, nu) = (mu + nu) / (1 + beta^2 mu nu)."""
    beta_sq = rational_beta_sq(d, a0)
    denom = 1.0 + beta_sq * mu * nu
    if abs(denom) < 1e-14:
        raise ValueError(f"additivity pole at (mu, nu) = ({mu}, {nu})")
    return (mu + nu) / denom


# ---------------------------------------------------------------------------
# families and the YBE checker
# ---------------------------------------------------------------------------

def _galilean_middle(p1: float, p3: float) -> float:
    return p1 + p3


def _lorentzian_middle(p1: float, p3: float) -> float:
    for p in (p1, p3):
        if abs(np.cos(p)) < TAN_POLE_GUARD:
            raise ValueError(f"angle {p} too close to a tangent pole")
    return float(np.arctan2(np.sin(p1 + p3), np.cos(p1 - p3)))


@dataclass(frozen=True)
class RMatrixFamily:
    """A parametrized Yang-Baxter solution with its additivity rule.

    ``evaluators`` holds one function for 4x4 families (both roles are the
    same matrix, embedded on neighboring qubit pairs) or two functions for
    2x2 families (diagonal role, mixing role).
    """

    name: str
    dim: int
    additivity: str
    evaluators: tuple[Callable[[float], np.ndarray], ...]
    a0: float = DEFAULT_A0

    def middle(self, p1: float, p3: float) -> float:
        """Middle parameter from the additivity rule; raises near tan poles."""
        if self.additivity == "galilean":
            return _galilean_middle(p1, p3)
        if self.additivity == "lorentzian":
            return _lorentzian_middle(p1, p3)
        raise ValueError(f"unknown additivity rule {self.additivity!r}")

    def role_matrices(self, p: float) -> tuple[np.ndarray, np.ndarray]:
        """(R12, R23) at parameter p, lifted to the common checking space."""
        if self.dim == 4:
            r = self.evaluators[0](p)
            return kron(r, IDENTITY_2), kron(IDENTITY_2, r)
        r12, r23 = self.evaluators
        return r12(p), r23(p)


def check_ybe(family: RMatrixFamily, p1: float, p3: float) -> float:
    """Max-abs residual of the Yang-Baxter equation at (p1, middle, p3)."""
    p2 = family.middle(p1, p3)
    r12_1, r23_1 = family.role_matrices(p1)
    r12_2, r23_2 = family.role_matrices(p2)
    r12_3, r23_3 = family.role_matrices(p3)
    lhs = r12_1 @ r23_2 @ r12_3
    rhs = r23_3 @ r12_2 @ r23_1
    return norm_inf(lhs - rhs)


def bundled_families() -> dict[str, RMatrixFamily]:
    """The four solution families shipped with the package."""
    return {
        "type1_4x4": RMatrixFamily("type1_4x4", 4, "galilean", (type1_r_4x4,)),
        "type2_4x4": RMatrixFamily(
            "type2_4x4", 4, "lorentzian", (lambda t: type2_r_4x4(t, 0.0),)
        ),
        "type1_2x2": RMatrixFamily(
            "type1_2x2", 2, "galilean", (type1_r1_2x2, type1_r2_2x2)
        ),
        "type2_2x2": RMatrixFamily(
            "type2_2x2", 2, "lorentzian", (type2_r1_2x2, type2_r2_2x2)
        ),
    }
