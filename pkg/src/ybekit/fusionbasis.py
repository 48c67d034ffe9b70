"""Four-strand fusion bases and two-dimensional reductions.

Both braid families leave a two-dimensional subspace of the 4-qubit chain
invariant, spanned by an orthonormal pair (e1, e2) built from entangled
two-site states:

* type-I (loop value 2): singlet pairs on sites (1,2)(3,4) and (4,1)(2,3)
* type-II (loop value sqrt(2)): phased pairs of the Ising kind

:func:`reduce_operator` extracts the 2x2 matrix of any operator that
preserves the span and reports the leakage norm otherwise.
:func:`verify_basis_reduction` cross-checks the 8x8 factorized scattering
matrix against its 2x2 closed form through this machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor import IDENTITY_2, kron, max_diff_up_to_phase
from .threebody import (
    AngleTriple,
    DEFAULT_CONSTRAINT_TOL,
    angles_to_params,
    fusion_form,
    product_form,
)

ORTHONORMALITY_TOL = 1e-13


class LeakageError(ValueError):
    """Operator does not preserve the fusion-basis span."""

    def __init__(self, leakage: float, tol: float):
        self.leakage = leakage
        super().__init__(
            f"operator leaks out of the fusion span: norm {leakage:.3e} > tol {tol:.1e}"
        )


@dataclass(frozen=True)
class FusionBasis:
    """Orthonormal pair of 16-dim (4-qubit) vectors with its loop value."""

    e1: np.ndarray
    e2: np.ndarray
    loop_value: float
    kind: str
    correction_norm: float = 0.0

    def __post_init__(self):
        for name, vec in (("e1", self.e1), ("e2", self.e2)):
            if vec.shape != (16,):
                raise ValueError(f"{name} must be a 16-dim vector, got {vec.shape}")


def two_pair_state(pair_a: tuple[int, int], state_a: np.ndarray,
                   pair_b: tuple[int, int], state_b: np.ndarray,
                   n_sites: int = 4) -> np.ndarray:
    """Product of two 2-site states placed on arbitrary site pairs.

    Site labels are 1-based and ordered: state_a's first tensor slot sits on
    pair_a[0], its second on pair_a[1] (the orientation matters for
    antisymmetric pairs such as the singlet).
    """
    sites = list(pair_a) + list(pair_b)
    if sorted(sites) != list(range(1, n_sites + 1)):
        raise ValueError(f"pairs {pair_a}, {pair_b} must cover sites 1..{n_sites}")
    out = np.zeros(2 ** n_sites, dtype=complex)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    bits = [0] * n_sites
                    bits[pair_a[0] - 1] = a
                    bits[pair_a[1] - 1] = b
                    bits[pair_b[0] - 1] = c
                    bits[pair_b[1] - 1] = d
                    idx = 0
                    for bit in bits:
                        idx = (idx << 1) | bit
                    out[idx] += state_a[2 * a + b] * state_b[2 * c + d]
    return out


def singlet_state() -> np.ndarray:
    """(|01> - |10>)/sqrt(2)."""
    return np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)


def phased_parallel_state(varphi: float = 0.0) -> np.ndarray:
    """(|00> - i e^{-i varphi} |11>)/sqrt(2)."""
    return np.array([1, 0, 0, -1j * np.exp(-1j * varphi)], dtype=complex) / np.sqrt(2)


def phased_antiparallel_state() -> np.ndarray:
    """(|01> - i |10>)/sqrt(2)."""
    return np.array([0, 1, -1j, 0], dtype=complex) / np.sqrt(2)


def fusion_basis_type1() -> FusionBasis:
    """Singlet-pair basis with loop value 2."""
    s = singlet_state()
    nested = two_pair_state((1, 2), s, (3, 4), s)
    crossed = two_pair_state((4, 1), s, (2, 3), s)
    e1 = nested
    e2 = (2.0 * crossed - nested) / np.sqrt(3.0)
    return FusionBasis(e1, e2, 2.0, "type1")


def fusion_basis_type2(varphi: float = 0.0) -> FusionBasis:
    """Phased-pair basis with loop value sqrt(2).

    The defining combination for e2 is orthonormal at varphi = 0; away from
    that point the constructor re-orthogonalizes e2 against e1 and records
    the correction norm.
    """
    par = phased_parallel_state(varphi)
    anti = phased_antiparallel_state()
    e1 = (
        two_pair_state((1, 2), par, (3, 4), par)
        + two_pair_state((1, 2), anti, (3, 4), anti)
    ) / np.sqrt(2.0)
    raw_e2 = (
        (1.0 + np.exp(1j * varphi)) * two_pair_state((2, 3), par, (4, 1), par)
        - (1.0 - np.exp(-1j * varphi)) * two_pair_state((2, 3), anti, (4, 1), anti)
    ) / np.sqrt(2.0) - e1

    correction = 0.0
    overlap = np.vdot(e1, raw_e2)
    norm_dev = abs(np.linalg.norm(raw_e2) - 1.0)
    if abs(overlap) > ORTHONORMALITY_TOL or norm_dev > ORTHONORMALITY_TOL:
        fixed = raw_e2 - overlap * e1
        fixed_norm = np.linalg.norm(fixed)
        if fixed_norm < 1e-10:
            raise ValueError(f"degenerate fusion pair at varphi = {varphi}")
        fixed = fixed / fixed_norm
        correction = float(np.linalg.norm(fixed - raw_e2))
        raw_e2 = fixed
    return FusionBasis(e1, raw_e2, np.sqrt(2.0), "type2", correction)


def reduce_operator(op: np.ndarray, basis: FusionBasis, tol: float = 1e-10) -> np.ndarray:
    """2x2 matrix of an operator restricted to span{e1, e2}.

    Entry (i, j) is <e_i| Op |e_j>, so reducing the identity gives the
    identity and reduction is multiplicative over span-preserving
    operators.  Raises :class:`LeakageError` when Op maps a basis vector
    outside the span by more than ``tol``.
    """
    op = np.asarray(op, dtype=complex)
    if op.shape != (16, 16):
        raise ValueError(f"expected a 16x16 operator, got shape {op.shape}")
    vecs = (basis.e1, basis.e2)
    reduced = np.empty((2, 2), dtype=complex)
    leakage = 0.0
    for j, v in enumerate(vecs):
        image = op @ v
        coeffs = [np.vdot(w, image) for w in vecs]
        reduced[0, j], reduced[1, j] = coeffs
        residual = image - coeffs[0] * vecs[0] - coeffs[1] * vecs[1]
        leakage = max(leakage, float(np.linalg.norm(residual)))
    if leakage > tol:
        raise LeakageError(leakage, tol)
    return reduced


def embed_three_body(op8: np.ndarray) -> np.ndarray:
    """Lift an 8x8 operator on qubits 1-3 to the 4-qubit chain as Op (x) I."""
    op8 = np.asarray(op8, dtype=complex)
    if op8.shape != (8, 8):
        raise ValueError(f"expected an 8x8 operator, got shape {op8.shape}")
    return kron(op8, IDENTITY_2)


def verify_basis_reduction(triple: AngleTriple, tol: float = 1e-10,
                           constraint_tol: float = DEFAULT_CONSTRAINT_TOL) -> float:
    """Residual between the reduced 8x8 product and the 2x2 closed form.

    The factorized scattering matrix is lifted to four qubits, reduced on
    the type-II fusion basis and compared with :func:`fusion_form` at the
    parameters of the triple.  The fusion-basis matrix elements realize the
    2x2 solution family with reversed angle orientation, so the closed form
    is conjugated to match that orientation before the single global phase
    is aligned.
    """
    op16 = embed_three_body(product_form(triple, constraint_tol))
    reduced = reduce_operator(op16, fusion_basis_type2(0.0), tol=tol)
    target = fusion_form(angles_to_params(triple, constraint_tol))
    return max_diff_up_to_phase(reduced, target.conj())
