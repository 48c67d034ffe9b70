"""Amplitude l1-norms, von Neumann entropies, 3-tangle and SLOCC classes.

The l1-norm of a state is the sum of amplitude moduli in the computational
basis (contrast the l2 probability normalization).  For the 2x2
fusion-space scattering matrix the corresponding norm sums absolute real
and imaginary parts of the first-row entries; that real/imaginary split is
exactly what makes the matrix norm agree with the state norm of the 8x8
form for every parameter choice.

Entropies are in bits throughout, with 0*log(0) = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .tensor import partial_trace
from .threebody import ScatterParams, fusion_form

CLASS_TOL = 1e-6

PRODUCT = "product"
BISEPARABLE = "biseparable"
W_CLASS = "W-class"
GHZ_CLASS = "GHZ-class"


def l1_norm(psi: np.ndarray) -> float:
    """Sum of amplitude moduli."""
    return float(np.sum(np.abs(np.asarray(psi, dtype=complex))))


def wigner_l1(d_matrix: np.ndarray) -> float:
    """Entry-modulus norm of a spin-1/2 rotation matrix: sum(|entries|)/2.

    Evaluates to |cos(theta)| + |sin(theta)| independently of the phase
    angle.  Only the 2x2 case is supported.
    """
    d_matrix = np.asarray(d_matrix, dtype=complex)
    if d_matrix.shape != (2, 2):
        raise ValueError(f"only the spin-1/2 (2x2) case is supported, got {d_matrix.shape}")
    return float(np.sum(np.abs(d_matrix))) / 2.0


def three_body_l1(params: ScatterParams) -> float:
    """l1-norm of the three-body matrix and of its output state:

    |cos(eta)| + sqrt(2)|cos(beta) sin(eta)| + |sin(beta) sin(eta)|.
    """
    ce, se = math.cos(params.eta), math.sin(params.eta)
    cb, sb = math.cos(params.beta), math.sin(params.beta)
    return abs(ce) + math.sqrt(2.0) * abs(cb * se) + abs(sb * se)


def fusion_l1(params: ScatterParams) -> float:
    """l1-norm of the 2x2 fusion-space matrix.

    Sums |Re| + |Im| over the first-row entries; equals
    :func:`three_body_l1` identically.
    """
    row = fusion_form(params)[0]
    return float(np.sum(np.abs(row.real)) + np.sum(np.abs(row.imag)))


def binary_entropy(p: float) -> float:
    """H(p) in bits with the 0*log(0) = 0 convention."""
    if p < -1e-12 or p > 1.0 + 1e-12:
        raise ValueError(f"probability out of range: {p}")
    p = min(max(p, 0.0), 1.0)
    out = 0.0
    if p > 0.0:
        out -= p * math.log2(p)
    if p < 1.0:
        out -= (1.0 - p) * math.log2(1.0 - p)
    return out


def von_neumann_entropy(psi: np.ndarray, keep: list[int], dims: list[int] | None = None) -> float:
    """Entanglement entropy (bits) of a pure state across a bipartition.

    ``keep`` selects the subsystems of the reduced density matrix; ``dims``
    defaults to qubits inferred from the state length.
    """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if dims is None:
        n = int(round(math.log2(psi.size)))
        if 2 ** n != psi.size:
            raise ValueError(f"state length {psi.size} is not a power of two")
        dims = [2] * n
    rho = np.outer(psi, psi.conj())
    reduced = partial_trace(rho, dims, keep)
    evals = np.linalg.eigvalsh(reduced)
    out = 0.0
    for lam in evals:
        lam = float(lam.real)
        if lam > 1e-15:
            out -= lam * math.log2(lam)
    return out


def fusion_entropy(params: ScatterParams) -> float:
    """Entropy (bits) of the fusion-space output amplitudes.

    Binary entropy of |first row, first entry|^2; the first row is a unit
    vector by unitarity.
    """
    top_left = fusion_form(params)[0, 0]
    return binary_entropy(abs(top_left) ** 2)


_TANGLE_INDEX = {
    (a, b, c): 4 * a + 2 * b + c for a in (0, 1) for b in (0, 1) for c in (0, 1)
}


def three_tangle(psi: np.ndarray) -> float:
    """Residual three-qubit entanglement via the degree-4 hyperdeterminant.

    tau = 4 |d1 - 2 d2 + 4 d3| in the standard coefficient form; 1 for the
    GHZ state, 0 for the W state and every product state.
    """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.size != 8:
        raise ValueError(f"three qubits required, got state length {psi.size}")

    def c(a, b, k):
        return psi[_TANGLE_INDEX[(a, b, k)]]

    d1 = (
        c(0, 0, 0) ** 2 * c(1, 1, 1) ** 2
        + c(0, 0, 1) ** 2 * c(1, 1, 0) ** 2
        + c(0, 1, 0) ** 2 * c(1, 0, 1) ** 2
        + c(1, 0, 0) ** 2 * c(0, 1, 1) ** 2
    )
    d2 = (
        c(0, 0, 0) * c(1, 1, 1) * c(0, 1, 1) * c(1, 0, 0)
        + c(0, 0, 0) * c(1, 1, 1) * c(1, 0, 1) * c(0, 1, 0)
        + c(0, 0, 0) * c(1, 1, 1) * c(1, 1, 0) * c(0, 0, 1)
        + c(0, 1, 1) * c(1, 0, 0) * c(1, 0, 1) * c(0, 1, 0)
        + c(0, 1, 1) * c(1, 0, 0) * c(1, 1, 0) * c(0, 0, 1)
        + c(1, 0, 1) * c(0, 1, 0) * c(1, 1, 0) * c(0, 0, 1)
    )
    d3 = (
        c(0, 0, 0) * c(1, 1, 0) * c(1, 0, 1) * c(0, 1, 1)
        + c(1, 1, 1) * c(0, 0, 1) * c(0, 1, 0) * c(1, 0, 0)
    )
    return float(4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3))


def classify_slocc(psi: np.ndarray, tol: float = CLASS_TOL) -> str:
    """SLOCC class label of a normalized three-qubit pure state.

    GHZ-class when the 3-tangle exceeds ``tol``; otherwise W-class when all
    three single-qubit cuts carry entropy above ``tol``; otherwise
    biseparable or product by the number of zero-entropy cuts.
    """
    tau = three_tangle(psi)
    if tau > tol:
        return GHZ_CLASS
    entropies = [von_neumann_entropy(psi, [k]) for k in range(3)]
    zero_cuts = sum(1 for s in entropies if s <= tol)
    if zero_cuts == 0:
        return W_CLASS
    if zero_cuts >= 3:
        return PRODUCT
    return BISEPARABLE


@dataclass(frozen=True)
class EntanglementReport:
    """Summary of the measures computed for one three-qubit state."""

    l1: float
    vn_entropies: dict[int, float] = field(compare=False)
    three_tangle: float = 0.0
    slocc_class: str = PRODUCT


def entanglement_report(psi: np.ndarray, tol: float = CLASS_TOL) -> EntanglementReport:
    """All measures for one state: l1, per-cut entropies, 3-tangle, class."""
    return EntanglementReport(
        l1=l1_norm(psi),
        vn_entropies={k: von_neumann_entropy(psi, [k]) for k in range(3)},
        three_tangle=three_tangle(psi),
        slocc_class=classify_slocc(psi, tol),
    )
