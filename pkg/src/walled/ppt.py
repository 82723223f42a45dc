"""PPT test for n = 3 mixtures of Young projectors, computed from irrep blocks only.

``ρ = Σ_λ ã_λ P_λ`` over λ ∈ {(1,1,1), (2,1), (3)}. The partial transpose
``ρ'`` splits into an M-sector 2x2 block (α = (1), multiplicity d) and two
N-sector scalars labelled by α_N ∈ {(2), (1,1)}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np
import scipy.linalg

from . import kernels
from .irreps import EmbeddingContext, gram, represent_full
from .multiplicity import IrrepLabel, weyl_dimension
from .permgroup import Partition, Permutation, hook_dimension, symmetric_group
from .yor import character

LAMBDAS = (Partition((1, 1, 1)), Partition((2, 1)), Partition((3,)))
N_LABELS = (Partition((2,)), Partition((1, 1)))
FEASIBLE_TOL = -1e-12


def young_projector_coeffs(lam, n: int | None = None) -> dict[Permutation, float]:
    """Coefficients of the central Young projector ``P_λ = Σ_σ c_σ V(σ)``."""
    lam = Partition(lam)
    n = lam.weight if n is None else n
    if lam.weight != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    scale = hook_dimension(lam) / math.factorial(n)
    return {s: scale * character(lam, s) for s in symmetric_group(n)}


def projector_trace(lam, d: int) -> int:
    """``tr P_λ = m_λ · dim_U(d)(λ)``; zero when λ has more than d rows."""
    lam = Partition(lam)
    if len(lam) > d:
        return 0
    return hook_dimension(lam) * weyl_dimension(tuple(lam) + (0,) * (d - len(lam)))


@dataclass(frozen=True)
class ProjectorMixture:
    """Raw weights ``ã_λ`` in the order of :data:`LAMBDAS`."""

    d: int
    raw: tuple[float, float, float]

    def __post_init__(self):
        if self.d <= 2:
            raise ValueError("the mixture needs d > 2")
        if len(self.raw) != 3 or any(x < 0 for x in self.raw):
            raise ValueError("raw coefficients must be three non-negative numbers")
        if sum(self.raw) == 0:
            raise ValueError("all-zero mixture cannot be normalised")

    @classmethod
    def from_trace_weights(cls, d: int, weights: Sequence[float]) -> "ProjectorMixture":
        """Build from ``a_λ = ã_λ tr P_λ``; the weights are normalised to sum 1."""
        w = np.asarray(weights, dtype=float)
        if w.shape != (3,) or np.any(w < 0) or w.sum() == 0:
            raise ValueError("need three non-negative trace weights with positive sum")
        w = w / w.sum()
        return cls(d, tuple(float(x / projector_trace(l, d)) for x, l in zip(w, LAMBDAS)))

    @property
    def trace_weights(self) -> tuple[float, float, float]:
        return tuple(x * projector_trace(l, self.d) for x, l in zip(self.raw, LAMBDAS))

    def normalized(self) -> "ProjectorMixture":
        t = sum(self.trace_weights)
        return ProjectorMixture(self.d, tuple(x / t for x in self.raw))

    def coeffs(self) -> dict[Permutation, float]:
        out: dict[Permutation, float] = {}
        for weight, lam in zip(self.raw, LAMBDAS):
            for s, c in young_projector_coeffs(lam).items():
                out[s] = out.get(s, 0.0) + weight * c
        return out


def _m_block(coeffs: Mapping[Permutation, float], d: int) -> tuple[np.ndarray, np.ndarray]:
    ctx = EmbeddingContext(3, d)
    alpha = Partition((1,))
    Q = np.asarray(gram(alpha, ctx).Q)
    M = represent_full(coeffs, alpha, ctx)
    return Q @ M, Q


def _n_values(coeffs: Mapping[Permutation, float]) -> list[float]:
    e = Permutation.identity(3)
    swap = Permutation.transposition(1, 2, 3)
    ce, cs = coeffs.get(e, 0.0), coeffs.get(swap, 0.0)
    small = Permutation.transposition(1, 2, 2)
    return [ce + cs * character(lab, small) for lab in N_LABELS]


def _multiplicities(d: int) -> tuple[int, list[int]]:
    m_mult = weyl_dimension((1,) + (0,) * (d - 1))
    n_mult = []
    for lab in N_LABELS:
        label = IrrepLabel("N", lab, d)
        n_mult.append(weyl_dimension(label.weights) if label.allowed else 0)
    return m_mult, n_mult


def transposed_spectrum(mix: ProjectorMixture) -> list[tuple[float, int]]:
    """Eigenvalues of ``ρ'`` with multiplicities (summing to d^3), ascending."""
    coeffs = mix.coeffs()
    QM, Q = _m_block(coeffs, mix.d)
    block = scipy.linalg.eigh(0.5 * (QM + QM.T), Q, eigvals_only=True)
    m_mult, n_mult = _multiplicities(mix.d)
    pairs = [(float(x), m_mult) for x in block]
    pairs += [(float(v), k) for v, k in zip(_n_values(coeffs), n_mult) if k]
    return sorted(pairs)


def expand_spectrum(pairs: Sequence[tuple[float, int]]) -> np.ndarray:
    return np.sort(np.concatenate([np.full(k, v) for v, k in pairs]))


@lru_cache(maxsize=16)
def _unit_terms(d: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-λ contributions at unit trace weight: orthonormalised 2x2 block and N-scalars."""
    ctx = EmbeddingContext(3, d)
    Q = np.asarray(gram(Partition((1,)), ctx).Q)
    L = np.linalg.cholesky(Q)
    Linv = np.linalg.inv(L)
    blocks, scalars = [], []
    for lam in LAMBDAS:
        coeffs = {s: c / projector_trace(lam, d) for s, c in young_projector_coeffs(lam).items()}
        QM, _ = _m_block(coeffs, d)
        B = Linv @ (0.5 * (QM + QM.T)) @ Linv.T
        blocks.append((B[0, 0], B[1, 1], B[0, 1]))
        scalars.append(_n_values(coeffs))
    _, n_mult = _multiplicities(d)
    scal = np.asarray(scalars)[:, [k for k, mult in enumerate(n_mult) if mult]]
    return np.asarray(blocks), np.ascontiguousarray(scal)


def simplex_grid(resolution: int) -> np.ndarray:
    """Barycentric points ``(a1, a2, a3)`` with ``a_k = i_k / resolution``, a1-major."""
    if resolution < 1:
        raise ValueError("grid resolution must be positive")
    i, j = np.meshgrid(np.arange(resolution + 1), np.arange(resolution + 1), indexing="ij")
    keep = i + j <= resolution
    a1 = i[keep] / resolution
    a2 = j[keep] / resolution
    return np.column_stack([a1, a2, np.clip(1.0 - a1 - a2, 0.0, None)])


@dataclass
class PPTRegion:
    d: int
    points: np.ndarray
    min_eig: np.ndarray

    @property
    def feasible(self) -> np.ndarray:
        return self.min_eig >= FEASIBLE_TOL


def min_eigenvalues(d: int, points: np.ndarray) -> np.ndarray:
    """Smallest eigenvalue of ρ' at each row of trace weights ``(a1, a2, a3)``."""
    if d <= 2:
        raise ValueError("the PPT region needs d > 2")
    blocks, scalars = _unit_terms(d)
    return kernels.grid_min_eig(np.ascontiguousarray(points, dtype=float), blocks, scalars)


def ppt_region(d: int, grid: int = 400) -> PPTRegion:
    """Scan the simplex of trace weights; a point is feasible iff min eig(ρ') ≥ -1e-12."""
    pts = simplex_grid(grid)
    return PPTRegion(d, pts, min_eigenvalues(d, pts))
