"""Irreducible matrix representations of partially transposed permutation operators.

The algebra acts on ``(C^d)^{⊗n}`` and is spanned by ``V(σ)`` for σ fixing n
and by ``V'(σ)`` (transpose on the last factor) for the remaining σ. Its
M-sector irreps are labelled by partitions α of n-2 and carry the basis
``(leg a, tableau i)`` with ``a = 1..n-1`` and ``i = 1..m_α``, flattened
a-major. A matrix ``M`` represents an operator ``X`` through
``X ψ_(c,k) = Σ M[(d,l),(c,k)] ψ_(d,l)``, i.e. columns hold images.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Mapping

import numpy as np
import scipy.linalg

from . import kernels
from .permgroup import (
    Partition,
    Permutation,
    classify,
    partitions_of,
    perm_rank,
    standard_tableaux,
    symmetric_group,
)
from .yor import yor_matrix, yor_table

RANK_RTOL = 1e-9


class DegenerateGramError(ValueError):
    """Raised when a full-rank construction is requested for a singular Q(α)."""


@dataclass(frozen=True)
class EmbeddingContext:
    """System count ``n``, local dimension ``d`` and the legs ``π_k = (k, n-1)``."""

    n: int
    d: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.d < 1:
            raise ValueError("d must be positive")

    def pi(self, k: int) -> Permutation:
        self._check_leg(k)
        if k == self.n - 1:
            return Permutation.identity(self.n)
        return Permutation.transposition(k, self.n - 1, self.n)

    @property
    def legs(self) -> range:
        return range(1, self.n)

    @property
    def full_rank(self) -> bool:
        """True when every Gram matrix is invertible (d > n-2)."""
        return self.d > self.n - 2

    def partitions(self) -> list[Partition]:
        return partitions_of(self.n - 2)

    def swap_last(self) -> Permutation:
        return Permutation.transposition(self.n - 1, self.n, self.n)

    def _check_leg(self, k: int) -> None:
        if not 1 <= k <= self.n - 1:
            raise ValueError(f"leg {k} outside 1..{self.n - 1}")


def f_ab(sigma: Permutation, a: int, b: int, ctx: EmbeddingContext) -> Permutation:
    """Embed σ ∈ S(n-2) as ``π_b ∘ σ ∘ (n n-1) ∘ π_a^{-1}``, which sends a→n and n→b."""
    ctx._check_leg(a)
    ctx._check_leg(b)
    if sigma.n != ctx.n - 2:
        raise ValueError(f"expected a permutation of degree {ctx.n - 2}")
    big = sigma.extend(ctx.n)
    return ctx.pi(b) * big * ctx.swap_last() * ctx.pi(a).inverse()


def f_ab_inverse(sigma_ab: Permutation, ctx: EmbeddingContext) -> tuple[int, int, Permutation]:
    """Recover ``(a, b, σ)`` from an element of the transposed sector."""
    if sigma_ab.n != ctx.n:
        raise ValueError(f"expected a permutation of degree {ctx.n}")
    cls = classify(sigma_ab)
    if cls.fixes_n:
        raise ValueError(f"{sigma_ab} fixes n; it lies in S(n-1), not in an S_ab class")
    a, b = cls
    small = ctx.pi(b).inverse() * sigma_ab * ctx.pi(a) * ctx.swap_last()
    return a, b, small.restrict(ctx.n - 2)


def f_c(sigma: Permutation, c: int, ctx: EmbeddingContext) -> Permutation:
    """``π_{σ[c]}^{-1} ∘ σ ∘ π_c`` for σ ∈ S(n-1), returned as an element of S(n-2)."""
    ctx._check_leg(c)
    if sigma.n == ctx.n - 1:
        sigma = sigma.extend(ctx.n)
    if sigma.n != ctx.n or not sigma.fixes(ctx.n):
        raise ValueError("f_c needs a permutation of S(n-1)")
    out = ctx.pi(sigma(c)).inverse() * sigma * ctx.pi(c)
    return out.restrict(ctx.n - 2)


@dataclass(frozen=True)
class ChiResult:
    scale_power: int
    perm: Permutation


def chi(a: int, b: int, ctx: EmbeddingContext) -> ChiResult:
    """The contraction of legs a, b: ``d^{scale_power} V(perm)`` on n-2 factors."""
    ctx._check_leg(a)
    ctx._check_leg(b)
    m = ctx.n - 2
    if a == b:
        return ChiResult(1, Permutation.identity(m))
    if ctx.n - 1 in (a, b):
        return ChiResult(0, Permutation.identity(m))
    return ChiResult(0, Permutation.transposition(a, b, m))


def chi_general(a: int, b: int, pi_a: Permutation, pi_b: Permutation, n: int) -> ChiResult:
    """χ_ab for arbitrary leg permutations with ``π(n-1) = leg``.

    Evaluates ``(n n-1) ∘ π_a^{-1} ∘ π_b ∘ (n-1 n x)`` with ``x = π_b^{-1}[a]``.
    """
    if a == b:
        return ChiResult(1, Permutation.identity(n - 2))
    swap = Permutation.transposition(n - 1, n, n)
    x = pi_b.inverse()(a)
    cyc = Permutation.from_cycles([(n - 1, n, x)], n)
    out = swap * pi_a.inverse() * pi_b * cyc
    return ChiResult(0, out.restrict(n - 2))


def _phi(alpha: Partition, sigma: Permutation) -> np.ndarray:
    return yor_matrix(alpha, sigma)


def _m(alpha: Partition) -> int:
    return len(standard_tableaux(alpha))


def basis_labels(alpha, ctx: EmbeddingContext) -> list[tuple[int, int]]:
    """Row/column labels ``(leg, tableau)``, both 1-based, in a-major order."""
    m = _m(Partition(alpha))
    return [(a, i) for a in ctx.legs for i in range(1, m + 1)]


@dataclass
class GramBlockMatrix:
    alpha: Partition
    n: int
    d: int
    Q: np.ndarray
    rank: int
    min_eig: float
    D: np.ndarray | None = None

    @property
    def full_rank(self) -> bool:
        return self.rank == self.Q.shape[0]


def numerical_rank(mat: np.ndarray, rtol: float = RANK_RTOL) -> int:
    if mat.size == 0:
        return 0
    sv = np.linalg.svd(mat, compute_uv=False)
    if sv[0] == 0:
        return 0
    return int(np.sum(sv > rtol * sv[0]))


@lru_cache(maxsize=256)
def _gram_cached(alpha: Partition, n: int, d: int) -> GramBlockMatrix:
    ctx = EmbeddingContext(n, d)
    m = _m(alpha)
    L = n - 1
    Q = np.empty((L * m, L * m))
    for a in ctx.legs:
        for b in ctx.legs:
            c = chi(a, b, ctx)
            Q[(a - 1) * m : a * m, (b - 1) * m : b * m] = d**c.scale_power * _phi(alpha, c.perm)
    rank = numerical_rank(Q)
    min_eig = float(np.linalg.eigvalsh(Q)[0])
    D = np.linalg.inv(Q) if rank == Q.shape[0] else None
    for arr in (Q, D):
        if arr is not None:
            arr.setflags(write=False)
    return GramBlockMatrix(alpha, n, d, Q, rank, min_eig, D)


def gram(alpha, ctx: EmbeddingContext) -> GramBlockMatrix:
    """Block matrix ``Q[(a,i),(b,j)] = d^{δ_ab} φ^α_ij(χ_ab)`` with rank and inverse."""
    alpha = Partition(alpha)
    if alpha.weight != ctx.n - 2:
        raise ValueError(f"{alpha} is not a partition of n-2 = {ctx.n - 2}")
    return _gram_cached(alpha, ctx.n, ctx.d)


def gram_positivity_margin(alpha, ctx: EmbeddingContext) -> float:
    """Smallest eigenvalue of Q(α); at least ``d - n + 2`` whenever d > n-2."""
    if not ctx.full_rank:
        raise ValueError("positivity bound needs d > n-2")
    return gram(alpha, ctx).min_eig


def omega_coeffs(alpha, ctx: EmbeddingContext) -> np.ndarray:
    """D = Q(α)^{-1}: ``ω_x,y = Σ_z D[y,z] v_x,z`` and conversely ``v_x,y = Σ_z Q[y,z] ω_x,z``."""
    g = gram(alpha, ctx)
    if g.D is None:
        raise DegenerateGramError(f"Q{alpha} is singular for n={ctx.n}, d={ctx.d}")
    return g.D


# -- matrix elements ---------------------------------------------------------


def _transposed_raw(sigma_ab: Permutation, alpha: Partition, ctx: EmbeddingContext) -> np.ndarray:
    a, b, small = f_ab_inverse(sigma_ab, ctx)
    m = _m(alpha)
    out = np.zeros(((ctx.n - 1) * m,) * 2)
    for c in ctx.legs:
        ch = chi(a, c, ctx)
        out[(b - 1) * m : b * m, (c - 1) * m : c * m] = ctx.d**ch.scale_power * _phi(
            alpha, small * ch.perm
        )
    return out


def _untransposed_raw(sigma: Permutation, alpha: Partition, ctx: EmbeddingContext) -> np.ndarray:
    if sigma.n == ctx.n - 1:
        sigma = sigma.extend(ctx.n)
    m = _m(alpha)
    out = np.zeros(((ctx.n - 1) * m,) * 2)
    for c in ctx.legs:
        r = sigma(c)
        out[(r - 1) * m : r * m, (c - 1) * m : c * m] = _phi(alpha, f_c(sigma, c, ctx))
    return out


def _require_full_rank(alpha: Partition, ctx: EmbeddingContext) -> None:
    if not gram(alpha, ctx).full_rank:
        raise DegenerateGramError(
            f"Q{alpha} is singular for n={ctx.n}, d={ctx.d}; use degenerate_basis()"
        )


def irrep_transposed(sigma_ab: Permutation, alpha, ctx: EmbeddingContext) -> np.ndarray:
    """Matrix of ``V'(σ_ab)`` for σ_ab(n) != n.

    Only the row block of leg b is nonzero; entry ``((b,l),(c,k))`` equals
    ``d^{δ_ac} φ^α_lk(f_ab^{-1}(σ_ab) ∘ χ_ac)``.
    """
    alpha = Partition(alpha)
    _require_full_rank(alpha, ctx)
    return _transposed_raw(sigma_ab, alpha, ctx)


def irrep_untransposed(sigma: Permutation, alpha, ctx: EmbeddingContext) -> np.ndarray:
    """Matrix of ``V(σ)`` for σ ∈ S(n-1): block column c moves to block row σ(c)."""
    alpha = Partition(alpha)
    _require_full_rank(alpha, ctx)
    return _untransposed_raw(sigma, alpha, ctx)


def element_matrix(sigma: Permutation, alpha, ctx: EmbeddingContext) -> np.ndarray:
    """Full-rank image of the algebra element attached to σ, routed by ``classify``."""
    if sigma.fixes(ctx.n):
        return irrep_untransposed(sigma, alpha, ctx)
    return irrep_transposed(sigma, alpha, ctx)


def generator_labels(n: int) -> list[str]:
    return ["e"] + [f"({k} {k + 1})" for k in range(1, n - 1)] + [f"({n - 1} {n})'"]


def generator_perms(n: int) -> list[Permutation]:
    return [Permutation.identity(n)] + [
        Permutation.transposition(k, k + 1, n) for k in range(1, n)
    ]


def generators(ctx: EmbeddingContext, alpha) -> dict[str, np.ndarray]:
    """Images of e, V(k k+1) for k < n-1, and V'(n-1 n), keyed by label."""
    alpha = Partition(alpha)
    return {
        label: element_matrix(p, alpha, ctx)
        for label, p in zip(generator_labels(ctx.n), generator_perms(ctx.n))
    }


# -- degenerate regime -------------------------------------------------------


@dataclass
class DegenerateBasis:
    """Linearly independent subset ``I`` of the ψ-vectors for one α."""

    alpha: Partition
    ctx: EmbeddingContext
    index: list[int]
    Q: np.ndarray = field(repr=False)

    @property
    def labels(self) -> list[tuple[int, int]]:
        full = basis_labels(self.alpha, self.ctx)
        return [full[i] for i in self.index]

    @cached_property
    def Q_reduced(self) -> np.ndarray:
        return self.Q[np.ix_(self.index, self.index)]

    @cached_property
    def _cho(self):
        return scipy.linalg.cho_factor(self.Q_reduced)

    def reduce(self, full: np.ndarray) -> np.ndarray:
        """Matrix on span{ψ_x : x ∈ I} of the operator whose ψ-image matrix is ``full``.

        Solves ``Q̃ X = Q[I,:] full[:, I]``.
        """
        if not self.index:
            return np.zeros((0, 0))
        if len(self.index) == self.Q.shape[0]:
            return full
        rhs = self.Q[self.index, :] @ full[:, self.index]
        return scipy.linalg.cho_solve(self._cho, rhs)

    def element(self, sigma: Permutation) -> np.ndarray:
        if sigma.fixes(self.ctx.n):
            full = _untransposed_raw(sigma, self.alpha, self.ctx)
        else:
            full = _transposed_raw(sigma, self.alpha, self.ctx)
        return self.reduce(full)


def select_independent(Q: np.ndarray, rtol: float = RANK_RTOL) -> list[int]:
    """Greedy pivot selection in index order: keep x if its Schur complement is nonzero."""
    scale = max(float(np.max(np.abs(np.diag(Q)))), 1.0) if Q.size else 1.0
    chosen: list[int] = []
    for x in range(Q.shape[0]):
        trial = chosen + [x]
        if chosen:
            sub = Q[np.ix_(chosen, chosen)]
            col = Q[chosen, x]
            resid = Q[x, x] - col @ np.linalg.solve(sub, col)
        else:
            resid = Q[x, x]
        if resid > rtol * scale:
            chosen = trial
    return chosen


def degenerate_basis(alpha, ctx: EmbeddingContext) -> DegenerateBasis:
    """Pick an independent subset of the ψ-basis for α; ``|I| = rank Q(α)``.

    When α has more than d rows the ψ-vectors vanish (Q is then only a formal,
    possibly indefinite matrix) and the index set is empty.
    """
    alpha = Partition(alpha)
    g = gram(alpha, ctx)
    if len(alpha) > ctx.d:
        return DegenerateBasis(alpha, ctx, [], np.asarray(g.Q))
    index = select_independent(np.asarray(g.Q))
    if len(index) != g.rank:
        raise ArithmeticError(
            f"greedy selection found {len(index)} vectors but rank Q{alpha} = {g.rank}"
        )
    return DegenerateBasis(alpha, ctx, index, np.asarray(g.Q))


def present_partitions(ctx: EmbeddingContext) -> list[Partition]:
    """Partitions of n-2 whose irrep occurs in (C^d)^{⊗(n-2)}, i.e. at most d rows."""
    return [p for p in ctx.partitions() if len(p) <= ctx.d]


# -- linear extension --------------------------------------------------------


@lru_cache(maxsize=64)
def _sector_plan(n: int):
    """Per-σ block layout shared by every α: (row legs, col legs, S(n-2) ranks, d-powers)."""
    ctx = EmbeddingContext(n, 2)
    plan = {}
    for sigma in symmetric_group(n):
        rows, cols, ranks, powers = [], [], [], []
        if sigma.fixes(n):
            for c in ctx.legs:
                rows.append(sigma(c) - 1)
                cols.append(c - 1)
                ranks.append(perm_rank(f_c(sigma, c, ctx).images))
                powers.append(0)
        else:
            a, b, small = f_ab_inverse(sigma, ctx)
            for c in ctx.legs:
                ch = chi(a, c, ctx)
                rows.append(b - 1)
                cols.append(c - 1)
                ranks.append(perm_rank((small * ch.perm).images))
                powers.append(ch.scale_power)
        plan[sigma] = (rows, cols, ranks, powers)
    return plan


def represent_full(coeffs: Mapping[Permutation, float], alpha, ctx: EmbeddingContext) -> np.ndarray:
    """``Σ_σ c_σ M_α(σ)`` in the full ψ-basis (no rank check)."""
    alpha = Partition(alpha)
    plan = _sector_plan(ctx.n)
    table = np.ascontiguousarray(yor_table(alpha))
    rows, cols, ids, weights = [], [], [], []
    for sigma, c in coeffs.items():
        if c == 0:
            continue
        if sigma.n != ctx.n:
            raise ValueError(f"coefficient key {sigma} is not in S({ctx.n})")
        r, cl, rk, pw = plan[sigma]
        rows.extend(r)
        cols.extend(cl)
        ids.extend(rk)
        weights.extend(c * ctx.d**p for p in pw)
    m = table.shape[1]
    out = np.zeros(((ctx.n - 1) * m,) * 2)
    if ids:
        kernels.scatter_blocks(
            out,
            table,
            np.asarray(ids, dtype=np.int64),
            np.asarray(rows, dtype=np.int64),
            np.asarray(cols, dtype=np.int64),
            np.asarray(weights, dtype=np.float64),
        )
    return out


def represent(coeffs: Mapping[Permutation, float], ctx: EmbeddingContext) -> dict[Partition, np.ndarray]:
    """Images of ``Σ_σ c_σ V^(')(σ)`` in every M-sector irrep present for this (n, d).

    Full-rank α use the ψ-basis; singular Q(α) fall back to the reduced basis
    of :func:`degenerate_basis`.
    """
    out = {}
    for alpha in present_partitions(ctx):
        full = represent_full(coeffs, alpha, ctx)
        if gram(alpha, ctx).full_rank:
            out[alpha] = full
        else:
            basis = degenerate_basis(alpha, ctx)
            if basis.index:
                out[alpha] = basis.reduce(full)
    return out


def irrep_dimension(alpha, ctx: EmbeddingContext) -> int:
    g = gram(Partition(alpha), ctx)
    return g.rank
