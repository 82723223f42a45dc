"""Dense tensor ground truth on ``(C^d)^{⊗n}`` for small n and d.

Basis states are ordered with factor 1 slowest (``np.kron`` order). Everything
here builds explicit vectors and matrices, so the size guards keep it to
desk-scale problems.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
import scipy.linalg

from . import kernels
from .irreps import (
    EmbeddingContext,
    generator_perms,
    gram,
    select_independent,
)
from .permgroup import Partition, Permutation, standard_tableaux, symmetric_group
from .yor import yor_matrix

# State vectors up to 1e5 entries; dense matrices are capped separately
# because a 1e5 x 1e5 float matrix would not fit in memory.
MAX_VECTOR_DIM = 10**5
MAX_DENSE_DIM = 3200


class OracleSizeError(ValueError):
    pass


def _guard(n: int, d: int, dense: bool) -> int:
    if d < 1 or n < 0:
        raise ValueError("n must be non-negative and d positive")
    dim = d**n
    cap = MAX_DENSE_DIM if dense else MAX_VECTOR_DIM
    if dim > cap:
        kind = "dense operator" if dense else "state vector"
        raise OracleSizeError(f"d^n = {dim} exceeds the {kind} guard of {cap}")
    return dim


@dataclass(frozen=True)
class DenseOperator:
    n: int
    d: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        dim = self.d**self.n
        if self.entries.shape != (dim, dim):
            raise ValueError(f"expected a {dim}x{dim} matrix, got {self.entries.shape}")

    def __matmul__(self, other: "DenseOperator") -> "DenseOperator":
        return DenseOperator(self.n, self.d, self.entries @ other.entries)

    def __add__(self, other: "DenseOperator") -> "DenseOperator":
        return DenseOperator(self.n, self.d, self.entries + other.entries)

    def scaled(self, c: float) -> "DenseOperator":
        return DenseOperator(self.n, self.d, c * self.entries)


def apply_perm(sigma: Permutation, vec: np.ndarray, d: int) -> np.ndarray:
    """``V(σ) @ vec`` without forming the matrix; ``vec`` may carry trailing columns."""
    cols = kernels.basis_permutation(np.asarray(sigma.images, dtype=np.int64), d)
    return vec[cols]


def perm_operator(sigma: Permutation, d: int) -> DenseOperator:
    """``V(σ)|i_1..i_n⟩ = |i_{σ^{-1}(1)}..i_{σ^{-1}(n)}⟩`` as a 0/1 matrix."""
    dim = _guard(sigma.n, d, dense=True)
    cols = kernels.basis_permutation(np.asarray(sigma.images, dtype=np.int64), d)
    out = np.zeros((dim, dim))
    out[np.arange(dim), cols] = 1.0
    return DenseOperator(sigma.n, d, out)


def partial_transpose_last(X: DenseOperator) -> DenseOperator:
    """Transpose the row and column indices of the last factor only."""
    n, d = X.n, X.d
    rest = d ** (n - 1)
    t = X.entries.reshape(rest, d, rest, d).transpose(0, 3, 2, 1)
    return DenseOperator(n, d, np.ascontiguousarray(t.reshape(d**n, d**n)))


def partial_trace_last_two(X: DenseOperator) -> DenseOperator:
    if X.n < 3:
        raise ValueError("partial_trace_last_two needs n >= 3")
    n, d = X.n, X.d
    rest = d ** (n - 2)
    t = X.entries.reshape(rest, d * d, rest, d * d)
    return DenseOperator(n - 2, d, np.einsum("aibi->ab", t))


def element_operator(sigma: Permutation, d: int) -> DenseOperator:
    """The algebra element for σ: ``V(σ)`` when σ fixes n, else ``V(σ)'``."""
    v = perm_operator(sigma, d)
    return v if sigma.fixes(sigma.n) else partial_transpose_last(v)


def apply_element(sigma: Permutation, vec: np.ndarray, d: int) -> np.ndarray:
    """Apply ``V(σ)'`` (or ``V(σ)``) to vectors without a dense matrix."""
    n = sigma.n
    _guard(n, d, dense=False)
    if sigma.fixes(n):
        return apply_perm(sigma, vec, d)
    # out[i] = δ(i_b, i_n) Σ_t x[j] with j_m = i_σ(m) for m ∉ {a, n} and j_a = j_n = t
    a = sigma.images.index(n) + 1
    b = sigma(n)
    trailing = vec.shape[1:]
    x = vec.reshape((d,) * n + trailing)
    letters = [chr(ord("a") + k) for k in range(n)]
    src = ["z" if m in (a, n) else letters[sigma(m) - 1] for m in range(1, n + 1)]
    extra = "".join(chr(ord("A") + k) for k in range(len(trailing)))
    free = [k for k in range(n - 1) if k != b - 1]
    summed = np.einsum(
        "".join(src) + extra + "->" + "".join(letters[k] for k in free) + extra, x
    )
    shape = [d if k in free else 1 for k in range(n)]
    summed = summed.reshape(tuple(shape) + trailing)
    delta_shape = [d if k in (b - 1, n - 1) else 1 for k in range(n)]
    delta = np.eye(d).reshape(tuple(delta_shape) + (1,) * len(trailing))
    return (summed * delta).reshape(vec.shape)


def max_entangled(d: int) -> np.ndarray:
    """Unnormalised ``Σ_l |l l⟩``."""
    return np.eye(d).reshape(-1)


# -- Young units and ψ-vectors ----------------------------------------------


@dataclass
class IrrepVectorFamily:
    """φ- and ψ-vectors for one α ⊢ n-2 and every multiplicity copy r.

    ``phi[r]`` has shape ``(m, d^(n-2))`` and ``psi[r]`` has shape
    ``((n-1) m, d^n)`` with rows in the a-major ``(leg, tableau)`` order.
    """

    alpha: Partition
    n: int
    d: int
    phi: list[np.ndarray]
    psi: list[np.ndarray]

    @property
    def multiplicity(self) -> int:
        return len(self.phi)

    def vector(self, leg: int, tableau: int, r: int = 0) -> np.ndarray:
        m = self.phi[0].shape[0]
        return self.psi[r][(leg - 1) * m + (tableau - 1)]


def young_unit(alpha, d: int, i: int, j: int) -> DenseOperator:
    """``E_ij = (m/k!) Σ_g φ_ij(g) V(g)`` on k = |α| factors (indices 1-based)."""
    alpha = Partition(alpha)
    k = alpha.weight
    dim = _guard(k, d, dense=True)
    m = len(standard_tableaux(alpha))
    out = np.zeros((dim, dim))
    for g in symmetric_group(k):
        c = yor_matrix(alpha, g)[i - 1, j - 1]
        if c != 0:
            cols = kernels.basis_permutation(np.asarray(g.images, dtype=np.int64), d)
            out[np.arange(dim), cols] += c
    out *= m / math.factorial(k)
    return DenseOperator(k, d, out)


def young_units(alpha, d: int) -> dict[tuple[int, int], DenseOperator]:
    alpha = Partition(alpha)
    m = len(standard_tableaux(alpha))
    return {(i, j): young_unit(alpha, d, i, j) for i in range(1, m + 1) for j in range(1, m + 1)}


def _orthonormal_range(mat: np.ndarray, atol: float = 1e-9) -> np.ndarray:
    """Orthonormal basis of range(mat) from column-pivoted QR.

    ``mat`` is a projector, so pivots are compared with an absolute threshold.
    """
    if mat.size == 0:
        return np.zeros((mat.shape[0], 0))
    q, r, piv = scipy.linalg.qr(mat, pivoting=True, mode="economic")
    diag = np.abs(np.diag(r))
    rank = int(np.sum(diag > atol))
    return q[:, :rank]


def vector_family(alpha, n: int, d: int) -> IrrepVectorFamily:
    """Build φ_i(α, r) from range(E_11) and ψ_i^k(α, r) = V(π_k)(φ_i ⊗ Σ|ll⟩)."""
    alpha = Partition(alpha)
    if alpha.weight != n - 2:
        raise ValueError(f"{alpha} is not a partition of n-2 = {n - 2}")
    _guard(n, d, dense=False)
    _guard(n - 2, d, dense=True)
    ctx = EmbeddingContext(n, d)
    units = young_units(alpha, d)
    m = len(standard_tableaux(alpha))
    base = _orthonormal_range(units[1, 1].entries)
    omega = max_entangled(d)
    phis, psis = [], []
    for r in range(base.shape[1]):
        phi = np.stack([units[i, 1].entries @ base[:, r] for i in range(1, m + 1)])
        lifted = np.kron(phi, omega)  # rows φ_i ⊗ Ω
        rows = []
        for k in ctx.legs:
            rows.append(apply_perm(ctx.pi(k), lifted.T, d).T)
        phis.append(phi)
        psis.append(np.concatenate(rows, axis=0))
    return IrrepVectorFamily(alpha, n, d, phis, psis)


def oracle_gram(family: IrrepVectorFamily, r: int = 0, s: int = 0) -> np.ndarray:
    """Inner products ``⟨ψ(r)_x | ψ(s)_y⟩``."""
    return family.psi[r] @ family.psi[s].T


@dataclass
class OracleElements:
    matrix: np.ndarray
    index: list[int]
    residual: float


def oracle_matrix_elements(
    X, family: IrrepVectorFamily, r: int = 0, index: Iterable[int] | None = None
) -> OracleElements:
    """Matrix of X on span{ψ_x(α, r) : x ∈ I} in the column convention.

    ``X`` is a :class:`DenseOperator` or a callable mapping a stack of column
    vectors to their images. I defaults to the greedy independent subset of
    the oracle's own Gram matrix. The residual measures how far ``X ψ_I``
    sits outside the span; it is zero whenever X preserves H_M^α.
    """
    psi = family.psi[r]
    G = psi @ psi.T
    idx = list(index) if index is not None else select_independent(G)
    if not idx:
        return OracleElements(np.zeros((0, 0)), [], 0.0)
    basis = psi[idx].T
    image = X.entries @ basis if isinstance(X, DenseOperator) else X(basis)
    Gi = G[np.ix_(idx, idx)]
    M = scipy.linalg.solve(Gi, basis.T @ image, assume_a="pos")
    resid = image - basis @ M
    scale = max(1.0, float(np.linalg.norm(image)))
    return OracleElements(M, idx, float(np.linalg.norm(resid)) / scale)


def element_action(sigma: Permutation, d: int):
    return lambda vecs: apply_element(sigma, vecs, d)


def product_action(perms: list[Permutation], d: int):
    """Callable applying ``X_1 X_2 ... X_k`` (rightmost first)."""

    def act(vecs):
        for p in reversed(perms):
            vecs = apply_element(p, vecs, d)
        return vecs

    return act


# -- verification sweep -------------------------------------------------------


@dataclass
class CheckResult:
    alpha: Partition
    check: str
    passed: bool
    error: float
    count: int


def verify(n: int, d: int, samples: int | None = 50, seed: int = 0, tol: float = 1e-8) -> list[CheckResult]:
    """Compare the library against the oracle for every α present at (n, d).

    Checks: Gram consistency, single-element matrices (all of S(n) when
    ``samples`` is None, otherwise a random subset) and random generator words.
    """
    from .irreps import degenerate_basis, represent_full

    ctx = EmbeddingContext(n, d)
    rng = np.random.default_rng(seed)
    group = symmetric_group(n)
    gens = generator_perms(n)
    results = []
    for alpha in ctx.partitions():
        fam = vector_family(alpha, n, d)
        if fam.multiplicity == 0:
            continue
        g = gram(alpha, ctx)
        err = float(np.max(np.abs(oracle_gram(fam) - g.Q)))
        results.append(CheckResult(alpha, "gram", err <= tol, err, 1))

        basis = degenerate_basis(alpha, ctx)

        def lib(word: list[Permutation]) -> np.ndarray:
            out = np.eye(len(basis.index))
            for p in word:
                out = out @ basis.reduce(represent_full({p: 1.0}, alpha, ctx))
            return out

        if samples is None:
            perms = group
        else:
            picks = rng.choice(len(group), size=min(samples, len(group)), replace=False)
            perms = [group[i] for i in sorted(picks)]
        worst = 0.0
        for p in perms:
            got = oracle_matrix_elements(element_action(p, d), fam, index=basis.index)
            worst = max(worst, float(np.max(np.abs(got.matrix - lib([p])))), got.residual)
        results.append(CheckResult(alpha, "elements", worst <= tol, worst, len(perms)))

        worst = 0.0
        words = samples if samples is not None else 100
        for _ in range(words):
            word = [gens[i] for i in rng.integers(0, len(gens), size=rng.integers(2, 6))]
            got = oracle_matrix_elements(product_action(word, d), fam, index=basis.index)
            worst = max(worst, float(np.max(np.abs(got.matrix - lib(word)))), got.residual)
        results.append(CheckResult(alpha, "products", worst <= tol, worst, words))
    return results


# -- v and ω operators --------------------------------------------------------


def v_operator(family: IrrepVectorFamily, x: int, y: int) -> DenseOperator:
    """``v_xy = Σ_r |ψ_x(r)⟩⟨ψ_y(r)|`` for flat (leg, tableau) indices x, y."""
    _guard(family.n, family.d, dense=True)
    out = sum(np.outer(p[x], p[y]) for p in family.psi)
    return DenseOperator(family.n, family.d, np.asarray(out))


def dual_vectors(family: IrrepVectorFamily, D: np.ndarray) -> list[np.ndarray]:
    """Rows ``φ_y = Σ_z D[z, y] ψ_z`` biorthogonal to the ψ-rows: ``⟨φ_y|ψ_z⟩ = δ_yz``."""
    return [D.T @ p for p in family.psi]


def omega_operator(family: IrrepVectorFamily, D: np.ndarray, x: int, y: int) -> DenseOperator:
    """``ω_xy = Σ_z D[y, z] v_xz = Σ_r |ψ_x(r)⟩⟨φ_y(r)|``."""
    _guard(family.n, family.d, dense=True)
    duals = dual_vectors(family, D)
    out = sum(np.outer(p[x], q[y]) for p, q in zip(family.psi, duals))
    return DenseOperator(family.n, family.d, np.asarray(out))
