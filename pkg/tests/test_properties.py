"""Property-based checks of the algebraic identities."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import algebra_product
from walled.irreps import EmbeddingContext, element_matrix, f_ab, f_ab_inverse, f_c, gram, omega_coeffs
from walled.permgroup import Permutation, classify, compose, partitions_of, sign
from walled.yor import yor_matrix

settings.register_profile("walled", max_examples=60, deadline=None)
settings.load_profile("walled")


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


degrees = st.integers(min_value=1, max_value=7)


@st.composite
def perm_pair(draw):
    n = draw(degrees)
    return draw(perms(n)), draw(perms(n))


@given(perm_pair())
def test_inverse_and_sign(pair):
    p, q = pair
    assert compose(p, p.inverse()).is_identity()
    assert sign(p * q) == sign(p) * sign(q)


@given(st.integers(min_value=1, max_value=6).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_associative(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)


@given(st.integers(min_value=3, max_value=7).flatmap(lambda n: st.tuples(st.just(n), perms(n - 2), st.integers(1, n - 1), st.integers(1, n - 1))))
def test_embedding_round_trip(args):
    n, s, a, b = args
    ctx = EmbeddingContext(n, 2)
    big = f_ab(s, a, b, ctx)
    assert tuple(classify(big)) == (a, b)
    assert f_ab_inverse(big, ctx) == (a, b, s)


@given(st.integers(min_value=3, max_value=7).flatmap(lambda n: st.tuples(st.just(n), perms(n - 1), st.integers(1, n - 1))))
def test_f_c_fixes_last_two(args):
    n, s, c = args
    out = f_c(s, c, EmbeddingContext(n, 2))
    assert out.n == n - 2


@given(st.integers(min_value=2, max_value=5).flatmap(lambda k: st.tuples(st.sampled_from(partitions_of(k)), perms(k), perms(k))))
def test_yor_homomorphism(args):
    alpha, p, q = args
    np.testing.assert_allclose(yor_matrix(alpha, p * q), yor_matrix(alpha, p) @ yor_matrix(alpha, q), atol=1e-9)


@given(st.integers(min_value=3, max_value=6).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(n - 1, n + 3), perms(n), perms(n))))
def test_walled_homomorphism(args):
    n, d, s, t = args
    ctx = EmbeddingContext(n, d)
    scale, u = algebra_product(s, t, d)
    for alpha in ctx.partitions():
        got = element_matrix(s, alpha, ctx) @ element_matrix(t, alpha, ctx)
        np.testing.assert_allclose(got, scale * element_matrix(u, alpha, ctx), atol=1e-8 * d)


@given(st.integers(min_value=3, max_value=6).flatmap(lambda n: st.tuples(st.just(n), st.integers(n - 1, n + 4))))
def test_gram_margin_and_omega_units(args):
    n, d = args
    ctx = EmbeddingContext(n, d)
    for alpha in partitions_of(n - 2):
        g = gram(alpha, ctx)
        assert g.min_eig >= d - n + 2 - 1e-9
        D = omega_coeffs(alpha, ctx)
        # ω-basis matrix units: with ⟨φ_y|ψ_z⟩ = (D Q)[y, z], the product rule is δ_yz
        np.testing.assert_allclose(D @ g.Q, np.eye(g.Q.shape[0]), atol=1e-9)


@given(st.integers(min_value=3, max_value=5).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(n - 1, n + 2), st.lists(perms(n), min_size=1, max_size=5))))
def test_words_close_under_product(args):
    n, d, word = args
    ctx = EmbeddingContext(n, d)
    scale, acc = 1, Permutation.identity(n)
    for p in word:
        k, acc = algebra_product(acc, p, d)
        scale *= k
    for alpha in ctx.partitions():
        got = np.eye(element_matrix(acc, alpha, ctx).shape[0])
        for p in word:
            got = got @ element_matrix(p, alpha, ctx)
        np.testing.assert_allclose(got, scale * element_matrix(acc, alpha, ctx), atol=1e-8 * scale)
