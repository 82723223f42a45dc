"""End-to-end acceptance criteria, each checked at its tolerance and time budget."""

import itertools
import json

import numpy as np
import pytest

from goldens import REDUCED_N4, REDUCED_N4_GAUGE, GOLDENS, N5_SLICE
from walled.cli import main
from walled.irreps import EmbeddingContext, degenerate_basis, generator_perms, generators, gram, omega_coeffs
from walled.multiplicity import checksum, inventory
from walled.oracle import (
    DenseOperator,
    element_operator,
    omega_operator,
    oracle_gram,
    oracle_matrix_elements,
    v_operator,
    vector_family,
    young_units,
)
from walled.permgroup import Permutation, partitions_of
from walled.ppt import ProjectorMixture, expand_spectrum, ppt_region, transposed_spectrum

pytestmark = pytest.mark.acceptance


def _cli_generators(capsys, n, d):
    assert main(["irreps", "--n", str(n), "--d", str(d), "--generators"]) == 0
    doc = json.loads(capsys.readouterr().out)
    return {tuple(b["alpha"]): b["matrices"] for b in doc["irreps"]}


def test_criterion_1_golden_matrices(criterion, capsys):
    with criterion(1, "golden generator matrices (n=3,4,5; affine in d)", budget=1.0):
        for n, table in GOLDENS.items():
            lo, hi = n - 1, n + 3
            out = {d: _cli_generators(capsys, n, d) for d in (lo, hi)}
            for alpha, mats in table.items():
                assert set(out[lo][alpha]) == set(mats)
                idx = N5_SLICE.get(alpha) if n == 5 else None
                for label, fn in mats.items():
                    per_d = {}
                    for d in (lo, hi):
                        got = np.array(out[d][alpha][label], dtype=float)
                        if idx is not None:
                            got = got[np.ix_(idx, idx)]
                        assert np.max(np.abs(got - np.array(fn(d), dtype=float))) <= 1e-9, (n, alpha, label, d)
                        per_d[d] = got
                    # affine in d: the value at a third d lies on the line through the two
                    mid = n + 1
                    full = generators(EmbeddingContext(n, mid), alpha)[label]
                    if idx is not None:
                        full = full[np.ix_(idx, idx)]
                    line = per_d[lo] + (per_d[hi] - per_d[lo]) * (mid - lo) / (hi - lo)
                    assert np.max(np.abs(full - line)) <= 1e-9


def test_criterion_2_multiplicities(criterion):
    with criterion(2, "multiplicity tallies for (4,4) and (4,2)", budget=0.1):
        rows = inventory(4, 4)
        assert tuple(r.multiplicity for r in rows) == (70, 64, 10, 10, 6)
        assert checksum(rows) == 256
        rows = inventory(4, 2)
        nonzero = [r for r in rows if r.multiplicity]
        assert tuple(r.multiplicity for r in nonzero) == (5, 3, 1)
        assert nonzero[-1].dimension == 2
        assert checksum(rows) == 16


def test_criterion_3_degenerate(criterion):
    with criterion(3, "degenerate n=4, d=2, alpha=(1,1) reduced images", budget=0.5):
        ctx = EmbeddingContext(4, 2)
        assert gram((1, 1), ctx).rank == 2
        basis = degenerate_basis((1, 1), ctx)
        S = np.diag(REDUCED_N4_GAUGE)
        for text in ("(34)", "(12)", "(14)", "(4321)"):
            got = (S @ basis.element(Permutation.parse(text, 4)) @ S).T
            assert np.max(np.abs(got - np.array(REDUCED_N4[text]))) <= 1e-9, text


def test_criterion_4_oracle_homomorphism(criterion):
    with criterion(4, "oracle homomorphism sweep n=3,4, d in {n-1, n}", budget=60.0):
        rng = np.random.default_rng(2024)
        for n in (3, 4):
            gens = generator_perms(n)
            for d in (n - 1, n):
                ctx = EmbeddingContext(n, d)
                ops = [element_operator(g, d).entries for g in gens]
                for alpha in ctx.partitions():
                    fam = vector_family(alpha, n, d)
                    lib = list(generators(ctx, alpha).values())
                    words = [list(p) for p in itertools.product(range(len(gens)), repeat=2)]
                    words += [list(rng.integers(0, len(gens), size=rng.integers(3, 9))) for _ in range(100)]
                    for r in range(fam.multiplicity):
                        for word in words:
                            X = np.eye(d**n)
                            M = np.eye(lib[0].shape[0])
                            for k in word:
                                X = X @ ops[k]
                                M = M @ lib[k]
                            got = oracle_matrix_elements(DenseOperator(n, d, X), fam, r=r)
                            scale = max(1.0, np.max(np.abs(M)))
                            assert np.max(np.abs(got.matrix - M)) <= 1e-8 * scale, (n, d, alpha, word)
                            assert got.residual <= 1e-8


def test_criterion_5_gram_consistency(criterion):
    with criterion(5, "Gram consistency and positivity margin", budget=30.0):
        for n, d in itertools.product((3, 4, 5), (2, 3)):
            ctx = EmbeddingContext(n, d)
            for alpha in partitions_of(n - 2):
                g = gram(alpha, ctx)
                fam = vector_family(alpha, n, d)
                for r in range(fam.multiplicity):
                    assert np.max(np.abs(oracle_gram(fam, r, r) - g.Q)) <= 1e-9
                if d > n - 2:
                    assert g.min_eig >= d - n + 2 - 1e-9


def test_criterion_6_ppt(criterion):
    with criterion(6, "PPT region dimension independence and oracle spectra", budget=120.0):
        base = ppt_region(3)
        assert len(base.points) == 401 * 402 // 2
        for d in (4, 5):
            other = ppt_region(d)
            assert np.array_equal(other.feasible, base.feasible), d
        rng = np.random.default_rng(11)
        for _ in range(50):
            mix = ProjectorMixture.from_trace_weights(3, rng.random(3))
            rho = sum(c * element_operator(s, 3).entries for s, c in mix.coeffs().items())
            want = np.linalg.eigvalsh(rho)
            got = expand_spectrum(transposed_spectrum(mix))
            assert np.max(np.abs(got - want)) <= 1e-8


def test_criterion_7_biorthogonality(criterion):
    with criterion(7, "omega units, v/omega round trip, Young unit relations (n<=4)", budget=60.0):
        tol = 1e-9
        for n, d in [(3, 2), (3, 3), (4, 3), (4, 4)]:
            ctx = EmbeddingContext(n, d)
            for alpha in ctx.partitions():
                fam = vector_family(alpha, n, d)
                Q, D = gram(alpha, ctx).Q, omega_coeffs(alpha, ctx)
                size = Q.shape[0]
                w = {(x, y): omega_operator(fam, D, x, y).entries for x in range(size) for y in range(size)}
                for (x, y), (z, u) in itertools.product(w, repeat=2):
                    want = w[x, u] if y == z else 0
                    assert np.max(np.abs(w[x, y] @ w[z, u] - want)) <= tol
                for x, y in itertools.product(range(size), repeat=2):
                    v = v_operator(fam, x, y).entries
                    back = sum(Q[y, z] * w[x, z] for z in range(size))
                    assert np.max(np.abs(back - v)) <= tol
                    fwd = sum(D[y, z] * v_operator(fam, x, z).entries for z in range(size))
                    assert np.max(np.abs(fwd - w[x, y])) <= tol
        for k, d in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
            units = {a: young_units(a, d) for a in partitions_of(k)}
            for (a, ua), (b, ub) in itertools.product(units.items(), repeat=2):
                for (i, j), E in ua.items():
                    for (kk, l), F in ub.items():
                        want = ua[i, l].entries if (a == b and j == kk) else 0
                        assert np.max(np.abs(E.entries @ F.entries - want)) <= tol
