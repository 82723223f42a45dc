"""Young's orthogonal representation of S(k).

Rows and columns are indexed by ``standard_tableaux(shape)`` (last-letter
order). Every matrix is real orthogonal, and images of transpositions are
symmetric.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .permgroup import Partition, Permutation, perm_rank, standard_tableaux, symmetric_group


@lru_cache(maxsize=None)
def _tableau_index(shape: Partition) -> dict:
    return {t.rows: i for i, t in enumerate(standard_tableaux(shape))}


@lru_cache(maxsize=None)
def _adjacent(shape: Partition, k: int) -> np.ndarray:
    tabs = standard_tableaux(shape)
    index = _tableau_index(shape)
    m = len(tabs)
    out = np.zeros((m, m))
    for i, t in enumerate(tabs):
        r = t.content(k + 1) - t.content(k)
        out[i, i] = 1.0 / r
        if abs(r) > 1:
            j = index[t.swapped(k).rows]
            out[j, i] = math.sqrt(1.0 - 1.0 / r**2)
    out.setflags(write=False)
    return out


def yor_adjacent(shape, k: int) -> np.ndarray:
    """Image of the adjacent transposition ``(k, k+1)``.

    Diagonal entries are ``1/r`` for the axial distance ``r`` from ``k`` to
    ``k+1``; the partner tableau (``k`` and ``k+1`` swapped) receives
    ``sqrt(1 - 1/r**2)``.
    """
    shape = Partition(shape)
    if not 1 <= k <= shape.weight - 1:
        raise ValueError(f"k={k} out of range for shape {shape}")
    return _adjacent(shape, k)


def adjacent_factorization(sigma: Permutation) -> list[int]:
    """Indices ``[k1, k2, ...]`` with ``sigma = s_k1 ∘ s_k2 ∘ ...`` (bubble sort)."""
    images = list(sigma.images)
    right: list[int] = []
    done = False
    while not done:
        done = True
        for k in range(len(images) - 1):
            if images[k] > images[k + 1]:
                # sigma = sigma' ∘ s_k with one fewer inversion
                images[k], images[k + 1] = images[k + 1], images[k]
                right.append(k + 1)
                done = False
    return right[::-1]


@lru_cache(maxsize=65536)
def _yor_matrix(shape: Partition, images: tuple) -> np.ndarray:
    m = len(standard_tableaux(shape))
    out = np.eye(m)
    for k in adjacent_factorization(Permutation(images)):
        out = out @ _adjacent(shape, k)
    out.setflags(write=False)
    return out


def yor_matrix(shape, sigma: Permutation) -> np.ndarray:
    """Orthogonal matrix of ``sigma`` in the irrep labelled by ``shape``."""
    shape = Partition(shape)
    if sigma.n != shape.weight:
        raise ValueError(f"degree {sigma.n} does not match shape {shape}")
    return _yor_matrix(shape, sigma.images)


def character(shape, sigma: Permutation) -> float:
    return float(np.trace(yor_matrix(shape, sigma)))


@lru_cache(maxsize=None)
def yor_table(shape: Partition) -> np.ndarray:
    """Stack of all images, indexed by ``perm_rank`` of the permutation."""
    shape = Partition(shape)
    group = symmetric_group(shape.weight)
    m = len(standard_tableaux(shape))
    table = np.empty((len(group), m, m))
    for p in group:
        table[perm_rank(p.images)] = yor_matrix(shape, p)
    table.setflags(write=False)
    return table
