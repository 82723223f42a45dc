"""Numpy implementations of the hot kernels; used when the extension is absent."""

import numpy as np


def basis_permutation(images, d):
    """Column map of the permutation operator: ``(V x)[j] == x[cols[j]]``.

    ``images`` is the 1-based one-line form of σ; factor 1 is the slowest
    index of the computational basis.
    """
    images = np.asarray(images, dtype=np.int64)
    n = images.shape[0]
    inv = np.empty(n, dtype=np.int64)
    inv[images - 1] = np.arange(n)
    arr = np.arange(d**n, dtype=np.int64).reshape((d,) * n) if n else np.zeros((), np.int64)
    return np.ascontiguousarray(arr.transpose(inv)).reshape(-1)


def scatter_blocks(out, table, block_ids, row_legs, col_legs, weights):
    """``out[r-block, c-block] += w * table[id]`` for each entry, in place."""
    m = table.shape[1]
    view = out.reshape(out.shape[0] // m, m, out.shape[1] // m, m)
    for t in range(len(block_ids)):
        view[row_legs[t], :, col_legs[t], :] += weights[t] * table[block_ids[t]]
    return out


def grid_min_eig(weights, block_terms, scalar_terms):
    """Smallest eigenvalue over a family of 2x2 symmetric blocks plus scalars.

    For each row ``w`` of ``weights`` the block is ``sum_k w[k] * T_k`` with
    ``T_k = [[t11, t12], [t12, t22]]`` given as ``block_terms[k] = (t11, t22, t12)``,
    and the scalar eigenvalues are ``w @ scalar_terms``.
    """
    t = weights @ block_terms
    half_tr = 0.5 * (t[:, 0] + t[:, 1])
    rad = np.hypot(0.5 * (t[:, 0] - t[:, 1]), t[:, 2])
    lam = half_tr - rad
    if scalar_terms.shape[1]:
        lam = np.minimum(lam, (weights @ scalar_terms).min(axis=1))
    return lam
