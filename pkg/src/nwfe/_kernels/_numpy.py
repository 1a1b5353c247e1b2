"""Pure-NumPy implementation of the per-class-pair kernel.

Reference backend; the compiled Cython version in ``_core.pyx`` computes the
same quantities and is preferred at import time when available.
"""

import numpy as np

NAME = "python"


def pair_stats(x_i, x_j, d_ij, self_pair):
    """Weights, weighted means, scatter weights and the scatter block for
    one ordered class pair.

    Parameters
    ----------
    x_i : (n_i, p) samples of the source class
    x_j : (n_j, p) samples of the target class
    d_ij : (n_i, n_j) Euclidean distances between them
    self_pair : the two classes are the same one; the k=l entry is excluded

    Returns
    -------
    w : (n_i, n_j) inverse-distance weights, rows sum to 1
    m : (n_i, p) weighted means, m[l] = w[l] @ x_j
    lam : (n_i,) scatter weights, sum to 1
    block : (p, p) sum_l lam[l] * outer(x_i[l] - m[l]), exactly symmetric

    Zero distances get the uniform-split limit rule: if a row of ``d_ij``
    (after self-exclusion) has exact zeros, the unit mass is divided evenly
    over the zero entries and all other weights are 0.  Same rule for the
    lambda normalization over sample-to-mean distances.
    """
    d = np.array(d_ij, dtype=np.float64, copy=True)
    n_i, n_j = d.shape
    if self_pair:
        if n_i < 2:
            raise ValueError("self pair needs at least two samples")
        np.fill_diagonal(d, np.inf)  # excluded entry: 1/inf -> weight 0

    zero = d == 0.0
    row_has_zero = zero.any(axis=1)
    with np.errstate(divide="ignore"):
        inv = 1.0 / d
    w = np.empty_like(d)
    plain = ~row_has_zero
    if plain.any():
        w[plain] = inv[plain] / inv[plain].sum(axis=1, keepdims=True)
    if row_has_zero.any():
        zr = zero[row_has_zero]
        w[row_has_zero] = zr / zr.sum(axis=1, keepdims=True)

    m = w @ x_j
    diffs = np.asarray(x_i, dtype=np.float64) - m
    dmean = np.sqrt(np.einsum("lp,lp->l", diffs, diffs))

    zl = dmean == 0.0
    if zl.any():
        lam = zl / zl.sum()
    else:
        invm = 1.0 / dmean
        lam = invm / invm.sum()

    block = (diffs * lam[:, None]).T @ diffs
    block = 0.5 * (block + block.T)
    return w, m, lam, block
