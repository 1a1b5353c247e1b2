"""Independent brute-force reference for the weighted scatter matrices.

Everything here is written with plain Python loops and lists, directly from
the defining formulas, and must stay independent of the package internals:
it is the ground truth the vectorized/compiled paths are checked against.
"""

import math


def euclid(a, b):
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)))


def inverse_distance_weights(dists, exclude=None):
    """Normalized inverse-distance weights over one target list.

    ``exclude`` marks the self index (weight forced to 0, not counted as a
    zero distance).  If any remaining distance is exactly 0, the unit mass is
    split uniformly over the zero entries (the limit of inverse weighting).
    """
    n = len(dists)
    active = [k for k in range(n) if k != exclude]
    assert active, "empty target after self-exclusion"
    zeros = [k for k in active if dists[k] == 0.0]
    w = [0.0] * n
    if zeros:
        for k in zeros:
            w[k] = 1.0 / len(zeros)
    else:
        inv = {k: 1.0 / dists[k] for k in active}
        total = sum(inv.values())
        for k in active:
            w[k] = inv[k] / total
    return w


def class_lists(samples, labels):
    """Samples grouped per class id, plus original positions."""
    n_classes = max(labels) + 1
    grouped = [[] for _ in range(n_classes)]
    for pos, lab in enumerate(labels):
        grouped[lab].append([float(v) for v in samples[pos]])
    return grouped


def pair_quantities(xs_i, xs_j, self_pair):
    """Weighted means and lambda weights for one ordered class pair."""
    means = []
    dmean = []
    for l, x in enumerate(xs_i):
        dists = [euclid(x, t) for t in xs_j]
        w = inverse_distance_weights(dists, exclude=l if self_pair else None)
        p = len(x)
        m = [sum(w[k] * xs_j[k][d] for k in range(len(xs_j))) for d in range(p)]
        means.append(m)
        dmean.append(euclid(x, m))
    lam = inverse_distance_weights(dmean)
    return means, lam


def scatter_matrices(samples, labels, allow_singletons=False):
    """(S_b, S_w) as nested lists, by direct evaluation of the definitions."""
    grouped = class_lists(samples, labels)
    n_classes = len(grouped)
    n_total = len(labels)
    p = len(samples[0])
    s_b = [[0.0] * p for _ in range(p)]
    s_w = [[0.0] * p for _ in range(p)]

    for i in range(n_classes):
        for j in range(n_classes):
            if i == j and len(grouped[i]) < 2:
                if allow_singletons:
                    continue
                raise ValueError(f"singleton class {i}")
            means, lam = pair_quantities(grouped[i], grouped[j], self_pair=(i == j))
            target = s_w if i == j else s_b
            for l, x in enumerate(grouped[i]):
                diff = [x[d] - means[l][d] for d in range(p)]
                for a in range(p):
                    for b in range(p):
                        target[a][b] += lam[l] * diff[a] * diff[b] / n_total
    return s_b, s_w
