"""Shared test utilities: front construction and independent oracles."""

import numpy as np

from knee_mcdm import Front


def make_front(rows, ids=None, names=None, senses=None):
    rows = np.asarray(rows, dtype=float)
    m, n = rows.shape
    return Front(
        objective_names=tuple(names) if names else tuple(f"f{k + 1}" for k in range(n)),
        senses=tuple(senses) if senses else ("min",) * n,
        ids=tuple(ids) if ids else tuple(f"p{k}" for k in range(m)),
        objectives=rows,
    )


def brute_force_nondominated(rows):
    """Indices of nondominated rows by exhaustive pairwise comparison.

    Pure-python reference implementation, kept independent of the library's
    vectorized filter.
    """
    keep = []
    for i, fi in enumerate(rows):
        dominated = False
        for j, fj in enumerate(rows):
            if i == j:
                continue
            if all(a <= b for a, b in zip(fj, fi)) and any(
                a < b for a, b in zip(fj, fi)
            ):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    return keep
