"""Exhaustive ordering search over precomputed permutation tables."""

from __future__ import annotations

import itertools
from functools import lru_cache

import numba
import numpy as np


@lru_cache(maxsize=None)
def permutation_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """``(labels, visits)`` for all n! orderings, rows in lexicographic order of ``labels``.

    ``labels[r, v]`` is the 0-based label of vertex ``v``; ``visits[r, k]`` is the
    vertex holding 0-based label ``k``.
    """
    labels = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    visits = np.argsort(labels, axis=1).astype(np.int8)
    labels.setflags(write=False)
    visits.setflags(write=False)
    return labels, visits


@numba.njit(cache=True)
def _scan(dist, visits, maximize, cap):
    rows, n = visits.shape
    best = -1 if maximize else np.iinfo(np.int64).max
    best_row = -1
    for r in range(rows):
        total = 0
        pruned = False
        for k in range(n - 1):
            total += dist[visits[r, k], visits[r, k + 1]]
            left = n - 2 - k
            # strict improvement only, so the first (lexicographically smallest) optimum wins
            if maximize:
                if total + left * cap <= best:
                    pruned = True
                    break
            elif total + left >= best:
                pruned = True
                break
        if not pruned:
            best = total
            best_row = r
    return best, best_row


def extreme_ordering(dist: np.ndarray, maximize: bool) -> tuple[int, np.ndarray]:
    """Optimal total and 0-based label vector over all orderings of a distance matrix."""
    n = dist.shape[0]
    labels, visits = permutation_tables(n)
    if n == 1:
        return 0, labels[0]
    d = np.ascontiguousarray(dist, dtype=np.int64)
    total, row = _scan(d, visits, maximize, int(d.max()))
    return int(total), labels[row]
