"""Dense indexing of game states: combinatorial ranking of cop multisets.

A cop placement is a sorted multiset of c vertices.  Mapping a multiset
(m_0 <= ... <= m_{c-1}) to the strictly increasing tuple (m_j + j) gives a
bijection with c-subsets of {0..V+c-2}, which are ranked in colex order:

    rank = sum_j C(m_j + j, j + 1)

so ranks fill [0, C(V+c-1, c)) densely.  Full game states are then

    state = (rank * V + robber) * 2 + side

with side 0 = cops to move, 1 = robber to move.
"""

from __future__ import annotations

import numpy as np
from numba import njit

COPS_TO_MOVE = 0
ROBBER_TO_MOVE = 1


def binomial_table(n_max: int, k_max: int) -> np.ndarray:
    """C(n, k) for 0 <= n <= n_max, 0 <= k <= k_max, as int64."""
    t = np.zeros((n_max + 1, k_max + 1), dtype=np.int64)
    t[:, 0] = 1
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            t[n, k] = t[n - 1, k - 1] + t[n - 1, k]
    return t


def num_multisets(v: int, c: int) -> int:
    from math import comb

    return comb(v + c - 1, c)


@njit(cache=True)
def multiset_rank(binom: np.ndarray, members: np.ndarray, c: int) -> np.int64:
    """Colex rank of a sorted multiset (ascending)."""
    r = np.int64(0)
    for j in range(c):
        r += binom[members[j] + j, j + 1]
    return r


@njit(cache=True)
def multiset_unrank(binom: np.ndarray, rank: np.int64, c: int, out: np.ndarray) -> None:
    """Inverse of multiset_rank; writes the sorted members into out[:c]."""
    r = rank
    prev = binom.shape[0] - 1
    for j in range(c - 1, -1, -1):
        s = prev
        while binom[s, j + 1] > r:
            s -= 1
        r -= binom[s, j + 1]
        out[j] = s - j
        prev = s


def rank_of(binom: np.ndarray, cops) -> int:
    """Python-side convenience: rank a cop position iterable."""
    members = np.asarray(sorted(cops), dtype=np.int64)
    return int(multiset_rank(binom, members, len(members)))


def unrank_to_tuple(binom: np.ndarray, rank: int, c: int) -> tuple[int, ...]:
    out = np.empty(c, dtype=np.int64)
    multiset_unrank(binom, np.int64(rank), c, out)
    return tuple(int(x) for x in out)


def state_index(v: int, rank: int, robber: int, side: int) -> int:
    return (rank * v + robber) * 2 + side
