"""Exhaustive sweeps over all labelled structures encoded as edge bit masks.

Two independent routes are provided.

* Tables: for every mask, the largest sub-mask satisfying a structural test
  (linear forest, matching, tight linear forest), computed by a max-over-subsets
  transform in numpy. This is the definition of the statistic evaluated
  literally, just vectorised.
* Search: a generic predicate is evaluated mask by mask, highest edge count
  first, so the first hit on a level is the extremal value and, with masks
  ascending inside a level, the smallest maximiser.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, permutations
from typing import Callable, Sequence

import numpy as np

from .graph import pair_list

TABLE_MAX_BITS = 22


def popcounts(nbits: int) -> np.ndarray:
    masks = np.arange(1 << nbits, dtype=np.int64)
    out = np.zeros(1 << nbits, dtype=np.int8)
    for b in range(nbits):
        out += ((masks >> b) & 1).astype(np.int8)
    return out


def subset_max(values: np.ndarray, nbits: int) -> np.ndarray:
    """out[m] = max(values[s] for s a sub-mask of m)."""
    out = values.copy()
    for b in range(nbits):
        view = out.reshape(-1, 2, 1 << b)
        np.maximum(view[:, 1, :], view[:, 0, :], out=view[:, 1, :])
    return out


def superset_any(marks: np.ndarray, nbits: int) -> np.ndarray:
    """out[m] = True iff some marked mask is a sub-mask of m."""
    out = marks.copy()
    for b in range(nbits):
        view = out.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    return out


def _check_bits(nbits: int) -> None:
    if nbits > TABLE_MAX_BITS:
        raise ValueError(f"table sweep limited to {TABLE_MAX_BITS} edge bits, got {nbits}")


def _degrees(n: int) -> list[np.ndarray]:
    pairs = pair_list(n)
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    deg = [np.zeros(masks.size, dtype=np.int8) for _ in range(n)]
    for i, (u, v) in enumerate(pairs):
        bit = ((masks >> i) & 1).astype(np.int8)
        deg[u] += bit
        deg[v] += bit
    return deg


def cycle_masks(n: int) -> list[int]:
    """Edge masks of every cycle of K_n."""
    index = {p: i for i, p in enumerate(pair_list(n))}
    out = []
    for size in range(3, n + 1):
        for verts in combinations(range(n), size):
            first, rest = verts[0], verts[1:]
            for order in permutations(rest):
                if order[0] > order[-1]:
                    continue
                seq = (first,) + order
                mask = 0
                for a, b in zip(seq, seq[1:] + (first,)):
                    mask |= 1 << index[(min(a, b), max(a, b))]
                out.append(mask)
    return out


def linear_forest_table(n: int) -> np.ndarray:
    """L[mask]: edges in a largest linear forest of the graph with that edge mask."""
    nbits = n * (n - 1) // 2
    _check_bits(nbits)
    size = 1 << nbits
    low_degree = np.ones(size, dtype=bool)
    for d in _degrees(n):
        low_degree &= d <= 2
    marks = np.zeros(size, dtype=bool)
    marks[cycle_masks(n)] = True
    acyclic = ~superset_any(marks, nbits)
    values = np.where(low_degree & acyclic, popcounts(nbits), np.int8(-1)).astype(np.int8)
    return subset_max(values, nbits)


def matching_table(n: int) -> np.ndarray:
    """nu[mask]: matching number of the graph with that edge mask."""
    nbits = n * (n - 1) // 2
    _check_bits(nbits)
    matching = np.ones(1 << nbits, dtype=bool)
    for d in _degrees(n):
        matching &= d <= 1
    values = np.where(matching, popcounts(nbits), np.int8(-1)).astype(np.int8)
    return subset_max(values, nbits)


def extremal_from_table(stat: np.ndarray, nbits: int, below: int) -> tuple[int, int]:
    """(max edges, smallest maximising mask) over masks with stat < below."""
    free = stat < below
    counts = popcounts(nbits)
    best = int(counts[free].max())
    mask = int(np.flatnonzero(free & (counts == best))[0])
    return best, mask


# -- search route ----------------------------------------------------------

def masks_with_popcount(nbits: int, m: int) -> list[int]:
    """All nbits-bit masks with m set bits, ascending."""
    out = []
    for bits in combinations(range(nbits), m):
        mask = 0
        for b in bits:
            mask |= 1 << b
        out.append(mask)
    out.sort()
    return out


def _first_hit(args) -> int | None:
    predicate, chunk = args
    for mask in chunk:
        if predicate(mask):
            return mask
    return None


def search_max(
    nbits: int,
    predicate: Callable[[int], bool],
    jobs: int = 1,
    chunk: int = 4096,
) -> tuple[int, int, int]:
    """Largest popcount of a mask satisfying ``predicate``.

    Returns ``(value, smallest maximising mask, masks tested)``. With
    ``jobs > 1`` each level is split into chunks tested in worker processes;
    ``predicate`` must then be picklable. The answer does not depend on
    ``jobs``.
    """
    tested = 0
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for m in range(nbits, -1, -1):
            level = masks_with_popcount(nbits, m)
            pieces = [level[i:i + chunk] for i in range(0, len(level), chunk)]
            if pool is None:
                for piece in pieces:
                    hit = _first_hit((predicate, piece))
                    if hit is not None:
                        tested += piece.index(hit) + 1
                        return m, hit, tested
                    tested += len(piece)
            else:
                hits = list(pool.map(_first_hit, [(predicate, p) for p in pieces]))
                tested += len(level)
                found = [h for h in hits if h is not None]
                if found:
                    return m, min(found), tested
    finally:
        if pool is not None:
            pool.shutdown()
    raise ValueError("predicate rejects the empty structure")


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1


def table_bits(n: int) -> int:
    return n * (n - 1) // 2


def masks_to_pairs(mask: int, pairs: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return [p for i, p in enumerate(pairs) if mask >> i & 1]
