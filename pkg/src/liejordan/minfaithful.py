"""Minimal total dimension of a faithful completely reducible representation.

For a simply connected simple group, a direct sum of irreducibles is
faithful exactly when the highest weights jointly detect every
nonidentity central class.  Minimising the total dimension is therefore
a weighted set-cover problem over a tiny universe (the center has at
most rank+1 elements for the types in budget), solved exactly by
dynamic programming over coverage bitmasks.

The enumeration cap 2**rank + 10 is safe: every type admits a faithful
set of total dimension at most that value, each weight in an optimal
set has dimension at most the optimal total, and the cap is attained
only by the 26-dimensional rank-4 case.
"""
from __future__ import annotations

from dataclasses import dataclass

from .center import WeightSet, center_classes, pair
from .rootdata import (RootDatum, SimpleType, build_root_datum,
                       check_rank_budget, enumerate_dominant_weights,
                       max_rank, weyl_dim)


@dataclass(frozen=True)
class RdimResult:
    """An optimal faithful weight set with its dimension bookkeeping.

    per_weight_dims is aligned with the (sorted) witness weights.
    """

    total_dim: int
    witness: WeightSet
    per_weight_dims: tuple[int, ...]


def rdim(datum: RootDatum, override: bool = False) -> RdimResult:
    """Minimal faithful total dimension, with a deterministic witness.

    Ties are broken by fewest weights, then by the lexicographically
    smallest sorted list of weight coordinates.  Ranks over the budget
    are refused unless override is set.
    """
    check_rank_budget(datum.type, override)
    cap = 2 ** datum.rank + 10
    candidates = enumerate_dominant_weights(datum, cap, allow_large_cap=override)
    classes = center_classes(datum)

    if not classes:
        w, d = candidates[0]
        return RdimResult(d, WeightSet((w,)), (d,))

    # Coverage mask per weight; equal masks keep only the cheapest weight,
    # and candidates arrive ordered by (dim, coords) so the first one wins.
    items = []
    seen_masks = set()
    for w, d in candidates:
        mask = 0
        for bit, cls in enumerate(classes):
            if pair(w, cls):
                mask |= 1 << bit
        if mask and mask not in seen_masks:
            seen_masks.add(mask)
            items.append((mask, d, w))

    full = (1 << len(classes)) - 1
    # best[state] = (total dim, weight count, sorted coords tuple, weights)
    best: list = [None] * (full + 1)
    best[0] = (0, 0, (), ())
    for state in range(full + 1):
        if best[state] is None:
            continue
        total, count, key, weights = best[state]
        for mask, d, w in items:
            nxt = state | mask
            if nxt == state:
                continue
            cand = (total + d, count + 1,
                    tuple(sorted(key + (w.coords,))), weights + (w,))
            if best[nxt] is None or cand[:3] < best[nxt][:3]:
                best[nxt] = cand
    if best[full] is None:
        raise AssertionError(f"no faithful weight set under cap for {datum.type}")
    total, _, _, weights = best[full]
    witness = WeightSet(weights)
    dims = tuple(weyl_dim(datum, w) for w in witness)
    return RdimResult(total, witness, dims)


def rdim_table(table_max_rank: int, override: bool = False):
    """Minimal faithful dimensions for every simple type up to a rank.

    Returns (SimpleType, RdimResult) pairs, ordered by family letter
    then rank.  Exceptional types appear when their rank fits.
    """
    if table_max_rank < 1:
        raise ValueError(f"max rank must be positive, got {table_max_rank}")
    check_rank_budget(SimpleType("A", table_max_rank), override)
    rows = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        for rank in range(lo, table_max_rank + 1):
            rows.append(SimpleType(fam, rank))
    for fam, ranks in (("E", (6, 7, 8)), ("F", (4,)), ("G", (2,))):
        for rank in ranks:
            if rank <= table_max_rank:
                rows.append(SimpleType(fam, rank))
    return [(t, rdim(build_root_datum(t), override)) for t in rows]


def verify_dimension_cap(datum: RootDatum, override: bool = False) -> bool:
    """Whether the minimal faithful dimension is at most 2**rank + 10."""
    return rdim(datum, override).total_dim <= 2 ** datum.rank + 10
