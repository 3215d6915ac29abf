"""Vectorized subset enumeration for (p)BAF semantics.

Argument sets are bitmasks. For every quantity that distributes over set
union (attack range, support closure, premise union) a full table over all
2^n subsets is filled with a doubling trick: the table for masks containing
node k is the table without k OR-ed with k's own row. Everything else is
boolean filtering on top of those tables.
"""
from __future__ import annotations

import numpy as np

from .errors import TooLarge

ENUM_LIMIT = 24
PREMISE_LIMIT = 63


def or_table(n, rows, dtype=np.uint32):
    """out[m] = OR of rows[k] over the bits k set in m."""
    out = np.zeros(1 << n, dtype=dtype)
    rows = np.asarray(rows, dtype=dtype)
    for k in range(n):
        out[1 << k: 2 << k] = out[: 1 << k] | rows[k]
    return out


def single_closures(n, sup_pairs):
    """Closure of each singleton under outgoing support edges."""
    out_edges = [[] for _ in range(n)]
    for s, t in sup_pairs:
        out_edges[s].append(t)
    closures = []
    for start in range(n):
        seen = 1 << start
        stack = [start]
        while stack:
            v = stack.pop()
            for w in out_edges[v]:
                if not seen >> w & 1:
                    seen |= 1 << w
                    stack.append(w)
        closures.append(seen)
    return closures


class SubsetEngine:
    """Shared tables for one framework; semantics are filters over them."""

    def __init__(self, n, att_pairs, sup_pairs, limit=ENUM_LIMIT):
        if n > min(limit, ENUM_LIMIT):
            raise TooLarge("argument count", n, min(limit, ENUM_LIMIT))
        self.n = n
        self.size = 1 << n
        self.full = np.uint32(self.size - 1)
        att_rows = [0] * n
        self.attackers = [[] for _ in range(n)]
        for s, t in att_pairs:
            att_rows[s] |= 1 << t
            self.attackers[t].append(s)
        self.cl1 = single_closures(n, sup_pairs)
        self.rng = or_table(n, att_rows)
        self.cl = or_table(n, self.cl1)
        idx = np.arange(self.size, dtype=np.uint32)
        self.conflict_free = (idx & self.rng) == 0
        self.closed = self.cl == idx
        self._idx = idx

    def candidate_masks(self):
        return np.flatnonzero(self.conflict_free & self.closed).astype(np.uint32)

    def gamma(self, masks):
        """Defended-argument mask for each set, closure-aware."""
        rng_m = self.rng[masks]
        out = np.zeros(len(masks), dtype=np.uint32)
        for a in range(self.n):
            ok = np.ones(len(masks), dtype=bool)
            for b in self.attackers[a]:
                ok &= (rng_m & np.uint32(self.cl1[b])) != 0
            out |= ok.astype(np.uint32) << np.uint32(a)
        return out

    def admissible_flags(self, cand, g):
        return (cand & ~g) == 0

    def stable_masks(self):
        closed_masks = np.flatnonzero(self.closed).astype(np.uint32)
        ok = self.rng[closed_masks] == (self.full ^ closed_masks)
        return closed_masks[ok]

    def premise_tables(self, premise_masks):
        if self.n and max(m.bit_length() for m in premise_masks) > PREMISE_LIMIT:
            raise TooLarge("premise universe", max(m.bit_length()
                           for m in premise_masks), PREMISE_LIMIT)
        return or_table(self.n, premise_masks, dtype=np.uint64)

    def exhaustive_flags(self, cand, premise_masks, premise_union):
        """Sets already containing every argument their premises afford."""
        pu = premise_union[cand]
        ok = np.ones(len(cand), dtype=bool)
        for a in range(self.n):
            pa = np.uint64(premise_masks[a])
            covered = (pa & ~pu) == np.uint64(0)
            present = (cand >> np.uint32(a)) & np.uint32(1) == 1
            ok &= present | ~covered
        return ok


def maximal_masks(masks):
    """Drop every mask that has a strict superset in the list."""
    masks = np.asarray(masks, dtype=np.uint32)
    k = len(masks)
    keep = np.ones(k, dtype=bool)
    step = 2048
    for start in range(0, k, step):
        blk = masks[start:start + step]
        superset = (blk[:, None] & ~masks[None, :]) == 0
        strict = superset & (blk[:, None] != masks[None, :])
        keep[start:start + len(blk)] = ~strict.any(axis=1)
    return masks[keep]


def intersect_masks(masks, full):
    out = full
    for m in masks:
        out &= int(m)
    return int(out) if len(masks) else 0
