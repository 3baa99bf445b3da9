"""Bitset sweep kernels over all subset pairs of a small group.

Subsets of a group of order n <= 16 are masks with element i at bit i.
Every sweep here exists twice: a numba-compiled kernel and a pure numpy
fallback built on subset-DP tables. Set TRIOLAB_NO_NUMBA=1 to force the
numpy path; the active path is reported by backend().
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

__all__ = [
    "HAS_NUMBA",
    "backend",
    "MaskTables",
    "mask_tables",
    "popcounts",
    "all_products_for_b",
    "cd_violations",
    "kneser_violations",
    "repmin_violations",
    "closure_sweep",
    "ClosureSweep",
    "TRIVIAL_SENTINEL",
    "cut_profile",
    "MAX_CUT_VERTICES",
]

_FORCE_NUMPY = os.environ.get("TRIOLAB_NO_NUMBA", "0") not in ("", "0")

try:
    if _FORCE_NUMPY:
        raise ImportError("numba disabled by TRIOLAB_NO_NUMBA")
    from numba import njit

    HAS_NUMBA = True
except ImportError:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap

    HAS_NUMBA = False


def backend() -> str:
    return "numba" if HAS_NUMBA else "numpy"


MAX_SWEEP_ORDER = 16
TRIVIAL_SENTINEL = np.int8(-128)

_POP16 = None


def _pop16() -> np.ndarray:
    global _POP16
    if _POP16 is None:
        lut = np.zeros(1 << 16, dtype=np.uint8)
        for i in range(16):
            lut[(np.arange(1 << 16) >> i) & 1 == 1] += 1
        _POP16 = lut
    return _POP16


def popcounts(masks: np.ndarray) -> np.ndarray:
    """Elementwise popcount for mask arrays below 2^32."""
    lut = _pop16()
    m = masks.astype(np.uint32, copy=False)
    return lut[m & np.uint32(0xFFFF)].astype(np.int16) + lut[m >> np.uint32(16)]


@dataclass(frozen=True)
class MaskTables:
    """Per-group lookup tables for mask arithmetic."""

    n: int
    full: int
    table: np.ndarray  # (n, n) int64
    inv_elt: np.ndarray  # (n,) int64
    inv_mask: np.ndarray  # (2^n,) uint32: mask of elementwise inverses
    left: np.ndarray  # (n, 2^n) uint32: left[g][X] = mask of g*X
    right: np.ndarray  # (n, 2^n) uint32: right[g][X] = mask of X*g


def mask_tables(table: np.ndarray) -> MaskTables:
    table = np.ascontiguousarray(np.asarray(table, dtype=np.int64))
    n = table.shape[0]
    if n > MAX_SWEEP_ORDER:
        raise ValueError(f"sweep kernels capped at order {MAX_SWEEP_ORDER}, got {n}")
    size = 1 << n
    inv_elt = np.empty(n, dtype=np.int64)
    rows, cols = np.nonzero(table == 0)
    inv_elt[rows] = cols

    inv_mask = np.zeros(size, dtype=np.uint32)
    left = np.zeros((n, size), dtype=np.uint32)
    right = np.zeros((n, size), dtype=np.uint32)
    for i in range(n):
        lo, hi = 1 << i, 1 << (i + 1)
        inv_mask[lo:hi] = inv_mask[:lo] | np.uint32(1 << int(inv_elt[i]))
        for g in range(n):
            left[g, lo:hi] = left[g, :lo] | np.uint32(1 << int(table[g, i]))
            right[g, lo:hi] = right[g, :lo] | np.uint32(1 << int(table[i, g]))
    return MaskTables(
        n=n,
        full=size - 1,
        table=table,
        inv_elt=inv_elt,
        inv_mask=inv_mask,
        left=left,
        right=right,
    )


def all_products_for_b(mt: MaskTables, bmask: int) -> np.ndarray:
    """Masks of A*B for every A, with B fixed, via subset DP over elements of A."""
    n = mt.n
    out = np.zeros(1 << n, dtype=np.uint32)
    for i in range(n):
        lo, hi = 1 << i, 1 << (i + 1)
        out[lo:hi] = out[:lo] | mt.left[i, bmask]
    return out


# ---------------------------------------------------------------------------
# numba kernels


@njit(cache=True)
def _kk_pop(mask, lut):
    return lut[mask & 0xFFFF] + lut[(mask >> 16) & 0xFFFF]


@njit(cache=True)
def _kk_cd_violations(table, n, lut):
    size = 1 << n
    viol = 0
    row = np.empty(n, dtype=np.int64)
    for bmask in range(1, size):
        nb = _kk_pop(bmask, lut)
        for a in range(n):
            m = 0
            bb = bmask
            while bb:
                b = _trailing_zero(bb)
                bb &= bb - 1
                m |= 1 << table[a, b]
            row[a] = m
        for amask in range(1, size):
            prod = 0
            aa = amask
            na = 0
            while aa:
                a = _trailing_zero(aa)
                aa &= aa - 1
                prod |= row[a]
                na += 1
            bound = na + nb - 1
            if bound > n:
                bound = n
            if _kk_pop(prod, lut) < bound:
                viol += 1
    return viol


@njit(cache=True)
def _trailing_zero(x):
    t = 0
    while not (x >> t) & 1:
        t += 1
    return t


@njit(cache=True)
def _kk_kneser_violations(table, n, lut, right):
    size = 1 << n
    viol = 0
    row = np.empty(n, dtype=np.int64)
    for bmask in range(1, size):
        nb = _kk_pop(bmask, lut)
        for a in range(n):
            m = 0
            bb = bmask
            while bb:
                b = _trailing_zero(bb)
                bb &= bb - 1
                m |= 1 << table[a, b]
            row[a] = m
        for amask in range(1, size):
            prod = 0
            aa = amask
            na = 0
            while aa:
                a = _trailing_zero(aa)
                aa &= aa - 1
                prod |= row[a]
                na += 1
            stab = 1
            for g in range(1, n):
                if right[g, prod] == np.uint32(prod):
                    stab += 1
            if _kk_pop(prod, lut) < na + nb - stab:
                viol += 1
    return viol


@njit(cache=True)
def _kk_repmin_violations(table, n, lut):
    size = 1 << n
    viol = 0
    reps = np.empty(size, dtype=np.int64)
    for bmask in range(1, size):
        for amask in range(1, size):
            prod = 0
            for z in range(n):
                reps[1 << z] = 0
            aa = amask
            na = 0
            while aa:
                a = _trailing_zero(aa)
                aa &= aa - 1
                na += 1
                bb = bmask
                while bb:
                    b = _trailing_zero(bb)
                    bb &= bb - 1
                    z = table[a, b]
                    prod |= 1 << z
                    reps[1 << z] += 1
            rep_min = n * n + 1
            pp = prod
            while pp:
                z = pp & (-pp)
                pp &= pp - 1
                if reps[z] < rep_min:
                    rep_min = reps[z]
            nb = _kk_pop(bmask, lut)
            if na + nb - _kk_pop(prod, lut) > rep_min:
                viol += 1
    return viol


@njit(cache=True)
def _kk_closure_sweep(table, n, lut, inv_mask, left, right, deltas, astar, bstar):
    size = 1 << n
    full = size - 1
    row = np.empty(n, dtype=np.int64)
    for bmask in range(1, size):
        nb = _kk_pop(bmask, lut)
        for a in range(n):
            m = 0
            bb = bmask
            while bb:
                b = _trailing_zero(bb)
                bb &= bb - 1
                m |= 1 << table[a, b]
            row[a] = m
        base = bmask << n
        for amask in range(1, size):
            prod = 0
            aa = amask
            while aa:
                a = _trailing_zero(aa)
                aa &= aa - 1
                prod |= row[a]
            idx = base + amask
            if prod == full:
                deltas[idx] = TRIVIAL_SENTINEL
                astar[idx] = np.uint16(full)
                bstar[idx] = np.uint16(full)
                continue
            cmask = full ^ inv_mask[prod]
            acur = amask
            bcur = bmask
            while True:
                # A <- complement of (B*C)^-1, then B <- complement of (C*A)^-1
                bc = 0
                cc = cmask
                while cc:
                    c = _trailing_zero(cc)
                    cc &= cc - 1
                    bc |= right[c, bcur]
                anew = full ^ inv_mask[bc]
                ca = 0
                cc = cmask
                while cc:
                    c = _trailing_zero(cc)
                    cc &= cc - 1
                    ca |= left[c, anew]
                bnew = full ^ inv_mask[ca]
                if anew == acur and bnew == bcur:
                    break
                acur, bcur = anew, bnew
            deltas[idx] = np.int8(_kk_pop(acur, lut) + _kk_pop(bcur, lut) - _kk_pop(prod, lut))
            astar[idx] = np.uint16(acur)
            bstar[idx] = np.uint16(bcur)


# ---------------------------------------------------------------------------
# numpy fallback sweeps


def _np_cd_violations(mt: MaskTables) -> int:
    n, size = mt.n, 1 << mt.n
    pop = popcounts(np.arange(size, dtype=np.uint32))
    viol = 0
    for bmask in range(1, size):
        prods = all_products_for_b(mt, bmask)
        bound = np.minimum(n, pop + pop[bmask] - 1)
        bad = popcounts(prods) < bound
        bad[0] = False
        viol += int(np.count_nonzero(bad))
    return viol


def _np_kneser_violations(mt: MaskTables) -> int:
    n, size = mt.n, 1 << mt.n
    pop = popcounts(np.arange(size, dtype=np.uint32))
    viol = 0
    for bmask in range(1, size):
        prods = all_products_for_b(mt, bmask)
        stab = np.ones(size, dtype=np.int16)
        for g in range(1, n):
            stab += mt.right[g][prods] == prods
        bad = popcounts(prods) < pop + pop[bmask] - stab
        bad[0] = False
        viol += int(np.count_nonzero(bad))
    return viol


def _np_repmin_violations(mt: MaskTables) -> int:
    n, size = mt.n, 1 << mt.n
    pop = popcounts(np.arange(size, dtype=np.uint32))
    viol = 0
    amasks = np.arange(size, dtype=np.uint32)
    for bmask in range(1, size):
        prods = all_products_for_b(mt, bmask)
        rep_best = np.full(size, n * n + 1, dtype=np.int32)
        bs = [b for b in range(n) if bmask >> b & 1]
        for z in range(n):
            # reps(A, z) counts pairs (a, b) with ab = z; a is z*b^-1 per b
            counts = np.zeros(size, dtype=np.int32)
            for b in bs:
                a = int(mt.table[z, mt.inv_elt[b]])
                counts += (amasks >> np.uint32(a)) & 1
            in_prod = (prods >> np.uint32(z)) & 1 == 1
            sel = in_prod & (counts < rep_best)
            rep_best[sel] = counts[sel]
        bad = pop + pop[bmask] - popcounts(prods) > rep_best
        bad[0] = False
        viol += int(np.count_nonzero(bad))
    return viol


def _np_closure_tables(mt: MaskTables) -> Tuple[np.ndarray, np.ndarray]:
    """ftab[X][B] = comp(inv(B*C_X)), gtab[X][A] = comp(inv(C_X*A)) with C_X = comp(inv(X))."""
    n, size = mt.n, 1 << mt.n
    full = np.uint32(mt.full)
    ftab = np.zeros((size, size), dtype=np.uint16)
    gtab = np.zeros((size, size), dtype=np.uint16)
    frow = np.zeros(size, dtype=np.uint32)
    grow = np.zeros(size, dtype=np.uint32)
    for x in range(size):
        c = int(full ^ mt.inv_mask[x])
        frow[0] = 0
        grow[0] = 0
        for i in range(n):
            lo, hi = 1 << i, 1 << (i + 1)
            frow[lo:hi] = frow[:lo] | mt.left[i, c]
            grow[lo:hi] = grow[:lo] | mt.right[i, c]
        ftab[x] = (full ^ mt.inv_mask[frow]).astype(np.uint16)
        gtab[x] = (full ^ mt.inv_mask[grow]).astype(np.uint16)
    return ftab, gtab


def _np_closure_sweep(mt: MaskTables, deltas, astar, bstar) -> None:
    n, size = mt.n, 1 << mt.n
    full = mt.full
    pop = popcounts(np.arange(size, dtype=np.uint32)).astype(np.int16)
    fflat, gflat = (t.ravel() for t in _np_closure_tables(mt))
    amasks = np.arange(size, dtype=np.int64)
    for bmask in range(1, size):
        prods = all_products_for_b(mt, bmask).astype(np.int64)
        xoff = prods << n
        acur = fflat[xoff + bmask].astype(np.int64)
        bcur = gflat[xoff + acur].astype(np.int64)
        while True:
            anew = fflat[xoff + bcur].astype(np.int64)
            bnew = gflat[xoff + anew].astype(np.int64)
            if np.array_equal(anew, acur) and np.array_equal(bnew, bcur):
                break
            acur, bcur = anew, bnew
        sl = slice(bmask << n, (bmask << n) + size)
        d = (pop[acur] + pop[bcur] - pop[prods]).astype(np.int8)
        trivial = prods == full
        d[trivial] = TRIVIAL_SENTINEL
        acur[trivial] = full
        bcur[trivial] = full
        d[0] = TRIVIAL_SENTINEL
        deltas[sl] = d
        astar[sl] = acur.astype(np.uint16)
        bstar[sl] = bcur.astype(np.uint16)


# ---------------------------------------------------------------------------
# dispatch layer


def cd_violations(table: np.ndarray) -> int:
    """Pairs (A,B) with |AB| < min(|G|, |A|+|B|-1), over all nonempty pairs."""
    mt = mask_tables(table)
    if HAS_NUMBA:
        return int(_kk_cd_violations(mt.table, mt.n, _pop16().astype(np.int64), ))
    return _np_cd_violations(mt)


def kneser_violations(table: np.ndarray) -> int:
    """Pairs with |AB| < |A|+|B|-|stab_R(AB)|, over all nonempty pairs."""
    mt = mask_tables(table)
    if HAS_NUMBA:
        return int(_kk_kneser_violations(mt.table, mt.n, _pop16().astype(np.int64), mt.right))
    return _np_kneser_violations(mt)


def repmin_violations(table: np.ndarray) -> int:
    """Pairs where the deficiency exceeds the minimal representation count of AB."""
    mt = mask_tables(table)
    if HAS_NUMBA:
        return int(_kk_repmin_violations(mt.table, mt.n, _pop16().astype(np.int64)))
    return _np_repmin_violations(mt)


@dataclass(frozen=True)
class ClosureSweep:
    """Per-pair maximal-closure results over all nonempty pairs of one group."""

    n: int
    n_pairs: int
    n_trivial: int  # pairs with AB = G (closure is the trivial full trio)
    deltas: np.ndarray  # int8, index (B<<n)+A; TRIVIAL_SENTINEL where AB = G
    astar: np.ndarray  # uint16 closed A
    bstar: np.ndarray  # uint16 closed B

    def critical_unique(self, min_delta: int = 1) -> np.ndarray:
        """Distinct (A*, B*) closures with deficiency >= min_delta, packed A | B<<16."""
        sel = self.deltas >= min_delta
        packed = self.astar[sel].astype(np.uint64) | (self.bstar[sel].astype(np.uint64) << np.uint64(16))
        return np.unique(packed)

    def delta_counts(self) -> dict:
        vals, counts = np.unique(self.deltas, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}


def closure_sweep(table: np.ndarray) -> ClosureSweep:
    """Close every nonempty pair (A,B) to its maximal trio; exhaustive, order <= 13."""
    mt = mask_tables(table)
    if mt.n > 13:
        raise ValueError(f"exhaustive closure sweep capped at order 13, got {mt.n}")
    size = 1 << mt.n
    deltas = np.zeros(size * size, dtype=np.int8)
    astar = np.zeros(size * size, dtype=np.uint16)
    bstar = np.zeros(size * size, dtype=np.uint16)
    if HAS_NUMBA:
        _kk_closure_sweep(
            mt.table, mt.n, _pop16().astype(np.int64), mt.inv_mask.astype(np.int64),
            mt.left, mt.right, deltas, astar, bstar,
        )
    else:
        _np_closure_sweep(mt, deltas, astar, bstar)
    deltas[:size] = TRIVIAL_SENTINEL  # empty-B row and empty-A column carry no pair
    deltas[0::size] = TRIVIAL_SENTINEL
    sentinel = deltas == TRIVIAL_SENTINEL
    astar[sentinel] = 0
    bstar[sentinel] = 0
    n_pairs = (size - 1) * (size - 1)
    n_trivial = int(np.count_nonzero(deltas == TRIVIAL_SENTINEL)) - (2 * size - 1)
    return ClosureSweep(
        n=mt.n, n_pairs=n_pairs, n_trivial=n_trivial, deltas=deltas, astar=astar, bstar=bstar
    )


MAX_CUT_VERTICES = 20


@njit(cache=True)
def _kk_cut_profile(adj, n, lut):
    size = 1 << n
    cross = np.zeros(size, dtype=np.int32)
    for mask in range(1, size):
        b = _trailing_zero(mask)
        rest = mask ^ (1 << b)
        row = adj[b]
        deg = lut[row & 0xFFFF] + lut[(row >> 16) & 0xFFFF]
        inter = row & rest
        pc = lut[inter & 0xFFFF] + lut[(inter >> 16) & 0xFFFF]
        cross[mask] = cross[rest] + deg - 2 * pc
    return cross


def _np_cut_profile(adj: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    cross = np.zeros(size, dtype=np.int32)
    deg = np.bitwise_count(adj).astype(np.int32)
    masks = np.arange(size, dtype=np.int64)
    for b in range(n - 1, -1, -1):
        step = 1 << b
        rest = masks[:: 2 * step]
        pc = np.bitwise_count(adj[b] & rest).astype(np.int32)
        cross[step :: 2 * step] = cross[:: 2 * step] + deg[b] - 2 * pc
    return cross


def cut_profile(adjacency) -> np.ndarray:
    """Edge-boundary size of every vertex subset, indexed by bitmask.

    ``adjacency`` holds one neighbour bitmask per vertex; entry ``mask`` of
    the result counts edges with exactly one endpoint inside ``mask``. The
    recurrence peels the lowest vertex off each mask, so the whole profile
    costs one pass over all 2^n subsets.
    """
    adj = np.asarray(adjacency, dtype=np.int64)
    if adj.ndim != 1:
        raise ValueError(f"adjacency must be a flat mask array, got shape {adj.shape}")
    n = adj.shape[0]
    if n > MAX_CUT_VERTICES:
        raise ValueError(f"cut profile capped at {MAX_CUT_VERTICES} vertices, got {n}")
    if HAS_NUMBA:
        return _kk_cut_profile(adj, n, _pop16().astype(np.int64))
    return _np_cut_profile(adj, n)
