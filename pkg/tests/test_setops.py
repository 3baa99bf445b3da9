"""Product sets, deficiency, trios, closure, similarity, and kernel cross-checks."""

from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from triolab import _kernels
from triolab.groups import Subgroup, construct_group, cyclic_group, dihedral_group
from triolab.setops import (
    GroupSubset,
    SubsetTrio,
    bits_iter,
    conj_stable,
    coset_envelope,
    deficiency_pair,
    inverse_mask,
    mask_of,
    product_mask,
    product_set,
    rep_min,
    similarity_canonical,
    similarity_orbit,
    stabilizers,
    trio_close,
    trio_from_pair,
)

C5 = cyclic_group(5)
C6 = cyclic_group(6)
C7 = cyclic_group(7)


def _sub(group, elems):
    return GroupSubset.from_elements(group, elems)


def _product_oracle(group, aset, bset):
    """Pairwise products by explicit double loop, no bitset code."""
    return sorted({int(group.table[a, b]) for a in aset for b in bset})


def _trio_valid_oracle(group, aset, bset, cset):
    for a in aset:
        for b in bset:
            for c in cset:
                if group.mul(group.mul(a, b), c) == 0:
                    return False
    return True


def _brute_maximal_oracle(trio):
    """No single element can be added to any of the three sets."""
    g = trio.group
    sets = [trio.a.elements(), trio.b.elements(), trio.c.elements()]
    for i in range(3):
        for x in range(g.order):
            if x in sets[i]:
                continue
            grown = [list(s) for s in sets]
            grown[i].append(x)
            if _trio_valid_oracle(g, *grown):
                return False
    return True


def test_product_set_examples():
    assert product_set(_sub(C5, [0, 1]), _sub(C5, [0, 1])).elements() == [0, 1, 2]
    got = product_set(_sub(C6, [0, 3]), _sub(C6, [0, 1, 3, 4]))
    assert got.elements() == _product_oracle(C6, [0, 3], [0, 1, 3, 4]) == [0, 1, 3, 4]
    assert product_set(_sub(C6, [0, 3]), _sub(C6, [])).is_empty


def test_product_set_rejects_mixed_groups():
    with pytest.raises(ValueError):
        product_set(_sub(C5, [0]), _sub(C6, [0]))


def test_deficiency_pair_examples():
    assert deficiency_pair(_sub(C5, [0, 1]), _sub(C5, [0, 1])) == 1
    assert deficiency_pair(_sub(C6, [0, 3]), _sub(C6, [0, 1, 3, 4])) == 2
    prod = _product_oracle(C7, [0, 1, 2], [0, 2, 4])
    assert deficiency_pair(_sub(C7, [0, 1, 2]), _sub(C7, [0, 2, 4])) == 3 + 3 - len(prod)
    with pytest.raises(ValueError):
        deficiency_pair(_sub(C5, []), _sub(C5, [0]))


def test_trio_from_pair_examples():
    t = trio_from_pair(_sub(C5, [0, 1, 2]), _sub(C5, [0, 1]))
    assert t.c.elements() == [1]
    assert t.deficiency == 1
    t2 = trio_from_pair(_sub(C6, [0, 3]), _sub(C6, [0, 1, 3, 4]))
    assert t2.c.elements() == [1, 4]
    assert t2.deficiency == 2
    t3 = trio_from_pair(_sub(C5, list(range(5))), _sub(C5, [0]))
    assert t3.c.is_empty
    assert not t3.is_nontrivial


def test_trio_rejects_identity_product():
    with pytest.raises(ValueError):
        SubsetTrio(_sub(C5, [0]), _sub(C5, [0]), _sub(C5, [0]))


def test_trio_deficiency_matches_pair():
    rng = random.Random(20240817)
    for _ in range(200):
        a = [x for x in range(6) if rng.random() < 0.5] or [0]
        b = [x for x in range(6) if rng.random() < 0.5] or [1]
        t = trio_from_pair(_sub(C6, a), _sub(C6, b))
        assert t.deficiency == len(a) + len(b) - len(_product_oracle(C6, a, b))
        assert t.deficiency == t.a.size + t.b.size + t.c.size - 6


def test_trio_close_fixes_maximal():
    t = trio_from_pair(_sub(C6, [0, 3]), _sub(C6, [0, 1, 3, 4]))
    closed = trio_close(t)
    assert closed.bit_triple() == t.bit_triple()
    assert t.is_maximal
    assert _brute_maximal_oracle(t)


def test_trio_close_grows_seed():
    seed = trio_from_pair(_sub(C5, [0]), _sub(C5, [0]))
    closed = trio_close(seed)
    assert seed.a.issubset(closed.a) and seed.b.issubset(closed.b) and seed.c.issubset(closed.c)
    assert closed.is_maximal
    assert _brute_maximal_oracle(closed)
    # the product is pinned once C is completed
    assert product_set(closed.a, closed.b).bits == product_set(seed.a, seed.b).bits


def test_trio_close_alternate_order_still_maximal():
    seed = trio_from_pair(_sub(C6, [0, 1]), _sub(C6, [0, 2]))
    for order in (("c", "a", "b"), ("a", "b", "c"), ("b", "c", "a")):
        closed = trio_close(seed, order=order)
        assert closed.is_maximal
        assert _brute_maximal_oracle(closed)
        assert seed.a.issubset(closed.a)
    with pytest.raises(ValueError):
        trio_close(seed, order=("a", "a", "b"))


def test_similarity_rotation_same_canonical():
    t = trio_from_pair(_sub(C6, [0, 3]), _sub(C6, [0, 1, 3, 4]))
    rot = SubsetTrio(t.b, t.c, t.a)
    assert similarity_canonical(t).bit_triple() == similarity_canonical(rot).bit_triple()


def test_similarity_shift_same_canonical():
    t = trio_from_pair(_sub(C6, [0, 3]), _sub(C6, [0, 1, 3, 4]))
    g = 2
    shifted = SubsetTrio(
        t.a.right_translate(g), t.b.left_translate(C6.inv(g)), t.c
    )
    assert similarity_canonical(t).bit_triple() == similarity_canonical(shifted).bit_triple()


def test_similarity_orbit_preserves_deficiency_and_maximality():
    for group, a, b in (
        (cyclic_group(8), [0, 1], [0, 1, 2]),
        (dihedral_group(4), [0, 4], [0, 1]),
    ):
        t = trio_close(trio_from_pair(_sub(group, a), _sub(group, b)))
        orbit = similarity_orbit(t)
        assert all(o.deficiency == t.deficiency for o in orbit)
        assert all(o.is_maximal for o in orbit)


def test_different_deficiency_different_canonical():
    t1 = trio_from_pair(_sub(C6, [0, 3]), _sub(C6, [0, 1, 3, 4]))
    t2 = trio_from_pair(_sub(C6, [0, 1]), _sub(C6, [0, 1]))
    assert t1.deficiency != t2.deficiency
    assert similarity_canonical(t1).bit_triple() != similarity_canonical(t2).bit_triple()


def test_uncrossing_identity_sampled():
    rng = random.Random(11)
    for group in (cyclic_group(8), dihedral_group(4)):
        n = group.order
        checked = 0
        while checked < 300:
            a = [x for x in range(n) if rng.random() < 0.4]
            b = [x for x in range(n) if rng.random() < 0.4]
            if not a or not b:
                continue
            t = trio_from_pair(_sub(group, a), _sub(group, b))
            if t.c.is_empty:
                continue
            g = rng.randrange(1, n)
            a2 = t.a.right_translate(g)
            b2 = t.b.left_translate(group.inv(g))
            t2 = SubsetTrio(a2, b2, t.c)
            lo = SubsetTrio(t.a.intersect(a2), t.b.union(b2), t.c)
            hi = SubsetTrio(t.a.union(a2), t.b.intersect(b2), t.c)
            assert lo.deficiency + hi.deficiency == t.deficiency + t2.deficiency
            checked += 1


def test_stabilizers_examples():
    left, right = stabilizers(_sub(C6, [0, 1, 3, 4]))
    assert left.elements == (0, 3)
    full = _sub(C6, range(6))
    sl, sr = stabilizers(full)
    assert sl.order == 6 and sr.order == 6
    d6 = dihedral_group(6)
    prog = product_set(_sub(d6, [0, 1]), _sub(d6, [0, 6]))  # {1,r}{1,f}
    sl, sr = stabilizers(prog)
    assert sr.elements == (0, 6)
    assert sl.elements == (0, 11)  # {1, f r^-1}


def test_rep_min_examples():
    assert rep_min(_sub(C6, [0, 1]), _sub(C6, [0, 1])) == 1
    assert rep_min(_sub(C6, [2]), _sub(C6, [0, 1, 3])) == 1
    a, b = _sub(C5, [0, 1, 2]), _sub(C5, [0, 1])
    assert rep_min(a, b) >= deficiency_pair(a, b) == 1


def test_rep_cor_exhaustive_order_6():
    for spec in ("C6", "S3"):
        group = construct_group(spec)
        n = group.order
        for amask in range(1, 1 << n):
            a = _sub(group, bits_iter(amask))
            for bmask in range(1, 1 << n):
                b = _sub(group, bits_iter(bmask))
                assert deficiency_pair(a, b) <= rep_min(a, b)


def test_coset_envelope_examples():
    h, x = coset_envelope(_sub(C6, [2]))
    assert h.order == 1 and x == 2
    h, x = coset_envelope(_sub(C6, [0, 2]))
    assert h.elements == (0, 2, 4) and x == 0
    h, _ = coset_envelope(_sub(C6, [0, 1]))
    assert h.order == 6
    d4 = dihedral_group(4)
    h, x = coset_envelope(_sub(d4, [1, 4]))  # {r, f}: f^-1 r = ...
    for y in (1, 4):
        assert y in {int(d4.table[x, k]) for k in h.elements}


def test_conj_stable_examples():
    assert conj_stable(_sub(C6, [0, 1]), Subgroup((0,)))
    assert conj_stable(_sub(C6, [0, 1, 3, 4]), Subgroup((0, 3)))
    assert not conj_stable(_sub(C6, [0, 1]), Subgroup((0, 3)))
    d3 = dihedral_group(3)
    flips = _sub(d3, [3, 4, 5])
    assert conj_stable(flips, Subgroup((0,)))


# ---------------------------------------------------------------------------
# kernel cross-checks


def _pairs_oracle(group):
    """Python closure of every nonempty pair, for comparison with the kernels."""
    n = group.order
    out = {}
    for amask in range(1, 1 << n):
        a = GroupSubset(group, amask)
        for bmask in range(1, 1 << n):
            t = trio_from_pair(a, GroupSubset(group, bmask))
            if t.c.is_empty:
                out[(amask, bmask)] = None
            else:
                closed = trio_close(t)
                out[(amask, bmask)] = closed
    return out


def test_closure_sweep_matches_python_oracle():
    group = cyclic_group(6)
    sweep = _kernels.closure_sweep(group.table)
    oracle = _pairs_oracle(group)
    size = 1 << group.order
    for (amask, bmask), closed in oracle.items():
        idx = (bmask << group.order) + amask
        if closed is None:
            assert sweep.deltas[idx] == _kernels.TRIVIAL_SENTINEL
        else:
            assert int(sweep.deltas[idx]) == closed.deficiency
            assert int(sweep.astar[idx]) == closed.a.bits
            assert int(sweep.bstar[idx]) == closed.b.bits
    assert sweep.n_pairs == (size - 1) ** 2


def test_closure_sweep_nonabelian_matches_oracle():
    group = dihedral_group(3)
    sweep = _kernels.closure_sweep(group.table)
    oracle = _pairs_oracle(group)
    for (amask, bmask), closed in oracle.items():
        idx = (bmask << group.order) + amask
        if closed is None:
            assert sweep.deltas[idx] == _kernels.TRIVIAL_SENTINEL
        else:
            assert int(sweep.deltas[idx]) == closed.deficiency
            assert int(sweep.astar[idx]) == closed.a.bits
            assert int(sweep.bstar[idx]) == closed.b.bits


def test_backends_agree_small():
    for spec in ("C5", "S3", "C2xC2"):
        group = construct_group(spec)
        mt = _kernels.mask_tables(group.table)
        assert _kernels.cd_violations(group.table) == _kernels._np_cd_violations(mt)
        assert _kernels.kneser_violations(group.table) == _kernels._np_kneser_violations(mt)
        assert _kernels.repmin_violations(group.table) == _kernels._np_repmin_violations(mt)
        size = 1 << group.order
        deltas = np.zeros(size * size, dtype=np.int8)
        astar = np.zeros(size * size, dtype=np.uint16)
        bstar = np.zeros(size * size, dtype=np.uint16)
        _kernels._np_closure_sweep(mt, deltas, astar, bstar)
        deltas[:size] = _kernels.TRIVIAL_SENTINEL
        deltas[0::size] = _kernels.TRIVIAL_SENTINEL
        sentinel = deltas == _kernels.TRIVIAL_SENTINEL
        astar[sentinel] = 0
        bstar[sentinel] = 0
        sweep = _kernels.closure_sweep(group.table)
        assert np.array_equal(sweep.deltas, deltas)
        assert np.array_equal(sweep.astar, astar)
        assert np.array_equal(sweep.bstar, bstar)


def test_cd_violations_oracle_c5():
    group = C5
    count = 0
    for amask in range(1, 32):
        aset = list(bits_iter(amask))
        for bmask in range(1, 32):
            bset = list(bits_iter(bmask))
            prod = _product_oracle(group, aset, bset)
            if len(prod) < min(5, len(aset) + len(bset) - 1):
                count += 1
    assert _kernels.cd_violations(group.table) == count == 0


def test_kneser_zero_violations_small_abelian():
    for spec in ("C4", "C6", "C2xC2"):
        assert _kernels.kneser_violations(construct_group(spec).table) == 0


def test_tight_pair_reduction_order_8():
    # closure preserves the product, and the closed pair dominates within budget
    for spec in ("C8", "D4"):
        group = construct_group(spec)
        n = group.order
        sweep = _kernels.closure_sweep(group.table)
        rng = random.Random(7)
        pairs = [(a, b) for a in range(1, 1 << n) for b in range(1, 1 << n)]
        for amask, bmask in rng.sample(pairs, 4000):
            idx = (bmask << n) + amask
            if sweep.deltas[idx] == _kernels.TRIVIAL_SENTINEL:
                continue
            astar, bstar = int(sweep.astar[idx]), int(sweep.bstar[idx])
            assert amask & ~astar == 0 and bmask & ~bstar == 0
            assert product_mask(group, amask, bmask) == product_mask(group, astar, bstar)
            delta_star = int(sweep.deltas[idx])
            gaps = bin(astar ^ amask).count("1") + bin(bstar ^ bmask).count("1")
            pair_delta = (
                bin(amask).count("1") + bin(bmask).count("1")
                - bin(product_mask(group, amask, bmask)).count("1")
            )
            if pair_delta >= 1:
                assert gaps < delta_star
