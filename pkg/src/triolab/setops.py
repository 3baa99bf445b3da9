"""Product sets, deficiency, subset trios, closure, similarity, stabilizers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from triolab.groups import FiniteGroup, Subgroup, generated_subgroup, subgroups

__all__ = [
    "GroupSubset",
    "SubsetTrio",
    "bits_iter",
    "mask_of",
    "product_mask",
    "inverse_mask",
    "product_set",
    "deficiency_pair",
    "trio_deficiency",
    "trio_from_pair",
    "trio_close",
    "similarity_neighbors",
    "similarity_orbit",
    "similarity_canonical",
    "similarity_key",
    "stabilizers",
    "rep_min",
    "coset_envelope",
    "conj_stable",
]

EXACT_ORBIT_CAP = 12


def bits_iter(mask: int) -> Iterator[int]:
    while mask:
        low = mask & (-mask)
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def product_mask(group: FiniteGroup, amask: int, bmask: int) -> int:
    table = group.table
    out = 0
    for a in bits_iter(amask):
        row = table[a]
        for b in bits_iter(bmask):
            out |= 1 << int(row[b])
    return out


def inverse_mask(group: FiniteGroup, mask: int) -> int:
    inv = group.inverses
    out = 0
    for x in bits_iter(mask):
        out |= 1 << int(inv[x])
    return out


def _left_translate(group: FiniteGroup, g: int, mask: int) -> int:
    row = group.table[g]
    out = 0
    for x in bits_iter(mask):
        out |= 1 << int(row[x])
    return out


def _right_translate(group: FiniteGroup, mask: int, g: int) -> int:
    col = group.table[:, g]
    out = 0
    for x in bits_iter(mask):
        out |= 1 << int(col[x])
    return out


@dataclass(frozen=True)
class GroupSubset:
    """A subset of a finite group stored as a bitset (element i at bit i)."""

    group: FiniteGroup
    bits: int

    @classmethod
    def from_elements(cls, group: FiniteGroup, elements: Iterable[int]) -> "GroupSubset":
        m = mask_of(elements)
        if m >> group.order:
            raise ValueError("subset contains indices outside the group")
        return cls(group, m)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def elements(self) -> List[int]:
        return list(bits_iter(self.bits))

    def __contains__(self, x: int) -> bool:
        return self.bits >> x & 1 == 1

    def __len__(self) -> int:
        return self.size

    def complement(self) -> "GroupSubset":
        full = (1 << self.group.order) - 1
        return GroupSubset(self.group, full ^ self.bits)

    def inverse(self) -> "GroupSubset":
        return GroupSubset(self.group, inverse_mask(self.group, self.bits))

    def left_translate(self, g: int) -> "GroupSubset":
        """g * A"""
        return GroupSubset(self.group, _left_translate(self.group, g, self.bits))

    def right_translate(self, g: int) -> "GroupSubset":
        """A * g"""
        return GroupSubset(self.group, _right_translate(self.group, self.bits, g))

    def union(self, other: "GroupSubset") -> "GroupSubset":
        _require_same_group(self, other)
        return GroupSubset(self.group, self.bits | other.bits)

    def intersect(self, other: "GroupSubset") -> "GroupSubset":
        _require_same_group(self, other)
        return GroupSubset(self.group, self.bits & other.bits)

    def difference(self, other: "GroupSubset") -> "GroupSubset":
        _require_same_group(self, other)
        return GroupSubset(self.group, self.bits & ~other.bits)

    def issubset(self, other: "GroupSubset") -> bool:
        return self.bits & ~other.bits == 0

    def to_json(self) -> dict:
        return {"set": self.elements()}

    def __repr__(self) -> str:
        return f"GroupSubset({self.elements()})"


def _require_same_group(a: GroupSubset, b: GroupSubset) -> None:
    if a.group is not b.group:
        raise ValueError("subsets belong to different groups")


def product_set(a: GroupSubset, b: GroupSubset) -> GroupSubset:
    """{xy : x in A, y in B}; empty if either input is empty."""
    _require_same_group(a, b)
    return GroupSubset(a.group, product_mask(a.group, a.bits, b.bits))


def deficiency_pair(a: GroupSubset, b: GroupSubset) -> int:
    """|A| + |B| - |AB|; positive exactly when the pair is critical."""
    if a.is_empty or b.is_empty:
        raise ValueError("pair deficiency requires nonempty sets")
    return a.size + b.size - product_set(a, b).size


def trio_deficiency(group: FiniteGroup, abits: int, bbits: int, cbits: int) -> int:
    """Sizes of the two smaller sets minus the complement size of a largest set."""
    sizes = sorted((abits.bit_count(), bbits.bit_count(), cbits.bit_count()))
    return sizes[0] + sizes[1] - (group.order - sizes[2])


class SubsetTrio:
    """Three subsets with no product abc equal to the identity."""

    __slots__ = ("group", "a", "b", "c", "deficiency", "_maximal")

    def __init__(self, a: GroupSubset, b: GroupSubset, c: GroupSubset) -> None:
        _require_same_group(a, b)
        _require_same_group(a, c)
        ab = product_mask(a.group, a.bits, b.bits)
        if inverse_mask(a.group, ab) & c.bits:
            raise ValueError("not a trio: some product abc equals the identity")
        self.group = a.group
        self.a = a
        self.b = b
        self.c = c
        self.deficiency = trio_deficiency(a.group, a.bits, b.bits, c.bits)
        self._maximal: Optional[bool] = None

    @property
    def is_nontrivial(self) -> bool:
        return not (self.a.is_empty or self.b.is_empty or self.c.is_empty)

    @property
    def is_critical(self) -> bool:
        return self.deficiency > 0

    @property
    def is_maximal(self) -> bool:
        if self._maximal is None:
            g, full = self.group, (1 << self.group.order) - 1
            a, b, c = self.a.bits, self.b.bits, self.c.bits
            self._maximal = (
                c == full ^ inverse_mask(g, product_mask(g, a, b))
                and a == full ^ inverse_mask(g, product_mask(g, b, c))
                and b == full ^ inverse_mask(g, product_mask(g, c, a))
            )
        return self._maximal

    def bit_triple(self) -> Tuple[int, int, int]:
        return (self.a.bits, self.b.bits, self.c.bits)

    def to_json(self) -> dict:
        return {
            "a": self.a.elements(),
            "b": self.b.elements(),
            "c": self.c.elements(),
            "delta": self.deficiency,
        }

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubsetTrio)
            and self.group is other.group
            and self.bit_triple() == other.bit_triple()
        )

    def __hash__(self) -> int:
        return hash((id(self.group),) + self.bit_triple())

    def __repr__(self) -> str:
        return f"SubsetTrio(a={self.a.elements()}, b={self.b.elements()}, c={self.c.elements()}, delta={self.deficiency})"


def trio_from_pair(a: GroupSubset, b: GroupSubset) -> SubsetTrio:
    """Complete (A, B) with C = complement of (AB)^-1."""
    if a.is_empty or b.is_empty:
        raise ValueError("trio_from_pair requires nonempty sets")
    g = a.group
    full = (1 << g.order) - 1
    cbits = full ^ inverse_mask(g, product_mask(g, a.bits, b.bits))
    return SubsetTrio(a, b, GroupSubset(g, cbits))


def trio_close(trio: SubsetTrio, order: Sequence[str] = ("c", "a", "b")) -> SubsetTrio:
    """Grow the trio to a maximal one by cyclic complement-inverse updates.

    Each named set is replaced by the complement of the inverse of the
    product of the other two; sets only grow, so the fixpoint exists and
    satisfies all three maximality equations.
    """
    if sorted(order) != ["a", "b", "c"]:
        raise ValueError(f"update order must name each of a, b, c once, got {order!r}")
    g = trio.group
    full = (1 << g.order) - 1
    cur = {"a": trio.a.bits, "b": trio.b.bits, "c": trio.c.bits}
    while True:
        before = dict(cur)
        for name in order:
            if name == "a":
                cur["a"] = full ^ inverse_mask(g, product_mask(g, cur["b"], cur["c"]))
            elif name == "b":
                cur["b"] = full ^ inverse_mask(g, product_mask(g, cur["c"], cur["a"]))
            else:
                cur["c"] = full ^ inverse_mask(g, product_mask(g, cur["a"], cur["b"]))
        if cur == before:
            break
    out = SubsetTrio(
        GroupSubset(g, cur["a"]), GroupSubset(g, cur["b"]), GroupSubset(g, cur["c"])
    )
    out._maximal = True
    return out


# ---------------------------------------------------------------------------
# similarity


def _trio_bits_neighbors(group: FiniteGroup, t: Tuple[int, int, int]) -> List[Tuple[int, int, int]]:
    a, b, c = t
    ai = inverse_mask(group, a)
    bi = inverse_mask(group, b)
    ci = inverse_mask(group, c)
    out = [(b, c, a), (c, a, b), (ci, bi, ai), (bi, ai, ci), (ai, ci, bi)]
    for g in range(1, group.order):
        gi = int(group.inverses[g])
        out.append((_right_translate(group, a, g), _left_translate(group, gi, b), c))
        out.append((a, _right_translate(group, b, g), _left_translate(group, gi, c)))
        out.append((_left_translate(group, gi, a), b, _right_translate(group, c, g)))
    return out


def similarity_neighbors(trio: SubsetTrio) -> List[SubsetTrio]:
    g = trio.group
    return [
        SubsetTrio(GroupSubset(g, a), GroupSubset(g, b), GroupSubset(g, c))
        for a, b, c in _trio_bits_neighbors(g, trio.bit_triple())
    ]


def similarity_orbit_bits(group: FiniteGroup, start: Tuple[int, int, int]) -> set:
    """All bit-triples similar to the start, by breadth-first closure."""
    seen = {start}
    frontier = [start]
    while frontier:
        cur = frontier.pop()
        for nxt in _trio_bits_neighbors(group, cur):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def similarity_orbit(trio: SubsetTrio) -> List[SubsetTrio]:
    g = trio.group
    return [
        SubsetTrio(GroupSubset(g, a), GroupSubset(g, b), GroupSubset(g, c))
        for a, b, c in sorted(similarity_orbit_bits(g, trio.bit_triple()))
    ]


def similarity_canonical(trio: SubsetTrio, exact_cap: int = EXACT_ORBIT_CAP) -> SubsetTrio:
    """Lexicographically least trio in the similarity orbit (exact BFS)."""
    g = trio.group
    if g.order > exact_cap:
        raise ValueError(
            f"exact orbit canonicalization capped at order {exact_cap}, got {g.order}; "
            "use similarity_key for heuristic dedup"
        )
    a, b, c = min(similarity_orbit_bits(g, trio.bit_triple()))
    out = SubsetTrio(GroupSubset(g, a), GroupSubset(g, b), GroupSubset(g, c))
    if trio._maximal is not None:
        out._maximal = trio._maximal
    return out


def similarity_key(trio: SubsetTrio, exact_cap: int = EXACT_ORBIT_CAP) -> tuple:
    """Orbit key: exact canonical bits at small order, invariant hash above.

    The heuristic key can conflate distinct orbits; it is labelled as such so
    callers never mistake it for an exact dedup.
    """
    g = trio.group
    if g.order <= exact_cap:
        return ("exact",) + min(similarity_orbit_bits(g, trio.bit_triple()))
    sizes = tuple(sorted((trio.a.size, trio.b.size, trio.c.size)))
    stab_orders = []
    for part in (trio.a, trio.b, trio.c):
        if part.is_empty:
            stab_orders.extend((g.order, g.order))
        else:
            sl, sr = stabilizers(part)
            stab_orders.extend((sl.order, sr.order))
    return ("heuristic", sizes, trio.deficiency, tuple(sorted(stab_orders)))


# ---------------------------------------------------------------------------
# stabilizers and structure helpers


def stabilizers(a: GroupSubset) -> Tuple[Subgroup, Subgroup]:
    """(left, right) stabilizer subgroups {g : gA = A} and {g : Ag = A}."""
    if a.is_empty:
        raise ValueError("stabilizers of an empty set are the whole group by convention; rejected")
    g = a.group
    left = [x for x in range(g.order) if _left_translate(g, x, a.bits) == a.bits]
    right = [x for x in range(g.order) if _right_translate(g, a.bits, x) == a.bits]
    return Subgroup(tuple(left)), Subgroup(tuple(right))


def rep_min(a: GroupSubset, b: GroupSubset) -> int:
    """Minimum number of factorizations z = xy over z in AB."""
    if a.is_empty or b.is_empty:
        raise ValueError("rep_min requires nonempty sets")
    g = a.group
    counts = [0] * g.order
    for x in bits_iter(a.bits):
        row = g.table[x]
        for y in bits_iter(b.bits):
            counts[int(row[y])] += 1
    return min(c for c in counts if c > 0)


def coset_envelope(a: GroupSubset) -> Tuple[Subgroup, int]:
    """Minimal subgroup H and witness x with A contained in xH."""
    if a.is_empty:
        raise ValueError("coset envelope requires a nonempty set")
    g = a.group
    x = a.elements()[0]
    xi = int(g.inverses[x])
    shifted = _left_translate(g, xi, a.bits)
    sub = generated_subgroup(g, bits_iter(shifted))
    return sub, x


def conj_stable(a: GroupSubset, sub: Subgroup) -> bool:
    """Every y in A absorbs some conjugate of the subgroup: y(x^-1 H x) in A."""
    g = a.group
    conj_masks = set()
    hmask = mask_of(sub.elements)
    for x in range(g.order):
        xi = int(g.inverses[x])
        conj_masks.add(_right_translate(g, _left_translate(g, xi, hmask), x))
    for y in bits_iter(a.bits):
        if not any(_left_translate(g, y, k) & ~a.bits == 0 for k in conj_masks):
            return False
    return True
