"""Finite groups as multiplication tables: construction, subgroups, quotients."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "SubgroupFacts",
    "QuotientMap",
    "construct_group",
    "cyclic_group",
    "dihedral_group",
    "symmetric_group",
    "alternating_group",
    "quaternion_group",
    "dicyclic_group",
    "direct_product",
    "generated_subgroup",
    "subgroups",
    "subgroup_predicates",
    "subgroup_group",
    "quotient",
    "center",
]

DEFAULT_ORDER_CAP = 48


class FiniteGroup:
    """A finite group given by a complete multiplication table.

    Element 0 is always the identity; ``table[a, b]`` is the product a*b.
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        names: Optional[Sequence[str]] = None,
        check: bool = True,
    ) -> None:
        tbl = np.asarray(table, dtype=np.int64)
        if tbl.ndim != 2 or tbl.shape[0] != tbl.shape[1] or tbl.shape[0] == 0:
            raise ValueError(f"multiplication table must be square and nonempty, got shape {tbl.shape}")
        n = tbl.shape[0]
        if names is None:
            names = [f"e{i}" for i in range(n)]
        names = [str(s) for s in names]
        if len(names) != n:
            raise ValueError(f"expected {n} element names, got {len(names)}")

        tbl, names = _normalize_identity(tbl, names)
        if check:
            _validate_table(tbl)

        self.order: int = n
        self.table: np.ndarray = tbl
        self.identity: int = 0
        self.names: List[str] = names
        self.inverses: np.ndarray = _compute_inverses(tbl)
        self.table.flags.writeable = False
        self.inverses.flags.writeable = False
        self._is_abelian: Optional[bool] = None

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conj(self, a: int, x: int) -> int:
        """Return x^-1 * a * x."""
        xi = int(self.inverses[x])
        return int(self.table[self.table[xi, a], x])

    def element_order(self, a: int) -> int:
        k, y = 1, a
        while y != 0:
            y = int(self.table[y, a])
            k += 1
        return k

    @property
    def is_abelian(self) -> bool:
        if self._is_abelian is None:
            self._is_abelian = bool(np.array_equal(self.table, self.table.T))
        return self._is_abelian

    def elements(self) -> range:
        return range(self.order)

    def order_census(self) -> Dict[int, int]:
        """Map element order -> number of elements of that order."""
        census: Dict[int, int] = {}
        for a in range(self.order):
            k = self.element_order(a)
            census[k] = census.get(k, 0) + 1
        return census

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def _normalize_identity(tbl: np.ndarray, names: List[str]) -> Tuple[np.ndarray, List[str]]:
    """Relabel elements so the two-sided identity gets index 0."""
    n = tbl.shape[0]
    if tbl.min() < 0 or tbl.max() >= n:
        raise ValueError("table entries must be element indices in range")
    ident = None
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(tbl[e], idx) and np.array_equal(tbl[:, e], idx):
            ident = e
            break
    if ident is None:
        raise ValueError("table has no two-sided identity element")
    if ident == 0:
        return tbl, names
    perm = np.arange(n)
    perm[[0, ident]] = perm[[ident, 0]]
    inv_perm = perm  # a transposition is its own inverse
    new_tbl = inv_perm[tbl[np.ix_(perm, perm)]]
    new_names = [names[perm[i]] for i in range(n)]
    return np.ascontiguousarray(new_tbl), new_names


def _validate_table(tbl: np.ndarray) -> None:
    n = tbl.shape[0]
    idx = np.arange(n)
    for a in range(n):
        if not np.array_equal(np.sort(tbl[a]), idx):
            raise ValueError(f"row {a} of the multiplication table is not a permutation")
        if not np.array_equal(np.sort(tbl[:, a]), idx):
            raise ValueError(f"column {a} of the multiplication table is not a permutation")
    left = tbl[tbl, :]
    right = tbl[:, tbl]
    if not np.array_equal(left, right):
        bad = np.argwhere(left != right)[0]
        raise ValueError(f"table is not associative at triple {tuple(int(v) for v in bad)}")


def _compute_inverses(tbl: np.ndarray) -> np.ndarray:
    n = tbl.shape[0]
    inv = np.empty(n, dtype=np.int64)
    rows, cols = np.nonzero(tbl == 0)
    inv[rows] = cols
    return inv


# ---------------------------------------------------------------------------
# group families


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    names = ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    return FiniteGroup(table, names, check=False)


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: rotations r^i at 0..n-1, flips f*r^i at n..2n-1."""
    if n < 1:
        raise ValueError(f"dihedral parameter must be positive, got {n}")
    order = 2 * n
    table = np.empty((order, order), dtype=np.int64)
    for s1, i1, s2, i2 in itertools.product((0, 1), range(n), (0, 1), range(n)):
        # f^s1 r^i1 * f^s2 r^i2 = f^(s1+s2) r^(i2 + i1 if s2 even else i2 - i1)
        s = (s1 + s2) % 2
        i = (i2 + i1) % n if s2 == 0 else (i2 - i1) % n
        table[s1 * n + i1, s2 * n + i2] = s * n + i
    names = [_power_name("r", i) for i in range(n)] + [_flip_name(i) for i in range(n)]
    return FiniteGroup(table, names, check=False)


def _power_name(sym: str, i: int) -> str:
    if i == 0:
        return "1"
    if i == 1:
        return sym
    return f"{sym}{i}"


def _flip_name(i: int) -> str:
    if i == 0:
        return "f"
    if i == 1:
        return "fr"
    return f"fr{i}"


def _perm_group(perms: List[Tuple[int, ...]]) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    order = len(perms)
    table = np.empty((order, order), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[tuple(p[q[k]] for k in range(len(p)))]
    names = [_cycle_name(p) for p in perms]
    return FiniteGroup(table, names, check=False)


def _cycle_name(p: Tuple[int, ...]) -> str:
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        parts.append("(" + "".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "e"


def _perm_sign(p: Tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def symmetric_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise ValueError(f"symmetric group supported for degree 1..5, got {n}")
    return _perm_group([tuple(p) for p in itertools.permutations(range(n))])


def alternating_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise ValueError(f"alternating group supported for degree 1..5, got {n}")
    perms = [tuple(p) for p in itertools.permutations(range(n)) if _perm_sign(tuple(p)) == 1]
    return _perm_group(perms)


def dicyclic_group(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n: a of order 2n, b^2 = a^n, b^-1 a b = a^-1."""
    if n < 1:
        raise ValueError(f"dicyclic parameter must be positive, got {n}")
    m = 2 * n
    order = 4 * n
    table = np.empty((order, order), dtype=np.int64)
    for s1, i1, s2, i2 in itertools.product((0, 1), range(m), (0, 1), range(m)):
        if s2 == 0:
            s, i = s1, ((i1 + i2) % m if s1 == 0 else (i1 - i2) % m)
        elif s1 == 0:
            s, i = 1, (i1 + i2) % m
        else:
            s, i = 0, (i1 - i2 + n) % m
        table[s1 * m + i1, s2 * m + i2] = s * m + i
    names = [_power_name("a", i) for i in range(m)] + [_bword_name(i) for i in range(m)]
    return FiniteGroup(table, names, check=False)


def _bword_name(i: int) -> str:
    if i == 0:
        return "b"
    if i == 1:
        return "ab"
    return f"a{i}b"


def quaternion_group() -> FiniteGroup:
    return dicyclic_group(2)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    order = g.order * h.order
    gi, hi = np.divmod(np.arange(order), h.order)
    table = g.table[np.ix_(gi, gi)] * h.order + h.table[np.ix_(hi, hi)]
    names = [_pair_name(g.names[a], h.names[b]) for a, b in zip(gi, hi)]
    return FiniteGroup(table, names, check=False)


def _pair_name(na: str, nb: str) -> str:
    return f"({na},{nb})"


# ---------------------------------------------------------------------------
# descriptor parsing

_FAMILY_RE = re.compile(r"^(DIC|[CDSAQ])(\d+)$")

GroupSpec = Union[str, dict, FiniteGroup]


def construct_group(spec: GroupSpec) -> FiniteGroup:
    """Build a group from a descriptor.

    Accepts family strings like ``"C12"``, ``"D6"`` (order 12), ``"S4"``,
    ``"A5"``, ``"Q8"``, ``"Dic3"``, products joined with ``x`` (``"C2xS4"``),
    an explicit ``{"order", "table", "names"}`` mapping, or a FiniteGroup
    (returned as is).
    """
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, dict):
        return _group_from_mapping(spec)
    if not isinstance(spec, str):
        raise ValueError(f"unsupported group descriptor type: {type(spec).__name__}")
    text = spec.strip().replace(" ", "")
    if not text:
        raise ValueError("empty group descriptor")
    parts = re.split("[xX]", text)
    groups = [_group_from_token(tok) for tok in parts]
    result = groups[0]
    for extra in groups[1:]:
        result = direct_product(result, extra)
    return result


def _group_from_token(token: str) -> FiniteGroup:
    m = _FAMILY_RE.match(token.upper())
    if m is None:
        raise ValueError(f"unrecognized group descriptor token: {token!r}")
    family, n = m.group(1), int(m.group(2))
    if family == "C":
        return cyclic_group(n)
    if family == "D":
        return dihedral_group(n)
    if family == "S":
        return symmetric_group(n)
    if family == "A":
        return alternating_group(n)
    if family == "DIC":
        return dicyclic_group(n)
    if n != 8:
        raise ValueError(f"quaternion descriptor must be Q8, got {token!r}")
    return quaternion_group()


def _group_from_mapping(spec: dict) -> FiniteGroup:
    if "table" not in spec:
        raise ValueError("explicit group descriptor needs a 'table' entry")
    table = spec["table"]
    names = spec.get("names")
    group = FiniteGroup(table, names, check=True)
    declared = spec.get("order")
    if declared is not None and int(declared) != group.order:
        raise ValueError(f"declared order {declared} does not match table size {group.order}")
    return group


# ---------------------------------------------------------------------------
# subgroups


@dataclass(frozen=True)
class Subgroup:
    """A validated subgroup, stored as a sorted tuple of element indices."""

    elements: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def subgroup_from_elements(group: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    """Validate closure, identity, inverses, and Lagrange; return the Subgroup."""
    elems = sorted(set(int(x) for x in elems))
    if not elems or elems[0] != 0:
        raise ValueError("a subgroup must contain the identity (element 0)")
    eset = set(elems)
    for a in elems:
        if int(group.inverses[a]) not in eset:
            raise ValueError(f"subgroup candidate not closed under inverse at element {a}")
        for b in elems:
            if int(group.table[a, b]) not in eset:
                raise ValueError(f"subgroup candidate not closed under product at ({a},{b})")
    if group.order % len(elems) != 0:
        raise ValueError(f"subgroup size {len(elems)} does not divide group order {group.order}")
    return Subgroup(tuple(elems))


def generated_subgroup(group: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """Closure of the generators under products; always contains the identity.

    In a finite group closure under products alone suffices, since inverses
    are positive powers.
    """
    gens = sorted(set(int(x) for x in generators) | {0})
    current = set(gens)
    frontier = list(gens)
    while frontier:
        a = frontier.pop()
        for b in gens:
            p = int(group.table[a, b])
            if p not in current:
                current.add(p)
                frontier.append(p)
    return Subgroup(tuple(sorted(current)))


def subgroups(group: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> List[Subgroup]:
    """All subgroups, each exactly once, sorted by order then elementwise.

    Seeds with every cyclic subgroup and extends each known subgroup by one
    extra generator until no new subgroup appears.
    """
    if group.order > cap:
        raise ValueError(f"subgroup enumeration capped at order {cap}, got {group.order}")
    found: Dict[Tuple[int, ...], Subgroup] = {}
    trivial = Subgroup((0,))
    found[trivial.elements] = trivial
    frontier = [trivial]
    for x in range(1, group.order):
        sub = generated_subgroup(group, [x])
        if sub.elements not in found:
            found[sub.elements] = sub
            frontier.append(sub)
    while frontier:
        base = frontier.pop()
        for x in range(1, group.order):
            if x in base:
                continue
            sub = generated_subgroup(group, list(base.elements) + [x])
            if sub.elements not in found:
                found[sub.elements] = sub
                frontier.append(sub)
    return sorted(found.values(), key=lambda s: (s.order, s.elements))


@dataclass(frozen=True)
class SubgroupFacts:
    """Conjugation and coset facts for one subgroup and one conjugating element."""

    is_normal: bool
    conjugate: Subgroup
    left_cosets: Tuple[Tuple[int, ...], ...]
    right_cosets: Tuple[Tuple[int, ...], ...]


def conjugate_subgroup(group: FiniteGroup, sub: Subgroup, x: int) -> Subgroup:
    xi = int(group.inverses[x])
    elems = sorted(int(group.table[group.table[xi, h], x]) for h in sub.elements)
    return Subgroup(tuple(elems))


def is_normal(group: FiniteGroup, sub: Subgroup) -> bool:
    return all(conjugate_subgroup(group, sub, x).elements == sub.elements for x in range(group.order))


def left_cosets(group: FiniteGroup, sub: Subgroup) -> Tuple[Tuple[int, ...], ...]:
    """Partition of the group into left cosets g*H, each sorted, listed by least element."""
    seen = [False] * group.order
    blocks = []
    for g in range(group.order):
        if seen[g]:
            continue
        block = tuple(sorted(int(group.table[g, h]) for h in sub.elements))
        for y in block:
            seen[y] = True
        blocks.append(block)
    return tuple(blocks)


def right_cosets(group: FiniteGroup, sub: Subgroup) -> Tuple[Tuple[int, ...], ...]:
    seen = [False] * group.order
    blocks = []
    for g in range(group.order):
        if seen[g]:
            continue
        block = tuple(sorted(int(group.table[h, g]) for h in sub.elements))
        for y in block:
            seen[y] = True
        blocks.append(block)
    return tuple(blocks)


def subgroup_predicates(group: FiniteGroup, sub: Subgroup, x: int) -> SubgroupFacts:
    return SubgroupFacts(
        is_normal=is_normal(group, sub),
        conjugate=conjugate_subgroup(group, sub, x),
        left_cosets=left_cosets(group, sub),
        right_cosets=right_cosets(group, sub),
    )


def center(group: FiniteGroup) -> Subgroup:
    elems = [
        z
        for z in range(group.order)
        if all(group.table[z, g] == group.table[g, z] for g in range(group.order))
    ]
    return Subgroup(tuple(elems))


def subgroup_group(group: FiniteGroup, sub: Subgroup) -> Tuple[FiniteGroup, Tuple[int, ...]]:
    """Realize a subgroup as a standalone FiniteGroup.

    Returns the child group together with the tuple mapping each child index
    to its parent element.  Child index 0 is the parent identity because the
    subgroup elements are stored sorted.  Parent element names are reused.
    """
    elems = sub.elements
    index = {g: i for i, g in enumerate(elems)}
    k = len(elems)
    table = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            table[i, j] = index[int(group.table[a, b])]
    names = [group.names[g] for g in elems]
    child = FiniteGroup(table, names, check=False)
    return child, elems


# ---------------------------------------------------------------------------
# quotients


@dataclass(frozen=True)
class QuotientMap:
    """Canonical projection onto the quotient by a normal subgroup."""

    kernel: Subgroup
    image: FiniteGroup
    projection: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.projection[x]


def quotient(group: FiniteGroup, sub: Subgroup) -> QuotientMap:
    if not is_normal(group, sub):
        raise ValueError("quotient requires a normal subgroup")
    blocks = left_cosets(group, sub)
    proj = [0] * group.order
    for i, block in enumerate(blocks):
        for y in block:
            proj[y] = i
    k = len(blocks)
    table = np.empty((k, k), dtype=np.int64)
    reps = [block[0] for block in blocks]
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            table[i, j] = proj[int(group.table[a, b])]
    names = [f"[{group.names[r]}]" for r in reps]
    image = FiniteGroup(table, names, check=True)
    return QuotientMap(kernel=sub, image=image, projection=tuple(proj))
