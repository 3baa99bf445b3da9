"""Incidence geometries carrying a transitive group action on every part.

A chorus is a rank n incidence structure together with a group acting on it,
transitively on each of the n ground sets.  Cayley choruses realize these
concretely from a symmetric matrix of subsets, and every chorus collapses
onto one via basepoint realization.  Rank 2 views carry exact integer
weights, rank 3 views carry a deficiency, and the cross calculus (uncross,
purify, block search) moves deficiency between the two pictures.

Ground sets are index ranges and point subsets are int bitmasks throughout,
so all weight arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .groups import FiniteGroup, generated_subgroup, subgroups
from .setops import GroupSubset, _left_translate, bits_iter, inverse_mask, mask_of, product_mask

__all__ = [
    "CollisionError",
    "Cross",
    "DuetView",
    "DuetWeights",
    "HamidouneBlock",
    "IncidenceChorus",
    "SabidussiRealization",
    "TrioView",
    "associated_trio",
    "block_closure",
    "blocks_of",
    "cayley_chorus",
    "cayley_duet",
    "cayley_trio",
    "cross_from_point",
    "cross_from_sets",
    "hamidoune_block",
    "purify",
    "sabidussi_realize",
    "satisfies_olson_bound",
    "trio_deficiency_inc",
    "trio_is_maximal",
    "uncross",
    "weak_purify",
    "weights",
]

MAX_SWEEP_POINTS = 16


def _permute_mask(mask: int, perm: Sequence[int]) -> int:
    """Push a point bitmask through a point permutation."""
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return out


def _subset_bits(group: FiniteGroup, value: Union[GroupSubset, int, Iterable[int]]) -> int:
    if isinstance(value, GroupSubset):
        if value.group is not group:
            raise ValueError("subset belongs to a different group")
        bits = value.bits
    elif isinstance(value, int):
        bits = value
    else:
        bits = mask_of(value)
    if bits >> group.order:
        raise ValueError("subset contains indices outside the group")
    return bits


class CollisionError(ValueError):
    """Three mutually incident points where a triangle free structure is required."""

    def __init__(self, witness: Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int]]) -> None:
        self.witness = witness
        super().__init__(f"collision between points {witness[0]}, {witness[1]}, {witness[2]}")


@dataclass(frozen=True)
class IncidenceChorus:
    """Rank n incidence geometry with a group acting transitively on each part.

    adjacency[i][j][p] is the bitmask of points of part j incident with point
    p of part i (None on the diagonal).  action[g][i][p] is the image of
    point p of part i under group element g.  cayley_matrix is kept when the
    chorus was built from a subset matrix, and part_partition optionally
    groups the parts (with same group sides required to be empty).
    """

    group: FiniteGroup
    sizes: Tuple[int, ...]
    adjacency: Tuple[Tuple[Optional[Tuple[int, ...]], ...], ...]
    action: Tuple[Tuple[Tuple[int, ...], ...], ...]
    cayley_matrix: Optional[Tuple[Tuple[GroupSubset, ...], ...]] = None
    part_partition: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __post_init__(self) -> None:
        n = len(self.sizes)
        if n == 0:
            raise ValueError("a chorus needs at least one ground set")
        if len(self.adjacency) != n or any(len(row) != n for row in self.adjacency):
            raise ValueError("adjacency must be an n by n table")
        if len(self.action) != self.group.order:
            raise ValueError("action must assign a permutation tuple to every group element")

    @classmethod
    def assemble(
        cls,
        group: FiniteGroup,
        sizes: Sequence[int],
        incidences: Iterable[Tuple[int, int, int, int]],
        action: Sequence[Sequence[Sequence[int]]],
        verify: bool = True,
        part_partition: Optional[Sequence[Sequence[int]]] = None,
    ) -> "IncidenceChorus":
        """Build a chorus from an incidence pair list and explicit action.

        incidences holds (i, p, j, q) entries meaning point p of part i is
        incident with point q of part j; both directions are filled in.
        action is indexed [group element][part][point].
        """
        n = len(sizes)
        rows: List[List[Optional[List[int]]]] = [
            [None if i == j else [0] * sizes[i] for j in range(n)] for i in range(n)
        ]
        for i, p, j, q in incidences:
            if i == j:
                raise ValueError("incidence within one ground set is not allowed")
            rows[i][j][p] |= 1 << q
            rows[j][i][q] |= 1 << p
        adjacency = tuple(
            tuple(None if cell is None else tuple(cell) for cell in row) for row in rows
        )
        packed = tuple(tuple(tuple(per_set) for per_set in action[g]) for g in range(group.order))
        partition = None if part_partition is None else tuple(tuple(part) for part in part_partition)
        chorus = cls(group, tuple(sizes), adjacency, packed, part_partition=partition)
        if verify:
            chorus.verify()
        return chorus

    @property
    def rank(self) -> int:
        return len(self.sizes)

    def point_weight(self, i: int) -> int:
        """Stabilizer order of any point of part i, always an exact divisor."""
        quot, rem = divmod(self.group.order, self.sizes[i])
        if rem:
            raise RuntimeError(f"group order {self.group.order} not divisible by part size {self.sizes[i]}")
        return quot

    def neighbors(self, i: int, p: int, j: int) -> int:
        row = self.adjacency[i][j]
        if row is None:
            raise ValueError("no incidence within one ground set")
        return row[p]

    def degree(self, i: int, j: int) -> int:
        return self.neighbors(i, 0, j).bit_count()

    def side(self, i: int, j: int) -> "DuetView":
        if i == j:
            raise ValueError("a side needs two distinct ground sets")
        return DuetView(self, i, j)

    def trio(self, i: int = 0, j: int = 1, k: int = 2) -> "TrioView":
        if len({i, j, k}) != 3:
            raise ValueError("a trio view needs three distinct ground sets")
        return TrioView(self, (i, j, k))

    def verify(self) -> None:
        """Full consistency check, raising ValueError on the first violation."""
        group = self.group
        n = self.rank
        for i in range(n):
            if self.sizes[i] <= 0:
                raise ValueError("ground sets must be nonempty")
            self.point_weight(i)
        for i in range(n):
            for j in range(n):
                row = self.adjacency[i][j]
                if (row is None) != (i == j):
                    raise ValueError("adjacency diagonal must be None and nothing else")
                if row is None:
                    continue
                if len(row) != self.sizes[i]:
                    raise ValueError("adjacency row count must match the part size")
                limit = 1 << self.sizes[j]
                back = self.adjacency[j][i]
                for p, bits in enumerate(row):
                    if not 0 <= bits < limit:
                        raise ValueError("adjacency bits out of range")
                    for q in bits_iter(bits):
                        if not back[q] >> p & 1:
                            raise ValueError("incidence relation is not symmetric")
        identity = self.action[0]
        for i in range(n):
            if tuple(identity[i]) != tuple(range(self.sizes[i])):
                raise ValueError("the identity element must act as the identity permutation")
        gens = _generating_set(group)
        for g in range(group.order):
            per_g = self.action[g]
            for i in range(n):
                perm = per_g[i]
                if sorted(perm) != list(range(self.sizes[i])):
                    raise ValueError("every group element must act as a permutation")
            for h in gens:
                per_h = self.action[h]
                per_gh = self.action[group.mul(g, h)]
                for i in range(n):
                    if any(per_g[i][per_h[i][p]] != per_gh[i][p] for p in range(self.sizes[i])):
                        raise ValueError("the action is not a homomorphism")
        for i in range(n):
            orbit = {0}
            for g in range(group.order):
                orbit.add(self.action[g][i][0])
            if len(orbit) != self.sizes[i]:
                raise ValueError(f"the action is not transitive on ground set {i}")
        for g in range(group.order):
            per_g = self.action[g]
            for i in range(n):
                for j in range(n):
                    row = self.adjacency[i][j]
                    if row is None:
                        continue
                    for p, bits in enumerate(row):
                        if _permute_mask(bits, per_g[j]) != row[per_g[i][p]]:
                            raise ValueError("the action does not preserve incidence")
        if self.part_partition is not None:
            flat = sorted(x for part in self.part_partition for x in part)
            if flat != list(range(n)):
                raise ValueError("part partition must partition the ground set indices")
            for part in self.part_partition:
                for i in part:
                    for j in part:
                        if i != j and any(self.adjacency[i][j]):
                            raise ValueError("sides within one partition group must be empty")

    def find_collision(self) -> Optional[Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int]]]:
        """Three mutually incident points of three distinct types, if any."""
        n = self.rank
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    row_ij = self.adjacency[i][j]
                    row_ik = self.adjacency[i][k]
                    row_jk = self.adjacency[j][k]
                    for p in range(self.sizes[i]):
                        if not row_ij[p] or not row_ik[p]:
                            continue
                        for q in bits_iter(row_ij[p]):
                            hits = row_jk[q] & row_ik[p]
                            if hits:
                                r = (hits & -hits).bit_length() - 1
                                return ((i, p), (j, q), (k, r))
        return None

    @property
    def is_collision_free(self) -> bool:
        return self.find_collision() is None

    def connected(self) -> bool:
        """True when every side is connected as a bipartite incidence graph."""
        return all(
            self.side(i, j).connected() for i in range(self.rank) for j in range(i + 1, self.rank)
        )

    def clone_partition(self) -> List[List[Tuple[int, ...]]]:
        """Per part, the classes of points with identical neighborhoods."""
        out: List[List[Tuple[int, ...]]] = []
        for i in range(self.rank):
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for p in range(self.sizes[i]):
                key = tuple(
                    self.adjacency[i][j][p] for j in range(self.rank) if j != i
                )
                groups.setdefault(key, []).append(p)
            out.append(sorted((tuple(cls) for cls in groups.values()), key=lambda c: c[0]))
        return out

    def clone_quotient(self) -> "IncidenceChorus":
        """Collapse every clone class to one point; idempotent."""
        classes = self.clone_partition()
        index: List[Dict[int, int]] = []
        for i in range(self.rank):
            lookup = {}
            for ci, cls in enumerate(classes[i]):
                for p in cls:
                    lookup[p] = ci
            index.append(lookup)
        sizes = tuple(len(classes[i]) for i in range(self.rank))
        adjacency = []
        for i in range(self.rank):
            row_out = []
            for j in range(self.rank):
                if i == j:
                    row_out.append(None)
                    continue
                rows = []
                for cls in classes[i]:
                    bits = self.adjacency[i][j][cls[0]]
                    out = 0
                    for q in bits_iter(bits):
                        out |= 1 << index[j][q]
                    rows.append(out)
                row_out.append(tuple(rows))
            adjacency.append(tuple(row_out))
        action = []
        for g in range(self.group.order):
            per_set = []
            for i in range(self.rank):
                per_set.append(
                    tuple(index[i][self.action[g][i][cls[0]]] for cls in classes[i])
                )
            action.append(tuple(per_set))
        return IncidenceChorus(
            self.group,
            sizes,
            tuple(adjacency),
            tuple(action),
            part_partition=self.part_partition,
        )

    def to_json(self) -> dict:
        """Sizes, incidence pairs, and the permutations of a generating set."""
        if self.cayley_matrix is not None:
            return {
                "group": {"order": self.group.order, "names": list(self.group.names)},
                "matrix": [[sub.elements() for sub in row] for row in self.cayley_matrix],
            }
        pairs = []
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                for p, bits in enumerate(self.adjacency[i][j]):
                    for q in bits_iter(bits):
                        pairs.append([i, p, j, q])
        gens = _generating_set(self.group)
        return {
            "group": {"order": self.group.order, "names": list(self.group.names)},
            "sizes": list(self.sizes),
            "incidences": pairs,
            "generators": {
                str(g): [list(self.action[g][i]) for i in range(self.rank)] for g in gens
            },
        }


def _generating_set(group: FiniteGroup) -> List[int]:
    """A small deterministic generating set, grown greedily."""
    gens: List[int] = []
    reach = 1
    for g in range(1, group.order):
        if generated_subgroup(group, gens + [g]).order > reach:
            gens.append(g)
            reach = generated_subgroup(group, gens).order
            if reach == group.order:
                break
    return gens


# ---------------------------------------------------------------------------
# Cayley choruses


def cayley_chorus(
    group: FiniteGroup,
    matrix: Sequence[Sequence[Union[GroupSubset, Iterable[int]]]],
    partition: Optional[Sequence[Sequence[int]]] = None,
) -> IncidenceChorus:
    """Chorus on n copies of the group, wired by a symmetric subset matrix.

    Point x of part i is incident with point y of part j exactly when y lies
    in x times the ij entry.  The matrix must have empty diagonal entries and
    satisfy that the ji entry is the elementwise inverse of the ij entry.
    The group acts by left multiplication on every part.
    """
    n = len(matrix)
    masks = [[_subset_bits(group, matrix[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if masks[i][i]:
            raise ValueError("diagonal entries must be empty")
        for j in range(n):
            if masks[j][i] != inverse_mask(group, masks[i][j]):
                raise ValueError(f"matrix symmetry violation at entry ({i}, {j})")
    order = group.order
    adjacency = tuple(
        tuple(
            None
            if i == j
            else tuple(_left_translate(group, x, masks[i][j]) for x in range(order))
            for j in range(n)
        )
        for i in range(n)
    )
    action = []
    for g in range(order):
        perm = tuple(group.mul(g, x) for x in range(order))
        action.append(tuple(perm for _ in range(n)))
    part = None
    if partition is not None:
        part = tuple(tuple(p) for p in partition)
        flat = sorted(x for grp in part for x in grp)
        if flat != list(range(n)):
            raise ValueError("partition must cover the ground set indices exactly once")
        for grp in part:
            for i in grp:
                for j in grp:
                    if i != j and masks[i][j]:
                        raise ValueError("sides within one partition group must be empty")
    stored = tuple(tuple(GroupSubset(group, masks[i][j]) for j in range(n)) for i in range(n))
    return IncidenceChorus(group, (order,) * n, adjacency, tuple(action), cayley_matrix=stored, part_partition=part)


def cayley_duet(group: FiniteGroup, a: Union[GroupSubset, Iterable[int]]) -> IncidenceChorus:
    """Rank 2 chorus wired by one subset and its inverse."""
    bits = _subset_bits(group, a)
    inv = inverse_mask(group, bits)
    return cayley_chorus(group, [[0, bits], [inv, 0]])


def cayley_trio(
    group: FiniteGroup,
    a: Union[GroupSubset, Iterable[int]],
    b: Union[GroupSubset, Iterable[int]],
    c: Union[GroupSubset, Iterable[int]],
) -> IncidenceChorus:
    """Rank 3 chorus whose sides are wired by three subsets.

    The 01 side carries the first set, the 12 side the second, and the 20
    side the third, so subset triples map onto rank 3 choruses with their
    deficiency preserved.
    """
    am = _subset_bits(group, a)
    bm = _subset_bits(group, b)
    cm = _subset_bits(group, c)
    ai = inverse_mask(group, am)
    bi = inverse_mask(group, bm)
    ci = inverse_mask(group, cm)
    return cayley_chorus(group, [[0, am, ci], [ai, 0, bm], [cm, bi, 0]])


# ---------------------------------------------------------------------------
# rank 2 views and weights


@dataclass(frozen=True)
class DuetView:
    """One ordered side (X, Y) of a chorus."""

    chorus: IncidenceChorus
    x_index: int
    y_index: int

    def __post_init__(self) -> None:
        if self.x_index == self.y_index:
            raise ValueError("a duet needs two distinct ground sets")

    @property
    def x_size(self) -> int:
        return self.chorus.sizes[self.x_index]

    @property
    def y_size(self) -> int:
        return self.chorus.sizes[self.y_index]

    @cached_property
    def rows(self) -> Tuple[int, ...]:
        return self.chorus.adjacency[self.x_index][self.y_index]

    def row(self, p: int) -> int:
        return self.rows[p]

    def neighbors_of(self, bits: int) -> int:
        out = 0
        for p in bits_iter(bits):
            out |= self.rows[p]
        return out

    @property
    def point_weight_x(self) -> int:
        return self.chorus.point_weight(self.x_index)

    @property
    def point_weight_y(self) -> int:
        return self.chorus.point_weight(self.y_index)

    @property
    def degree(self) -> int:
        return self.rows[0].bit_count()

    @property
    def codegree(self) -> int:
        return self.y_size - self.degree

    @property
    def weight(self) -> int:
        return self.degree * self.point_weight_y

    @property
    def coweight(self) -> int:
        return self.codegree * self.point_weight_y

    @property
    def is_empty(self) -> bool:
        return all(bits == 0 for bits in self.rows)

    @property
    def is_full(self) -> bool:
        full = (1 << self.y_size) - 1
        return all(bits == full for bits in self.rows)

    @property
    def is_partial(self) -> bool:
        return not self.is_empty and not self.is_full

    def swap(self) -> "DuetView":
        return DuetView(self.chorus, self.y_index, self.x_index)

    def connected(self) -> bool:
        """Connectivity of the bipartite incidence graph on both point sets."""
        seen_x = 1
        seen_y = 0
        frontier = [(0, True)]
        back = self.chorus.adjacency[self.y_index][self.x_index]
        while frontier:
            p, on_x = frontier.pop()
            if on_x:
                for q in bits_iter(self.rows[p] & ~seen_y):
                    seen_y |= 1 << q
                    frontier.append((q, False))
            else:
                for q in bits_iter(back[p] & ~seen_x):
                    seen_x |= 1 << q
                    frontier.append((q, True))
        return seen_x == (1 << self.x_size) - 1 and seen_y == (1 << self.y_size) - 1

    def components(self) -> List[Tuple[int, int]]:
        """Connected components as (x bitmask, y bitmask) pairs, by least point."""
        back = self.chorus.adjacency[self.y_index][self.x_index]
        unseen_x = (1 << self.x_size) - 1
        unseen_y = (1 << self.y_size) - 1
        out = []
        while unseen_x:
            start = (unseen_x & -unseen_x).bit_length() - 1
            comp_x = 1 << start
            comp_y = 0
            frontier = [(start, True)]
            while frontier:
                p, on_x = frontier.pop()
                if on_x:
                    for q in bits_iter(self.rows[p] & ~comp_y):
                        comp_y |= 1 << q
                        frontier.append((q, False))
                else:
                    for q in bits_iter(back[p] & ~comp_x):
                        comp_x |= 1 << q
                        frontier.append((q, True))
            unseen_x &= ~comp_x
            unseen_y &= ~comp_y
            out.append((comp_x, comp_y))
        for q in bits_iter(unseen_y):
            out.append((0, 1 << q))
        return out

    def set_deficiency(self, bits: int) -> int:
        """Deficiency of a point subset of X against its widest partner."""
        return (
            bits.bit_count() * self.point_weight_x
            + self.weight
            - self.neighbors_of(bits).bit_count() * self.point_weight_y
        )

    def deficiency(self) -> int:
        """Largest deficiency over nontrivial crosses, by subset sweep.

        Sweeps the smaller ground set; refuses beyond 16 points because the
        sweep is exponential in the swept side.
        """
        if not self.is_partial:
            raise ValueError("duet deficiency is defined for partial duets only")
        view = self if self.x_size <= self.y_size else self.swap()
        if view.x_size > MAX_SWEEP_POINTS:
            raise ValueError(
                f"deficiency sweep supports at most {MAX_SWEEP_POINTS} points per side"
            )
        rows = view.rows
        wx = view.point_weight_x
        wy = view.point_weight_y
        y_full = (1 << view.y_size) - 1
        total = 1 << view.x_size
        neigh = [0] * total
        best = None
        cobase = view.coweight
        for s in range(1, total):
            low = s & -s
            n_s = neigh[s ^ low] | rows[low.bit_length() - 1]
            neigh[s] = n_s
            rest = y_full ^ n_s
            if rest:
                value = s.bit_count() * wx + rest.bit_count() * wy - cobase
                if best is None or value > best:
                    best = value
        if best is None:
            raise RuntimeError("a partial duet always has a nontrivial cross")
        return best


@dataclass(frozen=True)
class DuetWeights:
    """Exact integer weight data of one side."""

    point_weight_x: int
    point_weight_y: int
    degree: int
    codegree: int
    weight: int
    coweight: int


def weights(view: DuetView) -> DuetWeights:
    """Weight record of a side, with the symmetry identities enforced."""
    flipped = view.swap()
    if view.weight != flipped.weight or view.coweight != flipped.coweight:
        raise RuntimeError("weight symmetry failed; the action is inconsistent")
    return DuetWeights(
        point_weight_x=view.point_weight_x,
        point_weight_y=view.point_weight_y,
        degree=view.degree,
        codegree=view.codegree,
        weight=view.weight,
        coweight=view.coweight,
    )


def satisfies_olson_bound(view: DuetView) -> bool:
    """Check deficiency against half the weight and a third of the group order.

    Only meaningful for connected partial duets, where the bound is a
    theorem; returns the exact comparison without rounding.
    """
    delta = view.deficiency()
    return 2 * delta <= view.weight and 3 * delta <= view.chorus.group.order


# ---------------------------------------------------------------------------
# rank 3 views


@dataclass(frozen=True)
class TrioView:
    """Three ground sets of a chorus read as a triangle of sides."""

    chorus: IncidenceChorus
    indices: Tuple[int, int, int]

    def sides(self) -> Tuple[DuetView, DuetView, DuetView]:
        i, j, k = self.indices
        return (self.chorus.side(i, j), self.chorus.side(j, k), self.chorus.side(i, k))

    def collision_witness(self) -> Optional[Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int]]]:
        i, j, k = self.indices
        adj = self.chorus.adjacency
        for p in range(self.chorus.sizes[i]):
            row_ij = adj[i][j][p]
            row_ik = adj[i][k][p]
            if not row_ij or not row_ik:
                continue
            for q in bits_iter(row_ij):
                hits = adj[j][k][q] & row_ik
                if hits:
                    r = (hits & -hits).bit_length() - 1
                    return ((i, p), (j, q), (k, r))
        return None

    @property
    def is_collision_free(self) -> bool:
        return self.collision_witness() is None

    @property
    def is_trivial(self) -> bool:
        return any(side.is_empty for side in self.sides())


def trio_deficiency_inc(view: TrioView) -> int:
    """Deficiency of a rank 3 view: total side weight minus the group order.

    Ordering the sides by weight and charging the coweight of the heaviest
    gives the same number, because weight plus coweight is the group order
    on every side.  Raises CollisionError when the view is not collision
    free, carrying a witness triple.
    """
    witness = view.collision_witness()
    if witness is not None:
        raise CollisionError(witness)
    return sum(side.weight for side in view.sides()) - view.chorus.group.order


def trio_is_maximal(view: TrioView) -> bool:
    """Probe every missing cross-type incidence orbit for a legal extension.

    Adding an incidence forces its whole orbit under the action; the view is
    maximal when every such orbit either restores a collision or is already
    present.
    """
    if view.collision_witness() is not None:
        raise ValueError("maximality probes require a collision free view")
    chorus = view.chorus
    i, j, k = view.indices
    order = chorus.group.order
    for a, b in ((i, j), (j, k), (i, k)):
        third = ({i, j, k} - {a, b}).pop()
        rows_ab = chorus.adjacency[a][b]
        rows_at = chorus.adjacency[a][third]
        rows_bt = chorus.adjacency[b][third]
        seen = set()
        for p in range(chorus.sizes[a]):
            missing = ~rows_ab[p] & ((1 << chorus.sizes[b]) - 1)
            for q in bits_iter(missing):
                if (p, q) in seen:
                    continue
                orbit = {(chorus.action[g][a][p], chorus.action[g][b][q]) for g in range(order)}
                seen.update(orbit)
                if all(not (rows_at[pp] & rows_bt[qq]) for pp, qq in orbit):
                    return False
    return True


# ---------------------------------------------------------------------------
# crosses


@dataclass(frozen=True)
class Cross:
    """A pair of point subsets of a side with no incidence between them."""

    view: DuetView
    a_bits: int
    b_bits: int

    def __post_init__(self) -> None:
        if self.view.neighbors_of(self.a_bits) & self.b_bits:
            raise ValueError("the two sides of a cross must avoid each other")

    @property
    def is_trivial(self) -> bool:
        return self.a_bits == 0 or self.b_bits == 0

    @property
    def deficiency(self) -> int:
        view = self.view
        return (
            self.a_bits.bit_count() * view.point_weight_x
            + self.b_bits.bit_count() * view.point_weight_y
            - view.coweight
        )

    @property
    def is_maximal(self) -> bool:
        view = self.view
        x_full = (1 << view.x_size) - 1
        y_full = (1 << view.y_size) - 1
        back = view.swap()
        return (
            self.a_bits == x_full ^ back.neighbors_of(self.b_bits)
            and self.b_bits == y_full ^ view.neighbors_of(self.a_bits)
        )

    def translate(self, g: int) -> "Cross":
        chorus = self.view.chorus
        perm_x = chorus.action[g][self.view.x_index]
        perm_y = chorus.action[g][self.view.y_index]
        return Cross(self.view, _permute_mask(self.a_bits, perm_x), _permute_mask(self.b_bits, perm_y))


def cross_from_sets(view: DuetView, a: int, b: int) -> Cross:
    """Wrap two point bitmasks as a cross, rejecting incident pairs."""
    return Cross(view, a, b)


def cross_from_point(view: TrioView, z: int) -> Cross:
    """The cross cut out on the first side by a point of the third set."""
    i, j, k = view.indices
    chorus = view.chorus
    a = chorus.adjacency[k][i][z]
    b = chorus.adjacency[k][j][z]
    return Cross(chorus.side(i, j), a, b)


def uncross(first: Cross, second: Cross) -> Tuple[Cross, Cross]:
    """Meet and join of two crosses, with the deficiency identity enforced."""
    if first.view != second.view:
        raise ValueError("uncrossing needs two crosses of one side")
    meet = Cross(first.view, first.a_bits & second.a_bits, first.b_bits | second.b_bits)
    join = Cross(first.view, first.a_bits | second.a_bits, first.b_bits & second.b_bits)
    if meet.deficiency + join.deficiency != first.deficiency + second.deficiency:
        raise RuntimeError("uncrossing deficiency identity failed")
    return meet, join


def _is_block(chorus: IncidenceChorus, i: int, bits: int) -> bool:
    for g in range(chorus.group.order):
        image = _permute_mask(bits, chorus.action[g][i])
        if image != bits and image & bits:
            return False
    return True


def _check_purify_block(cross: Cross, block: int) -> None:
    view = cross.view
    if not _is_block(view.chorus, view.x_index, block):
        raise ValueError("purification needs a block of imprimitivity")
    inter = block & cross.a_bits
    if inter == 0 or inter == block:
        raise ValueError("purification needs a boundary block of the cross")
    if view.set_deficiency(block) <= 0:
        raise ValueError("purification needs a critical block")


def weak_purify(cross: Cross, block: int, side: str = "x") -> Cross:
    """Absorb a critical boundary block, dropping its partner neighborhood."""
    if side == "y":
        flipped = weak_purify(Cross(cross.view.swap(), cross.b_bits, cross.a_bits), block, "x")
        return Cross(cross.view, flipped.b_bits, flipped.a_bits)
    if side != "x":
        raise ValueError("side must be 'x' or 'y'")
    _check_purify_block(cross, block)
    view = cross.view
    new_b = cross.b_bits & ~view.neighbors_of(block)
    out = Cross(view, cross.a_bits | block, new_b)
    if out.deficiency < cross.deficiency:
        raise RuntimeError("weak purification lowered the deficiency")
    return out


def purify(cross: Cross, block: int, side: str = "x") -> Cross:
    """Purify at a critical boundary block and saturate the first side.

    The result never loses deficiency, stays maximal when the input was
    maximal, and removes strictly less partner weight than the block weight.
    """
    if side == "y":
        flipped = purify(Cross(cross.view.swap(), cross.b_bits, cross.a_bits), block, "x")
        return Cross(cross.view, flipped.b_bits, flipped.a_bits)
    if side != "x":
        raise ValueError("side must be 'x' or 'y'")
    weak = weak_purify(cross, block, "x")
    view = cross.view
    x_full = (1 << view.x_size) - 1
    new_a = x_full ^ view.swap().neighbors_of(weak.b_bits)
    out = Cross(view, new_a, weak.b_bits)
    if out.deficiency < weak.deficiency:
        raise RuntimeError("purification lowered the deficiency below the weak step")
    if cross.is_maximal and not out.is_maximal:
        raise RuntimeError("purification broke maximality")
    removed = (cross.b_bits & ~out.b_bits).bit_count() * view.point_weight_y
    if removed >= block.bit_count() * view.point_weight_x:
        raise RuntimeError("purification removed at least the block weight")
    return out


def associated_trio(cross: Cross) -> TrioView:
    """Expand a cross into a rank 3 view whose third set is its orbit.

    The new chorus keeps the two original ground sets and appends the orbit
    of the cross under the action; each orbit member is incident with the
    points it contains.  Collision freeness holds by the cross property.
    """
    view = cross.view
    chorus = view.chorus
    group = chorus.group
    pairs: List[Tuple[int, int]] = []
    index: Dict[Tuple[int, int], int] = {}
    for g in range(group.order):
        key = (
            _permute_mask(cross.a_bits, chorus.action[g][view.x_index]),
            _permute_mask(cross.b_bits, chorus.action[g][view.y_index]),
        )
        if key not in index:
            index[key] = len(pairs)
            pairs.append(key)
    sizes = (view.x_size, view.y_size, len(pairs))
    x_rows = list(view.rows)
    y_rows = list(chorus.adjacency[view.y_index][view.x_index])
    zx_rows = [a for a, _ in pairs]
    zy_rows = [b for _, b in pairs]
    xz_rows = [0] * sizes[0]
    yz_rows = [0] * sizes[1]
    for zi, (a, b) in enumerate(pairs):
        for p in bits_iter(a):
            xz_rows[p] |= 1 << zi
        for q in bits_iter(b):
            yz_rows[q] |= 1 << zi
    adjacency = (
        (None, tuple(x_rows), tuple(xz_rows)),
        (tuple(y_rows), None, tuple(yz_rows)),
        (tuple(zx_rows), tuple(zy_rows), None),
    )
    action = []
    for g in range(group.order):
        perm_x = chorus.action[g][view.x_index]
        perm_y = chorus.action[g][view.y_index]
        perm_z = tuple(
            index[(_permute_mask(a, perm_x), _permute_mask(b, perm_y))] for a, b in pairs
        )
        action.append((perm_x, perm_y, perm_z))
    lifted = IncidenceChorus(group, sizes, adjacency, tuple(action))
    return lifted.trio(0, 1, 2)


# ---------------------------------------------------------------------------
# blocks of imprimitivity


@lru_cache(maxsize=None)
def _subgroup_elements(group: FiniteGroup) -> Tuple[frozenset, ...]:
    return tuple(frozenset(sub.elements) for sub in subgroups(group))


def blocks_of(chorus: IncidenceChorus, i: int, point: int = 0) -> List[Tuple[int, ...]]:
    """All blocks of imprimitivity of ground set i through one point.

    For a transitive action these are exactly the orbits of the subgroups
    containing the point stabilizer, so the subgroup lattice drives the
    enumeration.
    """
    group = chorus.group
    stab = frozenset(g for g in range(group.order) if chorus.action[g][i][point] == point)
    found = set()
    for elems in _subgroup_elements(group):
        if not stab <= elems:
            continue
        orbit = tuple(sorted({chorus.action[g][i][point] for g in elems}))
        found.add(orbit)
    return sorted(found, key=lambda b: (len(b), b))


def block_closure(chorus: IncidenceChorus, i: int, points: Iterable[int]) -> Tuple[int, ...]:
    """Minimal block of imprimitivity containing the given points."""
    pts = sorted(set(points))
    if not pts:
        raise ValueError("closure needs at least one point")
    base = pts[0]
    need = set(pts)
    candidates = [b for b in blocks_of(chorus, i, base) if need <= set(b)]
    best = min(candidates, key=len)
    for other in candidates:
        if not set(best) <= set(other):
            raise RuntimeError("block lattice is not intersection closed at the base point")
    return best


@dataclass(frozen=True)
class HamidouneBlock:
    """A block of imprimitivity realizing the deficiency of a duet."""

    ground_set: int
    points: Tuple[int, ...]
    deficiency: int


def hamidoune_block(view: DuetView) -> HamidouneBlock:
    """A finite nontrivially critical block matching the duet deficiency.

    Searches blocks through the base point of both ground sets; translation
    invariance of set deficiency makes that exhaustive.  Existence is a
    theorem for partial duets, so coming up empty is an internal error.
    """
    if not view.is_partial:
        raise ValueError("the block search needs a partial duet")
    target = view.deficiency()
    for oriented in (view, view.swap()):
        y_full = (1 << oriented.y_size) - 1
        for block in blocks_of(oriented.chorus, oriented.x_index):
            bits = mask_of(block)
            if oriented.neighbors_of(bits) == y_full:
                continue
            delta = oriented.set_deficiency(bits)
            if delta <= 0 or delta != target:
                continue
            return HamidouneBlock(oriented.x_index, tuple(block), delta)
    raise RuntimeError("no block of imprimitivity realizes the duet deficiency")


# ---------------------------------------------------------------------------
# basepoint realization


@dataclass(frozen=True)
class SabidussiRealization:
    """A subset matrix plus the coset map tying a chorus to its Cayley model.

    cosets[i][x] is the set of group elements carrying basepoint i to point
    x of ground set i; collapsing the Cayley model by these cosets recovers
    the original chorus, and the association commutes with the action.
    """

    matrix: Tuple[Tuple[GroupSubset, ...], ...]
    cosets: Tuple[Tuple[GroupSubset, ...], ...]
    basepoints: Tuple[int, ...]


def sabidussi_realize(chorus: IncidenceChorus, basepoints: Sequence[int]) -> SabidussiRealization:
    """Model a chorus as a Cayley chorus anchored at one point per part.

    Every point becomes the coset of elements mapping its basepoint onto it,
    and the matrix entry for a pair of parts collects the cosets of the
    neighbors of the first basepoint.  The defining properties are verified
    before returning: cosets partition the group, matrix entries absorb the
    basepoint stabilizers on both sides, matrix symmetry holds, and the
    coset containment test reproduces the incidence relation exactly.
    """
    group = chorus.group
    n = chorus.rank
    if len(basepoints) != n:
        raise ValueError("one basepoint per ground set is required")
    cosets: List[List[int]] = []
    for i in range(n):
        per_point = [0] * chorus.sizes[i]
        for g in range(group.order):
            per_point[chorus.action[g][i][basepoints[i]]] |= 1 << g
        stab_size = per_point[basepoints[i]].bit_count()
        if any(bits.bit_count() != stab_size for bits in per_point):
            raise RuntimeError("basepoint cosets have uneven sizes; the action is broken")
        cosets.append(per_point)
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        stab_i = cosets[i][basepoints[i]]
        for j in range(n):
            if i == j:
                continue
            entry = 0
            for y in bits_iter(chorus.adjacency[i][j][basepoints[i]]):
                entry |= cosets[j][y]
            matrix[i][j] = entry
            if product_mask(group, stab_i, entry) != entry:
                raise RuntimeError("matrix entry does not absorb the left stabilizer")
            if product_mask(group, entry, cosets[j][basepoints[j]]) != entry:
                raise RuntimeError("matrix entry does not absorb the right stabilizer")
    for i in range(n):
        for j in range(n):
            if matrix[j][i] != inverse_mask(group, matrix[i][j]):
                raise RuntimeError("realized matrix is not symmetric")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for p in range(chorus.sizes[i]):
                row = chorus.adjacency[i][j][p]
                s_p = cosets[i][p]
                anchor = (s_p & -s_p).bit_length() - 1
                shifted = _left_translate(group, anchor, matrix[i][j])
                for q in range(chorus.sizes[j]):
                    incident = bool(row >> q & 1)
                    if (cosets[j][q] & ~shifted == 0) != incident:
                        raise RuntimeError("coset containment does not match incidence")
    return SabidussiRealization(
        matrix=tuple(tuple(GroupSubset(group, matrix[i][j]) for j in range(n)) for i in range(n)),
        cosets=tuple(tuple(GroupSubset(group, bits) for bits in cosets[i]) for i in range(n)),
        basepoints=tuple(basepoints),
    )
