"""Geometric and dihedral progressions, their product law, and labelled prechords."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from triolab.groups import FiniteGroup, Subgroup, subgroups
from triolab.setops import GroupSubset, inverse_mask, mask_of, stabilizers

__all__ = [
    "GeometricProgression",
    "DihedralForm",
    "DihedralProgression",
    "DihedralPrechord",
    "OCTAHEDRON_VERTICES",
    "OCTAHEDRON_EDGES",
    "OCTAHEDRON_FACES",
    "detect_geometric",
    "detect_dihedral",
    "dihedral_form",
    "dihedral_product",
    "build_prechord",
    "octahedron_potential",
]


def _power(group: FiniteGroup, g: int, k: int) -> int:
    x = 0
    for _ in range(k):
        x = group.mul(x, g)
    return x


# ---------------------------------------------------------------------------
# geometric progressions


@dataclass(frozen=True)
class GeometricProgression:
    """A shifted power run: offset * {ratio^0, ..., ratio^(length-1)}."""

    group: FiniteGroup
    ratio: int
    offset: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"progression length must be positive, got {self.length}")

    def terms(self) -> List[int]:
        out = [self.offset]
        x = self.offset
        for _ in range(self.length - 1):
            x = self.group.mul(x, self.ratio)
            out.append(x)
        return out

    def subset(self) -> GroupSubset:
        return GroupSubset.from_elements(self.group, self.terms())

    @property
    def is_nontrivial(self) -> bool:
        return self.length >= 2

    @property
    def is_proper(self) -> bool:
        """The next power falls outside the set, so the run does not wrap."""
        terms = self.terms()
        nxt = self.group.mul(terms[-1], self.ratio)
        return nxt not in set(terms)


def detect_geometric(a: GroupSubset) -> List[GeometricProgression]:
    """All (ratio, offset) realizations of the set as a proper power run.

    A singleton realizes for every ratio except the identity; sets admitting
    no proper realization yield an empty list. Results are ordered by ratio
    then offset.
    """
    if a.is_empty:
        raise ValueError("geometric detection requires a nonempty set")
    g = a.group
    want = a.bits
    size = a.size
    out: List[GeometricProgression] = []
    for ratio in range(g.order):
        for offset in a.elements():
            seen = 0
            x = offset
            ok = True
            for _ in range(size):
                bit = 1 << x
                if want & bit == 0 or seen & bit:
                    ok = False
                    break
                seen |= bit
                x = g.mul(x, ratio)
            if ok and want >> x & 1 == 0:
                out.append(GeometricProgression(g, ratio, offset, size))
    return out


# ---------------------------------------------------------------------------
# dihedral structure detection


@dataclass(frozen=True)
class DihedralForm:
    """Rotation data recovered from a dihedral multiplication table."""

    rotations: Subgroup
    ratio: int
    flips: Tuple[int, ...]


@lru_cache(maxsize=None)
def dihedral_form(group: FiniteGroup) -> Optional[DihedralForm]:
    """Detect dihedral structure, or return None.

    A group of order 2n with n >= 3 is dihedral exactly when it has a unique
    cyclic subgroup of index two and every element outside it is an
    involution. The reported ratio is the least generator of that subgroup
    and the flips are everything outside it.
    """
    order = group.order
    if order < 6 or order % 2:
        return None
    n = order // 2
    cyclic_halves = [
        sub
        for sub in subgroups(group)
        if sub.order == n and any(group.element_order(x) == n for x in sub)
    ]
    if len(cyclic_halves) != 1:
        return None
    rot = cyclic_halves[0]
    inside = set(rot.elements)
    flips = tuple(x for x in range(order) if x not in inside)
    if any(group.element_order(x) != 2 for x in flips):
        return None
    ratio = min(x for x in rot if group.element_order(x) == n)
    return DihedralForm(rotations=rot, ratio=ratio, flips=flips)


# ---------------------------------------------------------------------------
# dihedral progressions


@dataclass(frozen=True)
class DihedralProgression:
    """A rotation run times a flip pair: {1, r, ..., r^k} * {1, f}."""

    group: FiniteGroup
    ratio: int
    flip: int
    k: int

    def __post_init__(self) -> None:
        form = dihedral_form(self.group)
        if form is None:
            raise ValueError("dihedral progressions need a dihedral group of order at least 6")
        if self.ratio not in form.rotations:
            raise ValueError(f"ratio (element {self.ratio}) is not a rotation")
        if self.flip in form.rotations:
            raise ValueError(f"flip (element {self.flip}) is a rotation")
        if self.k < 0:
            raise ValueError(f"k must be nonnegative, got {self.k}")

    @classmethod
    def left_form(cls, group: FiniteGroup, ratio: int, flip: int, k: int) -> "DihedralProgression":
        """The set {1, f} * {1, r, ..., r^k}, rewritten in the standard form.

        Moving the flip pair to the right turns the flip into f * r^k.
        """
        return cls(group, ratio, group.mul(flip, _power(group, ratio, k)), k)

    def terms(self) -> List[int]:
        out: List[int] = []
        x = 0
        for _ in range(self.k + 1):
            out.append(x)
            out.append(self.group.mul(x, self.flip))
            x = self.group.mul(x, self.ratio)
        return out

    def subset(self) -> GroupSubset:
        return GroupSubset.from_elements(self.group, self.terms())

    @property
    def size(self) -> int:
        return self.subset().size

    @property
    def is_nontrivial(self) -> bool:
        return self.k >= 1

    @property
    def is_proper(self) -> bool:
        """The next rotation power falls outside the set."""
        nxt = _power(self.group, self.ratio, self.k + 1)
        return nxt not in self.subset()

    @property
    def ends(self) -> Tuple[int, int, int, int]:
        """The four boundary elements (1, f, r^k, f r^-k)."""
        g = self.group
        rk = _power(g, self.ratio, self.k)
        return (0, self.flip, rk, g.mul(self.flip, g.inv(rk)))


def detect_dihedral(a: GroupSubset, ratio: Optional[int] = None) -> List[DihedralProgression]:
    """All standard-form realizations of the set as a dihedral progression.

    Tries every rotation as the ratio (or only the given one) and every
    flip, with k fixed by the set size. Realizations are reported whether or
    not they are proper, ordered by ratio then flip.
    """
    form = dihedral_form(a.group)
    if form is None:
        raise ValueError("dihedral detection needs a dihedral group of order at least 6")
    if a.is_empty or a.size % 2:
        return []
    k = a.size // 2 - 1
    ratios: List[int] = [ratio] if ratio is not None else list(form.rotations)
    out: List[DihedralProgression] = []
    for r in ratios:
        for f in form.flips:
            cand = DihedralProgression(a.group, r, f, k)
            if cand.subset().bits == a.bits:
                out.append(cand)
    return out


def _composable(a: DihedralProgression, b: DihedralProgression) -> None:
    if a.group is not b.group:
        raise ValueError("progressions belong to different groups")
    if a.ratio != b.ratio:
        raise ValueError(f"ratio mismatch: element {a.ratio} vs element {b.ratio}")
    if not (a.is_nontrivial and b.is_nontrivial):
        raise ValueError("both progressions must be nontrivial (k >= 1)")
    _, right = stabilizers(a.subset())
    left, _ = stabilizers(b.subset())
    if right.elements != left.elements:
        raise ValueError(
            "stabilizer mismatch: the right stabilizer of the first factor must "
            "equal the left stabilizer of the second"
        )


def dihedral_product(a: DihedralProgression, b: DihedralProgression) -> DihedralProgression:
    """Multiply composable progressions; the run lengths add.

    The product of {1..r^k}{1, f} and {1..r^l}{1, f'} with aligned
    stabilizers is {1..r^(k+l)}{1, f'}, so when that set is proper its size
    is |A| + |B| - 2.
    """
    _composable(a, b)
    return DihedralProgression(a.group, a.ratio, b.flip, a.k + b.k)


# ---------------------------------------------------------------------------
# prechords and their labelled octahedra

OCTAHEDRON_VERTICES: Tuple[str, ...] = ("u'", "u", "v'", "v", "w'", "w")

# Directed edges of the octahedron on the six vertices above, keyed by label
# symbol. Antipodal pairs are (u, u'), (v, v'), (w, w'); a-edges run from the
# u-pair to the v-pair, b-edges from v to w, c-edges from w to u.
OCTAHEDRON_EDGES: Dict[str, Tuple[str, str]] = {
    "a1": ("u'", "v'"),
    "a2": ("u'", "v"),
    "a3": ("u", "v"),
    "a4": ("u", "v'"),
    "b1": ("v'", "w'"),
    "b2": ("v'", "w"),
    "b3": ("v", "w"),
    "b4": ("v", "w'"),
    "c1": ("w'", "u'"),
    "c2": ("w'", "u"),
    "c3": ("w", "u"),
    "c4": ("w", "u'"),
}

# The eight faces, each a directed triangle listed in traversal order. For a
# prechord labelling, the ordered product of the three edge labels around
# every face is the identity; these are exactly the eight trivial triples.
OCTAHEDRON_FACES: Tuple[Tuple[str, str, str], ...] = (
    ("a1", "b1", "c1"),
    ("a2", "b4", "c1"),
    ("a1", "b2", "c4"),
    ("a2", "b3", "c4"),
    ("a3", "b3", "c3"),
    ("a4", "b2", "c3"),
    ("a3", "b4", "c2"),
    ("a4", "b1", "c2"),
)


def octahedron_potential(labels: Dict[str, int]) -> Dict[str, int]:
    """Vertex potential reproducing each edge label as tail^-1 * head."""
    return {
        "u'": 0,
        "v'": 0,
        "w'": 0,
        "u": labels["c2"],
        "v": labels["a2"],
        "w": labels["b2"],
    }


@dataclass(frozen=True)
class DihedralPrechord:
    """Two progressions plus a near-complement third set, with edge labels.

    The third set is the complement of the inverted product, rejoined with
    the four inverted product ends. Exactly eight triples (a, b, c) multiply
    to the identity, one per octahedron face.
    """

    a: GroupSubset
    b: GroupSubset
    c: GroupSubset
    edge_labels: Dict[str, int]

    @property
    def group(self) -> FiniteGroup:
        return self.a.group

    def face_triples(self) -> List[Tuple[int, int, int]]:
        """The eight (a, b, c) element triples read off the faces."""
        return [
            (self.edge_labels[fa], self.edge_labels[fb], self.edge_labels[fc])
            for fa, fb, fc in OCTAHEDRON_FACES
        ]

    def to_json(self) -> dict:
        return {
            "a": self.a.elements(),
            "b": self.b.elements(),
            "c": self.c.elements(),
            "octahedron": dict(self.edge_labels),
        }


def build_prechord(a: DihedralProgression, b: DihedralProgression) -> DihedralPrechord:
    """Complete composable progressions to (A, B, C) with its labelled octahedron."""
    if a.group.order < 8:
        raise ValueError("prechords need a dihedral group of order at least 8")
    _composable(a, b)
    g = a.group
    x = dihedral_product(a, b)
    xset = x.subset()
    full = (1 << g.order) - 1
    if xset.bits == full:
        raise ValueError("the product covers the whole group, so no prechord exists")
    x_ends = x.ends
    c_labels = (g.inv(x_ends[0]), g.inv(x_ends[3]), g.inv(x_ends[2]), g.inv(x_ends[1]))
    cbits = (full ^ inverse_mask(g, xset.bits)) | mask_of(c_labels)
    labels: Dict[str, int] = {}
    a_ends, b_ends = a.ends, b.ends
    for i in range(4):
        labels[f"a{i + 1}"] = a_ends[i]
        labels[f"b{i + 1}"] = b_ends[i]
        labels[f"c{i + 1}"] = c_labels[i]
    pre = DihedralPrechord(a=a.subset(), b=b.subset(), c=GroupSubset(g, cbits), edge_labels=labels)
    _verify_prechord(pre)
    return pre


def _verify_prechord(pre: DihedralPrechord) -> None:
    g = pre.group
    excess = pre.a.size + pre.b.size - pre.c.complement().size
    if excess != 6:
        raise RuntimeError(f"prechord excess must be 6, got {excess}")
    face_triples = set(pre.face_triples())
    found = set()
    for ea in pre.a.elements():
        for eb in pre.b.elements():
            ci = g.inv(g.mul(ea, eb))
            if ci in pre.c:
                found.add((ea, eb, ci))
    if len(face_triples) != 8 or found != face_triples:
        raise RuntimeError("trivial triple products do not match the octahedron faces")
    potential = octahedron_potential(pre.edge_labels)
    for sym, (tail, head) in OCTAHEDRON_EDGES.items():
        expect = g.mul(g.inv(potential[tail]), potential[head])
        if pre.edge_labels[sym] != expect:
            raise RuntimeError("octahedron labels are not the tension of the vertex potential")
