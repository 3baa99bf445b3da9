"""Subset labelings of the oriented octahedron and their classification.

A configuration places one subset of a finite group on each of the twelve
directed edges of the octahedron.  It is admissible when the ordered product
of the three labels around every directed triangular face misses the
identity.  Admissible labelings that cannot absorb any further element and
carry positive total deficiency fall into five named shapes.  Two of them
come with witness data: a shape with one grey triangle continues into a
smaller trio inside the label group, and the two-triangle shapes are pinned
to coset structure by one anchor element and a pair of proper subgroups.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .groups import FiniteGroup, Subgroup, subgroups
from .progressions import OCTAHEDRON_EDGES, OCTAHEDRON_FACES
from .setops import (
    GroupSubset,
    _left_translate,
    _right_translate,
    bits_iter,
    inverse_mask,
    mask_of,
    product_mask,
)

__all__ = [
    "EDGE_SYMBOLS",
    "OctahedralConfiguration",
    "OctType",
    "UnclassifiedConfigError",
    "apply_symmetry",
    "classify_config",
    "enumerate_maximal_critical_configs",
    "is_maximal_config",
    "maximalize_config",
    "orientation_symmetries",
    "to_cayley_oct_chorus",
    "validate_config",
    "verify_oct_type",
]

EDGE_SYMBOLS: Tuple[str, ...] = tuple(OCTAHEDRON_EDGES)

_EDGE_INDEX: Dict[str, int] = {sym: i for i, sym in enumerate(EDGE_SYMBOLS)}

_FACES_OF_EDGE: Dict[str, Tuple[Tuple[str, str, str], ...]] = {
    sym: tuple(face for face in OCTAHEDRON_FACES if sym in face) for sym in EDGE_SYMBOLS
}

# Square signatures sort the (full, empty) counts of the three parallel edge
# classes.  Among labelings with no partial edge these four multisets are the
# only ones compatible with maximality and positive deficiency, and exactly
# one of them marks the shape that continues the classification.
_ZERO_SIGNATURE: Tuple[Tuple[int, int], ...] = ((1, 3), (3, 1), (3, 1))
_MINUS1_SIGNATURES: Tuple[Tuple[Tuple[int, int], ...], ...] = (
    ((0, 4), (4, 0), (4, 0)),
    ((2, 2), (2, 2), (3, 1)),
    ((2, 2), (2, 2), (4, 0)),
)

_EMPTY, _PARTIAL, _FULL = 0, 1, 2


@dataclass(frozen=True)
class OctahedralConfiguration:
    """Twelve subset labels on the directed octahedron edges, in symbol order."""

    group: FiniteGroup
    labels: Tuple[GroupSubset, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(EDGE_SYMBOLS):
            raise ValueError(f"expected {len(EDGE_SYMBOLS)} labels, got {len(self.labels)}")
        for sub in self.labels:
            if sub.group is not self.group:
                raise ValueError("labels must live in the configuration group")

    @classmethod
    def from_labels(
        cls,
        group: FiniteGroup,
        labels: Mapping[str, Union[GroupSubset, Iterable[int]]],
    ) -> "OctahedralConfiguration":
        """Build from a symbol keyed mapping; absent symbols become empty."""
        unknown = set(labels) - set(EDGE_SYMBOLS)
        if unknown:
            raise ValueError(f"unknown edge symbols: {sorted(unknown)}")
        out = []
        for sym in EDGE_SYMBOLS:
            value = labels.get(sym, ())
            if isinstance(value, GroupSubset):
                out.append(value)
            else:
                out.append(GroupSubset.from_elements(group, value))
        return cls(group, tuple(out))

    def label(self, symbol: str) -> GroupSubset:
        return self.labels[_EDGE_INDEX[symbol]]

    def as_dict(self) -> Dict[str, GroupSubset]:
        return {sym: self.labels[i] for i, sym in enumerate(EDGE_SYMBOLS)}

    def with_label(self, symbol: str, subset: GroupSubset) -> "OctahedralConfiguration":
        out = list(self.labels)
        out[_EDGE_INDEX[symbol]] = subset
        return OctahedralConfiguration(self.group, tuple(out))

    @property
    def deficiency(self) -> int:
        """Total label mass minus six group orders."""
        return sum(sub.size for sub in self.labels) - 6 * self.group.order

    @property
    def is_critical(self) -> bool:
        return self.deficiency > 0

    def statuses(self) -> Dict[str, str]:
        """Edge symbol to one of "empty", "partial", "full"."""
        names = ("empty", "partial", "full")
        return {sym: names[_status(self.group, self.labels[i].bits)] for i, sym in enumerate(EDGE_SYMBOLS)}

    def to_json(self) -> dict:
        return {
            "H": {"order": self.group.order, "names": list(self.group.names)},
            "labels": {sym: self.labels[i].elements() for i, sym in enumerate(EDGE_SYMBOLS)},
        }


def _status(group: FiniteGroup, bits: int) -> int:
    if bits == 0:
        return _EMPTY
    if bits == (1 << group.order) - 1:
        return _FULL
    return _PARTIAL


def _face_ok(group: FiniteGroup, m1: int, m2: int, m3: int) -> bool:
    """True when the ordered product of the three label masks misses 1."""
    return not product_mask(group, product_mask(group, m1, m2), m3) & 1


def _masks(config: OctahedralConfiguration) -> List[int]:
    return [sub.bits for sub in config.labels]


def _face_masks(masks: Sequence[int], face: Tuple[str, str, str]) -> Tuple[int, int, int]:
    return (masks[_EDGE_INDEX[face[0]]], masks[_EDGE_INDEX[face[1]]], masks[_EDGE_INDEX[face[2]]])


def validate_config(config: OctahedralConfiguration) -> bool:
    """True when every directed face product avoids the identity."""
    masks = _masks(config)
    return all(_face_ok(config.group, *_face_masks(masks, face)) for face in OCTAHEDRON_FACES)


def _addition_ok(group: FiniteGroup, masks: List[int], symbol: str, element: int) -> bool:
    """Check the two faces through an edge after tentatively adding one element."""
    idx = _EDGE_INDEX[symbol]
    saved = masks[idx]
    masks[idx] = saved | 1 << element
    ok = all(_face_ok(group, *_face_masks(masks, face)) for face in _FACES_OF_EDGE[symbol])
    masks[idx] = saved
    return ok


def maximalize_config(config: OctahedralConfiguration) -> OctahedralConfiguration:
    """Grow labels greedily, edges in symbol order and elements ascending.

    Each accepted element is kept permanently.  Sweeps repeat until one full
    pass adds nothing, which leaves a labeling no single element can extend.
    """
    if not validate_config(config):
        raise ValueError("cannot maximalize an invalid configuration")
    group = config.group
    masks = _masks(config)
    changed = True
    while changed:
        changed = False
        for sym in EDGE_SYMBOLS:
            idx = _EDGE_INDEX[sym]
            for element in range(group.order):
                if masks[idx] >> element & 1:
                    continue
                if _addition_ok(group, masks, sym, element):
                    masks[idx] |= 1 << element
                    changed = True
    labels = tuple(GroupSubset(group, m) for m in masks)
    return OctahedralConfiguration(group, labels)


def is_maximal_config(config: OctahedralConfiguration) -> bool:
    """True when no single element can be added to any label."""
    if not validate_config(config):
        raise ValueError("maximality probe requires a valid configuration")
    group = config.group
    masks = _masks(config)
    for sym in EDGE_SYMBOLS:
        idx = _EDGE_INDEX[sym]
        for element in range(group.order):
            if masks[idx] >> element & 1:
                continue
            if _addition_ok(group, masks, sym, element):
                return False
    return True


@dataclass(frozen=True)
class OctType:
    """Classification verdict with the witnesses needed to recheck it.

    tag            one of "minus1", "zero", "one", "twoA", "twoB".
    grey_faces     faces made of partial edges; for the two triangle tags both
                   faces are rotated so the shared edge comes first.
    anchor         element x anchoring the coset conditions (twoA, twoB).
    subgroup_pair  proper subgroups (K1, K2); K1 <= K2 for twoA.
    shift          auxiliary translation used by the twoA beat conditions.
    continuation   smaller trio carried by tags "one" and "twoA".
    """

    tag: str
    grey_faces: Tuple[Tuple[str, str, str], ...] = ()
    anchor: Optional[int] = None
    subgroup_pair: Optional[Tuple[Subgroup, Subgroup]] = None
    shift: Optional[int] = None
    continuation: Optional[Tuple[GroupSubset, GroupSubset, GroupSubset]] = None


class UnclassifiedConfigError(RuntimeError):
    """Raised when a maximal critical configuration matches no known shape."""

    def __init__(self, config: OctahedralConfiguration, reason: str) -> None:
        self.config = config
        self.reason = reason
        payload = json.dumps(config.to_json(), sort_keys=True)
        super().__init__(f"unclassified configuration ({reason}); counterexample candidate: {payload}")


def _square_signature(group: FiniteGroup, masks: Sequence[int]) -> Tuple[Tuple[int, int], ...]:
    sig = []
    for letter in "abc":
        symbols = [sym for sym in EDGE_SYMBOLS if sym[0] == letter]
        full = sum(1 for sym in symbols if _status(group, masks[_EDGE_INDEX[sym]]) == _FULL)
        sig.append((full, len(symbols) - full))
    return tuple(sorted(sig))


def _rotate_face(face: Tuple[str, str, str], first: str) -> Tuple[str, str, str]:
    k = face.index(first)
    return face[k:] + face[:k]


def _subgroup_mask(sub: Subgroup) -> int:
    return mask_of(sub.elements)


def _pure_beat_ok(
    group: FiniteGroup,
    amask: int,
    bmask: int,
    cmask: int,
    sub: Subgroup,
    anchor: int,
) -> bool:
    """Check that (A, B, C) with A a coset anchored at x collapses onto sub.

    After shifting by the anchor the first set must equal the subgroup, the
    second must have that subgroup as its exact left stabilizer, and the
    third must be the complement of the inverse of their product.
    """
    if bmask == 0 or cmask == 0:
        return False
    kmask = _subgroup_mask(sub)
    if amask != _left_translate(group, anchor, kmask):
        return False
    if any(_left_translate(group, k, bmask) != bmask for k in sub.elements):
        return False
    if any(_left_translate(group, g, bmask) == bmask for g in range(group.order) if g not in sub):
        return False
    full = (1 << group.order) - 1
    kb = product_mask(group, kmask, bmask)
    return _right_translate(group, cmask, anchor) == full ^ inverse_mask(group, kb)


def _impure_beat_continuation(
    group: FiniteGroup,
    amask: int,
    bmask: int,
    cmask: int,
    sub: Subgroup,
    anchor: int,
    shift: int,
) -> Optional[Tuple[int, int, int]]:
    """Continuation masks of (A, B, C) inside sub, or None if the shape fails.

    The translated triple (x^-1 A, B z^-1, z C x) must put its first set
    inside sub, keep the part of the second set outside sub stable under left
    multiplication by sub, agree with the complement identity away from sub,
    and meet sub in both the second and third set.
    """
    xi = int(group.inverses[anchor])
    zi = int(group.inverses[shift])
    kmask = _subgroup_mask(sub)
    a_sh = _left_translate(group, xi, amask)
    if a_sh == 0 or a_sh & ~kmask:
        return None
    b_sh = _right_translate(group, bmask, zi)
    c_sh = _right_translate(group, _left_translate(group, shift, cmask), anchor)
    outside = b_sh & ~kmask
    if outside and product_mask(group, kmask, outside) != outside:
        return None
    full = (1 << group.order) - 1
    ab = product_mask(group, a_sh, b_sh)
    if (c_sh ^ full ^ inverse_mask(group, ab)) & ~kmask:
        return None
    b_core = b_sh & kmask
    c_core = c_sh & kmask
    if b_core == 0 or c_core == 0:
        return None
    return (a_sh, b_core, c_core)


def _grey_face_data(
    config: OctahedralConfiguration,
) -> Tuple[List[str], List[Tuple[str, str, str]]]:
    group = config.group
    masks = _masks(config)
    grey_edges = [sym for sym in EDGE_SYMBOLS if _status(group, masks[_EDGE_INDEX[sym]]) == _PARTIAL]
    grey_set = set(grey_edges)
    grey_faces = [face for face in OCTAHEDRON_FACES if all(sym in grey_set for sym in face)]
    return grey_edges, grey_faces


def classify_config(config: OctahedralConfiguration) -> OctType:
    """Sort a maximal critical configuration into one of the five shapes.

    Raises ValueError when the input is invalid, extendable, or has
    nonpositive deficiency.  Raises UnclassifiedConfigError when the labeling
    matches none of the catalogued shapes; that error carries the full
    configuration so the case can be reported rather than misfiled.
    """
    if not validate_config(config):
        raise ValueError("classification requires a valid configuration")
    if not is_maximal_config(config):
        raise ValueError("classification requires a maximal configuration")
    if not config.is_critical:
        raise ValueError("classification requires positive deficiency")

    group = config.group
    masks = _masks(config)
    grey_edges, grey_faces = _grey_face_data(config)

    covered = {sym for face in grey_faces for sym in face}
    if set(grey_edges) - covered:
        raise UnclassifiedConfigError(config, "partial edge outside every partial face")

    if not grey_faces:
        signature = _square_signature(group, masks)
        if signature == _ZERO_SIGNATURE:
            return OctType(tag="zero")
        if signature in _MINUS1_SIGNATURES:
            return OctType(tag="minus1")
        raise UnclassifiedConfigError(config, f"unknown square signature {signature}")

    if len(grey_faces) == 1:
        face = grey_faces[0]
        cont = tuple(config.label(sym) for sym in face)
        delta = sum(sub.size for sub in cont) - group.order
        if delta != config.deficiency:
            raise UnclassifiedConfigError(config, "triangle deficiency mismatch")
        return OctType(tag="one", grey_faces=(face,), continuation=cont)

    if len(grey_faces) != 2:
        raise UnclassifiedConfigError(config, f"{len(grey_faces)} partial faces")
    shared = set(grey_faces[0]) & set(grey_faces[1])
    if len(shared) != 1:
        raise UnclassifiedConfigError(config, "partial faces do not share one edge")
    pivot = shared.pop()

    orderings = []
    for first, second in ((0, 1), (1, 0)):
        primary = _rotate_face(grey_faces[first], pivot)
        secondary = _rotate_face(grey_faces[second], pivot)
        orderings.append((primary, secondary))

    proper = [sub for sub in subgroups(group) if sub.order < group.order]

    for primary, secondary in orderings:
        a1 = masks[_EDGE_INDEX[primary[0]]]
        b1 = masks[_EDGE_INDEX[primary[1]]]
        c1 = masks[_EDGE_INDEX[primary[2]]]
        b2 = masks[_EDGE_INDEX[secondary[1]]]
        c2 = masks[_EDGE_INDEX[secondary[2]]]
        for low in proper:
            low_mask = _subgroup_mask(low)
            for high in proper:
                if not set(low.elements) <= set(high.elements):
                    continue
                high_mask = _subgroup_mask(high)
                for anchor in bits_iter(a1):
                    if a1 & ~_left_translate(group, anchor, low_mask):
                        continue
                    coset = _left_translate(group, anchor, high_mask)
                    if not _pure_beat_ok(group, coset, b2, c2, high, anchor):
                        continue
                    for shift in range(group.order):
                        cont = _impure_beat_continuation(group, a1, b1, c1, low, anchor, shift)
                        if cont is None:
                            continue
                        delta = sum(m.bit_count() for m in cont) - low.order
                        if delta != config.deficiency:
                            continue
                        return OctType(
                            tag="twoA",
                            grey_faces=(primary, secondary),
                            anchor=anchor,
                            subgroup_pair=(low, high),
                            shift=shift,
                            continuation=tuple(GroupSubset(group, m) for m in cont),
                        )

    for primary, secondary in orderings:
        a1 = masks[_EDGE_INDEX[primary[0]]]
        b1 = masks[_EDGE_INDEX[primary[1]]]
        c1 = masks[_EDGE_INDEX[primary[2]]]
        b2 = masks[_EDGE_INDEX[secondary[1]]]
        c2 = masks[_EDGE_INDEX[secondary[2]]]
        for low in proper:
            low_mask = _subgroup_mask(low)
            for high in proper:
                high_mask = _subgroup_mask(high)
                meet = low_mask & high_mask
                for anchor in bits_iter(a1):
                    if a1 != _left_translate(group, anchor, meet):
                        continue
                    if not _pure_beat_ok(
                        group, _left_translate(group, anchor, low_mask), b1, c1, low, anchor
                    ):
                        continue
                    if not _pure_beat_ok(
                        group, _left_translate(group, anchor, high_mask), b2, c2, high, anchor
                    ):
                        continue
                    return OctType(
                        tag="twoB",
                        grey_faces=(primary, secondary),
                        anchor=anchor,
                        subgroup_pair=(low, high),
                    )

    raise UnclassifiedConfigError(config, "no subgroup witnesses for a two triangle shape")


def verify_oct_type(config: OctahedralConfiguration, verdict: OctType) -> bool:
    """Recheck a classification verdict from its stored witnesses."""
    if not validate_config(config) or not is_maximal_config(config) or not config.is_critical:
        return False
    group = config.group
    masks = _masks(config)
    grey_edges, grey_faces = _grey_face_data(config)
    claimed = {frozenset(face) for face in verdict.grey_faces}
    actual = {frozenset(face) for face in grey_faces}

    if verdict.tag in ("minus1", "zero"):
        if grey_edges or claimed:
            return False
        signature = _square_signature(group, masks)
        if verdict.tag == "zero":
            return signature == _ZERO_SIGNATURE
        return signature in _MINUS1_SIGNATURES

    if verdict.tag == "one":
        if len(grey_faces) != 1 or claimed != actual or verdict.continuation is None:
            return False
        face = verdict.grey_faces[0]
        cont = tuple(config.label(sym) for sym in face)
        if cont != verdict.continuation:
            return False
        if any(sub.is_empty or sub.size == group.order for sub in cont):
            return False
        if not _face_ok(group, *(sub.bits for sub in cont)):
            return False
        return sum(sub.size for sub in cont) - group.order == config.deficiency

    if verdict.tag not in ("twoA", "twoB"):
        return False
    if len(grey_faces) != 2 or claimed != actual:
        return False
    if verdict.anchor is None or verdict.subgroup_pair is None:
        return False
    primary, secondary = verdict.grey_faces
    if set(primary) & set(secondary) != {primary[0]} or primary[0] != secondary[0]:
        return False
    low, high = verdict.subgroup_pair
    if low.order >= group.order or high.order >= group.order:
        return False
    a1 = masks[_EDGE_INDEX[primary[0]]]
    b1 = masks[_EDGE_INDEX[primary[1]]]
    c1 = masks[_EDGE_INDEX[primary[2]]]
    b2 = masks[_EDGE_INDEX[secondary[1]]]
    c2 = masks[_EDGE_INDEX[secondary[2]]]
    anchor = verdict.anchor
    if not a1 >> anchor & 1:
        return False

    if verdict.tag == "twoA":
        if verdict.shift is None or verdict.continuation is None:
            return False
        if not set(low.elements) <= set(high.elements):
            return False
        if a1 & ~_left_translate(group, anchor, _subgroup_mask(low)):
            return False
        coset = _left_translate(group, anchor, _subgroup_mask(high))
        if not _pure_beat_ok(group, coset, b2, c2, high, anchor):
            return False
        cont = _impure_beat_continuation(group, a1, b1, c1, low, anchor, verdict.shift)
        if cont is None:
            return False
        if tuple(GroupSubset(group, m) for m in cont) != verdict.continuation:
            return False
        return sum(m.bit_count() for m in cont) - low.order == config.deficiency

    meet = _subgroup_mask(low) & _subgroup_mask(high)
    if a1 != _left_translate(group, anchor, meet):
        return False
    if not _pure_beat_ok(group, _left_translate(group, anchor, _subgroup_mask(low)), b1, c1, low, anchor):
        return False
    return _pure_beat_ok(group, _left_translate(group, anchor, _subgroup_mask(high)), b2, c2, high, anchor)


_DFS_ORDER: Tuple[str, ...] = ("a1", "b1", "c1", "b2", "c4", "a2", "b4", "b3", "a3", "c3", "c2", "a4")


def enumerate_maximal_critical_configs(
    group: FiniteGroup,
    first_labels: Optional[Sequence[int]] = None,
) -> List[OctahedralConfiguration]:
    """All maximal critical configurations over a group of order at most 2.

    Runs a depth first sweep over every labeling, checking each face as soon
    as its last edge is assigned.  Larger groups blow the subset budget up
    too far; sample labelings and maximalize them instead.

    first_labels restricts the label of the first swept edge to the given
    masks, which slices the search space into disjoint shards.  Running one
    shard per mask and concatenating the results in mask order reproduces
    the unrestricted output exactly.
    """
    if group.order > 2:
        raise ValueError("exhaustive sweep supports order at most 2; sample and maximalize instead")
    order_idx = [_EDGE_INDEX[sym] for sym in _DFS_ORDER]
    position = {sym: k for k, sym in enumerate(_DFS_ORDER)}
    check_at: List[List[Tuple[str, str, str]]] = [[] for _ in _DFS_ORDER]
    for face in OCTAHEDRON_FACES:
        check_at[max(position[sym] for sym in face)].append(face)

    group_size = group.order
    floor = 6 * group_size
    masks = [0] * len(EDGE_SYMBOLS)
    found: List[OctahedralConfiguration] = []

    def leaf() -> None:
        if sum(m.bit_count() for m in masks) <= floor:
            return
        for sym in EDGE_SYMBOLS:
            idx = _EDGE_INDEX[sym]
            for element in range(group_size):
                if masks[idx] >> element & 1:
                    continue
                if _addition_ok(group, masks, sym, element):
                    return
        labels = tuple(GroupSubset(group, m) for m in masks)
        found.append(OctahedralConfiguration(group, labels))

    candidates_at_root: Tuple[int, ...]
    if first_labels is None:
        candidates_at_root = tuple(range(1 << group_size))
    else:
        candidates_at_root = tuple(first_labels)
        if any(m < 0 or m >= 1 << group_size for m in candidates_at_root):
            raise ValueError("first_labels must be masks over the group")

    def walk(depth: int) -> None:
        if depth == len(_DFS_ORDER):
            leaf()
            return
        idx = order_idx[depth]
        pool = candidates_at_root if depth == 0 else range(1 << group_size)
        for candidate in pool:
            masks[idx] = candidate
            if all(_face_ok(group, *_face_masks(masks, face)) for face in check_at[depth]):
                walk(depth + 1)
        masks[idx] = 0

    walk(0)
    return found


_VERTEX_GENERATORS: Tuple[Dict[str, str], ...] = (
    {"u": "u'", "u'": "u", "v": "v", "v'": "v'", "w": "w", "w'": "w'"},
    {"u": "u", "u'": "u'", "v": "v'", "v'": "v", "w": "w", "w'": "w'"},
    {"u": "u", "u'": "u'", "v": "v", "v'": "v'", "w": "w'", "w'": "w"},
    {"u": "v", "v": "w", "w": "u", "u'": "v'", "v'": "w'", "w'": "u'"},
)


def orientation_symmetries() -> Tuple[Dict[str, str], ...]:
    """Edge symbol permutations of the direction preserving symmetry group.

    Generated by the three antipodal swaps and the rotation cycling the three
    vertex axes; every member keeps each directed edge directed the same way,
    so labels transport without inversion.
    """
    pair_to_symbol = {ends: sym for sym, ends in OCTAHEDRON_EDGES.items()}
    vertices = {vertex for ends in OCTAHEDRON_EDGES.values() for vertex in ends}
    identity = {vertex: vertex for vertex in vertices}
    seen: Dict[Tuple[Tuple[str, str], ...], Dict[str, str]] = {tuple(sorted(identity.items())): identity}
    frontier = [identity]
    while frontier:
        base = frontier.pop()
        for gen in _VERTEX_GENERATORS:
            combo = {v: gen[base[v]] for v in base}
            key = tuple(sorted(combo.items()))
            if key not in seen:
                seen[key] = combo
                frontier.append(combo)
    perms = []
    for vmap in seen.values():
        perm = {}
        for sym, (tail, head) in OCTAHEDRON_EDGES.items():
            perm[sym] = pair_to_symbol[(vmap[tail], vmap[head])]
        perms.append(perm)
    perms.sort(key=lambda p: tuple(p[sym] for sym in EDGE_SYMBOLS))
    return tuple(perms)


def apply_symmetry(config: OctahedralConfiguration, perm: Mapping[str, str]) -> OctahedralConfiguration:
    """Transport labels along an edge symbol permutation."""
    moved = {perm[sym]: config.label(sym) for sym in EDGE_SYMBOLS}
    return OctahedralConfiguration.from_labels(config.group, moved)


def to_cayley_oct_chorus(config: OctahedralConfiguration):
    """Rank six incidence counterpart of a configuration.

    The six parts mirror the six vertices and the side subsets mirror the
    edge labels, inverted when read against an edge direction.  The part
    pairing groups the three antipodal vertex pairs.
    """
    from .incidence import cayley_chorus

    group = config.group
    lab = {sym: config.label(sym) for sym in EDGE_SYMBOLS}
    inv = {sym: lab[sym].inverse() for sym in EDGE_SYMBOLS}
    empty = GroupSubset(group, 0)
    matrix = [
        [empty, empty, lab["a1"], lab["a2"], inv["c1"], inv["c4"]],
        [empty, empty, lab["a4"], lab["a3"], inv["c2"], inv["c3"]],
        [inv["a1"], inv["a4"], empty, empty, lab["b1"], lab["b2"]],
        [inv["a2"], inv["a3"], empty, empty, lab["b4"], lab["b3"]],
        [lab["c1"], lab["c2"], inv["b1"], inv["b4"], empty, empty],
        [lab["c4"], lab["c3"], inv["b2"], inv["b3"], empty, empty],
    ]
    return cayley_chorus(group, matrix, partition=((0, 1), (2, 3), (4, 5)))
