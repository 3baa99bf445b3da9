"""Named graphs and the incidence structures they generate.

The catalog uses a fixed vertex numbering so that derived objects (edges,
paths, cycles, faces) have stable identities across runs:

* Tetrahedron, K4, K5, K6: vertices 0..n-1, every pair adjacent.
* K33: parts {0, 1, 2} and {3, 4, 5}.
* Prism: triangles (0, 1, 2) and (3, 4, 5), rungs i -- i+3.
* Cube: vertices 0..7 read as 3-bit strings, edges at Hamming distance 1.
* Octahedron: vertex i opposite vertex i+3, all other pairs adjacent.
* Petersen: outer cycle 0..4, spokes i -- i+5, inner star
  5+i -- 5+((i+2) mod 5).
* Dodecahedron: outer cycle 0..9, spokes i -- 10+i, inner star
  10+i -- 10+((i+2) mod 10).
* Icosahedron: apex 0, upper ring 1..5, lower ring 6..10, apex 11; upper
  vertex 1+i meets lower vertices 6+i and 6+((i+1) mod 5).

Faces are attached to the six graphs whose videos need them. For the four
polyhedra the shortest cycles double-cover the edges and form the unique
face set; Petersen and K6 each carry two edge-double-covers by shortest
cycles, and the attached one is the set containing the least cycle.

Edge cuts are measured by ``c(A)``, the number of edges leaving a vertex
subset A. Subsets with ``c(A) < 2d`` in a vertex- and edge-transitive
graph of degree d fall into six shapes, tested here in a fixed order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ._kernels import MAX_CUT_VERTICES, cut_profile
from .groups import FiniteGroup, _perm_group
from .incidence import DuetView, IncidenceChorus, TrioView

__all__ = [
    "DerivedSets",
    "EquitableRecord",
    "GraphAutomorphisms",
    "MAX_AUTOMORPHISM_VERTICES",
    "NAMED_GRAPH_NAMES",
    "SimpleGraph",
    "VIDEO_KINDS",
    "VideoSpec",
    "build_video",
    "cut_classify",
    "cycle_graph",
    "cycles_with_vertices",
    "derived_sets",
    "enumerate_small_cuts",
    "graph_automorphisms",
    "graphic_duet",
    "is_equitable",
    "line_graph",
    "named_graph",
    "paths_with_vertices",
]

MAX_AUTOMORPHISM_VERTICES = 20

Edge = Tuple[int, int]
CutOutcome = Union[int, str]


# ---------------------------------------------------------------------------
# the graph type


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected graph without loops or parallel edges.

    Vertices are 0..vertex_count-1; ``edges`` is sorted lexicographically
    and ``adjacency[v]`` is the neighbour bitmask of v. Instances are
    immutable and hashable, so expensive per-graph computations can be
    cached on the object itself.
    """

    vertex_count: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[int, ...]
    name: Optional[str] = None
    faces: Optional[Tuple[Tuple[int, ...], ...]] = field(default=None, compare=False)

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[Sequence[int]],
        name: Optional[str] = None,
        faces: Optional[Tuple[Tuple[int, ...], ...]] = None,
    ) -> "SimpleGraph":
        if vertex_count <= 0:
            raise ValueError(f"vertex count must be positive, got {vertex_count}")
        seen = set()
        for pair in edges:
            pair = tuple(pair)
            if len(pair) != 2:
                raise ValueError(f"edge {pair!r} is not a pair")
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range")
            seen.add((min(u, v), max(u, v)))
        ordered = tuple(sorted(seen))
        adjacency = [0] * vertex_count
        for u, v in ordered:
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(vertex_count, ordered, tuple(adjacency), name, faces)

    @classmethod
    def from_json(cls, text: str) -> "SimpleGraph":
        """Parse the interchange form {"vertices": n, "edges": [[u,v],...]}."""
        data = json.loads(text)
        return cls.from_edges(int(data["vertices"]), data["edges"])

    def to_json(self) -> str:
        return json.dumps(
            {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}
        )

    def __str__(self) -> str:
        label = self.name or "graph"
        return f"{label} on {self.vertex_count} vertices with {len(self.edges)} edges"

    # -- local structure

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(_bits(self.adjacency[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree_of(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    @property
    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.adjacency)

    @property
    def is_regular(self) -> bool:
        return len(set(self.degree_sequence)) == 1

    @property
    def degree(self) -> int:
        degrees = set(self.degree_sequence)
        if len(degrees) != 1:
            raise ValueError("degree is only defined for regular graphs")
        return degrees.pop()

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def is_connected(self) -> bool:
        if self.vertex_count == 1:
            return True
        reached = 1
        frontier = 1
        while frontier:
            grown = reached
            for v in _bits(frontier):
                grown |= self.adjacency[v]
            frontier = grown & ~reached
            reached = grown
        return reached == (1 << self.vertex_count) - 1

    @cached_property
    def girth(self) -> int:
        """Length of a shortest cycle, or 0 when the graph is acyclic."""
        best = 0
        for start in range(self.vertex_count):
            dist = {start: 0}
            parent = {start: -1}
            queue = [start]
            while queue:
                layer = []
                for v in queue:
                    for w in _bits(self.adjacency[v]):
                        if w not in dist:
                            dist[w] = dist[v] + 1
                            parent[w] = v
                            layer.append(w)
                        elif w != parent[v]:
                            cycle = dist[v] + dist[w] + 1
                            if best == 0 or cycle < best:
                                best = cycle
                queue = layer
        return best

    # -- subsets and cuts

    def vertex_mask(self, subset: Union[int, Iterable[int]]) -> int:
        if isinstance(subset, int):
            mask = subset
        else:
            mask = 0
            for v in subset:
                mask |= 1 << int(v)
        if mask < 0 or mask >> self.vertex_count:
            raise ValueError("subset leaves the vertex range")
        return mask

    def cut_size(self, subset: Union[int, Iterable[int]]) -> int:
        """Number of edges with exactly one endpoint in the subset."""
        mask = self.vertex_mask(subset)
        return sum((self.adjacency[v] & ~mask).bit_count() for v in _bits(mask))

    def boundary_edges(self, subset: Union[int, Iterable[int]]) -> Tuple[Edge, ...]:
        mask = self.vertex_mask(subset)
        out = []
        for v in _bits(mask):
            for w in _bits(self.adjacency[v] & ~mask):
                out.append((min(v, w), max(v, w)))
        return tuple(sorted(out))

    def induced_edge_count(self, subset: Union[int, Iterable[int]]) -> int:
        mask = self.vertex_mask(subset)
        return sum((self.adjacency[v] & mask).bit_count() for v in _bits(mask)) // 2


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# the catalog


NAMED_GRAPH_NAMES = (
    "Tetrahedron",
    "Cube",
    "Octahedron",
    "K33",
    "K4",
    "K5",
    "K6",
    "Prism",
    "Petersen",
    "Dodecahedron",
    "Icosahedron",
)

_FACED_NAMES = ("Cube", "Octahedron", "Dodecahedron", "Icosahedron", "Petersen", "K6")


def _complete_edges(n: int) -> List[Edge]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _catalog_edges(name: str) -> Tuple[int, List[Edge]]:
    if name in ("Tetrahedron", "K4"):
        return 4, _complete_edges(4)
    if name == "K5":
        return 5, _complete_edges(5)
    if name == "K6":
        return 6, _complete_edges(6)
    if name == "K33":
        return 6, [(u, 3 + v) for u in range(3) for v in range(3)]
    if name == "Prism":
        return 6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)]
    if name == "Cube":
        return 8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    if name == "Octahedron":
        return 6, [(u, v) for u, v in _complete_edges(6) if v - u != 3]
    if name == "Petersen":
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return 10, edges
    if name == "Dodecahedron":
        edges = [(i, (i + 1) % 10) for i in range(10)]
        edges += [(i, i + 10) for i in range(10)]
        edges += [(10 + i, 10 + (i + 2) % 10) for i in range(10)]
        return 20, edges
    if name == "Icosahedron":
        edges = [(0, 1 + i) for i in range(5)]
        edges += [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
        edges += [(11, 6 + i) for i in range(5)]
        edges += [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
        edges += [(1 + i, 6 + i) for i in range(5)]
        edges += [(1 + i, 6 + (i + 1) % 5) for i in range(5)]
        return 12, edges
    raise ValueError(f"unknown graph name {name!r}")


@lru_cache(maxsize=None)
def named_graph(name: str) -> SimpleGraph:
    """Build a catalog graph by name, with faces attached where defined."""
    n, edges = _catalog_edges(name)
    graph = SimpleGraph.from_edges(n, edges, name=name)
    if name in _FACED_NAMES:
        graph = SimpleGraph.from_edges(n, edges, name=name, faces=_canonical_faces(graph))
    return graph


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def line_graph(graph: SimpleGraph) -> SimpleGraph:
    """Graph on the edges, joining pairs that share an endpoint."""
    pairs = []
    for i, (u, v) in enumerate(graph.edges):
        for j in range(i + 1, len(graph.edges)):
            x, y = graph.edges[j]
            if x in (u, v) or y in (u, v):
                pairs.append((i, j))
    name = f"L({graph.name})" if graph.name else None
    return SimpleGraph.from_edges(len(graph.edges), pairs, name=name)


# ---------------------------------------------------------------------------
# paths, cycles, and faces


def paths_with_vertices(graph: SimpleGraph, m: int) -> Tuple[Tuple[int, ...], ...]:
    """All paths on m vertices, one orientation per path (the lesser one)."""
    if m < 1:
        raise ValueError(f"a path needs at least one vertex, got {m}")
    found = set()

    def extend(path: Tuple[int, ...], used: int) -> None:
        if len(path) == m:
            found.add(min(path, path[::-1]))
            return
        for w in _bits(graph.adjacency[path[-1]] & ~used):
            extend(path + (w,), used | (1 << w))

    for v in range(graph.vertex_count):
        extend((v,), 1 << v)
    return tuple(sorted(found))


def cycles_with_vertices(graph: SimpleGraph, m: int) -> Tuple[Tuple[int, ...], ...]:
    """All cycles on m vertices in canonical orientation.

    A canonical cycle starts at its least vertex and proceeds toward the
    smaller of that vertex's two cycle neighbours.
    """
    if m < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {m}")
    found = []

    def extend(path: Tuple[int, ...], used: int) -> None:
        if len(path) == m:
            if graph.has_edge(path[-1], path[0]) and path[1] < path[-1]:
                found.append(path)
            return
        for w in _bits(graph.adjacency[path[-1]] & ~used):
            if w > path[0]:
                extend(path + (w,), used | (1 << w))

    for v in range(graph.vertex_count):
        extend((v,), 1 << v)
    return tuple(sorted(found))


def _canonical_cycle(seq: Sequence[int]) -> Tuple[int, ...]:
    m = len(seq)
    best = None
    for base in (tuple(seq), tuple(reversed(seq))):
        doubled = base + base
        for r in range(m):
            cand = doubled[r : r + m]
            if best is None or cand < best:
                best = cand
    return best


def _cycle_edges(cycle: Sequence[int]) -> Tuple[Edge, ...]:
    m = len(cycle)
    out = []
    for i in range(m):
        u, v = cycle[i], cycle[(i + 1) % m]
        out.append((min(u, v), max(u, v)))
    return tuple(sorted(out))


def _face_sets(graph: SimpleGraph) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    """All sets of shortest cycles covering every edge exactly twice."""
    g = graph.girth
    if g == 0:
        return ()
    cycles = cycles_with_vertices(graph, g)
    total = 2 * len(graph.edges)
    if total % g:
        return ()
    want = total // g
    edge_lists = [
        tuple(graph.edge_index[e] for e in _cycle_edges(c)) for c in cycles
    ]
    counts = [0] * len(graph.edges)
    solutions: List[Tuple[Tuple[int, ...], ...]] = []

    def search(start: int, chosen: List[int]) -> None:
        if len(chosen) == want:
            if all(c == 2 for c in counts):
                solutions.append(tuple(cycles[i] for i in chosen))
            return
        if len(cycles) - start < want - len(chosen):
            return
        for i in range(start, len(cycles)):
            if all(counts[e] < 2 for e in edge_lists[i]):
                for e in edge_lists[i]:
                    counts[e] += 1
                chosen.append(i)
                search(i + 1, chosen)
                chosen.pop()
                for e in edge_lists[i]:
                    counts[e] -= 1

    search(0, [])
    return tuple(solutions)


def _canonical_faces(graph: SimpleGraph) -> Tuple[Tuple[int, ...], ...]:
    """The attached face set: the lexicographically least edge-double-cover."""
    sets = _face_sets(graph)
    if not sets:
        raise ValueError("graph has no edge-double-cover by shortest cycles")
    return min(sets)


# ---------------------------------------------------------------------------
# automorphisms and isomorphisms


@dataclass(frozen=True)
class GraphAutomorphisms:
    """The full automorphism group of a graph, acting by vertex permutations.

    ``vertex_perms[i]`` is the permutation carried by group element i, with
    element 0 the identity. Transitivity flags and stabilizer orders refer
    to vertex 0, edge 0, and the arc along edge 0.
    """

    group: FiniteGroup
    vertex_perms: Tuple[Tuple[int, ...], ...]
    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool
    vertex_stabilizer_order: int
    edge_stabilizer_order: int

    @property
    def order(self) -> int:
        return self.group.order


def _assignment_order(graph: SimpleGraph) -> List[int]:
    order: List[int] = []
    seen = 0
    for root in range(graph.vertex_count):
        if seen >> root & 1:
            continue
        queue = [root]
        seen |= 1 << root
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in _bits(graph.adjacency[v] & ~seen):
                seen |= 1 << w
                queue.append(w)
    return order


def _isomorphisms(
    source: SimpleGraph, target: SimpleGraph, first_only: bool = False
) -> List[Tuple[int, ...]]:
    """Vertex bijections carrying source edges exactly onto target edges."""
    n = source.vertex_count
    if n != target.vertex_count or len(source.edges) != len(target.edges):
        return []
    if sorted(source.degree_sequence) != sorted(target.degree_sequence):
        return []
    order = _assignment_order(source)
    image = [-1] * n
    used = [False] * n
    found: List[Tuple[int, ...]] = []

    def assign(idx: int) -> bool:
        if idx == n:
            found.append(tuple(image))
            return first_only
        v = order[idx]
        deg = source.degree_of(v)
        for w in range(n):
            if used[w] or target.degree_of(w) != deg:
                continue
            ok = True
            for u in order[:idx]:
                if source.has_edge(v, u) != target.has_edge(w, image[u]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if assign(idx + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    assign(0)
    return found


def _is_isomorphic(source: SimpleGraph, target: SimpleGraph) -> bool:
    return bool(_isomorphisms(source, target, first_only=True))


@lru_cache(maxsize=None)
def graph_automorphisms(graph: SimpleGraph) -> GraphAutomorphisms:
    """Compute the automorphism group by pruned backtracking."""
    if graph.vertex_count > MAX_AUTOMORPHISM_VERTICES:
        raise ValueError(
            f"automorphism search capped at {MAX_AUTOMORPHISM_VERTICES} vertices,"
            f" got {graph.vertex_count}"
        )
    perms = sorted(_isomorphisms(graph, graph))
    identity = tuple(range(graph.vertex_count))
    if perms[0] != identity:
        raise RuntimeError("identity permutation missing from automorphism search")
    group = _perm_group(perms)
    vertex_orbit = {p[0] for p in perms}
    vertex_transitive = len(vertex_orbit) == graph.vertex_count
    if graph.edges:
        u0, v0 = graph.edges[0]
        edge_orbit = {(min(p[u0], p[v0]), max(p[u0], p[v0])) for p in perms}
        arc_orbit = {(p[u0], p[v0]) for p in perms} | {(p[v0], p[u0]) for p in perms}
        edge_transitive = len(edge_orbit) == len(graph.edges)
        arc_transitive = len(arc_orbit) == 2 * len(graph.edges)
        edge_stab = sum(
            1 for p in perms if (min(p[u0], p[v0]), max(p[u0], p[v0])) == (u0, v0)
        )
    else:
        edge_transitive = arc_transitive = True
        edge_stab = len(perms)
    vertex_stab = sum(1 for p in perms if p[0] == 0)
    return GraphAutomorphisms(
        group=group,
        vertex_perms=tuple(perms),
        vertex_transitive=vertex_transitive,
        edge_transitive=edge_transitive,
        arc_transitive=arc_transitive,
        vertex_stabilizer_order=vertex_stab,
        edge_stabilizer_order=edge_stab,
    )


# ---------------------------------------------------------------------------
# equitable graphs


@dataclass(frozen=True)
class EquitableRecord:
    """Shortest-cycle load per edge: the common count s, or a witness pair
    of edges carrying different counts."""

    degree: int
    girth: int
    cycles_per_edge: Optional[int]
    witness: Optional[Tuple[Edge, Edge]]

    @property
    def equitable(self) -> bool:
        return self.cycles_per_edge is not None


def is_equitable(graph: SimpleGraph) -> EquitableRecord:
    """Check whether every edge lies on the same number of shortest cycles."""
    degree = graph.degree
    g = graph.girth
    if g == 0:
        raise ValueError("equitability needs a cycle")
    counts = [0] * len(graph.edges)
    for cycle in cycles_with_vertices(graph, g):
        for e in _cycle_edges(cycle):
            counts[graph.edge_index[e]] += 1
    lo = min(range(len(counts)), key=lambda i: counts[i])
    hi = max(range(len(counts)), key=lambda i: counts[i])
    if counts[lo] == counts[hi]:
        return EquitableRecord(degree, g, counts[lo], None)
    return EquitableRecord(degree, g, None, (graph.edges[lo], graph.edges[hi]))


# ---------------------------------------------------------------------------
# derived object sets


@dataclass(frozen=True)
class DerivedSets:
    """Edge-level companions of a graph: its line graph, 3-vertex paths,
    shortest cycles, and every face set among those cycles."""

    line_graph: SimpleGraph
    p3: Tuple[Tuple[int, int, int], ...]
    girth_cycles: Tuple[Tuple[int, ...], ...]
    face_sets: Tuple[Tuple[Tuple[int, ...], ...], ...]


def derived_sets(graph: SimpleGraph) -> DerivedSets:
    g = graph.girth
    cycles = cycles_with_vertices(graph, g) if g else ()
    return DerivedSets(
        line_graph=line_graph(graph),
        p3=paths_with_vertices(graph, 3),
        girth_cycles=cycles,
        face_sets=_face_sets(graph),
    )


# ---------------------------------------------------------------------------
# small edge cuts


def _induced_degrees(graph: SimpleGraph, mask: int) -> List[int]:
    return [(graph.adjacency[v] & mask).bit_count() for v in _bits(mask)]


def _induced_connected(graph: SimpleGraph, mask: int) -> bool:
    low = mask & -mask
    reached = low
    frontier = low
    while frontier:
        grown = reached
        for v in _bits(frontier):
            grown |= graph.adjacency[v] & mask
        frontier = grown & ~reached
        reached = grown
    return reached == mask


def _induced_is_path(graph: SimpleGraph, mask: int) -> bool:
    size = mask.bit_count()
    if not _induced_connected(graph, mask):
        return False
    if graph.induced_edge_count(mask) != size - 1:
        return False
    return all(d <= 2 for d in _induced_degrees(graph, mask))


def _induced_is_cycle(graph: SimpleGraph, mask: int) -> bool:
    return _induced_connected(graph, mask) and all(
        d == 2 for d in _induced_degrees(graph, mask)
    )


def _is_cycle_graph(graph: SimpleGraph) -> bool:
    return (
        graph.is_connected
        and graph.is_regular
        and graph.vertex_count >= 3
        and graph.degree == 2
    )


@lru_cache(maxsize=None)
def _is_named_six(graph: SimpleGraph) -> bool:
    """Isomorphic to one of the six graphs with shortest-cycle outcomes."""
    signature = (graph.vertex_count, graph.degree_sequence[0], graph.girth)
    for name in _FACED_NAMES:
        reference = named_graph(name)
        if signature == (
            reference.vertex_count,
            reference.degree_sequence[0],
            reference.girth,
        ) and _is_isomorphic(graph, reference):
            return True
    return False


@lru_cache(maxsize=None)
def _is_line_of_girth4_cubic(graph: SimpleGraph) -> bool:
    """Membership test for line graphs of cubic graphs with girth >= 4.

    Such a graph is 4-regular with every edge on exactly one triangle, and
    contracting each triangle to a point recovers the cubic base graph.
    """
    if not (graph.is_regular and graph.degree == 4 and graph.girth == 3):
        return False
    triangles = cycles_with_vertices(graph, 3)
    per_edge = [0] * len(graph.edges)
    for t in triangles:
        for e in _cycle_edges(t):
            per_edge[graph.edge_index[e]] += 1
    if any(c != 1 for c in per_edge):
        return False
    base_edges = []
    for i in range(len(triangles)):
        set_i = set(triangles[i])
        for j in range(i + 1, len(triangles)):
            if set_i & set(triangles[j]):
                base_edges.append((i, j))
    base = SimpleGraph.from_edges(len(triangles), base_edges)
    if not (base.is_regular and base.degree == 3 and base.girth >= 4):
        return False
    return _is_isomorphic(line_graph(base), graph)


def _require_transitive(graph: SimpleGraph) -> GraphAutomorphisms:
    auts = graph_automorphisms(graph)
    if not (auts.vertex_transitive and auts.edge_transitive):
        raise ValueError("graph must be vertex- and edge-transitive")
    return auts


def cut_classify(graph: SimpleGraph, subset: Union[int, Iterable[int]]) -> CutOutcome:
    """Classify a small edge cut into one of six shapes, or report "large".

    Shapes are tested in a fixed order on the subgraph induced by the
    subset: single vertex, single edge, path inside a cycle graph, 2-edge
    path in a cubic graph, triangle in a line graph of a girth-4 cubic
    graph, and shortest cycle in one of the six faced catalog graphs.
    """
    if not graph.is_connected:
        raise ValueError("cut classification needs a connected graph")
    _require_transitive(graph)
    mask = graph.vertex_mask(subset)
    size = mask.bit_count()
    if size == 0:
        raise ValueError("subset must be nonempty")
    if 2 * size > graph.vertex_count:
        raise ValueError("subset may hold at most half the vertices")
    d = graph.degree
    if graph.cut_size(mask) >= 2 * d:
        return "large"
    if size == 1:
        return 1
    inner = graph.induced_edge_count(mask)
    if size == 2 and inner == 1:
        return 2
    if _is_cycle_graph(graph) and _induced_is_path(graph, mask):
        return 3
    if d == 3 and size == 3 and inner == 2:
        return 4
    if size == 3 and inner == 3 and _is_line_of_girth4_cubic(graph):
        return 5
    if size == graph.girth and _induced_is_cycle(graph, mask) and _is_named_six(graph):
        return 6
    raise RuntimeError(f"small cut {tuple(_bits(mask))} matches no known shape")


def enumerate_small_cuts(
    graph: SimpleGraph,
) -> List[Tuple[Tuple[int, ...], CutOutcome]]:
    """All subsets of at most half the vertices whose cut is below twice
    the degree, each with its classified shape. This sweep is the oracle
    behind the cut census."""
    if graph.vertex_count > MAX_CUT_VERTICES:
        raise ValueError(
            f"cut enumeration capped at {MAX_CUT_VERTICES} vertices,"
            f" got {graph.vertex_count}"
        )
    if not graph.is_connected:
        raise ValueError("cut enumeration needs a connected graph")
    _require_transitive(graph)
    bound = 2 * graph.degree
    profile = cut_profile(graph.adjacency)
    half = graph.vertex_count // 2
    out = []
    for mask in range(1, 1 << graph.vertex_count):
        if profile[mask] < bound and mask.bit_count() <= half:
            out.append((tuple(_bits(mask)), cut_classify(graph, mask)))
    out.sort(key=lambda item: (len(item[0]), item[0]))
    return out


# ---------------------------------------------------------------------------
# videos


VIDEO_KINDS = (
    "EVE",
    "P3VE",
    "P3EV",
    "CubeOct_VEF",
    "Dodec_FVE",
    "DodecIcos_VEF",
    "Icos_FVE",
    "Petersen_C5EV",
    "PetersenK6_FEV",
    "K6_C3EV",
)

_VIDEO_PARTS = {
    "EVE": ("E", "V", "E"),
    "P3VE": ("P3", "V", "E"),
    "P3EV": ("P3", "E", "V"),
    "CubeOct_VEF": ("V", "E", "F"),
    "Dodec_FVE": ("F", "V", "E"),
    "DodecIcos_VEF": ("V", "E", "F"),
    "Icos_FVE": ("F", "V", "E"),
    "Petersen_C5EV": ("C5", "E", "V"),
    "PetersenK6_FEV": ("F", "E", "V"),
    "K6_C3EV": ("C3", "E", "V"),
}

_VIDEO_HOSTS = {
    "CubeOct_VEF": ("Cube", "Octahedron"),
    "Dodec_FVE": ("Dodecahedron",),
    "DodecIcos_VEF": ("Dodecahedron", "Icosahedron"),
    "Icos_FVE": ("Icosahedron",),
    "Petersen_C5EV": ("Petersen",),
    "PetersenK6_FEV": ("Petersen", "K6"),
    "K6_C3EV": ("K6",),
}


@dataclass(frozen=True)
class VideoSpec:
    """A choice of video kind together with the hosting graph."""

    kind: str
    graph: SimpleGraph

    def __post_init__(self) -> None:
        if self.kind not in VIDEO_KINDS:
            raise ValueError(f"unknown video kind {self.kind!r}")


def _video_objects(graph: SimpleGraph, label: str) -> Tuple:
    if label == "V":
        return tuple(range(graph.vertex_count))
    if label == "E":
        return graph.edges
    if label == "P3":
        return paths_with_vertices(graph, 3)
    if label in ("C3", "C5"):
        return cycles_with_vertices(graph, int(label[1]))
    if label == "F":
        return graph.faces if graph.faces is not None else _canonical_faces(graph)
    raise ValueError(f"unknown part label {label!r}")


def _natural_incident(label_a: str, obj_a, label_b: str, obj_b) -> bool:
    if label_a != "V" and label_b == "V":
        return _natural_incident(label_b, obj_b, label_a, obj_a)
    if label_a not in ("V", "E") and label_b == "E":
        return _natural_incident(label_b, obj_b, label_a, obj_a)
    if label_a == "V":
        if label_b == "E":
            return obj_a in obj_b
        return obj_a in obj_b
    if label_a == "E":
        if label_b == "P3":
            a, b, c = obj_b
            return obj_a in ((min(a, b), max(a, b)), (min(b, c), max(b, c)))
        return obj_a in _cycle_edges(obj_b)
    raise ValueError(f"no natural incidence between {label_a!r} and {label_b!r}")


def _object_image(label: str, obj, perm: Sequence[int]):
    if label == "V":
        return perm[obj]
    if label == "E":
        u, v = perm[obj[0]], perm[obj[1]]
        return (min(u, v), max(u, v))
    if label == "P3":
        seq = tuple(perm[x] for x in obj)
        return min(seq, seq[::-1])
    return _canonical_cycle([perm[x] for x in obj])


def _check_video_bounds(spec: VideoSpec) -> None:
    graph = spec.graph
    if not graph.is_regular:
        raise ValueError("videos need a regular graph")
    if spec.kind == "EVE":
        if graph.degree < 3 or graph.vertex_count < 5:
            raise ValueError("an edge-vertex-edge video needs degree >= 3 and >= 5 vertices")
        return
    if spec.kind in ("P3VE", "P3EV"):
        if graph.degree != 3 or graph.vertex_count < 6:
            raise ValueError("a path video needs a cubic graph with >= 6 vertices")
        return
    hosts = _VIDEO_HOSTS[spec.kind]
    if not any(_is_isomorphic(graph, named_graph(name)) for name in hosts):
        raise ValueError(f"video kind {spec.kind!r} hosts only {', '.join(hosts)}")


def build_video(spec: VideoSpec) -> TrioView:
    """Assemble the rank-3 incidence structure for a video kind.

    The two marked sides carry the natural incidence; the remaining side
    joins objects that share no common neighbour in the middle set. The
    acting group is the full automorphism group, cut down to the face-set
    stabilizer when the host graph carries two face sets.
    """
    _check_video_bounds(spec)
    graph = spec.graph
    auts = _require_transitive(graph)
    labels = _VIDEO_PARTS[spec.kind]
    parts = [_video_objects(graph, label) for label in labels]
    perms = list(auts.vertex_perms)
    if "F" in labels:
        face_part = parts[labels.index("F")]
        face_set = set(face_part)
        kept = [
            p
            for p in perms
            if {_object_image("F", f, p) for f in face_part} == face_set
        ]
        if len(kept) < len(perms):
            perms = kept
            group = _perm_group(perms)
        else:
            group = auts.group
    else:
        group = auts.group

    indexes = [{obj: i for i, obj in enumerate(part)} for part in parts]
    sizes = tuple(len(part) for part in parts)
    incidences = []
    mid_x = [0] * sizes[0]
    mid_z = [0] * sizes[2]
    for i, j in ((0, 1), (1, 2)):
        for p, a in enumerate(parts[i]):
            for q, b in enumerate(parts[j]):
                if _natural_incident(labels[i], a, labels[j], b):
                    incidences.append((i, p, j, q))
                    if i == 0:
                        mid_x[p] |= 1 << q
                    else:
                        mid_z[q] |= 1 << p
    for p in range(sizes[0]):
        for r in range(sizes[2]):
            if mid_x[p] & mid_z[r] == 0:
                incidences.append((0, p, 2, r))

    action = tuple(
        tuple(
            tuple(indexes[i][_object_image(labels[i], obj, perm)] for obj in parts[i])
            for i in range(3)
        )
        for perm in perms
    )
    chorus = IncidenceChorus.assemble(group, sizes, incidences, action, verify=True)
    return chorus.trio()


def graphic_duet(graph: SimpleGraph) -> DuetView:
    """The vertex-edge incidence duet under the full automorphism group."""
    auts = _require_transitive(graph)
    sizes = (graph.vertex_count, len(graph.edges))
    incidences = []
    for q, (u, v) in enumerate(graph.edges):
        incidences.append((0, u, 1, q))
        incidences.append((0, v, 1, q))
    action = tuple(
        (
            tuple(perm),
            tuple(
                graph.edge_index[_object_image("E", e, perm)] for e in graph.edges
            ),
        )
        for perm in auts.vertex_perms
    )
    chorus = IncidenceChorus.assemble(auts.group, sizes, incidences, action, verify=True)
    return chorus.side(0, 1)
