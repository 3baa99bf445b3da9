"""Catalog graphs, small edge cuts, equitable counts, and videos."""

import json
from collections import Counter
from fractions import Fraction

import pytest

from triolab import (
    SimpleGraph,
    VideoSpec,
    build_video,
    cut_classify,
    cycle_graph,
    cycles_with_vertices,
    derived_sets,
    enumerate_small_cuts,
    graph_automorphisms,
    graphic_duet,
    is_equitable,
    line_graph,
    named_graph,
    paths_with_vertices,
    trio_deficiency_inc,
    trio_is_maximal,
)
from triolab._kernels import cut_profile
from triolab.graphs import (
    NAMED_GRAPH_NAMES,
    VIDEO_KINDS,
    _face_sets,
    _is_isomorphic,
    _is_line_of_girth4_cubic,
)

# Catalog constants below were computed once by the oracles in this file
# (the exhaustive cut sweep, the automorphism search, the cycle census)
# and then frozen; the tests recompute everything and compare.

CATALOG_SHAPE = {
    # name: (vertices, edges, degree, girth)
    "Tetrahedron": (4, 6, 3, 3),
    "Cube": (8, 12, 3, 4),
    "Octahedron": (6, 12, 4, 3),
    "K33": (6, 9, 3, 4),
    "K4": (4, 6, 3, 3),
    "K5": (5, 10, 4, 3),
    "K6": (6, 15, 5, 3),
    "Prism": (6, 9, 3, 3),
    "Petersen": (10, 15, 3, 5),
    "Dodecahedron": (20, 30, 3, 5),
    "Icosahedron": (12, 30, 5, 3),
}

AUT_ORDERS = {
    "Tetrahedron": 24,
    "Cube": 48,
    "Octahedron": 48,
    "K33": 72,
    "K4": 24,
    "K5": 120,
    "K6": 720,
    "Prism": 12,
    "Petersen": 120,
    "Dodecahedron": 120,
    "Icosahedron": 120,
}

FACE_COUNTS = {
    "Cube": 6,
    "Octahedron": 8,
    "Dodecahedron": 12,
    "Icosahedron": 20,
    "Petersen": 6,
    "K6": 10,
}

EQUITABLE_CHART = {
    # name: (degree, girth, shortest cycles per edge)
    "Tetrahedron": (3, 3, 2),
    "Cube": (3, 4, 2),
    "K33": (3, 4, 4),
    "Octahedron": (4, 3, 2),
    "K5": (4, 3, 3),
    "Dodecahedron": (3, 5, 2),
    "Petersen": (3, 5, 4),
    "Icosahedron": (5, 3, 2),
    "K6": (5, 3, 4),
}

CUT_CENSUS = {
    # name: {outcome: count of qualifying subsets}
    "K4": {1: 4, 2: 6},
    "K5": {1: 5, 2: 10},
    "K6": {1: 6, 2: 15, 6: 20},
    "K33": {1: 6, 2: 9, 4: 18},
    "Cube": {1: 8, 2: 12, 4: 24, 6: 6},
    "Octahedron": {1: 6, 2: 12, 6: 8},
    "Petersen": {1: 10, 2: 15, 4: 30, 6: 12},
    "Icosahedron": {1: 12, 2: 30, 6: 20},
    "Dodecahedron": {1: 20, 2: 30, 4: 60, 6: 12},
}

VIDEO_CATALOG = {
    # (kind, name): (sizes, group order, deficiency)
    ("EVE", "Cube"): ((12, 8, 12), 48, 4),
    ("EVE", "Octahedron"): ((12, 6, 12), 48, 4),
    ("EVE", "K33"): ((9, 6, 9), 72, 8),
    ("EVE", "K5"): ((10, 5, 10), 120, 12),
    ("EVE", "K6"): ((15, 6, 15), 720, 48),
    ("EVE", "Petersen"): ((15, 10, 15), 120, 8),
    ("EVE", "Dodecahedron"): ((30, 20, 30), 120, 4),
    ("EVE", "Icosahedron"): ((30, 12, 30), 120, 4),
    ("P3VE", "Cube"): ((24, 8, 12), 48, 2),
    ("P3VE", "K33"): ((18, 6, 9), 72, 4),
    ("P3VE", "Petersen"): ((30, 10, 15), 120, 4),
    ("P3VE", "Dodecahedron"): ((60, 20, 30), 120, 2),
    ("P3EV", "Cube"): ((24, 12, 8), 48, 2),
    ("P3EV", "K33"): ((18, 9, 6), 72, 4),
    ("P3EV", "Petersen"): ((30, 15, 10), 120, 4),
    ("P3EV", "Dodecahedron"): ((60, 30, 20), 120, 2),
    ("CubeOct_VEF", "Cube"): ((8, 12, 6), 48, 4),
    ("CubeOct_VEF", "Octahedron"): ((6, 12, 8), 48, 4),
    ("Dodec_FVE", "Dodecahedron"): ((12, 20, 30), 120, 2),
    ("DodecIcos_VEF", "Dodecahedron"): ((20, 30, 12), 120, 2),
    ("DodecIcos_VEF", "Icosahedron"): ((12, 30, 20), 120, 2),
    ("Icos_FVE", "Icosahedron"): ((20, 12, 30), 120, 2),
    ("Petersen_C5EV", "Petersen"): ((12, 15, 10), 120, 4),
    ("PetersenK6_FEV", "Petersen"): ((6, 15, 10), 60, 2),
    ("PetersenK6_FEV", "K6"): ((10, 15, 6), 60, 2),
    ("K6_C3EV", "K6"): ((20, 15, 6), 720, 24),
}

_VIDEO_WITNESS_LABEL = {
    "EVE": "E",
    "P3VE": "P3",
    "P3EV": "P3",
    "CubeOct_VEF": "F",
    "Dodec_FVE": "F",
    "DodecIcos_VEF": "F",
    "Icos_FVE": "F",
    "Petersen_C5EV": "C5",
    "PetersenK6_FEV": "F",
    "K6_C3EV": "C3",
}


def _witness_vertices(kind, graph):
    label = _VIDEO_WITNESS_LABEL[kind]
    if label == "E":
        return graph.edges[0]
    if label == "P3":
        return paths_with_vertices(graph, 3)[0]
    if label in ("C3", "C5"):
        return cycles_with_vertices(graph, int(label[1]))[0]
    return graph.faces[0]


class TestSimpleGraph:
    def test_from_edges_normalizes(self):
        g = SimpleGraph.from_edges(3, [(2, 0), (0, 1), (1, 0)])
        assert g.edges == ((0, 1), (0, 2))
        assert g.neighbors(0) == (1, 2)
        assert g.has_edge(1, 0) and not g.has_edge(1, 2)

    def test_loop_rejected(self):
        with pytest.raises(ValueError, match="loop"):
            SimpleGraph.from_edges(2, [(1, 1)])

    def test_range_rejected(self):
        with pytest.raises(ValueError, match="range"):
            SimpleGraph.from_edges(2, [(0, 2)])

    def test_non_pair_rejected(self):
        with pytest.raises(ValueError, match="not a pair"):
            SimpleGraph.from_edges(3, [(0, 1, 2)])

    def test_json_round_trip(self):
        g = named_graph("Petersen")
        data = json.loads(g.to_json())
        assert data["vertices"] == 10 and len(data["edges"]) == 15
        back = SimpleGraph.from_json(g.to_json())
        assert back.edges == g.edges

    def test_cut_size_and_boundary(self):
        cube = named_graph("Cube")
        face = cube.faces[0]
        assert cube.cut_size(face) == 4
        assert len(cube.boundary_edges(face)) == 4
        assert cube.cut_size({0}) == 3
        assert cube.induced_edge_count(face) == 4

    def test_degree_needs_regular(self):
        path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError, match="regular"):
            path.degree
        assert path.girth == 0

    def test_connectivity(self):
        two = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
        assert not two.is_connected
        assert named_graph("Dodecahedron").is_connected


class TestCatalog:
    def test_shapes(self):
        for name, (n, m, d, g) in CATALOG_SHAPE.items():
            graph = named_graph(name)
            assert graph.vertex_count == n, name
            assert len(graph.edges) == m, name
            assert graph.degree == d, name
            assert graph.girth == g, name

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown graph name"):
            named_graph("Heawood")

    def test_faces_attached(self):
        for name in NAMED_GRAPH_NAMES:
            graph = named_graph(name)
            if name not in FACE_COUNTS:
                assert graph.faces is None, name
                continue
            assert len(graph.faces) == FACE_COUNTS[name], name
            per_edge = Counter()
            for cycle in graph.faces:
                assert len(cycle) == graph.girth
                for i in range(len(cycle)):
                    u, v = cycle[i], cycle[(i + 1) % len(cycle)]
                    assert graph.has_edge(u, v)
                    per_edge[(min(u, v), max(u, v))] += 1
            assert all(per_edge[e] == 2 for e in graph.edges), name

    def test_polyhedral_faces_are_all_shortest_cycles(self):
        for name in ("Cube", "Octahedron", "Dodecahedron", "Icosahedron"):
            graph = named_graph(name)
            assert graph.faces == cycles_with_vertices(graph, graph.girth)

    def test_tetrahedron_is_k4(self):
        assert _is_isomorphic(named_graph("Tetrahedron"), named_graph("K4"))

    def test_cycle_graph(self):
        c7 = cycle_graph(7)
        assert c7.degree == 2 and c7.girth == 7 and c7.is_connected
        with pytest.raises(ValueError, match="at least 3"):
            cycle_graph(2)


class TestAutomorphisms:
    def test_orders(self):
        for name, order in AUT_ORDERS.items():
            assert graph_automorphisms(named_graph(name)).order == order, name

    def test_cycle_graph_order(self):
        assert graph_automorphisms(cycle_graph(12)).order == 24

    def test_prism_not_edge_transitive(self):
        auts = graph_automorphisms(named_graph("Prism"))
        assert auts.vertex_transitive and not auts.edge_transitive
        assert not auts.arc_transitive

    def test_transitivity_flags(self):
        for name in ("Cube", "K33", "Petersen", "K6", "Dodecahedron"):
            auts = graph_automorphisms(named_graph(name))
            assert auts.vertex_transitive and auts.edge_transitive, name
            assert auts.arc_transitive, name

    def test_group_matches_permutation_composition(self):
        auts = graph_automorphisms(named_graph("Petersen"))
        perms = auts.vertex_perms
        group = auts.group
        assert perms[0] == tuple(range(10))
        for i in (1, 17, 53, 119):
            for j in (2, 29, 88):
                composed = tuple(perms[i][perms[j][v]] for v in range(10))
                assert perms[group.mul(i, j)] == composed

    def test_stabilizer_orders(self):
        for name in ("Cube", "Petersen", "K33"):
            graph = named_graph(name)
            auts = graph_automorphisms(graph)
            assert auts.vertex_stabilizer_order * graph.vertex_count == auts.order
            assert auts.edge_stabilizer_order * len(graph.edges) == auts.order

    def test_cubic_arc_transitive_stabilizer_divisors(self):
        for name in ("K4", "K33", "Cube", "Petersen"):
            graph = named_graph(name)
            auts = graph_automorphisms(graph)
            assert graph.degree == 3 and auts.arc_transitive, name
            assert 48 % auts.vertex_stabilizer_order == 0, name
            assert 32 % auts.edge_stabilizer_order == 0, name

    def test_size_cap(self):
        with pytest.raises(ValueError, match="capped"):
            graph_automorphisms(cycle_graph(21))


class TestDerivedObjects:
    def test_p3_counts(self):
        for name, count in (
            ("Petersen", 30),
            ("K33", 18),
            ("Cube", 24),
            ("Dodecahedron", 60),
            ("K6", 60),
        ):
            assert len(paths_with_vertices(named_graph(name), 3)) == count, name

    def test_paths_canonical(self):
        for path in paths_with_vertices(named_graph("Cube"), 3):
            assert path == min(path, path[::-1])

    def test_cycle_counts(self):
        for name, length, count in (
            ("Petersen", 5, 12),
            ("Cube", 4, 6),
            ("K6", 3, 20),
            ("Icosahedron", 3, 20),
            ("Dodecahedron", 5, 12),
        ):
            assert len(cycles_with_vertices(named_graph(name), length)) == count, name

    def test_cycles_canonical(self):
        for cycle in cycles_with_vertices(named_graph("Petersen"), 5):
            assert cycle[0] == min(cycle)
            assert cycle[1] < cycle[-1]

    def test_line_graph_of_k4_is_octahedron(self):
        assert _is_isomorphic(line_graph(named_graph("K4")), named_graph("Octahedron"))

    def test_line_graph_membership_test(self):
        assert _is_line_of_girth4_cubic(line_graph(named_graph("K33")))
        assert _is_line_of_girth4_cubic(line_graph(named_graph("Cube")))
        assert not _is_line_of_girth4_cubic(named_graph("Octahedron"))
        assert not _is_line_of_girth4_cubic(named_graph("K5"))

    def test_petersen_face_sets_partition(self):
        graph = named_graph("Petersen")
        sets = _face_sets(graph)
        assert len(sets) == 2
        all_cycles = set(cycles_with_vertices(graph, 5))
        assert set(sets[0]) | set(sets[1]) == all_cycles
        assert not set(sets[0]) & set(sets[1])

    def test_k6_face_sets_pair_by_complement(self):
        graph = named_graph("K6")
        sets = _face_sets(graph)
        assert len(sets) == 12
        all_cycles = set(cycles_with_vertices(graph, 3))
        catalog = {frozenset(s) for s in sets}
        for s in sets:
            assert frozenset(all_cycles - set(s)) in catalog
        assert frozenset(graph.faces) in catalog

    def test_face_set_absence(self):
        for name in ("K5", "K33", "Prism"):
            assert _face_sets(named_graph(name)) == (), name

    def test_derived_sets_record(self):
        record = derived_sets(named_graph("Petersen"))
        assert record.line_graph.vertex_count == 15
        assert record.line_graph.degree == 4
        assert len(record.p3) == 30
        assert len(record.girth_cycles) == 12
        assert len(record.face_sets) == 2


class TestEquitable:
    def test_chart(self):
        for name, (d, g, s) in EQUITABLE_CHART.items():
            record = is_equitable(named_graph(name))
            assert (record.degree, record.girth, record.cycles_per_edge) == (d, g, s), name
            assert record.equitable and record.witness is None

    def test_line_graph_single_cover(self):
        record = is_equitable(line_graph(named_graph("K33")))
        assert (record.degree, record.girth, record.cycles_per_edge) == (4, 3, 1)

    def test_prism_witness(self):
        graph = named_graph("Prism")
        record = is_equitable(graph)
        assert not record.equitable and record.cycles_per_edge is None
        lo, hi = record.witness

        def triangles_through(edge):
            u, v = edge
            return (graph.adjacency[u] & graph.adjacency[v]).bit_count()

        assert triangles_through(lo) != triangles_through(hi)

    def test_needs_regular(self):
        star = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        with pytest.raises(ValueError, match="regular"):
            is_equitable(star)


class TestCutClassify:
    def test_singletons(self):
        for name in ("Cube", "K6", "Petersen", "Icosahedron"):
            assert cut_classify(named_graph(name), {0}) == 1, name

    def test_edges(self):
        cube = named_graph("Cube")
        assert cut_classify(cube, set(cube.edges[0])) == 2

    def test_cycle_paths(self):
        c7 = cycle_graph(7)
        assert cut_classify(c7, {0}) == 1
        assert cut_classify(c7, {0, 1}) == 2
        assert cut_classify(c7, {0, 1, 2}) == 3

    def test_cubic_two_edge_paths(self):
        for name in ("Cube", "K33", "Petersen", "Dodecahedron"):
            graph = named_graph(name)
            path = paths_with_vertices(graph, 3)[0]
            assert cut_classify(graph, path) == 4, name

    def test_line_graph_triangle(self):
        lg = line_graph(named_graph("K33"))
        auts = graph_automorphisms(lg)
        assert auts.vertex_transitive and auts.edge_transitive
        triangle = cycles_with_vertices(lg, 3)[0]
        assert cut_classify(lg, triangle) == 5

    def test_shortest_cycles(self):
        cube = named_graph("Cube")
        assert cube.cut_size(cube.faces[0]) == 4
        assert cut_classify(cube, cube.faces[0]) == 6
        k6 = named_graph("K6")
        triangle = cycles_with_vertices(k6, 3)[0]
        assert k6.cut_size(triangle) == 9
        assert cut_classify(k6, triangle) == 6
        octa = named_graph("Octahedron")
        assert cut_classify(octa, cycles_with_vertices(octa, 3)[0]) == 6

    def test_large(self):
        petersen = named_graph("Petersen")
        assert not petersen.has_edge(0, 2)
        assert cut_classify(petersen, {0, 2}) == "large"

    def test_preconditions(self):
        with pytest.raises(ValueError, match="transitive"):
            cut_classify(named_graph("Prism"), {0})
        with pytest.raises(ValueError, match="nonempty"):
            cut_classify(named_graph("Cube"), set())
        with pytest.raises(ValueError, match="half"):
            cut_classify(named_graph("Cube"), {0, 1, 2, 3, 4})
        two = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        with pytest.raises(ValueError, match="connected"):
            cut_classify(two, {0})


def _independent_outcomes(graph, subset):
    """Re-derive the matching shapes from scratch, without first-match order."""
    mask = 0
    for v in subset:
        mask |= 1 << v
    size = len(subset)
    inner = graph.induced_edge_count(mask)
    degrees = [(graph.adjacency[v] & mask).bit_count() for v in subset]
    reached = {subset[0]}
    frontier = [subset[0]]
    while frontier:
        v = frontier.pop()
        for w in subset:
            if w not in reached and graph.has_edge(v, w):
                reached.add(w)
                frontier.append(w)
    connected = len(reached) == size
    outcomes = set()
    if size == 1:
        outcomes.add(1)
    if size == 2 and inner == 1:
        outcomes.add(2)
    if graph.degree == 2 and connected and inner == size - 1 and max(degrees) <= 2 and size >= 3:
        outcomes.add(3)
    if graph.degree == 3 and size == 3 and inner == 2:
        outcomes.add(4)
    if size == 3 and inner == 3 and _is_line_of_girth4_cubic(graph):
        outcomes.add(5)
    if (
        size == graph.girth
        and connected
        and all(d == 2 for d in degrees)
        and any(_is_isomorphic(graph, named_graph(n)) for n in FACE_COUNTS)
    ):
        outcomes.add(6)
    return outcomes


class TestCutCensus:
    def test_frozen_census(self):
        for name, expected in CUT_CENSUS.items():
            cuts = enumerate_small_cuts(named_graph(name))
            histogram = Counter(outcome for _, outcome in cuts)
            assert dict(histogram) == expected, name

    def test_each_subset_matches_exactly_one_shape(self):
        for name in CUT_CENSUS:
            graph = named_graph(name)
            for subset, outcome in enumerate_small_cuts(graph):
                independent = _independent_outcomes(graph, subset)
                assert independent == {outcome}, (name, subset)

    def test_kernel_against_direct_cut_size(self):
        for name in ("K4", "Octahedron", "K33", "Petersen"):
            graph = named_graph(name)
            profile = cut_profile(graph.adjacency)
            for mask in range(1 << graph.vertex_count):
                assert profile[mask] == graph.cut_size(mask)

    def test_enumeration_complete(self):
        graph = named_graph("Octahedron")
        found = {subset for subset, _ in enumerate_small_cuts(graph)}
        expected = set()
        for mask in range(1, 1 << 6):
            subset = tuple(v for v in range(6) if mask >> v & 1)
            if len(subset) <= 3 and graph.cut_size(mask) < 8:
                expected.add(subset)
        assert found == expected

    def test_cycle_census_all_paths(self):
        for subset, outcome in enumerate_small_cuts(cycle_graph(8)):
            assert outcome in (1, 2, 3)


class TestGraphicDuet:
    def test_cut_formula_exhaustively(self):
        for name in ("K4", "Octahedron", "K33", "Cube", "Petersen"):
            graph = named_graph(name)
            duet = graphic_duet(graph)
            d = graph.degree
            woe = duet.point_weight_y
            for mask in range(1 << graph.vertex_count):
                lhs = 2 * duet.set_deficiency(mask)
                assert lhs == woe * (2 * d - graph.cut_size(mask)), (name, mask)

    def test_duet_deficiency_at_singleton(self):
        duet = graphic_duet(named_graph("Petersen"))
        assert duet.deficiency() == duet.point_weight_x


class TestVideos:
    def test_catalog(self):
        for (kind, name), (sizes, order, delta) in VIDEO_CATALOG.items():
            graph = named_graph(name)
            trio = build_video(VideoSpec(kind, graph))
            chorus = trio.chorus
            assert chorus.sizes == sizes, (kind, name)
            assert chorus.group.order == order, (kind, name)
            observed = trio_deficiency_inc(trio)
            assert observed == delta, (kind, name)
            assert observed > 0, (kind, name)
            witness = _witness_vertices(kind, graph)
            woe = order // len(graph.edges)
            cut = graph.cut_size(witness)
            assert 2 * observed == woe * (2 * graph.degree - cut), (kind, name)
            assert observed <= min(chorus.point_weight(i) for i in range(3))
            assert trio_is_maximal(trio), (kind, name)

    def test_cube_face_video_density(self):
        trio = build_video(VideoSpec("CubeOct_VEF", named_graph("Cube")))
        order = trio.chorus.group.order
        total = sum(
            Fraction(trio.chorus.side(i, j).weight, order)
            for i, j in ((0, 1), (1, 2), (0, 2))
        )
        assert total == Fraction(13, 12)

    def test_eve_outer_side_is_disjointness(self):
        graph = named_graph("Cube")
        trio = build_video(VideoSpec("EVE", graph))
        rows = trio.chorus.adjacency[0][2]
        for p, e in enumerate(graph.edges):
            for r, f in enumerate(graph.edges):
                expected = not set(e) & set(f)
                assert bool(rows[p] >> r & 1) == expected

    def test_k5_eve_outer_side_matches_triangles(self):
        graph = named_graph("K5")
        trio = build_video(VideoSpec("EVE", graph))
        rows = trio.chorus.adjacency[0][2]
        triangles = cycles_with_vertices(graph, 3)
        complement = {
            r: tuple(sorted(set(range(5)) - set(f))) for r, f in enumerate(graph.edges)
        }
        assert sorted(complement.values()) == sorted(triangles)
        for p, e in enumerate(graph.edges):
            for r in range(len(graph.edges)):
                in_triangle = set(e) <= set(complement[r])
                assert bool(rows[p] >> r & 1) == in_triangle

    def test_path_video_complement_rule(self):
        graph = named_graph("Cube")
        trio = build_video(VideoSpec("P3VE", graph))
        paths = paths_with_vertices(graph, 3)
        rows = trio.chorus.adjacency[0][2]
        for p, path in enumerate(paths):
            for r, e in enumerate(graph.edges):
                expected = not set(path) & set(e)
                assert bool(rows[p] >> r & 1) == expected

    def test_face_videos_use_stabilizer(self):
        for name in ("Petersen", "K6"):
            graph = named_graph(name)
            trio = build_video(VideoSpec("PetersenK6_FEV", graph))
            assert trio.chorus.group.order == 60
            auts = graph_automorphisms(graph)
            face_set = set(graph.faces)
            cycles = cycles_with_vertices(graph, graph.girth)
            kept = []
            for perm in auts.vertex_perms:
                images = set()
                for cycle in graph.faces:
                    seq = [perm[v] for v in cycle]
                    best = None
                    doubled = tuple(seq) + tuple(seq)
                    for base in (doubled, tuple(reversed(seq)) + tuple(reversed(seq))):
                        for rot in range(len(seq)):
                            cand = base[rot : rot + len(seq)]
                            if best is None or cand < best:
                                best = cand
                    images.add(best)
                if images == face_set:
                    kept.append(perm)
            assert len(kept) == 60
            remaining = set(cycles)
            orbit_sets = []
            while remaining:
                seed = min(remaining)
                orbit = set()
                for p in kept:
                    seq = [p[v] for v in seed]
                    doubled = tuple(seq) + tuple(seq)
                    best = None
                    for base in (doubled, tuple(reversed(seq)) + tuple(reversed(seq))):
                        for rot in range(len(seq)):
                            cand = base[rot : rot + len(seq)]
                            if best is None or cand < best:
                                best = cand
                    orbit.add(best)
                orbit_sets.append(frozenset(orbit))
                remaining -= orbit
            assert len(orbit_sets) == 2, name
            assert frozenset(face_set) in orbit_sets, name

    def test_bound_violations(self):
        with pytest.raises(ValueError, match="5 vertices"):
            build_video(VideoSpec("EVE", named_graph("Tetrahedron")))
        with pytest.raises(ValueError, match="transitive"):
            build_video(VideoSpec("EVE", named_graph("Prism")))
        with pytest.raises(ValueError, match="cubic"):
            build_video(VideoSpec("P3VE", named_graph("K5")))
        with pytest.raises(ValueError, match="hosts"):
            build_video(VideoSpec("Dodec_FVE", named_graph("Cube")))
        with pytest.raises(ValueError, match="unknown video kind"):
            VideoSpec("VFE", named_graph("Cube"))


class TestCubicLineGraphEquivalence:
    """The triangle video of a line graph mirrors the path video of its base.

    For a cubic base with girth at least 4, triangles of the line graph are
    the edge stars, line graph vertices are the base edges, and line graph
    edges are the base 2-edge paths. All three incidence relations must
    transport across that dictionary, complement sides included.
    """

    @pytest.mark.parametrize("base_name", ["K33", "Cube"])
    def test_explicit_isomorphism(self, base_name):
        base = named_graph(base_name)
        lg = line_graph(base)
        triangles = cycles_with_vertices(lg, 3)
        assert len(triangles) == base.vertex_count

        star_of = {}
        for y in range(base.vertex_count):
            star = tuple(
                sorted(
                    base.edge_index[(min(y, w), max(y, w))] for w in base.neighbors(y)
                )
            )
            star_of[star] = y
        triangle_to_vertex = {t: star_of[tuple(sorted(t))] for t in triangles}
        assert len(triangle_to_vertex) == base.vertex_count

        paths = set(paths_with_vertices(base, 3))

        def edge_to_path(i, j):
            shared = set(base.edges[i]) & set(base.edges[j])
            assert len(shared) == 1
            y = shared.pop()
            x = (set(base.edges[i]) - {y}).pop()
            z = (set(base.edges[j]) - {y}).pop()
            seq = (x, y, z)
            return min(seq, seq[::-1])

        lg_edge_to_path = {e: edge_to_path(*e) for e in lg.edges}
        assert set(lg_edge_to_path.values()) == paths

        for t in triangles:
            y = triangle_to_vertex[t]
            for i in range(lg.vertex_count):
                assert (i in t) == (y in base.edges[i])
        for e in lg.edges:
            path = lg_edge_to_path[e]
            a, b, c = path
            path_edges = {
                base.edge_index[(min(a, b), max(a, b))],
                base.edge_index[(min(b, c), max(b, c))],
            }
            assert set(e) == path_edges
        for t in triangles:
            y = triangle_to_vertex[t]
            for e in lg.edges:
                path = lg_edge_to_path[e]
                assert (not set(t) & set(e)) == (y not in path)
