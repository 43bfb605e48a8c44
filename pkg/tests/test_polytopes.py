"""Vertex and halfspace forms of the concentration polytope and the hull."""

import numpy as np
import pytest

from conevol import (
    classify,
    contains,
    enumerate_vertices,
    hull_halfspaces,
    hull_vertices,
    irredundant_facets,
    pscc_halfspaces,
    pscc_vertices,
    structure_predicates,
)
from conevol.errors import DimensionMismatch
from conevol.polytopes import PolytopeRep, affine_rank
from helpers import (
    axis_square,
    hexagon,
    isolated_square_normal_set,
    m5_two_square,
    pentagon_gp,
    random_normal_set,
    trapezoid,
)


def unit(m, *idx):
    v = np.zeros(m)
    for i in idx:
        v[i] += 1.0 / len(idx)
    return v


def as_row_set(arr):
    return {tuple(np.round(r, 12)) for r in arr}


class TestPsccVertices:
    def test_axis_square_excludes_antipodal_pairs(self):
        verts = pscc_vertices(axis_square())
        want = {tuple(unit(4, i, j)) for i, j in [(0, 1), (0, 3), (1, 2), (2, 3)]}
        assert as_row_set(verts) == want

    def test_trapezoid_has_five(self):
        assert len(pscc_vertices(trapezoid())) == 5

    def test_general_position_all_pairs(self):
        assert len(pscc_vertices(pentagon_gp())) == 10

    def test_entries_at_most_half(self):
        for ns in (axis_square(), trapezoid(), hexagon(), pentagon_gp()):
            assert np.max(pscc_vertices(ns)) <= 0.5


class TestPsccHalfspaces:
    def test_axis_square_pair_constraints(self):
        rep = pscc_halfspaces(axis_square())
        pair_rows = [h for h in rep.halfspaces if h.rhs == 0.5]
        assert len(pair_rows) == 2
        got = {tuple(np.flatnonzero(h.normal)) for h in pair_rows}
        assert got == {(0, 2), (1, 3)}

    def test_general_position_every_weight_capped(self):
        # every normal is alone on its line, so each is a closed rank-1
        # class with weight bound one half (e.g. 1/2(e_i + e_j) vertices
        # could not span the simplex)
        rep = pscc_halfspaces(pentagon_gp())
        caps = [h for h in rep.halfspaces if h.rhs == 0.5]
        assert len(caps) == 5
        assert all(np.sum(h.normal != 0) == 1 for h in caps)

    def test_trapezoid_line_classes(self):
        ns = trapezoid()
        rep = pscc_halfspaces(ns)
        classes = {tuple(np.flatnonzero(h.normal))
                   for h in rep.halfspaces if h.rhs == 0.5}
        pair = ns.antipodal_pairs()[0]
        singles = set(range(4)) - set(pair)
        assert classes == {pair} | {(i,) for i in sorted(singles)}


class TestHullVertices:
    def test_trapezoid_prop(self):
        ns = trapezoid()
        verts = hull_vertices(ns)
        # in fixture order (90, 180, 270, 45): e2, e3, e4, (e1+e2)/2, (e1+e4)/2
        got = as_row_set(np.array([ns.to_input(v) for v in verts]))
        want = as_row_set(np.array([
            unit(4, 1), unit(4, 2), unit(4, 3), unit(4, 0, 1), unit(4, 0, 3)]))
        assert got == want

    def test_axis_square_midpoints(self):
        verts = hull_vertices(axis_square())
        want = {tuple(unit(4, i, j)) for i, j in [(0, 1), (0, 3), (1, 2), (2, 3)]}
        assert as_row_set(verts) == want

    def test_general_position_simplex(self):
        verts = hull_vertices(pentagon_gp())
        assert as_row_set(verts) == as_row_set(np.eye(5))

    def test_vertices_satisfy_hull_halfspaces(self):
        for ns in (trapezoid(), axis_square(), hexagon(), m5_two_square()):
            rep = hull_halfspaces(ns)
            assert all(contains(rep, v) for v in rep.vertices)


class TestHullHalfspaces:
    def test_trapezoid_exact_family(self):
        ns = trapezoid()
        rep = hull_halfspaces(ns)
        got = {(tuple(ns.to_input(h.normal)), h.rhs) for h in rep.halfspaces}
        e = lambda *pairs: tuple(
            sum(v for i2, v in pairs if i2 == i) for i in range(4))
        want = {
            (e((1, 1.0)), 1.0), (e((2, 1.0)), 1.0), (e((3, 1.0)), 1.0),
            (e((0, 1.0), (2, 0.5)), 0.5),
            (e((0, 1.0), (1, 1.0)), 1.0), (e((0, 1.0), (3, 1.0)), 1.0),
            (e((0, -1.0)), 0.0), (e((1, -1.0)), 0.0),
            (e((2, -1.0)), 0.0), (e((3, -1.0)), 0.0),
        }
        assert got == want

    def test_general_position_upper_bounds_only(self):
        rep = hull_halfspaces(pentagon_gp())
        uppers = [h for h in rep.halfspaces if h.rhs == 1.0]
        lowers = [h for h in rep.halfspaces if h.rhs == 0.0]
        assert len(uppers) == 5 and len(lowers) == 5
        for h in uppers:
            assert np.sum(h.normal != 0) == 1   # plain x_i <= 1

    def test_axis_square_constraint_counts(self):
        rep = hull_halfspaces(axis_square())
        assert len([h for h in rep.halfspaces if h.rhs == 0.5]) == 4
        assert len([h for h in rep.halfspaces if h.rhs == 1.0]) == 8
        assert len([h for h in rep.halfspaces if h.rhs == 0.0]) == 4


class TestIrredundantFacets:
    def test_trapezoid_eleven_raw_five_facets(self):
        rep = hull_halfspaces(trapezoid())
        raw_constraints = len(rep.halfspaces) + 1  # the simplex hyperplane
        assert raw_constraints == 11
        irr = irredundant_facets(rep)
        assert len(irr.halfspaces) == 5

    def test_axis_square_four_facets(self):
        rep = hull_halfspaces(axis_square())
        assert rep.dim == 2
        assert len(irredundant_facets(rep).halfspaces) == 4

    def test_simplex_upper_bounds_redundant(self):
        m = 5
        halfspaces = []
        from conevol.polytopes import Halfspace
        for i in range(m):
            e = np.zeros(m); e[i] = 1.0
            halfspaces.append(Halfspace(e, 1.0))
        for i in range(m):
            e = np.zeros(m); e[i] = -1.0
            halfspaces.append(Halfspace(e, 0.0))
        rep = PolytopeRep(tuple(halfspaces), np.eye(m), m - 1)
        irr = irredundant_facets(rep)
        assert len(irr.halfspaces) == m
        assert all(h.rhs == 0.0 for h in irr.halfspaces)

    def test_idempotent(self):
        for ns in (trapezoid(), axis_square(), hexagon()):
            irr = irredundant_facets(hull_halfspaces(ns))
            again = irredundant_facets(irr)
            assert len(again.halfspaces) == len(irr.halfspaces)

    def test_dimension_mismatch(self):
        rep = hull_halfspaces(trapezoid())
        bad = PolytopeRep(rep.halfspaces, rep.vertices, rep.dim + 1)
        with pytest.raises(DimensionMismatch):
            irredundant_facets(bad)


class TestContains:
    def test_computed_cone_volume_vector(self):
        ns = trapezoid()
        rep = hull_halfspaces(ns)
        g = ns.to_canonical([0.14645, 0.20711, 0.35355, 0.29289])
        assert contains(rep, g, eps=1e-4)  # rounded constants
        g_exact = ns.to_canonical(
            [0.1464466094, 0.2071067812, 0.3535533906, 0.2928932188])
        assert contains(rep, g_exact, eps=1e-9)

    def test_violating_point(self):
        ns = trapezoid()
        rep = hull_halfspaces(ns)
        assert not contains(rep, ns.to_canonical([0.6, 0.2, 0.1, 0.1]))

    def test_off_hyperplane(self):
        rep = hull_halfspaces(axis_square())
        assert not contains(rep, np.array([0.3, 0.3, 0.3, 0.3]))


class TestStructurePredicates:
    def test_fixtures(self):
        assert structure_predicates(axis_square()) == {
            "equals_pscc": True, "equals_hypersimplex": False}
        assert structure_predicates(pentagon_gp()) == {
            "equals_pscc": False, "equals_hypersimplex": True}
        assert structure_predicates(trapezoid()) == {
            "equals_pscc": False, "equals_hypersimplex": False}


class TestRepresentationAgreement:
    def test_fixtures(self):
        for ns in (trapezoid(), hexagon(), m5_two_square(), pentagon_gp()):
            rep = hull_halfspaces(ns)
            ev = enumerate_vertices(rep)
            hv = rep.vertices[np.lexsort(rep.vertices.T[::-1])]
            assert ev.shape == hv.shape
            assert np.allclose(ev, hv, atol=1e-9)

    def test_fuzz_irreducible(self, rng):
        for _ in range(12):
            m = int(rng.integers(3, 8))
            mode = int(rng.integers(3))
            if mode == 0:
                ns = random_normal_set(rng, m)
            elif mode == 1 and m >= 5:
                ns = random_normal_set(rng, m, pairs=1)
            else:
                ns = isolated_square_normal_set(rng, max(m, 4))
            if classify(ns).reducible:
                continue
            rep = hull_halfspaces(ns)
            ev = enumerate_vertices(rep)
            hv = rep.vertices[np.lexsort(rep.vertices.T[::-1])]
            assert ev.shape == hv.shape and np.allclose(ev, hv, atol=1e-9)

    def test_pscc_forms_agree_even_for_parallelograms(self, rng):
        # unlike the hull family, the concentration polytope's halfspace
        # form pins the pair sums in every case (both pair bounds meet the
        # simplex hyperplane), so enumeration matches the midpoint formula
        sets = [axis_square(), trapezoid(), hexagon(), m5_two_square(), pentagon_gp()]
        for _ in range(5):
            sets.append(random_normal_set(rng, int(rng.integers(3, 7))))
        for ns in sets:
            rep = pscc_halfspaces(ns)
            ev = enumerate_vertices(rep)
            pv = pscc_vertices(ns)
            pv = pv[np.lexsort(pv.T[::-1])]
            assert ev.shape == pv.shape and np.allclose(ev, pv, atol=1e-9)

    def test_parallelogram_halfspace_family_is_strictly_larger(self):
        # Documented defect: the emitted halfspace family does not pin the
        # pair sums to one half when the set is two antipodal pairs, so its
        # vertex enumeration strictly contains the true hull vertices.
        # Example witness: (1/3, 1/3, 1/3, 0) satisfies every emitted
        # halfspace yet has pair sum 2/3.
        ns = axis_square()
        rep = hull_halfspaces(ns)
        ev = enumerate_vertices(rep)
        assert len(ev) > len(rep.vertices)
        rogue = np.array([1, 1, 1, 0]) / 3.0
        assert contains(rep, rogue)
        assert not contains(pscc_halfspaces(ns), rogue)  # the true hull here


class TestVertexExtremality:
    def test_every_hull_vertex_is_extreme(self, rng):
        """Tight constraints at each vertex span the whole space."""
        sets = [trapezoid(), axis_square(), hexagon(), m5_two_square()]
        for _ in range(6):
            sets.append(random_normal_set(rng, int(rng.integers(3, 8))))
        for ns in sets:
            rep = hull_halfspaces(ns)
            if classify(ns).reducible:
                # tightness against the true hull form instead
                rep = pscc_halfspaces(ns)
            for v in rep.vertices:
                rows = [np.ones(rep.m)]
                for h in rep.halfspaces:
                    if abs(float(h.slack(v))) <= 1e-9:
                        rows.append(h.normal)
                assert np.linalg.matrix_rank(np.array(rows), tol=1e-9) == rep.m


class TestSandwich:
    def test_pscc_vertices_inside_hull(self, rng):
        sets = [trapezoid(), axis_square(), hexagon(), m5_two_square()]
        for _ in range(10):
            m = int(rng.integers(3, 11))
            sets.append(random_normal_set(rng, m, pairs=int(rng.integers(2)) if m >= 5 else 0))
        for ns in sets:
            rep = hull_halfspaces(ns)
            for v in pscc_vertices(ns):
                assert contains(rep, v, eps=1e-9)


def test_affine_rank():
    assert affine_rank(np.eye(4)) == 3
    assert affine_rank(np.array([[0.5, 0.5, 0, 0]])) == 0
    assert affine_rank(hull_vertices(axis_square())) == 2
