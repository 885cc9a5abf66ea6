import pytest
from collections import Counter
from fractions import Fraction
from a4_polytopes.core.errors import NotInOrbitError, WeightError
from a4_polytopes.core.field import SIGMA, SQRT2, SQRT10, TAU, FieldScalar
from a4_polytopes.core.duals import (
    POLYTOPE_NAMES, affine_rank, catalog, cell_shape, cell_types, cells, center_products,
    default_reference, diagram_components, dual_cell_geometry, dual_cell_model, dual_polytope,
    dual_report, dual_scales, incident_cells, shells, uniform_weights
)
from a4_polytopes.core.weyl import Weight, dynkin_flip, fundamental_weight, norm_squared, orbit, scalar_product


def types_of(labels):
    return {t.k: (t.shape, t.count, t.incidence) for t in cell_types(Weight.of(*labels))}


class TestCellTypes:

    def test_five_cell(self):
        assert types_of((1, 0, 0, 0)) == {4: ("tetrahedron", 5, 4)}

    def test_rectified(self):
        assert types_of((0, 1, 0, 0)) == {1: ("tetrahedron", 5, 2), 4: ("octahedron", 5, 3)}

    def test_truncated(self, truncated):
        assert types_of(truncated) == {
            1: ("tetrahedron", 5, 1), 4: ("truncated tetrahedron", 5, 3)}

    def test_cantellated(self, cantellated):
        assert types_of(cantellated) == {
            1: ("octahedron", 5, 1), 2: ("triangular prism", 10, 2), 4: ("cuboctahedron", 5, 2)}

    def test_cantitruncated(self):
        assert types_of((1, 1, 1, 0)) == {
            1: ("truncated tetrahedron", 5, 1),
            2: ("triangular prism", 10, 1),
            4: ("truncated octahedron", 5, 2),
        }

    def test_omnitruncated(self, omnitruncated):
        assert types_of(omnitruncated) == {
            1: ("truncated octahedron", 5, 1),
            2: ("hexagonal prism", 10, 1),
            3: ("hexagonal prism", 10, 1),
            4: ("truncated octahedron", 5, 1),
        }

    def test_center_ray_fixed_by_parabolic(self, omnitruncated):
        for t in cell_types(omnitruncated):
            assert set(orbit(t.center_ray, t.parabolic)) == {t.center_ray}

    @pytest.mark.parametrize("labels", [(0, 0, 0, 0), (1, -1, 0, 0)])
    def test_rejects_bad_input(self, labels):
        with pytest.raises(WeightError):
            cell_types(Weight.of(*labels))

    def test_diagram_components(self):
        assert diagram_components((1, 3, 4)) == [(1,), (3, 4)]
        assert diagram_components((1, 2, 3)) == [(1, 2, 3)]

    def test_cell_shape_of_missing_cell(self, truncated):
        assert cell_shape(truncated, 2) == ""

    def test_affine_rank(self):
        square = tuple(Weight.of(*p) for p in [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)])
        assert affine_rank(square) == 2
        assert affine_rank(square[:1]) == 0


class TestCells:

    def test_cells_of_type(self, truncated):
        tetrahedra = cells(truncated, 1)
        assert len(tetrahedra) == 5
        assert all(len(c.vertices) == 4 for c in tetrahedra)
        assert len({c.center for c in tetrahedra}) == 5

    def test_missing_type(self, truncated):
        with pytest.raises(WeightError):
            cells(truncated, 2)

    def test_incident_cells_truncated(self, truncated):
        incident = incident_cells(truncated, truncated)
        assert Counter(c.k for c in incident) == Counter({1: 1, 4: 3})

    def test_incident_cells_rectified(self):
        w = Weight.of(0, 1, 0, 0)
        incident = incident_cells(w, w)
        assert Counter(c.k for c in incident) == Counter({4: 3, 1: 2})

    def test_incident_cells_omnitruncated(self, omnitruncated):
        assert len(incident_cells(omnitruncated, omnitruncated)) == 4

    def test_vertex_not_in_orbit(self):
        with pytest.raises(NotInOrbitError):
            incident_cells(Weight.of(0, 1, 0, 0), Weight.of(1, 0, 0, 0))


class TestDualScales:

    @pytest.mark.parametrize("labels,expected", [
        ((1, 1, 0, 0), {1: Fraction(3, 7), 4: 1}),
        ((0, 1, 0, 0), {1: Fraction(2, 3), 4: 1}),
        ((1, 1, 1, 0), {1: Fraction(2, 3), 2: Fraction(6, 13), 4: 1}),
        ((1, 1, 1, 1), {1: 1, 2: Fraction(2, 3), 3: Fraction(2, 3), 4: 1}),
        ((1, 0, 0, 1), {1: 1, 2: 1, 3: 1, 4: 1}),
        ((0, 1, 1, 0), {1: 1, 4: 1}),
        ((1, 0, 1, 0), {1: Fraction(2, 3), 2: Fraction(4, 7), 4: 1}),
        ((1, 1, 0, 1), {1: Fraction(7, 8), 2: Fraction(7, 11), 3: Fraction(7, 9), 4: 1}),
    ])
    def test_default_reference(self, labels, expected):
        assert dual_scales(Weight.of(*labels)) == expected

    @pytest.mark.parametrize("labels,reference,expected", [
        ((1, 0, 1, 0), 2, {1: Fraction(7, 6), 2: 1, 4: Fraction(7, 4)}),
        ((1, 1, 0, 1), 3, {1: Fraction(9, 8), 2: Fraction(9, 11), 3: 1, 4: Fraction(9, 7)}),
    ])
    def test_explicit_reference(self, labels, reference, expected):
        assert dual_scales(Weight.of(*labels), reference) == expected

    def test_unknown_reference(self, truncated):
        with pytest.raises(WeightError):
            dual_scales(truncated, 2)

    def test_center_products(self, truncated):
        assert center_products(truncated) == {1: Fraction(7, 5), 4: Fraction(3, 5)}
        assert default_reference(truncated) == 4

    @pytest.mark.parametrize("w", uniform_weights(), ids=str)
    def test_scaled_centers_share_a_plane(self, w):
        scales = dual_scales(w)
        products = {scales[k] * scalar_product(fundamental_weight(k), w) for k in scales}
        assert len(products) == 1

    @pytest.mark.parametrize("w", uniform_weights(), ids=str)
    def test_dynkin_flip_covariance(self, w):
        flipped = {5 - k: s for k, s in dual_scales(w).items()}
        assert dual_scales(dynkin_flip(w)) == flipped
        for k in flipped:
            assert dual_scales(dynkin_flip(w), k) == {5 - j: s for j, s in dual_scales(w, 5 - k).items()}


class TestDualPolytope:

    def test_truncated(self, truncated):
        dual = dual_polytope(truncated)
        assert dual.vertex_count == 10
        assert dual.cell_count == 20
        assert dual.is_flat()
        assert all(len(us) == 4 for us in dual.cells.values())

    @pytest.mark.parametrize("w", uniform_weights(), ids=str)
    def test_flat_for_every_uniform_weight(self, w):
        assert dual_polytope(w).is_flat()

    def test_flat_with_non_default_reference(self, cantellated):
        dual = dual_polytope(cantellated, 2)
        assert dual.reference == 2
        assert dual.is_flat()

    def test_five_cell_is_self_dual(self):
        w = Weight.of(1, 0, 0, 0)
        dual = dual_polytope(w)
        assert set(dual.vertices) == {-v for v in orbit(w)}
        assert set(dual.vertices) == set(orbit(fundamental_weight(4)))

    @pytest.mark.parametrize("labels,vertices,cell_count", [
        ((1, 0, 0, 1), 30, 20),
        ((1, 1, 1, 0), 20, 60),
        ((1, 1, 1, 1), 30, 120),
    ])
    def test_counts(self, labels, vertices, cell_count):
        dual = dual_polytope(Weight.of(*labels))
        assert dual.vertex_count == vertices
        assert dual.cell_count == cell_count

    def test_runcinated_shells(self):
        dual = dual_polytope(Weight.of(1, 0, 0, 1))
        # radii 2/sqrt5 and sqrt(6/5)
        assert Counter(norm_squared(u) for u in dual.vertices) == Counter({
            Fraction(4, 5): 10, Fraction(6, 5): 20})


class TestDualCell:

    def test_truncated_pyramid(self, truncated):
        cell = dual_cell_geometry(truncated)
        assert len(cell.dual_vertices) == 4
        assert cell.flat
        assert cell.lambda_norm_sq == Fraction(16, 5)
        assert cell.edge_lengths_sq == (Fraction(38, 49), Fraction(2))
        assert cell.radii_sq == (Fraction(36, 245), Fraction(4, 5))
        assert len(cell.mesh.faces) == 4
        assert len(cell.mesh.edges) == 6
        assert cell.symmetry_order == 6
        assert cell.symmetric

    def test_rectified_with_reference(self):
        cell = dual_cell_geometry(Weight.of(0, 1, 0, 0), reference=1)
        assert cell.edge_lengths_sq == (Fraction(2), Fraction(9, 2))
        assert len(cell.dual_vertices) == 5

    def test_runcinated_normalized_frame(self):
        w = Weight.of(1, 0, 0, 1)
        cell = dual_cell_geometry(w)
        assert cell.lambda_norm_sq == 2
        assert len(cell.dual_vertices) == 8
        assert cell.normalized is not None
        assert all(row[0] == SQRT2 / 2 for row in cell.normalized)
        assert cell.mesh.euler_characteristic == 2

    def test_runcinated_normalized_table(self):
        cell = dual_cell_geometry(Weight.of(1, 0, 0, 1))
        one, two = FieldScalar(1), FieldScalar(2)
        # (q1, q2, q3) components scaled by sqrt10
        expected = {
            (one, one, -one), (-one, -one, one),
            (two, -TAU, SIGMA), (-SIGMA, two, TAU), (-TAU, -SIGMA, -two),
            (TAU, SIGMA, two), (SIGMA, -two, -TAU), (-two, TAU, -SIGMA),
        }
        assert {tuple(x * SQRT10 for x in row[1:]) for row in cell.normalized} == expected
        for u, row in zip(cell.dual_vertices, cell.normalized):
            assert sum((x * x for x in row), FieldScalar(0)) == norm_squared(u)

    def test_other_vertex(self, truncated):
        vertex = orbit(truncated)[0]
        cell = dual_cell_geometry(truncated, vertex)
        assert cell.vertex == vertex
        assert cell.edge_lengths_sq == (Fraction(38, 49), Fraction(2))

    def test_vertex_not_in_orbit(self, truncated):
        with pytest.raises(NotInOrbitError):
            dual_cell_geometry(truncated, Weight.of(1, 0, 0, 0))

    def test_model(self, truncated):
        model = dual_cell_model(dual_cell_geometry(truncated), digits=6, exact=True)
        assert model.vertex == "1100"
        assert model.plane_product == "3/5"
        assert model.edge_lengths_sq == ["38/49", "2"]
        assert model.floats is None
        assert model.face_count == 4


class TestReports:

    def test_shells(self, cantellated):
        result = shells(cantellated, 2)
        assert [s.k for s in result] == [1, 2, 4]
        assert [s.radius_sq for s in result] == ["49/45", "6/5", "49/20"]
        assert [s.count for s in result] == [5, 10, 5]

    def test_dual_report(self, truncated):
        report = dual_report(truncated, exact=True)
        assert report.name == "truncated 5-cell"
        assert report.reference == 4
        assert report.scales == {"1": "3/7", "4": "1"}
        assert report.dual_vertex_count == 10
        assert report.dual_cell_count == 20
        assert report.sample_cell is not None
        assert [t.shape_labels for t in report.cell_types] == [["1", "0", "0"], ["1", "1", "0"]]

    def test_catalog(self):
        entries = catalog()
        assert len(entries) == 15
        assert {e.name for e in entries} == set(POLYTOPE_NAMES.values())

    @pytest.mark.parametrize("weight,vertices,cells,shapes", [
        ("1000", 5, 5, {"tetrahedron": 5}),
        ("0100", 10, 10, {"tetrahedron": 5, "octahedron": 5}),
        ("1001", 20, 30, {"tetrahedron": 10, "triangular prism": 20}),
        ("0110", 30, 10, {"truncated tetrahedron": 10}),
        ("1111", 120, 30, {"truncated octahedron": 10, "hexagonal prism": 20}),
    ])
    def test_catalog_entries(self, weight, vertices, cells, shapes):
        entry = catalog().find(weight)
        assert entry is not None
        assert entry.vertex_count == vertices
        assert entry.cell_count == cells
        assert entry.cell_shapes == shapes
