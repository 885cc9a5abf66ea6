"""
Duals of the uniform W(A4) polytopes.

A cell of type k is the orbit of L under the parabolic subgroup without r_k,
moved around by the group; its center lies on the ray of the fundamental
weight w_k. The dual polytope takes one vertex ``s_k g w_k`` per cell, with
scales chosen so that all centers around a primal vertex L have the same
scalar product with L.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional

import sympy

from a4_polytopes.core.data_models import (
    Catalog,
    CatalogEntry,
    CellTypeModel,
    DualCellModel,
    DualReport,
    ShellModel,
    decimal_rows,
    exact_rows,
    float_rows,
)
from a4_polytopes.core.errors import NotInOrbitError, WeightError
from a4_polytopes.core.field import FieldScalar
from a4_polytopes.core.mesh import Mesh3D, extract_faces
from a4_polytopes.core.quaternion import UNITS, qdot
from a4_polytopes.core.representation import weight_to_quaternion
from a4_polytopes.core.weyl import (
    NODES,
    GroupElement,
    Weight,
    cartan_data,
    fundamental_weight,
    generate_group,
    norm_squared,
    orbit,
    scalar_product,
    stabilizer,
)
from a4_polytopes.logging import logger

POLYTOPE_NAMES = {
    "1000": "5-cell",
    "0001": "5-cell",
    "0100": "rectified 5-cell",
    "0010": "rectified 5-cell",
    "1100": "truncated 5-cell",
    "0011": "truncated 5-cell",
    "1010": "cantellated 5-cell",
    "0101": "cantellated 5-cell",
    "1001": "runcinated 5-cell",
    "0110": "bitruncated 5-cell",
    "1110": "cantitruncated 5-cell",
    "0111": "cantitruncated 5-cell",
    "1101": "runcitruncated 5-cell",
    "1011": "runcitruncated 5-cell",
    "1111": "omnitruncated 5-cell",
}

_A3_SHAPES = {
    (True, False, False): "tetrahedron",
    (False, False, True): "tetrahedron",
    (False, True, False): "octahedron",
    (True, True, False): "truncated tetrahedron",
    (False, True, True): "truncated tetrahedron",
    (True, False, True): "cuboctahedron",
    (True, True, True): "truncated octahedron",
}

_A2_PRISMS = {
    (True, False): "triangular prism",
    (False, True): "triangular prism",
    (True, True): "hexagonal prism",
}


def diagram_components(nodes: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Connected pieces of a node subset of the path 1-2-3-4."""
    components: list[list[int]] = []
    for i in sorted(nodes):
        if components and components[-1][-1] == i - 1:
            components[-1].append(i)
        else:
            components.append([i])
    return [tuple(c) for c in components]


def cell_shape(w: Weight, k: int) -> str:
    """Name of the cell obtained by deleting node k, or an empty string if it is not 3-dimensional."""
    pieces = diagram_components(tuple(i for i in NODES if i != k))
    ringed = [tuple(w[i - 1] != 0 for i in piece) for piece in pieces]
    if not all(any(r) for r in ringed):
        return ""
    if len(pieces) == 1:
        return _A3_SHAPES[ringed[0]]
    a2 = next(r for r in ringed if len(r) == 2)
    return _A2_PRISMS[a2]


def affine_rank(points: tuple[Weight, ...]) -> int:
    if len(points) < 2:
        return 0
    base = points[0]
    rows = [[sympy.Rational(x.numerator, x.denominator) for x in (p - base)] for p in points[1:]]
    return int(sympy.Matrix(rows).rank())


@dataclass(frozen=True)
class CellType:
    k: int
    parabolic: tuple[int, ...]
    base_vertices: tuple[Weight, ...]
    center_ray: Weight
    count: int
    incidence: int
    shape: str

    @property
    def cell_vertex_count(self) -> int:
        return len(self.base_vertices)


@dataclass(frozen=True)
class Cell:
    k: int
    coset_rep: GroupElement
    vertices: frozenset[Weight]
    center: Weight


def _require_uniform_input(w: Weight) -> None:
    if not w.is_dominant() or w.is_zero():
        raise WeightError(f"dual construction needs a nonzero dominant weight, got {w}")


@lru_cache(maxsize=None)
def cell_types(w: Weight) -> tuple[CellType, ...]:
    _require_uniform_input(w)
    vertex_count = len(orbit(w))
    types = []
    for k in NODES:
        nodes = tuple(i for i in NODES if i != k)
        base = orbit(w, nodes)
        if affine_rank(base) != 3:
            continue
        count = len(orbit(fundamental_weight(k)))
        incidence = Fraction(count * len(base), vertex_count)
        types.append(CellType(
            k=k,
            parabolic=nodes,
            base_vertices=base,
            center_ray=fundamental_weight(k),
            count=count,
            incidence=int(incidence),
            shape=cell_shape(w, k),
        ))
    logger.debug(f"{w} has cell types {[(t.k, t.shape, t.count) for t in types]}")
    return tuple(types)


@lru_cache(maxsize=None)
def cells(w: Weight, k: int) -> tuple[Cell, ...]:
    cell_type = next((t for t in cell_types(w) if t.k == k), None)
    if cell_type is None:
        raise WeightError(f"{w} has no 3-dimensional cells of type {k}")
    found: dict[Weight, Cell] = {}
    for g in generate_group():
        center = g.apply(cell_type.center_ray)
        if center in found:
            continue
        found[center] = Cell(
            k=k,
            coset_rep=g,
            vertices=frozenset(g.apply(v) for v in cell_type.base_vertices),
            center=center,
        )
    return tuple(found.values())


def _require_vertex(w: Weight, vertex: Weight) -> None:
    if vertex not in set(orbit(w)):
        raise NotInOrbitError(f"{vertex} is not a vertex of the orbit of {w}")


def incident_cells(w: Weight, vertex: Weight) -> list[Cell]:
    _require_vertex(w, vertex)
    return [cell for t in cell_types(w) for cell in cells(w, t.k) if vertex in cell.vertices]


def center_products(w: Weight) -> dict[int, Fraction]:
    """``(w_k, L) = sum_j (C^-1)_kj a_j`` for every cell type k."""
    inv = cartan_data().inverse
    return {
        t.k: sum((inv[t.k - 1][j] * w[j] for j in range(4)), Fraction(0))
        for t in cell_types(w)
    }


def default_reference(w: Weight) -> int:
    products = center_products(w)
    return min(products, key=lambda k: (products[k], k))


def dual_scales(w: Weight, reference: Optional[int] = None) -> dict[int, Fraction]:
    """Scale of each center ray so that the scaled centers share one scalar product with L.

    The reference type gets scale 1; by default it is the type with the
    smallest ``(w_k, L)``.
    """
    products = center_products(w)
    if reference is None:
        reference = default_reference(w)
    elif reference not in products:
        raise WeightError(f"{w} has no cell type {reference}; types are {sorted(products)}")
    return {k: products[reference] / p for k, p in products.items()}


@dataclass(frozen=True)
class DualPolytope:
    weight: Weight
    reference: int
    scales: dict[int, Fraction]
    vertices: tuple[Weight, ...]
    cells: dict[Weight, tuple[Weight, ...]]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def is_flat(self) -> bool:
        return all(
            len({scalar_product(u, v) for u in dual_cell}) == 1
            for v, dual_cell in self.cells.items()
        )


def dual_polytope(w: Weight, reference: Optional[int] = None) -> DualPolytope:
    _require_uniform_input(w)
    if reference is None:
        reference = default_reference(w)
    scales = dual_scales(w, reference)
    vertices: set[Weight] = set()
    incidences: dict[Weight, list[Weight]] = defaultdict(list)
    for t in cell_types(w):
        for cell in cells(w, t.k):
            scaled = cell.center * scales[t.k]
            vertices.add(scaled)
            for v in cell.vertices:
                incidences[v].append(scaled)
    dual = DualPolytope(
        weight=w,
        reference=reference,
        scales=scales,
        vertices=tuple(sorted(vertices)),
        cells={v: tuple(sorted(us)) for v, us in sorted(incidences.items())},
    )
    logger.debug(f"dual of {w}: {dual.vertex_count} vertices, {dual.cell_count} cells")
    return dual


@dataclass(frozen=True)
class DualCell:
    vertex: Weight
    dual_vertices: tuple[Weight, ...]
    lambda_norm_sq: Fraction
    plane_products: frozenset[Fraction]
    coordinates: tuple[tuple[FieldScalar, FieldScalar, FieldScalar], ...]
    normalized: Optional[tuple[tuple[FieldScalar, ...], ...]]
    mesh: Mesh3D
    edge_lengths_sq: tuple[Fraction, ...]
    radii_sq: tuple[Fraction, ...]
    symmetry_order: int
    symmetric: bool

    @property
    def flat(self) -> bool:
        return len(self.plane_products) == 1


def dual_cell_geometry(w: Weight, vertex: Optional[Weight] = None,
                       reference: Optional[int] = None) -> DualCell:
    """Dual cell at ``vertex`` in the frame ``q0 = L/|L|, q_i = e_i q0``.

    ``coordinates`` holds the unnormalized ``(u, e_i L)``; ``normalized``
    divides by ``|L|`` and prepends the q0 component whenever ``|L|`` lies in
    Q(sqrt2, sqrt5).
    """
    vertex = w if vertex is None else vertex
    _require_vertex(w, vertex)
    dual = dual_polytope(w, reference)
    us = dual.cells[vertex]
    lam = weight_to_quaternion(vertex)
    frame = [e * lam for e in UNITS]
    coordinates = []
    for u in us:
        uq = weight_to_quaternion(u)
        coordinates.append(tuple(qdot(uq, f) for f in frame))
    norm_sq = norm_squared(vertex)
    root = FieldScalar.sqrt_of(norm_sq)
    normalized = None
    if root is not None:
        normalized = tuple(
            (FieldScalar.coerce(scalar_product(u, vertex)) / root,) + tuple(x / root for x in coords)
            for u, coords in zip(us, coordinates)
        )
    mesh = extract_faces(coordinates, metadata={"weight": str(w), "vertex": str(vertex)})
    edge_lengths = sorted({norm_squared(us[a] - us[b]) for a, b in mesh.edges})
    stab = stabilizer(vertex)
    members = set(us)
    symmetric = all({g.apply(u) for u in us} == members for g in stab)
    return DualCell(
        vertex=vertex,
        dual_vertices=us,
        lambda_norm_sq=norm_sq,
        plane_products=frozenset(scalar_product(u, vertex) for u in us),
        coordinates=tuple(coordinates),  # type: ignore[arg-type]
        normalized=normalized,
        mesh=mesh,
        edge_lengths_sq=tuple(edge_lengths),
        radii_sq=tuple(sorted({norm_squared(u) for u in us})),
        symmetry_order=stab.order,
        symmetric=symmetric,
    )


def shells(w: Weight, reference: Optional[int] = None) -> list[ShellModel]:
    scales = dual_scales(w, reference)
    result = []
    for k, scale in sorted(scales.items()):
        radius_sq = scale * scale * cartan_data().inverse_entry(k, k)
        result.append(ShellModel(
            k=k,
            scale=str(scale),
            radius_sq=str(radius_sq),
            radius=float(radius_sq) ** 0.5,
            count=len(orbit(fundamental_weight(k))),
        ))
    return result


def dual_cell_model(cell: DualCell, digits: int = 12, exact: bool = False) -> DualCellModel:
    return DualCellModel(
        vertex=str(cell.vertex),
        lambda_norm_sq=str(cell.lambda_norm_sq),
        plane_product=str(min(cell.plane_products)),
        flat=cell.flat,
        coordinates=exact_rows(cell.coordinates),
        normalized=exact_rows(cell.normalized) if cell.normalized is not None else None,
        floats=None if exact else float_rows(cell.coordinates, digits),
        decimals=decimal_rows(cell.coordinates, digits, exact),
        edge_lengths_sq=[str(x) for x in cell.edge_lengths_sq],
        radii_sq=[str(x) for x in cell.radii_sq],
        face_count=len(cell.mesh.faces),
        edge_count=len(cell.mesh.edges),
        symmetry_order=cell.symmetry_order,
        symmetric=cell.symmetric,
    )


def dual_report(w: Weight, reference: Optional[int] = None, digits: int = 12,
                exact: bool = False) -> DualReport:
    dual = dual_polytope(w, reference)
    types = [
        CellTypeModel(
            k=t.k,
            shape=t.shape,
            shape_labels=[str(w[i - 1]) for i in t.parabolic],
            count=t.count,
            cell_vertex_count=t.cell_vertex_count,
            incidence=t.incidence,
            scale=str(dual.scales[t.k]),
        )
        for t in cell_types(w)
    ]
    return DualReport(
        weight=str(w),
        name=POLYTOPE_NAMES.get(w.label_string()),
        reference=dual.reference,
        cell_types=types,
        scales={str(k): str(s) for k, s in dual.scales.items()},
        dual_vertex_count=dual.vertex_count,
        dual_cell_count=dual.cell_count,
        shells=shells(w, dual.reference),
        sample_cell=dual_cell_model(dual_cell_geometry(w, w, dual.reference), digits, exact),
    )


def uniform_weights() -> list[Weight]:
    """The fifteen nonzero weights with 0/1 labels."""
    weights = [Weight.of(*bits) for bits in product((1, 0), repeat=4)]
    return [w for w in weights if not w.is_zero()]


def catalog() -> Catalog:
    entries = []
    for w in uniform_weights():
        shapes: dict[str, int] = defaultdict(int)
        for t in cell_types(w):
            shapes[t.shape] += t.count
        entries.append(CatalogEntry(
            weight=w.label_string(),
            name=POLYTOPE_NAMES[w.label_string()],
            vertex_count=len(orbit(w)),
            cell_count=sum(shapes.values()),
            cell_shapes=dict(shapes),
        ))
    return Catalog(entries)
