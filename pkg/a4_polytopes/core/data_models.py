from pydantic import BaseModel, Field, RootModel, computed_field
from typing import Iterable, Iterator, Optional

from a4_polytopes.core.field import FieldScalar

# significant digits a JSON double carries faithfully
DOUBLE_DIGITS = 15


def float_rows(rows: Iterable[Iterable[object]], digits: int) -> list[list[float]]:
    """Rows rounded from the exact values, so the last digit is correct."""
    digits = min(digits, DOUBLE_DIGITS + 2)
    return [[float(FieldScalar.coerce(x).to_decimal(digits)) for x in row] for row in rows]  # type: ignore[arg-type]


def decimal_rows(rows: Iterable[Iterable[object]], digits: int,
                 exact: bool = False) -> Optional[list[list[str]]]:
    """Decimal strings for precisions a double cannot hold; None otherwise."""
    if exact or digits <= DOUBLE_DIGITS:
        return None
    return [[FieldScalar.coerce(x).to_decimal(digits) for x in row] for row in rows]  # type: ignore[arg-type]


def exact_rows(rows: Iterable[Iterable[object]]) -> list[list[str]]:
    return [[str(x) for x in row] for row in rows]


class GroupReport(BaseModel):
    name: str
    order: int
    closed: bool
    has_identity: bool
    has_inverses: bool
    # T + S for S, T + T' for T'
    completes_with_t: Optional[bool] = None
    counterexample: Optional[str] = None

    @computed_field
    @property
    def is_group(self) -> bool:
        return self.closed and self.has_identity and self.has_inverses


class QuaternionSetReport(BaseModel):
    name: str
    order: int
    elements: list[list[str]]
    floats: Optional[list[list[float]]] = None
    decimals: Optional[list[list[str]]] = None
    verification: Optional[GroupReport] = None


class RepresentationReport(BaseModel):
    weyl_order: int
    quaternion_order: int
    distinct_fingerprints: int
    bijective: bool = False
    generators_match: bool = False
    homomorphism: bool = False
    orbits_match: bool = False
    passed: bool = False
    counterexample: Optional[str] = None


class GroupsReport(BaseModel):
    sets: list[QuaternionSetReport]
    representation: RepresentationReport
    aut_order: int
    coxeter_order: int


class OrbitReport(BaseModel):
    weight: str
    vertex_count: int
    stabilizer_order: int
    vertices: list[list[str]]
    quaternions: list[list[str]]
    floats: Optional[list[list[float]]] = None
    decimals: Optional[list[list[str]]] = None


class SliceModel(BaseModel):
    a3_labels: list[str]
    charge: str
    vertex_count: int
    p0_offset: str
    coset_indices: list[int]
    vertices: list[list[str]]
    floats: Optional[list[list[float]]] = None
    decimals: Optional[list[list[str]]] = None

    @property
    def label(self) -> str:
        return f"O({''.join(self.a3_labels)})({self.charge})"


class SliceReport(BaseModel):
    weight: str
    slices: list[SliceModel]

    @computed_field
    @property
    def charges(self) -> list[str]:
        return [s.charge for s in self.slices]

    @computed_field
    @property
    def vertex_count(self) -> int:
        return sum(s.vertex_count for s in self.slices)


class CellTypeModel(BaseModel):
    k: int
    shape: str
    shape_labels: list[str]
    count: int
    cell_vertex_count: int
    incidence: int
    scale: str


class ShellModel(BaseModel):
    k: int
    scale: str
    radius_sq: str
    radius: Optional[float] = None
    count: int


class DualCellModel(BaseModel):
    vertex: str
    lambda_norm_sq: str
    plane_product: str
    flat: bool
    coordinates: list[list[str]] = Field(description="(u, e_i L) for i = 1, 2, 3")
    normalized: Optional[list[list[str]]] = None
    floats: Optional[list[list[float]]] = None
    decimals: Optional[list[list[str]]] = None
    edge_lengths_sq: list[str]
    radii_sq: list[str]
    face_count: int
    edge_count: int
    symmetry_order: int
    symmetric: bool


class DualReport(BaseModel):
    weight: str
    name: Optional[str] = None
    reference: int
    cell_types: list[CellTypeModel]
    scales: dict[str, str]
    dual_vertex_count: int
    dual_cell_count: int
    shells: list[ShellModel]
    sample_cell: Optional[DualCellModel] = None


class MeshModel(BaseModel):
    vertices: list[list[str]]
    floats: Optional[list[list[float]]] = None
    decimals: Optional[list[list[str]]] = None
    faces: list[list[int]]
    edge_count: int
    metadata: dict[str, str] = Field(default_factory=dict)

    @computed_field
    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - self.edge_count + len(self.faces)


class CatalogEntry(BaseModel):
    weight: str
    name: str
    vertex_count: int
    cell_count: int
    cell_shapes: dict[str, int]


class Catalog(RootModel[list[CatalogEntry]]):

    def __iter__(self) -> Iterator[CatalogEntry]:  # type: ignore[override]
        return iter(self.root)

    def __len__(self) -> int:
        return len(self.root)

    def find(self, weight: str) -> Optional[CatalogEntry]:
        for entry in self.root:
            if entry.weight == weight:
                return entry
        return None
