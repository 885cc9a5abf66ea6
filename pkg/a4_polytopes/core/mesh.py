from __future__ import annotations

import io
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np

from a4_polytopes.core.data_models import MeshModel, decimal_rows, exact_rows, float_rows
from a4_polytopes.core.errors import DegenerateGeometryError, PolytopeError
from a4_polytopes.core.field import FieldScalar, field_rank
from a4_polytopes.logging import logger

Point3 = tuple[FieldScalar, FieldScalar, FieldScalar]

MAX_POINTS = 200


def _sub(p: Sequence[FieldScalar], q: Sequence[FieldScalar]) -> Point3:
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2])


def _cross(u: Sequence[FieldScalar], v: Sequence[FieldScalar]) -> Point3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u: Sequence[FieldScalar], v: Sequence[FieldScalar]) -> FieldScalar:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


@dataclass(frozen=True, eq=False)
class Mesh3D:
    vertices: tuple[Point3, ...]
    faces: tuple[tuple[int, ...], ...]
    metadata: dict[str, str] = field(default_factory=dict)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        edges = set()
        for face in self.faces:
            for a, b in zip(face, face[1:] + face[:1]):
                edges.add((min(a, b), max(a, b)))
        return tuple(sorted(edges))

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def float_vertices(self) -> np.ndarray:
        return np.array([[float(c) for c in p] for p in self.vertices], dtype=float)

    def to_model(self, digits: int = 12, exact: bool = False) -> MeshModel:
        return MeshModel(
            vertices=exact_rows(self.vertices),
            floats=None if exact else float_rows(self.vertices, digits),
            decimals=decimal_rows(self.vertices, digits, exact),
            faces=[list(face) for face in self.faces],
            edge_count=len(self.edges),
            metadata=dict(self.metadata),
        )


def _order_cycle(points: np.ndarray, indices: list[int], normal: np.ndarray) -> tuple[int, ...]:
    """Counter-clockwise around the outward normal; floats only decide the display order."""
    face = points[indices]
    centroid = face.mean(axis=0)
    u = face[0] - centroid
    v = np.cross(normal, u)
    relative = face - centroid
    angles = np.arctan2(relative @ v, relative @ u)
    return tuple(indices[i] for i in np.argsort(angles, kind="stable"))


def extract_faces(points: Iterable[Sequence[FieldScalar]], metadata: Optional[dict[str, str]] = None) -> Mesh3D:
    """Faces of the convex hull of a small exact point set, by supporting planes through triples."""
    unique: list[Point3] = []
    seen = set()
    for p in points:
        point = tuple(FieldScalar.coerce(c) for c in p)
        if len(point) != 3:
            raise PolytopeError(f"extract_faces expects 3-vectors, got {len(point)} components")
        if point not in seen:
            seen.add(point)
            unique.append(point)  # type: ignore[arg-type]
    n = len(unique)
    if n > MAX_POINTS:
        logger.warning(f"extract_faces on {n} points is slow above {MAX_POINTS}")
    rank = field_rank([_sub(p, unique[0]) for p in unique[1:]]) if n > 1 else 0
    if rank < 3:
        raise DegenerateGeometryError(rank)

    floats = np.array([[float(c) for c in p] for p in unique], dtype=float)
    faces: list[tuple[int, ...]] = []
    face_sets: list[frozenset[int]] = []
    for i, j, k in combinations(range(n), 3):
        triple = {i, j, k}
        if any(triple <= s for s in face_sets):
            continue
        normal = _cross(_sub(unique[j], unique[i]), _sub(unique[k], unique[i]))
        if all(c.is_zero() for c in normal):
            continue
        on_plane = []
        side = 0
        supporting = True
        for m in range(n):
            s = _dot(normal, _sub(unique[m], unique[i])).sign()
            if s == 0:
                on_plane.append(m)
            elif side == 0:
                side = s
            elif s != side:
                supporting = False
                break
        if not supporting:
            continue
        # remaining points must sit on the negative side of an outward normal
        outward = np.array([float(c) for c in normal]) * (-side)
        face_sets.append(frozenset(on_plane))
        faces.append(_order_cycle(floats, on_plane, outward))
    mesh = Mesh3D(vertices=tuple(unique), faces=tuple(faces), metadata=dict(metadata or {}))
    logger.debug(f"extracted {len(mesh.faces)} faces and {len(mesh.edges)} edges from {n} points")
    return mesh


def _format(value: FieldScalar, digits: int) -> str:
    text = value.to_decimal(digits)
    return text[:-2] if text.endswith(".0") else text


def write_off(mesh: Mesh3D, stream: TextIO, digits: int = 12) -> None:
    stream.write('OFF\n')
    stream.write('{} {} {}\n'.format(len(mesh.vertices), len(mesh.faces), len(mesh.edges)))
    for vert in mesh.vertices:
        stream.write(' '.join(_format(x, digits) for x in vert))
        stream.write('\n')
    for face in mesh.faces:
        stream.write('{}'.format(len(face)))
        for fi in face:
            stream.write(' {}'.format(fi))
        stream.write('\n')


def write_obj(mesh: Mesh3D, stream: TextIO, digits: int = 12) -> None:
    for key, value in sorted(mesh.metadata.items()):
        stream.write(f'# {key}: {value}\n')
    for vert in mesh.vertices:
        stream.write('v')
        for x in vert:
            stream.write(' {}'.format(_format(x, digits)))
        stream.write('\n')
    for face in mesh.faces:
        stream.write('f')
        for fi in face:
            stream.write(' {}'.format(int(fi) + 1))
        stream.write('\n')


def to_off(mesh: Mesh3D, digits: int = 12) -> str:
    buffer = io.StringIO()
    write_off(mesh, buffer, digits)
    return buffer.getvalue()


def to_obj(mesh: Mesh3D, digits: int = 12) -> str:
    buffer = io.StringIO()
    write_obj(mesh, buffer, digits)
    return buffer.getvalue()


def parse_off(text: str) -> tuple[list[tuple[float, ...]], list[tuple[int, ...]], int]:
    """Read back vertices, faces and the header edge count of an OFF document."""
    lines = [line.strip() for line in text.splitlines() if line.strip() and not line.startswith('#')]
    if not lines or lines[0] != 'OFF':
        raise PolytopeError("OFF document must start with 'OFF'")
    n_vertices, n_faces, n_edges = (int(x) for x in lines[1].split())
    vertices = [tuple(float(x) for x in line.split()) for line in lines[2:2 + n_vertices]]
    faces = []
    for line in lines[2 + n_vertices:2 + n_vertices + n_faces]:
        count, *indices = (int(x) for x in line.split())
        if count != len(indices):
            raise PolytopeError(f"face line {line!r} announces {count} indices")
        faces.append(tuple(indices))
    if len(vertices) != n_vertices or len(faces) != n_faces:
        raise PolytopeError("OFF body does not match its header counts")
    return vertices, faces, n_edges
