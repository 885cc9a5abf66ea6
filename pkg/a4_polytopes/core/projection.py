"""
Projection of W(A4) orbits to three dimensions under W(A3) = <r1, r2, r3>.

The orbit of a dominant weight splits into W(A3) orbits of the weights
``d^i L`` (d the Coxeter element). Each slice is labelled by its
A3-dominant labels and by its U(1) charge ``-(b1 + 2 b2 + 3 b3 + 4 b4)``,
and all its vertices share the p0 coordinate ``charge / (2 sqrt5)`` in the
basis ``p0 = c, p_i = e_i c``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Sequence

from a4_polytopes.core.errors import WeightError
from a4_polytopes.core.field import SQRT5, FieldScalar
from a4_polytopes.core.quaternion import UNITS, Quaternion, qdot
from a4_polytopes.core.representation import C, weight_to_quaternion
from a4_polytopes.core.weyl import (
    A3_NODES,
    Weight,
    coxeter_group_element,
    dominant_representative,
    orbit,
)
from a4_polytopes.logging import logger

Point3 = tuple[FieldScalar, FieldScalar, FieldScalar]

P_BASIS: tuple[Quaternion, Quaternion, Quaternion, Quaternion] = (C,) + tuple(e * C for e in UNITS)  # type: ignore[assignment]


def to_p_coordinates(q: Quaternion) -> tuple[FieldScalar, FieldScalar, FieldScalar, FieldScalar]:
    return tuple(qdot(q, p) for p in P_BASIS)  # type: ignore[return-value]


def from_p_coordinates(x: Sequence[FieldScalar]) -> Quaternion:
    result = Quaternion()
    for coeff, p in zip(x, P_BASIS):
        result = result + p * coeff
    return result


def lambda_sequence(w: Weight) -> tuple[Weight, ...]:
    d = coxeter_group_element()
    sequence = [w]
    for _ in range(4):
        sequence.append(d.apply(sequence[-1]))
    return tuple(sequence)


def charge(w: Weight) -> Fraction:
    return -(w.a1 + 2 * w.a2 + 3 * w.a3 + 4 * w.a4)


def slice_offset(slice_charge: Fraction) -> FieldScalar:
    return SQRT5 * (slice_charge / 10)


def abg_parameters(b1: Fraction, b2: Fraction, b3: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    b1, b2, b3 = Fraction(b1), Fraction(b2), Fraction(b3)
    return (b1 - b3) / 2, (b1 + b3) / 2, (b1 + 2 * b2 + b3) / 2


def abg_vertices(b1: Fraction, b2: Fraction, b3: Fraction) -> set[Point3]:
    """All permutations of ``(alpha, beta, gamma)`` with an even number of sign flips."""
    abg = abg_parameters(b1, b2, b3)
    points = set()
    for perm in permutations(abg):
        for signs in product((1, -1), repeat=3):
            if signs.count(-1) % 2:
                continue
            points.add(tuple(FieldScalar(s * x) for s, x in zip(signs, perm)))
    return points  # type: ignore[return-value]


@dataclass(frozen=True)
class A3OrbitSlice:
    a3_labels: tuple[Fraction, Fraction, Fraction]
    charge: Fraction
    offset: FieldScalar
    weights: tuple[Weight, ...]
    vertices3d: tuple[Point3, ...]
    coset_indices: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.weights)

    @property
    def label(self) -> str:
        labels = "".join(str(b) for b in self.a3_labels)
        return f"O({labels})({self.charge})"


def _make_slice(dominant: Weight, indices: tuple[int, ...]) -> A3OrbitSlice:
    weights = orbit(dominant, A3_NODES)
    points = []
    offsets = set()
    for v in weights:
        x0, x1, x2, x3 = to_p_coordinates(weight_to_quaternion(v))
        offsets.add(x0)
        points.append((x1, x2, x3))
    if len(offsets) != 1:
        raise WeightError(f"W(A3) orbit of {dominant} does not lie in one p0 slice")
    return A3OrbitSlice(
        a3_labels=(dominant.a1, dominant.a2, dominant.a3),
        charge=charge(dominant),
        offset=offsets.pop(),
        weights=weights,
        vertices3d=tuple(sorted(points, key=lambda p: tuple(c.canonical_key for c in p))),
        coset_indices=indices,
    )


def dominant_slices(w: Weight) -> tuple[A3OrbitSlice, ...]:
    """One slice per distinct W(A3) orbit among ``d^i L``, in order of first coset index."""
    if not w.is_dominant():
        raise WeightError(f"dominant_slices needs a dominant weight, got {w}")
    groups: dict[tuple, list] = {}
    for i, li in enumerate(lambda_sequence(w)):
        dominant, _ = dominant_representative(li, A3_NODES)
        groups.setdefault(tuple(dominant), [dominant, []])[1].append(i)
    slices = tuple(_make_slice(dominant, tuple(indices)) for dominant, indices in groups.values())
    logger.debug(f"orbit of {w} splits into {len(slices)} W(A3) slices: "
                 f"{' + '.join(s.label for s in slices)}")
    return slices
