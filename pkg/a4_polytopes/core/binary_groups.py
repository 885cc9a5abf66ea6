from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Iterable, Literal, Optional

from a4_polytopes.core.data_models import GroupReport
from a4_polytopes.core.errors import PolytopeError
from a4_polytopes.core.field import HALF, ONE, SIGMA, SQRT2, TAU, FieldScalar
from a4_polytopes.core.quaternion import QONE, Quaternion, qmul, tilde
from a4_polytopes.logging import logger

SetName = Literal["T", "Tprime", "O", "S", "I", "Itilde"]
SET_NAMES: tuple[str, ...] = ("T", "Tprime", "O", "S", "I", "Itilde")

# one family per (basis index, coefficient) triple; the other eight are cyclic
# shifts e1 -> e2 -> e3 of these four
_S_BASE_PATTERNS = (
    ((0, TAU), (1, ONE), (3, SIGMA)),
    ((0, SIGMA), (1, ONE), (2, TAU)),
    ((0, ONE), (1, TAU), (2, SIGMA)),
    ((1, SIGMA), (2, TAU), (3, ONE)),
)


@dataclass(frozen=True)
class QuaternionSet:
    name: str
    elements: tuple[Quaternion, ...]

    @classmethod
    def from_iterable(cls, name: str, elements: Iterable[Quaternion]) -> "QuaternionSet":
        return cls(name, tuple(sorted(set(elements), key=lambda q: q.canonical_key)))

    @cached_property
    def members(self) -> frozenset[Quaternion]:
        return frozenset(self.elements)

    def __contains__(self, q: Quaternion) -> bool:
        return q in self.members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def union(self, other: "QuaternionSet", name: Optional[str] = None) -> "QuaternionSet":
        return QuaternionSet.from_iterable(name or f"{self.name}+{other.name}",
                                           self.elements + other.elements)


def _signed(terms: tuple[tuple[int, FieldScalar], ...], scale: FieldScalar) -> Iterable[Quaternion]:
    for signs in product((1, -1), repeat=len(terms)):
        coords = [FieldScalar(0)] * 4
        for (index, coeff), sign in zip(terms, signs):
            coords[index] = coeff * scale * sign
        yield Quaternion(*coords)


def _shift(pattern: tuple[tuple[int, FieldScalar], ...]) -> tuple[tuple[int, FieldScalar], ...]:
    return tuple(((i % 3) + 1 if i else 0, c) for i, c in pattern)


def s_families() -> list[tuple[tuple[int, FieldScalar], ...]]:
    families = []
    for pattern in _S_BASE_PATTERNS:
        for _ in range(3):
            families.append(pattern)
            pattern = _shift(pattern)
    return families


def _binary_tetrahedral() -> list[Quaternion]:
    elements = []
    for i in range(4):
        elements.extend(_signed(((i, ONE),), ONE))
    elements.extend(_signed(((0, ONE), (1, ONE), (2, ONE), (3, ONE)), HALF))
    return elements


def _tprime() -> list[Quaternion]:
    scale = SQRT2 / 2
    elements = []
    for i, j in combinations(range(4), 2):
        elements.extend(_signed(((i, ONE), (j, ONE)), scale))
    return elements


def _snub_set() -> list[Quaternion]:
    elements = []
    for family in s_families():
        elements.extend(_signed(family, HALF))
    return elements


@lru_cache(maxsize=None)
def build_set(name: SetName) -> QuaternionSet:
    match name:
        case "T":
            result = QuaternionSet.from_iterable("T", _binary_tetrahedral())
        case "Tprime":
            result = QuaternionSet.from_iterable("Tprime", _tprime())
        case "O":
            result = QuaternionSet.from_iterable("O", _binary_tetrahedral() + _tprime())
        case "S":
            result = QuaternionSet.from_iterable("S", _snub_set())
        case "I":
            result = QuaternionSet.from_iterable("I", _binary_tetrahedral() + _snub_set())
        case "Itilde":
            result = QuaternionSet.from_iterable("Itilde", (tilde(q) for q in build_set("I")))
        case _:
            raise PolytopeError(f"Unknown quaternion set {name!r}, expected one of {SET_NAMES}")
    logger.debug(f"quaternion set {name} built with {len(result)} elements")
    return result


def _closure_counterexample(elements: QuaternionSet) -> Optional[str]:
    for p in elements:
        for q in elements:
            if qmul(p, q) not in elements:
                return f"{p} * {q} = {qmul(p, q)} is not in {elements.name}"
    return None


def verify_group(quaternions: QuaternionSet) -> GroupReport:
    """Check closure, identity and inverses; never raises on a failed check."""
    counterexample = _closure_counterexample(quaternions)
    has_inverses = all(q.conjugate() in quaternions for q in quaternions)
    report = GroupReport(
        name=quaternions.name,
        order=len(quaternions),
        closed=counterexample is None,
        has_identity=QONE in quaternions,
        has_inverses=has_inverses,
        counterexample=counterexample,
    )
    if quaternions.name in ("S", "Tprime"):
        t = build_set("T")
        disjoint = not (t.members & quaternions.members)
        completed = t.union(quaternions)
        report.completes_with_t = disjoint and _closure_counterexample(completed) is None
    if report.is_group:
        logger.info(f"{quaternions.name} is a group of order {report.order}")
    else:
        logger.info(f"{quaternions.name} is not a group: {counterexample}")
    return report
