"""
W(A4) acting on weights written in Dynkin labels.

Everything here is rational: weights are tuples of Fractions and group
elements are integer matrices acting on label columns. The quaternionic
embedding of the same group lives in ``representation``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence, Union

from sympy.liealgebras.cartan_type import CartanType

from a4_polytopes.core.errors import WeightError
from a4_polytopes.logging import logger

NODES = (1, 2, 3, 4)
A3_NODES = (1, 2, 3)
GROUP_ORDER = 120
COXETER_WORD = (1, 3, 2, 4)
# r0 is the reflection in the highest root a1 + a2 + a3 + a4
AFFINE_WORD = (1, 2, 3, 4, 3, 2, 1)

Label = Union[int, str, Fraction]
Matrix = tuple[tuple[int, ...], ...]


class Weight(NamedTuple):
    """Dynkin labels ``(a1, a2, a3, a4)`` of ``a1 w1 + a2 w2 + a3 w3 + a4 w4``.

    Arithmetic operators are vector operations, not tuple concatenation.
    """

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction

    @classmethod
    def of(cls, *labels: Label) -> "Weight":
        if len(labels) == 1 and isinstance(labels[0], (tuple, list)):
            labels = tuple(labels[0])
        if len(labels) != 4:
            raise WeightError(f"A4 weights have 4 Dynkin labels, got {len(labels)}")
        try:
            return cls(*(Fraction(x) for x in labels))
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise WeightError(f"Malformed Dynkin label in {labels!r}: {e}") from e

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self)

    def is_zero(self) -> bool:
        return not any(self)

    def __add__(self, other: "Weight") -> "Weight":  # type: ignore[override]
        return Weight(*(x + y for x, y in zip(self, other)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(*(x - y for x, y in zip(self, other)))

    def __neg__(self) -> "Weight":
        return Weight(*(-x for x in self))

    def __mul__(self, scalar: Union[int, Fraction]) -> "Weight":  # type: ignore[override]
        return Weight(*(Fraction(scalar) * x for x in self))

    __rmul__ = __mul__  # type: ignore[assignment]

    def label_string(self) -> str:
        if all(x.denominator == 1 and 0 <= x <= 9 for x in self):
            return "".join(str(x) for x in self)
        return "(" + ", ".join(str(x) for x in self) + ")"

    def __str__(self) -> str:
        return self.label_string()


ZERO_WEIGHT = Weight.of(0, 0, 0, 0)


def fundamental_weight(k: int) -> Weight:
    _check_node(k)
    return Weight.of(*(1 if i == k else 0 for i in NODES))


def _check_node(i: int, allow_affine: bool = False) -> None:
    allowed = (0,) + NODES if allow_affine else NODES
    if i not in allowed:
        raise WeightError(f"Node index {i} outside {allowed}")


@dataclass(frozen=True)
class CartanData:
    matrix: tuple[tuple[int, ...], ...]
    inverse: tuple[tuple[Fraction, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.matrix[i - 1][j - 1]

    def inverse_entry(self, i: int, j: int) -> Fraction:
        return self.inverse[i - 1][j - 1]


@lru_cache(maxsize=None)
def cartan_data() -> CartanData:
    cartan = CartanType("A4").cartan_matrix()
    inverse = cartan.inv()
    size = cartan.shape[0]
    matrix = tuple(tuple(int(cartan[i, j]) for j in range(size)) for i in range(size))
    inv = tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(size))
        for i in range(size)
    )
    return CartanData(matrix=matrix, inverse=inv)


def scalar_product(w: Weight, v: Weight) -> Fraction:
    """``(w, v) = w^T C^-1 v``."""
    inv = cartan_data().inverse
    return sum((w[i] * inv[i][j] * v[j] for i in range(4) for j in range(4)), Fraction(0))


def norm_squared(w: Weight) -> Fraction:
    return scalar_product(w, w)


def reflect(i: int, w: Weight) -> Weight:
    """Simple reflection r_i; ``i = 0`` is the extra node of the extended diagram."""
    _check_node(i, allow_affine=True)
    if i == 0:
        total = sum(w, Fraction(0))
        return Weight(w.a1 - total, w.a2, w.a3, w.a4 - total)
    cartan = cartan_data().matrix
    wi = w[i - 1]
    if wi == 0:
        return w
    return Weight(*(w[j] - wi * cartan[i - 1][j] for j in range(4)))


def dynkin_flip(w: Weight) -> Weight:
    return Weight(w.a4, w.a3, w.a2, w.a1)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


IDENTITY_MATRIX: Matrix = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))


@lru_cache(maxsize=None)
def reflection_matrix(i: int) -> Matrix:
    """Matrix of r_i on label columns: column i is ``e_i - C[i]``, the others are unit columns."""
    _check_node(i, allow_affine=True)
    if i == 0:
        return affine_reflection_matrix()
    cartan = cartan_data().matrix
    return tuple(
        tuple((int(j == k) - cartan[i - 1][j]) if k == i - 1 else int(j == k) for k in range(4))
        for j in range(4)
    )


@lru_cache(maxsize=None)
def affine_reflection_matrix() -> Matrix:
    result = IDENTITY_MATRIX
    for i in AFFINE_WORD:
        result = _matmul(result, reflection_matrix(i))
    return result


@dataclass(frozen=True)
class GroupElement:
    """An element of W(A4): an integer matrix on Dynkin labels plus a word witnessing it.

    Words read like products, ``(1, 3)`` is ``r1 r3``, so the rightmost
    reflection acts first. Equality only looks at the matrix.
    """

    matrix: Matrix
    word: tuple[int, ...] = field(default=(), compare=False)

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "GroupElement":
        matrix = IDENTITY_MATRIX
        for i in word:
            matrix = _matmul(matrix, reflection_matrix(i))
        return cls(matrix, tuple(word))

    def apply(self, w: Weight) -> Weight:
        m = self.matrix
        return Weight(*(sum((m[j][k] * w[k] for k in range(4)), Fraction(0)) for j in range(4)))

    def __call__(self, w: Weight) -> Weight:
        return self.apply(w)

    def compose(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(_matmul(self.matrix, other.matrix), self.word + other.word)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return self.compose(other)

    def inverse(self) -> "GroupElement":
        # every generator is an involution
        return GroupElement.from_word(tuple(reversed(self.word)))

    def is_identity(self) -> bool:
        return self.matrix == IDENTITY_MATRIX

    def order(self) -> int:
        power, n = self, 1
        while not power.is_identity():
            power = power.compose(self)
            n += 1
        return n


IDENTITY = GroupElement(IDENTITY_MATRIX, ())


def generator(i: int) -> GroupElement:
    _check_node(i, allow_affine=True)
    if i == 0:
        return GroupElement(affine_reflection_matrix(), AFFINE_WORD)
    return GroupElement(reflection_matrix(i), (i,))


def closure(generators: Iterable[GroupElement]) -> tuple[GroupElement, ...]:
    """Breadth-first closure; words come out shortest in the given generators."""
    gens = tuple(generators)
    seen = {IDENTITY.matrix}
    elements = [IDENTITY]
    queue = deque([IDENTITY])
    while queue:
        current = queue.popleft()
        for g in gens:
            candidate = current.compose(g)
            if candidate.matrix not in seen:
                seen.add(candidate.matrix)
                elements.append(candidate)
                queue.append(candidate)
    return tuple(elements)


@dataclass(frozen=True)
class Subgroup:
    name: str
    generators: tuple[int, ...]
    elements: tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return any(g.matrix == h.matrix for h in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def fixes(self, w: Weight) -> bool:
        return all(g.apply(w) == w for g in self.elements)


@lru_cache(maxsize=None)
def generate_group() -> tuple[GroupElement, ...]:
    elements = closure(generator(i) for i in NODES)
    logger.debug(f"W(A4) generated with {len(elements)} elements")
    return elements


@lru_cache(maxsize=None)
def group_index() -> dict[Matrix, GroupElement]:
    return {g.matrix: g for g in generate_group()}


@lru_cache(maxsize=None)
def _generated_by(nodes: tuple[int, ...]) -> Subgroup:
    elements = closure(generator(i) for i in nodes)
    name = "<" + ",".join(f"r{i}" for i in nodes) + ">"
    return Subgroup(name=name, generators=nodes, elements=elements)


def parabolic(nodes: Iterable[int]) -> Subgroup:
    """Subgroup generated by the simple reflections indexed by ``nodes``."""
    key = tuple(sorted(set(nodes)))
    for i in key:
        _check_node(i)
    return _generated_by(key)


def orbit(w: Weight, nodes: Sequence[int] = NODES) -> tuple[Weight, ...]:
    """Orbit of ``w`` under the reflections in ``nodes``, sorted."""
    seen = {w}
    queue = deque([w])
    while queue:
        current = queue.popleft()
        for i in nodes:
            image = reflect(i, current)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    if tuple(nodes) == NODES:
        logger.debug(f"orbit of {w} has {len(seen)} weights")
    return tuple(sorted(seen))


def stabilizer(w: Weight) -> Subgroup:
    elements = tuple(g for g in generate_group() if g.apply(w) == w)
    generators = tuple(i for i in NODES if w[i - 1] == 0) if w.is_dominant() else ()
    return Subgroup(name=f"Stab({w})", generators=generators, elements=elements)


def dominant_representative(w: Weight, nodes: Sequence[int] = NODES) -> tuple[Weight, tuple[int, ...]]:
    """Raise ``w`` into the dominant chamber of the reflections in ``nodes``.

    Returns the dominant weight and the word ``u`` with ``u w`` dominant.
    """
    word: tuple[int, ...] = ()
    current = w
    while True:
        negative = next((i for i in nodes if current[i - 1] < 0), None)
        if negative is None:
            return current, word
        current = reflect(negative, current)
        word = (negative,) + word


def coxeter_group_element() -> GroupElement:
    return GroupElement.from_word(COXETER_WORD)


@lru_cache(maxsize=None)
def coxeter_plane_subgroup() -> Subgroup:
    """The dihedral group of order 10 generated by R1 = r1 r3 and R2 = r2 r4."""
    elements = closure((GroupElement.from_word((1, 3)), GroupElement.from_word((2, 4))))
    return Subgroup(name="<r1r3,r2r4>", generators=(), elements=elements)


CONJUGATE_A3_NODES = ((1, 2, 3), (2, 3, 4), (3, 4, 0), (4, 0, 1), (0, 1, 2))


def conjugate_a3_subgroups() -> tuple[Subgroup, ...]:
    """The five embeddings of W(A3) read off the extended diagram."""
    return tuple(_generated_by(nodes) for nodes in CONJUGATE_A3_NODES)
