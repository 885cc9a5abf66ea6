from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from a4_polytopes.core.field import ONE, ZERO, FieldScalar, Scalar


@dataclass(frozen=True, slots=True)
class Quaternion:
    """``q0 + q1 e1 + q2 e2 + q3 e3`` with exact components in Q(sqrt2, sqrt5)."""

    q0: FieldScalar = ZERO
    q1: FieldScalar = ZERO
    q2: FieldScalar = ZERO
    q3: FieldScalar = ZERO

    def __post_init__(self) -> None:
        for name in ("q0", "q1", "q2", "q3"):
            value = getattr(self, name)
            if not isinstance(value, FieldScalar):
                object.__setattr__(self, name, FieldScalar.coerce(value))

    @classmethod
    def of(cls, q0: Scalar = 0, q1: Scalar = 0, q2: Scalar = 0, q3: Scalar = 0) -> "Quaternion":
        return cls(FieldScalar.coerce(q0), FieldScalar.coerce(q1),
                   FieldScalar.coerce(q2), FieldScalar.coerce(q3))

    @property
    def components(self) -> tuple[FieldScalar, FieldScalar, FieldScalar, FieldScalar]:
        return (self.q0, self.q1, self.q2, self.q3)

    def __iter__(self) -> Iterator[FieldScalar]:
        return iter(self.components)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.q0 + other.q0, self.q1 + other.q1,
                          self.q2 + other.q2, self.q3 + other.q3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.q0 - other.q0, self.q1 - other.q1,
                          self.q2 - other.q2, self.q3 - other.q3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other: "Quaternion | Scalar") -> "Quaternion":
        if isinstance(other, Quaternion):
            return qmul(self, other)
        s = FieldScalar.coerce(other)
        return Quaternion(self.q0 * s, self.q1 * s, self.q2 * s, self.q3 * s)

    def __rmul__(self, other: Scalar) -> "Quaternion":
        return self * other

    def __truediv__(self, other: Scalar) -> "Quaternion":
        return self * FieldScalar.coerce(other).inverse()

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def norm(self) -> FieldScalar:
        return qdot(self, self)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def tilde(self) -> "Quaternion":
        return tilde(self)

    @property
    def canonical_key(self) -> tuple:
        return tuple(c.canonical_key for c in self.components)

    def to_exact_strings(self) -> list[str]:
        return [c.to_exact_string() for c in self.components]

    def to_floats(self) -> list[float]:
        return [float(c) for c in self.components]

    def __str__(self) -> str:
        return "(" + ", ".join(self.to_exact_strings()) + ")"


QONE = Quaternion(ONE)
E1 = Quaternion(ZERO, ONE)
E2 = Quaternion(ZERO, ZERO, ONE)
E3 = Quaternion(ZERO, ZERO, ZERO, ONE)
UNITS = (E1, E2, E3)


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Quaternion product with e_i e_j = -delta_ij + eps_ijk e_k."""
    a0, a1, a2, a3 = p.components
    b0, b1, b2, b3 = q.components
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
        a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
    )


def qdot(p: Quaternion, q: Quaternion) -> FieldScalar:
    return p.q0 * q.q0 + p.q1 * q.q1 + p.q2 * q.q2 + p.q3 * q.q3


def tilde(q: Quaternion) -> Quaternion:
    """Component-wise tau <-> sigma exchange."""
    return Quaternion(*(c.galois_conjugate() for c in q.components))


def _first_nonzero_sign(q: Quaternion) -> int:
    for c in q.components:
        if not c.is_zero():
            return c.sign()
    return 0


@dataclass(frozen=True, slots=True)
class OrthogonalAction:
    """The O(4) map ``[a, b]: q -> a q b`` or, when starred, ``[a, b]*: q -> a conj(q) b``.

    Pairs are stored with the first nonzero component of ``a`` positive, so
    ``[a, b]`` and ``[-a, -b]`` compare equal.
    """

    a: Quaternion
    b: Quaternion
    starred: bool = False

    def __post_init__(self) -> None:
        if _first_nonzero_sign(self.a) < 0:
            object.__setattr__(self, "a", -self.a)
            object.__setattr__(self, "b", -self.b)

    def __call__(self, q: Quaternion) -> Quaternion:
        return apply_action(self, q)

    def compose(self, other: "OrthogonalAction") -> "OrthogonalAction":
        """``self o other``: apply ``other`` first."""
        a, b, c, d = self.a, self.b, other.a, other.b
        if not self.starred:
            return OrthogonalAction(a * c, d * b, other.starred)
        return OrthogonalAction(a * d.conjugate(), c.conjugate() * b, not other.starred)

    def __matmul__(self, other: "OrthogonalAction") -> "OrthogonalAction":
        return self.compose(other)

    def inverse(self) -> "OrthogonalAction":
        if self.starred:
            return OrthogonalAction(self.b, self.a, True)
        return OrthogonalAction(self.a.conjugate(), self.b.conjugate(), False)

    def power(self, n: int) -> "OrthogonalAction":
        base = self if n >= 0 else self.inverse()
        result = IDENTITY_ACTION
        for _ in range(abs(n)):
            result = base.compose(result)
        return result

    def is_identity(self) -> bool:
        return self == IDENTITY_ACTION

    @property
    def canonical_key(self) -> tuple:
        return (self.starred, self.a.canonical_key, self.b.canonical_key)

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}]" + ("*" if self.starred else "")


IDENTITY_ACTION = OrthogonalAction(QONE, QONE, False)


def apply_action(g: OrthogonalAction, q: Quaternion) -> Quaternion:
    if g.starred:
        return qmul(qmul(g.a, q.conjugate()), g.b)
    return qmul(qmul(g.a, q), g.b)


def reflection_action(root: Quaternion) -> OrthogonalAction:
    """``[r, -r]*``, the reflection in the hyperplane orthogonal to a unit quaternion ``r``."""
    return OrthogonalAction(root, -root, True)
