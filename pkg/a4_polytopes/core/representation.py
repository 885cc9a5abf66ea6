"""
The geometric realization of W(A4) on unit quaternions.

Simple roots are unit quaternions (the physical roots are sqrt2 times
these), the reflections are ``r_i = [a_i, -a_i]*`` and the whole group is
``{[p, c~ conj(tilde p) c]} + {[p, -c~ conj(tilde p) c]*}`` for p in the
binary icosahedral group I, with ``c = (e3 - e2)/sqrt2`` and ``c~`` its
conjugate.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from a4_polytopes.core.binary_groups import build_set
from a4_polytopes.core.data_models import RepresentationReport
from a4_polytopes.core.errors import WeightError
from a4_polytopes.core.field import HALF, SIGMA, SQRT2, SQRT5, SQRT10, TAU, ZERO, FieldScalar
from a4_polytopes.core.quaternion import (
    IDENTITY_ACTION,
    OrthogonalAction,
    Quaternion,
    apply_action,
    qdot,
    reflection_action,
)
from a4_polytopes.core.weyl import (
    COXETER_WORD,
    NODES,
    GroupElement,
    Weight,
    dynkin_flip,
    fundamental_weight,
    generate_group,
    group_index,
    orbit,
)
from a4_polytopes.logging import logger

_INV_SQRT2 = SQRT2 / 2
_INV_SQRT10 = SQRT10 / 10

ALPHA: dict[int, Quaternion] = {
    0: Quaternion(HALF, ZERO, -HALF * TAU, -HALF * SIGMA),
    1: Quaternion.of(-1),
    2: Quaternion(HALF, HALF, HALF, HALF),
    3: Quaternion.of(0, -1),
    4: Quaternion(ZERO, HALF, -HALF * SIGMA, -HALF * TAU),
}

OMEGA: dict[int, Quaternion] = {
    1: Quaternion(-SQRT5, ZERO, TAU, -SIGMA) * _INV_SQRT10,
    2: Quaternion(ZERO, ZERO, 2 * TAU, -2 * SIGMA) * _INV_SQRT10,
    3: Quaternion(ZERO, -SQRT5, TAU * TAU, -SIGMA * SIGMA) * _INV_SQRT10,
    4: Quaternion(ZERO, ZERO, FieldScalar(2), FieldScalar(-2)) * _INV_SQRT10,
}

C = Quaternion(ZERO, ZERO, -_INV_SQRT2, _INV_SQRT2)

# Coxeter element d = r1 r3 r2 r4 = [COXETER_ALPHA, COXETER_BETA]
COXETER_ALPHA = Quaternion(-HALF * SIGMA, ZERO, HALF, HALF * TAU)
COXETER_BETA = Quaternion(-HALF * TAU, ZERO, HALF * SIGMA, HALF)


@dataclass(frozen=True)
class RootData:
    alpha: tuple[Quaternion, Quaternion, Quaternion, Quaternion]
    alpha0: Quaternion
    omega: tuple[Quaternion, Quaternion, Quaternion, Quaternion]
    c: Quaternion


def root_data() -> RootData:
    return RootData(
        alpha=tuple(ALPHA[i] for i in NODES),  # type: ignore[arg-type]
        alpha0=ALPHA[0],
        omega=tuple(OMEGA[i] for i in NODES),  # type: ignore[arg-type]
        c=C,
    )


def partner(p: Quaternion) -> Quaternion:
    """``c~ conj(tilde p) c``, the right factor paired with ``p``."""
    return C.conjugate() * p.tilde().conjugate() * C


def weight_to_quaternion(w: Weight) -> Quaternion:
    result = Quaternion()
    for i in NODES:
        label = w[i - 1]
        if label:
            result = result + OMEGA[i] * label
    return result


def quaternion_to_weight(q: Quaternion) -> Weight:
    """Dynkin labels ``(sqrt2 a_i, q)``; raises WeightError when they are not rational."""
    labels = []
    for i in NODES:
        value = SQRT2 * qdot(ALPHA[i], q)
        if not value.is_rational():
            raise WeightError(f"{q} is not a rational combination of the fundamental weights")
        labels.append(value.to_fraction())
    return Weight(*labels)


def simple_reflection(i: int) -> OrthogonalAction:
    if i not in ALPHA:
        raise WeightError(f"Node index {i} outside 0..4")
    return reflection_action(ALPHA[i])


def action_for_word(word: Sequence[int]) -> OrthogonalAction:
    result = IDENTITY_ACTION
    for i in word:
        result = result.compose(simple_reflection(i))
    return result


def _sorted_actions(actions: Iterable[OrthogonalAction]) -> tuple[OrthogonalAction, ...]:
    return tuple(sorted(set(actions), key=lambda g: g.canonical_key))


@lru_cache(maxsize=None)
def build_w_a4() -> tuple[OrthogonalAction, ...]:
    actions = []
    for p in build_set("I").elements:
        q = partner(p)
        actions.append(OrthogonalAction(p, q, False))
        actions.append(OrthogonalAction(p, -q, True))
    group = _sorted_actions(actions)
    logger.debug(f"quaternionic W(A4) built with {len(group)} actions")
    return group


@lru_cache(maxsize=None)
def build_aut_a4() -> tuple[OrthogonalAction, ...]:
    """W(A4) extended by the diagram symmetry; the extra coset contains ``q -> -q``."""
    actions = list(build_w_a4())
    for p in build_set("I").elements:
        q = partner(p)
        actions.append(OrthogonalAction(p, -q, False))
        actions.append(OrthogonalAction(p, q, True))
    return _sorted_actions(actions)


@lru_cache(maxsize=None)
def build_w_a3() -> tuple[OrthogonalAction, ...]:
    """The parabolic <r1, r2, r3> in the same pairing, with p in the binary tetrahedral group."""
    actions = []
    for p in build_set("T").elements:
        q = partner(p)
        actions.append(OrthogonalAction(p, q, False))
        actions.append(OrthogonalAction(p, -q, True))
    return _sorted_actions(actions)


def generate_actions(generators: Iterable[OrthogonalAction]) -> tuple[OrthogonalAction, ...]:
    gens = tuple(generators)
    seen = {IDENTITY_ACTION}
    queue = deque([IDENTITY_ACTION])
    while queue:
        current = queue.popleft()
        for g in gens:
            candidate = current.compose(g)
            if candidate not in seen:
                seen.add(candidate)
                queue.append(candidate)
    return _sorted_actions(seen)


def _fingerprint(action: OrthogonalAction) -> tuple[Quaternion, ...]:
    return tuple(apply_action(action, OMEGA[i]) for i in NODES)


def _element_fingerprint(g: GroupElement) -> tuple[Quaternion, ...]:
    return tuple(weight_to_quaternion(g.apply(fundamental_weight(i))) for i in NODES)


DEFAULT_CHECK_WEIGHTS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1))


def verify_representation(
    weights: Optional[Iterable[Sequence[int]]] = None,
) -> RepresentationReport:
    """Match every weight-space element with the quaternionic action that agrees on w1..w4.

    Checks that the matching is a bijection, that it is multiplicative
    against each simple reflection and that weight-space orbits land on the
    quaternionic orbits.
    """
    group = generate_group()
    actions = build_w_a4()
    by_fingerprint: dict[tuple[Quaternion, ...], OrthogonalAction] = {}
    for action in actions:
        by_fingerprint.setdefault(_fingerprint(action), action)

    report = RepresentationReport(
        weyl_order=len(group),
        quaternion_order=len(actions),
        distinct_fingerprints=len(by_fingerprint),
    )

    mapping: dict[tuple, OrthogonalAction] = {}
    for g in group:
        action = by_fingerprint.get(_element_fingerprint(g))
        if action is None:
            report.counterexample = f"no quaternionic action matches the word {g.word}"
            logger.error(f"Representation check failed: {report.counterexample}")
            return report
        mapping[g.matrix] = action
    report.bijective = (
        len(set(mapping.values())) == len(group) == len(actions) == len(by_fingerprint)
    )

    report.generators_match = all(
        mapping[GroupElement.from_word((i,)).matrix] == simple_reflection(i) for i in NODES
    )

    index = group_index()
    homomorphism = True
    for g in group:
        for i in NODES:
            product = index[g.compose(GroupElement.from_word((i,))).matrix]
            if mapping[product.matrix] != mapping[g.matrix].compose(simple_reflection(i)):
                homomorphism = False
                report.counterexample = f"phi({g.word} r{i}) != phi({g.word}) phi(r{i})"
                break
        if not homomorphism:
            break
    report.homomorphism = homomorphism

    orbits_match = True
    for labels in weights if weights is not None else DEFAULT_CHECK_WEIGHTS:
        w = Weight.of(*labels)
        lifted = {weight_to_quaternion(v) for v in orbit(w)}
        point = weight_to_quaternion(w)
        images = {apply_action(action, point) for action in actions}
        if lifted != images:
            orbits_match = False
            report.counterexample = report.counterexample or f"orbit of {w} differs"
            break
    report.orbits_match = orbits_match

    report.passed = bool(
        report.bijective and report.generators_match and report.homomorphism and report.orbits_match
    )
    if report.passed:
        logger.info("Quaternionic W(A4) agrees with the weight-space group on all 120 elements")
    else:
        logger.error(f"Representation check failed: {report.counterexample}")
    return report


def coxeter_element() -> OrthogonalAction:
    return action_for_word(COXETER_WORD)


def coxeter_pair() -> tuple[Quaternion, Quaternion]:
    """``(alpha, beta)`` with ``beta = c~ conj(tilde alpha) c``."""
    return COXETER_ALPHA, partner(COXETER_ALPHA)


def induced_permutation(action: OrthogonalAction, points: Sequence[Quaternion]) -> tuple[int, ...]:
    """Index permutation ``action`` induces on ``points``; raises if the set is not preserved."""
    position = {q: i for i, q in enumerate(points)}
    try:
        return tuple(position[apply_action(action, q)] for q in points)
    except KeyError as e:
        raise WeightError(f"{action} does not preserve the given point set") from e


def flipped_orbit_matches(w: Weight) -> bool:
    """The extra coset of Aut(A4) carries the orbit of ``w`` onto the orbit of its flip."""
    proper = set(build_w_a4())
    extra = [g for g in build_aut_a4() if g not in proper]
    target = {weight_to_quaternion(v) for v in orbit(dynkin_flip(w))}
    points = [weight_to_quaternion(v) for v in orbit(w)]
    return all({apply_action(g, q) for q in points} == target for g in extra)

