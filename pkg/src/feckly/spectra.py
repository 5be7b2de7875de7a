"""Max(R), J-spec(R) and abstract finite spaces with separation predicates.

Spaces are stored extensionally: a tuple of point labels plus the family of
closed subsets, each a frozenset of point positions.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

from .ideals import Ideal, all_ideals, j_spec_points, maximal_ideals
from .ring import FiniteRing, Index

Subset = frozenset[int]

MAX = "max"
JSPEC = "jspec"
ABSTRACT = "abstract"


class SpaceError(ValueError):
    pass


@dataclass(frozen=True)
class SpectrumSpace:
    points: tuple[str, ...]
    closed_family: frozenset[Subset]
    provenance: str = ABSTRACT
    ideals: tuple[Ideal, ...] = field(default=(), repr=False)
    ring: FiniteRing | None = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        full = self.everything
        if frozenset() not in self.closed_family or full not in self.closed_family:
            raise SpaceError("empty set and whole space must be closed")
        for A in self.closed_family:
            if not A <= full:
                raise SpaceError(f"closed set {sorted(A)} has points outside the space")
        for A, B in itertools.combinations(self.closed_family, 2):
            if A | B not in self.closed_family or A & B not in self.closed_family:
                raise SpaceError("closed family not closed under union/intersection")

    @property
    def everything(self) -> Subset:
        return frozenset(range(len(self.points)))

    def complement(self, A: Iterable[int]) -> Subset:
        return self.everything - frozenset(A)

    def open_family(self) -> frozenset[Subset]:
        return frozenset(self.complement(A) for A in self.closed_family)

    def labels(self, A: Iterable[int]) -> list[str]:
        return [self.points[i] for i in sorted(A)]

    def to_json(self) -> dict[str, Any]:
        return {
            "points": list(self.points),
            "closed": sorted((self.labels(A) for A in self.closed_family), key=lambda c: (len(c), c)),
        }


def abstract_space(points: Iterable[str], closed: Iterable[Iterable[str]]) -> SpectrumSpace:
    points = tuple(points)
    pos = {p: i for i, p in enumerate(points)}
    if len(pos) != len(points):
        raise SpaceError("duplicate point labels")
    try:
        family = frozenset(frozenset(pos[p] for p in c) for c in closed)
    except KeyError as exc:
        raise SpaceError(f"unknown point {exc.args[0]!r}") from None
    return SpectrumSpace(points, family, ABSTRACT)


def load_space(data: str | dict) -> SpectrumSpace:
    """Parse ``{"points": [...], "closed": [[...], ...]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    return abstract_space(data["points"], data["closed"])


def _ring_space(R: FiniteRing, provenance: str) -> SpectrumSpace:
    if R.is_trivial:
        pts = []
    else:
        pts = maximal_ideals(R) if provenance == MAX else j_spec_points(R)
    labels = tuple("{" + ",".join(P.literals()) + "}" for P in pts)
    family = frozenset(
        frozenset(k for k, P in enumerate(pts) if I <= P) for I in all_ideals(R)
    )
    return SpectrumSpace(labels, family, provenance, tuple(pts), R)


def ring_space(R: FiniteRing, provenance: str) -> SpectrumSpace:
    """Like max_spectrum/j_spectrum but the zero ring gives the empty space."""
    key = ("space", provenance)
    if key not in R._cache:
        R._cache[key] = _ring_space(R, provenance)
    return R._cache[key]


def max_spectrum(R: FiniteRing) -> SpectrumSpace:
    """Maximal ideals with closed sets V(I) for every two-sided ideal I."""
    if R.is_trivial:
        raise SpaceError("the zero ring has an empty maximal spectrum")
    return ring_space(R, MAX)


def j_spectrum(R: FiniteRing) -> SpectrumSpace:
    """Primes containing J(R) with closed sets W(I)."""
    if R.is_trivial:
        raise SpaceError("the zero ring has an empty J-spectrum")
    return ring_space(R, JSPEC)


def v_set(space: SpectrumSpace, a: Index) -> Subset:
    """Points (ideals) containing ``a``; for J-spec this is W(a)."""
    if space.provenance == ABSTRACT or space.ring is None:
        raise SpaceError("V/E sets need a ring spectrum")
    i = space.ring.index(a)
    return frozenset(k for k, P in enumerate(space.ideals) if i in P)


def e_set(space: SpectrumSpace, a: Index) -> Subset:
    return space.complement(v_set(space, a))


def v_ideal(space: SpectrumSpace, I: Ideal) -> Subset:
    if space.provenance == ABSTRACT:
        raise SpaceError("V/E sets need a ring spectrum")
    return frozenset(k for k, P in enumerate(space.ideals) if I <= P)


def e_ideal(space: SpectrumSpace, I: Ideal) -> Subset:
    return space.complement(v_ideal(space, I))


w_set, f_set = v_set, e_set


def clopen_sets(space: SpectrumSpace) -> frozenset[Subset]:
    return frozenset(A for A in space.closed_family if space.complement(A) in space.closed_family)


def disjoint_pairs(family: Iterable[Subset]) -> Iterator[tuple[Subset, Subset]]:
    family = sorted(family, key=lambda s: (len(s), sorted(s)))
    for A in family:
        for B in family:
            if not A & B:
                yield A, B


def is_strongly_zero_dimensional(space: SpectrumSpace) -> bool:
    clopen = clopen_sets(space)
    return all(
        any(A <= C1 and B <= C2 for C1, C2 in disjoint_pairs(clopen))
        for A, B in disjoint_pairs(space.closed_family)
    )


def is_hausdorff(space: SpectrumSpace) -> bool:
    opens = list(space.open_family())
    n = len(space.points)
    return all(
        any(x in U and y in V and not U & V for U in opens for V in opens)
        for x in range(n)
        for y in range(n)
        if x != y
    )


def is_normal(space: SpectrumSpace) -> bool:
    opens = list(space.open_family())
    return all(
        any(A <= U and B <= V and not U & V for U in opens for V in opens)
        for A, B in disjoint_pairs(space.closed_family)
    )


def is_discrete(space: SpectrumSpace) -> bool:
    return all(frozenset([k]) in space.closed_family for k in range(len(space.points)))
