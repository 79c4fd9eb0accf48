"""L-fuzzy sets and relations over a finite universe."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Mapping, Sequence

from .errors import EnumerationTooLarge, MixedContext, UnknownPoint
from .lattice import DmhAlgebra

# Enumeration caps; DMH_ENUM_CAP overrides all of them at call time.
SET_CAP = 10_000
RELATION_CAP = 1_000_000
HARD_CAP = 1_000_000


def enum_cap(default: int) -> int:
    raw = os.environ.get("DMH_ENUM_CAP")
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def check_cap(count: int, default: int, what: str) -> None:
    limit = enum_cap(default)
    if count > limit:
        raise EnumerationTooLarge(f"{what}: {count} items exceeds cap {limit}")


@dataclass(frozen=True)
class Universe:
    points: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        pts = tuple(str(p) for p in self.points)
        if not pts:
            raise ValueError("universe must be nonempty")
        if len(set(pts)) != len(pts):
            raise ValueError("universe points must be unique")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(pts)})

    @classmethod
    def of(cls, points: Sequence[str] | int) -> Universe:
        """``Universe.of(3)`` names the points x, y, z (then p3, p4, ...)."""
        if isinstance(points, int):
            default = ("x", "y", "z")
            pts = [default[i] if i < 3 else f"p{i}" for i in range(points)]
            return cls(tuple(pts))
        return cls(tuple(points))

    def __len__(self) -> int:
        return len(self.points)

    def index(self, point: str) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise UnknownPoint(f"{point!r} is not in the universe") from None


def _same_context(a: FuzzySet | FuzzyRelation, b: FuzzySet | FuzzyRelation) -> None:
    if a.algebra is not b.algebra or a.universe != b.universe:
        raise MixedContext("operands belong to different algebras or universes")


@dataclass(frozen=True, slots=True)
class FuzzySet:
    """A map from universe points to algebra elements, stored as indices."""

    algebra: DmhAlgebra
    universe: Universe
    values: tuple[int, ...]

    @classmethod
    def from_mapping(cls, alg: DmhAlgebra, universe: Universe, values: Mapping[str, str]) -> FuzzySet:
        missing = [p for p in universe.points if p not in values]
        if missing:
            raise UnknownPoint(f"fuzzy set undefined on {missing}")
        for p in values:
            universe.index(p)
        return cls(alg, universe, tuple(alg.index(values[p]) for p in universe.points))

    def __getitem__(self, point: str) -> str:
        return self.algebra.element(self.values[self.universe.index(point)])

    def as_dict(self) -> dict[str, str]:
        el = self.algebra.elements
        return {p: el[v] for p, v in zip(self.universe.points, self.values)}

    def __le__(self, other: FuzzySet) -> bool:
        _same_context(self, other)
        leq = self.algebra.leq
        return all(leq[a][b] for a, b in zip(self.values, other.values))

    def __ge__(self, other: FuzzySet) -> bool:
        return other <= self

    def __or__(self, other: FuzzySet) -> FuzzySet:
        return pointwise("JOIN", self, other)

    def __and__(self, other: FuzzySet) -> FuzzySet:
        return pointwise("MEET", self, other)

    def __invert__(self) -> FuzzySet:
        return pointwise("NEG", self)

    def __repr__(self) -> str:
        body = ", ".join(f"{p}:{v}" for p, v in self.as_dict().items())
        return f"FuzzySet({{{body}}})"


@dataclass(frozen=True, slots=True)
class FuzzyRelation:
    """A map U x U -> L, stored row-major as index tuples."""

    algebra: DmhAlgebra
    universe: Universe
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_matrix(
        cls, alg: DmhAlgebra, universe: Universe, matrix: Sequence[Sequence[str]]
    ) -> FuzzyRelation:
        n = len(universe)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError(f"relation matrix must be {n}x{n}")
        return cls(alg, universe, tuple(tuple(alg.index(v) for v in row) for row in matrix))

    @classmethod
    def from_function(cls, alg: DmhAlgebra, universe: Universe, fn) -> FuzzyRelation:
        pts = universe.points
        return cls.from_matrix(alg, universe, [[fn(x, y) for y in pts] for x in pts])

    def __call__(self, x: str, y: str) -> str:
        u = self.universe
        return self.algebra.element(self.rows[u.index(x)][u.index(y)])

    def matrix(self) -> list[list[str]]:
        el = self.algebra.elements
        return [[el[v] for v in row] for row in self.rows]

    def __repr__(self) -> str:
        return f"FuzzyRelation({self.matrix()})"


_BINARY = ("JOIN", "MEET", "ARROW", "HEYTING")


def pointwise(op_tag: str, a: FuzzySet, b: FuzzySet | None = None) -> FuzzySet:
    alg = a.algebra
    if op_tag == "NEG":
        if b is not None:
            raise ValueError("NEG is unary")
        neg = alg.neg
        return FuzzySet(alg, a.universe, tuple(neg[v] for v in a.values))
    if op_tag not in _BINARY:
        raise ValueError(f"unknown pointwise operation {op_tag!r}")
    if b is None:
        raise ValueError(f"{op_tag} is binary")
    _same_context(a, b)
    if op_tag == "JOIN":
        t = alg.join
        vals = tuple(t[x][y] for x, y in zip(a.values, b.values))
    elif op_tag == "MEET":
        t = alg.meet
        vals = tuple(t[x][y] for x, y in zip(a.values, b.values))
    elif op_tag == "HEYTING":
        t = alg.implies
        vals = tuple(t[x][y] for x, y in zip(a.values, b.values))
    else:
        j, neg = alg.join, alg.neg
        vals = tuple(j[neg[x]][y] for x, y in zip(a.values, b.values))
    return FuzzySet(alg, a.universe, vals)


def constant_set(alg: DmhAlgebra, universe: Universe, a: str | int) -> FuzzySet:
    i = alg.index(a) if isinstance(a, str) else a
    return FuzzySet(alg, universe, (i,) * len(universe))


def bottom_set(alg: DmhAlgebra, universe: Universe) -> FuzzySet:
    return constant_set(alg, universe, alg.bottom)


def top_set(alg: DmhAlgebra, universe: Universe) -> FuzzySet:
    return constant_set(alg, universe, alg.top)


def singleton(alg: DmhAlgebra, universe: Universe, x: str) -> FuzzySet:
    k = universe.index(x)
    return FuzzySet(
        alg, universe, tuple(alg.top if i == k else alg.bottom for i in range(len(universe)))
    )


def decomposition_check(a: FuzzySet) -> bool:
    """Rebuild ``a`` as a join of scaled singletons and as a meet of shifted co-singletons."""
    alg, u = a.algebra, a.universe
    as_join = bottom_set(alg, u)
    as_meet = top_set(alg, u)
    for x in u.points:
        level = constant_set(alg, u, a.values[u.index(x)])
        ix = singleton(alg, u, x)
        as_join = as_join | (level & ix)
        as_meet = as_meet & (level | ~ix)
    return as_join == a and as_meet == a


def set_count(alg: DmhAlgebra, universe: Universe) -> int:
    return alg.size ** len(universe)


def relation_count(alg: DmhAlgebra, universe: Universe) -> int:
    return alg.size ** (len(universe) ** 2)


def all_sets(alg: DmhAlgebra, universe: Universe, cap: int = HARD_CAP) -> Iterator[FuzzySet]:
    """Every fuzzy set, lexicographic in declared element order (first point most significant)."""
    check_cap(set_count(alg, universe), cap, "fuzzy set enumeration")
    for vals in product(range(alg.size), repeat=len(universe)):
        yield FuzzySet(alg, universe, vals)


def all_relations(
    alg: DmhAlgebra, universe: Universe, cap: int = RELATION_CAP
) -> Iterator[FuzzyRelation]:
    """Every relation, lexicographic over the row-major matrix."""
    n = len(universe)
    check_cap(relation_count(alg, universe), cap, "relation enumeration")
    for flat in product(range(alg.size), repeat=n * n):
        yield FuzzyRelation(alg, universe, tuple(flat[i * n:(i + 1) * n] for i in range(n)))
