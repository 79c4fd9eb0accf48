"""Classical binary relations and rough approximations on bitsets.

Bit ``i`` of a mask stands for the i-th declared point.  The embedding into
the two-element algebra (:func:`embed_relation`, :func:`embed_set`) is kept
as an independent route for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import MixedContext, SchemaError, UnsupportedKind
from .fuzzy import HARD_CAP, FuzzyRelation, FuzzySet, Universe, check_cap
from .lattice import standard_algebra
from .relations import PropertyKind, PropertyReport, Witness


@dataclass(frozen=True)
class CrispSet:
    universe: Universe
    mask: int

    @classmethod
    def of(cls, universe: Universe, members: Iterable[str]) -> CrispSet:
        mask = 0
        for p in members:
            mask |= 1 << universe.index(p)
        return cls(universe, mask)

    def members(self) -> tuple[str, ...]:
        return tuple(p for i, p in enumerate(self.universe.points) if self.mask >> i & 1)

    def __le__(self, other: CrispSet) -> bool:
        _same(self.universe, other.universe)
        return self.mask & ~other.mask == 0

    def __repr__(self) -> str:
        return "{" + ",".join(self.members()) + "}"


@dataclass(frozen=True)
class CrispRelation:
    """``rows[i]`` is the successor mask R(x_i) = {y : x_i R y}."""

    universe: Universe
    rows: tuple[int, ...]

    @classmethod
    def from_edges(cls, universe: Universe, edges: Iterable[Sequence[str]]) -> CrispRelation:
        rows = [0] * len(universe)
        for edge in edges:
            if len(edge) != 2:
                raise SchemaError(f"edge must have two endpoints, got {edge!r}")
            a, b = edge
            rows[universe.index(a)] |= 1 << universe.index(b)
        return cls(universe, tuple(rows))

    @classmethod
    def from_successors(cls, universe: Universe, succ: dict[str, Iterable[str]]) -> CrispRelation:
        return cls.from_edges(universe, [(x, y) for x, ys in succ.items() for y in ys])

    def related(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def successors(self, x: str) -> CrispSet:
        return CrispSet(self.universe, self.rows[self.universe.index(x)])

    def edges(self) -> list[list[str]]:
        pts = self.universe.points
        n = len(pts)
        return [[pts[i], pts[j]] for i in range(n) for j in range(n) if self.related(i, j)]


def _same(a: Universe, b: Universe) -> None:
    if a != b:
        raise MixedContext("operands live over different universes")


def _full(n: int) -> int:
    return (1 << n) - 1


def lower_mask(rel: CrispRelation, mask: int) -> int:
    out = 0
    for i, row in enumerate(rel.rows):
        if row & ~mask == 0:
            out |= 1 << i
    return out


def upper_mask(rel: CrispRelation, mask: int) -> int:
    out = 0
    for i, row in enumerate(rel.rows):
        if row & mask:
            out |= 1 << i
    return out


def crisp_approx(rel: CrispRelation, x: CrispSet, which: str) -> CrispSet:
    _same(rel.universe, x.universe)
    which = which.upper()
    if which in ("LOWER", "L"):
        return CrispSet(rel.universe, lower_mask(rel, x.mask))
    if which in ("UPPER", "U"):
        return CrispSet(rel.universe, upper_mask(rel, x.mask))
    raise ValueError(f"which must be LOWER or UPPER, got {which!r}")


CRISP_KINDS = (
    PropertyKind.SERIAL,
    PropertyKind.REFLEXIVE,
    PropertyKind.SYMMETRIC_CLASSICAL,
    PropertyKind.TRANSITIVE,
    PropertyKind.MEDIATE,
    PropertyKind.EUCLIDEAN,
    PropertyKind.ADJOINT,
    PropertyKind.FUNCTIONAL,
    PropertyKind.POSITIVE_ALLIANCE,
)


def _violation(rel: CrispRelation, kind: PropertyKind) -> tuple[int, ...] | None:
    rows = rel.rows
    n = len(rows)
    r = rel.related
    rng = range(n)
    if kind is PropertyKind.SERIAL:
        return next(((x,) for x in rng if rows[x] == 0), None)
    if kind is PropertyKind.REFLEXIVE:
        return next(((x,) for x in rng if not r(x, x)), None)
    if kind is PropertyKind.SYMMETRIC_CLASSICAL:
        return next(((x, y) for x in rng for y in rng if r(x, y) and not r(y, x)), None)
    if kind is PropertyKind.TRANSITIVE:
        return next(
            ((x, z, y) for x in rng for z in rng for y in rng if r(x, z) and r(z, y) and not r(x, y)),
            None,
        )
    if kind is PropertyKind.MEDIATE:
        return next(
            ((x, y) for x in rng for y in rng if r(x, y) and not any(r(x, z) and r(z, y) for z in rng)),
            None,
        )
    if kind is PropertyKind.EUCLIDEAN:
        return next(
            ((x, y, z) for x in rng for y in rng for z in rng if r(x, y) and r(x, z) and not r(y, z)),
            None,
        )
    if kind is PropertyKind.ADJOINT:
        # xRy needs some z with xRz whose successors lie inside {y}
        return next(
            (
                (x, y)
                for x in rng
                for y in rng
                if r(x, y) and not any(r(x, z) and rows[z] & ~(1 << y) == 0 for z in rng)
            ),
            None,
        )
    if kind is PropertyKind.FUNCTIONAL:
        return next(((x,) for x in rng if rows[x] & (rows[x] - 1)), None)
    if kind is PropertyKind.POSITIVE_ALLIANCE:
        return next(
            (
                (x, y)
                for x in rng
                for y in rng
                if not r(x, y) and not any(r(x, z) and not r(z, y) for z in rng)
            ),
            None,
        )
    raise UnsupportedKind(f"{kind.value} is not a crisp property; use its crisp collapse")


def crisp_property(rel: CrispRelation, kind: PropertyKind | str) -> PropertyReport:
    kind = PropertyKind.parse(kind)
    if kind not in CRISP_KINDS:
        raise UnsupportedKind(f"{kind.value} is not defined for crisp relations")
    found = _violation(rel, kind)
    if found is None:
        return PropertyReport(kind, True)
    pts = rel.universe.points
    return PropertyReport(kind, False, Witness(tuple(pts[i] for i in found)))


def all_masks(n: int, cap: int = HARD_CAP) -> range:
    check_cap(1 << n, cap, "subset enumeration")
    return range(1 << n)


def _subset(a: int, b: int) -> bool:
    return a & ~b == 0


def _forall(test):
    """Lift a per-subset test to a whole-relation predicate over all X."""
    return lambda rel: all(test(rel, x) for x in all_masks(len(rel.universe)))


def _conditions(kind: PropertyKind):
    """Operator conditions each claimed equivalent to ``kind``, as (label, predicate)."""
    lo, up = lower_mask, upper_mask
    if kind is PropertyKind.SERIAL:
        return [
            ("U^R = U", lambda rel: up(rel, _full(len(rel.universe))) == _full(len(rel.universe))),
            ("empty_R = empty", lambda rel: lo(rel, 0) == 0),
            ("X_R <= X^R", _forall(lambda rel, x: _subset(lo(rel, x), up(rel, x)))),
        ]
    if kind is PropertyKind.REFLEXIVE:
        return [
            ("X_R <= X", _forall(lambda rel, x: _subset(lo(rel, x), x))),
            ("X <= X^R", _forall(lambda rel, x: _subset(x, up(rel, x)))),
        ]
    if kind is PropertyKind.SYMMETRIC_CLASSICAL:
        return [
            ("(X_R)^R <= X", _forall(lambda rel, x: _subset(up(rel, lo(rel, x)), x))),
            ("X <= (X^R)_R", _forall(lambda rel, x: _subset(x, lo(rel, up(rel, x))))),
        ]
    if kind is PropertyKind.TRANSITIVE:
        return [
            ("(X^R)^R <= X^R", _forall(lambda rel, x: _subset(up(rel, up(rel, x)), up(rel, x)))),
            ("X_R <= (X_R)_R", _forall(lambda rel, x: _subset(lo(rel, x), lo(rel, lo(rel, x))))),
        ]
    if kind is PropertyKind.MEDIATE:
        return [
            ("X^R <= (X^R)^R", _forall(lambda rel, x: _subset(up(rel, x), up(rel, up(rel, x))))),
            ("(X_R)_R <= X_R", _forall(lambda rel, x: _subset(lo(rel, lo(rel, x)), lo(rel, x)))),
        ]
    if kind is PropertyKind.EUCLIDEAN:
        return [
            ("X^R <= (X^R)_R", _forall(lambda rel, x: _subset(up(rel, x), lo(rel, up(rel, x))))),
            ("(X_R)^R <= X_R", _forall(lambda rel, x: _subset(up(rel, lo(rel, x)), lo(rel, x)))),
        ]
    raise UnsupportedKind(f"no classical correspondence listed for {kind.value}")


CORRESPONDENCE_KINDS = (
    PropertyKind.SERIAL,
    PropertyKind.REFLEXIVE,
    PropertyKind.SYMMETRIC_CLASSICAL,
    PropertyKind.TRANSITIVE,
    PropertyKind.MEDIATE,
    PropertyKind.EUCLIDEAN,
)


def crisp_correspondence(rel: CrispRelation, kind: PropertyKind | str) -> bool:
    """Every listed operator condition agrees with the property on ``rel``."""
    kind = PropertyKind.parse(kind)
    conds = _conditions(kind)
    all_masks(len(rel.universe))
    prop = _violation(rel, kind) is None
    return all(cond(rel) == prop for _, cond in conds)


def alliance_set_law_violation(rel: CrispRelation) -> CrispSet | None:
    """First X (by mask) with (X^R)_R not inside X^R."""
    for x in all_masks(len(rel.universe)):
        ux = upper_mask(rel, x)
        if not _subset(lower_mask(rel, ux), ux):
            return CrispSet(rel.universe, x)
    return None


def alliance_singleton_check(rel: CrispRelation) -> bool:
    """({x}^R)_R is inside {x}^R for every point x."""
    for i in range(len(rel.universe)):
        ux = upper_mask(rel, 1 << i)
        if not _subset(lower_mask(rel, ux), ux):
            return False
    return True


def all_crisp_relations(universe: Universe, cap: int = HARD_CAP) -> Iterator[CrispRelation]:
    n = len(universe)
    check_cap(1 << (n * n), cap, "crisp relation enumeration")
    row_mask = _full(n)
    for code in range(1 << (n * n)):
        yield CrispRelation(universe, tuple((code >> (i * n)) & row_mask for i in range(n)))


def embed_relation(rel: CrispRelation) -> FuzzyRelation:
    alg = standard_algebra("bool2")
    n = len(rel.universe)
    return FuzzyRelation(
        alg,
        rel.universe,
        tuple(tuple(alg.top if rel.related(i, j) else alg.bottom for j in range(n)) for i in range(n)),
    )


def embed_set(x: CrispSet) -> FuzzySet:
    alg = standard_algebra("bool2")
    n = len(x.universe)
    return FuzzySet(alg, x.universe, tuple(alg.top if x.mask >> i & 1 else alg.bottom for i in range(n)))


def crisp_sweep(n: int, kinds: Iterable[PropertyKind | str] = CORRESPONDENCE_KINDS) -> dict:
    """Per-kind agreement counts over every crisp relation on ``n`` points."""
    kinds = [PropertyKind.parse(k) for k in kinds]
    conds = {k: _conditions(k) for k in kinds}
    universe = Universe.of(n)
    all_masks(n)
    tallies = {k: {"relations_checked": 0, "agreements": 0, "disagreements": 0} for k in kinds}
    for rel in all_crisp_relations(universe):
        for k in kinds:
            prop = _violation(rel, k) is None
            t = tallies[k]
            t["relations_checked"] += 1
            if all(cond(rel) == prop for _, cond in conds[k]):
                t["agreements"] += 1
            else:
                t["disagreements"] += 1
                t.setdefault("first_disagreement", rel.edges())
    return {
        "algebra": "crisp",
        "universe_size": n,
        "kinds": {k.value: t for k, t in tallies.items()},
        "total_disagreements": sum(t["disagreements"] for t in tallies.values()),
    }
