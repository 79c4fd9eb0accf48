"""Property classification of L-fuzzy relations, with reproducible witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from . import approx
from .errors import UnsupportedKind
from .fuzzy import FuzzyRelation, singleton, top_set


class PropertyKind(str, Enum):
    SERIAL = "serial"
    SERIAL_POINTED = "serial_pointed"
    SERIAL_SINGLETON = "serial_singleton"
    REFLEXIVE = "reflexive"
    SYMMETRIC_DM = "symmetric_dm"
    SYMMETRIC_CLASSICAL = "symmetric_classical"
    TRANSITIVE = "transitive"
    MEDIATE = "mediate"
    EUCLIDEAN = "euclidean"
    ADJOINT = "adjoint"
    FUNCTIONAL = "functional"
    POSITIVE_ALLIANCE = "positive_alliance"

    @classmethod
    def parse(cls, text: str | PropertyKind) -> PropertyKind:
        if isinstance(text, PropertyKind):
            return text
        key = text.strip().lower().replace("-", "_")
        try:
            return cls(key)
        except ValueError:
            raise UnsupportedKind(f"unknown property kind {text!r}") from None


@dataclass(frozen=True)
class Witness:
    """Points of the first violation plus the evaluated lattice values."""

    points: tuple[str, ...]
    values: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class PropertyReport:
    kind: PropertyKind
    holds: bool
    witness: Witness | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = {"points": list(self.witness.points), "values": self.witness.values}
        return out


# Each checker scans point tuples in declared order and returns the first
# violation as (index tuple, {label: element index}) or None.

Violation = tuple[tuple[int, ...], dict[str, int]] | None


def _serial(alg, rows) -> Violation:
    for x, row in enumerate(rows):
        s = alg.lattice.join_all(row)
        if s != alg.top:
            return (x,), {"join_y R(x,y)": s}
    return None


def _serial_pointed(alg, rows) -> Violation:
    for x, row in enumerate(rows):
        if alg.top not in row:
            return (x,), {"join_y R(x,y)": alg.lattice.join_all(row)}
    return None


def _serial_singleton(alg, rows) -> Violation:
    n = len(rows)
    leq, neg = alg.leq, alg.neg
    for x in range(n):
        for y in range(n):
            lhs = neg[rows[x][y]]
            rhs = alg.lattice.join_all(rows[x][z] for z in range(n) if z != y)
            if not leq[lhs][rhs]:
                return (x, y), {"R(x,y)'": lhs, "join_{z!=y} R(x,z)": rhs}
    return None


def _reflexive(alg, rows) -> Violation:
    for x in range(len(rows)):
        if rows[x][x] != alg.top:
            return (x,), {"R(x,x)": rows[x][x]}
    return None


def _symmetric_dm(alg, rows) -> Violation:
    n = len(rows)
    for x in range(n):
        for y in range(n):
            v = alg.arrow(rows[x][y], rows[y][x])
            if v != alg.top:
                return (x, y), {"R(x,y)' | R(y,x)": v}
    return None


def _symmetric_classical(alg, rows) -> Violation:
    n = len(rows)
    for x in range(n):
        for y in range(n):
            if rows[x][y] != rows[y][x]:
                return (x, y), {"R(x,y)": rows[x][y], "R(y,x)": rows[y][x]}
    return None


def _transitive(alg, rows) -> Violation:
    n = len(rows)
    meet, leq = alg.meet, alg.leq
    for x in range(n):
        for z in range(n):
            for y in range(n):
                lhs = meet[rows[x][z]][rows[z][y]]
                if not leq[lhs][rows[x][y]]:
                    return (x, z, y), {"R(x,z) & R(z,y)": lhs, "R(x,y)": rows[x][y]}
    return None


def _composite(alg, rows, x, y) -> int:
    meet = alg.meet
    return alg.lattice.join_all(meet[rows[x][z]][rows[z][y]] for z in range(len(rows)))


def _mediate(alg, rows) -> Violation:
    n = len(rows)
    for x in range(n):
        for y in range(n):
            rhs = _composite(alg, rows, x, y)
            if not alg.leq[rows[x][y]][rhs]:
                return (x, y), {"R(x,y)": rows[x][y], "join_z R(x,z) & R(z,y)": rhs}
    return None


def _escape(alg, rows, x, y) -> int:
    """join_z R(x,z) & R(z,y)'"""
    meet, neg = alg.meet, alg.neg
    return alg.lattice.join_all(meet[rows[x][z]][neg[rows[z][y]]] for z in range(len(rows)))


def _euclidean(alg, rows) -> Violation:
    n = len(rows)
    for x in range(n):
        for y in range(n):
            lhs = alg.neg[rows[x][y]]
            rhs = _escape(alg, rows, x, y)
            if not alg.leq[rhs][lhs]:
                return (x, y), {"R(x,y)'": lhs, "join_z R(x,z) & R(z,y)'": rhs}
    return None


def _adjoint(alg, rows) -> Violation:
    n = len(rows)
    lat, neg, join = alg.lattice, alg.neg, alg.join
    for x in range(n):
        for y in range(n):
            bound = lat.meet_all(
                lat.join_all(join[neg[rows[x][z]]][rows[z][w]] for w in range(n) if w != y)
                for z in range(n)
            )
            lhs = neg[rows[x][y]]
            if not alg.leq[bound][lhs]:
                return (x, y), {"R(x,y)'": lhs, "meet_z join_{w!=y} R(x,z)' | R(z,w)": bound}
    return None


def _functional(alg, rows) -> Violation:
    n = len(rows)
    lat, neg = alg.lattice, alg.neg
    for x in range(n):
        for y in range(n):
            rhs = lat.meet_all(neg[rows[x][z]] for z in range(n) if z != y)
            if not alg.leq[rows[x][y]][rhs]:
                return (x, y), {"R(x,y)": rows[x][y], "meet_{z!=y} R(x,z)'": rhs}
    return None


def _positive_alliance(alg, rows) -> Violation:
    n = len(rows)
    for x in range(n):
        for y in range(n):
            lhs = alg.neg[rows[x][y]]
            rhs = _escape(alg, rows, x, y)
            if not alg.leq[lhs][rhs]:
                return (x, y), {"R(x,y)'": lhs, "join_z R(x,z) & R(z,y)'": rhs}
    return None


_CHECKERS: dict[PropertyKind, Callable] = {
    PropertyKind.SERIAL: _serial,
    PropertyKind.SERIAL_POINTED: _serial_pointed,
    PropertyKind.SERIAL_SINGLETON: _serial_singleton,
    PropertyKind.REFLEXIVE: _reflexive,
    PropertyKind.SYMMETRIC_DM: _symmetric_dm,
    PropertyKind.SYMMETRIC_CLASSICAL: _symmetric_classical,
    PropertyKind.TRANSITIVE: _transitive,
    PropertyKind.MEDIATE: _mediate,
    PropertyKind.EUCLIDEAN: _euclidean,
    PropertyKind.ADJOINT: _adjoint,
    PropertyKind.FUNCTIONAL: _functional,
    PropertyKind.POSITIVE_ALLIANCE: _positive_alliance,
}


def holds(r: FuzzyRelation, kind: PropertyKind) -> bool:
    """Fast boolean form of :func:`check_property`."""
    return _CHECKERS[kind](r.algebra, r.rows) is None


def check_property(r: FuzzyRelation, kind: PropertyKind | str) -> PropertyReport:
    kind = PropertyKind.parse(kind)
    found = _CHECKERS[kind](r.algebra, r.rows)
    if found is None:
        return PropertyReport(kind, True)
    pts, vals = found
    el, names = r.algebra.elements, r.universe.points
    witness = Witness(tuple(names[i] for i in pts), {k: el[v] for k, v in vals.items()})
    return PropertyReport(kind, False, witness)


def witness_violates(r: FuzzyRelation, report: PropertyReport) -> bool:
    """Re-evaluate the defining condition at the witness points only.

    Written directly against the definitions (string-level lookups, no
    shared checker code) so it can serve as an independent soundness check.
    """
    if report.witness is None:
        return False
    alg = r.algebra
    pts = report.witness.points
    U = r.universe.points
    v = lambda a, b: alg.index(r(a, b))  # noqa: E731
    join_all, meet_all = alg.lattice.join_all, alg.lattice.meet_all
    leq, neg, meet, join = alg.leq, alg.neg, alg.meet, alg.join
    k = report.kind
    if k is PropertyKind.SERIAL:
        return join_all(v(pts[0], y) for y in U) != alg.top
    if k is PropertyKind.SERIAL_POINTED:
        return all(v(pts[0], y) != alg.top for y in U)
    if k is PropertyKind.REFLEXIVE:
        return v(pts[0], pts[0]) != alg.top
    x, *rest = pts
    if k is PropertyKind.TRANSITIVE:
        z, y = rest
        return not leq[meet[v(x, z)][v(z, y)]][v(x, y)]
    (y,) = rest
    if k is PropertyKind.SERIAL_SINGLETON:
        return not leq[neg[v(x, y)]][join_all(v(x, z) for z in U if z != y)]
    if k is PropertyKind.SYMMETRIC_DM:
        return join[neg[v(x, y)]][v(y, x)] != alg.top
    if k is PropertyKind.SYMMETRIC_CLASSICAL:
        return v(x, y) != v(y, x)
    if k is PropertyKind.MEDIATE:
        return not leq[v(x, y)][join_all(meet[v(x, z)][v(z, y)] for z in U)]
    if k is PropertyKind.EUCLIDEAN:
        return not leq[join_all(meet[v(x, z)][neg[v(z, y)]] for z in U)][neg[v(x, y)]]
    if k is PropertyKind.POSITIVE_ALLIANCE:
        return not leq[neg[v(x, y)]][join_all(meet[v(x, z)][neg[v(z, y)]] for z in U)]
    if k is PropertyKind.FUNCTIONAL:
        return not leq[v(x, y)][meet_all(neg[v(x, z)] for z in U if z != y)]
    if k is PropertyKind.ADJOINT:
        bound = meet_all(
            join_all(join[neg[v(x, z)]][v(z, w)] for w in U if w != y) for z in U
        )
        return not leq[bound][neg[v(x, y)]]
    raise UnsupportedKind(k)  # pragma: no cover


SINGLETON_KINDS = (
    PropertyKind.SERIAL,
    PropertyKind.SERIAL_SINGLETON,
    PropertyKind.REFLEXIVE,
    PropertyKind.SYMMETRIC_DM,
    PropertyKind.TRANSITIVE,
    PropertyKind.MEDIATE,
    PropertyKind.EUCLIDEAN,
    PropertyKind.ADJOINT,
    PropertyKind.FUNCTIONAL,
    PropertyKind.POSITIVE_ALLIANCE,
)

# (smaller word, larger word) evaluated on every singleton I_x; "I" is the
# singleton itself.
_SINGLETON_TESTS: dict[PropertyKind, tuple[str, str]] = {
    PropertyKind.SERIAL_SINGLETON: ("L", "U"),
    PropertyKind.REFLEXIVE: ("I", "U"),
    PropertyKind.SYMMETRIC_DM: ("I", "LU"),
    PropertyKind.TRANSITIVE: ("UU", "U"),
    PropertyKind.MEDIATE: ("U", "UU"),
    PropertyKind.EUCLIDEAN: ("U", "LU"),
    PropertyKind.ADJOINT: ("U", "UL"),
    PropertyKind.FUNCTIONAL: ("U", "L"),
    PropertyKind.POSITIVE_ALLIANCE: ("LU", "U"),
}


def singleton_characterization(r: FuzzyRelation, kind: PropertyKind | str) -> bool:
    """Operator-level test on the singletons I_x (on the top set for SERIAL)."""
    kind = PropertyKind.parse(kind)
    alg, u = r.algebra, r.universe
    if kind is PropertyKind.SERIAL:
        return approx.upper(r, top_set(alg, u)) == top_set(alg, u)
    if kind not in _SINGLETON_TESTS:
        raise UnsupportedKind(f"{kind.value} has no singleton characterization")
    small, large = _SINGLETON_TESTS[kind]
    for x in u.points:
        ix = singleton(alg, u, x)
        if not approx.apply_word(r, small, ix) <= approx.apply_word(r, large, ix):
            return False
    return True

