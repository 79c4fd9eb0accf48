"""Finite bounded lattices and De Morgan Heyting algebras.

Elements are strings at the API boundary and dense integer indices inside
every table.  All tables are computed once, at construction, and every
invariant is checked eagerly so that later operations cannot fail.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import (
    NoBounds,
    NotALattice,
    NotAntitone,
    NotAPoset,
    NotDistributive,
    NotInvolutive,
    UnknownCatalogId,
    UnknownElement,
)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    join: Table
    meet: Table
    bottom: int
    top: int
    _index: dict[str, int] = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(f"{name!r} is not an element of the lattice") from None

    def name(self, i: int) -> str:
        return self.elements[i]

    def join_all(self, items: Iterable[int]) -> int:
        """Join of a finite family; the empty join is bottom."""
        acc = self.bottom
        j = self.join
        for i in items:
            acc = j[acc][i]
        return acc

    def meet_all(self, items: Iterable[int]) -> int:
        """Meet of a finite family; the empty meet is top."""
        acc = self.top
        m = self.meet
        for i in items:
            acc = m[acc][i]
        return acc

    def is_distributive(self) -> bool:
        return _first_distributivity_failure(self) is None


def build_lattice(elements: Sequence[str], leq_pairs: Iterable[Sequence[str]]) -> FiniteLattice:
    """Build a lattice from covering (or any) order pairs.

    The declared pairs are closed reflexively and transitively.  Bounds are
    checked before pairwise joins and meets, so an unbounded poset reports
    ``NoBounds`` rather than ``NotALattice``.
    """
    names = tuple(str(e) for e in elements)
    if not names:
        raise NotALattice("a lattice needs at least one element")
    if len(set(names)) != len(names):
        raise NotAPoset("duplicate element identifiers")
    index = {e: i for i, e in enumerate(names)}
    n = len(names)

    rel = [[i == j for j in range(n)] for i in range(n)]
    for pair in leq_pairs:
        if len(pair) != 2:
            raise NotAPoset(f"order pair must have two entries, got {pair!r}")
        a, b = pair
        for e in (a, b):
            if e not in index:
                raise UnknownElement(f"order pair mentions undeclared element {e!r}")
        rel[index[a]][index[b]] = True
    for k in range(n):
        rk = rel[k]
        for i in range(n):
            if rel[i][k]:
                ri = rel[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True

    for i in range(n):
        for j in range(i + 1, n):
            if rel[i][j] and rel[j][i]:
                raise NotAPoset(f"antisymmetry violated: {names[i]} <= {names[j]} <= {names[i]}")

    bottoms = [i for i in range(n) if all(rel[i])]
    tops = [i for i in range(n) if all(rel[j][i] for j in range(n))]
    if not bottoms or not tops:
        raise NoBounds("order has no " + ("bottom" if not bottoms else "top"))

    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            ub = [k for k in range(n) if rel[i][k] and rel[j][k]]
            lub = [k for k in ub if all(rel[k][m] for m in ub)]
            lb = [k for k in range(n) if rel[k][i] and rel[k][j]]
            glb = [k for k in lb if all(rel[m][k] for m in lb)]
            if not lub:
                raise NotALattice(f"{names[i]} and {names[j]} have no least upper bound")
            if not glb:
                raise NotALattice(f"{names[i]} and {names[j]} have no greatest lower bound")
            join[i][j] = join[j][i] = lub[0]
            meet[i][j] = meet[j][i] = glb[0]

    return FiniteLattice(
        elements=names,
        leq=tuple(tuple(r) for r in rel),
        join=tuple(tuple(r) for r in join),
        meet=tuple(tuple(r) for r in meet),
        bottom=bottoms[0],
        top=tops[0],
        _index=index,
    )


def _first_distributivity_failure(lat: FiniteLattice) -> tuple[int, int, int] | None:
    j, m = lat.join, lat.meet
    r = range(lat.size)
    for a, b, c in product(r, r, r):
        if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
            return a, b, c
    return None


def derive_heyting(lat: FiniteLattice) -> Table:
    """Relative pseudocomplement: ``a => b`` is the join of all ``c`` with ``a & c <= b``."""
    bad = _first_distributivity_failure(lat)
    if bad is not None:
        a, b, c = (lat.name(i) for i in bad)
        raise NotDistributive(f"{a} & ({b} | {c}) != ({a} & {b}) | ({a} & {c})")
    n = lat.size
    leq, meet = lat.leq, lat.meet
    table = tuple(
        tuple(lat.join_all(c for c in range(n) if leq[meet[a][c]][b]) for b in range(n))
        for a in range(n)
    )
    # residuation must hold exactly; in a finite distributive lattice it always does
    for a, b, c in product(range(n), repeat=3):
        if leq[meet[a][c]][b] != leq[c][table[a][b]]:
            raise NotDistributive("relative pseudocomplement fails residuation")
    return table


@dataclass(frozen=True, eq=False)
class DmhAlgebra:
    """A finite De Morgan Heyting algebra.

    ``implies`` is the Heyting implication and ``neg`` the antitone
    involution, both as index tables over ``lattice.elements``.
    """

    lattice: FiniteLattice
    implies: Table
    neg: tuple[int, ...]
    name: str | None = None

    # index-level shortcuts used by the hot loops
    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def elements(self) -> tuple[str, ...]:
        return self.lattice.elements

    @property
    def join(self) -> Table:
        return self.lattice.join

    @property
    def meet(self) -> Table:
        return self.lattice.meet

    @property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        return self.lattice.leq

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    def index(self, name: str) -> int:
        return self.lattice.index(name)

    def element(self, i: int) -> str:
        return self.lattice.elements[i]

    def arrow(self, a: int, b: int) -> int:
        """De Morgan implication ``a' | b`` on indices."""
        return self.lattice.join[self.neg[a]][b]

    def __repr__(self) -> str:
        label = self.name or "anonymous"
        return f"DmhAlgebra({label}, elements={list(self.elements)})"


def attach_involution(
    lat: FiniteLattice, neg_map: Mapping[str, str], name: str | None = None
) -> DmhAlgebra:
    for e in lat.elements:
        if e not in neg_map:
            raise UnknownElement(f"involution undefined on {e!r}")
    implies = derive_heyting(lat)
    neg = tuple(lat.index(neg_map[e]) for e in lat.elements)
    for i, e in enumerate(lat.elements):
        if neg[neg[i]] != i:
            raise NotInvolutive(f"{e}'' = {lat.name(neg[neg[i]])} != {e}")
    meet, join = lat.meet, lat.join
    for a, b in product(range(lat.size), repeat=2):
        if neg[meet[a][b]] != join[neg[a]][neg[b]]:
            raise NotAntitone(
                f"({lat.name(a)} & {lat.name(b)})' != {lat.name(a)}' | {lat.name(b)}'"
            )
    alg = DmhAlgebra(lattice=lat, implies=implies, neg=neg, name=name)
    problems = invariant_violations(alg)
    if problems:  # pragma: no cover - unreachable after the checks above
        raise NotAntitone("; ".join(problems))
    return alg


def invariant_violations(alg: DmhAlgebra) -> list[str]:
    """Exhaustively re-check every algebra invariant; empty list means valid."""
    lat = alg.lattice
    n = lat.size
    leq, join, meet, imp, neg = lat.leq, lat.join, lat.meet, alg.implies, alg.neg
    out: list[str] = []
    r = range(n)
    for a in r:
        if not (leq[lat.bottom][a] and leq[a][lat.top]):
            out.append(f"bounds: {lat.name(a)}")
        if neg[neg[a]] != a:
            out.append(f"involution: {lat.name(a)}")
        if join[a][a] != a or meet[a][a] != a:
            out.append(f"idempotence: {lat.name(a)}")
    for a, b in product(r, r):
        if leq[a][b] and leq[b][a] and a != b:
            out.append(f"antisymmetry: {lat.name(a)},{lat.name(b)}")
        if join[a][b] != join[b][a] or meet[a][b] != meet[b][a]:
            out.append(f"commutativity: {lat.name(a)},{lat.name(b)}")
        if join[a][meet[a][b]] != a or meet[a][join[a][b]] != a:
            out.append(f"absorption: {lat.name(a)},{lat.name(b)}")
        if leq[a][b] != (join[a][b] == b):
            out.append(f"order/join mismatch: {lat.name(a)},{lat.name(b)}")
        if neg[meet[a][b]] != join[neg[a]][neg[b]]:
            out.append(f"de morgan: {lat.name(a)},{lat.name(b)}")
        if leq[a][b] != leq[neg[b]][neg[a]]:
            out.append(f"anti-isomorphism: {lat.name(a)},{lat.name(b)}")
    for a, b, c in product(r, r, r):
        if leq[a][b] and leq[b][c] and not leq[a][c]:
            out.append(f"transitivity: {lat.name(a)},{lat.name(b)},{lat.name(c)}")
        if join[a][join[b][c]] != join[join[a][b]][c] or meet[a][meet[b][c]] != meet[meet[a][b]][c]:
            out.append(f"associativity: {lat.name(a)},{lat.name(b)},{lat.name(c)}")
        if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
            out.append(f"distributivity: {lat.name(a)},{lat.name(b)},{lat.name(c)}")
        if leq[meet[a][c]][b] != leq[c][imp[a][b]]:
            out.append(f"residuation: {lat.name(a)},{lat.name(b)},{lat.name(c)}")
    if neg[lat.bottom] != lat.top or neg[lat.top] != lat.bottom:
        out.append("negation does not swap bounds")
    return out


def demorgan_arrow(alg: DmhAlgebra, a: str, b: str) -> str:
    """``a -> b := a' | b``.  Not a residuum in general."""
    return alg.element(alg.arrow(alg.index(a), alg.index(b)))


def heyting_implies(alg: DmhAlgebra, a: str, b: str) -> str:
    return alg.element(alg.implies[alg.index(a)][alg.index(b)])


def make_algebra(
    elements: Sequence[str],
    leq_pairs: Iterable[Sequence[str]],
    involution: Mapping[str, str],
    name: str | None = None,
) -> DmhAlgebra:
    return attach_involution(build_lattice(elements, leq_pairs), involution, name=name)


_DIAMOND = (("0", "a", "b", "1"), (("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")))
_CHAIN_RE = re.compile(r"^chain_n\((\d+)\)$|^chain(\d+)$")

CATALOG_IDS = ("bool2", "chain3", "m2_fix", "m2_swap", "chain_n(k)")


def chain_algebra(k: int) -> DmhAlgebra:
    """The k-element chain with the order-reversing mirror as involution."""
    if k < 1:
        raise UnknownCatalogId(f"chain length must be positive, got {k}")
    if k == 1:
        names = ["0"]
    else:
        names = ["0"] + [f"c{i}" for i in range(1, k - 1)] + ["1"]
    pairs = list(zip(names, names[1:]))
    neg = {names[i]: names[k - 1 - i] for i in range(k)}
    return make_algebra(names, pairs, neg, name=f"chain_n({k})")


@lru_cache(maxsize=None)
def standard_algebra(name: str) -> DmhAlgebra:
    """Catalog of the running example algebras; results are shared and immutable."""
    if name == "bool2":
        return make_algebra(["0", "1"], [("0", "1")], {"0": "1", "1": "0"}, name=name)
    if name == "chain3":
        return make_algebra(
            ["0", "u", "1"], [("0", "u"), ("u", "1")], {"0": "1", "u": "u", "1": "0"}, name=name
        )
    if name == "m2_fix":
        return make_algebra(*_DIAMOND, {"0": "1", "a": "a", "b": "b", "1": "0"}, name=name)
    if name == "m2_swap":
        return make_algebra(*_DIAMOND, {"0": "1", "a": "b", "b": "a", "1": "0"}, name=name)
    m = _CHAIN_RE.match(name)
    if m:
        return chain_algebra(int(m.group(1) or m.group(2)))
    raise UnknownCatalogId(f"unknown algebra {name!r}; known: {', '.join(CATALOG_IDS)}")
