"""From abstract fuzzy-set operators back to relations.

An operator on F_L(U) is an upper approximation of some relation exactly
when it preserves the empty join, binary joins, and meets with constant
sets.  On a finite universe these three cases generate every family-indexed
instance: any family is finite, its join is a fold of binary joins, and the
constant-meet case is the family of one element.  All axiom checks below
use this reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Mapping, Sequence

from .approx import OperatorWord, word_values
from .errors import EnumerationTooLarge, MixedContext, SchemaError
from .fuzzy import (
    RELATION_CAP,
    SET_CAP,
    FuzzyRelation,
    FuzzySet,
    Universe,
    check_cap,
    relation_count,
    set_count,
)
from .lattice import DmhAlgebra

TABLE_CAP = 256

Values = tuple[int, ...]


class AbstractOperator:
    """A total map on the fuzzy sets over ``(algebra, universe)``."""

    algebra: DmhAlgebra
    universe: Universe

    def values(self, vals: Values) -> Values:  # pragma: no cover - abstract
        raise NotImplementedError

    def __call__(self, a: FuzzySet) -> FuzzySet:
        if a.algebra is not self.algebra or a.universe != self.universe:
            raise MixedContext("fuzzy set does not belong to the operator's context")
        return FuzzySet(self.algebra, self.universe, self.values(a.values))

    def all_inputs(self, cap: int = SET_CAP):
        check_cap(set_count(self.algebra, self.universe), cap, "operator domain")
        return product(range(self.algebra.size), repeat=len(self.universe))


@dataclass(eq=False)
class SingletonGenerated(AbstractOperator):
    """Determined by the images of the singletons.

    ``images[x]`` is the image of I_x; a general A maps to the join over x of
    ``A(x) & images[x]``.
    """

    algebra: DmhAlgebra
    universe: Universe
    images: tuple[Values, ...]

    def __post_init__(self) -> None:
        n = len(self.universe)
        if len(self.images) != n or any(len(img) != n for img in self.images):
            raise SchemaError(f"need one image of length {n} per point")

    @classmethod
    def from_mapping(
        cls, alg: DmhAlgebra, universe: Universe, images: Mapping[str, Mapping[str, str]]
    ) -> SingletonGenerated:
        imgs = []
        for x in universe.points:
            if x not in images:
                raise SchemaError(f"missing singleton image for {x!r}")
            imgs.append(FuzzySet.from_mapping(alg, universe, images[x]).values)
        return cls(alg, universe, tuple(imgs))

    def values(self, vals: Values) -> Values:
        join, meet = self.algebra.join, self.algebra.meet
        out = [self.algebra.bottom] * len(vals)
        for ax, img in zip(vals, self.images):
            for i, v in enumerate(img):
                out[i] = join[out[i]][meet[ax][v]]
        return tuple(out)


@dataclass(eq=False)
class ExtensionalTable(AbstractOperator):
    """An explicit input -> output table over all of F_L(U)."""

    algebra: DmhAlgebra
    universe: Universe
    table: dict[Values, Values] = field(repr=False)

    def __post_init__(self) -> None:
        total = set_count(self.algebra, self.universe)
        if total > TABLE_CAP:
            raise EnumerationTooLarge(
                f"extensional tables are limited to {TABLE_CAP} fuzzy sets, got {total}"
            )
        n, size = len(self.universe), self.algebra.size
        for vals in product(range(size), repeat=n):
            out = self.table.get(vals)
            if out is None:
                raise SchemaError(f"extensional table is not total: missing input {vals}")
            if len(out) != n or any(not 0 <= v < size for v in out):
                raise SchemaError(f"bad table output for input {vals}")

    @classmethod
    def tabulate(cls, op: AbstractOperator | Callable[[FuzzySet], FuzzySet], alg=None, universe=None):
        alg = alg or op.algebra
        universe = universe or op.universe
        total = set_count(alg, universe)
        if total > TABLE_CAP:
            raise EnumerationTooLarge(f"cannot tabulate {total} fuzzy sets (cap {TABLE_CAP})")
        table = {}
        for vals in product(range(alg.size), repeat=len(universe)):
            table[vals] = op(FuzzySet(alg, universe, vals)).values
        return cls(alg, universe, table)

    def values(self, vals: Values) -> Values:
        return self.table[tuple(vals)]

    def with_entry(self, vals: Values, out: Values) -> ExtensionalTable:
        table = dict(self.table)
        table[tuple(vals)] = tuple(out)
        return ExtensionalTable(self.algebra, self.universe, table)


def constant_operator(alg: DmhAlgebra, universe: Universe, element: str) -> ExtensionalTable:
    c = (alg.index(element),) * len(universe)
    return ExtensionalTable.tabulate(lambda a: FuzzySet(alg, universe, c), alg, universe)


def operator_from_relation(r: FuzzyRelation) -> SingletonGenerated:
    # the image of I_y at x is R(x, y): the columns of R
    n = len(r.universe)
    images = tuple(tuple(r.rows[x][y] for x in range(n)) for y in range(n))
    return SingletonGenerated(r.algebra, r.universe, images)


def extract_relation(op: AbstractOperator) -> FuzzyRelation:
    alg, n = op.algebra, len(op.universe)
    cols = []
    for y in range(n):
        iy = tuple(alg.top if i == y else alg.bottom for i in range(n))
        cols.append(op.values(iy))
    return FuzzyRelation(alg, op.universe, tuple(tuple(cols[y][x] for y in range(n)) for x in range(n)))


def _graph(op: AbstractOperator) -> dict[Values, Values]:
    return {vals: op.values(vals) for vals in op.all_inputs()}


def _base_axiom(op: AbstractOperator, graph: dict[Values, Values]) -> bool:
    alg, n = op.algebra, len(op.universe)
    join, meet = alg.join, alg.meet
    bottom = (alg.bottom,) * n
    if graph[bottom] != bottom:
        return False
    keys = list(graph)
    for i, a in enumerate(keys):
        ua = graph[a]
        for b in keys[i + 1:]:
            ub = graph[b]
            ab = tuple(join[p][q] for p, q in zip(a, b))
            if graph[ab] != tuple(join[p][q] for p, q in zip(ua, ub)):
                return False
    for c in range(alg.size):
        mc = meet[c]
        for a in keys:
            ca = tuple(mc[p] for p in a)
            if graph[ca] != tuple(mc[p] for p in graph[a]):
                return False
    return True


def base_axiom_holds(op: AbstractOperator) -> bool:
    """Empty join, binary joins and constant meets are all preserved."""
    return _base_axiom(op, _graph(op))


def represents_upper(op: AbstractOperator) -> FuzzyRelation | None:
    """The unique relation whose upper approximation is ``op``, if there is one."""
    graph = _graph(op)
    if not _base_axiom(op, graph):
        return None
    r = extract_relation(op)
    induced = operator_from_relation(r)
    for vals, out in graph.items():
        if induced.values(vals) != out:
            return None
    return r


def operators_equal(a: AbstractOperator, b: AbstractOperator) -> bool:
    if a.algebra is not b.algebra or a.universe != b.universe:
        return False
    return all(a.values(v) == b.values(v) for v in a.all_inputs())


def dual_operator(op: AbstractOperator) -> ExtensionalTable:
    """``A -> op(A')'``, tabulated."""
    neg = op.algebra.neg
    table = {}
    for vals in op.all_inputs(cap=TABLE_CAP):
        out = op.values(tuple(neg[v] for v in vals))
        table[vals] = tuple(neg[v] for v in out)
    return ExtensionalTable(op.algebra, op.universe, table)


@dataclass(frozen=True)
class AxiomSpec:
    """Intended bounds: op <= every word in ``upper_bounds``, op >= every word in ``lower_bounds``."""

    upper_bounds: tuple[OperatorWord, ...] = ()
    lower_bounds: tuple[OperatorWord, ...] = ()

    @classmethod
    def parse(cls, upper: Sequence[str] = (), lower: Sequence[str] = ()) -> AxiomSpec:
        return cls(tuple(OperatorWord.parse(w) for w in upper), tuple(OperatorWord.parse(w) for w in lower))

    @classmethod
    def from_json(cls, doc: Mapping) -> AxiomSpec:
        if not isinstance(doc, Mapping):
            raise SchemaError("axiom spec must be an object")
        extra = set(doc) - {"S", "T"}
        if extra:
            raise SchemaError(f"unexpected axiom keys {sorted(extra)}")
        for key in ("S", "T"):
            if not isinstance(doc.get(key, []), list):
                raise SchemaError(f"axiom field {key!r} must be a list of words")
        try:
            return cls.parse(doc.get("S", []), doc.get("T", []))
        except ValueError as exc:
            raise SchemaError(str(exc)) from None

    def to_json(self) -> dict:
        return {"S": [str(w) for w in self.upper_bounds], "T": [str(w) for w in self.lower_bounds]}


def characterized_axiom_holds(op: AbstractOperator, spec: AxiomSpec) -> bool:
    """Single-axiom characterization under the finite reduction.

    The singleton family with the top constant forces ``op <= S`` for each
    upper bound and ``op >= T`` for each lower bound; the remaining families
    reduce to the base axiom.  Words are evaluated through the relation
    extracted from ``op``.
    """
    graph = _graph(op)
    if not _base_axiom(op, graph):
        return False
    alg = op.algebra
    rows = extract_relation(op).rows
    leq = alg.leq
    for vals, out in graph.items():
        for w in spec.upper_bounds:
            s = word_values(alg, rows, w.letters, vals)
            if not all(leq[p][q] for p, q in zip(out, s)):
                return False
        for w in spec.lower_bounds:
            t = word_values(alg, rows, w.letters, vals)
            if not all(leq[q][p] for p, q in zip(out, t)):
                return False
    return True


def single_axiom_equation_holds(op: AbstractOperator, spec: AxiomSpec) -> bool:
    """Evaluate the combined single-axiom equation literally.

    ``op(a & join_i A_i) = a & join_i ((op(A_i) & S_1(A_i) & ...) | T_1(A_i) | ...)``
    for every constant a and every family of at most two sets.  Families of
    size three or more add nothing once binary joins are covered.
    """
    graph = _graph(op)
    alg = op.algebra
    rows = extract_relation(op).rows
    join, meet = alg.join, alg.meet
    n = len(op.universe)

    terms: dict[Values, Values] = {}
    for vals, out in graph.items():
        acc = out
        for w in spec.upper_bounds:
            s = word_values(alg, rows, w.letters, vals)
            acc = tuple(meet[p][q] for p, q in zip(acc, s))
        for w in spec.lower_bounds:
            t = word_values(alg, rows, w.letters, vals)
            acc = tuple(join[p][q] for p, q in zip(acc, t))
        terms[vals] = acc

    bottom = (alg.bottom,) * n
    keys = list(graph)
    families: list[tuple[Values, Values]] = [(bottom, bottom)]  # (join of family, join of terms)
    for i, a in enumerate(keys):
        families.append((a, terms[a]))
        for b in keys[i + 1:]:
            families.append(
                (
                    tuple(join[p][q] for p, q in zip(a, b)),
                    tuple(join[p][q] for p, q in zip(terms[a], terms[b])),
                )
            )
    for c in range(alg.size):
        mc = meet[c]
        for joined, term_join in families:
            lhs = graph[tuple(mc[p] for p in joined)]
            if lhs != tuple(mc[p] for p in term_join):
                return False
    return True


def dual_axiom_holds(op: AbstractOperator, spec: AxiomSpec) -> bool:
    """The same characterization phrased through the dual (lower) operator.

    With ``D = dual_operator(op)``: D preserves the empty meet, binary meets
    and joins with constants, and ``S* <= D`` for each upper bound S,
    ``D <= T*`` for each lower bound T, where ``*`` swaps L and U.
    """
    d = dual_operator(op)
    alg = op.algebra
    n = len(op.universe)
    join, meet, leq = alg.join, alg.meet, alg.leq
    graph = d.table
    top = (alg.top,) * n
    if graph[top] != top:
        return False
    keys = list(graph)
    for i, a in enumerate(keys):
        for b in keys[i + 1:]:
            ab = tuple(meet[p][q] for p, q in zip(a, b))
            if graph[ab] != tuple(meet[p][q] for p, q in zip(graph[a], graph[b])):
                return False
    for c in range(alg.size):
        jc = join[c]
        for a in keys:
            if graph[tuple(jc[p] for p in a)] != tuple(jc[p] for p in graph[a]):
                return False
    rows = extract_relation(op).rows
    for vals, out in graph.items():
        for w in spec.upper_bounds:
            s = word_values(alg, rows, w.dual().letters, vals)
            if not all(leq[q][p] for p, q in zip(out, s)):
                return False
        for w in spec.lower_bounds:
            t = word_values(alg, rows, w.dual().letters, vals)
            if not all(leq[p][q] for p, q in zip(out, t)):
                return False
    return True


def all_singleton_generated(alg: DmhAlgebra, universe: Universe):
    """Every assignment of singleton images, lexicographic."""
    n = len(universe)
    check_cap(relation_count(alg, universe), RELATION_CAP, "singleton-image enumeration")
    for flat in product(range(alg.size), repeat=n * n):
        yield SingletonGenerated(alg, universe, tuple(flat[i * n:(i + 1) * n] for i in range(n)))
