"""Exhaustive checks of the algebraic laws the approximation operators obey.

Each check runs over every fuzzy set (and pair of sets, and constant) for one
relation and returns the names of the laws that failed.  Laws indexed by
arbitrary families are tested on the empty family and on all pairs, which is
enough on a finite lattice since larger joins are iterated binary ones.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .approx import all_words, lower_values, upper_values, word_values
from .fuzzy import SET_CAP, FuzzyRelation, Universe, all_relations, check_cap, set_count
from .lattice import DmhAlgebra

Values = tuple[int, ...]

BASIC_LAWS = (
    "L0=0",
    "U1=1",
    "(UA)'=L(A')",
    "(LA)'=U(A')",
    "U preserves binary joins",
    "L preserves binary meets",
    "U(0)=0",
    "L(1)=1",
    "U(A&B)<=UA&UB",
    "L(A|B)>=LA|LB",
    "U(c)<=c<=L(c)",
    "U(c&A)=c&UA",
    "L(c|A)=c|LA",
    "U(c|A)<=c|UA",
    "L(c&A)>=c&LA",
)


def _pw(table, a: Values, b: Values) -> Values:
    return tuple(table[p][q] for p, q in zip(a, b))


def _le(leq, a: Values, b: Values) -> bool:
    return all(leq[p][q] for p, q in zip(a, b))


def basic_law_failures(r: FuzzyRelation) -> list[str]:
    """Names of the basic operator laws violated by ``r`` (empty when all hold)."""
    alg, rows = r.algebra, r.rows
    n = len(r.universe)
    check_cap(set_count(alg, r.universe), SET_CAP, "law check")
    join, meet, leq, neg = alg.join, alg.meet, alg.leq, alg.neg
    sets = list(product(range(alg.size), repeat=n))
    up = {a: upper_values(alg, rows, a) for a in sets}
    lo = {a: lower_values(alg, rows, a) for a in sets}
    bottom, top = (alg.bottom,) * n, (alg.top,) * n
    failed: set[str] = set()

    def fail(name: str, ok: bool) -> None:
        if not ok:
            failed.add(name)

    fail("L0=0", lo[bottom] == bottom)
    fail("U1=1", up[top] == top)
    fail("U(0)=0", up[bottom] == bottom)
    fail("L(1)=1", lo[top] == top)
    for a in sets:
        na = tuple(neg[v] for v in a)
        fail("(UA)'=L(A')", tuple(neg[v] for v in up[a]) == lo[na])
        fail("(LA)'=U(A')", tuple(neg[v] for v in lo[a]) == up[na])
        for b in sets:
            j, m = _pw(join, a, b), _pw(meet, a, b)
            fail("U preserves binary joins", up[j] == _pw(join, up[a], up[b]))
            fail("L preserves binary meets", lo[m] == _pw(meet, lo[a], lo[b]))
            fail("U(A&B)<=UA&UB", _le(leq, up[m], _pw(meet, up[a], up[b])))
            fail("L(A|B)>=LA|LB", _le(leq, _pw(join, lo[a], lo[b]), lo[j]))
    for c in range(alg.size):
        cc = (c,) * n
        fail("U(c)<=c<=L(c)", _le(leq, up[cc], cc) and _le(leq, cc, lo[cc]))
        for a in sets:
            fail("U(c&A)=c&UA", up[_pw(meet, cc, a)] == _pw(meet, cc, up[a]))
            fail("L(c|A)=c|LA", lo[_pw(join, cc, a)] == _pw(join, cc, lo[a]))
            fail("U(c|A)<=c|UA", _le(leq, up[_pw(join, cc, a)], _pw(join, cc, up[a])))
            fail("L(c&A)>=c&LA", _le(leq, _pw(meet, cc, lo[a]), lo[_pw(meet, cc, a)]))
    return [name for name in BASIC_LAWS if name in failed]


def step_lemma_failures(r: FuzzyRelation, max_len: int = 3) -> list[str]:
    """Words w with ``c & w(I_x) <= w(c & I_x)`` failing for some constant c and point x."""
    alg, rows = r.algebra, r.rows
    n = len(r.universe)
    meet, leq = alg.meet, alg.leq
    out = []
    for w in all_words(max_len):
        ok = True
        for x in range(n):
            ix = tuple(alg.top if i == x else alg.bottom for i in range(n))
            wix = word_values(alg, rows, w.letters, ix)
            for c in range(alg.size):
                cc = (c,) * n
                if not _le(leq, _pw(meet, cc, wix), word_values(alg, rows, w.letters, _pw(meet, cc, ix))):
                    ok = False
        if not ok:
            out.append(str(w))
    return out


def lifting_failures(r: FuzzyRelation, max_len: int = 3) -> list[str]:
    """Words w for which U(I_x) <= w(I_x) for all x, yet U(A) <= w(A) fails for some A."""
    alg, rows = r.algebra, r.rows
    n = len(r.universe)
    leq = alg.leq
    check_cap(set_count(alg, r.universe), SET_CAP, "law check")
    singles = [tuple(alg.top if i == x else alg.bottom for i in range(n)) for x in range(n)]
    sets = list(product(range(alg.size), repeat=n))
    out = []
    for w in all_words(max_len):
        hyp = all(_le(leq, upper_values(alg, rows, s), word_values(alg, rows, w.letters, s)) for s in singles)
        if not hyp:
            continue
        if not all(_le(leq, upper_values(alg, rows, a), word_values(alg, rows, w.letters, a)) for a in sets):
            out.append(str(w))
    return out


@dataclass
class LawSuiteReport:
    algebra: str
    universe_size: int
    relations_checked: int = 0
    violations: Counter = field(default_factory=Counter)

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values())

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "universe_size": self.universe_size,
            "relations_checked": self.relations_checked,
            "violations": dict(sorted(self.violations.items())),
            "total_violations": self.total_violations,
        }


def law_suite(alg: DmhAlgebra, universe: Universe | int, max_len: int = 3) -> LawSuiteReport:
    """Run the basic laws, the step lemma and the lifting check on every relation."""
    if isinstance(universe, int):
        universe = Universe.of(universe)
    report = LawSuiteReport(alg.name or "custom", len(universe))
    for r in all_relations(alg, universe):
        report.relations_checked += 1
        for name in basic_law_failures(r):
            report.violations[name] += 1
        for w in step_lemma_failures(r, max_len):
            report.violations[f"step:{w}"] += 1
        for w in lifting_failures(r, max_len):
            report.violations[f"lifting:{w}"] += 1
    return report
