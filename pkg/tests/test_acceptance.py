"""Acceptance criteria, one test each.

Every test records a single ``PASS``/``FAIL`` line; the lines are echoed in the
terminal summary (see conftest.py) and also printed when the module is run as a
script.  Timings exclude building the shared algebras, which are cached.
"""

from __future__ import annotations

import time

from dmhrough import approx
from dmhrough.catalog import (
    chain3_symm_relation,
    figure1_relation,
    m2_swap_symm_relation,
    serial1_relation,
    serial1_set,
    seriality_gap_relation,
)
from dmhrough.correspondence import CORRESPONDENCE_KINDS, SERIALITY_LAW, law_holds, sweep
from dmhrough.crisp import CrispSet, crisp_approx, crisp_property, crisp_sweep
from dmhrough.fuzzy import FuzzySet, Universe, all_relations, all_sets, bottom_set, singleton
from dmhrough.lattice import standard_algebra
from dmhrough.laws import BASIC_LAWS, law_suite, lifting_failures
from dmhrough.reconstruction import (
    AxiomSpec,
    ExtensionalTable,
    all_singleton_generated,
    base_axiom_holds,
    characterized_axiom_holds,
    dual_operator,
    extract_relation,
    operator_from_relation,
    represents_upper,
)
from dmhrough.relations import check_property, holds

RESULTS: list[str] = []
XY = Universe.of(2)


def report(n: int, ok: bool, detail: str, seconds: float) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail} [{seconds * 1000:.3f} ms]"
    RESULTS.append(line)
    print(line)


def best_of(fn, reps: int = 50):
    """Return (result, fastest wall time) over ``reps`` calls."""
    best, out = float("inf"), None
    for _ in range(reps):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return out, best


def test_criterion_1_serial_example():
    r, a = serial1_relation(), serial1_set()

    def run():
        lo, up, lr = approx.lower(r, a), approx.upper(r, a), approx.lower_residuated(r, a)
        return check_property(r, "serial").holds, lo, up, lr

    (serial, lo, up, lr), secs = best_of(run)
    ok = (
        serial
        and lo["x"] == "1"
        and up["x"] == "0"
        and not lo <= up
        and lr["x"] == "0"
        and lr <= up
        and secs < 1e-3
    )
    report(1, ok, f"serial={serial} L(A)(x)={lo['x']} U(A)(x)={up['x']} L*(A)(x)={lr['x']}", secs)
    assert ok


def test_criterion_2_seriality_gap():
    r = seriality_gap_relation()
    alg = r.algebra
    zero = bottom_set(alg, XY)
    singles = [singleton(alg, XY, p) for p in XY.points]

    def run():
        lo0, up0 = approx.lower(r, zero), approx.upper(r, zero)
        single_ok = all(approx.lower(r, s) <= approx.upper(r, s) for s in singles)
        return lo0, up0, single_ok, check_property(r, "serial_singleton").holds

    (lo0, up0, single_ok, ss), secs = best_of(run)
    law = law_holds(r, SERIALITY_LAW)
    ok = (
        lo0["x"] == "a"
        and up0 == zero
        and single_ok
        and ss
        and not law.holds_for_all
        and secs < 1e-3
    )
    report(2, ok, f"L0(x)={lo0['x']} U0=0:{up0 == zero} singletons ok:{single_ok} forall-A law:{law.holds_for_all}", secs)
    assert ok


def test_criterion_3_symmetry_separation():
    t = time.perf_counter()
    r = chain3_symm_relation()
    classical = check_property(r, "symmetric_classical").holds
    dm = check_property(r, "symmetric_dm")
    witness_val = next(iter(dm.witness.values.values())) if dm.witness else None
    swap = m2_swap_symm_relation()
    swap_dm = check_property(swap, "symmetric_dm")
    # Oracle value for the companion example, recorded rather than asserted from prose.
    swap_val = next(iter(swap_dm.witness.values.values())) if swap_dm.witness else None
    secs = time.perf_counter() - t
    ok = classical and not dm.holds and witness_val == "u" and not swap_dm.holds and swap_val == "b"
    report(
        3, ok,
        f"chain3 classical={classical} dm={dm.holds} value={witness_val}; m2_swap dm={swap_dm.holds} value={swap_val}",
        secs,
    )
    assert ok


def test_criterion_4_crisp_alliance():
    rel = figure1_relation()
    x = CrispSet.of(rel.universe, ["3", "4"])

    def run():
        up = crisp_approx(rel, x, "UPPER")
        return crisp_property(rel, "positive_alliance").holds, up, crisp_approx(rel, up, "LOWER")

    (alliance, up, lo_up), secs = best_of(run)
    ok = (
        alliance
        and up.members() == ("1", "2", "4")
        and lo_up.members() == ("1", "3", "4")
        and not lo_up <= up
        and secs < 1e-3
    )
    report(4, ok, f"alliance={alliance} X^R={list(up.members())} (X^R)_R={list(lo_up.members())}", secs)
    assert ok


def test_criterion_5_correspondence_sweeps():
    t = time.perf_counter()
    parts = []
    bad = 0
    expected = {"m2_fix": 256, "m2_swap": 256, "chain3": 81}
    for name, count in expected.items():
        rep = sweep(standard_algebra(name), 2)
        checked = {tl.relations_checked for tl in rep.tallies.values()}
        bad += rep.disagreements + (checked != {count}) + (len(rep.tallies) != len(CORRESPONDENCE_KINDS))
        parts.append(f"{name}:{rep.disagreements}")
    crisp = crisp_sweep(3)
    bad += crisp["total_disagreements"]
    bad += any(v["relations_checked"] != 512 for v in crisp["kinds"].values()) + (len(crisp["kinds"]) != 6)
    parts.append(f"crisp3:{crisp['total_disagreements']}")
    secs = time.perf_counter() - t
    ok = bad == 0 and len(CORRESPONDENCE_KINDS) == 7 and secs < 10
    report(5, ok, "disagreements " + " ".join(parts), secs)
    assert ok


def test_criterion_6_lifting():
    t = time.perf_counter()
    violations = 0
    relations = 0
    for r in all_relations(standard_algebra("m2_fix"), XY):
        relations += 1
        violations += len(lifting_failures(r, 3))
    secs = time.perf_counter() - t
    ok = relations == 256 and violations == 0 and secs < 30
    report(6, ok, f"{relations} relations, words up to length 3, {violations} violations", secs)
    assert ok


SPECS = {
    "mediate": AxiomSpec.parse(["UU"]),
    "euclidean": AxiomSpec.parse(["LU"]),
    "adjoint": AxiomSpec.parse(["UL"]),
    "functional": AxiomSpec.parse(["L"]),
    "reflexive": AxiomSpec.parse([], ["I"]),
    "transitive": AxiomSpec.parse([], ["UU"]),
}
COMBINED = AxiomSpec.parse(["UU", "LU", "UL"], ["I", "UU"])
FIVE = ("reflexive", "transitive", "mediate", "euclidean", "adjoint")


def test_criterion_7_reconstruction():
    t = time.perf_counter()
    alg = standard_algebra("m2_fix")
    ops = list(all_singleton_generated(alg, XY))
    rels = [extract_relation(op) for op in ops]
    bijective = len(ops) == 256 and len({r.rows for r in rels}) == 256
    bijective &= all(operator_from_relation(r).images == op.images for op, r in zip(ops, rels))
    base = all(base_axiom_holds(op) for op in ops)

    table = ExtensionalTable.tabulate(operator_from_relation(serial1_relation()))
    a = FuzzySet.from_mapping(alg, XY, {"x": "a", "y": "0"})
    out = table.values(a.values)
    perturbed = table.with_entry(a.values, (alg.top, out[1]))
    rejected = represents_upper(perturbed) is None and represents_upper(table) is not None

    mismatches = 0
    for r in all_relations(alg, XY):
        op = operator_from_relation(r)
        for kind, spec in SPECS.items():
            mismatches += characterized_axiom_holds(op, spec) != holds(r, kind)
        mismatches += characterized_axiom_holds(op, COMBINED) != all(holds(r, k) for k in FIVE)
    secs = time.perf_counter() - t
    ok = bijective and base and rejected and mismatches == 0 and secs < 10
    report(7, ok, f"bijection={bijective} base axiom={base} perturbed rejected={rejected} spec mismatches={mismatches}", secs)
    assert ok


def _duality_failures(name: str) -> int:
    alg = standard_algebra(name)
    sets = list(all_sets(alg, XY))
    bad = 0
    for r in all_relations(alg, XY):
        d = dual_operator(operator_from_relation(r))
        bad += any(d(s) != approx.lower(r, s) for s in sets)
    return bad


def test_criterion_8_operator_laws():
    t = time.perf_counter()
    violations: dict[str, int] = {}
    non_serial_match = True
    for name in ("m2_fix", "chain3"):
        alg = standard_algebra(name)
        rep = law_suite(alg, XY, 3)
        for k, v in rep.violations.items():
            violations[f"{name}:{k}"] = v
        non_serial = sum(not holds(r, "serial") for r in all_relations(alg, XY))
        for k in ("L0=0", "U1=1"):
            non_serial_match &= rep.violations.get(k, 0) == non_serial
        dual_bad = _duality_failures(name)
        if dual_bad:
            violations[f"{name}:dual(upper)=lower"] = dual_bad
    secs = time.perf_counter() - t
    ok = not violations and secs < 30
    others = {k: v for k, v in violations.items() if k.split(":", 1)[1] not in ("L0=0", "U1=1")}
    detail = f"{len(BASIC_LAWS)} basic laws + step + duality; violations={violations or 0}"
    if violations and not others and non_serial_match:
        detail += "; only L0=0/U1=1 fail, exactly on the non-serial relations"
    report(8, ok, detail, secs)
    assert ok, violations


if __name__ == "__main__":
    for fn in [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]:
        try:
            fn()
        except AssertionError:
            pass
