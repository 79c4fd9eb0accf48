from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dmhrough import approx
from dmhrough.crisp import (
    CORRESPONDENCE_KINDS,
    CRISP_KINDS,
    CrispRelation,
    CrispSet,
    all_crisp_relations,
    all_masks,
    alliance_set_law_violation,
    alliance_singleton_check,
    crisp_approx,
    crisp_correspondence,
    crisp_property,
    crisp_sweep,
    embed_relation,
    embed_set,
)
from dmhrough.errors import MixedContext, UnsupportedKind
from dmhrough.fuzzy import Universe
from dmhrough.relations import check_property
import oracles as O

U3 = Universe.of(3)
U4 = Universe(("1", "2", "3", "4"))
FIG1 = CrispRelation.from_successors(U4, {"1": ["4"], "2": ["2", "3"], "3": ["1", "2"], "4": ["4"]})


def _pairs(rel):
    return {tuple(e) for e in rel.edges()}


def _all3():
    return list(all_crisp_relations(U3))


@given(st.integers(0, 2**9 - 1), st.integers(0, 7))
def test_approximations_match_oracle(code, mask):
    rel = CrispRelation(U3, tuple((code >> (3 * i)) & 7 for i in range(3)))
    x = CrispSet(U3, mask)
    pts = U3.points
    assert set(crisp_approx(rel, x, "UPPER").members()) == O.crisp_upper(_pairs(rel), pts, set(x.members()))
    assert set(crisp_approx(rel, x, "LOWER").members()) == O.crisp_lower(_pairs(rel), pts, set(x.members()))


def test_embedding_coherence():
    for rel in _all3():
        fz = embed_relation(rel)
        for kind in CRISP_KINDS:
            assert crisp_property(rel, kind).holds == check_property(fz, kind).holds, (kind, rel)
        for mask in all_masks(3):
            x = CrispSet(U3, mask)
            assert embed_set(crisp_approx(rel, x, "U")) == approx.upper(fz, embed_set(x))
            assert embed_set(crisp_approx(rel, x, "L")) == approx.lower(fz, embed_set(x))


def test_properties_match_oracle():
    for rel in _all3():
        for kind in CRISP_KINDS:
            assert crisp_property(rel, kind).holds == O.crisp_prop(_pairs(rel), U3.points, kind.value)


def test_six_correspondences():
    for rel in _all3():
        for kind in CORRESPONDENCE_KINDS:
            assert crisp_correspondence(rel, kind)
    rep = crisp_sweep(3)
    assert rep["total_disagreements"] == 0
    assert all(t["relations_checked"] == 512 for t in rep["kinds"].values())


def test_figure1_alliance_erratum():
    x = CrispSet.of(U4, ["3", "4"])
    up = crisp_approx(FIG1, x, "UPPER")
    assert up.members() == ("1", "2", "4")
    lo_up = crisp_approx(FIG1, up, "LOWER")
    assert lo_up.members() == ("1", "3", "4")
    assert not lo_up <= up
    assert crisp_property(FIG1, "positive_alliance").holds
    assert alliance_singleton_check(FIG1)
    assert alliance_set_law_violation(FIG1).members() == ("3", "4")


def test_serial_not_transitive_alliance():
    u = Universe(("a", "b", "c"))
    rel = CrispRelation.from_edges(u, [("a", "b"), ("b", "b"), ("c", "a"), ("c", "c")])
    assert crisp_property(rel, "serial").holds
    rep = crisp_property(rel, "transitive")
    assert not rep.holds and rep.witness.points == ("c", "a", "b")
    assert crisp_property(rel, "positive_alliance").holds


def test_alliance_singleton_matches_property():
    for rel in _all3():
        assert alliance_singleton_check(rel) == crisp_property(rel, "positive_alliance").holds


def test_serial_transitive_gives_alliance_and_set_law():
    for rel in _all3():
        if crisp_property(rel, "serial").holds and crisp_property(rel, "transitive").holds:
            assert crisp_property(rel, "positive_alliance").holds
            assert alliance_set_law_violation(rel) is None


def test_reflexive_is_alliance():
    for rel in _all3():
        if crisp_property(rel, "reflexive").holds:
            assert alliance_singleton_check(rel)


def test_full_and_empty_relations():
    full = CrispRelation(U3, (7, 7, 7))
    for kind in CORRESPONDENCE_KINDS:
        assert crisp_property(full, kind).holds
    empty = CrispRelation(U3, (0, 0, 0))
    assert not crisp_property(empty, "serial").holds
    assert crisp_approx(empty, CrispSet(U3, 7), "UPPER").mask == 0
    assert crisp_correspondence(empty, "serial")


def test_unsupported_kinds_and_context():
    rel = CrispRelation(U3, (1, 2, 4))
    for kind in ("serial_pointed", "serial_singleton", "symmetric_dm"):
        with pytest.raises(UnsupportedKind):
            crisp_property(rel, kind)
    with pytest.raises(MixedContext):
        crisp_approx(rel, CrispSet(U4, 1), "UPPER")
    with pytest.raises(ValueError):
        crisp_approx(rel, CrispSet(U3, 1), "MIDDLE")
