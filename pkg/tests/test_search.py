import random

import pytest

from mvgates import search
from mvgates.gates import Gate, family_gate, identity_gate, named_gate
from mvgates.search import (
    ConstraintSet,
    RealizationRow,
    SearchInfeasible,
    catalog_for,
    check_no_fanout,
    check_no_lmv,
    enumerate_gates,
    estimate_candidates,
    extract_connectives,
    find_gate_realizing,
    realizes_connective,
)

SELF_REV_SEARCH = ConstraintSet(
    self_reversible=True, weakly_conservative=True, boolean_fredkin=True
)


@pytest.fixture(scope="module")
def self_reversible_hits():
    return list(enumerate_gates(3, SELF_REV_SEARCH))


# ---------------------------------------------------------------------------
# constraints, estimates, feasibility


def test_constraint_normalization():
    cons = ConstraintSet(self_reversible=True, strictly_conservative=True).normalized()
    assert cons.reversible and cons.weakly_conservative
    with pytest.raises(ValueError):
        ConstraintSet(required_connectives=("bogus",)).normalized()


def test_estimates():
    assert estimate_candidates(3, SELF_REV_SEARCH) == 59392
    assert (
        estimate_candidates(
            3, ConstraintSet(reversible=True, weakly_conservative=True, boolean_fredkin=True)
        )
        == 6_531_840
    )


def test_unconstrained_space_is_rejected():
    with pytest.raises(SearchInfeasible):
        list(enumerate_gates(3, ConstraintSet()))
    with pytest.raises(SearchInfeasible) as info:
        list(enumerate_gates(3, ConstraintSet(weakly_conservative=True)))
    assert info.value.estimate > 10**15
    with pytest.raises(SearchInfeasible):
        list(
            enumerate_gates(
                3,
                ConstraintSet(reversible=True, weakly_conservative=True, boolean_fredkin=True),
                max_candidates=1000,
            )
        )


# ---------------------------------------------------------------------------
# enumeration


def test_boolean_strict_search_yields_exactly_fredkin():
    hits = list(
        enumerate_gates(
            2,
            ConstraintSet(
                reversible=True, strictly_conservative=True, boolean_fredkin=True
            ),
        )
    )
    assert hits == [named_gate("FREDKIN")]


def test_weak_only_boolean_space_enumerates_functions():
    hits = list(enumerate_gates(2, ConstraintSet(weakly_conservative=True)))
    assert len(hits) == 729  # 3^3 per nontrivial weight class
    assert all(g.is_weakly_conservative for g in hits)
    assert not all(g.is_reversible for g in hits)
    flat = [g.table for g in hits]
    assert flat == sorted(flat)


def test_self_reversible_search_counts_and_members(self_reversible_hits):
    hits = self_reversible_hits
    assert len(hits) == 59392  # recorded after the first full run
    assert named_gate("F1") in hits
    assert named_gate("F2") in hits
    assert named_gate("F3") in hits
    flat = [g.table for g in hits]
    assert flat == sorted(flat)
    assert len(set(flat)) == len(flat)


def test_self_reversible_search_is_sound(self_reversible_hits):
    rng = random.Random(3)
    sample = rng.sample(self_reversible_hits, 250)
    sample += [self_reversible_hits[0], self_reversible_hits[-1]]
    for g in sample:
        assert g.is_self_reversible
        assert g.is_weakly_conservative
        assert g.boolean_fredkin


def test_fully_regular_search_is_tiny():
    cons = ConstraintSet(
        self_reversible=True,
        weakly_conservative=True,
        boolean_fredkin=True,
        zero_regular=True,
        one_regular=True,
        first_line_identity=True,
    )
    hits = list(enumerate_gates(3, cons))
    assert len(hits) == estimate_candidates(3, cons) == 16
    assert named_gate("F1") in hits
    assert named_gate("F3") in hits
    assert named_gate("F2") not in hits
    for g in hits:
        assert g.is_regular(0) and g.is_regular(1) and g.satisfies_f7


def test_required_connectives_filter():
    cons = ConstraintSet(
        reversible=True,
        strictly_conservative=True,
        required_connectives=("fanout",),
    )
    hits = list(enumerate_gates(2, cons))
    assert named_gate("FREDKIN") in hits
    assert all(realizes_connective(g, "fanout") for g in hits)
    assert hits  # the Boolean Fredkin construction witnesses nonemptiness


def test_limit_stops_the_stream():
    hits = list(enumerate_gates(3, SELF_REV_SEARCH, limit=10))
    assert len(hits) == 10


def test_involution_enumeration_against_permutation_filter():
    # independent oracle: filter all 8! permutations of the Boolean triples
    # down to involutions and compare with the paired DFS
    import itertools

    hits = list(enumerate_gates(2, ConstraintSet(self_reversible=True)))
    brute = sum(
        1
        for perm in itertools.permutations(range(8))
        if all(perm[perm[i]] == i for i in range(8))
    )
    assert len(hits) == len(set(hits)) == brute == 764
    assert estimate_candidates(2, ConstraintSet(self_reversible=True)) == 764
    assert all(g.is_self_reversible for g in hits)


# ---------------------------------------------------------------------------
# connective extraction vs the golden operator tables.
# Levels: TOP means d-1; the tables list (name, pinned, inputs, outputs).


def _rows(spec, top, lam=None):
    out = []
    for name, pinned, inputs, outputs in spec:
        resolved = tuple(
            (line, top if v == "T" else (lam if v == "L" else v)) for line, v in pinned
        )
        garbage = tuple(i for i in range(1, 4) if i not in outputs)
        out.append(RealizationRow(name, resolved, inputs, outputs, garbage))
    return out


F1_STYLE = [
    ("fanout", ((2, "T"), (3, 0)), (1,), (1, 2)),
    ("pr1", ((1, 0),), (2, 3), (3,)),
    ("pr2", ((1, 0),), (2, 3), (2,)),
    ("imp_l", ((2, "T"),), (1, 3), (3,)),
    ("imp_g", ((3, "T"),), (1, 2), (2,)),
    ("or", ((2, "T"),), (1, 3), (2,)),
    ("and", ((3, 0),), (1, 2), (2,)),
    ("id", ((2, 0), (3, 0)), (1,), (1,)),
    ("not", ((2, "T"), (3, 0)), (1,), (3,)),
    ("sim", ((2, 0), (3, "T")), (1,), (2,)),
    ("poss", ((2, 0), (3, "T")), (1,), (3,)),
]
F2_STYLE = [
    ("fanout", ((2, "T"), (3, 0)), (1,), (1, 2)),
    ("pr1", ((1, "T"),), (2, 3), (2,)),
    ("pr2", ((1, "T"),), (2, 3), (3,)),
    ("imp_l", ((2, "T"),), (1, 3), (3,)),
    ("imp_g", ((3, "T"),), (1, 2), (2,)),
    ("or", ((2, "T"),), (1, 3), (2,)),
    ("and", ((3, 0),), (1, 2), (2,)),
    ("id", ((2, 0), (3, 0)), (1,), (1,)),
    ("not", ((2, "T"), (3, 0)), (1,), (3,)),
    ("sim", ((2, 0), (3, "T")), (1,), (2,)),
    ("poss", ((2, 0), (3, "T")), (1,), (3,)),
    ("nec", ((2, 0), (3, "L")), (1,), (1,)),
]
M_STYLE = [
    ("fanout", ((2, "T"), (3, 0)), (1,), (1, 2)),
    ("pr1", ((1, 0),), (2, 3), (3,)),
    ("pr2", ((1, 0),), (2, 3), (2,)),
    ("oplus", ((2, "T"),), (1, 3), (2,)),
    ("odot", ((3, 0),), (1, 2), (2,)),
    ("id", ((2, 0), (3, 0)), (1,), (1,)),
    ("not", ((2, "T"), (3, 0)), (1,), (3,)),
    ("sim", ((2, 0), (3, "T")), (1,), (2,)),
    ("poss", ((2, 0), (3, "T")), (1,), (3,)),
    ("nec", ((1, 1), (2, 0)), (3,), (3,)),
]

F1_SET = {"fanout", "pr1", "pr2", "imp_l", "imp_g", "or", "and", "id", "not", "sim", "poss"}
F2_SET = F1_SET | {"nec"}
M_SET = {"fanout", "pr1", "pr2", "oplus", "odot", "id", "not", "sim", "poss", "nec"}


def _check_operator_table(gate, expected_rows, expected_set):
    rows = extract_connectives(gate)
    names = {r.connective for r in rows}
    assert names == expected_set
    for row in expected_rows:
        assert row in rows, row


def test_f1_operator_table():
    _check_operator_table(named_gate("F1"), _rows(F1_STYLE, top=2), F1_SET)


def test_f2_operator_table():
    _check_operator_table(named_gate("F2"), _rows(F2_STYLE, top=2, lam=1), F2_SET)


def test_f3_operator_table():
    _check_operator_table(named_gate("F3"), _rows(M_STYLE, top=2), M_SET)


@pytest.mark.parametrize("d", (3, 4, 5))
def test_family_operator_tables(d):
    top = d - 1
    _check_operator_table(family_gate("F1_FAMILY", d), _rows(F1_STYLE, top), F1_SET)
    _check_operator_table(family_gate("M_FAMILY", d), _rows(M_STYLE, top), M_SET)
    for lam in range(1, d - 1):
        _check_operator_table(
            family_gate("F2_FAMILY", d, lam), _rows(F2_STYLE, top, lam), F2_SET
        )


def test_identity_gate_realizes_projections_only():
    rows = extract_connectives(identity_gate(3, 3))
    assert {r.connective for r in rows} == {"id", "pr1", "pr2"}


def test_extraction_requires_square_gates():
    with pytest.raises(ValueError):
        extract_connectives(named_gate("REV24"))
    with pytest.raises(ValueError):
        extract_connectives(named_gate("F1"), catalog_for(2))


def test_catalog_names_are_validated():
    with pytest.raises(KeyError):
        catalog_for(3, ("nonsense",))


# ---------------------------------------------------------------------------
# impossibility results


def test_no_fanout_for_three_valued_three_line_gates():
    report = check_no_fanout(3, 3)
    assert report.applicable and report.impossible
    assert len(report.witnesses) == 3 * 9
    for _, consts, missing in report.witnesses:
        assert missing not in consts


def test_no_fanout_on_two_boolean_lines_confirmed_by_enumeration():
    report = check_no_fanout(2, 2)
    assert report.applicable and report.impossible
    assert report.enumeration_checked and report.enumeration_agrees


def test_no_fanout_not_applicable_beyond_d_lines():
    report = check_no_fanout(3, 2)
    assert not report.applicable and not report.impossible
    assert "Fredkin" in report.note and "realizes FAN-OUT" in report.note


def test_no_fanout_single_line_and_validation():
    assert check_no_fanout(1, 4).impossible
    with pytest.raises(ValueError):
        check_no_fanout(0, 2)


def test_check_no_lmv():
    assert check_no_lmv(3) is True


def test_restricted_searches_find_the_named_gates_families():
    g = find_gate_realizing(("and", "or", "imp_l", "imp_g"))
    assert g is not None
    assert g.is_reversible and g.is_weakly_conservative and g.boolean_fredkin
    for name in ("and", "or", "imp_l", "imp_g"):
        assert realizes_connective(g, name)
    g2 = find_gate_realizing(("oplus", "odot"))
    assert g2 is not None
    assert g2.is_reversible and g2.is_weakly_conservative and g2.boolean_fredkin
    assert realizes_connective(g2, "oplus") and realizes_connective(g2, "odot")


def test_factored_scan_agrees_with_direct_extraction():
    space = search._ScanSpace(3, search.LMV_CONNECTIVES)
    rng = random.Random(99)
    for _ in range(25):
        mask = -1
        mapping: dict[int, int] = {}
        for entries in space.classes:
            m, mp = entries[rng.randrange(len(entries))]
            mask &= m
            mapping.update(mp)
        g = Gate(3, 3, 3, tuple(space.patterns[mapping[i]] for i in range(27)))
        assert g.is_reversible and g.is_weakly_conservative and g.boolean_fredkin
        for k, name in enumerate(space.conn_names):
            assert bool(mask & space.conn_mask(k)) == realizes_connective(g, name)


def test_scan_space_rejects_other_arities_and_unary_names():
    with pytest.raises(ValueError):
        search._ScanSpace(4, ("and",))
    with pytest.raises(ValueError):
        search._ScanSpace(3, ("not",))


def test_scan_space_covers_the_whole_constrained_space():
    # the factored per-class candidates multiply out to the same space the
    # depth-first enumerator would walk
    space = search._ScanSpace(3, ("oplus",))
    total = 1
    for entries in space.classes:
        total *= len(entries)
    expected = estimate_candidates(
        3, ConstraintSet(reversible=True, weakly_conservative=True, boolean_fredkin=True)
    )
    assert total == expected == 6_531_840
