import pytest
from hypothesis import given, settings, strategies as st

from mvgates import gates
from mvgates.gates import (
    ControlDecomposition,
    Gate,
    all_patterns,
    automaton_to_gate,
    control_decompose,
    family_gate,
    format_gate,
    identity_gate,
    invert,
    make_gate,
    named_gate,
    orbit_lengths,
    parse_gate,
    pin_inputs,
    validate_family,
    weight,
)

# ---------------------------------------------------------------------------
# Golden copies of the built-in gate tables, transcribed independently of
# gates.py.  Levels 0, 1, 2
# encode 0, 1/2, 1 in the three-valued tables.

LANDAUER_ROWS = {
    (0, 0, 0): (0, 0, 0), (0, 0, 1): (1, 1, 0),
    (0, 1, 0): (0, 0, 0), (0, 1, 1): (1, 1, 0),
    (1, 0, 0): (0, 0, 0), (1, 0, 1): (1, 1, 0),
    (1, 1, 0): (0, 0, 1), (1, 1, 1): (1, 1, 1),
}
REV24_ROWS = {
    (0, 0): (0, 0, 0, 0), (0, 1): (0, 1, 1, 0),
    (1, 0): (0, 1, 1, 1), (1, 1): (1, 0, 0, 1),
}
REV22_ROWS = {(0, 0): (1, 1), (0, 1): (1, 0), (1, 0): (0, 1), (1, 1): (0, 0)}
CONS22_ROWS = {(0, 0): (0, 0), (0, 1): (1, 0), (1, 0): (1, 0), (1, 1): (1, 1)}
EXC_ROWS = {(0, 0): (0, 0), (0, 1): (1, 0), (1, 0): (0, 1), (1, 1): (1, 1)}
CNOT_ROWS = {(0, 0): (0, 0), (0, 1): (0, 1), (1, 0): (1, 1), (1, 1): (1, 0)}
FREDKIN_ROWS = {
    (0, 0, 0): (0, 0, 0), (0, 0, 1): (0, 1, 0),
    (0, 1, 0): (0, 0, 1), (0, 1, 1): (0, 1, 1),
    (1, 0, 0): (1, 0, 0), (1, 0, 1): (1, 0, 1),
    (1, 1, 0): (1, 1, 0), (1, 1, 1): (1, 1, 1),
}

F1_ROWS = {
    (0, 0, 0): (0, 0, 0), (0, 0, 1): (0, 1, 0), (0, 0, 2): (0, 2, 0),
    (0, 1, 0): (0, 0, 1), (0, 1, 1): (0, 1, 1), (0, 1, 2): (0, 2, 1),
    (0, 2, 0): (0, 0, 2), (0, 2, 1): (0, 1, 2), (0, 2, 2): (0, 2, 2),
    (1, 0, 0): (1, 0, 0), (1, 0, 1): (1, 0, 1), (1, 0, 2): (1, 0, 2),
    (1, 1, 0): (1, 1, 0), (1, 1, 1): (1, 2, 0), (1, 1, 2): (1, 2, 1),
    (1, 2, 0): (1, 1, 1), (1, 2, 1): (1, 1, 2), (1, 2, 2): (1, 2, 2),
    (2, 0, 0): (2, 0, 0), (2, 0, 1): (2, 0, 1), (2, 0, 2): (2, 0, 2),
    (2, 1, 0): (2, 1, 0), (2, 1, 1): (2, 1, 1), (2, 1, 2): (2, 1, 2),
    (2, 2, 0): (2, 2, 0), (2, 2, 1): (2, 2, 1), (2, 2, 2): (2, 2, 2),
}
# F2 differs from F1 exactly on the rows below (and their images).
F2_ROWS = dict(F1_ROWS)
F2_ROWS[(0, 1, 1)] = (1, 0, 1)
F2_ROWS[(1, 0, 1)] = (0, 1, 1)

F3_ROWS = {
    (0, 0, 0): (0, 0, 0), (0, 0, 1): (0, 1, 0), (0, 0, 2): (0, 2, 0),
    (0, 1, 0): (0, 0, 1), (0, 1, 1): (0, 1, 1), (0, 1, 2): (0, 2, 1),
    (0, 2, 0): (0, 0, 2), (0, 2, 1): (0, 1, 2), (0, 2, 2): (0, 2, 2),
    (1, 0, 0): (1, 0, 0), (1, 0, 1): (1, 1, 0), (1, 0, 2): (1, 0, 2),
    (1, 1, 0): (1, 0, 1), (1, 1, 1): (1, 2, 0), (1, 1, 2): (1, 1, 2),
    (1, 2, 0): (1, 1, 1), (1, 2, 1): (1, 2, 1), (1, 2, 2): (1, 2, 2),
    (2, 0, 0): (2, 0, 0), (2, 0, 1): (2, 0, 1), (2, 0, 2): (2, 0, 2),
    (2, 1, 0): (2, 1, 0), (2, 1, 1): (2, 1, 1), (2, 1, 2): (2, 1, 2),
    (2, 2, 0): (2, 2, 0), (2, 2, 1): (2, 2, 1), (2, 2, 2): (2, 2, 2),
}

GOLDEN = {
    "LANDAUER": LANDAUER_ROWS,
    "REV24": REV24_ROWS,
    "REV22": REV22_ROWS,
    "CONS22": CONS22_ROWS,
    "EXC": EXC_ROWS,
    "CNOT": CNOT_ROWS,
    "FREDKIN": FREDKIN_ROWS,
    "F1": F1_ROWS,
    "F2": F2_ROWS,
    "F3": F3_ROWS,
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_named_gates_match_golden_tables(name):
    g = named_gate(name)
    assert dict(g.rows()) == GOLDEN[name]


def test_named_gate_lookup():
    assert named_gate("fredkin") is named_gate("FREDKIN")
    with pytest.raises(ValueError):
        named_gate("TOFFOLI")


def test_fredkin_marked_rows():
    fredkin = named_gate("FREDKIN")
    assert fredkin.apply((0, 0, 1)) == (0, 1, 0)
    f1 = named_gate("F1")
    assert f1.apply((1, 1, 1)) == (1, 2, 0)
    assert f1.apply((1, 2, 0)) == (1, 1, 1)
    assert named_gate("F3").apply((1, 0, 1)) == (1, 1, 0)


def test_make_gate_rejects_partial_or_duplicated_tables():
    rows = [((0,), (0,)), ((1,), (1,))]
    make_gate(3, 1, 1, rows + [((2,), (2,))])
    with pytest.raises(ValueError, match="not total"):
        make_gate(3, 1, 1, rows)
    with pytest.raises(ValueError, match="duplicate"):
        make_gate(2, 1, 1, [((0,), (0,)), ((0,), (1,)), ((1,), (0,))])
    with pytest.raises(ValueError):
        make_gate(2, 1, 1, [((0,), (2,)), ((1,), (0,))])
    with pytest.raises(ValueError):
        make_gate(2, 1, 1, [((0, 1), (0,)), ((1,), (0,))])


def test_rev24_shape():
    g = named_gate("REV24")
    assert (g.d, g.n, g.m) == (2, 2, 4)
    assert g.is_reversible


# -- property predicates ------------------------------------------------------

EXPECTED_REPORTS = {
    # reversible, self_rev, strict, weak, 0-reg, 1-reg, F-7, F-8
    "LANDAUER": (False, False, False, False, False, False, False, False),
    "REV22": (True, True, False, False, None, None, None, None),
    "CONS22": (False, False, True, True, None, None, None, None),
    "EXC": (True, True, True, True, None, None, None, None),
    "CNOT": (True, True, False, False, None, None, None, None),
    "FREDKIN": (True, True, True, True, True, True, True, True),
    "F1": (True, True, False, True, True, True, True, True),
    "F2": (True, True, False, True, False, True, False, True),
    "F3": (True, True, False, True, True, True, True, True),
    "REV24": (True, None, None, False, None, None, None, None),
}


@pytest.mark.parametrize("name", sorted(EXPECTED_REPORTS))
def test_gate_reports(name):
    report = named_gate(name).report()
    assert (
        report.reversible,
        report.self_reversible,
        report.strictly_conservative,
        report.weakly_conservative,
        report.zero_regular,
        report.one_regular,
        report.conditional_control_first_line,
        report.boolean_fredkin,
    ) == EXPECTED_REPORTS[name]


def test_predicate_shape_errors():
    rev24 = named_gate("REV24")
    with pytest.raises(ValueError):
        rev24.is_self_reversible
    with pytest.raises(ValueError):
        rev24.is_strictly_conservative
    with pytest.raises(ValueError):
        named_gate("EXC").is_regular(0)
    with pytest.raises(ValueError):
        named_gate("F1").is_regular(2)


def test_rev22_nonconservative_row_and_cons22_collision():
    assert named_gate("REV22").apply((0, 0)) == (1, 1)
    cons = named_gate("CONS22")
    assert cons.apply((0, 1)) == cons.apply((1, 0)) == (1, 0)


# -- inversion ------------------------------------------------------------------


def test_invert_involutions():
    for name in ("FREDKIN", "EXC", "F1", "F2", "F3", "CNOT"):
        g = named_gate(name)
        assert invert(g) == g


def test_invert_rev22():
    inv = invert(named_gate("REV22"))
    assert inv.apply((1, 1)) == (0, 0)
    g = named_gate("REV22")
    assert all(inv.apply(g.apply(p)) == p for p in all_patterns(2, 2))


def test_invert_rectangular_and_errors():
    g = named_gate("REV24")
    inv = invert(g)
    assert all(inv.apply(g.apply(p)) == p for p in all_patterns(2, 2))
    with pytest.raises(ValueError):
        invert(named_gate("LANDAUER"))


def test_self_reversible_iff_orbits_of_length_at_most_two():
    for name in ("FREDKIN", "F1", "F2", "F3", "EXC", "REV22"):
        assert orbit_lengths(named_gate(name)) <= {1, 2}
    # a 3-cycle on one trit is reversible but not self-reversible
    cycle = make_gate(3, 1, 1, [((0,), (1,)), ((1,), (2,)), ((2,), (0,))])
    assert cycle.is_reversible and not cycle.is_self_reversible
    assert 3 in orbit_lengths(cycle)


# -- pinning ---------------------------------------------------------------------


def test_fredkin_pinnings_give_classical_connectives():
    fredkin = named_gate("FREDKIN")
    and_table = pin_inputs(fredkin, {3: 0}, [2])
    assert dict(and_table.rows()) == {
        (0, 0): (0,), (0, 1): (0,), (1, 0): (0,), (1, 1): (1,)
    }
    not_table = pin_inputs(fredkin, {2: 1, 3: 0}, [3])
    assert dict(not_table.rows()) == {(0,): (1,), (1,): (0,)}
    fan_out = pin_inputs(fredkin, {2: 1, 3: 0}, [1, 2])
    assert dict(fan_out.rows()) == {(0,): (0, 0), (1,): (1, 1)}


def test_f3_pinning_gives_truncated_sum():
    oplus = pin_inputs(named_gate("F3"), {2: 2}, [2])
    for x in range(3):
        for y in range(3):
            assert oplus.apply((x, y)) == (min(2, x + y),)


def test_pin_inputs_validation():
    fredkin = named_gate("FREDKIN")
    with pytest.raises(ValueError):
        pin_inputs(fredkin, {4: 0}, [1])
    with pytest.raises(ValueError):
        pin_inputs(fredkin, {1: 3}, [1])
    with pytest.raises(ValueError):
        pin_inputs(fredkin, {1: 0}, [5])
    with pytest.raises(ValueError):
        pin_inputs(fredkin, {1: 0, 2: 0, 3: 0}, [1])


# -- conditional control ----------------------------------------------------------


def test_cnot_decomposition():
    decomp = control_decompose(named_gate("CNOT"), 1)
    assert decomp is not None
    assert decomp.delta[0] == identity_gate(2, 1)
    assert decomp.delta[1].table == ((1,), (0,))  # NOT
    assert automaton_to_gate(decomp) == named_gate("CNOT")


def test_fredkin_decomposition():
    decomp = control_decompose(named_gate("FREDKIN"), 1)
    assert decomp is not None
    assert decomp.delta[0] == named_gate("EXC")
    assert decomp.delta[1] == identity_gate(2, 2)
    assert automaton_to_gate(decomp) == named_gate("FREDKIN")


def test_rev22_is_not_controlled():
    assert control_decompose(named_gate("REV22"), 1) is None


def test_identity_deltas_reassemble_to_identity():
    decomp = ControlDecomposition(2, 1, 2, (identity_gate(2, 2), identity_gate(2, 2)))
    assert automaton_to_gate(decomp) == identity_gate(2, 3)


def test_automaton_round_trip_over_named_gates():
    for name in ("CNOT", "FREDKIN", "F1", "F3"):
        g = named_gate(name)
        decomp = control_decompose(g, 1)
        assert decomp is not None
        assert automaton_to_gate(decomp) == g
        again = control_decompose(automaton_to_gate(decomp), 1)
        assert again is not None and again.delta == decomp.delta
    # F2 moves its first line, so it cannot be a 1-controlled gate
    assert control_decompose(named_gate("F2"), 1) is None


def test_control_decompose_validation():
    with pytest.raises(ValueError):
        control_decompose(named_gate("REV24"), 1)
    with pytest.raises(ValueError):
        control_decompose(named_gate("FREDKIN"), 3)
    bad = ControlDecomposition(2, 1, 1, (identity_gate(2, 1),))
    with pytest.raises(ValueError):
        automaton_to_gate(bad)


# -- analytic families -------------------------------------------------------------


def test_families_reproduce_the_three_valued_gates_row_for_row():
    assert family_gate("F1_FAMILY", 3) == named_gate("F1")
    assert family_gate("F2_FAMILY", 3, 1) == named_gate("F2")
    assert family_gate("M_FAMILY", 3) == named_gate("F3")


def test_family_parameter_validation():
    with pytest.raises(ValueError):
        family_gate("F2_FAMILY", 3)
    with pytest.raises(ValueError):
        family_gate("F2_FAMILY", 3, 0)
    with pytest.raises(ValueError):
        family_gate("F2_FAMILY", 3, 2)
    with pytest.raises(ValueError):
        family_gate("F1_FAMILY", 3, 1)
    with pytest.raises(ValueError):
        family_gate("NOPE", 3)
    with pytest.raises(ValueError):
        family_gate("F1_FAMILY", 1)


def test_f1_family_example_row_on_five_levels():
    # (3/4, 1, 1/4) -> (3/4, 3/4, 1/2) in L_5
    assert family_gate("F1_FAMILY", 5).apply((3, 4, 1)) == (3, 3, 2)


def test_families_collapse_to_fredkin_on_two_levels():
    assert family_gate("F1_FAMILY", 2) == named_gate("FREDKIN")
    assert family_gate("M_FAMILY", 2) == named_gate("FREDKIN")


def _family_instances(d):
    yield family_gate("F1_FAMILY", d)
    for lam in range(1, d - 1):
        yield family_gate("F2_FAMILY", d, lam)
    yield family_gate("M_FAMILY", d)


@pytest.mark.parametrize("d", (3, 4, 5, 7))
def test_family_propositions(d):
    for g in _family_instances(d):
        assert g.is_self_reversible
        assert g.is_weakly_conservative
        assert g.boolean_fredkin
        assert orbit_lengths(g) <= {1, 2}


@pytest.mark.parametrize("d", (3, 4, 5, 7))
def test_f1_and_m_satisfy_the_fredkin_style_properties(d):
    for family in ("F1_FAMILY", "M_FAMILY"):
        g = family_gate(family, d)
        assert g.is_regular(0) and g.is_regular(1)
        assert g.satisfies_f7


@pytest.mark.parametrize("d", (3, 4, 5, 7))
def test_f2_violation_counts(d):
    for lam in range(1, d - 1):
        g = family_gate("F2_FAMILY", d, lam)
        assert g.is_regular(1)
        zero_violations = sum(
            1
            for x2 in range(d)
            for x3 in range(d)
            if g.apply((0, x2, x3)) != (0, x3, x2)
        )
        f7_violations = sum(1 for inp, out in g.rows() if inp[0] != out[0])
        assert zero_violations == 2 * d - 5
        assert f7_violations == 2 * d - 4


def test_family_validator_accepts_overlapping_but_agreeing_guards():
    for d in (3, 4, 5, 7):
        validate_family("F1_FAMILY", d)
        validate_family("M_FAMILY", d)
        for lam in range(1, d - 1):
            validate_family("F2_FAMILY", d, lam)


def test_family_validator_reports_conflicts_with_rule_indices():
    conflicting = [
        (lambda a, b, c, D: a == 0, lambda a, b, c, D: (a, c, b)),
        (lambda a, b, c, D: b == 0, lambda a, b, c, D: (c, b, a)),
        (lambda a, b, c, D: True, lambda a, b, c, D: (a, b, c)),
    ]
    with pytest.raises(ValueError, match=r"rules \[1, 2\]"):
        gates._validate_rules(conflicting, 3, "conflicting")


# -- mvgate format ------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_format_parse_round_trip(name):
    g = named_gate(name)
    assert parse_gate(format_gate(g)) == g


def test_parse_accepts_comments_and_any_row_order():
    text = """
    # the exchange gate
    mvgate 1
    d=2 n=2 m=2
    1 1 -> 1 1
    0 1 -> 1 0   # swapped
    1 0 -> 0 1
    0 0 -> 0 0
    """
    assert parse_gate(text) == named_gate("EXC")


@pytest.mark.parametrize(
    "text, message",
    [
        ("d=2 n=1 m=1\n0 -> 0\n1 -> 1\n", "header"),
        ("mvgate 1\n", "dimension"),
        ("mvgate 1\nd=2 n=1\n0 -> 0\n1 -> 1\n", "dimension"),
        ("mvgate 1\nd=2 n=1 m=1\n0 -> 0\n", "not total"),
        ("mvgate 1\nd=2 n=1 m=1\n0 -> 0\n1 -> 1\n0 -> 1\n", "duplicate"),
        ("mvgate 1\nd=2 n=1 m=1\n0 -> 2\n1 -> 1\n", "invalid output"),
        ("mvgate 1\nd=2 n=1 m=1\n0 0\n1 1\n", "malformed"),
    ],
)
def test_parse_rejects_malformed_files(text, message):
    with pytest.raises(ValueError, match=message):
        parse_gate(text)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_round_trip_on_random_gates(data):
    d = data.draw(st.integers(2, 4))
    n = data.draw(st.integers(1, 2))
    m = data.draw(st.integers(1, 3))
    table = tuple(
        tuple(data.draw(st.integers(0, d - 1)) for _ in range(m))
        for _ in range(d**n)
    )
    g = Gate(d, n, m, table)
    assert parse_gate(format_gate(g)) == g


def test_weight_helper():
    assert weight((0, 2, 1)) == 3
    assert all(weight(inp) == weight(out) for inp, out in named_gate("F1").rows())


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_report_flag_implications(data):
    d = data.draw(st.integers(2, 3))
    n = data.draw(st.integers(1, 2))
    table = tuple(
        tuple(data.draw(st.integers(0, d - 1)) for _ in range(n))
        for _ in range(d**n)
    )
    report = Gate(d, n, n, table).report()
    if report.self_reversible:
        assert report.reversible
    if report.strictly_conservative:
        assert report.weakly_conservative
