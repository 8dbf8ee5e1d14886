"""Finite model checking for the algebraic counterparts of L_d.

A `FiniteStructure` is a carrier {0, ..., size-1} plus named constant,
unary and binary operation tables.  Axioms are data: pairs of terms over a
small functional language (`imp(imp(x,y),y) = imp(imp(y,x),x)`), evaluated
by one generic interpreter against a structure, so the Wajsberg, BZW,
BZMV, Mangani-MV and Chang axiom sets all share a single checking engine.
Derived operations (truncated sum from implication and vice versa, lattice
join/meet, the modal operators) are materialized as tables once per
structure before any axiom is evaluated; inequalities s <= t are read as
meet(s, t) = s over the derived meet.

The standard model of everything here is L_d itself: implication ->L,
diametrical negation, and the intuitionistic negation ~ from the values
module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product

from . import values

Term = tuple

VARIABLES = ("x", "y", "z")
CONSTANT_NAMES = ("zero", "one")

#: operation name -> kind, for signature checking and the mvalg format
OP_KINDS = {
    "neg": "unary",
    "bneg": "unary",
    "flat": "unary",
    "box": "unary",
    "dia": "unary",
    "imp": "binary",
    "oplus": "binary",
    "odot": "binary",
    "join": "binary",
    "meet": "binary",
}

SIGNATURES: dict[str, dict[str, tuple[str, ...]]] = {
    "bzw": {"constants": ("one",), "unary": ("neg", "bneg"), "binary": ("imp",)},
    "bzmv": {"constants": ("zero",), "unary": ("neg", "bneg"), "binary": ("oplus",)},
    "mv": {"constants": ("zero",), "unary": ("neg",), "binary": ("oplus",)},
    "chang": {"constants": ("zero",), "unary": ("neg",), "binary": ("oplus",)},
    "wajsberg": {"constants": ("one",), "unary": ("neg",), "binary": ("imp",)},
}


@dataclass(frozen=True)
class FiniteStructure:
    """A finite carrier with named operation tables."""

    size: int
    constants: dict[str, int] = field(default_factory=dict)
    unary: dict[str, tuple[int, ...]] = field(default_factory=dict)
    binary: dict[str, tuple[tuple[int, ...], ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError("carrier must be nonempty")
        rng = range(self.size)
        for name, c in self.constants.items():
            if c not in rng:
                raise ValueError(f"constant {name}={c} outside the carrier")
        for name, table in self.unary.items():
            if len(table) != self.size or any(v not in rng for v in table):
                raise ValueError(f"unary table {name!r} is not total")
        for name, table in self.binary.items():
            if len(table) != self.size or any(
                len(row) != self.size or any(v not in rng for v in row)
                for row in table
            ):
                raise ValueError(f"binary table {name!r} is not total")

    def elements(self) -> range:
        return range(self.size)


def standard_model(d: int, signature: str) -> FiniteStructure:
    """L_d with the connective tables filling the signature's slots."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    sig = SIGNATURES.get(signature.lower())
    if sig is None:
        raise ValueError(f"unknown signature {signature!r}; known: {', '.join(SIGNATURES)}")
    source_const = {"one": d - 1, "zero": 0}
    source_unary = {"neg": values.unary_table("NOT", d), "bneg": values.unary_table("SIM", d)}
    source_binary = {"imp": values.binary_table("TO_L", d), "oplus": values.binary_table("OPLUS", d)}
    return FiniteStructure(
        d,
        {name: source_const[name] for name in sig["constants"]},
        {name: source_unary[name] for name in sig["unary"]},
        {name: source_binary[name] for name in sig["binary"]},
    )


def with_derived_ops(s: FiniteStructure) -> FiniteStructure:
    """Materialize every operation derivable from the primitives.

    From an implication structure: 0 := neg 1, x (+) y := neg x -> y,
    x (.) y := neg(x -> neg y), x v y := (x -> y) -> y and
    x ^ y := neg((neg x -> neg y) -> neg y).  From a truncated-sum
    structure the dual definitions are used.  When the Brouwer negation
    is present, box := bneg . neg, dia := neg . bneg, flat := neg . box.
    """
    rng = range(s.size)
    constants = dict(s.constants)
    unary = dict(s.unary)
    binary = dict(s.binary)
    neg = unary.get("neg")

    if "imp" in binary and neg is not None:
        imp = binary["imp"]
        if "one" in constants:
            constants.setdefault("zero", neg[constants["one"]])
        binary.setdefault(
            "oplus", tuple(tuple(imp[neg[x]][y] for y in rng) for x in rng)
        )
        binary.setdefault(
            "odot", tuple(tuple(neg[imp[x][neg[y]]] for y in rng) for x in rng)
        )
        binary.setdefault(
            "join", tuple(tuple(imp[imp[x][y]][y] for y in rng) for x in rng)
        )
        binary.setdefault(
            "meet",
            tuple(
                tuple(neg[imp[imp[neg[x]][neg[y]]][neg[y]]] for y in rng) for x in rng
            ),
        )
    elif "oplus" in binary and neg is not None:
        oplus = binary["oplus"]
        if "zero" in constants:
            constants.setdefault("one", neg[constants["zero"]])
        binary.setdefault(
            "imp", tuple(tuple(oplus[neg[x]][y] for y in rng) for x in rng)
        )
        binary.setdefault(
            "odot", tuple(tuple(neg[oplus[neg[x]][neg[y]]] for y in rng) for x in rng)
        )
        binary.setdefault(
            "join", tuple(tuple(oplus[neg[oplus[neg[x]][y]]][y] for y in rng) for x in rng)
        )
        binary.setdefault(
            "meet",
            tuple(
                tuple(neg[oplus[neg[oplus[x][neg[y]]]][neg[y]]] for y in rng)
                for x in rng
            ),
        )

    if "one" in constants and neg is not None:
        constants.setdefault("zero", neg[constants["one"]])
    if "zero" in constants and neg is not None:
        constants.setdefault("one", neg[constants["zero"]])

    bneg = unary.get("bneg")
    if bneg is not None and neg is not None:
        unary.setdefault("box", tuple(bneg[neg[x]] for x in rng))
        unary.setdefault("dia", tuple(neg[bneg[x]] for x in rng))
        unary.setdefault("flat", tuple(neg[bneg[neg[x]]] for x in rng))

    return FiniteStructure(s.size, constants, unary, binary)


# -- the term language ---------------------------------------------------------

_TOKEN = re.compile(r"\s*([a-z_]+|\(|\)|,)")


def parse_term(src: str) -> Term:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ValueError(f"cannot tokenize {src[pos:]!r} in {src!r}")
        tokens.append(m.group(1))
        pos = m.end()
    out, rest = _parse_term(tokens)
    if rest:
        raise ValueError(f"trailing tokens {rest!r} in {src!r}")
    return out


def _parse_term(tokens: list[str]) -> tuple[Term, list[str]]:
    if not tokens:
        raise ValueError("unexpected end of term")
    head, *rest = tokens
    if head in VARIABLES:
        return ("var", head), rest
    if head in CONSTANT_NAMES:
        return ("const", head), rest
    if head not in OP_KINDS:
        raise ValueError(f"unknown symbol {head!r}")
    if not rest or rest[0] != "(":
        raise ValueError(f"operation {head!r} needs arguments")
    rest = rest[1:]
    args = []
    while True:
        arg, rest = _parse_term(rest)
        args.append(arg)
        if not rest:
            raise ValueError("unbalanced parentheses")
        sep, rest = rest[0], rest[1:]
        if sep == ")":
            break
        if sep != ",":
            raise ValueError(f"expected ',' or ')', got {sep!r}")
    want = 1 if OP_KINDS[head] == "unary" else 2
    if len(args) != want:
        raise ValueError(f"{head} takes {want} arguments, got {len(args)}")
    return (head, *args), rest


def term_variables(term: Term) -> tuple[str, ...]:
    if term[0] == "var":
        return (term[1],)
    if term[0] == "const":
        return ()
    seen: list[str] = []
    for sub in term[1:]:
        for v in term_variables(sub):
            if v not in seen:
                seen.append(v)
    return tuple(seen)


def eval_term(term: Term, s: FiniteStructure, env: dict[str, int]) -> int:
    head = term[0]
    if head == "var":
        return env[term[1]]
    if head == "const":
        try:
            return s.constants[term[1]]
        except KeyError:
            raise ValueError(f"structure lacks the constant {term[1]!r}")
    kind = OP_KINDS[head]
    if kind == "unary":
        table = s.unary.get(head)
        if table is None:
            raise ValueError(f"structure lacks the operation {head!r}")
        return table[eval_term(term[1], s, env)]
    table2 = s.binary.get(head)
    if table2 is None:
        raise ValueError(f"structure lacks the operation {head!r}")
    return table2[eval_term(term[1], s, env)][eval_term(term[2], s, env)]


@dataclass(frozen=True)
class Axiom:
    """An equation or inequality between two terms, quantified over the
    carrier; `lhs <= rhs` is read as meet(lhs, rhs) = lhs."""

    name: str
    lhs: str
    rhs: str
    relation: str = "="

    def terms(self) -> tuple[Term, Term]:
        return parse_term(self.lhs), parse_term(self.rhs)

    def __str__(self) -> str:
        return f"{self.name}: {self.lhs} {self.relation} {self.rhs}"


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    counterexample: dict[str, int] | None = None
    detail: str = ""


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[AxiomResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> tuple[AxiomResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def _check_axiom(axiom: Axiom, s: FiniteStructure) -> AxiomResult:
    lhs, rhs = axiom.terms()
    variables = tuple(dict.fromkeys(term_variables(lhs) + term_variables(rhs)))
    meet = s.binary.get("meet")
    if axiom.relation == "<=" and meet is None:
        raise ValueError("inequality axioms need a meet operation")
    for assignment in product(s.elements(), repeat=len(variables)):
        env = dict(zip(variables, assignment))
        a, b = eval_term(lhs, s, env), eval_term(rhs, s, env)
        ok = a == b if axiom.relation == "=" else meet[a][b] == a
        if not ok:
            return AxiomResult(
                axiom.name, False, dict(env),
                f"{axiom.lhs} = {a} but {axiom.rhs} = {b}",
            )
    return AxiomResult(axiom.name, True)


def check_axioms(s: FiniteStructure, axioms: str | tuple[Axiom, ...]) -> AxiomReport:
    """Exhaustively check an axiom set (by name or as a tuple) against a
    structure, deriving missing operations first."""
    if isinstance(axioms, str):
        try:
            axioms = AXIOM_SETS[axioms.lower()]
        except KeyError:
            raise ValueError(
                f"unknown axiom set {axioms!r}; known: {', '.join(AXIOM_SETS)}"
            )
    enriched = with_derived_ops(s)
    return AxiomReport(tuple(_check_axiom(a, enriched) for a in axioms))


def _ax(name: str, lhs: str, rhs: str, relation: str = "=") -> Axiom:
    return Axiom(name, lhs, rhs, relation)


WAJSBERG_AXIOMS = (
    _ax("W1", "imp(one,x)", "x"),
    _ax("W2", "imp(imp(x,y),imp(imp(y,z),imp(x,z)))", "one"),
    _ax("W3", "imp(imp(x,y),y)", "imp(imp(y,x),x)"),
    _ax("W4", "imp(imp(neg(x),neg(y)),imp(y,x))", "one"),
)

BZW_AXIOMS = (
    _ax("BZW1", "imp(one,x)", "x"),
    _ax("BZW2", "imp(imp(x,y),imp(imp(y,z),imp(x,z)))", "one"),
    _ax("BZW3", "imp(imp(x,y),y)", "imp(imp(y,x),x)"),
    _ax("BZW4", "imp(imp(neg(x),neg(y)),imp(y,x))", "one"),
    _ax("BZW5", "imp(neg(bneg(x)),bneg(bneg(x)))", "one"),
    _ax("BZW6", "imp(imp(neg(x),bneg(bneg(x))),bneg(bneg(x)))", "one"),
    _ax(
        "BZW7",
        "neg(bneg(imp(imp(x,y),y)))",
        "imp(imp(neg(bneg(x)),bneg(bneg(y))),bneg(bneg(y)))",
    ),
)

BZW7_PRIME = _ax(
    "BZW7'",
    "bneg(neg(imp(imp(neg(x),neg(y)),neg(y))))",
    "imp(imp(neg(bneg(bneg(x))),neg(bneg(bneg(y)))),neg(bneg(bneg(y))))",
)

BZW_DM_AXIOMS = BZW_AXIOMS[:6] + (BZW7_PRIME,)

BZMV_AXIOMS = (
    _ax("BZMV1", "oplus(oplus(x,y),z)", "oplus(oplus(y,z),x)"),
    _ax("BZMV2", "oplus(x,zero)", "x"),
    _ax("BZMV3", "neg(neg(x))", "x"),
    _ax("BZMV4", "oplus(neg(oplus(neg(x),y)),y)", "oplus(neg(oplus(x,neg(y))),x)"),
    _ax("BZMV5", "oplus(bneg(x),bneg(bneg(x)))", "neg(zero)"),
    _ax("BZMV6", "oplus(x,bneg(bneg(x)))", "bneg(bneg(x))"),
    _ax(
        "BZMV7",
        "neg(bneg(oplus(neg(oplus(neg(x),y)),y)))",
        "oplus(neg(oplus(bneg(x),bneg(bneg(y)))),bneg(bneg(y)))",
    ),
)

MV_AXIOMS = (
    _ax("P1", "oplus(oplus(x,y),z)", "oplus(oplus(y,z),x)"),
    _ax("P2", "oplus(x,zero)", "x"),
    _ax("P3", "oplus(x,neg(zero))", "neg(zero)"),
    _ax("P4", "neg(neg(zero))", "zero"),
    _ax("P5", "oplus(neg(oplus(neg(x),y)),y)", "oplus(neg(oplus(x,neg(y))),x)"),
)

CHANG_AXIOMS = (
    _ax("C1", "oplus(x,y)", "oplus(y,x)"),
    _ax("C1'", "odot(x,y)", "odot(y,x)"),
    _ax("C2", "oplus(x,oplus(y,z))", "oplus(oplus(x,y),z)"),
    _ax("C2'", "odot(x,odot(y,z))", "odot(odot(x,y),z)"),
    _ax("C3", "oplus(x,neg(x))", "one"),
    _ax("C3'", "odot(x,neg(x))", "zero"),
    _ax("C4", "oplus(x,one)", "one"),
    _ax("C4'", "odot(x,zero)", "zero"),
    _ax("C5", "oplus(x,zero)", "x"),
    _ax("C5'", "odot(x,one)", "x"),
    _ax("C6", "neg(oplus(x,y))", "odot(neg(x),neg(y))"),
    _ax("C6'", "neg(odot(x,y))", "oplus(neg(x),neg(y))"),
    _ax("C7", "neg(neg(x))", "x"),
    _ax("C8", "neg(zero)", "one"),
    _ax("C9", "join(x,y)", "join(y,x)"),
    _ax("C9'", "meet(x,y)", "meet(y,x)"),
    _ax("C10", "join(x,join(y,z))", "join(join(x,y),z)"),
    _ax("C10'", "meet(x,meet(y,z))", "meet(meet(x,y),z)"),
    _ax("C11", "oplus(x,meet(y,z))", "meet(oplus(x,y),oplus(x,z))"),
    _ax("C11'", "odot(x,join(y,z))", "join(odot(x,y),odot(x,z))"),
)

KLEENE_AXIOMS = (
    _ax("K1", "neg(neg(x))", "x"),
    _ax("K2", "neg(join(x,y))", "meet(neg(x),neg(y))"),
    _ax("K3", "meet(x,neg(x))", "join(y,neg(y))", "<="),
)

BROUWER_AXIOMS = (
    _ax("B1", "meet(x,bneg(bneg(x)))", "x"),
    _ax("B2", "bneg(join(x,y))", "meet(bneg(x),bneg(y))"),
    _ax("B3", "meet(x,bneg(x))", "zero"),
)

INTERCONNECTION_AXIOMS = (_ax("in", "neg(bneg(x))", "bneg(bneg(x))"),)

ANTI_BROUWER_AXIOMS = (
    _ax("AB1", "flat(flat(x))", "x", "<="),
    _ax("AB2", "join(flat(x),flat(y))", "flat(meet(x,y))"),
    _ax("AB3", "join(x,flat(x))", "one"),
)

LATTICE_AXIOMS = (
    _ax("L1", "join(x,y)", "join(y,x)"),
    _ax("L2", "meet(x,y)", "meet(y,x)"),
    _ax("L3", "join(x,join(y,z))", "join(join(x,y),z)"),
    _ax("L4", "meet(x,meet(y,z))", "meet(meet(x,y),z)"),
    _ax("L5", "join(x,meet(x,y))", "x"),
    _ax("L6", "meet(x,join(x,y))", "x"),
    _ax("D1", "meet(x,join(y,z))", "join(meet(x,y),meet(x,z))"),
    _ax("D2", "join(x,meet(y,z))", "meet(join(x,y),join(x,z))"),
    _ax("BND0", "zero", "x", "<="),
    _ax("BND1", "x", "one", "<="),
)

MODAL_AXIOMS = (
    _ax("T-box", "box(x)", "x", "<="),
    _ax("T-dia", "x", "dia(x)", "<="),
    _ax("S4-box", "box(box(x))", "box(x)"),
    _ax("S4-dia", "dia(dia(x))", "dia(x)"),
    _ax("B", "x", "box(dia(x))", "<="),
    _ax("S5-dia", "dia(x)", "box(dia(x))"),
    _ax("S5-box", "box(x)", "dia(box(x))"),
    _ax("dia-def", "dia(x)", "neg(bneg(x))"),
    _ax("box-dia", "box(dia(x))", "bneg(bneg(x))"),
    _ax("bneg-box", "bneg(x)", "box(neg(x))"),
    _ax("bneg-dia", "bneg(x)", "neg(dia(x))"),
    _ax("flat-box", "flat(x)", "neg(box(x))"),
    _ax("flat-dia", "flat(x)", "dia(neg(x))"),
)

WEAK_CONSECUTIO = _ax("weak-consecutio", "imp(neg(x),box(dia(x)))", "box(dia(x))")
STRONG_CONSECUTIO = _ax("strong-consecutio", "imp(imp(neg(x),x),x)", "one")

AXIOM_SETS: dict[str, tuple[Axiom, ...]] = {
    "wajsberg": WAJSBERG_AXIOMS,
    "bzw": BZW_AXIOMS,
    "bzw_dm": BZW_DM_AXIOMS,
    "bzmv": BZMV_AXIOMS,
    "mv": MV_AXIOMS,
    "chang": CHANG_AXIOMS,
    "kleene": KLEENE_AXIOMS,
    "brouwer": BROUWER_AXIOMS,
    "interconnection": INTERCONNECTION_AXIOMS,
    "anti_brouwer": ANTI_BROUWER_AXIOMS,
    "lattice": LATTICE_AXIOMS,
    "modal": MODAL_AXIOMS,
}


# -- derived structure, modal theorems, sharpness, rough approximation ----------


def derived_lattice(s: FiniteStructure) -> FiniteStructure:
    """The distributive lattice with Kleene and Brouwer complements induced
    by a BZW structure; raises with a counterexample if any required law
    fails (which cannot happen when s passes the BZW axioms)."""
    enriched = with_derived_ops(s)
    checks = (
        LATTICE_AXIOMS
        + KLEENE_AXIOMS
        + BROUWER_AXIOMS
        + INTERCONNECTION_AXIOMS
    )
    report = AxiomReport(tuple(_check_axiom(a, enriched) for a in checks))
    if not report.passed:
        first = report.failures()[0]
        raise ValueError(f"not a BZ distributive lattice: {first.name} fails, {first.detail}")
    # the implication order must coincide with the lattice order
    imp, meet, one = enriched.binary["imp"], enriched.binary["meet"], enriched.constants["one"]
    for x in enriched.elements():
        for y in enriched.elements():
            if (imp[x][y] == one) != (meet[x][y] == x):
                raise ValueError(
                    f"implication order and lattice order disagree at ({x}, {y})"
                )
    return enriched


def modal_theorems(s: FiniteStructure) -> AxiomReport:
    """The T/S4/B/S5 principles plus the negation/modality identities."""
    enriched = with_derived_ops(s)
    return AxiomReport(tuple(_check_axiom(a, enriched) for a in MODAL_AXIOMS))


@dataclass(frozen=True)
class SharpSets:
    """The four crispness substructures of a BZW algebra."""

    m_sharp: tuple[int, ...]  # dia(e) = e
    k_sharp: tuple[int, ...]  # e meet neg(e) = 0
    b_sharp: tuple[int, ...]  # bneg(bneg(e)) = e
    arrow_sharp: tuple[int, ...]  # imp(neg(e), e) = e


def sharp_sets(s: FiniteStructure) -> SharpSets:
    """Compute the four sharp-element sets and verify their structure:
    B-sharp = M-sharp, a subset of arrow-sharp = K-sharp, with the
    K-sharp elements closed under oplus/odot/neg/bneg, on which oplus
    and odot collapse to join and meet."""
    t = with_derived_ops(s)
    zero, one = t.constants["zero"], t.constants["one"]
    dia, box, bneg, neg, flat = (
        t.unary["dia"], t.unary["box"], t.unary["bneg"], t.unary["neg"], t.unary["flat"],
    )
    imp, meet, join = t.binary["imp"], t.binary["meet"], t.binary["join"]
    oplus, odot = t.binary["oplus"], t.binary["odot"]

    m_sharp = tuple(e for e in t.elements() if dia[e] == e)
    if m_sharp != tuple(e for e in t.elements() if box[e] == e):
        raise ValueError("dia- and box-fixed elements disagree")
    k_sharp = tuple(e for e in t.elements() if meet[e][neg[e]] == zero)
    if k_sharp != tuple(e for e in t.elements() if join[e][neg[e]] == one):
        raise ValueError("noncontradiction and excluded-middle elements disagree")
    b_sharp = tuple(e for e in t.elements() if bneg[bneg[e]] == e)
    if b_sharp != tuple(e for e in t.elements() if flat[flat[e]] == e):
        raise ValueError("bneg- and flat-stable elements disagree")
    arrow_sharp = tuple(e for e in t.elements() if imp[neg[e]][e] == e)

    if b_sharp != m_sharp:
        raise ValueError("B-sharp and M-sharp sets differ")
    if arrow_sharp != k_sharp:
        raise ValueError("arrow-sharp and K-sharp sets differ")
    if not set(m_sharp) <= set(k_sharp):
        raise ValueError("M-sharp is not contained in K-sharp")

    ks = set(k_sharp)
    for e in k_sharp:
        if neg[e] not in ks or bneg[e] not in ks:
            raise ValueError(f"K-sharp set is not closed under the negations at {e}")
        for f in k_sharp:
            if oplus[e][f] not in ks or odot[e][f] not in ks:
                raise ValueError(f"K-sharp set is not closed under oplus/odot at ({e},{f})")
            if oplus[e][f] != join[e][f] or odot[e][f] != meet[e][f]:
                raise ValueError(
                    f"oplus/odot do not collapse to join/meet on K-sharp at ({e},{f})"
                )
    return SharpSets(m_sharp, k_sharp, b_sharp, arrow_sharp)


def rough_approximation(s: FiniteStructure, x: int) -> tuple[int, int]:
    """The pair (box x, dia x): the best inner and outer approximations of
    x by B-sharp elements.  The defining properties are re-verified on the
    spot; a violation marks a structure that is not a BZ lattice."""
    t = with_derived_ops(s)
    if x not in t.elements():
        raise ValueError(f"{x} is not a carrier element")
    box, dia, bneg, meet = t.unary["box"], t.unary["dia"], t.unary["bneg"], t.binary["meet"]
    lo, hi = box[x], dia[x]
    b_sharp = [e for e in t.elements() if bneg[bneg[e]] == e]

    def leq(a: int, b: int) -> bool:
        return meet[a][b] == a

    if lo not in b_sharp or hi not in b_sharp:
        raise ValueError("approximations are not B-sharp")
    if not (leq(lo, x) and leq(x, hi)):
        raise ValueError("box(x) <= x <= dia(x) fails")
    for e in b_sharp:
        if leq(e, x) and not leq(e, lo):
            raise ValueError(f"box(x) is not the best inner approximation ({e})")
        if leq(x, e) and not leq(hi, e):
            raise ValueError(f"dia(x) is not the best outer approximation ({e})")
    if ((lo, hi) == (x, x)) != (x in b_sharp):
        raise ValueError("r(e) = <e,e> must characterize B-sharp elements")
    return lo, hi


# -- translations ----------------------------------------------------------------

TRANSLATIONS = ("bzw_to_bzmv", "bzmv_to_bzw", "chang_to_wajsberg", "wajsberg_to_chang")


def translate(s: FiniteStructure, direction: str) -> FiniteStructure:
    """Move between the implication- and sum-based presentations; the
    source must pass its own axiom set, and translating back returns the
    original structure table for table."""
    rng = range(s.size)
    if direction == "bzw_to_bzmv":
        _require_pass(s, "bzw")
        neg, imp = s.unary["neg"], s.binary["imp"]
        return FiniteStructure(
            s.size,
            {"zero": neg[s.constants["one"]]},
            {"neg": neg, "bneg": s.unary["bneg"]},
            {"oplus": tuple(tuple(imp[neg[x]][y] for y in rng) for x in rng)},
        )
    if direction == "bzmv_to_bzw":
        _require_pass(s, "bzmv")
        neg, oplus = s.unary["neg"], s.binary["oplus"]
        return FiniteStructure(
            s.size,
            {"one": neg[s.constants["zero"]]},
            {"neg": neg, "bneg": s.unary["bneg"]},
            {"imp": tuple(tuple(oplus[neg[x]][y] for y in rng) for x in rng)},
        )
    if direction == "chang_to_wajsberg":
        _require_pass(s, "mv")
        neg, oplus = s.unary["neg"], s.binary["oplus"]
        return FiniteStructure(
            s.size,
            {"one": neg[s.constants["zero"]]},
            {"neg": neg},
            {"imp": tuple(tuple(oplus[neg[x]][y] for y in rng) for x in rng)},
        )
    if direction == "wajsberg_to_chang":
        _require_pass(s, "wajsberg")
        neg, imp = s.unary["neg"], s.binary["imp"]
        return FiniteStructure(
            s.size,
            {"zero": neg[s.constants["one"]]},
            {"neg": neg},
            {"oplus": tuple(tuple(imp[neg[x]][y] for y in rng) for x in rng)},
        )
    raise ValueError(f"unknown direction {direction!r}; known: {', '.join(TRANSLATIONS)}")


def _require_pass(s: FiniteStructure, axiom_set: str) -> None:
    report = check_axioms(s, axiom_set)
    if not report.passed:
        first = report.failures()[0]
        raise ValueError(
            f"source fails {axiom_set} axiom {first.name} at {first.counterexample}"
        )


# -- mvalg text format ------------------------------------------------------------


def format_structure(s: FiniteStructure) -> str:
    lines = ["mvalg 1", f"size={s.size}"]
    for name in sorted(s.constants):
        lines.append(f"const {name} {s.constants[name]}")
    for name in sorted(s.unary):
        lines.append(f"unary {name} " + " ".join(map(str, s.unary[name])))
    for name in sorted(s.binary):
        flat = [str(v) for row in s.binary[name] for v in row]
        lines.append(f"binary {name} " + " ".join(flat))
    return "\n".join(lines) + "\n"


def parse_structure(text: str) -> FiniteStructure:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0] != "mvalg 1":
        raise ValueError("missing 'mvalg 1' header")
    if len(lines) < 2 or not lines[1].startswith("size="):
        raise ValueError("missing size line")
    try:
        size = int(lines[1][5:])
    except ValueError:
        raise ValueError(f"bad size line {lines[1]!r}")
    constants: dict[str, int] = {}
    unary: dict[str, tuple[int, ...]] = {}
    binary: dict[str, tuple[tuple[int, ...], ...]] = {}
    for line in lines[2:]:
        parts = line.split()
        kind, name, entries = parts[0], parts[1], parts[2:]
        try:
            nums = [int(v) for v in entries]
        except ValueError:
            raise ValueError(f"non-integer table entry in {line!r}")
        if kind == "const" and len(nums) == 1:
            constants[name] = nums[0]
        elif kind == "unary" and len(nums) == size:
            unary[name] = tuple(nums)
        elif kind == "binary" and len(nums) == size * size:
            binary[name] = tuple(
                tuple(nums[i * size : (i + 1) * size]) for i in range(size)
            )
        else:
            raise ValueError(f"malformed table line {line!r}")
    return FiniteStructure(size, constants, unary, binary)
