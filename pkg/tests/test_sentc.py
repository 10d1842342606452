"""Existential sentences: emission, serialization, the certificate-to-point
map and deciding toy instances."""
import json
from dataclasses import replace
from fractions import Fraction

import pytest

from ncbirat.gkcert import shipped_certificate, shipped_path
from ncbirat.ncalg import commutative_family, enveloping_family, family_from_string
from ncbirat.polycore import GF, BadReduction
from ncbirat.sentc import (SAT, UNSAT, BoundProfile, BoundsMismatch,
                           CapExceeded, ExistentialSentence, ProfileError,
                           SentenceFormatError, Variable, catalogue_size, check_assignment,
                           decide_sentence, emit_sentence, load_profile, parse_sentence,
                           profile_from_certificate, profile_from_dict, sentence_to_dict,
                           serialize, witness_to_assignment)
from ncbirat.sentc.sparse import degree, evaluate, is_integral

DATA = shipped_path("sl2").parent


def packaged(name):
    return (DATA / name).read_text()


@pytest.fixture(scope="module")
def toy_poly1():
    return parse_sentence(packaged("toy-poly1.sentence.json"))


@pytest.fixture(scope="module")
def a1_z2_point():
    return witness_to_assignment(shipped_certificate("a1_z2"))


# -- emission -----------------------------------------------------------------------

PROFILES = [
    ("commutative:1", dict(m=0, l=1, d_witness=0, d_mult=0, d_den=0)),
    ("commutative:2", dict(m=1, l=0, d_witness=1, d_mult=1, d_den=1)),
    ("weyl:1", dict(m=1, l=0, M=2, tuple_cap=2)),
    ("enveloping:A1", dict(m=1, l=1)),
    ("invariants:A1", dict(m=1, l=0, d_witness=2, d_mult=2, d_den=2)),
]


@pytest.mark.parametrize("fam,kw", PROFILES)
def test_unknown_count_matches_catalogue(fam, kw):
    f = family_from_string(fam)
    P = BoundProfile(**kw)
    sent = emit_sentence(f, P)
    assert sent.N == catalogue_size(f, P)
    assert len(set(sent.names())) == sent.N


@pytest.mark.parametrize("fam,kw", PROFILES)
def test_equations_are_integral_of_degree_at_most_two(fam, kw):
    sent = emit_sentence(family_from_string(fam), BoundProfile(**kw))
    assert all(is_integral(e) for e in sent.equations + sent.inequations)
    assert max(degree(e) for e in sent.equations) <= 2
    assert sent.inequations


def test_emission_is_deterministic():
    f, P = family_from_string("enveloping:A1"), BoundProfile(1, 1)
    assert serialize(emit_sentence(f, P)) == serialize(emit_sentence(f, P))


def test_cap_is_enforced():
    with pytest.raises(CapExceeded):
        emit_sentence(enveloping_family("A1"), BoundProfile(1, 1, M=2, tuple_cap=2, cap=50))


def test_shipped_sentences_are_reproducible():
    for stem in ["toy-poly1", "toy-commutative"]:
        P = load_profile(DATA / f"{stem}.profile.json")
        fam = json.loads(packaged(f"{stem}.sentence.json"))["family"]
        assert serialize(emit_sentence(family_from_string(fam), P)) == packaged(f"{stem}.sentence.json")


# -- profiles -------------------------------------------------------------------------

def test_profile_validation():
    with pytest.raises(ProfileError):
        profile_from_dict({"m": 1, "l": 0, "bogus": 3})
    with pytest.raises(ProfileError):
        BoundProfile(m=-1, l=0)
    with pytest.raises(ProfileError):
        BoundProfile(m=1, l=0, M=0)
    assert BoundProfile(m=1, l=0).center_degree == 0


# -- serialization ---------------------------------------------------------------------

def test_round_trip(toy_poly1):
    again = parse_sentence(serialize(toy_poly1))
    assert again == toy_poly1
    assert serialize(again) == serialize(toy_poly1)


@pytest.mark.parametrize("field", ["equations", "variables", "bounds", "family", "inequations"])
def test_truncated_document_names_missing_field(field):
    doc = json.loads(packaged("toy-poly1.sentence.json"))
    del doc[field]
    with pytest.raises(SentenceFormatError) as exc:
        parse_sentence(json.dumps(doc))
    assert field in str(exc.value)


def test_fractional_coefficient_rejected():
    doc = json.loads(packaged("toy-poly1.sentence.json"))
    name = doc["variables"][0]["name"]
    doc["equations"].append(f"1/2*{name}")
    with pytest.raises(SentenceFormatError) as exc:
        parse_sentence(json.dumps(doc))
    assert "integer" in str(exc.value)


def test_declared_n_checked():
    doc = json.loads(packaged("toy-poly1.sentence.json"))
    doc["bounds"]["N"] += 1
    with pytest.raises(SentenceFormatError):
        parse_sentence(json.dumps(doc))


def test_bad_json_located():
    with pytest.raises(SentenceFormatError) as exc:
        parse_sentence('{"family": ,}')
    assert "line 1" in str(exc.value)


# -- certificate -> point --------------------------------------------------------------

@pytest.mark.parametrize("name", ["toy_poly1", "a1_z2", "sl2"])
def test_witness_assignment_satisfies_sentence(name):
    sent, values = witness_to_assignment(shipped_certificate(name))
    res = check_assignment(sent, values)
    assert res.ok, res.first_failure
    assert sent.N == catalogue_size(shipped_certificate(name).family, sent.profile)


def test_perturbed_assignment_fails(a1_z2_point):
    sent, values = a1_z2_point
    broken = 0
    nonzero = sorted(v for v, c in values.items() if c)
    for v in nonzero:
        bad = dict(values)
        bad[v] = values[v] + 1
        if not check_assignment(sent, bad).ok:
            broken += 1
    # every coordinate that carries data is pinned down by some equation
    assert broken == len(nonzero)


def test_assignment_transfers_to_good_characteristics(a1_z2_point):
    sent, values = a1_z2_point
    for p in [3, 5, 7, 11, 13]:
        F = GF(p)
        try:
            red = {v: F.convert(c) for v, c in values.items()}
        except BadReduction:
            continue
        assert check_assignment(sent, red, F.zero).ok, p


def test_assignment_monotone_in_bounds():
    cert = shipped_certificate("toy_poly1")
    P = profile_from_certificate(cert)
    for bigger in [replace(P, d_mult=P.d_mult + 1), replace(P, d_den=P.d_den + 1),
                   replace(P, center_degree=P.center_degree + 1), replace(P, d_center=2)]:
        sent, values = witness_to_assignment(cert, bigger)
        assert check_assignment(sent, values).ok


def test_profile_too_small_is_reported():
    cert = shipped_certificate("a1_z2")
    P = profile_from_certificate(cert)
    with pytest.raises(BoundsMismatch):
        witness_to_assignment(cert, replace(P, d_witness=1))


# -- deciding ------------------------------------------------------------------------------

def test_toy_decisions(toy_poly1):
    assert decide_sentence(toy_poly1) == SAT
    commut = parse_sentence(packaged("toy-commutative.sentence.json"))
    assert decide_sentence(commut) == UNSAT


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_toy_decisions_in_positive_characteristic(toy_poly1, p):
    assert decide_sentence(toy_poly1, p) == SAT
    commut = parse_sentence(packaged("toy-commutative.sentence.json"))
    assert decide_sentence(commut, p) == UNSAT


def test_decision_monotone_on_toy_polynomial_ring():
    fam = commutative_family(1)
    base = load_profile(DATA / "toy-poly1.profile.json")
    assert decide_sentence(emit_sentence(fam, base)) == SAT
    for bigger in [replace(base, d_den=1), replace(base, d_mult=1), replace(base, center_degree=2)]:
        assert decide_sentence(emit_sentence(fam, bigger)) == SAT


def _bare(equations, inequations, n=1):
    vars_ = [Variable(f"v{k}", "free", (k,)) for k in range(n)]
    return ExistentialSentence("commutative:1", BoundProfile(0, 1), vars_, equations, inequations)


def test_empty_equations_with_unit_inequation_is_sat():
    assert decide_sentence(_bare([], [{(): 1}])) == SAT


def test_contradiction_is_unsat():
    v = ((0, 1),)
    assert decide_sentence(_bare([{v: 1}], [{v: 1}])) == UNSAT
    assert decide_sentence(_bare([{(): 3}], [{(): 1}])) == UNSAT


def test_characteristic_matters():
    # 3 = 0 is consistent only in characteristic 3
    s = _bare([{(): 3}], [{(): 1}])
    assert decide_sentence(s, 3) == SAT
    assert decide_sentence(s, 5) == UNSAT


def test_evaluate_sparse():
    p = {((0, 2),): 1, ((0, 1), (1, 1)): -2, (): 5}
    assert evaluate(p, {0: Fraction(3), 1: Fraction(1, 2)}, 0) == 9 - 3 + 5
