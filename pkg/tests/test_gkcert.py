"""Witness certificates: loading, validation, verification, reduction mod p.

Negative cases are built by corrupting the shipped documents one field at a
time; each must fail (or be rejected) with a locatable message."""
import json

import pytest

from ncbirat.gkcert import (FAIL, PASS, BadPrime, CertificateError,
                            bad_primes, certificate_from_dict, certificate_to_dict,
                            check_prime, dump_certificate, load_certificate, modular_sweep,
                            reduce_mod_p, shipped_certificate, shipped_path,
                            verify_certificate)
from ncbirat.ncalg import casimir
from ncbirat.orefrac import LeftFraction, frac_eq
from ncbirat.polycore import GF


def doc(name):
    return json.loads(shipped_path(name).read_text())


@pytest.mark.parametrize("name", ["sl2", "a1_z2", "toy_poly1"])
def test_shipped_certificates_pass(name):
    rep = verify_certificate(shipped_certificate(name))
    assert rep.verdict == "pass", rep.to_text()
    assert rep.first_failure() is None


def test_sl2_center_is_the_casimir():
    cert = shipped_certificate("sl2")
    assert cert.centers[0] == casimir(cert.family)


def test_recovery_reproduces_generators_exactly():
    cert = shipped_certificate("sl2")
    fam = cert.family
    e, h, f = fam.gens()
    w1 = cert.witnesses[0]
    w2 = cert.witnesses[1]
    z = LeftFraction.of(cert.centers[0])
    two = LeftFraction.of(fam.scalar(2))
    # f = (2 w1)^-1 (z - 2 w1^2 w2^2), read off the shipped recovery row
    lhs = LeftFraction.of(e.scale(2)) * LeftFraction.of(f)
    rhs = z - two * w1 * w1 * w2 * w2
    assert frac_eq(lhs, rhs)
    assert frac_eq(two * w1 * w2, LeftFraction.of(h))


def test_round_trip_through_dict():
    for name in ["sl2", "a1_z2"]:
        cert = shipped_certificate(name)
        again = certificate_from_dict(certificate_to_dict(cert))
        assert dump_certificate(again) == dump_certificate(cert)


def test_report_is_deterministic():
    a = verify_certificate(shipped_certificate("sl2")).to_json()
    b = verify_certificate(shipped_certificate("sl2")).to_json()
    assert a == b
    parsed = json.loads(a)
    assert parsed["verdict"] == "pass"


# -- corrupted certificates ---------------------------------------------------------

def test_wrong_recovery_sign_fails():
    d = doc("sl2")
    d["recovery"][2]["p"] = "z1 + 2*w1^2*w2^2"
    rep = verify_certificate(certificate_from_dict(d))
    assert rep.verdict == "fail"
    assert "generator 3" in rep.first_failure()


def test_wrong_witness_fails_dagger_and_skips_ddagger():
    d = doc("sl2")
    d["witnesses"][1] = "inv(2*e.1) * (-h.1)"
    rep = verify_certificate(certificate_from_dict(d))
    assert rep.verdict == "fail"
    assert "[w2, w1] = -1, expected 1" in rep.to_text()
    assert rep.checks["dagger"].status == FAIL
    assert rep.checks["ddagger"].status not in (PASS, FAIL)


def test_noncentral_center_fails():
    d = doc("sl2")
    d["centers"][0] = "e.1*f.1"
    rep = verify_certificate(certificate_from_dict(d))
    assert rep.verdict == "fail"
    assert "[z1, " in rep.to_text()


def test_invariant_witness_must_be_invariant():
    d = doc("a1_z2")
    d["witnesses"][0] = "inv(1) * (x1)"
    with pytest.raises(CertificateError):
        certificate_from_dict(d)


@pytest.mark.parametrize("field", ["witnesses", "recovery", "family", "m", "bounds"])
def test_missing_field_is_named(field):
    d = doc("sl2")
    del d[field]
    with pytest.raises(CertificateError) as exc:
        certificate_from_dict(d)
    assert field in str(exc.value)


def test_tdeg_mismatch_rejected():
    d = doc("sl2")
    d["expected_tdeg"] = 4
    with pytest.raises(CertificateError):
        certificate_from_dict(d)


def test_schema_version_checked():
    d = doc("sl2")
    d["schema_version"] = "gkcert/0"
    with pytest.raises(CertificateError):
        certificate_from_dict(d)


def test_sign_convention_checked():
    d = doc("sl2")
    d["sign_convention"] = "something-else"
    with pytest.raises(CertificateError):
        certificate_from_dict(d)


def test_bad_json_reports_line(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{\n  "m": 1,\n  oops\n}')
    with pytest.raises(CertificateError) as exc:
        load_certificate(p)
    assert "line 3" in str(exc.value)


def test_tiny_ceiling_is_inconclusive_not_fail():
    rep = verify_certificate(shipped_certificate("sl2"), ceiling=0)
    assert rep.verdict in ("inconclusive", "pass")
    assert rep.verdict != "fail"


def test_dagger_without_ddagger_is_not_a_pass():
    d = doc("sl2")
    d["recovery"] = d["recovery"][:1] + [{"q": "1", "p": "w1"}] * 2
    rep = verify_certificate(certificate_from_dict(d))
    assert rep.verdict == "fail"


# -- modular reduction --------------------------------------------------------------

@pytest.mark.parametrize("name", ["sl2", "a1_z2"])
def test_two_is_a_bad_prime(name):
    with pytest.raises(BadPrime):
        reduce_mod_p(shipped_certificate(name), 2)
    assert 2 in bad_primes(shipped_certificate(name), 20)


@pytest.mark.parametrize("name", ["sl2", "a1_z2"])
@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_reduction_verifies(name, p):
    res = check_prime(shipped_certificate(name), p)
    assert res.status == "pass", res.detail


def test_reduced_certificate_lives_over_gf_p():
    red = reduce_mod_p(shipped_certificate("sl2"), 7)
    assert red.family.domain == GF(7)
    assert verify_certificate(red, growth=False).verdict == "pass"


def test_composite_modulus_rejected():
    with pytest.raises(ValueError):
        reduce_mod_p(shipped_certificate("sl2"), 9)


def test_sweep_reports_each_prime():
    out = modular_sweep(shipped_certificate("a1_z2"), [2, 3, 5])
    assert [r.p for r in out] == [2, 3, 5]
    assert [r.status for r in out] == ["bad", "pass", "pass"]
