"""Witness certificates: JSON schema, load-time validation and serialization."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..ncalg import (AlgebraElement, FamilyInstance, family_from_descriptor, filtration_piece,
                     is_invariant)
from ..orefrac import LeftFraction, format_fraction, parse_fraction
from ..polycore import QQ, Domain, ParseError, Poly, format_poly, parse_poly
from ..rootsys import SIGN_CONVENTION

SCHEMA_VERSION = "gkcert/1"
NO_SIGN_CONVENTION = "none"

REQUIRED_FIELDS = ("schema_version", "family", "sign_convention", "m", "l", "witnesses",
                   "centers", "generators", "recovery", "bounds", "expected_tdeg")


class CertificateError(ValueError):
    """A certificate document is malformed or internally inconsistent."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


def recovery_names(m: int, l: int) -> List[str]:
    """Variables of recovery polynomials: z1..zl then w1..w2m."""
    return [f"z{k + 1}" for k in range(l)] + [f"w{k + 1}" for k in range(2 * m)]


@dataclass
class WitnessCertificate:
    family: FamilyInstance
    sign_convention: str
    m: int
    l: int
    witnesses: List[LeftFraction]
    centers: List[AlgebraElement]
    generator_degree: int
    generators: List[AlgebraElement]
    recovery: List[Tuple[Poly, Poly]]  # (q, p)
    bounds: Tuple[int, int]
    expected_tdeg: int
    name: str = ""
    notes: str = ""

    @property
    def domain(self) -> Domain:
        return self.family.domain

    @property
    def variable_names(self) -> List[str]:
        return recovery_names(self.m, self.l)


def _need(doc: Mapping, key: str, typ, where: str = ""):
    if key not in doc:
        raise CertificateError(f"missing required field '{key}'", where or key)
    val = doc[key]
    if typ is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise CertificateError(f"field '{key}' must be an integer", where or key)
    if typ is not int and not isinstance(val, typ):
        raise CertificateError(f"field '{key}' has the wrong type", where or key)
    return val


def _expected_convention(fam: FamilyInstance) -> str:
    return SIGN_CONVENTION if fam.kind == "enveloping" else NO_SIGN_CONVENTION


def certificate_from_dict(doc: Mapping[str, Any], domain: Domain = QQ,
                          name: str = "") -> WitnessCertificate:
    if not isinstance(doc, Mapping):
        raise CertificateError("certificate must be a JSON object")
    for key in REQUIRED_FIELDS:
        if key not in doc:
            raise CertificateError(f"missing required field '{key}'", key)
    version = _need(doc, "schema_version", str)
    if version != SCHEMA_VERSION:
        raise CertificateError(f"unsupported schema version {version!r}", "schema_version")
    try:
        fam = family_from_descriptor(_need(doc, "family", Mapping), domain)
    except (KeyError, ValueError) as exc:
        raise CertificateError(str(exc), "family") from exc
    conv = _need(doc, "sign_convention", str)
    if conv != _expected_convention(fam):
        raise CertificateError(f"sign convention {conv!r} does not match "
                               f"{_expected_convention(fam)!r}", "sign_convention")
    m = _need(doc, "m", int)
    l = _need(doc, "l", int)
    if m < 0 or l < 0:
        raise CertificateError("m and l must be nonnegative", "m")
    tdeg = _need(doc, "expected_tdeg", int)
    if tdeg != 2 * m + l:
        raise CertificateError(f"expected_tdeg {tdeg} differs from 2m + l = {2 * m + l}",
                               "expected_tdeg")
    if tdeg != fam.transcendence_degree():
        raise CertificateError(f"expected_tdeg {tdeg} differs from the family's "
                               f"{fam.transcendence_degree()}", "expected_tdeg")

    def parse_el(text, where, centers=()):
        if not isinstance(text, str):
            raise CertificateError("expected an element literal", where)
        try:
            return fam.parse(text, centers)
        except (ParseError, KeyError) as exc:
            raise CertificateError(f"bad element literal: {exc}", where) from exc

    centers = [parse_el(t, f"centers[{k}]") for k, t in enumerate(_need(doc, "centers", list))]
    if len(centers) != l:
        raise CertificateError(f"{len(centers)} centers listed but l = {l}", "centers")

    witnesses = []
    raw_w = _need(doc, "witnesses", list)
    if len(raw_w) != 2 * m:
        raise CertificateError(f"{len(raw_w)} witnesses listed but 2m = {2 * m}", "witnesses")
    for k, t in enumerate(raw_w):
        where = f"witnesses[{k}]"
        if not isinstance(t, str):
            raise CertificateError("expected a fraction literal", where)
        try:
            w = parse_fraction(fam, t)
        except (ParseError, KeyError) as exc:
            raise CertificateError(f"bad fraction literal: {exc}", where) from exc
        except ZeroDivisionError as exc:
            raise CertificateError("zero denominator", where) from exc
        if fam.kind == "weylInvariants":
            for part, el in (("denominator", w.den), ("numerator", w.num)):
                if not is_invariant(el):
                    raise CertificateError(f"{part} {el} is not W-invariant", where)
        witnesses.append(w)

    gd = doc.get("generator_degree", fam.generator_degree)
    if isinstance(gd, bool) or not isinstance(gd, int) or gd < 1:
        raise CertificateError("generator_degree must be a positive integer", "generator_degree")
    piece = filtration_piece(fam, gd)
    gens = [parse_el(t, f"generators[{k}]") for k, t in enumerate(_need(doc, "generators", list))]
    want = piece.dimension - 1
    if len(gens) != want:
        raise CertificateError(f"{len(gens)} generators listed but the filtration piece of "
                               f"degree {gd} has {want} non-scalar basis elements", "generators")
    for k, g in enumerate(gens):
        if not piece.contains(g) or g.is_scalar():
            raise CertificateError(f"{g} is not a non-scalar element of the generator piece",
                                   f"generators[{k}]")

    names = recovery_names(m, l)
    recovery = []
    raw_r = _need(doc, "recovery", list)
    if len(raw_r) != len(gens):
        raise CertificateError(f"{len(raw_r)} recovery entries for {len(gens)} generators",
                               "recovery")
    for k, entry in enumerate(raw_r):
        where = f"recovery[{k}]"
        if not isinstance(entry, Mapping):
            raise CertificateError("expected an object with q and p", where)
        pair = []
        for key in ("q", "p"):
            text = _need(entry, key, str, f"{where}.{key}")
            try:
                pair.append(parse_poly(text, len(names), domain, names))
            except (ParseError, KeyError) as exc:
                raise CertificateError(f"bad polynomial: {exc}", f"{where}.{key}") from exc
        if not pair[0]:
            raise CertificateError("q must be nonzero", f"{where}.q")
        recovery.append((pair[0], pair[1]))

    bounds = _need(doc, "bounds", Mapping)
    initial = _need(bounds, "initial", int, "bounds.initial")
    ceiling = _need(bounds, "ceiling", int, "bounds.ceiling")
    if not 0 <= initial <= ceiling:
        raise CertificateError("need 0 <= initial <= ceiling", "bounds")

    return WitnessCertificate(fam, conv, m, l, witnesses, centers, gd, gens, recovery,
                              (initial, ceiling), tdeg, name=name or doc.get("name", ""),
                              notes=doc.get("notes", ""))


def load_certificate(path: Union[str, Path], domain: Domain = QQ) -> WitnessCertificate:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CertificateError(f"cannot read certificate file {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                               f"{exc.msg}", str(path)) from exc
    return certificate_from_dict(doc, domain, name=path.name)


def certificate_to_dict(cert: WitnessCertificate) -> Dict[str, Any]:
    names = cert.variable_names
    doc = {
        "schema_version": SCHEMA_VERSION,
        "family": cert.family.descriptor(),
        "sign_convention": cert.sign_convention,
        "m": cert.m,
        "l": cert.l,
        "witnesses": [format_fraction(w) for w in cert.witnesses],
        "centers": [str(c) for c in cert.centers],
        "generator_degree": cert.generator_degree,
        "generators": [str(g) for g in cert.generators],
        "recovery": [{"q": format_poly(q, names=names), "p": format_poly(p, names=names)}
                     for q, p in cert.recovery],
        "bounds": {"initial": cert.bounds[0], "ceiling": cert.bounds[1]},
        "expected_tdeg": cert.expected_tdeg,
    }
    if cert.name:
        doc["name"] = cert.name
    if cert.notes:
        doc["notes"] = cert.notes
    return doc


def dump_certificate(cert: WitnessCertificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2, ensure_ascii=False) + "\n"
