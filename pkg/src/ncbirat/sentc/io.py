"""JSON serialization of existential sentences."""
from __future__ import annotations

import json
from typing import Any, Dict, List

from ..polycore import ParseError
from .emit import SCHEMA_VERSION, ExistentialSentence, Variable
from .profile import ProfileError, profile_from_dict
from .sparse import format_spoly, is_integral, parse_spoly


class SentenceFormatError(ValueError):
    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


def sentence_to_dict(sent: ExistentialSentence) -> Dict[str, Any]:
    names = sent.names()
    bounds = sent.profile.to_dict()
    bounds["N"] = sent.N
    return {
        "schema_version": SCHEMA_VERSION,
        "family": sent.family,
        "bounds": bounds,
        "variables": [{"name": v.name, "role": v.role, "index": list(v.index)}
                      for v in sent.variables],
        "equations": [format_spoly(e, names) for e in sent.equations],
        "inequations": [format_spoly(g, names) for g in sent.inequations],
    }


def serialize(sent: ExistentialSentence) -> str:
    return json.dumps(sentence_to_dict(sent), indent=1, ensure_ascii=False) + "\n"


def _require(doc, key, typ):
    if key not in doc:
        raise SentenceFormatError(f"missing required field '{key}'", key)
    if not isinstance(doc[key], typ):
        raise SentenceFormatError(f"field '{key}' has the wrong type", key)
    return doc[key]


def sentence_from_dict(doc: Dict[str, Any]) -> ExistentialSentence:
    if not isinstance(doc, dict):
        raise SentenceFormatError("sentence must be a JSON object")
    version = _require(doc, "schema_version", str)
    if version != SCHEMA_VERSION:
        raise SentenceFormatError(f"unsupported schema version {version!r}", "schema_version")
    family = _require(doc, "family", str)
    bounds = dict(_require(doc, "bounds", dict))
    declared_n = bounds.pop("N", None)
    try:
        profile = profile_from_dict(bounds)
    except (ProfileError, TypeError) as exc:
        raise SentenceFormatError(str(exc), "bounds") from exc
    variables: List[Variable] = []
    for k, v in enumerate(_require(doc, "variables", list)):
        where = f"variables[{k}]"
        if not isinstance(v, dict):
            raise SentenceFormatError("expected an object", where)
        for key in ("name", "role", "index"):
            if key not in v:
                raise SentenceFormatError(f"missing required field '{key}'", f"{where}.{key}")
        variables.append(Variable(v["name"], v["role"], tuple(v["index"])))
    if declared_n is not None and declared_n != len(variables):
        raise SentenceFormatError(f"bounds.N = {declared_n} but {len(variables)} variables",
                                  "bounds.N")
    index = {v.name: k for k, v in enumerate(variables)}
    if len(index) != len(variables):
        raise SentenceFormatError("duplicate variable names", "variables")

    def polys(key):
        out = []
        for k, text in enumerate(_require(doc, key, list)):
            where = f"{key}[{k}]"
            if not isinstance(text, str):
                raise SentenceFormatError("expected a polynomial string", where)
            try:
                p = parse_spoly(text, index)
            except ParseError as exc:
                raise SentenceFormatError(str(exc), where) from exc
            if not is_integral(p):
                raise SentenceFormatError("coefficients must be integers", where)
            out.append(p)
        return out

    return ExistentialSentence(family, profile, variables, polys("equations"),
                               polys("inequations"))


def parse_sentence(text: str) -> ExistentialSentence:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SentenceFormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                                  f"{exc.msg}") from exc
    return sentence_from_dict(doc)
