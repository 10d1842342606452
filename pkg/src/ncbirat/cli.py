"""Batch command-line front end.

Exit codes: 0 pass / SAT, 1 fail / UNSAT, 2 inconclusive, 3 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .gkcert import (SHIPPED, CertificateError, bad_primes, check_prime,
                     load_certificate, verify_certificate)
from .gkcert.shipped import shipped_path
from .ncalg import family_from_string
from .polycore import is_prime
from .rootsys import RootSystemError, build_root_system, info_table
from .sentc import (SAT, UNSAT, CapExceeded, ProfileError, SentenceFormatError,
                    decide_sentence, emit_sentence, load_profile, parse_sentence, serialize)

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3
CEILING_ENV = "NCBIRAT_BOUND_CEILING"


@dataclass
class CommandResult:
    exit_code: int
    text: str
    report_path: Optional[str] = None


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_help()}\n{self.prog}: error: {message}")


def _verdict_code(verdict: str) -> int:
    return {"pass": EXIT_PASS, "fail": EXIT_FAIL}.get(verdict, EXIT_INCONCLUSIVE)


def _resolve(name: str, what: str) -> Path:
    """A path on disk, else a packaged data file or shipped certificate key."""
    p = Path(name)
    if p.exists():
        return p
    if name in SHIPPED:
        return shipped_path(name)
    packaged = shipped_path("sl2").parent / name
    if "/" not in name and packaged.exists():
        return packaged
    raise UsageError(f"{what} file not found: {name}")


def _ceiling(arg: Optional[int]) -> Optional[int]:
    if arg is not None:
        return arg
    env = os.environ.get(CEILING_ENV)
    if env:
        if not env.isdigit():
            raise UsageError(f"{CEILING_ENV} must be a nonnegative integer, got {env!r}")
        return int(env)
    return None


def _write(path: Optional[str], text: str):
    if path:
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {path}: {exc.strerror}") from exc


def _prime_range(text: str) -> List[int]:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise UsageError(f"empty prime range {text!r}")
        return [p for p in range(lo, hi + 1) if is_prime(p)]
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--primes expects a..b or a comma list, got {text!r}") from None
    bad = [v for v in vals if not is_prime(v)]
    if bad or not vals:
        raise UsageError(f"not prime: {bad}" if bad else "no primes given")
    return vals


def cmd_verify(args) -> CommandResult:
    path = _resolve(args.certificate, "certificate")
    cert = load_certificate(path)
    rep = verify_certificate(cert, _ceiling(args.bound_ceiling), growth=not args.no_growth)
    _write(args.report, rep.to_json())
    text = f"certificate: {path.name}\n" + rep.to_text()
    return CommandResult(_verdict_code(rep.verdict), text, args.report)


def cmd_reduce(args) -> CommandResult:
    path = _resolve(args.certificate, "certificate")
    cert = load_certificate(path)
    primes = _prime_range(args.primes)
    ceiling = _ceiling(args.bound_ceiling)
    excluded = bad_primes(cert, max(primes))
    lines = [f"certificate: {path.name}",
             f"bad primes up to {max(primes)}: {', '.join(map(str, excluded)) or 'none'}",
             f"{'p':>5}  result"]
    rows = []
    code = EXIT_PASS
    for p in primes:
        res = check_prime(cert, p, ceiling)
        if res.status == "bad":
            lines.append(f"{p:>5}  excluded (BadPrime: {res.detail})")
        else:
            lines.append(f"{p:>5}  {res.status}" + (f"  {res.detail}" if res.detail else ""))
            if res.status == "fail":
                code = EXIT_FAIL
            elif res.status != "pass" and code == EXIT_PASS:
                code = EXIT_INCONCLUSIVE
        rows.append({"p": p, "status": res.status, "detail": res.detail})
    verdict = {EXIT_PASS: "pass", EXIT_FAIL: "fail"}.get(code, "inconclusive")
    lines.append(f"verdict: {verdict}")
    if args.report:
        _write(args.report, json.dumps({"certificate": path.name, "bad_primes": excluded,
                                        "primes": rows, "verdict": verdict},
                                       indent=2, sort_keys=True) + "\n")
    return CommandResult(code, "\n".join(lines) + "\n", args.report)


def cmd_emit(args) -> CommandResult:
    try:
        fam = family_from_string(args.family)
    except (ValueError, KeyError, RootSystemError) as exc:
        raise UsageError(f"bad family {args.family!r}: {exc}") from exc
    profile = load_profile(_resolve(args.bounds, "bound profile"))
    sent = emit_sentence(fam, profile)
    text = serialize(sent)
    _write(args.output, text)
    summary = (f"family: {sent.family}\nunknowns: {sent.N}\nequations: {len(sent.equations)}\n"
               f"inequations: {len(sent.inequations)}\n")
    if not args.output:
        summary = text
    return CommandResult(EXIT_PASS, summary)


def cmd_decide(args) -> CommandResult:
    path = _resolve(args.sentence, "sentence")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read sentence file {args.sentence}: {exc.strerror}") from exc
    sent = parse_sentence(text)
    char = args.char
    if char and not is_prime(char):
        raise UsageError(f"--char must be 0 or a prime, got {char}")
    verdict = decide_sentence(sent, char)
    code = {SAT: EXIT_PASS, UNSAT: EXIT_FAIL}.get(verdict, EXIT_INCONCLUSIVE)
    out = (f"sentence: {Path(args.sentence).name}\nfamily: {sent.family}\n"
           f"characteristic: {char}\nunknowns: {sent.N}\nverdict: {verdict}\n")
    return CommandResult(code, out)


def cmd_rootsys(args) -> CommandResult:
    try:
        rs = build_root_system(args.label)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc
    return CommandResult(EXIT_PASS, info_table(rs))


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ncbirat", description="Birational witness certificates for "
                 "filtered algebras: verification, modular reduction and sentences.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    v = sub.add_parser("verify", help="verify a witness certificate")
    v.add_argument("certificate")
    v.add_argument("--bound-ceiling", type=int, default=None,
                   help=f"Ore bound ceiling (default: certificate, or ${CEILING_ENV})")
    v.add_argument("--report", help="write the JSON report here")
    v.add_argument("--no-growth", action="store_true", help="skip the advisory growth check")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reduce-mod-p", help="reduce and re-verify modulo a range of primes")
    r.add_argument("certificate")
    r.add_argument("--primes", required=True, help="a..b or a comma-separated list")
    r.add_argument("--bound-ceiling", type=int, default=None)
    r.add_argument("--report")
    r.set_defaults(func=cmd_reduce)

    e = sub.add_parser("emit-sentence", help="emit the existential sentence for a family")
    e.add_argument("family", help="enveloping:A1, invariants:A1, weyl:2 or commutative:1")
    e.add_argument("--bounds", required=True, help="bound profile JSON")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_emit)

    d = sub.add_parser("decide", help="decide a sentence over an algebraically closed field")
    d.add_argument("sentence")
    d.add_argument("--char", type=int, default=0)
    d.set_defaults(func=cmd_decide)

    rs = sub.add_parser("rootsys", help="root system tables")
    rsub = rs.add_subparsers(dest="rs_command", parser_class=_Parser)
    info = rsub.add_parser("info")
    info.add_argument("label")
    info.set_defaults(func=cmd_rootsys)
    return ap


def run(argv: Sequence[str]) -> CommandResult:
    ap = build_parser()
    try:
        args = ap.parse_args(list(argv))
        if not hasattr(args, "func"):
            raise UsageError(ap.format_help())
        return args.func(args)
    except UsageError as exc:
        return CommandResult(EXIT_USAGE, f"{exc}\n")
    except (CertificateError, ProfileError, SentenceFormatError, CapExceeded) as exc:
        return CommandResult(EXIT_USAGE, f"error: {exc}\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if res.exit_code in (EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE) else sys.stderr
    stream.write(res.text)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
