"""Command-line front end: ``qr <subcommand> [flags]``.

Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input,
3 resource budget exceeded (or a long run requested without --long).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import Optional

from sympy.ntheory import isprime

from . import cyccode, cycint, qrext
from .errors import DomainError, ResourceError

EXIT_OK, EXIT_FAIL, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3

# runs above these sizes need --long
LONG_CHEBOTAREV_ELL = 11
LONG_MESSAGES = 2**20


@dataclass
class RunConfig:
    command: str
    p: Optional[int] = None
    ell: Optional[int] = None
    budget: int = cyccode.DEFAULT_BUDGET
    fmt: str = "text"
    workers: int = 1
    long: bool = False
    seed: int = 0

    def validate(self) -> None:
        if self.p is not None and not isprime(self.p):
            raise DomainError(f"--p {self.p} is not prime")
        if self.ell is not None and (self.ell < 3 or not isprime(self.ell)):
            raise DomainError(f"--ell {self.ell} is not an odd prime")
        if self.budget < 1:
            raise DomainError("--budget must be at least 1")


class _Guard(Exception):
    """A long computation was requested without --long."""


def _checks_table(title: str, fields: dict, checks: list[dict]) -> str:
    lines = [title]
    for k, v in fields.items():
        lines.append(f"  {k:<14} {v}")
    if checks:
        width = max(len(c["name"]) for c in checks)
        lines.append("")
        for c in checks:
            verdict = "PASS" if c["pass"] else "FAIL"
            line = f"  {c['name']:<{width}}  {verdict}"
            if "witness" in c:
                line += f"  witness={json.dumps(c['witness'])}"
            lines.append(line)
    return "\n".join(lines)


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _verdict(checks: list[dict]) -> int:
    return EXIT_OK if all(c["pass"] for c in checks) else EXIT_FAIL


def _family_fields(fam: qrext.QrFamily) -> dict:
    return {
        "ell, p": f"{fam.ell}, {fam.p}",
        "case": f"{fam.case} (ell = {fam.ell % 4} mod 4)",
        "f": fam.f.to_json(),
        "g": fam.g.to_json(),
        "eta, eta'": f"{fam.eta}, {fam.eta_prime}",
        "gamma": fam.gamma,
    }


def cmd_family(cfg: RunConfig, args) -> int:
    fam = qrext.build_qr_family(cfg.p, cfg.ell)
    rep = qrext.family_report(fam)
    _emit(cfg, rep.to_json(), _checks_table("QR family", _family_fields(fam), rep.checks))
    return _verdict(rep.checks)


def cmd_gleason_prange(cfg: RunConfig, args) -> int:
    fam = qrext.build_qr_family(cfg.p, cfg.ell)
    rep = qrext.verify_gleason_prange(fam)
    _emit(cfg, rep.to_json(), _checks_table("Gleason-Prange invariance of A_inf under sigma", _family_fields(fam), rep.checks))
    return _verdict(rep.checks)


def cmd_epsilon(cfg: RunConfig, args) -> int:
    fam = qrext.build_qr_family(cfg.p, cfg.ell)
    rep = qrext.epsilon_falsification(fam)
    fields = _family_fields(fam)
    fields["status"] = rep.extra["status"]
    if "notice" in rep.extra:
        fields["notice"] = rep.extra["notice"]
    _emit(cfg, rep.to_json(), _checks_table("epsilon0 = -1", fields, rep.checks))
    return _verdict(rep.checks)


def cmd_d_identity(cfg: RunConfig, args) -> int:
    fam = qrext.build_qr_family(cfg.p, cfg.ell)
    case = args.case if args.case is not None else fam.case
    rep = qrext.verify_D_identity(fam, case, args.s)
    _emit(cfg, rep.to_json(), _checks_table(f"D identity, case {case}", _family_fields(fam), rep.checks))
    return _verdict(rep.checks)


def cmd_little(cfg: RunConfig, args) -> int:
    rep = qrext.little_poly_split_check(cfg.ell, args.case)
    fields = {"ell": cfg.ell, "case": rep.extra["case"], "samples": rep.extra["samples"], "root counts": rep.extra["root_counts"]}
    _emit(cfg, rep.to_json(), _checks_table("little polynomial root split", fields, rep.checks))
    return _verdict(rep.checks)


def cmd_chebotarev(cfg: RunConfig, args) -> int:
    if cfg.ell >= LONG_CHEBOTAREV_ELL and not cfg.long and (args.max_order is None or args.max_order > 7):
        raise _Guard(f"the full sweep for ell = {cfg.ell} visits many minors; rerun with --long")
    if args.max_order is not None and not 1 <= args.max_order <= cfg.ell:
        raise DomainError(f"--max-order must lie in 1..{cfg.ell}")
    rep = cycint.chebotarev_check(cfg.ell, args.max_order)
    checks = [{"name": "every minor of (z^(ij)) nonzero", "pass": rep.all_nonzero}]
    if rep.witness is not None:
        checks[0]["witness"] = [list(rep.witness[0]), list(rep.witness[1])]
    fields = {"ell": rep.ell, "minors checked": rep.minors_checked, "max order": rep.max_size_checked}
    _emit(cfg, rep.to_json(), _checks_table("Chebotarev sweep over Z[z]/Phi_ell", fields, checks))
    return _verdict(checks)


def cmd_mds(cfg: RunConfig, args) -> int:
    rep = cyccode.mds_check_via_minors(cfg.p, cfg.ell)
    checks = [{"name": "every minor of (zeta^(ij)) nonzero mod p", "pass": rep.all_mds}]
    if args.exhaustive:
        cross = cyccode.mds_exhaustive(cfg.p, cfg.ell, cfg.budget)
        rep = cyccode.MdsReport(rep.ell, rep.p, rep.zeta, rep.minors_checked, rep.all_mds, rep.witness, cross)
        checks.append({"name": "exhaustive d = n - k + 1 for every cyclic code", "pass": all(c["mds"] for c in cross)})
        checks.append({"name": "minor sweep agrees with exhaustive check", "pass": rep.all_mds == all(c["mds"] for c in cross)})
    fields = {"ell, p": f"{rep.ell}, {rep.p}", "zeta": rep.zeta, "minors checked": rep.minors_checked}
    payload = rep.to_json()
    payload["checks"] = checks
    _emit(cfg, payload, _checks_table("MDS certification", fields, checks))
    return _verdict(checks)


def cmd_lemma(cfg: RunConfig, args) -> int:
    rep = cyccode.lemma_check(cfg.p, args.m, args.n)
    fields = {"p, m, n": f"{rep['p']}, {rep['m']}, {rep['n']}", "h": rep["h"], "generator": rep["generator"], "k": rep["k"]}
    _emit(cfg, rep, _checks_table("trace-code lemma", fields, rep["checks"]))
    return _verdict(rep["checks"])


def cmd_weights(cfg: RunConfig, args) -> int:
    fam = qrext.build_qr_family(cfg.p, cfg.ell)
    code = fam.A_plus if args.unextended else fam.A_inf
    _long_guard(cfg, code.k)
    we = cyccode.weight_enumerator(code, cfg.budget, cfg.workers)
    payload = {"ell": fam.ell, "p": fam.p, "n": code.n, "k": code.k, "counts": list(we.counts), "min_weight": we.min_weight()}
    nz = {w: c for w, c in enumerate(we.counts) if c}
    fields = {"code": f"[{code.n},{code.k}] over GF({fam.p})", "min weight": we.min_weight()}
    fields.update({f"A_{w}": c for w, c in nz.items()})
    _emit(cfg, payload, _checks_table("weight enumerator", fields, []))
    return EXIT_OK


def _long_guard(cfg: RunConfig, k: int) -> None:
    if cfg.p**k > cfg.budget:
        raise ResourceError(f"{cfg.p}^{k} messages exceed the budget {cfg.budget}")
    if cfg.p**k > LONG_MESSAGES and not cfg.long:
        raise _Guard(f"exhaustive enumeration of {cfg.p}^{k} messages; rerun with --long")


def cmd_orbits(cfg: RunConfig, args) -> int:
    fam = qrext.build_qr_family(cfg.p, cfg.ell)
    ext = fam.A_inf
    _long_guard(cfg, ext.k)
    gens = qrext.psl2_generators(fam)
    words = qrext.min_weight_words(ext, cfg.budget, cfg.workers)
    rep = qrext.min_weight_orbits(ext, gens, cfg.budget, cfg.workers, words=words)
    shuffled = list(gens)
    random.Random(cfg.seed).shuffle(shuffled)
    rep2 = qrext.min_weight_orbits(ext, shuffled, cfg.budget, cfg.workers, words=words)
    checks = [
        {"name": "orbit sizes sum to word count", "pass": sum(rep.orbit_sizes) == rep.word_count},
        {"name": "orbit sizes divide group order", "pass": all(rep.group_order % s == 0 for s in rep.orbit_sizes)},
        {"name": "same sizes with shuffled generators", "pass": rep.orbit_sizes == rep2.orbit_sizes},
    ]
    payload = {"ell": fam.ell, "p": fam.p, "gamma": fam.gamma, "eta": fam.eta, "eta_prime": fam.eta_prime, "checks": checks}
    payload.update(rep.to_json())
    fields = {
        "code": f"[{ext.n},{ext.k}] over GF({fam.p})",
        "weight": rep.weight,
        "word count": rep.word_count,
        "orbits": rep.orbit_count,
        "orbit sizes": list(rep.orbit_sizes),
        "group order": rep.group_order,
    }
    _emit(cfg, payload, _checks_table("minimum-weight orbits under PSL_2(ell)", fields, checks))
    return _verdict(checks)


def build_parser() -> argparse.ArgumentParser:
    import os

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, default=cyccode.DEFAULT_BUDGET)
    common.add_argument("--workers", type=int, default=int(os.environ.get("QR_WORKERS", "1")))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--long", action="store_true", help="allow long-running computations")

    parser = argparse.ArgumentParser(prog="qr", description="Quadratic-residue code verification workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, p=True, ell=True):
        sp = sub.add_parser(name, parents=[common], help=help)
        if p:
            sp.add_argument("--p", type=int, required=True)
        if ell:
            sp.add_argument("--ell", type=int, required=True)
        sp.set_defaults(func=func)
        return sp

    add("family", cmd_family, "build the QR family and check its invariants")
    add("gp", cmd_gleason_prange, "check sigma preserves A_inf")
    add("epsilon", cmd_epsilon, "show epsilon0 = -1 breaks invariance")
    d = add("d", cmd_d_identity, "evaluate the D / D' functionals on the spanning set")
    d.add_argument("--case", type=int, choices=(1, 2))
    d.add_argument("--s", type=int)
    lp = add("little", cmd_little, "root split of the little quadratics", p=False)
    lp.add_argument("--case", type=int, choices=(1, 2))
    ch = add("chebotarev", cmd_chebotarev, "all minors of (z^(ij)) over Z[z]", p=False)
    ch.add_argument("--max-order", type=int)
    mds = add("mds", cmd_mds, "MDS certification via minors mod p")
    mds.add_argument("--exhaustive", action="store_true", help="cross-check by exhaustive minimum distance")
    lem = add("lemma", cmd_lemma, "trace-code lemma", ell=False)
    lem.add_argument("--m", type=int, required=True)
    lem.add_argument("--n", type=int, required=True)
    w = add("weights", cmd_weights, "weight enumerator of A_inf")
    w.add_argument("--unextended", action="store_true")
    add("orbits", cmd_orbits, "orbits of minimum-weight words")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        p=getattr(args, "p", None),
        ell=getattr(args, "ell", None),
        budget=args.budget,
        fmt=args.fmt,
        workers=max(1, args.workers),
        long=args.long,
        seed=args.seed,
    )
    try:
        cfg.validate()
        return args.func(cfg, args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except _Guard as exc:
        print(f"refusing long run: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
