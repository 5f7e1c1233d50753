"""Command-line driver: profile validation, full verification runs, and
machine-readable reports.

Exit codes: 0 all enabled checks pass, 1 a mathematical verification
failed (inclusion violation, consistency mismatch, or an inconclusive
criterion enclosure), 2 usage / profile / I-O errors.

Reports are deterministic for fixed inputs and seed: exact rationals
serialize as decimal-free "p/q" strings, balls as {mid, rad, prec}
decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from mpmath import nstr

from . import __version__
from .asymptotics import exponent_ledger
from .balls import BallReal
from .decomposition import (ArithmeticFactors, beta_coefficients,
                            integer_linear_form, verify_coefficient_inclusions,
                            verify_form_inclusions)
from .numerics import (beta_value, build_profile_rep, consistency_check,
                       mc_integral, r_n_series)
from .numtheory import carry_min_table
from .profiles import (Profile, ProfileError, THEOREM1_ETA, general,
                       profile_violations, section2)
from .rationalfn import partial_fractions

PRESETS = {
    "section2-s17": {"family": "section2", "s": 17, "n": [2]},
    "theorem1": {"family": "general", "s": 13,
                 "eta": list(THEOREM1_ETA), "n": [2, 4]},
}

_DEFAULTS = {
    "precision": 256,
    "verify_inclusions": True,
    "consistency": True,
    "asymptotics": True,
    "mc_samples": 0,
    "seed": 20180418,
}

LARGE_GENERAL_N = 6


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _load_config(spec: str) -> dict:
    if spec in PRESETS:
        cfg = dict(PRESETS[spec])
    else:
        try:
            cfg = json.loads(Path(spec).read_text())
        except OSError as exc:
            raise CliError(f"cannot read profile {spec!r}: {exc}")
        except json.JSONDecodeError as exc:
            raise CliError(f"profile {spec!r} is not valid JSON: {exc}")
    out = dict(_DEFAULTS)
    out.update(cfg)
    n = out.get("n", [])
    out["n"] = [int(n)] if isinstance(n, int) else [int(v) for v in n]
    if "eta" in out and out["eta"] is not None:
        out["eta"] = tuple(int(e) for e in out["eta"])
        out.setdefault("s", len(out["eta"]) - 1)
    return out


def _config_violations(cfg: dict) -> list[str]:
    bad = []
    if not cfg["n"]:
        bad.append("no n values given")
    for n in cfg["n"]:
        bad += [f"n={n}: {v}" for v in profile_violations(
            cfg.get("family", "?"), cfg.get("s", 0), n, cfg.get("eta"))]
    if cfg["precision"] < 32:
        bad.append("precision must be >= 32 bits")
    if cfg["mc_samples"] < 0:
        bad.append("mc_samples must be >= 0")
    return bad


def _profile_at(cfg: dict, n: int) -> Profile:
    if cfg["family"] == "section2":
        return section2(cfg["s"], n)
    return general(cfg["eta"], n)


def _frac(q: Fraction) -> str:
    return str(Fraction(q))


def _ball(b: BallReal, precision: int, digits: int = 40) -> dict:
    return {"mid": nstr(b.mid, digits), "rad": nstr(b.rad, 8),
            "prec": precision}


def _inclusion_json(report) -> dict:
    return {
        "checked": report.checked,
        "ok": report.ok,
        "violations": [
            {"i": v.i, "k": v.k, "denominator": str(v.value.denominator),
             "deficits": {str(p): e for p, e in sorted(v.deficits.items())}}
            for v in report.violations
        ],
    }


def _run_one_n(cfg: dict, n: int, failures: list[str]) -> dict:
    precision = cfg["precision"]
    profile = _profile_at(cfg, n)
    rep = build_profile_rep(profile)
    table = partial_fractions(rep)
    dec = beta_coefficients(table, profile)
    factors = ArithmeticFactors.for_profile(profile)
    entry: dict = {
        "n": n,
        "a": {str(i): _frac(ai) for i, ai in enumerate(dec.a) if ai},
        "d": {"index": profile.d_index, "factorization": str(factors.d)},
        "phi": str(factors.phi),
    }
    if cfg["verify_inclusions"]:
        coeff_rep = verify_coefficient_inclusions(table, factors)
        form_rep = verify_form_inclusions(dec, factors)
        entry["inclusions"] = {
            "coefficients": _inclusion_json(coeff_rep),
            "form": _inclusion_json(form_rep),
        }
        if not coeff_rep.ok:
            failures.append(f"n={n}: coefficient inclusions violated")
        if not form_rep.ok:
            failures.append(f"n={n}: form inclusions violated")
        if coeff_rep.ok and form_rep.ok:
            ints, scale = integer_linear_form(dec, factors)
            entry["integer_form"] = {
                "scale": scale,
                "coefficients": [str(v) for v in ints],
            }
    if cfg["consistency"]:
        check = consistency_check(profile, precision, rep=rep, table=table,
                                  decomposition=dec)
        entry["r"] = _ball(check.series, precision)
        entry["consistency"] = {"passed": check.passed,
                                "gap_bits": check.gap_bits}
        if not check.passed:
            failures.append(f"n={n}: series/decomposition mismatch")
    else:
        entry["r"] = _ball(r_n_series(profile, precision, rep=rep,
                                      table=table), precision)
    if cfg["mc_samples"] and not profile.is_section2:
        est = mc_integral(profile, n, cfg["mc_samples"], cfg["seed"])
        entry["mc_integral"] = {
            **_ball(est, 53),
            "samples": cfg["mc_samples"],
            "seed": cfg["seed"],
            "radius_is_statistical": True,
        }
    return entry


def _asymptotics_json(cfg: dict, failures: list[str]) -> dict:
    precision = cfg["precision"]
    profile = _profile_at(cfg, cfg["n"][0])
    ledger = exponent_ledger(profile, precision)
    if ledger.verdict == "inconclusive":
        failures.append("criterion enclosure straddles zero")
    return {
        "r_exponent": _ball(ledger.r_exponent, precision),
        "phi_exponent": _ball(ledger.phi_exponent, precision),
        "d_exponent": _frac(ledger.d_exponent),
        "total": _ball(ledger.total, precision),
        "verdict": ledger.verdict,
    }


def _write_report(report: dict, out: str | None):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise CliError(f"cannot write report: {exc}")
    else:
        sys.stdout.write(text)


def _cmd_validate(args) -> int:
    cfg = _load_config(args.profile)
    if args.n:
        cfg["n"] = [int(v) for v in args.n]
    bad = _config_violations(cfg)
    out = {"profile": args.profile, "valid": not bad, "violations": bad}
    sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    return 0 if not bad else 2


def _check_gate(cfg: dict, args) -> None:
    if cfg["family"] == "general" and not args.allow_large:
        big = [n for n in cfg["n"] if n >= LARGE_GENERAL_N]
        if big:
            raise CliError(
                f"general-family n >= {LARGE_GENERAL_N} (got {big}) is slow and "
                "memory-hungry; pass --allow-large to proceed")


def _cmd_run(args) -> int:
    cfg = _load_config(args.profile)
    if args.n:
        cfg["n"] = [int(v) for v in args.n]
    if args.precision:
        cfg["precision"] = args.precision
    if args.seed is not None:
        cfg["seed"] = args.seed
    bad = _config_violations(cfg)
    if bad:
        raise CliError("invalid profile: " + "; ".join(bad))
    _check_gate(cfg, args)
    failures: list[str] = []
    report = {
        "tool": {"name": "betaforms", "version": __version__},
        "profile": {k: (list(v) if isinstance(v, tuple) else v)
                    for k, v in cfg.items()},
        "per_n": [_run_one_n(cfg, n, failures) for n in cfg["n"]],
    }
    if cfg["asymptotics"]:
        report["asymptotics"] = _asymptotics_json(cfg, failures)
    report["failures"] = failures
    report["ok"] = not failures
    _write_report(report, args.out)
    return 0 if not failures else 1


def _cmd_asymptotics(args) -> int:
    cfg = _load_config(args.profile)
    if args.n:
        cfg["n"] = [int(v) for v in args.n]
    if args.precision:
        cfg["precision"] = args.precision
    bad = _config_violations(cfg)
    if bad:
        raise CliError("invalid profile: " + "; ".join(bad))
    failures: list[str] = []
    report = {"profile": args.profile,
              "asymptotics": _asymptotics_json(cfg, failures),
              "failures": failures, "ok": not failures}
    _write_report(report, args.out)
    return 0 if not failures else 1


def _cmd_phi_table(args) -> int:
    cfg = _load_config(args.profile)
    if args.n:
        cfg["n"] = [int(v) for v in args.n]
    bad = _config_violations(cfg)
    if bad:
        raise CliError("invalid profile: " + "; ".join(bad))
    profile = _profile_at(cfg, cfg["n"][0])
    table = carry_min_table(profile.carry_spec)
    report = {
        "profile": args.profile,
        "carry_minimum": [
            {"from": _frac(lo), "to": _frac(hi), "value": v}
            for lo, hi, v in table.intervals()
        ],
        "per_n": [
            {"n": n,
             "phi": str(ArithmeticFactors.for_profile(_profile_at(cfg, n)).phi)}
            for n in cfg["n"]
        ],
    }
    _write_report(report, args.out)
    return 0


def _cmd_beta(args) -> int:
    if args.index < 1:
        raise CliError("beta index must be >= 1")
    precision = args.precision or 256
    value = beta_value(args.index, precision)
    report = {"index": args.index, "beta": _ball(value, precision,
                                                 digits=precision // 3)}
    _write_report(report, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betaforms",
        description="Exact linear forms in even beta values: construction, "
                    "verification, and asymptotic certificates.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, profile=True):
        if profile:
            p.add_argument("--profile", required=True,
                           help="profile JSON path or preset name "
                                f"({', '.join(sorted(PRESETS))})")
            p.add_argument("--n", nargs="+", type=int,
                           help="override the profile's n list")
        p.add_argument("--precision", type=int, help="working precision, bits")
        p.add_argument("--out", help="write the JSON report here")

    p = sub.add_parser("validate", help="check profile conditions")
    p.add_argument("--profile", required=True)
    p.add_argument("--n", nargs="+", type=int)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("run", help="full verification run + report")
    add_common(p)
    p.add_argument("--seed", type=int, help="Monte Carlo seed")
    p.add_argument("--allow-large", action="store_true",
                   help=f"allow general-family n >= {LARGE_GENERAL_N}")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("asymptotics", help="exponent ledger only")
    add_common(p)
    p.set_defaults(func=_cmd_asymptotics)

    p = sub.add_parser("phi-table", help="carry-minimum table and factors")
    add_common(p)
    p.set_defaults(func=_cmd_phi_table)

    p = sub.add_parser("beta", help="one beta value as a ball")
    p.add_argument("--index", "--n", dest="index", type=int, required=True)
    add_common(p, profile=False)
    p.set_defaults(func=_cmd_beta)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ProfileError as exc:
        print(f"error: invalid profile: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
