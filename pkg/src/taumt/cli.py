"""Command-line interface.

Three subcommands: "tau" streams tau coefficients, "verify" recomputes a
named family of claims and exits 0 only if everything matches, and "mt"
emits a Mazur-Tate element with its invariants.  Output is plain text,
JSON, or CSV, deterministic byte for byte for a fixed invocation.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys

from . import fixtures
from .arith import INFINITY, DirichletCharacter
from .boundary import eisenstein_boundary_symbol, phi9_symbol
from .cusps import Cusp
from .iwasawa import (
    fit_global_unit,
    invariants,
    mazur_tate,
    to_T_basis,
    verify_lambda_theorems,
)
from .mansym import alpha_N, delta_symbol
from .qseries import admissible_sweep, tau_expansion, verify_serre_congruences, verify_tau_congruence

CANONICAL_EXPONENT = {3: 2, 5: 2, 7: 4}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taumt",
        description="Exact tau congruences, boundary symbols, and Mazur-Tate invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tau = sub.add_parser("tau", help="stream tau(1..N), optionally reduced")
    p_tau.add_argument("--n", type=int, required=True, help="number of coefficients")
    p_tau.add_argument("--mod", type=int, default=None, help="reduce modulo this integer")
    p_tau.add_argument("--out", default=None, help="write to a file instead of stdout")

    p_verify = sub.add_parser("verify", help="recompute a family of claims")
    p_verify.add_argument("theorem", choices=["A", "B", "C", "D", "serre", "congmodsymb", "appendix"])
    p_verify.add_argument("--p", type=int, action="append", default=None, help="restrict to this prime (repeatable)")
    p_verify.add_argument("--nmax", type=int, default=None, help="largest Mazur-Tate level")
    p_verify.add_argument("--bound", type=int, default=10000, help="coefficient bound for scans")
    p_verify.add_argument("--samples", type=int, default=200, help="random divisor pairs for congmodsymb")
    p_verify.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p_verify.add_argument("--format", choices=["json", "csv"], default="json")
    p_verify.add_argument("--fixtures", default=None, help="override the fixture directory")
    p_verify.add_argument("--out", default=None)

    p_mt = sub.add_parser("mt", help="emit a Mazur-Tate element and its invariants")
    p_mt.add_argument("--source", choices=["delta", "eis", "phi9"], required=True)
    p_mt.add_argument("--p", type=int, required=True)
    p_mt.add_argument("--n", type=int, required=True)
    p_mt.add_argument("--m", type=int, default=None, help="coefficient precision p^m")
    p_mt.add_argument("--a", type=int, default=None, help="Teichmuller exponent for --source eis")
    p_mt.add_argument("--format", choices=["json", "csv"], default="json")
    p_mt.add_argument("--out", default=None)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _records_text(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(records, sort_keys=True, separators=(",", ": "), indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    keys = sorted({k for r in records for k in r})
    writer.writerow(keys)
    for r in records:
        writer.writerow([r.get(k, "") for k in keys])
    return buf.getvalue()


def _record(claim: str, computed, expected, passed: bool, **extra) -> dict:
    rec = {"claim": claim, "computed": computed, "expected": expected, "pass": bool(passed)}
    rec.update(extra)
    return rec


def _jsonable(x):
    if x == INFINITY:
        return "inf"
    return x


def cmd_tau(args) -> int:
    tau = tau_expansion(args.n)
    values = tau[1:]
    if args.mod:
        values = [v % args.mod for v in values]
    _emit("".join(f"{v}\n" for v in values), args.out)
    return 0


def _theorem_checks_to_records(checks) -> list[dict]:
    return [
        _record(c.claim, list(map(_jsonable, c.computed)), list(map(_jsonable, c.expected)), c.passed, p=c.p, n=c.n)
        for c in checks
    ]


def _verify_A(args) -> list[dict]:
    primes = args.p or [3, 5, 7]
    bound = args.bound
    tau = tau_expansion(bound)
    records = []
    for p in primes:
        rep = verify_tau_congruence(p, 2, CANONICAL_EXPONENT[p], 0, bound, tau)
        records.append(_record(str(rep), "holds" if rep.ok else list(rep.first_failure), "holds", rep.ok, p=p))
    sweep_bound = min(bound, 1000)
    for p in primes:
        for rep in admissible_sweep(p, 20, sweep_bound, tau):
            records.append(_record(str(rep), "holds" if rep.ok else list(rep.first_failure), "holds", rep.ok, p=p))
    return records


def _verify_serre(args) -> list[dict]:
    records = []
    for modulus, e1, e2 in fixtures.load_serre_congruences():
        rep = verify_serre_congruences(args.bound, congruences=[(modulus, e1, e2)])[0]
        claim = f"tau(l) = l^{e1} + l^{e2} mod {modulus} for primes l <= {args.bound}"
        records.append(_record(claim, "holds" if rep.ok else rep.first_failure, "holds", rep.ok))
    return records


def _random_cusp(rng: random.Random) -> Cusp:
    while True:
        den = rng.randrange(0, 60)
        num = rng.randrange(-60, 61)
        if num or den:
            try:
                return Cusp.make(num, den)
            except ValueError:
                continue


def _verify_congmodsymb(args) -> list[dict]:
    records = []
    rng = random.Random(args.seed)
    primes = args.p or [5, 7]
    for p in primes:
        table = fixtures.load_divisor_values(f"s{p}_values.csv")
        alpha = alpha_N(delta_symbol(), p, normalize=True)
        ours = [alpha.pair(Cusp.parse(r), Cusp.parse(s)) for r, s, _ in table]
        printed = [v for _, _, v in table]
        unit = fit_global_unit(ours, printed, p, 1)
        records.append(_record(
            f"alpha_{p}(delta symbol) matches the {len(table)} tabulated residues up to a unit",
            ours, printed, unit is not None, p=p, unit=unit))
        if unit is None:
            continue
        psi = DirichletCharacter.teichmuller_power(p, CANONICAL_EXPONENT[p], 1)
        phi = eisenstein_boundary_symbol(psi, DirichletCharacter.trivial())
        c_p = {5: 2, 7: 1}[p] * unit % p
        bad = None
        for _ in range(args.samples):
            r, s = _random_cusp(rng), _random_cusp(rng)
            lhs = alpha.pair(r, s)
            rhs = c_p * phi.difference(r, s) % p
            if lhs != rhs:
                bad = (str(r), str(s), lhs, rhs)
                break
        records.append(_record(
            f"alpha_{p}(delta)({{r}}-{{s}}) = c * (phi_{p}(r) - phi_{p}(s)) mod {p} on {args.samples} random pairs",
            bad or "holds", "holds", bad is None, p=p, unit=unit, c=c_p))
    return records


def _verify_appendix(args) -> tuple[list[dict], str]:
    rows = fixtures.load_table1()
    alpha = alpha_N(delta_symbol(), 9, normalize=True)
    phi9 = phi9_symbol()
    ours_alpha = []
    ours_phi = []
    for r, s, _, _ in rows:
        rc, sc = Cusp.parse(r), Cusp.parse(s)
        ours_alpha.append(alpha.pair(rc, sc))
        ours_phi.append(phi9.difference(rc, sc))
    records = []
    unit = fit_global_unit(ours_alpha, [a for _, _, a, _ in rows], 3, 2)
    ok_count = 0
    for (r, s, alpha_printed, phi_printed), got_a, got_phi in zip(rows, ours_alpha, ours_phi):
        ok = got_phi == phi_printed and unit is not None and got_a == unit * alpha_printed % 9
        ok_count += ok
        records.append(_record(
            f"{{{r}}} - {{{s}}}", [got_a, got_phi], [alpha_printed, phi_printed], ok, unit=unit))
    records.insert(0, _record(
        f"appendix table: {len(rows)} rows, alpha column up to one global unit",
        f"{ok_count}/{len(rows)}", f"{len(rows)}/{len(rows)}", ok_count == len(rows), unit=unit))
    # csv output mirrors the table itself: divisor pair and the two columns,
    # the alpha column scaled back by the fitted unit so a passing run prints
    # the same numbers a reader would transcribe
    inv_unit = pow(unit, -1, 9) if unit else 1
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["divisor", "alpha", "phi9"])
    for (r, s, _, _), got_a, got_phi in zip(rows, ours_alpha, ours_phi):
        writer.writerow([f"{{{r}}} - {{{s}}}", got_a * inv_unit % 9, got_phi])
    return records, buf.getvalue()


_VERIFY_PRIMES = {"A": (3, 5, 7), "B": (5, 7), "C": (5, 7), "congmodsymb": (5, 7)}


def cmd_verify(args, parser) -> int:
    if args.fixtures:
        os.environ[fixtures.ENV_VAR] = args.fixtures
    theorem = args.theorem
    allowed = _VERIFY_PRIMES.get(theorem)
    if allowed and args.p and not set(args.p) <= set(allowed):
        parser.error(f"verify {theorem} supports --p in {set(allowed)}")
    if args.bound < 2:
        parser.error("--bound must be at least 2")
    if args.nmax is not None and args.nmax < 1:
        parser.error("--nmax must be at least 1")
    table_csv = None
    if theorem == "A":
        records = _verify_A(args)
    elif theorem == "serre":
        records = _verify_serre(args)
    elif theorem == "congmodsymb":
        records = _verify_congmodsymb(args)
    elif theorem == "appendix":
        records, table_csv = _verify_appendix(args)
    else:
        nmax = args.nmax or 2
        primes = tuple(args.p) if args.p else (5, 7)
        records = _theorem_checks_to_records(verify_lambda_theorems(theorem, nmax, primes))
    if args.format == "csv" and table_csv is not None:
        _emit(table_csv, args.out)
    else:
        _emit(_records_text(records, args.format), args.out)
    failures = [r for r in records if not r["pass"]]
    if failures:
        sys.stderr.write(f"FAILED: {failures[0]['claim']}\n")
        return 1
    return 0


def cmd_mt(args, parser) -> int:
    p, n = args.p, args.n
    if p < 3 or p % 2 == 0 or n < 1:
        parser.error("need an odd prime --p and --n >= 1")
    if args.m is not None and args.m < 1:
        parser.error("--m must be at least 1")
    if args.source == "delta":
        if p not in (3, 5, 7):
            parser.error("--source delta supports p in {3, 5, 7}")
        m = args.m or (2 if p == 3 else 1)
        theta = mazur_tate(delta_symbol(), p, n, m)
    elif args.source == "phi9":
        if p != 3:
            parser.error("--source phi9 requires --p 3")
        m = args.m or 2
        theta = mazur_tate(phi9_symbol(), 3, n, m)
    else:
        m = args.m or 1
        exponent = args.a if args.a is not None else CANONICAL_EXPONENT.get(p)
        if exponent is None:
            parser.error(f"no default Teichmuller exponent for p={p}; pass --a")
        psi = DirichletCharacter.teichmuller_power(p, exponent, m)
        try:
            phi = eisenstein_boundary_symbol(psi, DirichletCharacter.trivial())
        except ValueError as exc:
            parser.error(str(exc))
        theta = mazur_tate(phi, p, n, m)
    tpoly = to_T_basis(theta)
    inv = invariants(tpoly)
    payload = {
        "claim": f"mazur-tate source={args.source} p={p} n={n} m={m}",
        "p": p,
        "n": n,
        "m": m,
        "coeffs_group_basis": list(theta.coeffs),
        "coeffs_T_basis": list(tpoly.coeffs),
        "mu": _jsonable(inv.mu),
        "lambda": _jsonable(inv.lam),
        "precision_ok": inv.precision_ok,
        "unit": None,
    }
    if args.format == "json":
        text = json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "group_basis", "T_basis"])
        for i, (c, a) in enumerate(zip(theta.coeffs, tpoly.coeffs)):
            writer.writerow([i, c, a])
        writer.writerow(["mu", _jsonable(inv.mu), ""])
        writer.writerow(["lambda", _jsonable(inv.lam), ""])
        text = buf.getvalue()
    _emit(text, args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "tau":
        if args.n < 1:
            parser.error("--n must be at least 1")
        return cmd_tau(args)
    if args.command == "verify":
        return cmd_verify(args, parser)
    return cmd_mt(args, parser)


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
