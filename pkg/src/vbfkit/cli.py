"""Command-line front end: build tables, analyze them, verify claims.

Three subcommands:

``construct``
    Build the lookup table of a named family and write it as a LUT file
    (line 1 is ``m=<int> poly=<hex>``, then 2^m hex values in ascending
    input order).

``analyze``
    Compute degree, nonlinearity, differential uniformity, the full Walsh
    and difference-count distributions, and the power-map inequivalence
    witness for a table, emitted as canonical JSON (sorted keys, stable
    formatting, byte-identical across runs).

``verify``
    Run a named bundle of identity and property checks, printing one line
    per check.

Exit codes: 0 success / all checks confirmed; 1 a verification check
failed; 2 usage or precondition error; 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

import numpy as np

from vbfkit.ccz import (
    BinLinearMap,
    BudgetExceededError,
    ccz_transform,
    gold_perm_criterion,
    gold_perm_criterion_even,
    identity_map,
    linear_completion_search,
    map_invertible,
    power_inequivalence_witness,
)
from vbfkit.constructions import (
    ConditionViolatedError,
    FamilySpec,
    example1_witness,
    f8_side_condition,
    family_exponent,
    theorem1,
    theorem2,
    theorem3,
    theorem3_f1,
    theorem4,
    theorem4_f1_inverse,
    theorem12_ccz_witness,
)
from vbfkit.gf2m import Field
from vbfkit.spectra import (
    differential_spectrum,
    differential_uniformity,
    is_ab,
    is_apn,
    nonlinearity,
    walsh_spectrum,
)
from vbfkit.vbf import (
    FuncTable,
    NotAPermutationError,
    UnivariatePoly,
    algebraic_degree,
    component_degree,
    compose,
    evaluate,
    invert,
    is_permutation,
    monomial,
)

POWER_FAMILIES = ("gold", "kasami", "welch", "niho", "inverse", "dobbertin")
FAMILIES = POWER_FAMILIES + ("power", "thm1", "thm2", "thm3", "thm4")
CLAIMS = (
    "thm1",
    "thm2",
    "thm3",
    "thm4",
    "remark4",
    "example1",
    "prop-gold-perm",
    "prop-gold-perm-even",
    "f8-check",
    "ccz-invariance",
)


# -- LUT files ---------------------------------------------------------------


def lut_text(f: FuncTable) -> str:
    ctx = f.ctx
    width = (ctx.m + 3) // 4
    lines = [f"m={ctx.m} poly=0x{ctx.poly:x}"]
    lines.extend(f"0x{v:0{width}x}" for v in f.values)
    return "\n".join(lines) + "\n"


def read_lut(path: str) -> FuncTable:
    with open(path, encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty LUT file")
    try:
        head = dict(tok.split("=", 1) for tok in lines[0].split())
    except ValueError:
        head = {}
    if set(head) != {"m", "poly"}:
        raise ValueError(f"{path}: first line must be 'm=<int> poly=<hex>'")
    ctx = Field(int(head["m"]), int(head["poly"], 16))
    try:
        values = [int(tok, 16) for tok in lines[1:]]
    except ValueError:
        raise ValueError(f"{path}: table entries must be hex integers") from None
    return FuncTable(ctx, values)


# -- family construction -----------------------------------------------------


def _require_param(value, flag: str, family: str):
    if value is None:
        raise ConditionViolatedError(f"family {family!r} needs {flag}")
    return value


def build_family(args: argparse.Namespace) -> FuncTable:
    fam = args.family
    if args.m is None:
        raise ConditionViolatedError("--m is required with --family")
    ctx = Field(args.m, args.poly)
    if fam in ("thm1", "thm2"):
        i = _require_param(args.i, "--i", fam)
        builder = theorem1 if fam == "thm1" else theorem2
        return builder(ctx, i, relaxed=args.relaxed)
    if fam == "thm3":
        return theorem3(ctx, _require_param(args.i, "--i", fam))
    if fam == "thm4":
        n = _require_param(args.n, "--n", fam)
        return theorem4(ctx, n, _require_param(args.i, "--i", fam))
    if fam == "power":
        return monomial(ctx, _require_param(args.d, "--d", fam))
    if fam == "inverse" and ctx.m % 2 == 0:
        # Table slot only covers odd degrees; on even ones serve the
        # proper multiplicative inverse x^(2^m - 2).
        return monomial(ctx, ctx.size - 2)
    d = family_exponent(FamilySpec(fam, ctx.m, i=args.i, n=args.n, t=args.t))
    if d >= ctx.size:
        # formula exponents can exceed the field size on tiny degrees;
        # x^d agrees with x^(d mod 2^m - 1) away from zero
        d = d % ctx.order or ctx.order
    return monomial(ctx, d)


# -- analysis report ---------------------------------------------------------


def analysis_report(f: FuncTable) -> dict:
    ws = walsh_spectrum(f)
    ds = differential_spectrum(f)
    report = {
        "schema": 1,
        "m": f.ctx.m,
        "reduction_poly": f"0x{f.ctx.poly:x}",
        "degree": int(algebraic_degree(f)),
        "nonlinearity": int(nonlinearity(f, ws)),
        "differential_uniformity": int(differential_uniformity(f, ds)),
        "is_apn": bool(is_apn(f, ds)),
        "is_ab": bool(is_ab(f, ws)),
        "walsh_distribution": {str(int(k)): int(v) for k, v in ws.distribution.items()},
        "delta_distribution": {str(int(k)): int(v) for k, v in ds.distribution.items()},
    }
    witness = power_inequivalence_witness(f)
    if witness is not None:
        report["ea_power_witness"] = f"0x{witness:x}"
    return report


def render_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


# -- subcommand handlers -----------------------------------------------------


def cmd_construct(args: argparse.Namespace) -> int:
    text = lut_text(build_family(args))
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    if (args.lut is None) == (args.family is None):
        raise ConditionViolatedError("pass exactly one of a LUT path or --family")
    start = time.perf_counter()
    f = read_lut(args.lut) if args.lut else build_family(args)
    report = analysis_report(f)
    if args.timing:
        report["timing_ms"] = int((time.perf_counter() - start) * 1000)
    text = render_report(report)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _emit_checks(checks: list[tuple[str, bool]]) -> int:
    ok = True
    for name, passed in checks:
        print(("ok   " if passed else "FAIL ") + name)
        ok = ok and bool(passed)
    return 0 if ok else 1


def _field(args: argparse.Namespace) -> Field:
    if args.m is None:
        raise ConditionViolatedError("--m is required for this claim")
    return Field(args.m, args.poly)


def _witness_points(ctx: Field, a: int | None) -> list[int]:
    if a is not None:
        return [a]
    rng = random.Random(0xA5)
    pts = {1, ctx.generator}
    while len(pts) < min(3, ctx.order):
        pts.add(rng.randrange(1, ctx.size))
    return sorted(pts)


def _witness_check(ctx: Field, which: int, i: int, a: int | None) -> tuple[str, bool]:
    for point in _witness_points(ctx, a):
        try:
            theorem12_ccz_witness(ctx, which, i, point)
        except RuntimeError as exc:
            return (f"graph witness identities at a=0x{point:x} ({exc})", False)
    return ("graph witness identities", True)


def verify_thm1(args: argparse.Namespace) -> int:
    ctx = _field(args)
    f = theorem1(ctx, args.i)
    checks = [
        ("almost bent", is_ab(f)),
        ("algebraic degree 3", algebraic_degree(f) == 3),
        ("unit component degree 2", component_degree(f, 1) == 2),
        ("EA-inequivalent to power maps", power_inequivalence_witness(f) is not None),
        _witness_check(ctx, 1, args.i, args.a),
    ]
    return _emit_checks(checks)


def verify_thm2(args: argparse.Namespace) -> int:
    ctx = _field(args)
    f = theorem2(ctx, args.i)
    checks = [
        ("differentially 2-uniform", is_apn(f)),
        ("algebraic degree 3", algebraic_degree(f) == 3),
        ("EA-inequivalent to power maps", power_inequivalence_witness(f) is not None),
        _witness_check(ctx, 2, args.i, args.a),
    ]
    return _emit_checks(checks)


def verify_thm3(args: argparse.Namespace) -> int:
    ctx = _field(args)
    checks = [("octic side condition", f8_side_condition(args.i))]
    if not checks[0][1]:
        return _emit_checks(checks)
    try:
        f1 = theorem3_f1(ctx, args.i)
        checks.append(("composition shift of order 6", True))
    except RuntimeError as exc:
        checks.append((f"composition shift of order 6 ({exc})", False))
        return _emit_checks(checks)
    sixth = f1
    for _ in range(5):
        sixth = compose(f1, sixth)
    checks.append(("sixth power is the identity", sixth == monomial(ctx, 1)))
    f = theorem3(ctx, args.i)
    checks.append(("differentially 2-uniform", is_apn(f)))
    checks.append(("algebraic degree 4", algebraic_degree(f) == 4))
    return _emit_checks(checks)


def verify_thm4(args: argparse.Namespace) -> int:
    ctx = _field(args)
    if args.n is None:
        raise ConditionViolatedError("--n is required for this claim")
    n, i = args.n, args.i
    f = theorem4(ctx, n, i)
    e = (1 << i) + 1
    inverse_ok = True
    for y in range(ctx.size):
        x = theorem4_f1_inverse(ctx, n, i, y)
        if x ^ ctx.subfield_trace(x, n) ^ ctx.subfield_trace(ctx.pow(x, e), n) != y:
            inverse_ok = False
            break
    checks = [
        ("almost bent", is_ab(f)),
        (f"algebraic degree {n + 2}", algebraic_degree(f) == n + 2),
        ("closed-form shift inverse at every point", inverse_ok),
        ("EA-inequivalent to power maps", power_inequivalence_witness(f) is not None),
    ]
    if n == 1:
        checks.append(("degenerate case matches the cubic family", f == theorem1(ctx, i)))
    return _emit_checks(checks)


def _parse_budget(text: str | None) -> tuple[int | None, float | None]:
    if text is None:
        return None, None
    if "." in text:
        return None, float(text)
    return int(text), None


def verify_remark4(args: argparse.Namespace) -> int:
    if args.lut:
        f = read_lut(args.lut)
    else:
        f = theorem1(_field(args), args.i)
    count, seconds = _parse_budget(args.budget)
    found = linear_completion_search(
        f, budget=count, workers=args.threads, time_limit=seconds, seed=args.seed
    )
    m = f.ctx.m
    space = f"all 2^{m * m} linear maps" if count is None else f"{count} sampled linear maps"
    if found is None:
        print(f"ok   no linear completion to a permutation among {space}")
        return 0
    rows = ", ".join(f"0x{r:x}" for r in found.rows)
    print(f"FAIL linear completion found: rows [{rows}]")
    return 1


def verify_example1(args: argparse.Namespace) -> int:
    ctx = _field(args)
    w = example1_witness(ctx, args.i)
    transformed = compose(w.F2, invert(w.F1))
    g = monomial(ctx, (1 << args.i) + 1)
    checks = [
        ("first graph projection permutes", is_permutation(w.F1)),
        (
            "Walsh distribution preserved",
            walsh_spectrum(transformed).distribution == walsh_spectrum(g).distribution,
        ),
        (
            "difference-count distribution preserved",
            differential_spectrum(transformed).distribution
            == differential_spectrum(g).distribution,
        ),
    ]
    return _emit_checks(checks)


def _random_linearized(ctx: Field, rng: random.Random) -> UnivariatePoly:
    terms = {}
    for _ in range(rng.choice((1, 2))):
        terms[1 << rng.randrange(ctx.m)] = rng.randrange(1, ctx.size)
    return UnivariatePoly(ctx, terms)


def verify_prop_gold_perm(args: argparse.Namespace) -> int:
    ctx = _field(args)
    rng = random.Random(args.seed)
    xs = np.arange(ctx.size, dtype=np.int64)
    powered = ctx.pow_many(xs, (1 << args.i) + 1)
    mismatches = 0
    for _ in range(args.count):
        L, Lp = _random_linearized(ctx, rng), _random_linearized(ctx, rng)
        fast = gold_perm_criterion(L, Lp, args.i)
        table = FuncTable(ctx, evaluate(L).as_array()[powered] ^ evaluate(Lp).as_array()[xs])
        if fast != is_permutation(table):
            mismatches += 1
    name = f"criterion agreed with brute force on {args.count} random summand pairs"
    return _emit_checks([(name, mismatches == 0)])


def verify_prop_gold_perm_even(args: argparse.Namespace) -> int:
    ctx = _field(args)
    rng = random.Random(args.seed)
    xs = np.arange(ctx.size, dtype=np.int64)
    powered = ctx.pow_many(xs, (1 << args.i) + 1)
    mismatches = 0
    for _ in range(args.count):
        L = _random_linearized(ctx, rng)
        fast = gold_perm_criterion_even(L, args.i)
        table = FuncTable(ctx, evaluate(L).as_array()[powered] ^ xs)
        if fast != is_permutation(table):
            mismatches += 1
    name = f"criterion agreed with brute force on {args.count} random summands"
    return _emit_checks([(name, mismatches == 0)])


def verify_f8_check(args: argparse.Namespace) -> int:
    holds = f8_side_condition(args.i)
    return _emit_checks([(f"octic side condition for index {args.i}", holds)])


def verify_ccz_invariance(args: argparse.Namespace) -> int:
    ctx = _field(args)
    f = monomial(ctx, 3)
    base_w = walsh_spectrum(f).distribution
    base_d = differential_spectrum(f).distribution
    movers = [identity_map(2 * ctx.m)]
    if ctx.m % 2:
        movers.append(theorem12_ccz_witness(ctx, 1, 1).L)
        movers.append(example1_witness(ctx, 1).L)
    else:
        movers.append(theorem12_ccz_witness(ctx, 2, 1).L)
    rng = random.Random(args.seed)
    for _ in range(args.count):
        rows = [rng.randrange(1, 1 << (2 * ctx.m)) for _ in range(2 * ctx.m)]
        L = BinLinearMap(2 * ctx.m, 2 * ctx.m, rows)
        if map_invertible(L):
            movers.append(L)
    produced = changed = 0
    for L in movers:
        try:
            g = ccz_transform(L, f)
        except NotAPermutationError:
            continue
        produced += 1
        if (
            walsh_spectrum(g).distribution != base_w
            or differential_spectrum(g).distribution != base_d
        ):
            changed += 1
    checks = [
        (f"at least one of {len(movers)} graph maps produced a function", produced > 0),
        (f"spectra preserved by all {produced} produced functions", changed == 0),
    ]
    return _emit_checks(checks)


_VERIFIERS = {
    "thm1": verify_thm1,
    "thm2": verify_thm2,
    "thm3": verify_thm3,
    "thm4": verify_thm4,
    "remark4": verify_remark4,
    "example1": verify_example1,
    "prop-gold-perm": verify_prop_gold_perm,
    "prop-gold-perm-even": verify_prop_gold_perm_even,
    "f8-check": verify_f8_check,
    "ccz-invariance": verify_ccz_invariance,
}


def cmd_verify(args: argparse.Namespace) -> int:
    return _VERIFIERS[args.claim](args)


# -- argument parsing --------------------------------------------------------


def _int_literal(text: str) -> int:
    return int(text, 0)


def _add_family_params(p: argparse.ArgumentParser, with_family: bool = True) -> None:
    if with_family:
        p.add_argument("--family", type=str.lower, choices=FAMILIES)
    p.add_argument("--m", type=int, help="extension degree of the field")
    p.add_argument("--i", type=int, help="Frobenius index parameter")
    p.add_argument("--n", type=int, help="subfield degree parameter")
    p.add_argument("--t", type=int, help="half-degree parameter (m = 2t + 1)")
    p.add_argument("--d", type=int, help="raw exponent for the generic power family")
    p.add_argument("--poly", type=_int_literal, help="reduction polynomial bitmask")
    p.add_argument("--relaxed", action="store_true", help="allow gcd(i, m) > 1 variants")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vbfkit",
        description="Construct, analyze, and verify vectorial Boolean functions over GF(2^m).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="build a family LUT and write it out")
    _add_family_params(pc)
    pc.add_argument("--out", help="output path (default: stdout)")
    pc.set_defaults(handler=cmd_construct)

    pa = sub.add_parser("analyze", help="emit the JSON analysis report for a table")
    pa.add_argument("lut", nargs="?", help="LUT file to analyze")
    _add_family_params(pa)
    pa.add_argument("--out", help="report path (default: stdout)")
    pa.add_argument("--timing", action="store_true", help="include wall-clock timing_ms")
    pa.set_defaults(handler=cmd_analyze)

    pv = sub.add_parser("verify", help="run a named bundle of checks")
    pv.add_argument("claim", choices=CLAIMS)
    _add_family_params(pv, with_family=False)
    pv.add_argument("--a", type=_int_literal, help="witness scaling point (default: sampled)")
    pv.add_argument("--lut", help="table to search instead of a constructed one")
    pv.add_argument("--count", type=int, default=60, help="random trials for sampled bundles")
    pv.add_argument("--seed", type=int, default=0, help="seed for sampled bundles")
    pv.add_argument(
        "--threads", type=int, default=os.cpu_count() or 1, help="search worker count"
    )
    pv.add_argument(
        "--budget",
        help="search budget: integer candidate count or decimal wall-clock seconds",
    )
    pv.set_defaults(handler=cmd_verify, i=1)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"error: search budget exceeded ({exc})", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
