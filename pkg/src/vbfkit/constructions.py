"""APN/AB construction families over GF(2^m).

Two kinds of builders live here.  The power families (`family_exponent`)
catalogue the classical monomial exponents with their parameter conditions.
The twisted families (`theorem1` .. `theorem4`) modify a Gold power map by
trace-gated correction terms; each one comes with the graph-side linear
witness (`theorem12_ccz_witness`, `example1_witness`) that explains where
the twist comes from, and those witness constructors re-check the defining
identities (involutions, scaling, inverse closed forms) on every call.

All builders take an explicit :class:`~vbfkit.gf2m.Field` context and return
plain lookup tables, so outputs from different reduction polynomials can be
compared spectrum-by-spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from vbfkit.ccz import (
    BinLinearMap,
    CczWitness,
    GcdViolationError,
    graph_image,
    identity_map,
    map_compose,
    map_inverse,
    map_transpose,
)
from vbfkit.gf2m import Field
from vbfkit.vbf import FuncTable, compose, invert, is_permutation, monomial

__all__ = [
    "ConditionViolatedError",
    "DivisibilityViolatedError",
    "FamilySpec",
    "ParityViolatedError",
    "ZeroElementError",
    "example1_witness",
    "f8_side_condition",
    "family_exponent",
    "theorem1",
    "theorem12_ccz_witness",
    "theorem2",
    "theorem3",
    "theorem3_f1",
    "theorem4",
    "theorem4_f1_inverse",
]


class ConditionViolatedError(ValueError):
    """A family parameter fails a condition the construction needs."""


class ParityViolatedError(ConditionViolatedError):
    """The extension degree has the wrong parity for this family."""


class DivisibilityViolatedError(ConditionViolatedError):
    """The extension degree misses a required divisibility."""


class ZeroElementError(ConditionViolatedError):
    """A scaling element that must be nonzero is zero."""


@dataclass(frozen=True)
class FamilySpec:
    """Parameter bundle naming one instance of a function family.

    `family` is a case-insensitive tag: "gold", "kasami", "welch", "niho",
    "inverse", "dobbertin" for the power families, or "thm1" .. "thm4" for
    the twisted ones.  Only the parameters a family actually uses need to
    be set; redundant ones are cross-checked.
    """

    family: str
    m: int
    i: int | None = None
    n: int | None = None
    t: int | None = None
    a: int | None = None


def _require_index(i: int, m: int, strict: bool) -> None:
    if i < 1:
        raise ConditionViolatedError("Frobenius index must be positive")
    if strict and math.gcd(i, m) != 1:
        raise GcdViolationError(f"gcd({i}, {m}) != 1")


def _checked_i(spec: FamilySpec) -> int:
    if spec.i is None:
        raise ConditionViolatedError(f"{spec.family} needs the index i")
    _require_index(spec.i, spec.m, strict=True)
    return spec.i


def _half_degree(spec: FamilySpec) -> int:
    """t with m = 2t + 1, cross-checked against an explicit t if given."""
    if spec.m % 2 == 0:
        raise ParityViolatedError(f"{spec.family} needs odd m (m = 2t + 1)")
    t = (spec.m - 1) // 2
    if spec.t is not None and spec.t != t:
        raise ConditionViolatedError(f"t = {spec.t} inconsistent with m = {spec.m}")
    return t


def family_exponent(spec: FamilySpec) -> int:
    """Exponent d of the named power family x^d, conditions checked."""
    fam = spec.family.lower()
    m = spec.m
    if m < 2:
        raise ConditionViolatedError("extension degree must be at least 2")
    if fam == "gold":
        return (1 << _checked_i(spec)) + 1
    if fam == "kasami":
        i = _checked_i(spec)
        return (1 << (2 * i)) - (1 << i) + 1
    if fam == "welch":
        return (1 << _half_degree(spec)) + 3
    if fam == "niho":
        t = _half_degree(spec)
        if t % 2 == 0:
            return (1 << t) + (1 << (t // 2)) - 1
        return (1 << t) + (1 << ((3 * t + 1) // 2)) - 1
    if fam == "inverse":
        return (1 << (2 * _half_degree(spec))) - 1
    if fam == "dobbertin":
        if m % 5:
            raise DivisibilityViolatedError("dobbertin needs m = 5i")
        i = m // 5
        if spec.i is not None and spec.i != i:
            raise ConditionViolatedError(f"i = {spec.i} inconsistent with m = {m}")
        return (1 << (4 * i)) + (1 << (3 * i)) + (1 << (2 * i)) + (1 << i) - 1
    raise ConditionViolatedError(f"not a power family: {spec.family!r}")


# ------------------------------------------------------- twisted families

def _rel_trace_many(ctx: Field, arr: np.ndarray, n: int) -> np.ndarray:
    """Relative trace onto the 2^n-element subfield, elementwise."""
    out = np.asarray(arr).copy()
    cur = arr
    for _ in range(ctx.m // n - 1):
        cur = ctx.pow_many(cur, 1 << n)
        out = out ^ cur
    return out


def theorem1(ctx: Field, i: int, relaxed: bool = False) -> FuncTable:
    """Gold map twisted by its own trace gate, for odd extension degrees.

    x^(2^i+1) + (x^(2^i) + x) tr(x^(2^i+1) + x).  With gcd(i, m) = 1 the
    result is AB of algebraic degree 3.  `relaxed` drops the gcd condition;
    the output is then merely plateaued, matching the power map's spectra.
    """
    if ctx.m % 2 == 0:
        raise ParityViolatedError("odd extension degree required")
    if ctx.m <= 3:
        raise ConditionViolatedError("the cubic twist needs m > 3")
    _require_index(i, ctx.m, strict=not relaxed)
    xs = np.arange(ctx.size, dtype=np.int64)
    e = (1 << i) + 1
    xe = ctx.pow_many(xs, e)
    x2i = ctx.pow_many(xs, 1 << i)
    gate = ctx.trace_table()[xe ^ xs].astype(np.int64)
    return FuncTable(ctx, xe ^ ((x2i ^ xs) * gate))


def theorem2(ctx: Field, i: int, relaxed: bool = False) -> FuncTable:
    """Gold map twisted by an affine trace gate, for even extension degrees.

    x^(2^i+1) + (x^(2^i) + x + 1) tr(x^(2^i+1)).  With gcd(i, m) = 1 the
    result is APN of algebraic degree 3.  `relaxed` allows gcd(i, m) = s > 1
    whenever m/s is odd; the output then shares the power map's spectra.
    """
    if ctx.m % 2:
        raise ParityViolatedError("even extension degree required")
    if ctx.m < 4:
        raise ConditionViolatedError("the cubic twist needs m >= 4")
    _require_index(i, ctx.m, strict=not relaxed)
    if relaxed and (ctx.m // math.gcd(i, ctx.m)) % 2 == 0:
        raise ConditionViolatedError("plateaued relaxation needs m / gcd(i, m) odd")
    xs = np.arange(ctx.size, dtype=np.int64)
    e = (1 << i) + 1
    xe = ctx.pow_many(xs, e)
    x2i = ctx.pow_many(xs, 1 << i)
    gate = ctx.trace_table()[xe].astype(np.int64)
    return FuncTable(ctx, xe ^ ((x2i ^ xs ^ 1) * gate))


def f8_side_condition(i: int) -> bool:
    """Scan of the 21 pairs in F_8 gating the subfield-twist permutation.

    True iff (u^(2^i+1) w)^2 + (u^(2^i+1) w)^4 != u for every nonzero u and
    every nonzero w of trace zero (7 x 3 pairs; only i mod 3 matters).
    """
    f8 = Field(3)
    e = (1 << (i % 3)) + 1
    for u in range(1, 8):
        ue = f8.pow(u, e)
        for w in range(1, 8):
            if f8.trace(w):
                continue
            z = f8.mul(ue, w)
            if f8.mul(z, z) ^ f8.pow(z, 4) == u:
                return False
    return True


def theorem3_f1(ctx: Field, i: int) -> FuncTable:
    """The order-6 shift x + T^2 + T^4 with T = tr_{m/3}(x^(2^i+1)).

    Verified on construction: the table is a permutation and its sixth
    compositional power is the identity.
    """
    if ctx.m % 6:
        raise DivisibilityViolatedError("m must be divisible by 6")
    _require_index(i, ctx.m, strict=True)
    xs = np.arange(ctx.size, dtype=np.int64)
    t = _rel_trace_many(ctx, ctx.pow_many(xs, (1 << i) + 1), 3)
    f1 = FuncTable(ctx, xs ^ ctx.mul_many(t, t) ^ ctx.pow_many(t, 4))
    if not is_permutation(f1):
        raise RuntimeError("subfield shift unexpectedly failed to permute")
    acc = f1
    for _ in range(5):
        acc = compose(f1, acc)
    if acc != monomial(ctx, 1):
        raise RuntimeError("sixth compositional power is not the identity")
    return f1


def theorem3(ctx: Field, i: int) -> FuncTable:
    """Quartic APN family on degrees divisible by 6.

    Built as the Gold power map composed with the inverse of the order-6
    subfield shift; the F_8 side condition guarantees that shift permutes.
    """
    if ctx.m % 6:
        raise DivisibilityViolatedError("m must be divisible by 6")
    _require_index(i, ctx.m, strict=True)
    if not f8_side_condition(i):
        raise ConditionViolatedError("octic side condition fails for this index")
    f1 = theorem3_f1(ctx, i)
    return compose(monomial(ctx, (1 << i) + 1), invert(f1))


def _theorem4_preconditions(ctx: Field, n: int, i: int) -> None:
    if ctx.m % 2 == 0:
        raise ParityViolatedError("odd extension degree required")
    _require_index(i, ctx.m, strict=True)
    if n < 1 or ctx.m % n:
        raise ConditionViolatedError("subfield degree must divide m")
    if n == ctx.m:
        raise ConditionViolatedError("a proper subfield is required (n != m)")


def theorem4(ctx: Field, n: int, i: int) -> FuncTable:
    """AB family of degree n + 2 mixing a Gold map with a subfield trace.

    With t = tr_{m/n}(x) and B = t^(2^i+1) + tr_{m/n}(x^(2^i+1)) + t:

        x^(2^i+1) + tr_{m/n}(x^(2^i+1)) + x^(2^i) t + x t^(2^i)
        + B^(1/(2^i+1)) (x^(2^i) + t^(2^i) + 1) + B^(2^i/(2^i+1)) (x + t)

    The fractional powers are the true e-th-root exponents (0 maps to 0);
    n = 1 collapses the formula onto `theorem1`.
    """
    _theorem4_preconditions(ctx, n, i)
    xs = np.arange(ctx.size, dtype=np.int64)
    e = (1 << i) + 1
    xe = ctx.pow_many(xs, e)
    x2i = ctx.pow_many(xs, 1 << i)
    t = _rel_trace_many(ctx, xs, n)
    te = _rel_trace_many(ctx, xe, n)
    t2i = ctx.pow_many(t, 1 << i)
    b = ctx.pow_many(t, e) ^ te ^ t
    d1 = ctx.inverse_exponent(e)
    d2 = (d1 * (1 << i)) % ctx.order
    root = ctx.pow_many(b, d1)
    root2i = ctx.pow_many(b, d2)
    out = xe ^ te
    out = out ^ ctx.mul_many(x2i, t) ^ ctx.mul_many(xs, t2i)
    out = out ^ ctx.mul_many(root, x2i ^ t2i ^ 1)
    out = out ^ ctx.mul_many(root2i, xs ^ t)
    return FuncTable(ctx, out)


def theorem4_f1_inverse(ctx: Field, n: int, i: int, y: int) -> int:
    """Closed-form inverse of F1(x) = x + tr_{m/n}(x) + tr_{m/n}(x^(2^i+1)).

    Returns y + B^(1/(2^i+1)) + tr_{m/n}(y) with B as in `theorem4`, which
    composes with F1 to the identity at every point.
    """
    _theorem4_preconditions(ctx, n, i)
    if not 0 <= y < ctx.size:
        raise ValueError("element outside the field")
    e = (1 << i) + 1
    t = ctx.subfield_trace(y, n)
    b = ctx.pow(t, e) ^ ctx.subfield_trace(ctx.pow(y, e), n) ^ t
    return y ^ ctx.pow(b, ctx.inverse_exponent(e)) ^ t


# -------------------------------------------------------- graph witnesses

def _trace_mask(ctx: Field, d: int) -> int:
    """Row mask of the functional x -> tr(d x)."""
    return sum(ctx.trace(ctx.mul(d, 1 << k)) << k for k in range(ctx.m))


def _verify_witness(
    ctx: Field, w: CczWitness, base: FuncTable, a: int, e: int
) -> None:
    """Re-check the identities that make a twist witness correct."""
    if map_compose(w.L, w.L).rows != identity_map(2 * ctx.m).rows:
        raise RuntimeError("graph-side map is not an involution")
    if compose(w.F1, w.F1) != monomial(ctx, 1):
        raise RuntimeError("first projection is not an involution")
    xs = np.arange(ctx.size, dtype=np.int64)
    scaled = ctx.mul_many(
        ctx.pow(a, e), base.as_array()[ctx.mul_many(xs, ctx.inv(a))]
    )
    if compose(w.F2, invert(w.F1)) != FuncTable(ctx, scaled):
        raise RuntimeError("scaling identity failed")


def theorem12_ccz_witness(ctx: Field, which: int, i: int, a: int = 1) -> CczWitness:
    """Graph-side witness carrying the Gold graph onto a twisted family.

    `which` = 1 builds the odd-degree witness (both output halves mix both
    inputs), `which` = 2 the even-degree one (only the first half mixes).
    The returned map is an involution, its first projection F1 is an
    involution, and F2 o F1^(-1) equals the twisted table scaled by a — all
    three identities are re-verified here on every call, against the direct
    `theorem1`/`theorem2` output.  `a` = 1 gives the twisted table exactly.
    """
    if not 0 <= a < ctx.size:
        raise ValueError("element outside the field")
    if a == 0:
        raise ZeroElementError("the scaling element must be nonzero")
    m = ctx.m
    e = (1 << i) + 1
    if which == 1:
        base = theorem1(ctx, i)
    elif which == 2:
        base = theorem2(ctx, i)
    else:
        raise ConditionViolatedError("witness selector must be 1 or 2")
    ae = ctx.pow(a, e)
    mask_a = _trace_mask(ctx, ctx.inv(a))
    mask_ae = _trace_mask(ctx, ctx.inv(ae))
    rows = []
    if which == 1:
        mix = mask_a | (mask_ae << m)
        for r in range(m):
            rows.append((1 << r) ^ (mix if (a >> r) & 1 else 0))
        for r in range(m):
            rows.append((1 << (m + r)) ^ (mix if (ae >> r) & 1 else 0))
    else:
        for r in range(m):
            rows.append((1 << r) ^ ((mask_ae << m) if (a >> r) & 1 else 0))
        rows.extend(1 << (m + r) for r in range(m))
    w = graph_image(BinLinearMap(2 * m, 2 * m, rows), monomial(ctx, e))
    _verify_witness(ctx, w, base, a, e)
    return w


def example1_witness(ctx: Field, i: int) -> CczWitness:
    """Two-variable graph witness that still lands in the Gold orbit.

    The first output half is x + tr(x) + M(y) where M inverts
    z -> z + z^(2^i) + tr(z); the second is y + tr(x).  Both projections of
    the Gold graph depend on both halves, yet the transformed table stays
    EA-equivalent to the inverted power map — the witness marks the boundary
    of what two-variable mixing alone can prove.
    """
    m = ctx.m
    if m % 2 == 0:
        raise ParityViolatedError("odd extension degree required")
    _require_index(i, m, strict=True)
    cols = [
        (1 << k) ^ ctx.pow(1 << k, 1 << i) ^ ctx.trace(1 << k) for k in range(m)
    ]
    mix = map_inverse(map_transpose(BinLinearMap(m, m, cols)))
    tmask = _trace_mask(ctx, 1)
    # tr(x) lands on the basis coordinate of the element 1, i.e. row 0 only
    rows = [
        (1 << r) ^ (tmask if r == 0 else 0) ^ (mix.rows[r] << m) for r in range(m)
    ]
    rows += [(1 << (m + r)) ^ (tmask if r == 0 else 0) for r in range(m)]
    w = graph_image(BinLinearMap(2 * m, 2 * m, rows), monomial(ctx, (1 << i) + 1))
    if not is_permutation(w.F1):
        raise RuntimeError("first projection unexpectedly failed to permute")
    return w
