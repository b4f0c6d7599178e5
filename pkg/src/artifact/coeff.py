"""Exact coefficient field tower and its numeric evaluation backend.

The ground field is Frac(Z[u^1, v^1]) extended by one generator w with
w^2 = u^2 + v^2.  The substitutions r = u^2, s = v^2 make every constant
appearing in the library (including half-integer powers of r, s, r*s and
the square root of r+s) an element of this field.

Values of every type here are immutable after construction and all
operations are pure functions.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable

import mpmath
import sympy


class CoeffError(ArithmeticError):
    """Raised for division by zero, poles, and malformed descriptors."""


# ---------------------------------------------------------------------------
# Laurent polynomials in (u, v, w) with the rewriting rule w^2 -> u^2 + v^2.
# Internal representation: dict {(exp_u, exp_v, exp_w): Fraction} with
# exp_w in {0, 1} and no zero coefficients.
# ---------------------------------------------------------------------------

Key = tuple[int, int, int]
Poly = dict


def _padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for k, c in b.items():
        nc = out.get(k, 0) + c
        if nc:
            out[k] = nc
        else:
            out.pop(k, None)
    return out


def _pneg(a: Poly) -> Poly:
    return {k: -c for k, c in a.items()}


def _pscale(a: Poly, c) -> Poly:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for (au, av, aw), ac in a.items():
        for (bu, bv, bw), bc in b.items():
            c = ac * bc
            w = aw + bw
            if w < 2:
                keys = (((au + bu, av + bv, w), c),)
            else:
                # w^2 = u^2 + v^2
                keys = (((au + bu + 2, av + bv, 0), c),
                        ((au + bu, av + bv + 2, 0), c))
            for k, cc in keys:
                nc = out.get(k, 0) + cc
                if nc:
                    out[k] = nc
                else:
                    out.pop(k, None)
    return out


_P_ONE: Poly = {(0, 0, 0): Fraction(1)}


def _pshift(a: Poly, du: int, dv: int) -> Poly:
    if du == 0 and dv == 0:
        return a
    return {(ku + du, kv + dv, kw): c for (ku, kv, kw), c in a.items()}


_U, _V = sympy.symbols("u v")


def _to_sympy(a: Poly):
    """Convert a w-free polynomial with nonnegative exponents."""
    expr = 0
    for (ku, kv, kw), c in a.items():
        assert kw == 0
        expr += sympy.Rational(c.numerator, c.denominator) * _U**ku * _V**kv
    return sympy.Poly(expr, _U, _V, domain="QQ")


def _from_sympy(p) -> Poly:
    out: Poly = {}
    for (ku, kv), c in p.terms():
        out[(ku, kv, 0)] = Fraction(c.p, c.q)
    return out


def _split_w(a: Poly) -> tuple[Poly, Poly]:
    p0: Poly = {}
    p1: Poly = {}
    for (ku, kv, kw), c in a.items():
        (p1 if kw else p0)[(ku, kv, 0)] = c
    return p0, p1


def _key_sort(a: Poly) -> tuple:
    return tuple(sorted(a.items(), key=lambda kv: kv[0], reverse=True))


# ---------------------------------------------------------------------------
# FieldElem
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaurentMonomial:
    coefficient: Fraction
    exp_u: int
    exp_v: int
    exp_w: int


class FieldElem:
    """Canonical fraction of Laurent polynomials in (u, v, w).

    Canonical form: the denominator is w-free with minimal exponents zero
    in each variable; a single-monomial denominator is absorbed into the
    (Laurent) numerator; numerator and denominator are gcd-reduced with
    joint integer content 1; the lexicographically leading denominator
    monomial has positive coefficient.  Structural equality of canonical
    forms coincides with mathematical equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly, _canonical: bool = False):
        if not _canonical:
            num, den = _canonicalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_int(n: int) -> "FieldElem":
        if n == 0:
            return ZERO
        return FieldElem({(0, 0, 0): Fraction(n)}, dict(_P_ONE), _canonical=True)

    @staticmethod
    def from_fraction(q: Fraction) -> "FieldElem":
        if q == 0:
            return ZERO
        return FieldElem({(0, 0, 0): Fraction(q)}, dict(_P_ONE))

    @staticmethod
    def monomial(coef, exp_u: int = 0, exp_v: int = 0, exp_w: int = 0) -> "FieldElem":
        c = Fraction(coef)
        if c == 0:
            return ZERO
        num = {(exp_u, exp_v, exp_w % 2): c}
        if exp_w >= 2:
            num = _pmul(num, _w_power_reducer(exp_w))
        return FieldElem(num, dict(_P_ONE))

    # -- predicates ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _P_ONE and self.den == _P_ONE

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "FieldElem") -> "FieldElem":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return FieldElem(_padd(self.num, other.num), dict(self.den))
        return FieldElem(_padd(_pmul(self.num, other.den),
                               _pmul(other.num, self.den)),
                         _pmul(self.den, other.den))

    def __neg__(self) -> "FieldElem":
        return FieldElem(_pneg(self.num), dict(self.den), _canonical=True)

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        return self + (-other)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        if self.is_zero() or other.is_zero():
            return ZERO
        return FieldElem(_pmul(self.num, other.num),
                         _pmul(self.den, other.den))

    def inv(self) -> "FieldElem":
        if self.is_zero():
            raise CoeffError("division by zero in the coefficient field")
        return FieldElem(dict(self.den), dict(self.num))

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return self * other.inv()

    def __pow__(self, k: int) -> "FieldElem":
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- comparisons ----------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((_key_sort(self.num), _key_sort(self.den)))
            object.__setattr__(self, "_hash", h)
        return h

    # -- views -----------------------------------------------------------
    def monomials(self) -> tuple[tuple[LaurentMonomial, ...], tuple[LaurentMonomial, ...]]:
        n = tuple(LaurentMonomial(c, ku, kv, kw)
                  for (ku, kv, kw), c in _key_sort(self.num))
        d = tuple(LaurentMonomial(c, ku, kv, kw)
                  for (ku, kv, kw), c in _key_sort(self.den))
        return n, d

    def complexity(self) -> int:
        return len(self.num) + len(self.den)

    # -- serialization -----------------------------------------------------
    def text(self) -> str:
        if self.is_zero():
            return "0"
        num = _poly_text(self.num)
        if self.den == _P_ONE:
            return num
        return "(" + num + ") / (" + _poly_text(self.den) + ")"

    def __repr__(self):
        return f"FieldElem({self.text()})"


def _poly_text(p: Poly) -> str:
    parts = []
    for (ku, kv, kw), c in _key_sort(p):
        frag = [str(c) if c.denominator != 1 else str(c.numerator)]
        if ku:
            frag.append(f"u^{ku}")
        if kv:
            frag.append(f"v^{kv}")
        if kw:
            frag.append(f"w^{kw}")
        parts.append("*".join(frag))
    return " + ".join(parts)


def _w_power_reducer(exp_w: int) -> Poly:
    # (u^2+v^2)^(exp_w // 2)
    out = dict(_P_ONE)
    base = {(2, 0, 0): Fraction(1), (0, 2, 0): Fraction(1)}
    for _ in range(exp_w // 2):
        out = _pmul(out, base)
    return out


def _canonicalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise CoeffError("zero denominator")
    if not num:
        return {}, dict(_P_ONE)
    # clear w from the denominator via the conjugate
    d0, d1 = _split_w(den)
    if d1:
        conj = _padd(d0, {(ku, kv, 1): -c for (ku, kv, _), c in d1.items()})
        num = _pmul(num, conj)
        den = _pmul(den, conj)
        if not num:
            return {}, dict(_P_ONE)
        assert all(kw == 0 for (_, _, kw) in den)
    if len(den) == 1:
        # absorb the monomial denominator into the Laurent numerator
        (du, dv, _), dc = next(iter(den.items()))
        num = {(ku - du, kv - dv, kw): c / dc for (ku, kv, kw), c in num.items()}
        den = dict(_P_ONE)
    else:
        num, den = _reduce_fraction(num, den)
        if len(den) == 1:
            return _canonicalize(num, den)
    # joint integer content and sign normalization
    coefs = list(num.values()) + list(den.values())
    lcm_d = 1
    for c in coefs:
        lcm_d = lcm_d * c.denominator // _int_gcd(lcm_d, c.denominator)
    gcd_n = 0
    for c in coefs:
        gcd_n = _int_gcd(gcd_n, abs(c.numerator))
    scale = Fraction(lcm_d, gcd_n)
    lead = max(den.keys())
    if den[lead] < 0:
        scale = -scale
    if scale != 1:
        num = _pscale(num, scale)
        den = _pscale(den, scale)
    return num, den


def _reduce_fraction(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Full gcd reduction for a multi-term w-free denominator."""
    # shift the numerator to nonnegative exponents, remembering the shift
    nu = min(k[0] for k in num)
    nv = min(k[1] for k in num)
    du = min(k[0] for k in den)
    dv = min(k[1] for k in den)
    num_s = _pshift(num, -nu, -nv)
    den_s = _pshift(den, -du, -dv)
    n0, n1 = _split_w(num_s)
    polys = [p for p in (n0, n1, den_s) if p]
    g = _to_sympy(polys[0])
    for p in polys[1:]:
        g = sympy.gcd(g, _to_sympy(p))
        if g.is_one:
            break
    if not g.is_one:
        n0 = _from_sympy(sympy.div(_to_sympy(n0), g)[0]) if n0 else {}
        n1 = _from_sympy(sympy.div(_to_sympy(n1), g)[0]) if n1 else {}
        den_s = _from_sympy(sympy.div(_to_sympy(den_s), g)[0])
    num_r = _padd(n0, {(ku, kv, 1): c for (ku, kv, _), c in n1.items()})
    # restore the Laurent offset: num/den = num_s*u^nu*v^nv / (den_s*u^du*v^dv)
    num_r = _pshift(num_r, nu - du, nv - dv)
    # re-zero the denominator minimum exponents (kept at 0 by construction)
    mu = min(k[0] for k in den_s)
    mv = min(k[1] for k in den_s)
    if mu or mv:
        den_s = _pshift(den_s, -mu, -mv)
        num_r = _pshift(num_r, -mu, -mv)
    return num_r, den_s


ZERO = FieldElem({}, dict(_P_ONE), _canonical=True)
ONE = FieldElem(dict(_P_ONE), dict(_P_ONE), _canonical=True)

U = FieldElem.monomial(1, 1, 0, 0)
V = FieldElem.monomial(1, 0, 1, 0)
W = FieldElem.monomial(1, 0, 0, 1)
R = FieldElem.monomial(1, 2, 0, 0)   # r = u^2
S = FieldElem.monomial(1, 0, 2, 0)   # s = v^2


def swap_uv(x: FieldElem) -> FieldElem:
    """Field automorphism exchanging u and v (hence r and s); fixes w."""
    num = {(kv, ku, kw): c for (ku, kv, kw), c in x.num.items()}
    den = {(kv, ku, kw): c for (ku, kv, kw), c in x.den.items()}
    return FieldElem(num, den)


def invert_rs(x: FieldElem) -> FieldElem:
    """Field automorphism u -> 1/u, v -> 1/v, w -> w/(uv).

    It sends r -> r^-1, s -> s^-1 and respects w^2 = u^2 + v^2 since
    (w/(uv))^2 = u^-2 + v^-2.
    """
    num = {(-ku - kw, -kv - kw, kw): c for (ku, kv, kw), c in x.num.items()}
    den = {(-ku - kw, -kv - kw, kw): c for (ku, kv, kw), c in x.den.items()}
    return FieldElem(num, den)


def fe_sqrt(x: FieldElem) -> FieldElem:
    """Square root within the field, when one exists.

    Handles single monomials with even exponents and square rational
    coefficient, optionally times (u^2 + v^2) (whose root is w).
    """
    if x.is_zero():
        return ZERO
    for wfac in (False, True):
        cand = x
        if wfac:
            cand = x / (R + S)
        if cand.den != _P_ONE or len(cand.num) != 1:
            continue
        (ku, kv, kw), c = next(iter(cand.num.items()))
        if kw or ku % 2 or kv % 2 or c < 0:
            continue
        rn = _isqrt_exact(c.numerator)
        rd = _isqrt_exact(c.denominator)
        if rn is None or rd is None:
            continue
        root = FieldElem.monomial(Fraction(rn, rd), ku // 2, kv // 2, 0)
        return root * W if wfac else root
    raise CoeffError(f"no square root in the field: {x.text()}")


def _isqrt_exact(n: int):
    from math import isqrt
    r = isqrt(n)
    return r if r * r == n else None


# ---------------------------------------------------------------------------
# substitute_rs: builder from (r, s)-descriptors
# ---------------------------------------------------------------------------

def substitute_rs(expr: str) -> FieldElem:
    """Build an exact FieldElem from an expression in r and s.

    Grammar: names ``r``, ``s``, ``w``; integer literals; ``+ - * / **``
    with integer exponents; ``sqrt(x)`` for the square roots the field
    supports (monomials in r, s and rational multiples of r+s).
    """
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise CoeffError(f"malformed descriptor: {expr!r}") from exc
    return _eval_node(tree.body)


_NAMES = {"r": R, "s": S, "w": W, "u": U, "v": V}


def _eval_node(node) -> FieldElem:
    if isinstance(node, ast.Constant):
        if isinstance(node.value, int):
            return FieldElem.from_int(node.value)
        raise CoeffError(f"non-integer literal {node.value!r}")
    if isinstance(node, ast.Name):
        try:
            return _NAMES[node.id]
        except KeyError:
            raise CoeffError(f"unknown symbol {node.id!r}") from None
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval_node(node.operand)
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = _eval_node(node.left)
            exp = node.right
            neg = False
            if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                neg, exp = True, exp.operand
            if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                raise CoeffError("exponent must be an integer literal")
            k = -exp.value if neg else exp.value
            return base ** k
        a = _eval_node(node.left)
        b = _eval_node(node.right)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            return a / b
        raise CoeffError("unsupported operator")
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) \
            and node.func.id == "sqrt" and len(node.args) == 1:
        return fe_sqrt(_eval_node(node.args[0]))
    raise CoeffError("unsupported descriptor construct")


def rs_power(base: str, two_exp: int) -> FieldElem:
    """(r^-1 s)-style powers with half-integer exponents.

    ``base`` is one of "r", "s", "rs", "r/s", "s/r"; ``two_exp`` is twice
    the desired exponent (so half-integer powers stay exact).
    """
    table = {"r": U, "s": V, "rs": U * V, "r/s": U / V, "s/r": V / U}
    return table[base] ** two_exp


# ---------------------------------------------------------------------------
# Numeric backend
# ---------------------------------------------------------------------------

class NumericElem:
    """High-precision complex number with explicit precision bits."""

    __slots__ = ("value", "precision_bits")

    def __init__(self, value, precision_bits: int = 128):
        self.precision_bits = precision_bits
        with mpmath.workprec(precision_bits):
            self.value = mpmath.mpmathify(value)

    def _wrap(self, v) -> "NumericElem":
        out = object.__new__(NumericElem)
        out.value = v
        out.precision_bits = self.precision_bits
        return out

    def is_zero(self) -> bool:
        return self.value == 0

    def magnitude(self) -> float:
        return float(abs(self.value))

    def __add__(self, other):
        with mpmath.workprec(self.precision_bits):
            return self._wrap(self.value + other.value)

    def __sub__(self, other):
        with mpmath.workprec(self.precision_bits):
            return self._wrap(self.value - other.value)

    def __neg__(self):
        # mpf unary minus rounds to the global working precision, so the
        # context must be widened here just like for the binary operations
        with mpmath.workprec(self.precision_bits):
            return self._wrap(-self.value)

    def __mul__(self, other):
        with mpmath.workprec(self.precision_bits):
            return self._wrap(self.value * other.value)

    def inv(self):
        if self.value == 0:
            raise CoeffError("division by zero (numeric)")
        with mpmath.workprec(self.precision_bits):
            return self._wrap(1 / self.value)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, k: int):
        with mpmath.workprec(self.precision_bits):
            return self._wrap(self.value ** k)

    def close_to(self, other, tol: float = 1e-20) -> bool:
        return abs(self.value - other.value) <= tol

    def __eq__(self, other):
        if not isinstance(other, NumericElem):
            return NotImplemented
        return self.value == other.value

    def __repr__(self):
        return f"NumericElem({self.value}, bits={self.precision_bits})"

    def text(self) -> str:
        with mpmath.workprec(self.precision_bits):
            return mpmath.nstr(self.value, 30)


def evaluate(a: FieldElem, u_value, v_value, precision: int = 128) -> NumericElem:
    """Evaluate at a numeric point; w maps to the principal sqrt(u^2+v^2).

    Rational sample points take an exact path: the w-free and w-linear
    parts of numerator and denominator are accumulated over Fraction, so
    the only rounding happens in the final sqrt, products, and division.
    This avoids catastrophic cancellation among large monomials.
    """
    try:
        uf, vf = Fraction(u_value), Fraction(v_value)
    except (ValueError, TypeError):
        uf = vf = None
    if uf is not None:
        if uf == 0 or vf == 0 or uf * uf == vf * vf:
            raise CoeffError("evaluation point must satisfy u,v != 0 and u^2 != v^2")
        w2 = uf * uf + vf * vf

        def split(p: Poly):
            plain, wpart = Fraction(0), Fraction(0)
            for (ku, kv, kw), c in p.items():
                t = c * uf ** ku * vf ** kv
                if kw:
                    wpart += t
                else:
                    plain += t
            return plain, wpart

        an, bn = split(a.num)
        ad, bd = split(a.den)
        with mpmath.workprec(precision + 64):
            w = mpmath.sqrt(mpmath.mpf(w2.numerator) / w2.denominator)
            numv = (mpmath.mpf(an.numerator) / an.denominator
                    + (mpmath.mpf(bn.numerator) / bn.denominator) * w)
            denv = (mpmath.mpf(ad.numerator) / ad.denominator
                    + (mpmath.mpf(bd.numerator) / bd.denominator) * w)
            if denv == 0:
                raise CoeffError(f"pole: denominator {_poly_text(a.den)} vanishes")
            return NumericElem(numv / denv, precision)
    with mpmath.workprec(precision):
        u = mpmath.mpmathify(u_value)
        v = mpmath.mpmathify(v_value)
        if u == 0 or v == 0 or u * u == v * v:
            raise CoeffError("evaluation point must satisfy u,v != 0 and u^2 != v^2")
        w = mpmath.sqrt(u * u + v * v)
        den = _poly_eval(a.den, u, v, w)
        if den == 0:
            raise CoeffError(f"pole: denominator {_poly_text(a.den)} vanishes")
        return NumericElem(_poly_eval(a.num, u, v, w) / den, precision)


def _poly_eval(p: Poly, u, v, w):
    total = mpmath.mpf(0)
    for (ku, kv, kw), c in p.items():
        term = mpmath.mpf(c.numerator) / c.denominator
        term *= u ** ku * v ** kv
        if kw:
            term *= w
        total += term
    return total


# ---------------------------------------------------------------------------
# RatZ: rational functions in the spectral variable z
# ---------------------------------------------------------------------------

class RatZ:
    """Rational function in z with FieldElem (or NumericElem) coefficients.

    Polynomials are stored low-to-high degree.  Canonical form: gcd-reduced
    in z with a monic denominator (exact coefficient fields only; the
    numeric backend skips gcd reduction and only normalizes).
    """

    __slots__ = ("num", "den", "exact")

    def __init__(self, num, den=None, _canonical: bool = False):
        num = list(num)
        den = list(den) if den is not None else None
        exact = True
        probe = next((c for c in num if not _c_is_zero(c)), None)
        if probe is None and den:
            probe = next((c for c in den if not _c_is_zero(c)), None)
        if isinstance(probe, NumericElem):
            exact = False
        self.exact = exact
        if den is None:
            den = [_one_like(probe)] if probe is not None else [ONE]
        if not _canonical:
            num, den = _ratz_canonicalize(num, den, exact)
        self.num = tuple(num)
        self.den = tuple(den)

    # -- constructors ---------------------------------------------------
    @staticmethod
    def const(c) -> "RatZ":
        return RatZ([c])

    @staticmethod
    def z(coef=None) -> "RatZ":
        c = coef if coef is not None else ONE
        return RatZ([_zero_like(c), c])

    def is_zero(self) -> bool:
        return all(_c_is_zero(c) for c in self.num)

    def is_one(self) -> bool:
        d = self - RatZ.const(_one_like(self._probe())) if self.num else None
        return d.is_zero() if d is not None else False

    def _probe(self):
        for c in self.num + self.den:
            if not _c_is_zero(c):
                return c
        return ONE

    def degree_pair(self) -> tuple[int, int]:
        return (_pdeg(self.num), _pdeg(self.den))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "RatZ") -> "RatZ":
        if self.den == other.den:
            return RatZ(_zpadd(self.num, other.num), list(self.den))
        return RatZ(_zpadd(_zpmul(self.num, other.den), _zpmul(other.num, self.den)),
                    _zpmul(self.den, other.den))

    def __neg__(self) -> "RatZ":
        return RatZ([-c for c in self.num], list(self.den), _canonical=True)

    def __sub__(self, other: "RatZ") -> "RatZ":
        return self + (-other)

    def __mul__(self, other: "RatZ") -> "RatZ":
        return RatZ(_zpmul(self.num, other.num), _zpmul(self.den, other.den))

    def inv(self) -> "RatZ":
        if self.is_zero():
            raise CoeffError("division by zero in RatZ")
        return RatZ(list(self.den), list(self.num))

    def __truediv__(self, other: "RatZ") -> "RatZ":
        return self * other.inv()

    def __pow__(self, k: int) -> "RatZ":
        if k < 0:
            return self.inv() ** (-k)
        out = RatZ.const(_one_like(self._probe()))
        for _ in range(k):
            out = out * self
        return out

    def compose_inverse(self) -> "RatZ":
        """Substitute z -> z^-1 and clear denominators."""
        m = max(len(self.num), len(self.den)) - 1
        pad = _zero_like(self._probe())
        num = [pad] * (m + 1 - len(self.num)) + list(reversed(self.num))
        den = [pad] * (m + 1 - len(self.den)) + list(reversed(self.den))
        return RatZ(num, den)

    def scale_z(self, c) -> "RatZ":
        """Substitute z -> c*z for a coefficient c."""
        num = [a * (c ** k) for k, a in enumerate(self.num)]
        den = [a * (c ** k) for k, a in enumerate(self.den)]
        return RatZ(num, den)

    def eval_at(self, point):
        """Evaluate at a coefficient-field point."""
        num = _horner(self.num, point)
        den = _horner(self.den, point)
        if _c_is_zero(den):
            raise CoeffError("pole of RatZ at sample point")
        return num * den.inv()

    def __eq__(self, other):
        if not isinstance(other, RatZ):
            return NotImplemented
        if self.exact and other.exact:
            return self.num == other.num and self.den == other.den
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def text(self) -> str:
        num = " ; ".join(c.text() for c in self.num)
        den = " ; ".join(c.text() for c in self.den)
        return f"[{num}] / [{den}]"

    def __repr__(self):
        return f"RatZ({self.text()})"


def _c_is_zero(c) -> bool:
    return c.is_zero()


def _zero_like(c):
    if isinstance(c, NumericElem):
        return NumericElem(0, c.precision_bits)
    return ZERO


def _one_like(c):
    if isinstance(c, NumericElem):
        return NumericElem(1, c.precision_bits)
    return ONE


def _pdeg(p) -> int:
    for i in range(len(p) - 1, -1, -1):
        if not _c_is_zero(p[i]):
            return i
    return -1


def _zptrim(p: list) -> list:
    d = _pdeg(p)
    return list(p[:d + 1]) if d >= 0 else []


def _zpadd(a, b) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(a[i] + b[i])
        elif i < len(a):
            out.append(a[i])
        else:
            out.append(b[i])
    return out


def _zpmul(a, b) -> list:
    if not a or not b:
        return []
    probe = a[0] if not _c_is_zero(a[0]) else (b[0] if b else a[0])
    out = [_zero_like(probe) for _ in range(len(a) + len(b) - 1)]
    for i, ca in enumerate(a):
        if _c_is_zero(ca):
            continue
        for j, cb in enumerate(b):
            if _c_is_zero(cb):
                continue
            out[i + j] = out[i + j] + ca * cb
    return out


def _zpdivmod(a: list, b: list):
    """Polynomial division over the coefficient field."""
    a = _zptrim(a)
    b = _zptrim(b)
    if not b:
        raise CoeffError("division by zero polynomial")
    lead_inv = b[-1].inv()
    q = [_zero_like(b[-1]) for _ in range(max(len(a) - len(b) + 1, 0))]
    r = list(a)
    while _pdeg(r) >= len(b) - 1 and r:
        d = _pdeg(r)
        if d < len(b) - 1:
            break
        c = r[d] * lead_inv
        q[d - (len(b) - 1)] = c
        for i, cb in enumerate(b):
            r[d - (len(b) - 1) + i] = r[d - (len(b) - 1) + i] - c * cb
        r = _zptrim(r)
        if not r:
            break
    return _zptrim(q), _zptrim(r)


def _zpgcd(a: list, b: list) -> list:
    a = _zptrim(a)
    b = _zptrim(b)
    while b:
        _, r = _zpdivmod(a, b)
        a, b = b, _zptrim(r)
    if a:
        lead_inv = a[-1].inv()
        a = [c * lead_inv for c in a]
    return a


def _ratz_canonicalize(num: list, den: list, exact: bool):
    num = _zptrim(num)
    den = _zptrim(den)
    if not den:
        raise CoeffError("zero denominator in RatZ")
    if not num:
        return [], [_one_like(den[-1])]
    if exact:
        g = _zpgcd(num, den)
        if len(g) > 1:
            num, _ = _zpdivmod(num, g)
            den, _ = _zpdivmod(den, g)
    lead_inv = den[-1].inv()
    num = [c * lead_inv for c in num]
    den = [c * lead_inv for c in den]
    return num, den


def _horner(p, point):
    if not p:
        return _zero_like(point)
    acc = _zero_like(point)
    for c in reversed(p):
        acc = acc * point + c
    return acc


_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
           61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113]


def prime_points(k: int) -> list[int]:
    """Deterministic distinct sample points for identity testing in z."""
    if k <= len(_PRIMES):
        return _PRIMES[:k]
    pts = list(_PRIMES)
    c = _PRIMES[-1]
    while len(pts) < k:
        c += 2
        if all(c % p for p in _PRIMES if p * p <= c):
            pts.append(c)
    return pts


def ratz_identity_test(a: RatZ, b: RatZ, mode: str = "exact", samples: int = 0) -> bool:
    """Compare rational functions exactly or by sampling at prime points."""
    if mode == "exact":
        return (a - b).is_zero()
    if mode != "sampled":
        raise CoeffError(f"unknown mode {mode!r}")
    d = a - b
    na, da = d.degree_pair()
    bound = max(na, 0) + 1
    if samples < bound:
        raise CoeffError(f"sampled mode requires at least {bound} points, got {samples}")
    probe = d._probe()
    used = 0
    for p in prime_points(samples + 16):
        if used >= samples:
            break
        point = _const_point(probe, p)
        try:
            val = d.eval_at(point)
        except CoeffError:
            continue  # pole point: skip and replace
        used += 1
        if isinstance(val, NumericElem):
            if val.magnitude() > 1e-20:
                return False
        elif not val.is_zero():
            return False
    return used >= samples


def _const_point(probe, n: int):
    if isinstance(probe, NumericElem):
        return NumericElem(n, probe.precision_bits)
    return FieldElem.from_int(n)
