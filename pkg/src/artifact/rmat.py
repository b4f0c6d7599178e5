"""Constant and spectral R-matrices of the two-parameter type B family.

All matrices act on V tensor V where dim V = N = 2n+1, with the tensor
index convention of linalg.kron.  A matrix written abstractly as
sum M^{jl}_{ik} E_ij x E_kl has the entry M^{jl}_{ik} at row (i,k),
column (j,l).
"""

from __future__ import annotations

from . import coeff
from .coeff import FieldElem, RatZ, ONE, ZERO, U, V, R, S
from .linalg import (RingMatrix, Ring, FIELD, RATZ, IndexScheme, flip_P,
                     invert, apply_poly)

RS_INV = U.inv() * V          # (r^-1 s)^(1/2)
SR_INV = V.inv() * U          # (r s^-1)^(1/2)


def _rho_pow(idx: IndexScheme, two_exp: int) -> FieldElem:
    """(r^-1 s)^(two_exp / 2)."""
    return RS_INV ** two_exp


def rs_inv_pow(two_exp: int) -> FieldElem:
    """(r^-1 s)^(two_exp / 2) as a field element."""
    return RS_INV ** two_exp


def xi_elem(n: int) -> FieldElem:
    """xi = (r^-1 s)^(2n-1)."""
    return rs_inv_pow(2 * (2 * n - 1))


def _range_pairs(idx: IndexScheme):
    """The four off-diagonal index families shared by R and R^-1.

    Returns lists of (i, j) pairs with i unprimed row label and j the
    actual 1..N integer, for the families
      a1: 1<=i<=n,   i+1<=j<=n
      a2: 2<=i<=n,   (i-1)'<=j<=1'
      a3: 1<=i<=n-1, n'<=j<=(i+1)'
      a4: n'<=i<=2', i+1<=j<=1'
    """
    n, N = idx.n, idx.N
    a1 = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    a2 = [(i, j) for i in range(2, n + 1) for j in range(idx.prime(i - 1), N + 1)]
    a3 = [(i, j) for i in range(1, n) for j in range(n + 2, idx.prime(i + 1) + 1)]
    a4 = [(i, j) for i in range(n + 2, 2 * n + 1) for j in range(i + 1, N + 1)]
    return a1, a2, a3, a4


def _tensor_entry(acc, N, i, j, k, l, value):
    """Accumulate value * E_ij x E_kl."""
    key = ((i - 1) * N + k, (j - 1) * N + l)
    if key in acc:
        acc[key] = acc[key] + value
    else:
        acc[key] = value


def _build(acc, N, ring) -> RingMatrix:
    return RingMatrix(N * N, N * N, ring, acc)


def basic_R(n: int) -> RingMatrix:
    """The constant braided R-matrix on V tensor V."""
    idx = IndexScheme(n)
    N = idx.N
    r_inv_s = RS_INV ** 2
    r_s_inv = SR_INV ** 2
    rs = R * S
    r_inv_s_inv = (R * S).inv()
    acc = {}
    a1, a2, a3, a4 = _range_pairs(idx)
    for i in range(1, N + 1):
        if i != n + 1:
            _tensor_entry(acc, N, i, i, i, i, r_inv_s)
            _tensor_entry(acc, N, i, n + 1, n + 1, i, ONE)
            _tensor_entry(acc, N, n + 1, i, i, n + 1, ONE)
            ip = idx.prime(i)
            _tensor_entry(acc, N, ip, i, i, ip, r_s_inv)
    _tensor_entry(acc, N, n + 1, n + 1, n + 1, n + 1, ONE)
    for (i, j) in a1 + a2:
        _tensor_entry(acc, N, i, j, j, i, r_inv_s_inv)
        _tensor_entry(acc, N, j, i, i, j, rs)
    for (i, j) in a3 + a4:
        _tensor_entry(acc, N, j, i, i, j, r_inv_s_inv)
        _tensor_entry(acc, N, i, j, j, i, rs)
    skein = r_inv_s - r_s_inv
    for i in range(1, N + 1):
        for j in range(1, i):
            _tensor_entry(acc, N, i, i, j, j, skein)
            _tensor_entry(acc, N, i, idx.prime(j), idx.prime(i), j,
                          -skein * rs_inv_pow(idx.rho2(i) - idx.rho2(j)))
    return _build(acc, N, FIELD)


def basic_R_inverse(n: int) -> RingMatrix:
    """Closed form of the inverse of the constant braided R-matrix."""
    idx = IndexScheme(n)
    N = idx.N
    r_inv_s = RS_INV ** 2
    r_s_inv = SR_INV ** 2
    rs = R * S
    r_inv_s_inv = (R * S).inv()
    acc = {}
    a1, a2, a3, a4 = _range_pairs(idx)
    for i in range(1, N + 1):
        if i != n + 1:
            _tensor_entry(acc, N, i, i, i, i, r_s_inv)
            _tensor_entry(acc, N, i, n + 1, n + 1, i, ONE)
            _tensor_entry(acc, N, n + 1, i, i, n + 1, ONE)
            ip = idx.prime(i)
            _tensor_entry(acc, N, ip, i, i, ip, r_inv_s)
    _tensor_entry(acc, N, n + 1, n + 1, n + 1, n + 1, ONE)
    for (i, j) in a1 + a2:
        _tensor_entry(acc, N, i, j, j, i, r_inv_s_inv)
        _tensor_entry(acc, N, j, i, i, j, rs)
    for (i, j) in a3 + a4:
        _tensor_entry(acc, N, j, i, i, j, r_inv_s_inv)
        _tensor_entry(acc, N, i, j, j, i, rs)
    skein = r_s_inv - r_inv_s
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            _tensor_entry(acc, N, i, i, j, j, skein)
            _tensor_entry(acc, N, i, idx.prime(j), idx.prime(i), j,
                          -skein * rs_inv_pow(idx.rho2(i) - idx.rho2(j)))
    return _build(acc, N, FIELD)


def K_matrix(n: int) -> RingMatrix:
    """K = sum (r^-1 s)^(rho_i - rho_j) E_ij' x E_i'j, a multiple of P0."""
    idx = IndexScheme(n)
    N = idx.N
    acc = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            _tensor_entry(acc, N, i, idx.prime(j), idx.prime(i), j,
                          rs_inv_pow(idx.rho2(i) - idx.rho2(j)))
    return _build(acc, N, FIELD)


def C_matrix(n: int) -> RingMatrix:
    """Quantum metric: C^i_j = delta_{i j'} (r^-1 s)^(rho_i).  C^2 = I."""
    idx = IndexScheme(n)
    N = idx.N
    ents = {}
    for i in range(1, N + 1):
        ents[(i, idx.prime(i))] = rs_inv_pow(idx.rho2(i))
    return RingMatrix(N, N, FIELD, ents)


def eigenvalues(n: int) -> tuple[FieldElem, FieldElem, FieldElem]:
    """Eigenvalues of the constant R: on the symmetric, antisymmetric
    and one-dimensional summands respectively."""
    return (RS_INV ** 2, -(SR_INV ** 2), SR_INV ** (4 * n))


def projectors(n: int, Rm: RingMatrix = None) -> tuple[RingMatrix, RingMatrix, RingMatrix]:
    """Spectral projectors (P_plus, P_minus, P_zero) of the constant R."""
    if Rm is None:
        Rm = basic_R(n)
    lam_p, lam_m, lam_0 = eigenvalues(n)
    lam_m = -lam_m   # rs^-1
    N2 = Rm.rows
    I = RingMatrix.identity(N2, FIELD)
    R2 = Rm * Rm
    p_plus = (R2 - Rm.scalar_mul(lam_0 - lam_m) - I.scalar_mul(lam_0 * lam_m)) \
        .scalar_mul(((lam_p + lam_m) * (lam_p - lam_0)).inv())
    p_minus = (R2 - Rm.scalar_mul(lam_p + lam_0) + I.scalar_mul(lam_p * lam_0)) \
        .scalar_mul(((lam_m + lam_p) * (lam_m + lam_0)).inv())
    p_zero = (R2 - Rm.scalar_mul(lam_p - lam_m) - I.scalar_mul(lam_p * lam_m)) \
        .scalar_mul(((lam_0 - lam_p) * (lam_m + lam_0)).inv())
    return p_plus, p_minus, p_zero


def min_poly_coeffs(n: int) -> list[FieldElem]:
    """Coefficients (low degree first) of
    (t - r^-1 s)(t + r s^-1)(t - (r s^-1)^(2n))."""
    lam_p, lam_m, lam_0 = eigenvalues(n)
    # (t - lam_p)(t - lam_m)(t - lam_0)
    e1 = lam_p + lam_m + lam_0
    e2 = lam_p * lam_m + lam_p * lam_0 + lam_m * lam_0
    e3 = lam_p * lam_m * lam_0
    return [-e3, e2, -e1, ONE]


# ---------------------------------------------------------------------------
# spectral (parameter-dependent) R-matrices
# ---------------------------------------------------------------------------

def _field_to_ratz(m: RingMatrix) -> RingMatrix:
    return m.map_entries(RatZ.const, RATZ)


def yang_baxterized(n: int, variant: int = 1) -> RingMatrix:
    """Baxterization of the constant R, composed with the flip and
    normalized so the (1,1) diagonal entry is 1.

    variant 1:  R(x) = l1 x(x-1) S^-1 + (1 + l1/l2 + l1/l3 + l2/l3) x
                       - l3^-1 (x-1) S
    variant 2:  R(x) = l1 x(x-1) S^-1 + (1 + l1/l2 + l1/l3 + l1^2/(l2 l3)) x
                       - l1/(l2 l3) (x-1) S
    with S the inverse of the constant R, eigenvalues (l1, l2, l3) =
    (r s^-1, -r^-1 s, (r^-1 s)^(2n)) of S, and x = 1/z.
    """
    lam_p, lam_m, lam_0 = eigenvalues(n)
    # eigenvalues of S = R^-1
    l1, l2, l3 = lam_p.inv(), lam_m.inv(), lam_0.inv()
    Rm = _field_to_ratz(basic_R(n))
    Sm = _field_to_ratz(basic_R_inverse(n))
    N2 = Rm.rows
    I = RingMatrix.identity(N2, RATZ)
    x = RatZ([ZERO, ONE]).inv()          # x = 1/z
    xx1 = x * (x - RatZ.const(ONE))
    if variant == 1:
        mid = ONE + l1 / l2 + l1 / l3 + l2 / l3
        tail = l3.inv()
    elif variant == 2:
        mid = ONE + l1 / l2 + l1 / l3 + (l1 * l1) / (l2 * l3)
        tail = l1 / (l2 * l3)
    else:
        raise ValueError("variant must be 1 or 2")
    raw = Rm.scalar_mul(RatZ.const(l1) * xx1) \
        + I.scalar_mul(RatZ.const(mid) * x) \
        - Sm.scalar_mul(RatZ.const(tail) * (x - RatZ.const(ONE)))
    hat = _field_to_ratz(flip_P(IndexScheme(n).N)) * raw
    return hat.scalar_mul(hat.entry(1, 1).inv())


def spectral_Rhat(n: int) -> RingMatrix:
    """Closed form of the spectral R-hat matrix (entries rational in z)."""
    idx = IndexScheme(n)
    N = idx.N
    zv = RatZ.z()
    one = RatZ.const(ONE)
    xi = xi_elem(n)
    r2, s2 = R * R, S * S
    den1 = RatZ([-s2, r2])                       # r^2 z - s^2
    c_move = (zv - one) / den1                   # (z-1)/(r^2 z - s^2)
    c_swap = RatZ.const(r2 - s2) / den1          # (r^2-s^2)/(r^2 z - s^2)
    den0 = RatZ([-xi, ONE]) * den1               # (z - xi)(r^2 z - s^2)
    acc = {}
    a1, a2, a3, a4 = _range_pairs(idx)
    for i in range(1, N + 1):
        if i != n + 1:
            _tensor_entry(acc, N, i, i, i, i, one)
            _tensor_entry(acc, N, n + 1, n + 1, i, i, c_move * RatZ.const(R * S))
            _tensor_entry(acc, N, i, i, n + 1, n + 1, c_move * RatZ.const(R * S))
    r2s2 = RatZ.const(r2 * s2)
    for (i, j) in a1 + a2:
        _tensor_entry(acc, N, j, j, i, i, c_move)
        _tensor_entry(acc, N, i, i, j, j, c_move * r2s2)
    for (i, j) in a3 + a4:
        _tensor_entry(acc, N, i, i, j, j, c_move)
        _tensor_entry(acc, N, j, j, i, i, c_move * r2s2)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i == j or idx.prime(i) == j:
                continue
            if i < j:
                _tensor_entry(acc, N, i, j, j, i, c_swap)
            else:
                _tensor_entry(acc, N, i, j, j, i, c_swap * zv)
    s2r2 = S * S - R * R
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i < j:
                d = zv * (zv - one) * RatZ.const(
                    s2r2 * rs_inv_pow(idx.rho2(i) - idx.rho2(j)))
                if idx.prime(i) == j:
                    d = d - zv * RatZ([-xi, ONE]) * RatZ.const(s2r2)
            elif i > j:
                d = (zv - one) * RatZ.const(
                    s2r2 * rs_inv_pow(2 * (2 * n - 1) + idx.rho2(i) - idx.rho2(j)))
                if idx.prime(i) == j:
                    d = d - RatZ([-xi, ONE]) * RatZ.const(s2r2)
            elif i != idx.prime(i):
                d = (zv - one) * RatZ([-rs_inv_pow(2 * (2 * n - 3)), ONE]) \
                    * RatZ.const(S * S)
            else:
                d = (zv - one) * RatZ([-xi, ONE]) * RatZ.const(R * S) \
                    + zv * RatZ.const((r2 - s2) * (ONE - xi))
            if not d.is_zero():
                _tensor_entry(acc, N, idx.prime(i), idx.prime(j), i, j, d / den0)
    return _build(acc, N, RATZ)


def spectral_Rhat_alt(n: int) -> RingMatrix:
    """Closed form of the alternate spectral R-hat matrix."""
    idx = IndexScheme(n)
    N = idx.N
    zv = RatZ.z()
    one = RatZ.const(ONE)
    xi = xi_elem(n)
    r2, s2 = R * R, S * S
    r2s_2 = r2 / s2
    den1 = RatZ([-s2, r2])
    c_move = (zv - one) / den1
    c_swap = RatZ.const(r2 - s2) / den1
    lin0 = RatZ([xi, r2s_2])                     # r^2 s^-2 z + xi
    den0 = lin0 * den1
    acc = {}
    a1, a2, a3, a4 = _range_pairs(idx)
    for i in range(1, N + 1):
        if i != n + 1:
            _tensor_entry(acc, N, i, i, i, i, one)
            _tensor_entry(acc, N, n + 1, n + 1, i, i, c_move * RatZ.const(R * S))
            _tensor_entry(acc, N, i, i, n + 1, n + 1, c_move * RatZ.const(R * S))
    r2s2 = RatZ.const(r2 * s2)
    for (i, j) in a1 + a2:
        _tensor_entry(acc, N, j, j, i, i, c_move)
        _tensor_entry(acc, N, i, i, j, j, c_move * r2s2)
    for (i, j) in a3 + a4:
        _tensor_entry(acc, N, i, i, j, j, c_move)
        _tensor_entry(acc, N, j, j, i, i, c_move * r2s2)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i == j or idx.prime(i) == j:
                continue
            if i < j:
                _tensor_entry(acc, N, i, j, j, i, c_swap)
            else:
                _tensor_entry(acc, N, i, j, j, i, c_swap * zv)
    s2r2 = S * S - R * R
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i < j:
                d = zv * (zv - one) * RatZ.const(
                    s2r2 * rs_inv_pow(idx.rho2(i) - idx.rho2(j) - 4))
                if idx.prime(i) == j:
                    d = d - zv * lin0 * RatZ.const(s2r2)
            elif i > j:
                d = (one - zv) * RatZ.const(
                    s2r2 * rs_inv_pow(2 * (2 * n - 1) + idx.rho2(i) - idx.rho2(j)))
                if idx.prime(i) == j:
                    d = d - lin0 * RatZ.const(s2r2)
            elif i != idx.prime(i):
                d = (zv - one) * RatZ([xi, ONE]) * RatZ.const(R * R)
            else:
                d = (zv - one) * lin0 * RatZ.const(R * S) \
                    + zv * RatZ.const((r2 - s2) * (r2s_2 + xi))
            if not d.is_zero():
                _tensor_entry(acc, N, idx.prime(i), idx.prime(j), i, j, d / den0)
    return _build(acc, N, RATZ)


def eval_spectral(m: RingMatrix, z_value: FieldElem,
                  ring: Ring = FIELD) -> RingMatrix:
    """Evaluate a RatZ matrix at z = z_value, yielding a field matrix."""
    return m.map_entries(lambda e: e.eval_at(z_value), ring)


def crossing_scalar(n: int) -> RatZ:
    """(z - r^2 s^-2)(xi z - 1) / ((1 - z)(1 - r^2 s^-2 xi z))."""
    xi = xi_elem(n)
    r2s_2 = R * R / (S * S)
    num = RatZ([-r2s_2, ONE]) * RatZ([-ONE, xi])
    den = RatZ([ONE, -ONE]) * RatZ([ONE, -(r2s_2 * xi)])
    return num / den


from fractions import Fraction

import sympy as _sp
from sympy.polys.fields import field as _frac_field

# univariate rational-function field QQ(t) for scalars that depend only
# on t = s/r (xi, r^-2 s^2, r^2 s^-2): the series recurrences below run
# orders of magnitude faster here than in the two-variable tower
_TFIELD, T_GEN = _frac_field("t", _sp.QQ)

_fs_cache: dict = {}


def _f_series_t(n: int, order: int) -> list:
    """Coefficients of f(z) as elements of QQ(t), t = s/r."""
    key = (n, order)
    if key in _fs_cache:
        return _fs_cache[key]
    t = T_GEN
    one = _TFIELD.one
    xi = t ** (2 * n - 1)
    poles = [t ** 2, 1 / t ** 2, xi, 1 / xi]
    g = [one] + [_TFIELD.zero] * order
    for a in poles:
        geo = [a ** k for k in range(order + 1)]
        g = [sum((g[i] * geo[k - i] for i in range(k + 1)), _TFIELD.zero)
             for k in range(order + 1)]
    f = [one] + [_TFIELD.zero] * order
    for k in range(1, order + 1):
        mid = sum((f[i] * f[k - i] * xi ** (k - i) for i in range(1, k)),
                  _TFIELD.zero)
        f[k] = (g[k] - mid) / (one + xi ** k)
    _fs_cache[key] = f
    return f


def _t_poly_dict(poly) -> dict:
    out = {}
    for (j,), c in poly.terms():
        out[(-2 * j, 2 * j, 0)] = Fraction(int(c.numerator),
                                           int(c.denominator))
    return out


def _t_to_field(elem) -> FieldElem:
    """Convert a QQ(t) element to the coefficient field via t = v^2/u^2."""
    return FieldElem(_t_poly_dict(elem.numer), _t_poly_dict(elem.denom))


def f_series(n: int, order: int) -> list[FieldElem]:
    """Coefficients f_0..f_order of the scalar series f(z) fixed by
    f(z) f(xi z) = 1 / ((1-r^-2 s^2 z)(1-r^2 s^-2 z)(1-xi z)(1-xi^-1 z))
    and f(0) = 1."""
    return [_t_to_field(e) for e in _f_series_t(n, order)]


def series_mul(a: list, b: list, order: int) -> list:
    """Truncated product of coefficient lists (low degree first)."""
    out = [ZERO] * (order + 1)
    for i, ai in enumerate(a[:order + 1]):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b[:order + 1 - i]):
            out[i + j] = out[i + j] + ai * bj
    return out
