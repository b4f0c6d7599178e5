"""Spectral L-operators, quasi-determinants, Gauss decomposition, and
mode-wise checks of the Gaussian-generator commutation relations.

The abstract L-operator algebra is probed through its canonical
finite-dimensional image: L(z) is the spectral R-matrix acting with the
first tensor leg as auxiliary space and the second as quantum space, at
central charge zero.  Every check below is therefore a
necessary-condition check in this image.

Series bookkeeping: the plus family expands entries as power series in z
around 0; the minus family as power series in 1/z around infinity.  Both
expansions come from the same rational matrix, so relations that mix the
families (the X generators) are checked mode-wise as identities of formal
distributions.
"""

from __future__ import annotations

import itertools

from .coeff import FieldElem, ONE, ZERO, R, S, RatZ
from .linalg import RingMatrix, FIELD, RATZ, kron, flip_P, invert
from . import rmat


# ---------------------------------------------------------------------------
# operator matrices (auxiliary-space blocking)
# ---------------------------------------------------------------------------

class OperatorMatrix:
    """N x N auxiliary matrix whose entries are d x d quantum-space blocks."""

    __slots__ = ("aux", "dim", "ring", "blocks")

    def __init__(self, aux: int, dim: int, ring, blocks=None):
        self.aux = aux
        self.dim = dim
        self.ring = ring
        self.blocks = dict(blocks or {})

    def block(self, i: int, j: int) -> RingMatrix:
        got = self.blocks.get((i, j))
        if got is None:
            return RingMatrix.zeros(self.dim, self.dim, self.ring)
        return got

    def flatten(self) -> RingMatrix:
        total = RingMatrix.zeros(self.aux * self.dim, self.aux * self.dim, self.ring)
        for (i, j), blk in self.blocks.items():
            total = total + kron(RingMatrix.unit(self.aux, self.aux, i, j, self.ring), blk)
        return total

    def map_entries(self, fn, ring) -> "OperatorMatrix":
        out = {}
        for pos, blk in self.blocks.items():
            m = blk.map_entries(fn, ring)
            if not m.is_zero():
                out[pos] = m
        return OperatorMatrix(self.aux, self.dim, ring, out)

    def eval_at(self, z: FieldElem) -> "OperatorMatrix":
        """Evaluate rational entries at a spectral point (field entries out)."""
        return self.map_entries(lambda e: e.eval_at(z), FIELD)


def build_rep_L(n: int, sign: str = "+") -> OperatorMatrix:
    """The L-operator realized by the spectral R-matrix, auxiliary leg
    first.  Both signs share the same rational matrix; the sign records
    the expansion direction (z for '+', 1/z for '-')."""
    if sign not in ("+", "-"):
        raise ValueError(f"unknown sign {sign}")
    N = 2 * n + 1
    M = rmat.spectral_Rhat(n)
    blocks = {}
    for (p, q), val in M.entries.items():
        i, a = divmod(p - 1, N)
        j, b = divmod(q - 1, N)
        blk = blocks.setdefault((i + 1, j + 1),
                                RingMatrix.zeros(N, N, RATZ))
        blocks[(i + 1, j + 1)] = blk.with_entry(a + 1, b + 1, val)
    return OperatorMatrix(N, N, RATZ, blocks)


# ---------------------------------------------------------------------------
# quasi-determinants and pointwise Gauss decomposition
# ---------------------------------------------------------------------------

def _flatten_sub(X: OperatorMatrix, rows, cols) -> RingMatrix:
    d = X.dim
    total = RingMatrix.zeros(len(rows) * d, len(cols) * d, X.ring)
    for a, i in enumerate(rows):
        for b, j in enumerate(cols):
            blk = X.blocks.get((i, j))
            if blk is None:
                continue
            for (p, q), v in blk.entries.items():
                total = total.with_entry(a * d + p, b * d + q, v)
    return total


def quasi_determinant(X: OperatorMatrix, i: int, j: int,
                      rows=None, cols=None) -> RingMatrix:
    """The (i,j) quasi-determinant: x_ij - r (X^{ij})^{-1} c, computed over
    the flattened block ring.  rows/cols restrict to a submatrix first."""
    rows = list(rows) if rows is not None else list(range(1, X.aux + 1))
    cols = list(cols) if cols is not None else list(range(1, X.aux + 1))
    if i not in rows or j not in cols:
        raise ValueError("boxed entry outside the submatrix")
    rs = [r for r in rows if r != i]
    cs = [c for c in cols if c != j]
    d = X.dim
    out = X.block(i, j)
    if not rs:
        return out
    sub = _flatten_sub(X, rs, cs)
    inv = invert(sub)
    row = _flatten_sub(X, [i], cs)
    col = _flatten_sub(X, rs, [j])
    return out - row * inv * col


class GaussFactors:
    """Unit-lower F, diagonal K, unit-upper E with F K E = source."""

    __slots__ = ("F", "K", "E", "aux", "dim", "ring")

    def __init__(self, F, K, E, aux, dim, ring):
        self.F, self.K, self.E = F, K, E
        self.aux, self.dim, self.ring = aux, dim, ring

    def _om(self, blocks, unit_diag: bool) -> OperatorMatrix:
        out = dict(blocks)
        if unit_diag:
            ident = RingMatrix.identity(self.dim, self.ring)
            for i in range(1, self.aux + 1):
                out[(i, i)] = ident
        return OperatorMatrix(self.aux, self.dim, self.ring, out)

    def f_matrix(self) -> OperatorMatrix:
        return self._om(self.F, True)

    def k_matrix(self) -> OperatorMatrix:
        return self._om(self.K, False)

    def e_matrix(self) -> OperatorMatrix:
        return self._om(self.E, True)

    def product(self) -> RingMatrix:
        return (self.f_matrix().flatten() * self.k_matrix().flatten()
                * self.e_matrix().flatten())


def gauss_decompose(X: OperatorMatrix) -> GaussFactors:
    """Gauss factors via the boxed quasi-determinant formulas."""
    N = X.aux
    F, K, E = {}, {}, {}
    for i in range(1, N + 1):
        lead = list(range(1, i + 1))
        K[(i, i)] = quasi_determinant(X, i, i, rows=lead, cols=lead)
        kinv = invert(K[(i, i)])
        for j in range(i + 1, N + 1):
            cols = list(range(1, i)) + [j]
            E[(i, j)] = kinv * quasi_determinant(X, i, j, rows=lead, cols=cols)
            rows = list(range(1, i)) + [j]
            F[(j, i)] = quasi_determinant(X, j, i, rows=rows, cols=lead) * kinv
    return GaussFactors(F, K, E, N, X.dim, X.ring)


def gauss_eliminate(X: OperatorMatrix) -> GaussFactors:
    """Independent oracle: blockwise forward elimination by Schur
    complements (no quasi-determinants)."""
    N, d, ring = X.aux, X.dim, X.ring
    work = {pos: blk for pos, blk in X.blocks.items()}
    F, K, E = {}, {}, {}
    for i in range(1, N + 1):
        piv = work.get((i, i))
        if piv is None:
            raise ValueError(f"singular leading block at {i}")
        K[(i, i)] = piv
        pinv = invert(piv)
        for j in range(i + 1, N + 1):
            rij = work.get((i, j))
            cji = work.get((j, i))
            if rij is not None:
                E[(i, j)] = pinv * rij
            if cji is not None:
                F[(j, i)] = cji * pinv
        for a in range(i + 1, N + 1):
            ca = work.get((a, i))
            if ca is None:
                continue
            for b in range(i + 1, N + 1):
                rb = work.get((i, b))
                if rb is None:
                    continue
                cur = work.get((a, b), RingMatrix.zeros(d, d, ring))
                work[(a, b)] = cur - ca * pinv * rb
    return GaussFactors(F, K, E, N, d, ring)


# ---------------------------------------------------------------------------
# truncated matrix power series
# ---------------------------------------------------------------------------

def _taylor_zero(rz: RatZ, order: int) -> list:
    """Power-series coefficients of a rational function at z = 0."""
    num = list(rz.num) + [ZERO] * (order + 1)
    den = list(rz.den) + [ZERO] * (order + 1)
    if den[0].is_zero():
        raise ValueError("pole at z = 0")
    d0 = den[0].inv()
    out = []
    for k in range(order + 1):
        acc = num[k]
        for m in range(k):
            acc = acc - out[m] * den[k - m]
        out.append(acc * d0)
    return out


def _taylor_infinity(rz: RatZ, order: int) -> list:
    """Power-series coefficients in y = 1/z at z = infinity."""
    num, den = list(rz.num), list(rz.den)
    dn, dd = len(num) - 1, len(den) - 1
    while dn >= 0 and num[dn].is_zero():
        dn -= 1
    while dd >= 0 and den[dd].is_zero():
        dd -= 1
    if dn < 0:
        return [ZERO] * (order + 1)
    shift = dd - dn
    if shift < 0:
        raise ValueError("pole at z = infinity")
    rnum = [num[dn - k] for k in range(dn + 1)]
    rden = [den[dd - k] for k in range(dd + 1)]
    inner = _taylor_zero(RatZ(rnum, rden), order)
    return [ZERO] * shift + inner[:max(0, order + 1 - shift)]


def series_blocks(L: OperatorMatrix, sign: str, order: int) -> dict:
    """Blockwise series expansion: dict (i,j) -> list of matrix coefficients
    (in z for '+', in 1/z for '-')."""
    d = L.dim
    expand = _taylor_zero if sign == "+" else _taylor_infinity
    out = {}
    for pos, blk in L.blocks.items():
        coeffs = [RingMatrix.zeros(d, d, FIELD) for _ in range(order + 1)]
        for (p, q), v in blk.entries.items():
            for k, c in enumerate(expand(v, order)):
                if not c.is_zero():
                    coeffs[k] = coeffs[k].with_entry(p, q, c)
        out[pos] = coeffs
    return out


def _ser_add(a, b):
    return [x + y for x, y in zip(a, b)]


def _ser_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def _ser_mul(a, b):
    T = len(a) - 1
    d = a[0].rows
    out = [RingMatrix.zeros(d, d, FIELD) for _ in range(T + 1)]
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j in range(T + 1 - i):
            if b[j].is_zero():
                continue
            out[i + j] = out[i + j] + ai * b[j]
    return out


def _ser_inv(a):
    T = len(a) - 1
    d = a[0].rows
    inv0 = invert(a[0])
    out = [inv0]
    for k in range(1, T + 1):
        acc = RingMatrix.zeros(d, d, FIELD)
        for m in range(k):
            acc = acc + out[m] * a[k - m]
        out.append((inv0 * acc).scalar_mul(-ONE))
    return out


def gauss_series(blocks: dict, N: int, order: int) -> tuple:
    """Schur-complement Gauss decomposition over truncated matrix series.
    Returns (F, K, E) dicts of series."""
    d = blocks[(1, 1)][0].rows
    zser = [RingMatrix.zeros(d, d, FIELD) for _ in range(order + 1)]
    work = {pos: list(ser) for pos, ser in blocks.items()}
    F, K, E = {}, {}, {}
    for i in range(1, N + 1):
        piv = work.get((i, i), zser)
        K[(i, i)] = piv
        pinv = _ser_inv(piv)
        for j in range(i + 1, N + 1):
            rij = work.get((i, j))
            cji = work.get((j, i))
            if rij is not None:
                E[(i, j)] = _ser_mul(pinv, rij)
            if cji is not None:
                F[(j, i)] = _ser_mul(cji, pinv)
        for a in range(i + 1, N + 1):
            ca = work.get((a, i))
            if ca is None:
                continue
            left = _ser_mul(ca, pinv)
            for b in range(i + 1, N + 1):
                rb = work.get((i, b))
                if rb is None:
                    continue
                cur = work.get((a, b), zser)
                work[(a, b)] = _ser_sub(cur, _ser_mul(left, rb))
    return F, K, E


# ---------------------------------------------------------------------------
# Gaussian generators (level 0)
# ---------------------------------------------------------------------------

class GaussianGenerators:
    """Mode dictionaries for k_i^+/-, X_i^+/- extracted from the two
    expansion directions of the rep-realized L."""

    __slots__ = ("n", "N", "dim", "order",
                 "kplus", "kminus", "xplus", "xminus")

    def __init__(self, n, order, kplus, kminus, xplus, xminus):
        self.n = n
        self.N = 2 * n + 1
        self.dim = 2 * n + 1
        self.order = order
        self.kplus = kplus      # i -> {m >= 0: matrix}  (z^m)
        self.kminus = kminus    # i -> {m <= 0: matrix}  (z^m)
        self.xplus = xplus      # i -> {m in Z: matrix}  (z^m)
        self.xminus = xminus

    def k_modes(self, i: int, sign: str) -> dict:
        return self.kplus[i] if sign == "+" else self.kminus[i]

    def k_quot_modes(self, j: int, sign: str) -> dict:
        """Modes of k_{j+1}(z) k_j(z)^{-1} in the chosen direction."""
        T = self.order
        if sign == "+":
            a = [self.kplus[j + 1].get(m) for m in range(T + 1)]
            b = [self.kplus[j].get(m) for m in range(T + 1)]
            prod = _ser_mul(a, _ser_inv(b))
            return {m: prod[m] for m in range(T + 1)}
        a = [self.kminus[j + 1].get(-m) for m in range(T + 1)]
        b = [self.kminus[j].get(-m) for m in range(T + 1)]
        prod = _ser_mul(a, _ser_inv(b))
        return {-m: prod[m] for m in range(T + 1)}


def extract_gaussian_generators(L_plus: OperatorMatrix,
                                L_minus: OperatorMatrix = None,
                                order: int = 8) -> GaussianGenerators:
    """Level-0 Gaussian generators from the two expansion directions.
    A rank may be passed in place of L_plus for convenience."""
    if isinstance(L_plus, int):
        L_plus = build_rep_L(L_plus, "+")
    if L_minus is None:
        L_minus = L_plus
    N = L_plus.aux
    n = (N - 1) // 2
    bp = series_blocks(L_plus, "+", order)
    bm = series_blocks(L_minus, "-", order)
    Fp, Kp, Ep = gauss_series(bp, N, order)
    Fm, Km, Em = gauss_series(bm, N, order)
    kplus = {i: {m: Kp[(i, i)][m] for m in range(order + 1)}
             for i in range(1, N + 1)}
    kminus = {i: {-m: Km[(i, i)][m] for m in range(order + 1)}
              for i in range(1, N + 1)}
    xplus, xminus = {}, {}
    for i in range(1, n + 1):
        ep, em = Ep[(i, i + 1)], Em[(i, i + 1)]
        fp, fm = Fp[(i + 1, i)], Fm[(i + 1, i)]
        xp = {m: ep[m] for m in range(1, order + 1)}
        xp.update({-m: em[m].scalar_mul(-ONE) for m in range(1, order + 1)})
        xp[0] = ep[0] - em[0]
        xm = {m: fp[m] for m in range(1, order + 1)}
        xm.update({-m: fm[m].scalar_mul(-ONE) for m in range(1, order + 1)})
        xm[0] = fp[0] - fm[0]
        xplus[i], xminus[i] = xp, xm
    return GaussianGenerators(n, order, kplus, kminus, xplus, xminus)


# ---------------------------------------------------------------------------
# mode-wise relation engine
# ---------------------------------------------------------------------------

def _term_coeff(term, a: int, b: int):
    """Coefficient matrix of z^a w^b in coef * z^dz w^dw * A(z) B(w).
    Returns None when a needed mode is outside the stored window."""
    coef, dz, dw, A, B, order = term
    ma, mb = a - dz, b - dw
    if order == "AB":
        first, fm, second, sm = A, ma, B, mb
    else:
        first, fm, second, sm = B, mb, A, ma
    x = first.get(fm)
    y = second.get(sm)
    if x is None or y is None:
        return None
    return (x * y).scalar_mul(coef)


def relation_residuals(terms, za, wb):
    """Max residual scan of sum-of-terms == 0 over the (a, b) window.
    Each term: (coef, dz, dw, A_modes, B_modes, 'AB'|'BA')."""
    witnesses = []
    for a in za:
        for b in wb:
            acc = None
            skip = False
            for t in terms:
                c = _term_coeff(t, a, b)
                if c is None:
                    skip = True
                    break
                acc = c if acc is None else acc + c
            if skip or acc is None:
                continue
            if not acc.is_zero():
                ent = next(iter(acc.entries.items()))
                witnesses.append(((a, b), ent))
    return witnesses


def _ratio_terms(pnum, pden, A, B):
    """Terms for pden(z,w) A(z) B(w) - pnum(z,w) B(w) A(z) == 0, where
    pnum/pden are lists of (coef, dz, dw) monomials."""
    out = [(c, dz, dw, A, B, "AB") for (c, dz, dw) in pden]
    out += [(-c, dz, dw, A, B, "BA") for (c, dz, dw) in pnum]
    return out


def _window(gens: GaussianGenerators, kind: str):
    T = gens.order
    if kind == "k+":
        return list(range(1, T))
    if kind == "k-":
        return list(range(-T + 1, 0))
    return list(range(-T + 2, T - 1))


def check_thm_relations(gens, subset=None, order: int = 8) -> list:
    """Mode-wise verification of the Gaussian-generator relations at level
    zero.  Accepts GaussianGenerators (or a rank, for convenience).
    Returns (check_id, passed, witness) triples."""
    g = (extract_gaussian_generators(gens, order=order)
         if isinstance(gens, int) else gens)
    n = g.n
    results = []
    ZW = [(ONE, 1, 0), (-ONE, 0, 1)]                       # z - w

    def run(cid, terms, za, wb):
        if subset is not None and not any(s in cid for s in subset):
            return
        wit = relation_residuals(terms, za, wb)
        results.append((cid, not wit, wit[0] if wit else None))

    gapf = lambda c1, c2: [(c1, 1, 0), (-c2, 0, 1)]        # c1 z - c2 w
    r2, s2 = R * R, S * S
    for sa in "+-":
        for sb in "+-":
            for i in range(1, n + 2):
                for l in range(1, n + 2):
                    A, B = g.k_modes(i, sa), g.k_modes(l, sb)
                    terms = [(ONE, 0, 0, A, B, "AB"), (-ONE, 0, 0, A, B, "BA")]
                    run(f"kk/{i}{sa}-{l}{sb}",
                        terms, _window(g, "k" + sa), _window(g, "k" + sb))
    # k vs X
    for sk in "+-":
        kw = _window(g, "k" + sk)
        xw = _window(g, "x")
        for i in range(1, n + 2):
            for j in range(1, n + 1):
                ki = g.k_modes(i, sk)
                if (i - j <= -1 and j != n) or i - j >= 2:
                    for fam, X in (("X+", g.xplus[j]), ("X-", g.xminus[j])):
                        terms = [(ONE, 0, 0, ki, X, "AB"),
                                 (-ONE, 0, 0, ki, X, "BA")]
                        run(f"kx/commute-k{i}{sk}-{fam}{j}", terms, kw, xw)
        for i in range(1, n):
            ki = g.k_modes(i, sk)
            terms = [(R * S, 0, 0, ki, g.xplus[n], "AB"),
                     (-ONE, 0, 0, ki, g.xplus[n], "BA")]
            run(f"kx/quasi-k{i}{sk}-X+{n}", terms, kw, xw)
            terms = [(ONE, 0, 0, ki, g.xminus[n], "AB"),
                     (-(R * S), 0, 0, ki, g.xminus[n], "BA")]
            run(f"kx/quasi-k{i}{sk}-X-{n}", terms, kw, xw)
        for i in range(1, n):
            ki, ki1 = g.k_modes(i, sk), g.k_modes(i + 1, sk)
            run(f"kx/ratio-k{i}{sk}-X+{i}",
                _ratio_terms(ZW, gapf(s2.inv(), r2.inv()), ki, g.xplus[i]), kw, xw)
            run(f"kx/ratio-k{i}{sk}-X-{i}",
                _ratio_terms(gapf(s2.inv(), r2.inv()), ZW, ki, g.xminus[i]), kw, xw)
            run(f"kx/ratio-k{i+1}{sk}-X+{i}",
                _ratio_terms(ZW, gapf(r2.inv(), s2.inv()), ki1, g.xplus[i]), kw, xw)
            run(f"kx/ratio-k{i+1}{sk}-X-{i}",
                _ratio_terms(gapf(r2.inv(), s2.inv()), ZW, ki1, g.xminus[i]), kw, xw)
        kn, kn1 = g.k_modes(n, sk), g.k_modes(n + 1, sk)
        run(f"kx/ratio-k{n}{sk}-X+{n}",
            _ratio_terms(ZW, gapf(R * S.inv(), R.inv() * S), kn, g.xplus[n]), kw, xw)
        run(f"kx/ratio-k{n}{sk}-X-{n}",
            _ratio_terms(gapf(R * S.inv(), R.inv() * S), ZW, kn, g.xminus[n]), kw, xw)
        quadp = _poly_mul2(gapf(ONE, ONE), gapf(R, S), R * S)
        quadd = _poly_mul2(gapf(r2, s2), gapf(S, R), ONE)
        run(f"kx/ratio-k{n+1}{sk}-X+{n}",
            _ratio_terms(quadp, quadd, kn1, g.xplus[n]), kw, xw)
        run(f"kx/ratio-k{n+1}{sk}-X-{n}",
            _ratio_terms(quadd, quadp, kn1, g.xminus[n]), kw, xw)
    # X vs X (same family)
    xw = _window(g, "x")
    for fam, X, pw in (("+", g.xplus, 1), ("-", g.xminus, -1)):
        for j in range(1, n + 1):
            for k in range(j + 2, n + 1):
                terms = [(ONE, 0, 0, X[j], X[k], "AB"),
                         (-ONE, 0, 0, X[j], X[k], "BA")]
                run(f"xx/commute-{fam}{j}{k}", terms, xw, xw)
        for i in range(1, n):
            pn, pd = ZW, gapf(s2.inv(), r2.inv())
            if pw < 0:
                pn, pd = pd, pn
            run(f"xx/adjacent-{fam}{i}", _ratio_terms(pn, pd, X[i], X[i + 1]), xw, xw)
        for i in range(1, n):
            pn, pd = gapf(r2, s2), gapf(s2, r2)
            if pw < 0:
                pn, pd = pd, pn
            run(f"xx/self-{fam}{i}", _ratio_terms(pn, pd, X[i], X[i]), xw, xw)
        pn, pd = gapf(R, S), gapf(S, R)
        if pw < 0:
            pn, pd = pd, pn
        run(f"xx/self-{fam}{n}", _ratio_terms(pn, pd, X[n], X[n]), xw, xw)
    # delta commutator.  The scalar is root-length dependent: the short
    # root n carries rs^-1 - r^-1 s, the long roots carry the same value
    # divided by rs (established exactly in this realization at both
    # ranks; the uniform constant fails for j < n).
    gap_of = lambda j: (R * S.inv() - R.inv() * S) * (ONE if j == n
                                                      else (R * S).inv())
    for j in range(1, n + 1):
        gap = gap_of(j)
        for l in range(1, n + 1):
            cid = f"xx/delta-{j}{l}"
            if subset is not None and not any(s in cid for s in subset):
                continue
            Ap = g.k_quot_modes(j, "+") if j == l else None
            Am = g.k_quot_modes(j, "-") if j == l else None
            wit = []
            for a in xw:
                for b in xw:
                    if j == l and abs(a + b) > g.order:
                        continue
                    xa, yb = g.xplus[j].get(a), g.xminus[l].get(b)
                    if xa is None or yb is None:
                        continue
                    acc = xa * yb - yb * xa
                    if j == l:
                        m = a + b
                        rhs = RingMatrix.zeros(g.dim, g.dim, FIELD)
                        if m <= 0 and m in Am:
                            rhs = rhs + Am[m]
                        if m >= 0 and m in Ap:
                            rhs = rhs - Ap[m]
                        acc = acc - rhs.scalar_mul(gap)
                    if not acc.is_zero():
                        wit.append(((a, b), next(iter(acc.entries.items()))))
            results.append((cid, not wit, wit[0] if wit else None))
    # Serre relations
    results.extend(_serre_checks(g, subset))
    return results


def _poly_mul2(p, q, scale):
    out = []
    for (c1, a1, b1) in p:
        for (c2, a2, b2) in q:
            out.append((c1 * c2 * scale, a1 + a2, b1 + b2))
    return out


def _serre_checks(g: GaussianGenerators, subset=None) -> list:
    from .reps import r_i, s_i
    n = g.n
    results = []
    win = [-1, 0, 1]

    def record(cid, wit):
        if subset is not None and not any(s in cid for s in subset):
            return
        results.append((cid, not wit, wit[0] if wit else None))

    from .reps import cartan
    pairs = [(i, i - 1) for i in range(2, n + 1) if cartan(n, i, i - 1) == -1]
    pairs += [(i, i + 1) for i in range(1, n) if cartan(n, i, i + 1) == -1]
    for fam, X, pw in (("+", g.xplus, 1), ("-", g.xminus, -1)):
        # quadratic families over adjacent pairs with a_ij = -1
        for (i, j) in pairs:
            ri, si = r_i(n, i), s_i(n, i)
            c_mid = (ri ** pw + si ** pw)
            c_rs = (ri * si) ** pw
            if j < i:
                c0, c2 = c_rs, ONE
            else:
                c0, c2 = ONE, c_rs
            wit = []
            for (m1, m2, l) in itertools.product(win, win, win):
                acc = None
                for (a, b) in ((m1, m2), (m2, m1)):
                    xa, xb, xl = X[i].get(a), X[i].get(b), X[j].get(l)
                    if xa is None or xb is None or xl is None:
                        acc = None
                        break
                    t = ((xa * xb * xl).scalar_mul(c0)
                         - (xa * xl * xb).scalar_mul(c_mid)
                         + (xl * xa * xb).scalar_mul(c2))
                    acc = t if acc is None else acc + t
                if acc is not None and not acc.is_zero():
                    wit.append(((m1, m2, l), next(iter(acc.entries.items()))))
            record(f"serre/quadratic-{fam}-{i}-{j}", wit)
        # quartic family in X_n against X_{n-1}
        if n >= 2:
            rs = (R * S) ** pw
            c1 = (R ** (2 * pw) + S ** (2 * pw) + (R * S) ** pw)
            wit = []
            for (m1, m2, m3, l) in itertools.product(win, win, win, win):
                acc = None
                bad = False
                for (a, b, c) in itertools.permutations((m1, m2, m3)):
                    za, zb, zc = X[n].get(a), X[n].get(b), X[n].get(c)
                    wl = X[n - 1].get(l)
                    if za is None or zb is None or zc is None or wl is None:
                        bad = True
                        break
                    t = (wl * za * zb * zc
                         - (za * wl * zb * zc).scalar_mul(c1)
                         + (za * zb * wl * zc).scalar_mul(rs * c1)
                         - (za * zb * zc * wl).scalar_mul(rs ** 3))
                    acc = t if acc is None else acc + t
                if not bad and acc is not None and not acc.is_zero():
                    wit.append(((m1, m2, m3, l), next(iter(acc.entries.items()))))
            record(f"serre/quartic-{fam}-{n}", wit)
    return results


# ---------------------------------------------------------------------------
# pointwise RLL and metric checks
# ---------------------------------------------------------------------------

def _spectral_at(n: int, z: FieldElem, cleared: bool = True):
    """Spectral R-hat evaluated at z, optionally denominator-cleared.
    Returns (matrix, scalar denominator)."""
    M = rmat.spectral_Rhat(n)
    xi = rmat.xi_elem(n)
    den = (R * R * z - S * S) * (z - xi) if cleared else ONE
    return M.map_entries(lambda e: e.eval_at(z) * den, FIELD), den


def check_rll_pointwise(n: int, points) -> list:
    """R(z/w) L1(z) L2(w) = L2(w) L1(z) R(z/w) at sample pairs, with all
    three factors evaluated from the same spectral matrix and cleared
    denominators (the identity is homogeneous)."""
    N = 2 * n + 1
    IN = RingMatrix.identity(N, FIELD)
    wit = []
    for (zv, wv) in points:
        R12, _ = _spectral_at(n, zv / wv)
        L1, _ = _spectral_at(n, zv)
        L2, _ = _spectral_at(n, wv)
        A = kron(R12, IN)
        B = kron_mid(L1, N)
        C = kron(IN, L2)
        diff = A * B * C - C * B * A
        if not diff.is_zero():
            wit.append(((zv.text(), wv.text()), next(iter(diff.entries.items()))))
    return wit


def kron_mid(M: RingMatrix, N: int) -> RingMatrix:
    """Embed an N^2 x N^2 matrix on legs (1,3) of an N^3 space."""
    out = RingMatrix.zeros(N ** 3, N ** 3, FIELD)
    for (p, q), v in M.entries.items():
        i, a = divmod(p - 1, N)
        j, b = divmod(q - 1, N)
        for mid in range(N):
            out = out.with_entry(i * N * N + mid * N + a + 1,
                                 j * N * N + mid * N + b + 1, v)
    return out


def check_metric_pointwise(n: int, points) -> list:
    """L(z) C L(z xi)^t C^{-1} = crossing-scalar * I at sample points
    (transpose on the auxiliary leg)."""
    from .linalg import partial_transpose
    N = 2 * n + 1
    IN = RingMatrix.identity(N, FIELD)
    C1 = kron(rmat.C_matrix(n), IN)
    xi = rmat.xi_elem(n)
    cs = rmat.crossing_scalar(n)
    I = RingMatrix.identity(N * N, FIELD)
    wit = []
    for zv in points:
        A, da = _spectral_at(n, zv)
        B, db = _spectral_at(n, xi * zv)
        lhs = A * C1 * partial_transpose(B, 1) * C1
        want = I.scalar_mul(cs.eval_at(zv) * da * db)
        diff = lhs - want
        if not diff.is_zero():
            wit.append((zv.text(), next(iter(diff.entries.items()))))
    return wit


def _cs_series_t(n: int, order: int) -> list:
    """Crossing-scalar Taylor coefficients at z = 0, as elements of the
    univariate field QQ(t), t = s/r."""
    F, t = rmat._TFIELD, rmat.T_GEN
    xi = t ** (2 * n - 1)
    t2i = 1 / t ** 2
    num = [t2i, -F.one - t2i * xi, xi]
    den = [F.one, -F.one - t2i * xi, t2i * xi]
    out = []
    for k in range(order + 1):
        acc = num[k] if k < 3 else F.zero
        for m in range(k):
            if k - m < 3:
                acc = acc - out[m] * den[k - m]
        out.append(acc)
    return out


def _normalizer_series_t(n: int, order: int) -> list:
    """Series h over QQ(t) with h(z) h(xi z) cs(z) = 1 and h(0) = t."""
    F, t = rmat._TFIELD, rmat.T_GEN
    xi = t ** (2 * n - 1)
    cs = _cs_series_t(n, order)
    q = []
    c0inv = 1 / cs[0]
    for k in range(order + 1):
        acc = F.one if k == 0 else F.zero
        for m in range(k):
            acc = acc - q[m] * cs[k - m]
        q.append(acc * c0inv)
    h = [t]
    for k in range(1, order + 1):
        mid = sum((h[i] * h[k - i] * xi ** (k - i) for i in range(1, k)),
                  F.zero)
        h.append((q[k] - mid) / (t * (F.one + xi ** k)))
    return h


def metric_normalizer(n: int, order: int = 8) -> list:
    """Scalar series h with h(z) h(xi z) cs(z) = 1 and h(0) = s/r: the
    normalization that makes the metric relation hold exactly for the
    rep-realized L."""
    return [rmat._t_to_field(e) for e in _normalizer_series_t(n, order)]


def _sample_points(count: int):
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    return [FieldElem.from_int(p) for p in primes[:count]]


def _to_numeric_operator(X: OperatorMatrix, bits: int) -> OperatorMatrix:
    from .coeff import evaluate
    from .linalg import numeric_ring
    ring = numeric_ring(bits)
    # points near |u| = |v| = 1 keep the Laurent monomials of the exact
    # entries well-scaled, avoiding catastrophic cancellation
    return X.map_entries(lambda e: evaluate(e, "1.13", "0.87", bits), ring)


def check_gauss_reconstruction(n: int, points=None, numeric_bits=None,
                               tol: float = 1e-20) -> list:
    """Per-sample-point Gauss decomposition audit: the quasi-determinant
    factors multiply back to L, and agree blockwise with the independent
    forward-elimination oracle.  Exact by default; numeric_bits switches
    to the floating backend (relative tolerance tol)."""
    L = build_rep_L(n, "+")
    if points is None:
        points = _sample_points(7)
    out = []
    for zv in points:
        Lz = L.eval_at(zv)
        if numeric_bits is not None:
            Lz = _to_numeric_operator(Lz, numeric_bits)
        gf = gauss_decompose(Lz)
        orc = gauss_eliminate(Lz)
        flat = Lz.flatten()
        diff = gf.product() - flat
        if numeric_bits is None:
            ok_prod = diff.is_zero()
            ok_orc = all(
                (gf_d.get(pos, None) is None) == (or_d.get(pos, None) is None)
                and (gf_d.get(pos) is None or gf_d[pos] == or_d[pos])
                for gf_d, or_d in ((gf.F, orc.F), (gf.K, orc.K), (gf.E, orc.E))
                for pos in set(gf_d) | set(or_d))
            res = "exact-zero" if ok_prod else "nonzero"
        else:
            scale = max(flat.max_magnitude(), 1.0)
            res = diff.max_magnitude() / scale
            ok_prod = res <= tol
            worst = 0.0
            for gf_d, or_d in ((gf.F, orc.F), (gf.K, orc.K), (gf.E, orc.E)):
                for pos in set(gf_d) | set(or_d):
                    a, b = gf_d.get(pos), or_d.get(pos)
                    if a is None or b is None:
                        continue
                    worst = max(worst, (a - b).max_magnitude() / scale)
            ok_orc = worst <= tol
        out.append((zv.text(), ok_prod, ok_orc, res))
    return out


# ---------------------------------------------------------------------------
# Drinfeld-realization relations in the affine vector representation
# ---------------------------------------------------------------------------

def _q_binom(n: int, i: int, m: int, k: int, sign: int) -> FieldElem:
    from .reps import r_i, s_i
    ri, si = r_i(n, i), s_i(n, i)

    def qnum(t):
        return (ri ** (sign * t) - si ** (sign * t)) / (ri - si)

    def qfact(t):
        out = ONE
        for q in range(1, t + 1):
            out = out * qnum(q)
        return out

    return qfact(m) / (qfact(k) * qfact(m - k))


def check_drinfeld(rep, mode_bound: int = 3) -> list:
    """Mode-truncated verification of the current-algebra relations in the
    affine vector representation at level 0 (gamma = gamma' = 1).
    Returns (check_id, passed, witness) triples."""
    from fractions import Fraction
    from . import reps
    from .coeff import U, V, FieldElem as FE
    n = rep.n
    N = rep.N
    Z = RingMatrix.zeros(N, N, FIELD)
    lmodes = [l for l in range(-mode_bound, mode_bound + 1) if l != 0]
    kmodes = list(range(-mode_bound, mode_bound + 1))
    results = []

    def record(cid, wit):
        results.append((cid, not wit, wit[0] if wit else None))

    def comm(a, b):
        return a * b - b * a

    # (d1): the diagonal family is mutually commutative
    wit = []
    diag = [("a", rep.a(i, l)) for i in range(1, n + 1) for l in lmodes]
    diag += [("w", rep.omega(i)) for i in range(1, n + 1)]
    diag += [("wp", rep.omega_prime(i)) for i in range(1, n + 1)]
    for x, (ta, A) in enumerate(diag):
        for tb, B in diag[x + 1:]:
            if comm(A, B) != Z:
                wit.append((ta, tb))
    record("drinfeld/d1-diagonal-commute", wit)

    # (d2) omega part: omega_i conjugates x_j^pm by a structure constant
    wit = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cji = reps.struct_const(n, j, i)
            cij = reps.struct_const(n, i, j)
            for k in kmodes:
                xp, xm = rep.xplus(j, k), rep.xminus(j, k)
                checks = (
                    (rep.omega(i) * xp, xp.scalar_mul(cji) * rep.omega(i)),
                    (rep.omega(i) * xm, xm.scalar_mul(cji.inv()) * rep.omega(i)),
                    (rep.omega_prime(i) * xp,
                     xp.scalar_mul(cij.inv()) * rep.omega_prime(i)),
                    (rep.omega_prime(i) * xm,
                     xm.scalar_mul(cij) * rep.omega_prime(i)),
                )
                if any(a != b for a, b in checks):
                    wit.append((i, j, k))
    record("drinfeld/d2-omega-x", wit)

    # (d2) Heisenberg part: [a_i(l), x_j^pm(k)] = pm c_{ijl} x_j^pm(l+k)
    wit = []
    for i in range(1, n + 1):
        half = U * V.inv() if i == n else (U * V.inv()) ** 2
        dri = (reps.r_i(n, i) - reps.s_i(n, i)).inv()
        for j in range(1, n + 1):
            aij = reps.cartan(n, i, j)
            for l in lmodes:
                c = ((half ** (l * aij) - half ** (-l * aij))
                     * FE.from_fraction(Fraction(1, l)) * dri)
                for k in kmodes:
                    if comm(rep.a(i, l), rep.xplus(j, k)) != \
                            rep.xplus(j, l + k).scalar_mul(c):
                        wit.append(("+", i, j, l, k))
                    if comm(rep.a(i, l), rep.xminus(j, k)) != \
                            rep.xminus(j, l + k).scalar_mul(-c):
                        wit.append(("-", i, j, l, k))
    record("drinfeld/d2-heisenberg-x", wit)

    # (d3): same-sign x-x exchange through the g-series constants
    wit = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cji = reps.struct_const(n, j, i)
            cij = reps.struct_const(n, i, j)
            from .coeff import fe_sqrt
            half = fe_sqrt(cji * cij.inv())
            for sgn in (1, -1):
                x = rep.xplus if sgn > 0 else rep.xminus
                a_, b_, h_ = cji ** sgn, cij ** sgn, half ** sgn
                for k in kmodes[:-1]:
                    for k2 in kmodes:
                        lhs = (x(i, k + 1) * x(j, k2)
                               - x(j, k2).scalar_mul(a_) * x(i, k + 1))
                        rhs = (x(j, k2 + 1) * x(i, k)
                               - x(i, k).scalar_mul(b_)
                               * x(j, k2 + 1)).scalar_mul(-h_)
                        if lhs != rhs:
                            wit.append((sgn, i, j, k, k2))
    record("drinfeld/d3-xx-exchange", wit)

    # (d4): mode-wise delta commutator against the omega-mode expansions
    wit = []
    for i in range(1, n + 1):
        dri = (reps.r_i(n, i) - reps.s_i(n, i)).inv()
        for j in range(1, n + 1):
            for k in kmodes:
                for k2 in kmodes:
                    lhs = comm(rep.xplus(i, k), rep.xminus(j, k2))
                    if i != j:
                        if lhs != Z:
                            wit.append((i, j, k, k2))
                        continue
                    m = k + k2
                    rhs = (rep.omega_mode(i, m)
                           - rep.omega_prime_mode(i, m)).scalar_mul(dri)
                    if lhs != rhs:
                        wit.append((i, j, k, k2))
    record("drinfeld/d4-delta", wit)

    # Serre families (commuting pairs, quadratic, and the quartic at the
    # short/long junction), modes in a small window
    win = (-1, 0, 1)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            aij = reps.cartan(n, i, j)
            for pm in (1, -1):
                fam = "+" if pm > 0 else "-"
                x = rep.xplus if pm > 0 else rep.xminus
                if aij == 0:
                    cji = reps.struct_const(n, j, i)
                    wit = []
                    for m in win:
                        for k in win:
                            if x(i, m) * x(j, k) != \
                                    (x(j, k) * x(i, m)).scalar_mul(cji ** pm):
                                wit.append((m, k))
                    record(f"drinfeld/serre-commute-{fam}-{i}-{j}", wit)
                    continue
                deg = 1 - aij
                sgn = pm if i < j else -pm
                base = (U * V) if i == n else (U * V) ** 2
                wit = []
                for ms in itertools.product(win, repeat=deg):
                    for l in win:
                        acc = Z
                        for perm in itertools.permutations(range(deg)):
                            seq = [ms[p] for p in perm]
                            for k in range(deg + 1):
                                c = (base ** (sgn * k * (k - 1))
                                     * _q_binom(n, i, deg, k, sgn))
                                if k % 2:
                                    c = -c
                                term = RingMatrix.identity(N, FIELD)
                                for t in range(k):
                                    term = term * x(i, seq[t])
                                term = term * x(j, l)
                                for t in range(k, deg):
                                    term = term * x(i, seq[t])
                                acc = acc + term.scalar_mul(c)
                        if not acc.is_zero():
                            wit.append((ms, l))
                record(f"drinfeld/serre-deg{deg}-{fam}-{i}-{j}", wit)
    return results


def check_metric_normalized(n: int, order: int = 8) -> dict:
    """Two scalar-series facts behind the metric relation:

    - "functional-equation": the normalizing series f satisfies
      f(z) f(xi z) (1-r^-2 s^2 z)(1-r^2 s^-2 z)(1-xi z)(1-xi^-1 z) = 1.
    - "normalizer": a series h with h(0) = s/r satisfies
      h(z) h(xi z) cs(z) = 1 through the given order, so the h-scaled L
      satisfies the metric relation exactly as stated.
    """
    F, t = rmat._TFIELD, rmat.T_GEN
    xi = t ** (2 * n - 1)
    f = rmat._f_series_t(n, order)
    fxi = [c * xi ** k for k, c in enumerate(f)]

    def ser_mul_t(a, b):
        return [sum((a[i] * b[k - i] for i in range(k + 1)), F.zero)
                for k in range(order + 1)]

    prod = ser_mul_t(f, fxi)
    four = [F.one]
    for a in (t ** 2, 1 / t ** 2, xi, 1 / xi):
        four = four + [F.zero]
        for k in range(len(four) - 1, 0, -1):
            four[k] = four[k] - a * four[k - 1]
    four = four + [F.zero] * order
    lhs = ser_mul_t(prod, four[:order + 1])
    func_eq = all((c - (F.one if k == 0 else F.zero)) == F.zero
                  for k, c in enumerate(lhs))

    cs = _cs_series_t(n, order)
    h = _normalizer_series_t(n, order)
    hxi = [c * xi ** k for k, c in enumerate(h)]
    total = ser_mul_t(ser_mul_t(h, hxi), cs)
    normalizer = all((c - (F.one if k == 0 else F.zero)) == F.zero
                     for k, c in enumerate(total))
    return {"functional-equation": func_eq, "normalizer": normalizer}
