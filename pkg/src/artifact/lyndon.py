"""Quantum Lyndon root vectors and the triangular L-matrices.

Root vectors E / E' are kept as formal sums of words in the positive
(resp. negative) generators.  No rewriting modulo the Serre ideal is
performed: equality of words is only ever decided by evaluating both
sides in a representation, so a passing identity is necessary-condition
evidence and a failing one is a refutation.

Positions use the extended index 1..2n+1 of the ambient matrix algebra,
where column c > n+1 denotes the primed index (2n+2-c)'.
"""

from __future__ import annotations

from .coeff import FieldElem, ONE, ZERO, U, V, W, R, S, swap_uv
from .linalg import RingMatrix, FIELD, IndexScheme, kron

R2 = R * R
S2 = S * S
RS = R * S


class NCWord:
    """Formal sum of words in the generators, with field coefficients.

    A word is a tuple of generator labels (e.g. ('e1', 'e2')); the empty
    tuple is the unit.  Terms with zero coefficient are dropped.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for word, c in terms.items():
                if not c.is_zero():
                    self.terms[word] = c

    @staticmethod
    def unit() -> "NCWord":
        return NCWord({(): ONE})

    @staticmethod
    def gen(label: str) -> "NCWord":
        return NCWord({(label,): ONE})

    @staticmethod
    def zero() -> "NCWord":
        return NCWord()

    def __add__(self, other: "NCWord") -> "NCWord":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return NCWord(out)

    def __sub__(self, other: "NCWord") -> "NCWord":
        return self + other.scale(-ONE)

    def scale(self, c: FieldElem) -> "NCWord":
        return NCWord({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: "NCWord") -> "NCWord":
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                prod = c1 * c2
                out[w] = out.get(w, ZERO) + prod
        return NCWord(out)

    def zeta(self) -> "NCWord":
        """Coefficient field involution u <-> v; generator letters fixed."""
        return NCWord({w: swap_uv(c) for w, c in self.terms.items()})

    def reversed_words(self, relabel) -> "NCWord":
        """Reverse every word and relabel letters (used for the minus
        mirror); coefficients unchanged."""
        return NCWord({tuple(relabel(g) for g in reversed(w)): c
                       for w, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def text(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for w in sorted(self.terms, key=lambda t: (len(t), t)):
            word = " ".join(w) if w else "1"
            lines.append(f"{self.terms[w].text()} * {word}")
        return "\n".join(lines)

    def __repr__(self):
        return f"NCWord({len(self.terms)} terms)"


def bracket(a: NCWord, b: NCWord, q: FieldElem) -> NCWord:
    """Quantum bracket a b - q b a."""
    return a * b - (b * a).scale(q)


# ---------------------------------------------------------------------------
# root labels
# ---------------------------------------------------------------------------

def root_labels(n: int):
    """All positions (i, c) of positive-root vectors, extended indexing:
    rows 1..n, columns i < c <= 2n+1-i (the column i' itself is excluded;
    it carries the non-root theta element)."""
    out = []
    for i in range(1, n + 1):
        for c in range(i + 1, 2 * n + 2 - i):
            out.append((i, c))
    return out


def _check_label(n: int, i: int, c: int):
    if not (1 <= i <= n and i < c <= 2 * n + 1 - i):
        raise ValueError(f"({i},{c}) is not a positive-root position at rank {n}")


def build_root_vector(n: int, i: int, c: int, family: str = "E") -> NCWord:
    """Root vector at position (i, c) by the defining bracketing recursion.

    family 'E' uses the (s^2, rs, r^-2) bracket chain; family 'Eprime'
    swaps the roles of r and s in the bracket coefficients.
    """
    _check_label(n, i, c)
    if family == "E":
        qa, qb, qc = S2, RS, R2.inv()
    elif family == "Eprime":
        qa, qb, qc = R2, RS, S2.inv()
    else:
        raise ValueError(f"unknown family {family}")
    e = lambda k: NCWord.gen(f"e{k}")
    if c == i + 1:
        return e(i)
    if c <= n:
        return bracket(e(i), build_root_vector(n, i + 1, c, family), qa)
    if c == n + 1:
        if i == n:
            return e(n)
        return bracket(build_root_vector(n, i, n, family), e(n), qa)
    if c == n + 2:
        return bracket(build_root_vector(n, i, n + 1, family), e(n), qb)
    j = 2 * n + 2 - c          # c = j' with j <= n-1
    return bracket(build_root_vector(n, i, 2 * n + 1 - j, family), e(j), qc)


def theta_word(n: int, i: int) -> NCWord:
    """The anti-diagonal element theta_{ii'} (not a root vector)."""
    if not 1 <= i <= n:
        raise ValueError(f"bad theta index {i}")
    e = lambda k: NCWord.gen(f"e{k}")
    if i == n:
        return e(n) * e(n)
    inner = build_root_vector(n, i, 2 * n + 1 - i, "E")   # E_{i,(i+1)'}
    return bracket(inner, e(i), (R2 * R2).inv())


# ---------------------------------------------------------------------------
# B coefficient table
# ---------------------------------------------------------------------------

def _b_seed_simple(n: int, i: int) -> FieldElem:
    """B+_{i,i+1} (i < n) and B+_{n,n+1}."""
    if i < n:
        return R2 - S2
    return (U * V).inv() * W * (R - S)     # (rs)^(-1/2) (r+s)^(1/2) (r-s)


B_SEED_DOWN = lambda: -(R.inv()) * W * (R - S)          # B+_{n+1,n'}
B_SEED_PRIMED = lambda: -((R * S).inv()) * (R2 - S2)    # B+_{(i+1)',i'}


def build_B_table(n: int, sign: str = "+") -> dict:
    """All coefficients B^+_{ic} (extended column index), generated by the
    commutator recursions of the triangular-matrix entry dictionary from
    the four seed normalizations.  sign '-' returns the mirror table
    B^-_{ci} keyed the same way (by the upper position (i, c))."""
    N = 2 * n + 1
    diff = R2 - S2
    B = {}
    # seeds
    for i in range(1, n + 1):
        B[(i, i + 1)] = _b_seed_simple(n, i)
    B[(n + 1, n + 2)] = B_SEED_DOWN()
    for i in range(1, n):
        B[(2 * n + 1 - i, 2 * n + 2 - i)] = B_SEED_PRIMED()   # ((i+1)', i')
    # upper region, rows i <= n, columns up to (i+1)' = 2n+1-i
    for i in range(n - 1, 0, -1):
        for c in range(i + 2, n + 1):
            B[(i, c)] = B[(i, c - 1)] * B[(c - 1, c)] * diff.inv()
        if i < n:
            B[(i, n + 1)] = B[(i, n)] * B[(n, n + 1)] * diff.inv()
            B[(i, n + 2)] = B[(i, n + 1)] * B[(n + 1, n + 2)] * diff.inv()
        for c in range(n + 3, 2 * n + 1 - i + 1):
            j = 2 * n + 2 - c                        # c = j', j <= n-1
            jp1 = 2 * n + 1 - j                      # (j+1)'
            B[(i, c)] = (R2 * S2) * B[(i, jp1)] * B[(jp1, c)] * diff.inv()
    # lower region, columns k' for k = 1..n-1, rows below the anti-diagonal
    for k in range(n - 1, 0, -1):
        kp = 2 * n + 2 - k
        for j in range(k + 2, n + 1):
            jp = 2 * n + 2 - j
            kp1p = 2 * n + 1 - k                     # (k+1)'
            B[(jp, kp)] = S2 * B[(jp, kp1p)] * B[(kp1p, kp)] * (S2 - R2).inv()
        np_ = n + 2
        B[(n + 1, kp)] = S2 * B[(n + 1, np_)] * B[(np_, kp)] * (S2 - R2).inv()
        gap = R.inv() * S - R * S.inv()
        B[(n, kp)] = B[(n, n + 1)] * B[(n + 1, kp)] * gap.inv()
        for j in range(n, k + 1, -1):
            B[(j - 1, kp)] = (R.inv() * S) * B[(j - 1, j)] * B[(j, kp)] * gap.inv()
    # anti-diagonal
    for i in range(1, n):
        ip = 2 * n + 2 - i
        ip1p = 2 * n + 1 - i
        B[(i, ip)] = (R2 * R2 * S2) * B[(i, ip1p)] * B[(ip1p, ip)] * diff.inv()
    B[(n, n + 2)] = R * (R - S) * diff.inv() * B[(n, n + 1)] * B[(n + 1, n + 2)]
    if sign == "+":
        return B
    if sign == "-":
        return {pos: -swap_uv(val) for pos, val in B.items()}
    raise ValueError(f"unknown sign {sign}")


# ---------------------------------------------------------------------------
# symbolic L matrices
# ---------------------------------------------------------------------------

class LMatrixSymbolic:
    """Triangular matrix of (B coefficient, word, omega-twist) entries.

    twist is an integer vector over the simple indices 1..n: exponent t_k
    means a factor (omega'_k)^{t_k} for the plus matrix, (omega_k)^{t_k}
    for the minus matrix, multiplied on the right of the word.
    """

    def __init__(self, n: int, sign: str):
        self.n = n
        self.N = 2 * n + 1
        self.sign = sign
        self.entries = {}      # (i, j) -> (FieldElem, NCWord, tuple twist)

    def positions(self):
        return sorted(self.entries)


def _eps_twist(n: int, i: int, power: int):
    """Exponent vector of (omega'_{eps_i})^power = (omega'_i...omega'_n)^power."""
    return tuple(power if k >= i else 0 for k in range(1, n + 1))


def assemble_L(n: int, sign: str = "+") -> LMatrixSymbolic:
    """The entry dictionary of the plus (upper) triangular matrix, or its
    minus (lower) mirror obtained by the coefficient involution combined
    with word reversal and e -> f relabeling."""
    if sign not in ("+", "-"):
        raise ValueError(f"unknown sign {sign}")
    B = build_B_table(n, "+")
    L = LMatrixSymbolic(n, sign)
    N = 2 * n + 1
    unit = NCWord.unit()
    for i in range(1, n + 1):
        L.entries[(i, i)] = (ONE, unit, _eps_twist(n, i, -1))
        L.entries[(N + 1 - i, N + 1 - i)] = (ONE, unit, _eps_twist(n, i, +1))
    L.entries[(n + 1, n + 1)] = (ONE, unit, _eps_twist(n, 1, 0))
    for i in range(1, n + 1):
        ip = N + 1 - i
        for c in range(i + 1, ip):
            L.entries[(i, c)] = (B[(i, c)], build_root_vector(n, i, c, "E"),
                                 _eps_twist(n, i, -1))
        L.entries[(i, ip)] = (B[(i, ip)], theta_word(n, i), _eps_twist(n, i, -1))
    for k in range(1, n + 1):
        kp = N + 1 - k
        for i in range(k + 1, n + 1):
            # row i, column k': E'_{k,i'} twisted by (omega'_{eps_i})^-1
            L.entries[(i, kp)] = (B[(i, kp)],
                                  build_root_vector(n, k, N + 1 - i, "Eprime"),
                                  _eps_twist(n, i, -1))
        if k <= n:
            L.entries[(n + 1, kp)] = (B[(n + 1, kp)],
                                      build_root_vector(n, k, n + 1, "Eprime"),
                                      _eps_twist(n, 1, 0))
        for j in range(k + 1, n + 1):
            jp = N + 1 - j
            L.entries[(jp, kp)] = (B[(jp, kp)],
                                   build_root_vector(n, k, j, "Eprime"),
                                   _eps_twist(n, j, +1))
    if sign == "+":
        return L
    # minus mirror: transpose positions, swap the coefficient parameters,
    # reverse words with e -> f after the parameter involution, and keep
    # the same twist exponents (evaluated in the omega family, multiplied
    # on the left of the word).
    M = LMatrixSymbolic(n, "-")
    relabel = lambda g: "f" + g[1:]
    for (i, j), (b, word, twist) in L.entries.items():
        if i == j:
            M.entries[(i, j)] = (ONE, unit, twist)
        else:
            M.entries[(j, i)] = (swap_uv(b),
                                 word.zeta().reversed_words(relabel), twist)
    return M


# ---------------------------------------------------------------------------
# representation evaluation
# ---------------------------------------------------------------------------

def rep_eval_word(rep, word: NCWord) -> RingMatrix:
    """Evaluate an NCWord in a representation exposing gen(name)."""
    out = RingMatrix.zeros(rep.N, rep.N, FIELD)
    ident = RingMatrix.identity(rep.N, FIELD)
    for w, c in word.terms.items():
        m = ident
        for g in w:
            m = m * rep.gen(g)
        out = out + m.scalar_mul(c)
    return out


def rep_eval_twist(rep, twist, sign: str) -> RingMatrix:
    """Evaluate a twist exponent vector: omega'_k powers for the plus
    matrix, omega_k powers for the minus matrix."""
    from .linalg import invert
    out = RingMatrix.identity(rep.N, FIELD)
    for k, p in enumerate(twist, start=1):
        if p == 0:
            continue
        base = rep.gen(f"w{k}p" if sign == "+" else f"w{k}")
        if p < 0:
            base = invert(base)
            p = -p
        for _ in range(p):
            out = out * base
    return out


def rep_eval_L(rep, L: LMatrixSymbolic) -> RingMatrix:
    """Flatten a symbolic L matrix to an (N d) x (N d) matrix, auxiliary
    leg first: sum over entries of E_ij (x) rep(entry)."""
    d = rep.N
    N = L.N
    total = RingMatrix.zeros(N * d, N * d, FIELD)
    for (i, j), (b, word, twist) in L.entries.items():
        block = rep_eval_entry(rep, b, word, twist, L.sign)
        total = total + kron(RingMatrix.unit(N, N, i, j, FIELD), block)
    return total


def rep_eval_entry(rep, b, word, twist, sign: str) -> RingMatrix:
    """Evaluate one symbolic entry.  The twist multiplies the word on the
    right for the plus matrix and on the left for the minus matrix."""
    w = rep_eval_word(rep, word).scalar_mul(b)
    t = rep_eval_twist(rep, twist, sign)
    return w * t if sign == "+" else t * w


def aux_transpose(m: RingMatrix, N: int, d: int) -> RingMatrix:
    """Transpose on the auxiliary (first, size-N) leg only."""
    ents = {}
    for (p, q), v in m.entries.items():
        i, a = divmod(p - 1, d)
        j, b = divmod(q - 1, d)
        ents[(j * d + a + 1, i * d + b + 1)] = v
    return RingMatrix(m.rows, m.cols, m.ring, ents)


def metric_C(n: int) -> RingMatrix:
    """The quantum metric matrix on the auxiliary space."""
    from .rmat import C_matrix
    return C_matrix(n)

# ---------------------------------------------------------------------------
# straightened expansions of the primed root vectors
# ---------------------------------------------------------------------------

def _rs_mon(a: int, b: int) -> FieldElem:
    """r^a s^b with integer (possibly negative) exponents."""
    return (R ** a) * (S ** b)


def _chain_coeff(j: int, k: int) -> FieldElem:
    """sum_t (-1)^t C(k-1, t) (r/s)^(2j-2k+2t)."""
    from math import comb
    total = ZERO
    for t in range(k):
        term = _rs_mon(2 * j - 2 * k + 2 * t, -(2 * j - 2 * k + 2 * t))
        term = term.scale if False else term
        c = FieldElem.from_int((-1) ** t * comb(k - 1, t))
        total = total + c * term
    return total


def _segment_chains(lo: int, hi: int, k: int):
    """All ways to split the integer interval [lo, hi] into k consecutive
    segments lo = a_0 < a_1 < ... < a_k = hi; yields the cut sequences."""
    from itertools import combinations
    if k <= 0:
        if k == 0 and lo == hi:
            yield (lo,)
        return
    if hi <= lo:
        return
    for cuts in combinations(range(lo + 1, hi), k - 1):
        yield (lo,) + cuts + (hi,)


def _chain_word(n: int, cuts) -> NCWord:
    out = NCWord.unit()
    for a, b in zip(cuts, cuts[1:]):
        out = out * build_root_vector(n, a, b, "E")
    return out


def expansion_pairs(n: int, kind: str):
    """Rewriting identities expressing primed root vectors through the
    unprimed family, as (label, lhs, rhs) triples of NCWords.

    kind 'chain':         E'_{i-j, i} for 2 <= i <= n+1, 1 <= j <= i-1.
    kind 'half-column':   E'_{n+1-j, n'} for 2 <= j <= n.
    kind 'anti-diagonal': E'_{n-i-1, (n-i)'} for 1 <= i <= n-2.
    kind 'displayed':     the two worked n-2 row cases (requires n >= 3).
    """
    en = NCWord.gen(f"e{n}")
    triples = []
    if kind == "chain":
        for i in range(2, n + 2):
            for j in range(1, i):
                lhs = build_root_vector(n, i - j, i, "Eprime")
                rhs = NCWord.zero()
                for k in range(1, j + 1):
                    ck = _chain_coeff(j, k)
                    for cuts in _segment_chains(i - j, i, k):
                        rhs = rhs + _chain_word(n, cuts).scale(ck)
                triples.append((f"chain i={i} j={j}", lhs, rhs))
    elif kind == "half-column":
        for j in range(2, n + 1):
            lo = n + 1 - j
            lhs = build_root_vector(n, lo, n + 2, "Eprime")
            rhs = NCWord.zero()
            pre = ONE - _rs_mon(1, -1)
            for k in range(2, j + 1):
                ck = _chain_coeff(j, k)
                for cuts in _segment_chains(lo, n, k - 1):
                    rhs = rhs + (_chain_word(n, cuts) * en * en).scale(ck * pre)
            for k in range(2, j + 1):
                ck = _chain_coeff(j, k) * _rs_mon(1, -1)
                for cuts in _segment_chains(lo, n + 1, k - 1):
                    if cuts[-2] > n - 1:
                        continue
                    rhs = rhs + (_chain_word(n, cuts) * en).scale(ck)
            for k in range(1, j):
                ck = _chain_coeff(j, k)
                for b in range(1, j):
                    for cuts in _segment_chains(lo, n - b, k - 1):
                        rhs = rhs + (_chain_word(n, cuts)
                                     * build_root_vector(n, n - b, n + 2, "E")).scale(ck)
            triples.append((f"half-column j={j}", lhs, rhs))
    elif kind == "anti-diagonal":
        diff = R2 - S2
        for i in range(1, n - 1):
            row = n - i - 1
            lhs = build_root_vector(n, row, n + 2 + i, "Eprime")
            E = lambda a, c: build_root_vector(n, a, c, "E")
            colp = lambda j: 2 * n + 2 - j
            rhs = E(row, colp(n - i)).scale(_rs_mon(4 * i + 2, -4 * i - 2))
            for j in range(n - i + 1, n + 1):
                sgn = FieldElem.from_int((-1) ** (n - j - i))
                rhs = rhs + (E(row, colp(j)) * E(n - i, j)).scale(
                    sgn * _rs_mon(2 * (n + i - j + 1), -4 * i - 2) * diff)
            rhs = rhs + (E(row, n + 1) * E(n - i, n + 1)).scale(
                FieldElem.from_int((-1) ** (i + 1)) * _rs_mon(2 * i + 1, -4 * i - 3) * diff)
            for j in range(n - i + 1, n + 1):
                sgn = FieldElem.from_int((-1) ** (n - j - i))
                rhs = rhs + (E(row, j) * E(n - i, colp(j))).scale(
                    sgn * _rs_mon(2 * i - 1, 2 * n - 2 * j - 4 * i - 3) * diff)
            erow = NCWord.gen(f"e{row}")
            for k in range(1, i + 1):
                rhs = rhs + (erow * E(n - i, n - i + k) * E(n - i, colp(n - i + k))).scale(
                    FieldElem.from_int((-1) ** (k + 1)) * _rs_mon(2 * i - 1, -2 * i - 2 * k - 1)
                    * diff * (_rs_mon(0, -2) - _rs_mon(-2, 0)))
            rhs = rhs + (erow * E(n - i, n + 1) * E(n - i, n + 1)).scale(
                FieldElem.from_int((-1) ** i) * _rs_mon(2 * i, -4 * i - 3) * (R - S) * diff)
            triples.append((f"anti-diagonal i={i}", lhs, rhs))
    elif kind == "displayed":
        if n < 3:
            return []
        E = lambda a, c: build_root_vector(n, a, c, "E")
        q = lambda a, b: _rs_mon(a, b)
        em2, em1 = NCWord.gen(f"e{n-2}"), NCWord.gen(f"e{n-1}")
        sq = (ONE - q(2, -2)) * (ONE - q(2, -2))
        lhs1 = build_root_vector(n, n - 2, n + 2, "Eprime")
        rhs1 = ((E(n - 2, n) * en * en).scale((ONE - q(1, -1)) * (q(2, -2) - q(4, -4)))
                + (em2 * em1 * en * en).scale((ONE - q(1, -1)) * sq)
                + (E(n - 2, n + 1) * en).scale(q(3, -3) - q(5, -5))
                + (em2 * E(n - 1, n + 1) * en).scale(q(1, -1) * sq)
                + E(n - 2, n + 2).scale(q(4, -4))
                + (em2 * E(n - 1, n + 2)).scale(q(2, -2) - q(4, -4)))
        triples.append(("displayed row n-2 half-column", lhs1, rhs1))
        lhs2 = build_root_vector(n, n - 2, n + 3, "Eprime")
        rhs2 = ((em2 * em1 * E(n - 1, n + 2)).scale(q(-1, -3) * sq)
                + (E(n - 2, n) * E(n - 1, n + 2)).scale(q(-1, -3) * (q(2, -2) - q(4, -4)))
                + (em2 * E(n - 1, n + 1) * E(n - 1, n + 1)).scale(
                    (q(1, -3) - q(0, -2)) * (q(2, -2) - q(4, -4)))
                + (E(n - 2, n + 1) * E(n - 1, n + 1)).scale(q(1, -3) * (q(4, -4) - q(2, -2)))
                + (E(n - 2, n + 2) * em1).scale(q(2, -2) * (q(2, -2) - q(4, -4)))
                + E(n - 2, n + 3).scale(q(6, -6)))
        triples.append(("displayed row n-2 next column", lhs2, rhs2))
    else:
        raise ValueError(f"unknown expansion kind {kind}")
    return triples
