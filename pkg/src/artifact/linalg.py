"""Sparse matrices and tensor operations over abstract coefficient rings.

Ring elements are any objects implementing +, -, *, .inv(), .is_zero()
and .text() (FieldElem, NumericElem, RatZ).  Matrices are sparse maps
from 1-based (row, col) pairs to nonzero ring elements and are treated
as immutable after construction.
"""

from __future__ import annotations

from . import coeff
from .coeff import FieldElem, NumericElem, RatZ


class LinalgError(ValueError):
    pass


class Ring:
    """Descriptor binding zero/one and a name used in dump headers."""

    def __init__(self, name: str, zero, one):
        self.name = name
        self.zero = zero
        self.one = one

    def __repr__(self):
        return f"Ring({self.name})"


FIELD = Ring("field", coeff.ZERO, coeff.ONE)
RATZ = Ring("ratz", RatZ([]), RatZ.const(coeff.ONE))


def numeric_ring(bits: int = 128) -> Ring:
    return Ring(f"numeric:{bits}", NumericElem(0, bits), NumericElem(1, bits))


def _complexity(elem) -> int:
    if isinstance(elem, FieldElem):
        return elem.complexity()
    if isinstance(elem, RatZ):
        return sum(c.complexity() for c in elem.num if not c.is_zero()) + \
            sum(c.complexity() for c in elem.den if not c.is_zero()) + 1
    if isinstance(elem, NumericElem):
        return 1
    return 1


class IndexScheme:
    """Index bookkeeping for type B rank n: N = 2n+1, i' = 2n+2-i."""

    def __init__(self, n: int):
        if n < 2:
            raise LinalgError("rank must be at least 2")
        self.n = n
        self.N = 2 * n + 1

    def prime(self, i: int) -> int:
        return 2 * self.n + 2 - i

    def rho2(self, i: int) -> int:
        """Twice rho_i (kept integral)."""
        n = self.n
        if i < n + 1:
            return 2 * n + 1 - 2 * i
        if i == n + 1:
            return 0
        return -(2 * n + 1 - 2 * self.prime(i))

    def rho_power(self, base: FieldElem, i: int) -> FieldElem:
        """base^(rho_i) where base must be a perfect square's root carrier.

        Used with base = u^-1 v (so that (r^-1 s)^(rho_i) = base^(2 rho_i)).
        """
        return base ** self.rho2(i)


class RingMatrix:
    __slots__ = ("rows", "cols", "ring", "entries")

    def __init__(self, rows: int, cols: int, ring: Ring, entries=None):
        self.rows = rows
        self.cols = cols
        self.ring = ring
        ents = {}
        if entries:
            for (i, j), e in entries.items():
                if not (1 <= i <= rows and 1 <= j <= cols):
                    raise LinalgError(f"entry index ({i},{j}) out of range")
                if not e.is_zero():
                    ents[(i, j)] = e
        self.entries = ents

    # -- constructors -----------------------------------------------------
    @staticmethod
    def identity(n: int, ring: Ring) -> "RingMatrix":
        return RingMatrix(n, n, ring, {(i, i): ring.one for i in range(1, n + 1)})

    @staticmethod
    def zeros(rows: int, cols: int, ring: Ring) -> "RingMatrix":
        return RingMatrix(rows, cols, ring)

    @staticmethod
    def unit(rows: int, cols: int, i: int, j: int, ring: Ring, value=None) -> "RingMatrix":
        """Matrix unit E_ij (optionally scaled)."""
        return RingMatrix(rows, cols, ring, {(i, j): value if value is not None else ring.one})

    def entry(self, i: int, j: int):
        return self.entries.get((i, j), self.ring.zero)

    def with_entry(self, i: int, j: int, value) -> "RingMatrix":
        ents = dict(self.entries)
        if value.is_zero():
            ents.pop((i, j), None)
        else:
            ents[(i, j)] = value
        return RingMatrix(self.rows, self.cols, self.ring, ents)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LinalgError("dimension mismatch in add")
        ents = dict(self.entries)
        for k, e in other.entries.items():
            if k in ents:
                s = ents[k] + e
                if s.is_zero():
                    del ents[k]
                else:
                    ents[k] = s
            else:
                ents[k] = e
        out = RingMatrix(self.rows, self.cols, self.ring)
        out.entries = ents
        return out

    def __neg__(self) -> "RingMatrix":
        out = RingMatrix(self.rows, self.cols, self.ring)
        out.entries = {k: -e for k, e in self.entries.items()}
        return out

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        return self + (-other)

    def __mul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.cols != other.rows:
            raise LinalgError("dimension mismatch in matmul")
        rows_of_b: dict[int, list] = {}
        for (k, j), e in other.entries.items():
            rows_of_b.setdefault(k, []).append((j, e))
        acc: dict[tuple[int, int], object] = {}
        for (i, k), a in self.entries.items():
            for j, b in rows_of_b.get(k, ()):
                prod = a * b
                key = (i, j)
                if key in acc:
                    acc[key] = acc[key] + prod
                else:
                    acc[key] = prod
        out = RingMatrix(self.rows, other.cols, self.ring)
        out.entries = {k: e for k, e in acc.items() if not e.is_zero()}
        return out

    def scalar_mul(self, c) -> "RingMatrix":
        out = RingMatrix(self.rows, self.cols, self.ring)
        if not c.is_zero():
            out.entries = {k: c * e for k, e in self.entries.items()
                           if not (c * e).is_zero()}
        return out

    def transpose(self) -> "RingMatrix":
        out = RingMatrix(self.cols, self.rows, self.ring)
        out.entries = {(j, i): e for (i, j), e in self.entries.items()}
        return out

    def map_entries(self, f, ring: Ring = None) -> "RingMatrix":
        out = RingMatrix(self.rows, self.cols, ring or self.ring)
        for k, e in self.entries.items():
            v = f(e)
            if not v.is_zero():
                out.entries[k] = v
        return out

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            (self - other).is_zero()

    def __hash__(self):
        raise TypeError("RingMatrix is not hashable")

    def max_magnitude(self) -> float:
        """Largest |entry| for numeric matrices (residual reporting)."""
        mags = [e.magnitude() for e in self.entries.values()
                if isinstance(e, NumericElem)]
        return max(mags, default=0.0)

    # -- tensor operations ---------------------------------------------------
    def kron(self, other: "RingMatrix") -> "RingMatrix":
        out = RingMatrix(self.rows * other.rows, self.cols * other.cols, self.ring)
        for (i, j), a in self.entries.items():
            for (k, l), b in other.entries.items():
                prod = a * b
                if not prod.is_zero():
                    out.entries[((i - 1) * other.rows + k,
                                 (j - 1) * other.cols + l)] = prod
        return out

    def dump(self) -> str:
        lines = [f"ringmatrix {self.rows} {self.cols} {self.ring.name}"]
        for (i, j) in sorted(self.entries):
            lines.append(f"{i} {j} {self.entries[(i, j)].text()}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"RingMatrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"


def kron(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    return a.kron(b)


def kron_all(*ms: RingMatrix) -> RingMatrix:
    out = ms[0]
    for m in ms[1:]:
        out = out.kron(m)
    return out


def flip_P(N: int, ring: Ring = FIELD) -> RingMatrix:
    """Flip operator: P (x tensor y) = y tensor x on C^N tensor C^N."""
    ents = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            ents[((j - 1) * N + i, (i - 1) * N + j)] = ring.one
    return RingMatrix(N * N, N * N, ring, ents)


def partial_transpose(a: RingMatrix, leg: int) -> RingMatrix:
    if a.rows != a.cols:
        raise LinalgError("partial transpose needs a square matrix")
    import math
    N = math.isqrt(a.rows)
    if N * N != a.rows:
        raise LinalgError("size is not a perfect square")
    out = RingMatrix(a.rows, a.cols, a.ring)
    for (rc, cc), e in a.entries.items():
        i, k = divmod(rc - 1, N)
        j, l = divmod(cc - 1, N)
        if leg == 1:
            i, j = j, i
        elif leg == 2:
            k, l = l, k
        else:
            raise LinalgError("leg must be 1 or 2")
        out.entries[(i * N + k + 1, j * N + l + 1)] = e
    return out


def _to_dense(a: RingMatrix):
    z = a.ring.zero
    rows = [[z] * a.cols for _ in range(a.rows)]
    for (i, j), e in a.entries.items():
        rows[i - 1][j - 1] = e
    return rows


def _pivot_score(e) -> float:
    if isinstance(e, NumericElem):
        return -e.magnitude()
    return _complexity(e)


def invert(a: RingMatrix) -> RingMatrix:
    """Exact inverse by Gauss-Jordan with full pivoting.

    Pivots are chosen with the structurally smallest entry (fewest
    monomials) to contain expression swell; numerically, the largest.
    """
    if a.rows != a.cols:
        raise LinalgError("only square matrices can be inverted")
    n = a.rows
    m = _to_dense(a)
    aug = _to_dense(RingMatrix.identity(n, a.ring))
    col_perm = list(range(n))
    for step in range(n):
        best = None
        for i in range(step, n):
            for j in range(step, n):
                e = m[i][j]
                if e.is_zero():
                    continue
                score = _pivot_score(e)
                if best is None or score < best[0]:
                    best = (score, i, j)
        if best is None:
            raise LinalgError(f"singular matrix: no pivot at elimination step {step + 1}")
        _, pi, pj = best
        m[step], m[pi] = m[pi], m[step]
        aug[step], aug[pi] = aug[pi], aug[step]
        if pj != step:
            for row in m:
                row[step], row[pj] = row[pj], row[step]
            col_perm[step], col_perm[pj] = col_perm[pj], col_perm[step]
        piv_inv = m[step][step].inv()
        m[step] = [piv_inv * e for e in m[step]]
        aug[step] = [piv_inv * e for e in aug[step]]
        for i in range(n):
            if i == step:
                continue
            f = m[i][step]
            if f.is_zero():
                continue
            m[i] = [mi - f * ms for mi, ms in zip(m[i], m[step])]
            aug[i] = [ai - f * as_ for ai, as_ in zip(aug[i], aug[step])]
    # undo the column permutation: rows of the inverse are permuted
    ents = {}
    for i in range(n):
        for j in range(n):
            e = aug[i][j]
            if not e.is_zero():
                ents[(col_perm[i] + 1, j + 1)] = e
    return RingMatrix(n, n, a.ring, ents)


def rank(a: RingMatrix) -> int:
    m = _to_dense(a)
    r = 0
    rows, cols = a.rows, a.cols
    for col_start in range(cols):
        if r >= rows:
            break
        best = None
        for i in range(r, rows):
            for j in range(r, cols):
                e = m[i][j]
                if e.is_zero():
                    continue
                score = _pivot_score(e)
                if best is None or score < best[0]:
                    best = (score, i, j)
        if best is None:
            break
        _, pi, pj = best
        m[r], m[pi] = m[pi], m[r]
        for row in m:
            row[r], row[pj] = row[pj], row[r]
        piv_inv = m[r][r].inv()
        m[r] = [piv_inv * e for e in m[r]]
        for i in range(r + 1, rows):
            f = m[i][r]
            if not f.is_zero():
                m[i] = [mi - f * ms for mi, ms in zip(m[i], m[r])]
        r += 1
    return r


def apply_poly(coeffs, a: RingMatrix) -> RingMatrix:
    """Evaluate p(a) by Horner; coeffs listed low degree first."""
    if a.rows != a.cols:
        raise LinalgError("apply_poly needs a square matrix")
    n = a.rows
    out = RingMatrix.zeros(n, n, a.ring)
    for c in reversed(list(coeffs)):
        out = out * a + RingMatrix.identity(n, a.ring).scalar_mul(c)
    return out
