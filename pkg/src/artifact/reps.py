"""Matrix representations of the two-parameter type B quantum group.

Provides the vector representation of the finite algebra, the level-0
vector representation of the affine algebra in Drinfeld generators, the
evaluation representation depending on a parameter z, structure
constants, coproduct amplification, and the quasi-commuting shift
module used to separate the two-parameter algebra from its
one-parameter degeneration.
"""

from __future__ import annotations

from fractions import Fraction

from .coeff import FieldElem, RatZ, ONE, ZERO, U, V, W, R, S
from .linalg import RingMatrix, FIELD, RATZ, IndexScheme, kron

RS_HALF = U * V                 # (rs)^(1/2)
RSINV_HALF = (U * V).inv()      # (rs)^(-1/2)


def cartan(n: int, i: int, j: int) -> int:
    """Cartan integer a_ij for the rank-n type B root system."""
    if i == j:
        return 2
    if abs(i - j) > 1:
        return 0
    if i == n and j == n - 1:
        return -2
    return -1


def r_i(n: int, i: int) -> FieldElem:
    """r_i = r^(alpha_i, alpha_i); index 0 uses the affine root."""
    return R if i == n else R * R


def s_i(n: int, i: int) -> FieldElem:
    return S if i == n else S * S


def _finite_pairing(n: int, i: int, j: int) -> FieldElem:
    """<omega'_i, omega_j> for 1 <= i, j <= n."""
    if i == j:
        return (U * V.inv()) ** 2 if i == n else (U * V.inv()) ** 4
    if j == i + 1:
        return (R * R).inv()
    if j == i - 1:
        return S * S
    return ONE


def struct_const(n: int, i: int, j: int) -> FieldElem:
    """Structure constant <omega'_i, omega_j> for i, j in {0, ..., n}.

    The affine row and column are obtained from the finite block by
    bimultiplicativity: omega_0 pairs as the inverse of omega_theta,
    where theta has the mark vector (1, 2, ..., 2).
    """
    marks = [1] + [2] * (n - 1)
    if i == 0 and j == 0:
        out = ONE
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                out = out * _finite_pairing(n, a, b) ** (marks[a - 1] * marks[b - 1])
        return out
    if i == 0:
        out = ONE
        for a in range(1, n + 1):
            out = out * _finite_pairing(n, a, j) ** (-marks[a - 1])
        return out
    if j == 0:
        out = ONE
        for b in range(1, n + 1):
            out = out * _finite_pairing(n, i, b) ** (-marks[b - 1])
        return out
    return _finite_pairing(n, i, j)


class FiniteRep:
    """Vector representation of the rank-n finite algebra on C^N."""

    def __init__(self, n: int):
        self.idx = IndexScheme(n)
        self.n = n
        self.N = self.idx.N

    def _mat(self, ents) -> RingMatrix:
        return RingMatrix(self.N, self.N, FIELD, ents)

    def e(self, i: int) -> RingMatrix:
        n, pr = self.n, self.idx.prime
        if i < n:
            return self._mat({(i, i + 1): ONE,
                              (pr(i + 1), pr(i)): -(R * S).inv()})
        return self._mat({(n, n + 1): W * RSINV_HALF,
                          (n + 1, pr(n)): -(W * R.inv())})

    def f(self, i: int) -> RingMatrix:
        n, pr = self.n, self.idx.prime
        if i < n:
            return self._mat({(i + 1, i): ONE,
                              (pr(i), pr(i + 1)): -(R * S).inv()})
        return self._mat({(n + 1, n): W * RSINV_HALF,
                          (pr(n), n + 1): -(W * S.inv())})

    def omega(self, i: int) -> RingMatrix:
        n, pr, N = self.n, self.idx.prime, self.N
        ents = {}
        if i < n:
            special = {i: R * R, i + 1: S * S,
                       pr(i + 1): (S * S).inv(), pr(i): (R * R).inv()}
        else:
            special = {n: R * S.inv(), n + 1: ONE, pr(n): R.inv() * S}
            for j in range(1, n):
                special[j] = (R * S).inv()
                special[pr(j)] = R * S
        for j in range(1, N + 1):
            ents[(j, j)] = special.get(j, ONE)
        return self._mat(ents)

    def omega_prime(self, i: int) -> RingMatrix:
        n, pr, N = self.n, self.idx.prime, self.N
        ents = {}
        if i < n:
            special = {i: S * S, i + 1: R * R,
                       pr(i + 1): (R * R).inv(), pr(i): (S * S).inv()}
        else:
            special = {n: R.inv() * S, n + 1: ONE, pr(n): R * S.inv()}
            for j in range(1, n):
                special[j] = (R * S).inv()
                special[pr(j)] = R * S
        for j in range(1, N + 1):
            ents[(j, j)] = special.get(j, ONE)
        return self._mat(ents)

    def identity(self) -> RingMatrix:
        return RingMatrix.identity(self.N, FIELD)

    def gen(self, name: str) -> RingMatrix:
        """Resolve a generator label like 'e1', 'f2', 'w1', 'w2p'."""
        if name.startswith("e"):
            return self.e(int(name[1:]))
        if name.startswith("f"):
            return self.f(int(name[1:]))
        if name.startswith("w") and name.endswith("p"):
            return self.omega_prime(int(name[1:-1]))
        if name.startswith("w"):
            return self.omega(int(name[1:]))
        raise ValueError(f"unknown generator {name}")


class EvaluationRep(FiniteRep):
    """Evaluation representation at parameter z (level 0).

    The restriction to the finite subalgebra agrees with FiniteRep; the
    affine index 0 acts through z.  gamma and gamma' act as 1.
    """

    def __init__(self, n: int, z: FieldElem):
        super().__init__(n)
        self.z = z

    def e(self, i: int) -> RingMatrix:
        if i > 0:
            return super().e(i)
        pr = self.idx.prime
        c = -(U.inv() * (V ** 3).inv()) * self.z   # -r^(-1/2) s^(-3/2) z
        return self._mat({(pr(1), 2): c, (pr(2), 1): -(c * R * S)})

    def f(self, i: int) -> RingMatrix:
        if i > 0:
            return super().f(i)
        pr = self.idx.prime
        c = -((U ** 3).inv() * V.inv()) * self.z.inv()
        return self._mat({(2, pr(1)): c, (1, pr(2)): -(c * R * S)})

    def omega(self, i: int) -> RingMatrix:
        if i > 0:
            return super().omega(i)
        return self._omega0(S * S, (R * R).inv(), R * R, (S * S).inv())

    def omega_prime(self, i: int) -> RingMatrix:
        if i > 0:
            return super().omega_prime(i)
        return self._omega0(R * R, (S * S).inv(), S * S, (R * R).inv())

    def _omega0(self, d1, d2, d2p, d1p) -> RingMatrix:
        n, pr, N = self.n, self.idx.prime, self.N
        ents = {(1, 1): d1, (2, 2): d2, (n + 1, n + 1): ONE,
                (pr(2), pr(2)): d2p, (pr(1), pr(1)): d1p}
        for j in range(3, n + 1):
            ents[(j, j)] = (R * S).inv() ** 2
            ents[(pr(j), pr(j))] = (R * S) ** 2
        return self._mat(ents)


class AffineVectorRep(FiniteRep):
    """Level-0 vector representation in Drinfeld generators."""

    def pairing(self, i: int) -> FieldElem:
        """<i, i> = <omega'_i, omega_i>."""
        return _finite_pairing(self.n, i, i)

    def xplus(self, i: int, k: int) -> RingMatrix:
        n, pr = self.n, self.idx.prime
        q = (U * V.inv()) ** 2        # r s^-1
        if i < n:
            return self._mat({
                (i, i + 1): q ** (i * k),
                (pr(i + 1), pr(i)): -(R * S).inv() * q ** ((2 * n - 1 - i) * k)})
        return self._mat({
            (n, n + 1): W * RSINV_HALF * q ** (n * k),
            (n + 1, pr(n)): -(W * R.inv()) * q ** ((n - 1) * k)})

    def xminus(self, i: int, k: int) -> RingMatrix:
        n, pr = self.n, self.idx.prime
        q = (U * V.inv()) ** 2
        if i < n:
            return self._mat({
                (i + 1, i): q ** (i * k),
                (pr(i), pr(i + 1)): -(R * S).inv() * q ** ((2 * n - 1 - i) * k)})
        return self._mat({
            (n + 1, n): W * RSINV_HALF * q ** (n * k),
            (pr(n), n + 1): -(W * S.inv()) * q ** ((n - 1) * k)})

    def a(self, i: int, ell: int) -> RingMatrix:
        if ell == 0:
            raise ValueError("imaginary generator needs a nonzero mode")
        n, pr = self.n, self.idx.prime
        q = (U * V.inv()) ** 2
        if i < n:
            c = -(q ** ell - q ** (-ell)) \
                * FieldElem.from_fraction(Fraction(1, ell)) * (R * R - S * S).inv()
            return self._mat({
                (i + 1, i + 1): c * q ** ((i + 1) * ell),
                (i, i): -(c * q ** ((i - 1) * ell)),
                (pr(i), pr(i)): c * q ** ((2 * n - i) * ell),
                (pr(i + 1), pr(i + 1)): -(c * q ** ((2 * n - i - 2) * ell))})
        c = -(q ** ell - q ** (-ell)) \
            * FieldElem.from_fraction(Fraction(1, ell)) * (R - S).inv()
        return self._mat({
            (n, n): -(c * q ** ((n - 1) * ell)),
            (n + 1, n + 1): c * (q ** (n * ell) - q ** ((n - 1) * ell)),
            (pr(n), pr(n)): c * q ** (n * ell)})

    def omega_mode(self, i: int, m: int) -> RingMatrix:
        """Coefficient of z^-m in omega_i(z) = omega_i exp((r_i - s_i)
        sum_{l>0} a_i(l) z^-l).  Zero for m < 0."""
        if m < 0:
            return RingMatrix.zeros(self.N, self.N, FIELD)
        return self.omega(i) * self._exp_series(i, m, +1)

    def omega_prime_mode(self, i: int, m: int) -> RingMatrix:
        """Coefficient of z^m in omega'_i(z); nonzero only for m <= 0."""
        if m > 0:
            return RingMatrix.zeros(self.N, self.N, FIELD)
        return self.omega_prime(i) * self._exp_series(i, -m, -1)

    def _exp_series(self, i: int, m: int, sign: int) -> RingMatrix:
        """Order-m coefficient of exp(sign (r_i - s_i) sum_l a_i(sign l) t^l).

        All a_i modes are diagonal, so the exponential is evaluated as a
        scalar power series on each diagonal position.
        """
        ri = r_i(self.n, i)
        si = s_i(self.n, i)
        scale = (ri - si) if sign > 0 else -(ri - si)
        # diagonal of the exponent argument, as truncated series in t
        arg = [dict() for _ in range(m + 1)]
        for ell in range(1, m + 1):
            mat = self.a(i, sign * ell)
            for (p, q), val in mat.entries.items():
                arg[ell][(p, q)] = val * scale
        # exp by the recurrence m c_m = sum_{k=1}^{m} k a_k c_{m-k}
        coef = [dict() for _ in range(m + 1)]
        coef[0] = {(j, j): ONE for j in range(1, self.N + 1)}
        for t in range(1, m + 1):
            acc = {}
            for k in range(1, t + 1):
                for key, av in arg[k].items():
                    cv = coef[t - k].get(key)
                    if cv is None:
                        continue
                    term = av * cv * FieldElem.from_fraction(Fraction(k, t))
                    acc[key] = acc.get(key, ZERO) + term
            coef[t] = acc
        return RingMatrix(self.N, self.N, FIELD,
                          {k: v for k, v in coef[m].items() if not v.is_zero()})


# ---------------------------------------------------------------------------
# coproducts
# ---------------------------------------------------------------------------

def delta_e(rep1, rep2, i: int) -> RingMatrix:
    """(rep1 x rep2)(Delta e_i) = e_i x 1 + omega_i x e_i."""
    I1 = RingMatrix.identity(rep1.N, FIELD)
    I2 = RingMatrix.identity(rep2.N, FIELD)
    return kron(rep1.e(i), I2) + kron(rep1.omega(i), rep2.e(i))


def delta_f(rep1, rep2, i: int) -> RingMatrix:
    """(rep1 x rep2)(Delta f_i) = 1 x f_i + f_i x omega'_i."""
    I1 = RingMatrix.identity(rep1.N, FIELD)
    return kron(I1, rep2.f(i)) + kron(rep1.f(i), rep2.omega_prime(i))


def delta_omega(rep1, rep2, i: int) -> RingMatrix:
    return kron(rep1.omega(i), rep2.omega(i))


def delta_omega_prime(rep1, rep2, i: int) -> RingMatrix:
    return kron(rep1.omega_prime(i), rep2.omega_prime(i))


def delta_gen(rep1, rep2, name: str) -> RingMatrix:
    if name.startswith("e"):
        return delta_e(rep1, rep2, int(name[1:]))
    if name.startswith("f"):
        return delta_f(rep1, rep2, int(name[1:]))
    if name.startswith("w") and name.endswith("p"):
        return delta_omega_prime(rep1, rep2, int(name[1:-1]))
    if name.startswith("w"):
        return delta_omega(rep1, rep2, int(name[1:]))
    raise ValueError(f"unknown generator {name}")


class AmplifiedRep:
    """Tensor-square amplification of a representation via the coproduct.

    Generators act as (base x base)(Delta x) on C^(N^2).  Used to make
    word-equality checks in the positive part more discriminating than
    the bare vector representation.
    """

    def __init__(self, base):
        self.base = base
        self.n = base.n
        self.N = base.N * base.N
        self._cache: dict[str, RingMatrix] = {}

    def gen(self, name: str) -> RingMatrix:
        m = self._cache.get(name)
        if m is None:
            m = delta_gen(self.base, self.base, name)
            self._cache[name] = m
        return m

    def e(self, i: int) -> RingMatrix:
        return self.gen(f"e{i}")

    def f(self, i: int) -> RingMatrix:
        return self.gen(f"f{i}")

    def omega(self, i: int) -> RingMatrix:
        return self.gen(f"w{i}")

    def omega_prime(self, i: int) -> RingMatrix:
        return self.gen(f"w{i}p")

    def identity(self) -> RingMatrix:
        return RingMatrix.identity(self.N, FIELD)


# ---------------------------------------------------------------------------
# quasi-commuting shift module (separates rs != 1 from rs = 1)
# ---------------------------------------------------------------------------

def shift_module(ell: int) -> tuple[RingMatrix, RingMatrix]:
    """The pair (X, Y) of ell x ell matrices over Laurent polynomials in
    a parameter p (realized as the RatZ variable): X the cyclic shift,
    Y the weighted shift with weights p^-1, ..., p^-(ell-1) and corner
    entry (-1)^(ell-1)."""
    x_ents = {(i + 1, i): RatZ.const(ONE) for i in range(1, ell)}
    x_ents[(1, ell)] = RatZ.const(ONE)
    y_ents = {}
    zpow = RatZ.z()
    for i in range(1, ell):
        y_ents[(i, i + 1)] = RatZ.const(ONE) / zpow ** i
    y_ents[(ell, 1)] = RatZ.const(ONE if (ell - 1) % 2 == 0 else -ONE)
    X = RingMatrix(ell, ell, RATZ, x_ents)
    Y = RingMatrix(ell, ell, RATZ, y_ents)
    return X, Y


def shift_module_residual(ell: int) -> RingMatrix:
    """X Y - p Y X over Laurent polynomials in p."""
    X, Y = shift_module(ell)
    return X * Y - (Y * X).scalar_mul(RatZ.z())
