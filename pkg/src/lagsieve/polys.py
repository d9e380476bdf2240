"""Polynomial families with exact coefficients, discriminants and
square classes."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import factorize


@dataclass(frozen=True)
class AlphaParam:
    """alpha = u + a/d in canonical form."""

    u: int
    a: int = 0
    d: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if self.d == 1 and self.a != 0:
            raise ValueError("a must be 0 when d = 1")
        if self.d > 1 and not (1 <= self.a < self.d and math.gcd(self.a, self.d) == 1):
            raise ValueError("need 1 <= a < d and gcd(a, d) = 1")

    @classmethod
    def from_value(cls, value) -> "AlphaParam":
        q = Fraction(value)
        u = math.floor(q)
        rest = q - u
        return cls(u, rest.numerator, rest.denominator)

    @classmethod
    def half(cls, u: int) -> "AlphaParam":
        return cls(u, 1, 2)

    @property
    def value(self) -> Fraction:
        return self.u + Fraction(self.a, self.d)

    def __str__(self):
        return str(self.u) if self.d == 1 else f"{self.u}+{self.a}/{self.d}"


class _Poly:
    """Dense polynomial, ``coeffs[j]`` is the coefficient of x**j."""

    __slots__ = ("coeffs",)
    _zero: object = 0

    def __init__(self, coeffs: Sequence = ()):
        cs = [self._coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @staticmethod
    def _coerce(c):
        return c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self._zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, j: int):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else self._zero

    def __eq__(self, other):
        if isinstance(other, _Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}" if mono else f"{c}"
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")

    def __call__(self, x):
        acc = self._zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _new(self, coeffs):
        return type(self)(coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return self._new([self[i] + other[i] for i in range(n)])

    def __neg__(self):
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, _Poly):
            return self._new([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return self._new([])
        out = [self._zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return self._new(out)

    __rmul__ = __mul__

    def derivative(self):
        return self._new([j * c for j, c in enumerate(self.coeffs)][1:])

    def compose_neg(self):
        """p(-x)."""
        return self._new([c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)])

    def scale_var(self, s):
        """p(s*x)."""
        return self._new([c * s**j for j, c in enumerate(self.coeffs)])


class IntPoly(_Poly):
    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            return c.numerator
        if not isinstance(c, int):
            raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        return int(c)

    def divmod_monic(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division by a divisor with leading coefficient +-1."""
        if divisor.is_zero() or abs(divisor.leading) != 1:
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i] * lead
            if q:
                quot[i - dd] = q
                for j, c in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= q * c
        return IntPoly(quot), IntPoly(rem[:dd])

    def divides(self, divisor: "IntPoly") -> bool:
        return self.divmod_monic(divisor)[1].is_zero()

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    def to_list(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, text: str) -> "IntPoly":
        return cls([int(c) for c in json.loads(text)])


class RatPoly(_Poly):
    __slots__ = ()
    _zero = Fraction(0)

    @staticmethod
    def _coerce(c):
        return Fraction(c)

    def to_intpoly(self) -> tuple[int, IntPoly]:
        """(D, D*self) with D the least common denominator."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return den, IntPoly([c * den for c in self.coeffs])


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")


def fixed_coefficients(n: int, alpha: AlphaParam) -> list[int]:
    """C(n,j) * (a+(u+n)d)...(a+(u+j+1)d) for j = 0..n (all a_j = 1)."""
    _check_n(n)
    out = [0] * (n + 1)
    prod = 1
    binom = 1
    for j in range(n, -1, -1):
        out[j] = binom * prod
        # step to j-1
        prod *= alpha.a + (alpha.u + j) * alpha.d
        binom = binom * j // (n - j + 1)
    return out


def build_psi(n: int, alpha: AlphaParam, a: Sequence[int]) -> IntPoly:
    """The twisted polynomial psi_n^(alpha)(x; a_0, ..., a_n)."""
    _check_n(n)
    if len(a) != n + 1:
        raise ValueError(f"need {n + 1} coefficients a_j, got {len(a)}")
    base = fixed_coefficients(n, alpha)
    return IntPoly([aj * bj for aj, bj in zip(a, base)])


def build_g(n: int, alpha: AlphaParam) -> IntPoly:
    return IntPoly(fixed_coefficients(n, alpha))


def build_script_L(n: int, u: int) -> IntPoly:
    """sum_j C(n,j) (1+2(u+n))...(1+2(u+j+1)) x^j."""
    return build_g(n, AlphaParam.half(u))


def laguerre_reference(n: int, alpha) -> RatPoly:
    """Generalized Laguerre polynomial L_n^(alpha)(x), exact."""
    if n < 0:
        raise ValueError("n must be >= 0")
    alpha = Fraction(alpha)
    coeffs = [Fraction(0)] * (n + 1)
    prod = Fraction(1)
    for j in range(n, -1, -1):
        coeffs[j] = prod / (math.factorial(n - j) * math.factorial(j)) * (-1) ** j
        prod *= j + alpha
    return RatPoly(coeffs)


def substitute_square(p: _Poly) -> _Poly:
    """p(x^2)."""
    out = [p._zero] * (2 * len(p.coeffs))
    for j, c in enumerate(p.coeffs):
        out[2 * j] = c
    return p._new(out)


def disc_formula(n: int, u: int) -> Fraction:
    """prod_{j=2}^n j^j ((2u+1)/2 + j)^(j-1)."""
    _check_n(n)
    out = Fraction(1)
    for j in range(2, n + 1):
        out *= Fraction(j) ** j * (Fraction(2 * u + 1, 2) + j) ** (j - 1)
    return out


def _bareiss_det(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    """Sylvester matrix of two coefficient lists (ascending powers)."""
    df, dg = len(f) - 1, len(g) - 1
    size = df + dg
    fh, gh = list(reversed(f)), list(reversed(g))
    rows = []
    for i in range(dg):
        rows.append([0] * i + fh + [0] * (size - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + gh + [0] * (size - dg - 1 - i))
    return rows


def disc_oracle(p: _Poly) -> Fraction:
    """Discriminant via the Sylvester resultant of p and p'."""
    if p.is_zero():
        raise ValueError("zero polynomial has no discriminant")
    if p.degree < 1:
        raise ValueError("discriminant needs degree >= 1")
    if isinstance(p, RatPoly):
        den, ip = p.to_intpoly()
    else:
        den, ip = 1, p
    n = ip.degree
    if n == 1:
        return Fraction(1)
    res = _bareiss_det(sylvester_matrix(ip.coeffs, ip.derivative().coeffs))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    # disc(D*p) = D^(2n-2) disc(p)
    return Fraction(sign * res, ip.leading) / Fraction(den) ** (2 * n - 2)


@dataclass(frozen=True)
class SquareClass:
    """q * Q*^2, stored as the signed squarefree kernel of q.

    The denominator is normalised to 1 (q and q*d^2 share a class), which
    makes the representation unique.
    """

    kernel: int

    def __post_init__(self):
        if self.kernel == 0:
            raise ValueError("0 has no square class")

    @property
    def numerator(self) -> int:
        return self.kernel

    @property
    def denominator(self) -> int:
        return 1

    @classmethod
    def of(cls, q) -> "SquareClass":
        q = Fraction(q)
        if q == 0:
            raise ValueError("0 has no square class")
        k = -1 if q < 0 else 1
        exps: dict[int, int] = {}
        for part in (q.numerator, q.denominator):
            for prime, e in factorize(part).items():
                exps[prime] = exps.get(prime, 0) + e
        for prime, e in exps.items():
            if e % 2:
                k *= prime
        return cls(k)

    @classmethod
    def of_product(cls, factors, sign: int = 1) -> "SquareClass":
        """Class of a product of nonzero integers/rationals without
        forming the product."""
        odd: set[int] = set()
        neg = sign < 0
        for f in factors:
            f = Fraction(f)
            if f < 0:
                neg = not neg
            for part in (f.numerator, f.denominator):
                for prime, e in factorize(part).items():
                    if e % 2:
                        odd ^= {prime}
        k = -1 if neg else 1
        for prime in odd:
            k *= prime
        return cls(k)

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        return SquareClass.of(self.kernel * other.kernel)

    def __str__(self):
        return str(self.kernel)


def _b_factors(n: int, u: int) -> list[Fraction]:
    """The factors whose product is b (the disc(L_n^(u)) square-class
    representative) in the closed form with 2^delta in the denominator."""
    _check_n(n)
    top_odd = n if n % 2 else n - 1
    top_even = n - 1 if n % 2 else n
    fs: list[Fraction] = [Fraction(j) for j in range(3, top_odd + 1, 2)]
    fs += [Fraction(2 * u + 1 + 2 * j) for j in range(2, top_even + 1, 2)]
    delta = 1 if n % 4 in (2, 3) else 0
    fs.append(Fraction(1, 2**delta))
    return fs


def b_value(n: int, u: int) -> Fraction:
    out = Fraction(1)
    for f in _b_factors(n, u):
        out *= f
    return out


def square_class_b(n: int, u: int) -> SquareClass:
    return SquareClass.of_product(_b_factors(n, u))


def is_square_class_trivial(c) -> bool:
    if not isinstance(c, SquareClass):
        c = SquareClass.of(c)
    return c.kernel == 1
