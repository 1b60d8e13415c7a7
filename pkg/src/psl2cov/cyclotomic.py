"""Exact arithmetic in rings of cyclotomic integers Z[zeta_n].

An element is a sparse integer combination of n-th roots of unity, stored as
a map from exponent to coefficient, i.e. an element of Z[x]/(x^n - 1).
Addition and multiplication stay in that cheap representation; reduction
modulo the n-th cyclotomic polynomial happens lazily, only when a question
has to be decided (equality, zero test, extraction of a rational integer).

The canonical form is computed on the tensor basis of Z[zeta_n]: write
n = q_1 ... q_r as a product of prime powers, pick w_i = zeta_n^(M_i) of
order q_i through the Chinese remainder theorem, and reduce each coordinate
modulo Phi_{q_i}.  The monomials w_1^d_1 ... w_r^d_r with 0 <= d_i < phi(q_i)
are a Z-basis of Z[zeta_n], so two elements agree modulo Phi_n exactly when
their coefficients on this basis agree.  Reducing a single coordinate only
ever rewrites a top digit p-1 into p-1 lower monomials, which keeps the
canonical form cheap even for conductors in the hundreds of thousands,
where long division by Phi_n would not be.

>>> root(4, 1) * root(4, 1) == -1
True
>>> (root(5, 1) + root(5, 2) + root(5, 3) + root(5, 4)).as_integer()
-1
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import lcm


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: multiplicity}."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Quotient of num by den over Z; raises if the division is not exact."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        if c % lead:
            raise ArithmeticError("polynomial division is not exact")
        c //= lead
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division is not exact")
    return out


@lru_cache(maxsize=None)
def _cyclo_coeffs(n: int) -> tuple[int, ...]:
    if n == 1:
        return (-1, 1)
    # divide x^n - 1 by Phi_d for every proper divisor d of n
    quot = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            quot = _polydiv_exact(quot, _cyclo_coeffs(d))
    return tuple(quot)


@dataclass(frozen=True)
class CyclotomicPolynomial:
    """Phi_n with integer coefficients in ascending order of the power."""

    n: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def cyclotomic_polynomial(n: int) -> CyclotomicPolynomial:
    """The n-th cyclotomic polynomial, by exact recursive division.

    >>> cyclotomic_polynomial(4).coefficients
    (1, 0, 1)
    >>> cyclotomic_polynomial(6).coefficients
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    return CyclotomicPolynomial(n, _cyclo_coeffs(n))


class _Structure:
    """Per-conductor reduction data: CRT components and a rewrite memo."""

    __slots__ = ("n", "components", "_expand")

    def __init__(self, n: int):
        self.n = n
        comps = []
        for p, a in sorted(factorize(n).items()):
            pe = p**a
            step = pe // p  # p^(a-1)
            phi = step * (p - 1)
            rest = n // pe
            m_i = rest * pow(rest, -1, pe) % n  # 1 mod pe, 0 mod n/pe
            comps.append((pe, p, step, phi, m_i))
        self.components = comps
        self._expand: dict[int, tuple[tuple[int, int], ...]] = {}

    def expand(self, e: int) -> tuple[tuple[int, int], ...]:
        """zeta_n^e on the tensor basis, as ((exponent, sign), ...)."""
        hit = self._expand.get(e)
        if hit is not None:
            return hit
        parts = [(0, 1)]
        for pe, p, step, phi, m_i in self.components:
            d = e % pe
            if d < phi:
                if d:
                    parts = [(x + d * m_i, s) for x, s in parts]
            else:
                r = d - phi  # top p-adic digit is p-1: rewrite via Phi_{p^a}
                digits = [c * step + r for c in range(p - 1)]
                parts = [(x + t * m_i, -s) for x, s in parts for t in digits]
        n = self.n
        hit = tuple((x % n, s) for x, s in parts)
        self._expand[e] = hit
        return hit

    def canonicalize(self, terms: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for e, c in terms.items():
            if not c:
                continue
            for x, s in self.expand(e):
                nc = out.get(x, 0) + (c if s > 0 else -c)
                if nc:
                    out[x] = nc
                else:
                    del out[x]
        return out


@lru_cache(maxsize=None)
def _structure(n: int) -> _Structure:
    return _Structure(n)


class Cyclotomic:
    """An element of Z[zeta_n]; n is called the conductor of the value.

    Instances are immutable.  Mixed-conductor arithmetic promotes both sides
    into Z[zeta_lcm] first; plain ints act as rational integers.
    """

    __slots__ = ("n", "terms", "_canon")
    __hash__ = None  # equality promotes conductors; no stable cross-conductor hash

    def __init__(self, n: int, terms: dict[int, int]):
        self.n = n
        # exponents reduced mod n, zero coefficients dropped: the operators
        # rely on both properties
        clean: dict[int, int] = {}
        for e, c in terms.items():
            if c:
                e %= n
                nc = clean.get(e, 0) + c
                if nc:
                    clean[e] = nc
                else:
                    del clean[e]
        self.terms = clean
        self._canon: dict[int, int] | None = None

    # -- construction ------------------------------------------------------

    @staticmethod
    def constant(c: int, n: int = 1) -> "Cyclotomic":
        return Cyclotomic(n, {0: c} if c else {})

    # -- representation changes --------------------------------------------

    def promoted(self, m: int) -> "Cyclotomic":
        """Image under zeta_n -> zeta_m^(m/n); m must be a multiple of n."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"{m} is not a multiple of conductor {self.n}")
        f = m // self.n
        return Cyclotomic(m, {e * f % m: c for e, c in self.terms.items()})

    def canonical(self) -> dict[int, int]:
        """Coefficients on the tensor basis (reduction modulo Phi_n)."""
        if self._canon is None:
            self._canon = _structure(self.n).canonicalize(self.terms)
        return self._canon

    def is_zero(self) -> bool:
        return not self.canonical()

    def as_integer(self) -> int | None:
        """The rational integer this element equals, or None if it is not one."""
        c = self.canonical()
        if not c:
            return 0
        if len(c) == 1 and 0 in c:
            return c[0]
        return None

    def conjugate(self) -> "Cyclotomic":
        n = self.n
        return Cyclotomic(n, {(n - e) % n: c for e, c in self.terms.items()})

    def approx(self) -> complex:
        """Floating approximation; advisory only, all decisions are exact."""
        n = self.n
        return sum(
            c * cmath.exp(2j * cmath.pi * e / n) for e, c in self.terms.items()
        ) or complex(0)

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, int):
            return Cyclotomic.constant(other)
        return None

    def _pair(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self.n == other.n:
            return self, other
        m = lcm(self.n, other.n)
        return self.promoted(m), other.promoted(m)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._pair(other)
        t = dict(a.terms)
        for e, c in b.terms.items():
            nc = t.get(e, 0) + c
            if nc:
                t[e] = nc
            else:
                del t[e]
        return Cyclotomic(a.n, t)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Cyclotomic(self.n, {})
            return Cyclotomic(self.n, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._pair(other)
        n = a.n
        t: dict[int, int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = (e1 + e2) % n
                nc = t.get(e, 0) + c1 * c2
                if nc:
                    t[e] = nc
                else:
                    del t[e]
        return Cyclotomic(n, t)

    __rmul__ = __mul__

    def __pow__(self, t: int):
        if t < 0:
            raise ValueError("negative powers are not defined here")
        out = Cyclotomic(self.n, {0: 1})
        for _ in range(t):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._pair(other)
        return a.canonical() == b.canonical()

    def __repr__(self):
        return f"Cyclotomic({self.text()!r})"

    # -- display -------------------------------------------------------------

    def text(self) -> str:
        """Compact exact rendering of the canonical form, '0' for zero."""
        c = self.canonical()
        if not c:
            return "0"
        bits = []
        for e in sorted(c):
            coeff = c[e]
            if e == 0:
                s = str(coeff)
            else:
                mono = f"z{self.n}" + (f"^{e}" if e != 1 else "")
                if coeff == 1:
                    s = mono
                elif coeff == -1:
                    s = "-" + mono
                else:
                    s = f"{coeff}*{mono}"
            bits.append(s)
        out = bits[0]
        for s in bits[1:]:
            out += s if s.startswith("-") else "+" + s
        return out


def root(n: int, k: int) -> Cyclotomic:
    """zeta_n^k as an element of Z[zeta_n]; k is taken modulo n.

    >>> root(6, 7) == root(6, 1)
    True
    """
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    return Cyclotomic(n, {k % n: 1})


def integer(c: int) -> Cyclotomic:
    """The rational integer c as a cyclotomic value of conductor 1."""
    return Cyclotomic.constant(c)
