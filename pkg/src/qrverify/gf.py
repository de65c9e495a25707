"""Finite fields GF(p) and GF(p^m) in the polynomial basis.

Fields are built deterministically: the modulus is the monic irreducible
polynomial of degree m whose coefficient vector, read as a base-p integer
(constant term least significant), is smallest.  Elements are enumerated in
the same order, which fixes the choice of roots of unity.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from sympy.ntheory import isprime, n_order

from .errors import DomainError

# ---------------------------------------------------------------------------
# dense polynomials over GF(p) as lists of ints, lowest degree first


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    df = len(f) - 1
    inv = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = (a[-1] * inv) % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def _ppowmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over GF(p)."""
    f = _trim([c % p for c in f])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    # x^(p^m) == x mod f
    xq = x
    for _ in range(m):
        xq = _ppowmod(xq, p, f, p)
    if _psub(xq, x, p):
        return False
    for d in _prime_factors(m):
        xq = x
        for _ in range(m // d):
            xq = _ppowmod(xq, p, f, p)
        if len(_pgcd(f, _psub(xq, x, p), p)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------


def legendre(a: int, ell: int) -> int:
    """Legendre symbol (a/ell) by Euler's criterion."""
    if ell < 3 or not isprime(ell):
        raise DomainError(f"{ell} is not an odd prime")
    r = pow(a % ell, (ell - 1) // 2, ell)
    return -1 if r == ell - 1 else r


def multiplicative_order(p: int, ell: int) -> int:
    """ord_ell(p), the degree of the smallest field of characteristic p holding ell-th roots of 1."""
    if p % ell == 0:
        raise DomainError(f"{p} is not a unit mod {ell}")
    return int(n_order(p, ell))


class FieldCtx:
    """The field GF(p^m) = GF(p)[x]/(modulus)."""

    __slots__ = ("p", "m", "q", "modulus", "_key")

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        self._key = (p, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}) mod {poly_str(self.modulus)}"

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def __call__(self, value) -> FqElem:
        """Coerce an int (into the prime subfield) or a coefficient sequence."""
        if isinstance(value, FqElem):
            if value.ctx != self:
                raise DomainError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FqElem(self, (value % self.p,) + (0,) * (self.m - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            coeffs = _pmod(coeffs, self.modulus, self.p)
        coeffs += [0] * (self.m - len(coeffs))
        return FqElem(self, tuple(coeffs))

    def zero(self) -> FqElem:
        return self(0)

    def one(self) -> FqElem:
        return self(1)

    def gen(self) -> FqElem:
        """The class of x (equal to 0 in a prime field)."""
        return self([0, 1])

    def from_index(self, n: int) -> FqElem:
        """Element whose coefficient vector is the base-p expansion of n."""
        if not 0 <= n < self.q:
            raise DomainError(f"index {n} out of range for {self!r}")
        coeffs = []
        for _ in range(self.m):
            n, c = divmod(n, self.p)
            coeffs.append(c)
        return FqElem(self, tuple(coeffs))

    def elements(self) -> Iterator[FqElem]:
        for n in range(self.q):
            yield self.from_index(n)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}


class FqElem:
    """An element of GF(p^m), stored as its coefficient vector."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other) -> FqElem:
        if isinstance(other, FqElem):
            if other.ctx != self.ctx:
                raise DomainError("operands belong to different fields")
            return other
        if isinstance(other, int):
            return self.ctx(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FqElem(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> FqElem:
        p = self.ctx.p
        return FqElem(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FqElem(self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self.ctx
        p, m = ctx.p, ctx.m
        if m == 1:
            return FqElem(ctx, ((self.coeffs[0] * other.coeffs[0]) % p,))
        a, b = self.coeffs, other.coeffs
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        f = ctx.modulus
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d] % p
            if c:
                base = d - m
                for i in range(m):
                    prod[base + i] -= c * f[i]
        return FqElem(ctx, tuple(c % p for c in prod[:m]))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> FqElem:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> FqElem:
        if not self:
            raise ZeroDivisionError("inverse of zero in " + repr(self.ctx))
        if self.ctx.m == 1:
            return FqElem(self.ctx, (pow(self.coeffs[0], -1, self.ctx.p),))
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.ctx(other) * self.inverse()

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ctx(other)
        return isinstance(other, FqElem) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    def __int__(self) -> int:
        """Enumeration index; for prime-subfield elements this is the residue."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.ctx.p + c
        return n

    def in_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def frobenius(self) -> FqElem:
        return self ** self.ctx.p

    def order(self) -> int:
        """Multiplicative order."""
        if not self:
            raise DomainError("zero has no multiplicative order")
        n = self.ctx.q - 1
        for r in _prime_factors(n):
            while n % r == 0 and self ** (n // r) == 1:
                n //= r
        return n

    def __repr__(self) -> str:
        if self.ctx.m == 1:
            return str(self.coeffs[0])
        return poly_str(self.coeffs) or "0"

    def to_json(self) -> dict:
        return {"p": self.ctx.p, "m": self.ctx.m, "coeffs": list(self.coeffs)}


def poly_str(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"


@lru_cache(maxsize=None)
def gf_build(p: int, m: int = 1) -> FieldCtx:
    """Build GF(p^m) with the smallest monic irreducible modulus of degree m."""
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    if m < 1:
        raise DomainError(f"extension degree must be >= 1, got {m}")
    if m == 1:
        return FieldCtx(p, 1, (0, 1))
    for n in range(p**m):
        low = []
        for _ in range(m):
            n, c = divmod(n, p)
            low.append(c)
        cand = low + [1]
        if cand[0] and is_irreducible(cand, p):
            return FieldCtx(p, m, cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def field_for_roots(p: int, ell: int) -> FieldCtx:
    """Smallest field of characteristic p containing the ell-th roots of unity."""
    return gf_build(p, multiplicative_order(p, ell))


def find_root_of_unity(ctx: FieldCtx, ell: int) -> FqElem:
    """First primitive ell-th root of unity reached by the ascending element scan.

    Scans w = 1, 2, ... (base-p index order) and returns the first
    w^((q-1)/ell) of exact order ell.  ``ell`` need not be prime.
    """
    if ell < 1 or (ctx.q - 1) % ell:
        need = multiplicative_order(ctx.p, ell) if ell > 1 and ctx.p % ell else None
        hint = f"; need m to be a multiple of {need}" if need else ""
        raise DomainError(f"{ell} does not divide {ctx.q} - 1{hint}")
    cofactor = (ctx.q - 1) // ell
    factors = _prime_factors(ell)
    for n in range(1, ctx.q):
        z = ctx.from_index(n) ** cofactor
        if all(z ** (ell // r) != 1 for r in factors):
            return z
    raise AssertionError("no root of unity found")  # unreachable


def trace_to_prime(ctx: FieldCtx, a: FqElem) -> FqElem:
    """Absolute trace a + a^p + ... + a^(p^(m-1)); lies in the prime subfield."""
    a = ctx(a)
    acc = a
    t = a
    for _ in range(ctx.m - 1):
        t = t.frobenius()
        acc = acc + t
    return acc
