"""Exact arithmetic in the cyclotomic ring Z[z]/Phi_ell(z).

Elements are kept on the power basis 1, z, ..., z^(ell-2); the relation
z^(ell-1) = -(1 + z + ... + z^(ell-2)) makes the representation canonical,
so equality is coefficient equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from sympy.ntheory import isprime

from .errors import ConsistencyError, DomainError
from .gf import legendre
from .minors import laplace_sweep, minor_count


def _check_ell(ell: int) -> None:
    if not isinstance(ell, int) or ell < 3 or not isprime(ell):
        raise DomainError(f"{ell!r} is not an odd prime")


def _reduce_cyclic(v: Sequence[int], ell: int) -> tuple[int, ...]:
    """Canonical coefficients of sum v[i] z^i, with v of length ell (mod z^ell - 1)."""
    top = v[ell - 1]
    return tuple(v[i] - top for i in range(ell - 1))


class CycInt:
    __slots__ = ("ell", "coeffs")

    def __init__(self, ell: int, coeffs: Iterable[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != ell - 1:
            raise DomainError(f"expected {ell - 1} coefficients, got {len(coeffs)}")
        self.ell = ell
        self.coeffs = coeffs

    @classmethod
    def from_int(cls, ell: int, n: int) -> CycInt:
        return cls(ell, (n,) + (0,) * (ell - 2))

    @classmethod
    def from_exponents(cls, ell: int, terms: dict[int, int] | Iterable[int]) -> CycInt:
        """sum of c * z^e over ``{e: c}`` (or over a plain iterable of exponents)."""
        if not isinstance(terms, dict):
            acc: dict[int, int] = {}
            for e in terms:
                acc[e] = acc.get(e, 0) + 1
            terms = acc
        v = [0] * ell
        for e, c in terms.items():
            v[e % ell] += c
        return cls(ell, _reduce_cyclic(v, ell))

    def _cyclic(self) -> list[int]:
        return list(self.coeffs) + [0]

    def _coerce(self, other) -> CycInt:
        if isinstance(other, int):
            return CycInt.from_int(self.ell, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        if other.ell != self.ell:
            raise DomainError(f"mismatched ell: {self.ell} vs {other.ell}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.ell, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.ell, (-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.ell, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ell = self.ell
        v = [0] * ell
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        v[(i + j) % ell] += a * b
        return CycInt(ell, _reduce_cyclic(v, ell))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycInt:
        if e < 0:
            raise DomainError("negative powers need not exist in Z[z]")
        result = CycInt.from_int(self.ell, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def times_zeta(self, e: int) -> CycInt:
        """Multiply by z^e (a cyclic rotation before reduction)."""
        ell = self.ell
        e %= ell
        v = self._cyclic()
        return CycInt(ell, _reduce_cyclic(v[ell - e:] + v[: ell - e], ell))

    def conjugate(self, t: int) -> CycInt:
        """Image under the Galois automorphism z -> z^t."""
        if t % self.ell == 0:
            raise DomainError("z -> z^0 is not an automorphism")
        return CycInt.from_exponents(self.ell, {i * t: c for i, c in enumerate(self.coeffs) if c})

    def exact_div(self, other: CycInt) -> CycInt:
        """Quotient self / other, which must lie in Z[z].

        Solves the linear system (multiplication-by-other matrix) q = self over
        the rationals and asserts the solution is integral.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero in Z[z]/Phi")
        n = self.ell - 1
        # column j holds the coefficients of other * z^j
        cols = [other.times_zeta(j).coeffs for j in range(n)]
        aug = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(self.coeffs[i])] for i in range(n)]
        for c in range(n):
            piv = next(r for r in range(c, n) if aug[r][c])
            aug[c], aug[piv] = aug[piv], aug[c]
            pv = aug[c][c]
            row_c = [x / pv for x in aug[c]]
            aug[c] = row_c
            for r in range(n):
                if r != c and aug[r][c]:
                    t = aug[r][c]
                    aug[r] = [x - t * y for x, y in zip(aug[r], row_c)]
        q = [aug[i][n] for i in range(n)]
        if any(x.denominator != 1 for x in q):
            raise ArithmeticError(f"{self} is not divisible by {other} in Z[z]")
        return CycInt(self.ell, (int(x) for x in q))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self.ell, other)
        return isinstance(other, CycInt) and self.ell == other.ell and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ell, self.coeffs))

    def __repr__(self) -> str:
        return f"CycInt({self.ell}, {list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def to_json(self) -> dict:
        return {"ell": self.ell, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> CycInt:
        return cls(int(data["ell"]), (int(c) for c in data["coeffs"]))


def cyc_arith(a: CycInt, b: CycInt, op: str) -> CycInt:
    if op == "neg":
        return -a
    if a.ell != b.ell:
        raise DomainError(f"mismatched ell: {a.ell} vs {b.ell}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise DomainError(f"unknown operation {op!r}")


def zeta_pow(ell: int, e: int) -> CycInt:
    _check_ell(ell)
    return CycInt.from_exponents(ell, {e: 1})


def residues(ell: int) -> tuple[list[int], list[int]]:
    """(R, R') -- the nonzero squares and non-squares mod ell, sorted."""
    _check_ell(ell)
    sq = {(i * i) % ell for i in range(1, ell)}
    return sorted(sq), [i for i in range(1, ell) if i not in sq]


@lru_cache(maxsize=None)
def gauss_periods(ell: int) -> tuple[CycInt, CycInt]:
    R, Rp = residues(ell)
    return CycInt.from_exponents(ell, R), CycInt.from_exponents(ell, Rp)


def gamma_times_ell(ell: int) -> CycInt:
    """ell * gamma = -(eta - eta'), kept in Z[z] to avoid denominators."""
    eta, eta_p = gauss_periods(ell)
    lg = -(eta - eta_p)
    if lg * lg != legendre(-1, ell) * ell:
        raise ConsistencyError(f"(eta - eta')^2 != (-1/{ell}) {ell}")
    return lg


# ---------------------------------------------------------------------------
# determinants of submatrices of (z^(ij))


def _check_index_sets(ell: int, rows: Sequence[int], cols: Sequence[int]) -> None:
    if len(rows) != len(cols) or not rows:
        raise DomainError("rows and cols must be nonempty and of equal size")
    for idx in (rows, cols):
        if len(set(idx)) != len(idx) or any(not 0 <= i < ell for i in idx):
            raise DomainError(f"index set {list(idx)} must be distinct values in 0..{ell - 1}")


def bareiss_det(mat: list[list[CycInt]]) -> CycInt:
    """Fraction-free Gaussian elimination; every division is exact in Z[z]."""
    n = len(mat)
    ell = mat[0][0].ell
    m = [row[:] for row in mat]
    sign = 1
    prev = CycInt.from_int(ell, 1)
    for k in range(n - 1):
        if not m[k][k]:
            piv = next((r for r in range(k + 1, n) if m[r][k]), None)
            if piv is None:
                return CycInt.from_int(ell, 0)
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def cofactor_det(mat: list[list[CycInt]]) -> CycInt:
    """Laplace expansion along the first row; exponential, for small orders only."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = CycInt.from_int(mat[0][0].ell, 0)
    for j in range(n):
        sub = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * cofactor_det(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def zeta_submatrix(ell: int, rows: Sequence[int], cols: Sequence[int]) -> list[list[CycInt]]:
    return [[zeta_pow(ell, i * j) for j in cols] for i in rows]


def minor_det(ell: int, rows: Sequence[int], cols: Sequence[int]) -> CycInt:
    _check_ell(ell)
    rows, cols = list(rows), list(cols)
    _check_index_sets(ell, rows, cols)
    return bareiss_det(zeta_submatrix(ell, rows, cols))


@dataclass(frozen=True)
class ChebotarevReport:
    ell: int
    minors_checked: int
    max_size_checked: int
    all_nonzero: bool
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None

    def __post_init__(self):
        if (self.witness is None) != self.all_nonzero:
            raise ConsistencyError("witness must be present exactly when a minor vanishes")

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "minors_checked": self.minors_checked,
            "max_size_checked": self.max_size_checked,
            "all_nonzero": self.all_nonzero,
            "witness": None if self.witness is None else [list(self.witness[0]), list(self.witness[1])],
        }


def chebotarev_check(ell: int, max_order: Optional[int] = None, method: str = "laplace") -> ChebotarevReport:
    """Check that every square submatrix of (z^(ij)) up to ``max_order`` is nonsingular.

    ``method="laplace"`` reuses smaller minors level by level (exact, fast);
    ``method="bareiss"`` computes each minor independently with
    :func:`minor_det`.  Both visit minors in the same order.
    """
    _check_ell(ell)
    if max_order is None:
        max_order = ell
    if not 1 <= max_order <= ell:
        raise DomainError(f"max_order must lie in 1..{ell}")

    if method == "bareiss":
        checked, witness = 0, None
        for k in range(1, max_order + 1):
            for rows in combinations(range(ell), k):
                for cols in combinations(range(ell), k):
                    checked += 1
                    if witness is None and not minor_det(ell, rows, cols):
                        witness = (rows, cols)
        return ChebotarevReport(ell, checked, max_order, witness is None, witness)
    if method != "laplace":
        raise DomainError(f"unknown method {method!r}")

    # values live in Z[x]/(x^ell - 1); a vector is 0 mod Phi_ell iff all entries agree
    def times_entry(i, j, v):
        e = (i * j) % ell
        return v[ell - e:] + v[: ell - e] if e else v

    def add(a, b):
        return [x + y for x, y in zip(a, b)]

    def sub(a, b):
        return [x - y for x, y in zip(a, b)]

    def is_zero(v):
        return v.count(v[0]) == ell

    one = [1] + [0] * (ell - 1)
    res = laplace_sweep(ell, one, times_entry, add, sub, is_zero, max_order)
    if res.minors_checked != minor_count(ell, max_order):
        raise ConsistencyError("minor sweep miscounted")
    return ChebotarevReport(ell, res.minors_checked, res.max_order, res.all_nonzero, res.witness)
