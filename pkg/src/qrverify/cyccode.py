"""Polynomials over finite fields and cyclic codes.

Codewords of a length-n cyclic code are identified with polynomials of degree
below n (coordinate i is the coefficient of x^i).  Matrix-level operations
(generator matrices, enumeration) need a prime field and use numpy integer
arrays reduced mod p.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import ConsistencyError, DomainError, ResourceError
from .gf import FieldCtx, FqElem, find_root_of_unity, gf_build, poly_str, trace_to_prime
from .minors import laplace_sweep

DEFAULT_BUDGET = 2**26


class Poly:
    """Polynomial over a FieldCtx, coefficients lowest degree first, no trailing zeros."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable = ()):
        cs = [ctx(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs: tuple[FqElem, ...] = tuple(cs)

    @classmethod
    def x_pow_minus_one(cls, ctx: FieldCtx, n: int) -> Poly:
        return cls(ctx, [-1] + [0] * (n - 1) + [1])

    @classmethod
    def monomial(cls, ctx: FieldCtx, e: int, c=1) -> Poly:
        return cls(ctx, [0] * e + [c])

    @property
    def degree(self) -> float:
        """Degree; the zero polynomial has degree -inf."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> FqElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero()

    def lead(self) -> FqElem:
        return self.coeffs[-1]

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise DomainError("polynomials over different fields")
            return other
        return Poly(self.ctx, [other])

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        n = max(len(self), len(other))
        return Poly(self.ctx, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        n = max(len(self), len(other))
        return Poly(self.ctx, [self[i] - other[i] for i in range(n)])

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.ctx)
        out = [self.ctx.zero()] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out)

    __rmul__ = __mul__

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other)
        if dq < 0:
            return Poly(self.ctx), self
        quot = [self.ctx.zero()] * (dq + 1)
        inv = other.lead().inverse()
        for s in range(dq, -1, -1):
            c = rem[s + len(other) - 1] * inv
            quot[s] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[s + i] = rem[s + i] - c * b
        return Poly(self.ctx, quot), Poly(self.ctx, rem[: len(other) - 1])

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            try:
                other = self._coerce(other)
            except Exception:
                return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    def __call__(self, x):
        return self.eval_at(x)

    def eval_at(self, x):
        """Horner evaluation; x may lie in any field containing the coefficients."""
        acc = None
        for c in reversed(self.coeffs):
            c = _lift(c, x)
            acc = c if acc is None else acc * x + c
        if acc is None:
            return x * 0
        return acc

    def monic(self) -> Poly:
        if not self.coeffs:
            raise DomainError("zero polynomial has no monic normalisation")
        inv = self.lead().inverse()
        return Poly(self.ctx, [c * inv for c in self.coeffs])

    def reverse(self) -> Poly:
        return reverse(self)

    def divides(self, other: Poly) -> bool:
        return not (other % self)

    def to_ints(self) -> list[int]:
        """Coefficients as residues; prime fields only."""
        if not self.ctx.is_prime_field:
            raise DomainError("to_ints needs a prime field")
        return [c.coeffs[0] for c in self.coeffs]

    def in_subfield(self, sub: FieldCtx) -> Poly:
        """Reinterpret a polynomial with prime-subfield coefficients over ``sub`` = GF(p)."""
        if not all(c.in_prime_field() for c in self.coeffs):
            raise DomainError("coefficients do not lie in the prime field")
        return Poly(sub, [c.coeffs[0] for c in self.coeffs])

    def lift(self, big: FieldCtx) -> Poly:
        """Embed a GF(p) polynomial into GF(p^m)."""
        return Poly(big, [big(c.coeffs[0]) for c in self.coeffs])

    def __repr__(self) -> str:
        if self.ctx.is_prime_field:
            return f"Poly({poly_str(self.to_ints())} over GF({self.ctx.p}))"
        return f"Poly({[repr(c) for c in self.coeffs]} over {self.ctx!r})"

    def to_json(self) -> list:
        if self.ctx.is_prime_field:
            return self.to_ints()
        return [list(c.coeffs) for c in self.coeffs]


def _lift(c: FqElem, x):
    """Bring a coefficient into the parent of x when x lives in an extension."""
    if isinstance(x, FqElem) and x.ctx != c.ctx:
        if not c.in_prime_field():
            raise DomainError("cannot embed coefficient into evaluation field")
        return x.ctx(c.coeffs[0])
    return c


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def poly_arith(a: Poly, b, op: str):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divmod":
        return divmod(a, b)
    if op == "gcd":
        return poly_gcd(a, b)
    if op == "eval_at":
        return a.eval_at(b)
    raise DomainError(f"unknown operation {op!r}")


def reverse(f: Poly) -> Poly:
    """f*(x) = x^deg(f) f(1/x)."""
    if not f:
        raise DomainError("reverse of the zero polynomial is undefined")
    return Poly(f.ctx, reversed(f.coeffs))


def minimal_polynomial(z: FqElem, sub: Optional[FieldCtx] = None) -> Poly:
    """Minimal polynomial of z over GF(p), returned over ``sub`` (default GF(p))."""
    big = z.ctx
    conj = [z]
    t = z.frobenius()
    while t != z:
        conj.append(t)
        t = t.frobenius()
    h = Poly(big, [1])
    for c in conj:
        h = h * Poly(big, [-c, 1])
    return h.in_subfield(sub or gf_build(big.p))


# ---------------------------------------------------------------------------
# linear algebra mod p on numpy integer arrays


def rref_mod(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p) and the pivot columns."""
    m = np.array(mat, dtype=np.int64) % p
    if m.ndim != 2 or m.size == 0:
        return m.reshape(-1, m.shape[-1] if m.ndim == 2 else 0), []
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        others = np.nonzero(m[:, c])[0]
        for i in others:
            if i != r:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_mod(mat, p: int) -> int:
    return len(rref_mod(mat, p)[1])


def nullspace_mod(mat, p: int, ncols: Optional[int] = None) -> np.ndarray:
    """Basis (as rows) of {v : mat v = 0} over GF(p)."""
    mat = np.array(mat, dtype=np.int64)
    if mat.size == 0:
        n = ncols if ncols is not None else mat.shape[-1]
        return np.eye(n, dtype=np.int64)
    n = mat.shape[1]
    red, pivots = rref_mod(mat, p)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for b, fc in enumerate(free):
        basis[b, fc] = 1
        for i, pc in enumerate(pivots):
            basis[b, pc] = (-red[i, fc]) % p
    return basis


def same_row_space(a, b, p: int) -> bool:
    ra, rb = rank_mod(a, p), rank_mod(b, p)
    return ra == rb == rank_mod(np.vstack([a, b]), p)


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CyclicCode:
    """The ideal (g) in GF(p)[x]/(x^n - 1)."""

    ctx: FieldCtx
    n: int
    generator: Poly

    def __post_init__(self):
        g = self.generator
        if not g or g.lead() != 1:
            raise DomainError("generator must be monic")
        if not g.divides(Poly.x_pow_minus_one(self.ctx, self.n)):
            raise DomainError(f"{g!r} does not divide x^{self.n} - 1")

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def k(self) -> int:
        return self.n - int(self.generator.degree)

    @property
    def check_polynomial(self) -> Poly:
        return Poly.x_pow_minus_one(self.ctx, self.n) // self.generator

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CyclicCode)
            and self.ctx == other.ctx
            and self.n == other.n
            and self.generator == other.generator
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.n, self.generator))

    def __repr__(self) -> str:
        return f"CyclicCode([{self.n},{self.k}] over GF({self.p}), g={self.generator!r})"

    def _require_prime_field(self):
        if not self.ctx.is_prime_field:
            raise DomainError("matrix operations need a code over a prime field")

    def poly_of(self, word: Sequence[int]) -> Poly:
        if len(word) != self.n:
            raise DomainError(f"word length {len(word)} != {self.n}")
        return Poly(self.ctx, [int(c) for c in word])

    def contains(self, word: Sequence[int]) -> bool:
        """Membership by divisibility: g(x) | w(x)."""
        return self.generator.divides(self.poly_of(word))

    def contains_by_parity(self, word: Sequence[int]) -> bool:
        h = self.parity_check_matrix()
        if h.shape[0] == 0:
            return True
        return not np.any((h @ np.asarray(word, dtype=np.int64)) % self.p)

    def zeros(self, zeta: FqElem) -> list[int]:
        """Exponents j with g(zeta^j) = 0, zeta a primitive n-th root of unity."""
        return [j for j in range(self.n) if not self.generator.eval_at(zeta**j)]

    def contains_by_roots(self, word: Sequence[int], zeta: FqElem) -> bool:
        w = self.poly_of(word)
        return all(not w.eval_at(zeta**j) for j in self.zeros(zeta))

    def encode(self, message: Sequence[int]) -> np.ndarray:
        return (np.asarray(message, dtype=np.int64) @ self.generator_matrix()) % self.p

    def generator_matrix(self) -> np.ndarray:
        """Rows x^i g(x) for 0 <= i < k."""
        self._require_prime_field()
        g = self.generator.to_ints()
        mat = np.zeros((self.k, self.n), dtype=np.int64)
        for i in range(self.k):
            mat[i, i : i + len(g)] = g
        return mat

    def parity_check_matrix(self) -> np.ndarray:
        """Rows are cyclic shifts of the reverse of the check polynomial."""
        return dual(self).generator_matrix()

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "k": self.k, "generator": self.generator.to_json()}


def cyclic_code(ctx: FieldCtx, n: int, g: Poly) -> CyclicCode:
    return CyclicCode(ctx, n, g)


def recursive_for(ctx: FieldCtx, n: int, f: Poly) -> CyclicCode:
    """All a(x) with a(x) f(x) = 0 mod x^n - 1, i.e. the code generated by (x^n - 1)/f."""
    xn1 = Poly.x_pow_minus_one(ctx, n)
    q, r = divmod(xn1, f)
    if r:
        raise DomainError(f"{f!r} does not divide x^{n} - 1")
    return CyclicCode(ctx, n, q.monic())


def dual(code: CyclicCode) -> CyclicCode:
    """Orthogonal code: generated by the reverse of the check polynomial."""
    return CyclicCode(code.ctx, code.n, reverse(code.check_polynomial).monic())


def code_from_words(ctx: FieldCtx, n: int, words: Iterable[Sequence[int]]) -> CyclicCode:
    """Smallest cyclic code containing the words: generator gcd(x^n - 1, w_1, w_2, ...)."""
    g = Poly.x_pow_minus_one(ctx, n)
    for w in words:
        g = poly_gcd(g, Poly(ctx, [int(c) for c in w]))
    return CyclicCode(ctx, n, g)


def trace_word(z: FqElem, c: FqElem, n: int) -> list[int]:
    """(T(c), T(cz), ..., T(cz^(n-1)))."""
    big = z.ctx
    out, t = [], big(c)
    for _ in range(n):
        out.append(trace_to_prime(big, t).coeffs[0])
        t = t * z
    return out


def trace_code(ctx: FieldCtx, n: int, z: FqElem) -> CyclicCode:
    """The code {(T(c z^i))_i : c in GF(p^m)} over GF(p).

    Built exhaustively over all c.  Raises ConsistencyError unless it equals
    the code recursive for h* and its dual is (h), h the minimal polynomial
    of z.
    """
    z = ctx(z)
    if not z or z.order() != n:
        raise DomainError(f"z must have multiplicative order {n}")
    h = minimal_polynomial(z)
    if h.degree != ctx.m:
        raise DomainError(f"z generates a proper subfield (degree {h.degree} < {ctx.m})")
    small = h.ctx
    words = [trace_word(z, c, n) for c in ctx.elements()]
    code = code_from_words(small, n, words)
    if code.k != ctx.m:
        raise ConsistencyError(f"trace code has dimension {code.k}, expected {ctx.m}")
    if code != recursive_for(small, n, reverse(h)):
        raise ConsistencyError("trace code differs from the code recursive for h*")
    if dual(code) != cyclic_code(small, n, h):
        raise ConsistencyError("dual of trace code differs from (h)")
    return code


def codeword_set(code, budget: int = DEFAULT_BUDGET) -> set[tuple[int, ...]]:
    """Every codeword as a tuple (exhaustive)."""
    g = code.generator_matrix()
    p = code.p
    k = g.shape[0]
    if p**k > budget:
        raise ResourceError(f"code has {p}^{k} = {p**k} words, budget {budget}")
    if k == 0:
        return {tuple([0] * g.shape[1] if g.ndim == 2 else [])}
    msgs = np.array(list(product(range(p), repeat=k)), dtype=np.int64)
    return {tuple(int(x) for x in w) for w in (msgs @ g) % p}


def lemma_check(p: int, m: int, n: int) -> dict:
    """Mechanical check of the trace-code identity for an element of order n in GF(p^m)."""
    big = gf_build(p, m)
    if (big.q - 1) % n:
        raise DomainError(f"{n} does not divide {p}^{m} - 1")
    z = find_root_of_unity(big, n)
    h = minimal_polynomial(z)
    small = h.ctx
    words = {tuple(trace_word(z, c, n)) for c in big.elements()}
    rec = recursive_for(small, n, reverse(h))
    code = trace_code(big, n, z)
    dual_h = cyclic_code(small, n, h)
    orth = all(
        not (sum(a * b for a, b in zip(w, d)) % p)
        for w in words
        for d in dual_h.generator_matrix().tolist()
    )
    checks = [
        {"name": "trace words span = recursive_for(h*)", "pass": words == codeword_set(rec)},
        {"name": "dimension = deg h", "pass": code.k == int(h.degree)},
        {"name": "dual = (h)", "pass": dual(code) == dual_h},
        {"name": "(h) orthogonal to every trace word", "pass": orth},
    ]
    return {
        "p": p,
        "m": m,
        "n": n,
        "z": list(z.coeffs),
        "h": h.to_json(),
        "generator": code.generator.to_json(),
        "k": code.k,
        "checks": checks,
    }


# ---------------------------------------------------------------------------
# exhaustive enumeration


@dataclass(frozen=True)
class WeightEnumerator:
    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1:
            raise ConsistencyError("A_0 must be 1")

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def min_weight(self) -> int:
        for w in range(1, len(self.counts)):
            if self.counts[w]:
                return w
        raise DomainError("the zero code has no minimum distance")

    def __getitem__(self, w: int) -> int:
        return self.counts[w]

    def to_json(self) -> dict:
        return {"n": self.n, "counts": list(self.counts)}


def _split(k: int, q: int) -> int:
    """Number of message symbols handled by the inner (vectorised) table."""
    a = 0
    while a < k and q ** (a + 1) <= 1 << 14:
        a += 1
    return max(a, 1) if k else 0


def _span_table(rows: np.ndarray, p: int) -> np.ndarray:
    """All p^len(rows) linear combinations, built by repeated extension."""
    n = rows.shape[1]
    table = np.zeros((1, n), dtype=np.int64)
    for r in rows:
        table = np.concatenate([(table + c * r) % p for c in range(p)])
    return table


def _pack_bits(mat: np.ndarray) -> np.ndarray:
    weights = np.uint64(1) << np.arange(mat.shape[1], dtype=np.uint64)
    return (mat.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


def _binary_chunk(inner: np.ndarray, outer_rows: np.ndarray, start: int, stop: int, n: int, want: int):
    """Weight histogram over outer indices [start, stop) for packed binary rows."""
    hist = np.zeros(n + 1, dtype=np.int64)
    found = []
    for idx in range(start, stop):
        off = np.uint64(0)
        for b in range(len(outer_rows)):
            if idx >> b & 1:
                off ^= outer_rows[b]
        words = inner ^ off
        wts = np.bitwise_count(words)
        hist += np.bincount(wts, minlength=n + 1)
        if want >= 0:
            found.extend(words[wts == want].tolist())
    return hist, found


def _general_chunk(inner: np.ndarray, outer: np.ndarray, p: int, start: int, stop: int, n: int, want: int):
    hist = np.zeros(n + 1, dtype=np.int64)
    found = []
    for idx in range(start, stop):
        words = (inner + outer[idx]) % p
        wts = np.count_nonzero(words, axis=1)
        hist += np.bincount(wts, minlength=n + 1)
        if want >= 0:
            found.extend(tuple(int(x) for x in w) for w in words[wts == want])
    return hist, found


def default_workers() -> int:
    return max(1, int(os.environ.get("QR_WORKERS", "1")))


def enumerate_weights(
    gen: np.ndarray, p: int, budget: int = DEFAULT_BUDGET, want_weight: int = -1, workers: Optional[int] = None
) -> tuple[np.ndarray, list]:
    """Weight histogram of the row space of ``gen`` (rows independent).

    Messages are split into an inner block enumerated as one numpy table and
    an outer block walked index by index; each outer step adds one fixed
    offset to the whole table.  Words of weight ``want_weight`` are collected
    (packed ints for p = 2, tuples otherwise).
    """
    gen = np.asarray(gen, dtype=np.int64) % p
    k, n = gen.shape
    if p**k > budget:
        raise ResourceError(f"exhaustive enumeration needs {p}^{k} = {p**k} messages, budget is {budget}")
    workers = workers or default_workers()
    if k == 0:
        hist = np.zeros(n + 1, dtype=np.int64)
        hist[0] = 1
        return hist, ([0] if want_weight == 0 else [])
    a = _split(k, p)
    binary = p == 2 and n <= 64
    if binary:
        inner = _pack_bits(_span_table(gen[:a], 2))
        outer = _pack_bits(gen[a:]) if k > a else np.zeros(0, dtype=np.uint64)
        total = 1 << (k - a)
        task, args = _binary_chunk, (inner, outer)
    else:
        inner = _span_table(gen[:a], p)
        outer = _span_table(gen[a:], p)
        total = outer.shape[0]
        task, args = _general_chunk, (inner, outer, p)

    chunks = min(workers, total)
    bounds = [total * i // chunks for i in range(chunks + 1)]
    if chunks <= 1:
        results = [task(*args, 0, total, n, want_weight)]
    else:
        with ProcessPoolExecutor(max_workers=chunks) as ex:
            futs = [ex.submit(task, *args, bounds[i], bounds[i + 1], n, want_weight) for i in range(chunks)]
            results = [f.result() for f in futs]
    hist = sum(r[0] for r in results)
    found = [w for r in results for w in r[1]]
    return hist, found


def weight_enumerator(code, budget: int = DEFAULT_BUDGET, workers: Optional[int] = None) -> WeightEnumerator:
    """Exact weight distribution of a CyclicCode or ExtendedCode by enumeration."""
    hist, _ = enumerate_weights(code.generator_matrix(), code.p, budget, workers=workers)
    we = WeightEnumerator(tuple(int(c) for c in hist))
    if we.total != code.p ** code.k:
        raise ConsistencyError("weight counts do not sum to q^k")
    return we


def min_distance(code, budget: int = DEFAULT_BUDGET, workers: Optional[int] = None) -> int:
    if code.k == 0:
        raise DomainError("the zero code has no minimum distance")
    return weight_enumerator(code, budget, workers).min_weight()


# ---------------------------------------------------------------------------
# MDS certification via minors of (zeta^(ij)) over GF(p)


@dataclass(frozen=True)
class MdsReport:
    ell: int
    p: int
    zeta: int
    minors_checked: int
    all_mds: bool
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    cross_check: Optional[list] = field(default=None)

    def to_json(self) -> dict:
        out = {
            "ell": self.ell,
            "p": self.p,
            "zeta": self.zeta,
            "minors_checked": self.minors_checked,
            "all_mds": self.all_mds,
            "witness": None if self.witness is None else [list(self.witness[0]), list(self.witness[1])],
        }
        if self.cross_check is not None:
            out["cross_check"] = self.cross_check
        return out


def mds_check_via_minors(p: int, ell: int) -> MdsReport:
    """Every square minor of (zeta^(ij)) mod p nonzero <=> every cyclic [ell,k] code over GF(p) is MDS."""
    if p % ell != 1:
        raise DomainError(f"need p = 1 mod ell, got p={p}, ell={ell}")
    ctx = gf_build(p)
    zeta = find_root_of_unity(ctx, ell).coeffs[0]
    pw = [pow(zeta, e, p) for e in range(ell)]

    def times_entry(i, j, v):
        return pw[(i * j) % ell] * v % p

    res = laplace_sweep(
        ell, 1, times_entry, lambda a, b: (a + b) % p, lambda a, b: (a - b) % p, lambda v: v % p == 0
    )
    return MdsReport(ell, p, zeta, res.minors_checked, res.all_nonzero, res.witness)


def all_cyclic_codes(p: int, ell: int) -> list[CyclicCode]:
    """Every cyclic code of length ell over GF(p), p = 1 mod ell (x^ell - 1 splits into linear factors)."""
    if p % ell != 1:
        raise DomainError(f"need p = 1 mod ell, got p={p}, ell={ell}")
    ctx = gf_build(p)
    zeta = find_root_of_unity(ctx, ell)
    roots = [zeta**j for j in range(ell)]
    codes = []
    for size in range(ell + 1):
        for subset in combinations(range(ell), size):
            g = Poly(ctx, [1])
            for j in subset:
                g = g * Poly(ctx, [-roots[j], 1])
            codes.append(CyclicCode(ctx, ell, g))
    return codes


def mds_exhaustive(p: int, ell: int, budget: int = DEFAULT_BUDGET) -> list[dict]:
    """Minimum distance of every nonzero cyclic code of length ell, against the Singleton bound."""
    out = []
    for code in all_cyclic_codes(p, ell):
        if code.k == 0:
            continue
        d = min_distance(code, budget)
        out.append(
            {
                "generator": code.generator.to_json(),
                "k": code.k,
                "d": d,
                "mds": d == ell - code.k + 1,
            }
        )
    return out
