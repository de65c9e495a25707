"""Quadratic-residue codes of prime length ell over GF(p), their extensions to
length ell + 1, and mechanical checks of their symmetry under PSL_2(ell).

Coordinates are 0, 1, ..., ell - 1 followed by the infinite coordinate, which
sits at array index ``ell``.  A designated primitive ell-th root z in
GF(p^m) is declared a root of f by construction, f = prod_{r in R} (x - z^r).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .cycint import residues
from .cyccode import (
    DEFAULT_BUDGET,
    CyclicCode,
    Poly,
    enumerate_weights,
    nullspace_mod,
    same_row_space,
)
from .errors import ConsistencyError, DomainError
from .gf import FieldCtx, FqElem, field_for_roots, find_root_of_unity, gf_build, legendre, trace_to_prime

def qr_split(ell: int) -> tuple[list[int], list[int]]:
    """Quadratic residues and non-residues mod ell."""
    return residues(ell)


def _ell_inv(i: int, ell: int) -> int:
    return pow(i, -1, ell)


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QrFamily:
    ell: int
    p: int
    ctx: FieldCtx  # GF(p)
    ctx_big: FieldCtx  # GF(p^m), m = ord_ell(p)
    z: FqElem
    R: tuple[int, ...]
    R_prime: tuple[int, ...]
    f: Poly
    g: Poly
    eta: int
    eta_prime: int
    gamma: int
    A: CyclicCode
    A_plus: CyclicCode
    B: CyclicCode
    B_plus: CyclicCode

    @property
    def k(self) -> int:
        return (self.ell - 1) // 2

    @property
    def case(self) -> int:
        """1 when ell = 3 mod 4, 2 when ell = 1 mod 4."""
        return 1 if self.ell % 4 == 3 else 2

    def legendre_gf(self, a: int) -> int:
        return legendre(a, self.ell) % self.p

    def root_of_g(self) -> FqElem:
        """z^s for the smallest non-residue s: a root of g."""
        return self.z ** self.R_prime[0]

    @cached_property
    def A_inf(self) -> ExtendedCode:
        return extend(self.A_plus, self.gamma)

    @cached_property
    def B_inf(self) -> ExtendedCode:
        return extend(self.B_plus, -self.gamma % self.p)

    def summary(self) -> dict:
        return {
            "ell": self.ell,
            "p": self.p,
            "m": self.ctx_big.m,
            "modulus": list(self.ctx_big.modulus),
            "z": list(self.z.coeffs),
            "R": list(self.R),
            "R_prime": list(self.R_prime),
            "f": self.f.to_json(),
            "g": self.g.to_json(),
            "eta": self.eta,
            "eta_prime": self.eta_prime,
            "gamma": self.gamma,
        }


def _root_product(big: FieldCtx, z: FqElem, exps: Iterable[int]) -> Poly:
    out = Poly(big, [1])
    for e in exps:
        out = out * Poly(big, [-(z**e), 1])
    return out


def family_checks(fam: QrFamily) -> list[dict]:
    """Every structural invariant of a QR family, as named pass/fail records."""
    p, ell, k = fam.p, fam.ell, fam.k
    ctx = fam.ctx
    x1 = Poly(ctx, [-1, 1])
    xl1 = Poly.x_pow_minus_one(ctx, ell)
    lg = fam.legendre_gf
    checks = [
        ("x^ell - 1 = (x - 1) f g", x1 * fam.f * fam.g == xl1),
        ("deg f = deg g = (ell - 1)/2", fam.f.degree == fam.g.degree == k),
        ("f(z^r) = 0 for r in R", all(not fam.f.eval_at(fam.z**r) for r in fam.R)),
        ("g(z^s) = 0 for s in R'", all(not fam.g.eval_at(fam.z**s) for s in fam.R_prime)),
        ("[x^(k-1)] f = -eta", int(fam.f[k - 1]) == (-fam.eta) % p),
        ("[x^(k-1)] g = -eta'", int(fam.g[k - 1]) == (-fam.eta_prime) % p),
        ("1 + eta + eta' = 0", (1 + fam.eta + fam.eta_prime) % p == 0),
        (
            "eta eta' = (1 - (-1/ell) ell)/4",
            (4 * fam.eta * fam.eta_prime - (1 - legendre(-1, ell) * ell)) % p == 0,
        ),
        ("A subset A+", fam.A_plus.generator.divides(fam.A.generator)),
        ("B subset B+", fam.B_plus.generator.divides(fam.B.generator)),
        ("dim A+ = dim B+ = (ell + 1)/2", fam.A_plus.k == fam.B_plus.k == k + 1),
        ("ell gamma^2 = (-1/ell)", (ell * fam.gamma * fam.gamma - lg(-1)) % p == 0),
        ("ell gamma = -(eta - eta')", (ell * fam.gamma + fam.eta - fam.eta_prime) % p == 0),
    ]
    fstar = fam.f.reverse()
    if fam.case == 1:
        checks.append(("f* = -g", fstar == -fam.g))
    else:
        checks.append(("f* = f", fstar == fam.f))
    return [{"name": n, "pass": bool(v)} for n, v in checks]


def build_qr_family(p: int, ell: int) -> QrFamily:
    """QR codes of length ell over GF(p) with gamma fixed by ell gamma = -(eta - eta')."""
    if p == ell:
        raise DomainError("p must differ from ell")
    ctx = gf_build(p)
    if legendre(p, ell) != 1:
        raise DomainError(f"({p}/{ell}) = {legendre(p, ell)}; p must be a quadratic residue mod ell")
    big = field_for_roots(p, ell)
    z = find_root_of_unity(big, ell)
    R, Rp = qr_split(ell)
    try:
        f = _root_product(big, z, R).in_subfield(ctx)
        g = _root_product(big, z, Rp).in_subfield(ctx)
    except DomainError as exc:
        raise ConsistencyError(f"QR factor not defined over GF({p})") from exc
    eta_big = sum((z**r for r in R), big.zero())
    etap_big = sum((z**s for s in Rp), big.zero())
    if not (eta_big.in_prime_field() and etap_big.in_prime_field()):
        raise ConsistencyError("Gaussian periods not in GF(p)")
    eta, eta_p = eta_big.coeffs[0], etap_big.coeffs[0]
    # the sign of gamma is read off the periods, never from a square root
    gamma = (-(eta - eta_p) * pow(ell, -1, p)) % p
    x1 = Poly(ctx, [-1, 1])
    fam = QrFamily(
        ell=ell,
        p=p,
        ctx=ctx,
        ctx_big=big,
        z=z,
        R=tuple(R),
        R_prime=tuple(Rp),
        f=f,
        g=g,
        eta=eta,
        eta_prime=eta_p,
        gamma=gamma,
        A=CyclicCode(ctx, ell, x1 * f),
        A_plus=CyclicCode(ctx, ell, f),
        B=CyclicCode(ctx, ell, x1 * g),
        B_plus=CyclicCode(ctx, ell, g),
    )
    failed = [c["name"] for c in family_checks(fam) if not c["pass"]]
    if failed:
        raise ConsistencyError(f"QR family ({p},{ell}) invariants failed: {failed}")
    return fam


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ExtendedCode:
    """A cyclic code of length ell with a_inf = gamma * sum(a_i) appended."""

    base: CyclicCode
    gamma_used: int

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def n(self) -> int:
        return self.base.n + 1

    @property
    def k(self) -> int:
        return self.base.k

    def extend_word(self, word: Sequence[int]) -> np.ndarray:
        w = np.asarray(word, dtype=np.int64) % self.p
        return np.append(w, (self.gamma_used * int(w.sum())) % self.p)

    @cached_property
    def _gen(self) -> np.ndarray:
        g = self.base.generator_matrix()
        col = (self.gamma_used * g.sum(axis=1)) % self.p
        return np.hstack([g, col[:, None]])

    def generator_matrix(self) -> np.ndarray:
        return self._gen.copy()

    @cached_property
    def _parity(self) -> np.ndarray:
        return nullspace_mod(self._gen, self.p, self.n)

    def parity_check_matrix(self) -> np.ndarray:
        return self._parity.copy()

    def contains(self, word: Sequence[int]) -> bool:
        w = np.asarray(word, dtype=np.int64)
        if w.shape != (self.n,):
            raise DomainError(f"word length {w.shape} != {self.n}")
        return not np.any((self._parity @ w) % self.p)

    def __repr__(self) -> str:
        return f"ExtendedCode([{self.n},{self.k}] over GF({self.p}), gamma={self.gamma_used})"


def extend(code: CyclicCode, gamma: int) -> ExtendedCode:
    return ExtendedCode(code, int(gamma) % code.p)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialMap:
    """(w M)[i] = scalars[i] * w[src[i]] on coordinates 0..ell-1, inf (= index ell)."""

    src: tuple[int, ...]
    scalars: tuple[int, ...]
    p: int
    name: str = ""

    def __post_init__(self):
        n = len(self.src)
        if sorted(self.src) != list(range(n)):
            raise DomainError("src is not a permutation")
        if len(self.scalars) != n or any(s % self.p == 0 for s in self.scalars):
            raise DomainError("scalars must be nonzero, one per coordinate")

    @property
    def n(self) -> int:
        return len(self.src)

    @classmethod
    def identity(cls, n: int, p: int) -> MonomialMap:
        return cls(tuple(range(n)), (1,) * n, p, "id")

    def apply(self, word) -> np.ndarray:
        w = np.asarray(word, dtype=np.int64)
        if w.shape[-1] != self.n:
            raise DomainError(f"word length {w.shape[-1]} != {self.n}")
        return (w[..., list(self.src)] * np.array(self.scalars, dtype=np.int64)) % self.p

    def then(self, other: MonomialMap) -> MonomialMap:
        """Apply self, then other."""
        src = tuple(self.src[other.src[i]] for i in range(self.n))
        sc = tuple(other.scalars[i] * self.scalars[other.src[i]] % self.p for i in range(self.n))
        return MonomialMap(src, sc, self.p, f"{self.name}.{other.name}")

    def inverse(self) -> MonomialMap:
        n = self.n
        src = [0] * n
        sc = [0] * n
        for i, j in enumerate(self.src):
            # w'[i] = s_i w[j]  =>  w[j] = s_i^-1 w'[i]
            src[j] = i
            sc[j] = pow(self.scalars[i], -1, self.p)
        return MonomialMap(tuple(src), tuple(sc), self.p, f"{self.name}^-1")

    @property
    def image_of(self) -> tuple[int, ...]:
        """Where each input coordinate is sent."""
        out = [0] * self.n
        for i, j in enumerate(self.src):
            out[j] = i
        return tuple(out)

    def preserves(self, code: ExtendedCode) -> bool:
        img = self.apply(code.generator_matrix())
        return all(code.contains(r) for r in img)

    def to_json(self) -> dict:
        return {"name": self.name, "src": list(self.src), "scalars": list(self.scalars)}


def sigma(ell: int, p: int, epsilon0: int = 1) -> MonomialMap:
    """(a_0..a_i..; a_inf) -> (e0 a_inf, .., (i/ell) a_{-1/i}, ..; (-1/ell) e0 a_0)."""
    if epsilon0 not in (1, -1):
        raise DomainError(f"epsilon0 must be +1 or -1, got {epsilon0}")
    src = [0] * (ell + 1)
    sc = [1] * (ell + 1)
    src[0], sc[0] = ell, epsilon0 % p
    for i in range(1, ell):
        src[i] = (-_ell_inv(i, ell)) % ell
        sc[i] = legendre(i, ell) % p
    src[ell], sc[ell] = 0, (legendre(-1, ell) * epsilon0) % p
    return MonomialMap(tuple(src), tuple(sc), p, "sigma" if epsilon0 == 1 else "sigma(-)")


def sigma_map(family: QrFamily, epsilon0: int = 1) -> MonomialMap:
    return sigma(family.ell, family.p, epsilon0)


def apply_monomial(mmap: MonomialMap, word) -> np.ndarray:
    return mmap.apply(word)


def shift_map(ell: int, p: int) -> MonomialMap:
    """i -> i + 1 on finite coordinates, inf fixed."""
    src = tuple([(i - 1) % ell for i in range(ell)] + [ell])
    return MonomialMap(src, (1,) * (ell + 1), p, "S")


def multiplier_map(ell: int, p: int, a: int) -> MonomialMap:
    """i -> a i on finite coordinates, 0 and inf fixed."""
    ainv = _ell_inv(a, ell)
    src = tuple([(i * ainv) % ell for i in range(ell)] + [ell])
    return MonomialMap(src, (1,) * (ell + 1), p, f"M{a}")


# ---------------------------------------------------------------------------
# reports


@dataclass
class Report:
    ell: int
    p: int
    gamma: Optional[int]
    eta: Optional[int]
    eta_prime: Optional[int]
    checks: list[dict] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @classmethod
    def for_family(cls, fam: QrFamily, **extra) -> Report:
        return cls(fam.ell, fam.p, fam.gamma, fam.eta, fam.eta_prime, extra=dict(extra))

    def add(self, name: str, passed: bool, witness=None) -> None:
        rec = {"name": name, "pass": bool(passed)}
        if witness is not None:
            rec["witness"] = witness
        self.checks.append(rec)

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self) -> dict:
        out = {
            "ell": self.ell,
            "p": self.p,
            "gamma": self.gamma,
            "eta": self.eta,
            "eta_prime": self.eta_prime,
            "checks": self.checks,
        }
        out.update(self.extra)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def family_report(fam: QrFamily) -> Report:
    rep = Report.for_family(fam, **{k: v for k, v in fam.summary().items() if k not in ("ell", "p", "gamma", "eta", "eta_prime")})
    rep.checks.extend(family_checks(fam))
    return rep


def _as_list(v) -> list[int]:
    return [int(x) for x in v]


def verify_gleason_prange(family: QrFamily, epsilon0: int = 1) -> Report:
    """sigma maps A_inf onto itself, gamma taken with the sign fixed by the periods."""
    fam = family
    ext = fam.A_inf
    sig = sigma_map(fam, epsilon0)
    gen = ext.generator_matrix()
    img = sig.apply(gen)
    rep = Report.for_family(fam, case=fam.case, epsilon0=epsilon0)
    for idx, row in enumerate(img):
        ok = ext.contains(row)
        rep.add(f"row {idx} image in A_inf", ok, None if ok else _as_list(row))
    rep.add("row space of A_inf sigma = A_inf", same_row_space(gen, img, fam.p))

    p, ell = fam.p, fam.ell
    one_a = ext.extend_word([1] * ell)
    one_b = fam.B_inf.extend_word([1] * ell)
    one_a_sig = sig.apply(one_a)
    expected = [ell * fam.gamma * epsilon0 % p] + [fam.legendre_gf(i) for i in range(1, ell)] + [
        legendre(-1, ell) * epsilon0 % p
    ]
    rep.add("<1,0>_A sigma = (ell gamma, .., (i/ell), ..; (-1/ell))", _as_list(one_a_sig) == expected)
    rep.add("<1,0>_A sigma in A_inf", ext.contains(one_a_sig))
    if fam.case == 2:
        rep.add("<1,0>_A sigma . <1,0>_B = 0", int(one_a_sig @ one_b) % p == 0)
    return rep


def epsilon_falsification(family: QrFamily) -> Report:
    """With epsilon0 = -1 some generator row of A_inf leaves A_inf (p odd)."""
    fam = family
    rep = Report.for_family(fam)
    if fam.p == 2:
        rep.extra["status"] = "degenerate"
        rep.extra["notice"] = "distinction degenerate in characteristic 2: -1 = 1"
        return rep
    ext = fam.A_inf
    sig = sigma_map(fam, -1)
    witness = None
    for idx, row in enumerate(sig.apply(ext.generator_matrix())):
        if not ext.contains(row):
            witness = {"row": idx, "image": _as_list(row)}
            break
    rep.add("epsilon0 = -1 breaks invariance", witness is not None, witness)
    rep.add("epsilon0 = +1 preserves A_inf", sigma_map(fam, 1).preserves(ext))
    rep.extra["status"] = "falsified" if witness is not None else "not falsified"
    return rep


# ---------------------------------------------------------------------------
# the D and D' functionals


def d_operator(family: QrFamily, case: int, s: int = 1) -> Callable[[FqElem], FqElem]:
    """c -> sum_i (i/ell) T(c w^(-1/i)) u^i over 0 < i < ell.

    case 1: w = u = z, a root of f.
    case 2: w = a root of g (it generates the trace code inside A), and
            u = z^s with s in R, a root of f.
    The codeword sigma-image of the trace word of c is a multiple of f iff
    the result vanishes.
    """
    fam = family
    ell = fam.ell
    if case not in (1, 2):
        raise DomainError(f"case must be 1 or 2, got {case!r}")
    if case != fam.case:
        raise DomainError(f"ell = {ell} is {ell % 4} mod 4, which is case {fam.case}, not case {case}")
    if case == 1:
        w = u = fam.z
    else:
        if s % ell not in fam.R:
            raise DomainError(f"s = {s} is not a quadratic residue mod {ell}")
        w, u = fam.root_of_g(), fam.z ** s
    big = fam.ctx_big
    w_pows = [w ** ((-_ell_inv(i, ell)) % ell) for i in range(1, ell)]
    u_pows = [u**i for i in range(1, ell)]
    eps = [legendre(i, ell) for i in range(1, ell)]

    def D(c: FqElem) -> FqElem:
        c = big(c)
        acc = big.zero()
        for e, wp, up in zip(eps, w_pows, u_pows):
            t = trace_to_prime(big, c * wp).coeffs[0]
            if t:
                acc = acc + up * (e * t)
        return acc

    return D


def verify_D_identity(family: QrFamily, case: int, s: Optional[int] = None) -> Report:
    """Evaluate D (case 1) or D' (case 2, every s in R unless given) on c = w^j, 0 < j < ell."""
    fam = family
    if case == 2:
        s_values = [s] if s is not None else list(fam.R)
    else:
        s_values = [1]
    rep = Report.for_family(fam, case=case, s_values=s_values)
    for sv in s_values:
        D = d_operator(fam, case, sv)
        w = fam.z if case == 1 else fam.root_of_g()
        nonzero = []
        for j in range(1, fam.ell):
            val = D(w**j)
            if val:
                nonzero.append({"j": j, "value": list(val.coeffs)})
        label = "D" if case == 1 else f"D'(s={sv})"
        rep.add(f"{label}(w^j) = 0 for 0 < j < {fam.ell}", not nonzero, nonzero or None)
    return rep


def little_poly_roots(ell: int, b: int, c: int) -> list[int]:
    """Roots of x^2 + b x + c in GF(ell), by search."""
    return [x for x in range(ell) if (x * x + b * x + c) % ell == 0]


def little_poly_split_check(
    ell: int, case: Optional[int] = None, samples: Optional[Iterable[tuple]] = None
) -> Report:
    """Root structure of the quadratics whose roots pair up the epsilon_i.

    case 1 (ell = 3 mod 4): x^2 + (rj - k)x - r for r in R.
    case 2 (ell = 1 mod 4): x^2 + s^-1(rj - k)x - s^-1 r for r in R, s in R'.
    ``samples`` is an iterable of (r, j, k) (case 1) or (r, j, k, s) (case 2);
    default is the full grid.  Every quadratic must have 0 or 2 roots, and
    two roots must split one in R, one in R'.
    """
    R, Rp = qr_split(ell)
    Rset = set(R)
    if case is None:
        case = 1 if ell % 4 == 3 else 2
    if samples is None:
        if case == 1:
            samples = ((r, j, k) for r in R for j in range(ell) for k in range(ell))
        else:
            samples = ((r, j, k, s) for r in R for j in range(ell) for k in range(ell) for s in Rp)
    counts = {0: 0, 1: 0, 2: 0}
    bad = []
    total = 0
    for smp in samples:
        if case == 1:
            r, j, k = smp
            b, c = (r * j - k) % ell, (-r) % ell
        else:
            r, j, k, s = smp
            sinv = _ell_inv(s, ell)
            b, c = (sinv * (r * j - k)) % ell, (-sinv * r) % ell
        roots = little_poly_roots(ell, b, c)
        total += 1
        counts[len(roots)] += 1
        split_ok = len(roots) == 0 or (len(roots) == 2 and (roots[0] in Rset) != (roots[1] in Rset))
        if not split_ok and len(bad) < 10:
            bad.append({"params": list(smp), "roots": roots})
    rep = Report(ell, 0, None, None, None, extra={"case": case, "samples": total, "root_counts": {str(k): v for k, v in counts.items()}})
    rep.add("no double roots", counts[1] == 0)
    rep.add("two roots split between R and R'", not bad, bad or None)
    return rep


# ---------------------------------------------------------------------------
# PSL_2(ell) generators and orbits


def smallest_primitive_root(ell: int) -> int:
    from sympy.ntheory import primitive_root

    return int(primitive_root(ell))


def psl2_generators(family: QrFamily) -> list[MonomialMap]:
    """Shift, square multiplier and sigma, each checked to preserve A_inf."""
    fam = family
    r = smallest_primitive_root(fam.ell)
    gens = [
        shift_map(fam.ell, fam.p),
        multiplier_map(fam.ell, fam.p, r * r % fam.ell),
        sigma_map(fam, 1),
    ]
    for g in gens:
        if not g.preserves(fam.A_inf):
            raise ConsistencyError(f"generator {g.name} does not preserve A_inf for ({fam.p},{fam.ell})")
    return gens


def permutation_group_order(gens: Sequence[MonomialMap]) -> int:
    """Order of the group generated by the underlying coordinate permutations."""
    from sympy.combinatorics import Permutation, PermutationGroup

    return int(PermutationGroup([Permutation(list(g.image_of)) for g in gens]).order())


def monomial_group_order(gens: Sequence[MonomialMap]) -> int:
    """Order of the monomial group, acting faithfully on (coordinate, scalar) pairs."""
    from sympy.combinatorics import Permutation, PermutationGroup

    p = gens[0].p
    if p == 2:
        return permutation_group_order(gens)
    n = gens[0].n

    def pt(i, a):
        return i * (p - 1) + (a - 1)

    perms = []
    for g in gens:
        img = [0] * (n * (p - 1))
        for i, j in enumerate(g.src):
            # unit vector a e_j goes to (s_i a) e_i
            for a in range(1, p):
                img[pt(j, a)] = pt(i, g.scalars[i] * a % p)
        perms.append(Permutation(img))
    return int(PermutationGroup(perms).order())


@dataclass(frozen=True)
class OrbitReport:
    weight: int
    word_count: int
    orbit_sizes: tuple[int, ...]
    group_order: int
    projective: bool
    codewords: int = 0

    @property
    def orbit_count(self) -> int:
        return len(self.orbit_sizes)

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "word_count": self.word_count,
            "orbit_count": self.orbit_count,
            "orbit_sizes": list(self.orbit_sizes),
            "group_order": self.group_order,
            "projective": self.projective,
            "codewords": self.codewords,
        }


def _bit_tables(mmap: MonomialMap) -> list[list[int]]:
    """Byte-indexed lookup tables applying the coordinate permutation to packed words."""
    img = mmap.image_of
    n = mmap.n
    tables = []
    for b in range(0, n, 8):
        tab = [0] * 256
        for v in range(256):
            out = 0
            for t in range(8):
                if v >> t & 1 and b + t < n:
                    out |= 1 << img[b + t]
            tab[v] = out
        tables.append(tab)
    return tables


def _apply_packed(tables: list[list[int]], w: int) -> int:
    out = 0
    for tab in tables:
        out |= tab[w & 0xFF]
        w >>= 8
    return out


def _normalize(word: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Scale so that the first nonzero symbol is 1."""
    lead = next(x for x in word if x)
    inv = pow(lead, -1, p)
    return tuple(x * inv % p for x in word)


def orbit_partition(words: Iterable, actions: Sequence[Callable]) -> list[int]:
    """Orbit sizes of a finite set under the group generated by ``actions``.

    Breadth-first closure from each unvisited word; words must be hashable
    and closed under the actions.  Sizes are returned sorted.
    """
    remaining = set(words)
    total = len(remaining)
    sizes = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        remaining.discard(start)
        queue = deque([start])
        size = 1
        while queue:
            w = queue.popleft()
            for act in actions:
                v = act(w)
                if v in remaining:
                    remaining.discard(v)
                    queue.append(v)
                    size += 1
        sizes.append(size)
    if sum(sizes) != total:
        raise ConsistencyError("orbit sizes do not sum to the word count")
    return sorted(sizes)


def min_weight_words(ext, budget: int = DEFAULT_BUDGET, workers: Optional[int] = None) -> tuple[int, list]:
    """(minimum weight, all words of that weight); packed ints when p = 2."""
    gen = ext.generator_matrix()
    hist, _ = enumerate_weights(gen, ext.p, budget, workers=workers)
    nz = [w for w in range(1, len(hist)) if hist[w]]
    if not nz:
        return 0, []
    d = nz[0]
    _, words = enumerate_weights(gen, ext.p, budget, want_weight=d, workers=workers)
    if len(words) != hist[d]:
        raise ConsistencyError("collected word count differs from histogram")
    return d, words


def min_weight_orbits(
    ext,
    gens: Sequence[MonomialMap],
    budget: int = DEFAULT_BUDGET,
    workers: Optional[int] = None,
    words: Optional[tuple[int, list]] = None,
) -> OrbitReport:
    """Orbits of the minimum-weight codewords under the group generated by ``gens``.

    Binary words are acted on directly; for p > 2 words are taken up to a
    nonzero scalar (projective points).  ``words`` may pass a precomputed
    (weight, words) pair from :func:`min_weight_words`.
    """
    p = ext.p
    d, found = words if words is not None else min_weight_words(ext, budget, workers)
    if not found:
        return OrbitReport(0, 0, (), monomial_group_order(gens) if gens else 1, p > 2, 0)
    if p == 2 and ext.n <= 64:
        tables = [_bit_tables(g) for g in gens]
        actions = [lambda w, t=t: _apply_packed(t, w) for t in tables]
        keys = [int(w) for w in found]
    else:
        def make(g):
            src, sc = g.src, g.scalars

            def act(w):
                return _normalize(tuple(sc[i] * w[src[i]] % p for i in range(len(src))), p)

            return act

        actions = [make(g) for g in gens]
        keys = {_normalize(tuple(w), p) for w in found}
    sizes = orbit_partition(keys, actions)
    order = monomial_group_order(gens)
    for s in sizes:
        if order % s:
            raise ConsistencyError(f"orbit size {s} does not divide group order {order}")
    return OrbitReport(d, len(keys), tuple(sizes), order, p > 2, len(found))
