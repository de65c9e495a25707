from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrverify.errors import DomainError
from qrverify.gf import (
    field_for_roots,
    find_root_of_unity,
    gf_build,
    is_irreducible,
    legendre,
    trace_to_prime,
)

PRIMES = [3, 5, 7, 11, 13, 17, 19, 23]


# --- brute-force oracles -----------------------------------------------------


def _divides(d, f, p):
    """Long division of int-list polys (low first) over GF(p); True if remainder is 0."""
    f = list(f)
    inv = pow(d[-1], -1, p)
    while len(f) >= len(d):
        c = f[-1] * inv % p
        s = len(f) - len(d)
        for i, x in enumerate(d):
            f[s + i] = (f[s + i] - c * x) % p
        while f and f[-1] == 0:
            f.pop()
    return not f


def brute_irreducible(f, p):
    m = len(f) - 1
    for deg in range(1, m // 2 + 1):
        for low in product(range(p), repeat=deg):
            if _divides(list(low) + [1], f, p):
                return False
    return True


def brute_smallest_modulus(p, m):
    for n in range(p**m):
        low = [(n // p**i) % p for i in range(m)]
        if brute_irreducible(low + [1], p):
            return tuple(low + [1])


# --- legendre ------------------------------------------------------------------


def test_legendre_examples():
    assert legendre(1, 7) == 1
    assert legendre(-1, 7) == -1
    assert 6 * 6 % 17 == 2
    assert legendre(2, 17) == 1
    assert legendre(14, 7) == 0


@pytest.mark.parametrize("ell", PRIMES)
def test_legendre_matches_square_table(ell):
    squares = {i * i % ell for i in range(1, ell)}
    for a in range(1, ell):
        assert legendre(a, ell) == (1 if a in squares else -1)
    assert sum(1 for a in range(1, ell) if legendre(a, ell) == 1) == (ell - 1) // 2


@settings(max_examples=200)
@given(st.sampled_from(PRIMES), st.integers(1, 1000), st.integers(1, 1000))
def test_legendre_multiplicative(ell, a, b):
    assert legendre(a * b, ell) == legendre(a, ell) * legendre(b, ell)


def test_legendre_rejects_non_odd_prime():
    with pytest.raises(DomainError):
        legendre(3, 9)
    with pytest.raises(DomainError):
        legendre(1, 2)


# --- field construction -------------------------------------------------------


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (2, 8)])
def test_modulus_matches_brute_scan(p, m):
    assert gf_build(p, m).modulus == brute_smallest_modulus(p, m)


def test_gf_build_examples():
    assert gf_build(2, 3).modulus == (1, 1, 0, 1)  # x^3 + x + 1
    assert gf_build(3, 1).q == 3 and gf_build(3, 1).is_prime_field
    assert gf_build(2, 11).modulus == (1, 0, 1) + (0,) * 8 + (1,)  # x^11 + x^2 + 1
    assert brute_irreducible(gf_build(2, 11).modulus, 2)


def test_gf_build_deterministic():
    a = gf_build(5, 3)
    gf_build.cache_clear()
    b = gf_build(5, 3)
    assert a is not b and a == b and a.modulus == b.modulus


def test_gf_build_rejects_composite():
    with pytest.raises(DomainError):
        gf_build(4, 1)
    with pytest.raises(DomainError):
        gf_build(2, 0)


def test_is_irreducible_agrees_with_brute_force():
    for p, m in [(2, 4), (2, 5), (3, 3)]:
        for n in range(p**m):
            f = [(n // p**i) % p for i in range(m)] + [1]
            assert is_irreducible(f, p) == brute_irreducible(f, p), f


# --- arithmetic ---------------------------------------------------------------


def test_fq_arith_examples():
    F = gf_build(2, 3)
    x = F.gen()
    assert x * x**2 == x + 1
    F3 = gf_build(3)
    assert F3(2) + F3(2) == F3(1)
    for a in F.elements():
        if a:
            assert a * a.inverse() == 1
            assert a / a == 1
    with pytest.raises(ZeroDivisionError):
        F.zero().inverse()
    with pytest.raises(ZeroDivisionError):
        F.one() / F.zero()


FIELDS = [(2, 3), (3, 2), (5, 2), (3, 5), (2, 8)]


@settings(max_examples=150)
@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(pm, data):
    F = gf_build(*pm)
    a, b, c = (F.from_index(data.draw(st.integers(0, F.q - 1))) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a ** (F.q - 1) == (1 if a else 0)
    if b:
        assert (a / b) * b == a
        assert b ** -2 == (b * b).inverse()


def test_index_round_trip():
    F = gf_build(3, 3)
    assert [int(e) for e in F.elements()] == list(range(F.q))


# --- roots of unity -----------------------------------------------------------


def test_root_of_unity_examples():
    F8 = gf_build(2, 3)
    assert find_root_of_unity(F8, 7) == F8.gen()
    F4 = gf_build(2, 2)
    # scan oracle: first element (by index) whose 1st power has order 3
    z = find_root_of_unity(F4, 3)
    first = next(w for w in F4.elements() if w and w != 1 and w**3 == 1)
    assert z == first and not z.in_prime_field()
    with pytest.raises(DomainError, match="7"):
        find_root_of_unity(gf_build(2), 7)


@pytest.mark.parametrize("p,ell", [(2, 7), (2, 17), (2, 23), (3, 11), (3, 13), (5, 11), (5, 19)])
def test_root_of_unity_properties(p, ell):
    F = field_for_roots(p, ell)
    z = find_root_of_unity(F, ell)
    assert z**ell == 1 and z != 1
    assert len({z**i for i in range(ell)}) == ell


def test_root_of_unity_composite_order():
    F = gf_build(5, 2)
    z = find_root_of_unity(F, 24)
    assert z.order() == 24


# --- trace --------------------------------------------------------------------


def test_trace_examples():
    F = gf_build(2, 3)
    assert trace_to_prime(F, F.zero()) == 0
    x = F.gen()
    # x + x^2 + x^4 with x^3 = x + 1: x^4 = x^2 + x, so the sum is 2x + 2x^2 = 0
    assert trace_to_prime(F, x) == x + x * x + (x * x) * (x * x)
    assert trace_to_prime(F, x) == 0
    assert trace_to_prime(F, F.one()) == 1  # 3 * 1 mod 2
    F7 = gf_build(7)
    assert all(trace_to_prime(F7, a) == a for a in F7.elements())


@pytest.mark.parametrize("pm", [(2, 3), (3, 2), (2, 5), (5, 2)])
def test_trace_properties(pm):
    F = gf_build(*pm)
    elems = list(F.elements())
    T = lambda a: trace_to_prime(F, a)
    images = set()
    for a in elems:
        t = T(a)
        assert t.in_prime_field()
        assert T(a.frobenius()) == t
        images.add(int(t))
        for c in range(F.p):
            assert T(a * c) == t * c
    for a, b in zip(elems, reversed(elems)):
        assert T(a + b) == T(a) + T(b)
    assert images == set(range(F.p))
