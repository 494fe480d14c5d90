import pytest
from hypothesis import given, settings, strategies as st
from sympy import GF as SymGF, Poly, symbols

from arcres.gf import (
    CANONICAL_MODULI,
    FieldError,
    field_create,
    field_inv,
    field_mul,
    is_irreducible_gf2,
    trace,
)

x = symbols("x")


def to_poly(label):
    coeffs = [int(b) for b in bin(label)[2:]] if label else [0]
    return Poly(coeffs, x, domain=SymGF(2))


def from_poly(p):
    out = 0
    for c in p.all_coeffs():
        out = (out << 1) | int(c) % 2
    return out


def sympy_mul(F, a, b):
    return from_poly((to_poly(a) * to_poly(b)).rem(to_poly(F.modulus_poly)))


def test_degree_three_modulus():
    F = field_create(degree=3)
    assert F.order == 8 and F.modulus_poly == 0b1011


@pytest.mark.parametrize("t", sorted(CANONICAL_MODULI))
def test_canonical_moduli_irreducible(t):
    poly = to_poly(CANONICAL_MODULI[t])
    assert poly.degree() == t
    assert poly.is_irreducible
    assert is_irreducible_gf2(CANONICAL_MODULI[t])


def test_prime_fields():
    assert field_create(prime=5).order == 5
    with pytest.raises(FieldError):
        field_create(prime=6)


def test_bad_moduli():
    with pytest.raises(FieldError):
        field_create(degree=7)
    with pytest.raises(FieldError):
        field_create(degree=2, modulus=0b101)  # (x+1)^2
    assert field_create(degree=7, modulus=0b10000011).order == 128


def test_mul_examples():
    F = field_create(degree=3)
    assert field_mul(F, 2, 4) == 3
    for G in (F, field_create(prime=7)):
        for a in G.elements():
            assert field_mul(G, 1, a) == a
            assert field_mul(G, 0, a) == 0
    with pytest.raises(FieldError):
        field_mul(F, 8, 1)


def test_inv_examples():
    assert field_inv(field_create(degree=2), 2) == 3
    assert field_inv(field_create(prime=5), 2) == 3
    for t in range(1, 7):
        assert field_inv(field_create(degree=t), 1) == 1
    with pytest.raises(ZeroDivisionError):
        field_inv(field_create(degree=2), 0)


def test_trace_examples():
    F4 = field_create(degree=2)
    assert trace(F4, 1) == 0
    assert trace(F4, 2) == 1
    assert trace(field_create(degree=1), 1) == 1
    with pytest.raises(FieldError):
        trace(field_create(prime=3), 1)


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_field_axioms_exhaustive(t):
    F = field_create(degree=t)
    E = list(F.elements())
    table = [[F.mul(a, b) for b in E] for a in E]
    for a in E:
        for b in E:
            assert table[a][b] == table[b][a]
            assert table[a][b] == sympy_mul(F, a, b)
            for c in E:
                assert table[table[a][b]][c] == table[a][table[b][c]]
                assert table[a][b ^ c] == table[a][b] ^ table[a][c]
    for a in E[1:]:
        assert F.mul(a, F.inv(a)) == 1


@settings(max_examples=200, deadline=None)
@given(st.integers(5, 6).flatmap(lambda t: st.tuples(st.just(t), st.integers(0, 2**t - 1),
                                                     st.integers(0, 2**t - 1))))
def test_mul_matches_polynomial_oracle(args):
    t, a, b = args
    F = field_create(degree=t)
    assert F.mul(a, b) == sympy_mul(F, a, b)


@pytest.mark.parametrize("t", range(1, 7))
def test_multiplicative_group_cyclic(t):
    F = field_create(degree=t)
    n = F.order - 1
    for g in range(1, F.order):
        seen, y = set(), 1
        for _ in range(n):
            y = F.mul(y, g)
            seen.add(y)
        if len(seen) == n:
            return
    pytest.fail("no generator found")


@pytest.mark.parametrize("t", range(1, 7))
def test_trace_linear_and_balanced(t):
    F = field_create(degree=t)
    tr = [F.trace(a) for a in F.elements()]
    assert set(tr) <= {0, 1}
    assert tr.count(0) == F.order // 2
    for a in F.elements():
        for b in F.elements():
            assert tr[a ^ b] == tr[a] ^ tr[b]
