import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copermanent.bipoly import (
    BiPoly,
    Fingerprint,
    add_assign,
    evaluate,
    fingerprint,
    fnv1a64,
    format_text,
    from_fingerprint,
    mul_linear_factor,
    one,
    parse_text,
    table_size,
    zero,
)
from copermanent.errors import (
    CoefficientOverflow,
    DecodeError,
    DegreeOverflow,
    EvaluationOverflow,
    OrderTooLarge,
)

from reference_values import G_PAIR_POLY, H_PAIR_POLY


def poly(order, terms):
    return BiPoly.from_dict(order, terms)


@st.composite
def bipolys(draw, order=None, bound=1000):
    n = draw(st.integers(0, 6)) if order is None else order
    coeffs = draw(
        st.lists(st.integers(-bound, bound), min_size=table_size(n), max_size=table_size(n))
    )
    return BiPoly(n, coeffs)


def test_zero_and_one():
    assert format_text(one(0)) == "1"
    assert zero(3) + one(3) == one(3)
    assert evaluate(one(5), 7, -2) == 1
    assert one(20).coeff(0, 0) == 1
    with pytest.raises(OrderTooLarge):
        one(21)
    with pytest.raises(OrderTooLarge):
        zero(-1)


def test_add_example():
    p = poly(2, {(2, 0): 1, (0, 2): 1})
    q = poly(2, {(2, 0): 1, (0, 0): 1})
    assert add_assign(p, q) == poly(2, {(2, 0): 2, (0, 2): 1, (0, 0): 1})
    assert p + zero(2) == p


def test_add_overflow_is_checked():
    big = poly(1, {(0, 0): 2**63 - 1})
    with pytest.raises(CoefficientOverflow):
        big + one(1)
    with pytest.raises(ValueError):
        one(1) + one(2)


def test_mul_linear_factor_examples():
    x = mul_linear_factor(one(2), True, 0, 0)
    assert x == poly(2, {(1, 0): 1})
    assert mul_linear_factor(x, True, 1, 1) == poly(2, {(2, 0): 1, (1, 1): 1, (1, 0): 1})
    sq = mul_linear_factor(mul_linear_factor(one(2), True, 1, 0), True, 1, 0)
    assert sq == poly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_mul_linear_factor_errors():
    x = mul_linear_factor(one(1), True, 0, 0)
    with pytest.raises(DegreeOverflow):
        mul_linear_factor(x, False, 1, 0)
    # a pure constant factor never raises the degree
    assert mul_linear_factor(x, False, 0, 3) == poly(1, {(1, 0): 3})
    big = poly(1, {(0, 0): 2**62})
    with pytest.raises(CoefficientOverflow):
        mul_linear_factor(big, False, 0, 2)


def test_evaluate_examples():
    k2 = poly(2, {(2, 0): 1, (0, 2): 1})
    assert evaluate(k2, 3, 2) == 13
    assert evaluate(parse_text(G_PAIR_POLY, 8), 0, 0) == 40
    assert evaluate(parse_text(G_PAIR_POLY, 8), 1, 1) == 40320


def test_evaluate_overflow():
    p = poly(20, {(20, 0): 2**62})
    with pytest.raises(EvaluationOverflow):
        evaluate(p, 2**4, 0)


def test_fingerprint_layout():
    fp = fingerprint(one(0))
    assert fp.bytes == bytes([0x00, 1, 0, 0, 0, 0, 0, 0, 0])
    assert fp.hash64 == fnv1a64(fp.bytes)
    neg = fingerprint(poly(1, {(0, 1): -1}))
    assert neg.bytes == bytes([1]) + bytes(8) + b"\xff" * 8 + bytes(8)


def test_fnv1a_reference_vectors():
    # Standard FNV-1a 64-bit test vectors.
    assert fnv1a64(b"") == 0xCBF29CE484222325
    assert fnv1a64(b"a") == 0xAF63DC4C8601EC8C
    assert fnv1a64(b"foobar") == 0x85944171F73967E8


def test_fingerprint_equality_matches_polynomial_equality(universe):
    from copermanent.engine import bivariate_permanent
    from copermanent.graphs import from_graph6

    polys = [bivariate_permanent(from_graph6(s)) for n in range(7) for s in universe(n)]
    fps = [fingerprint(p) for p in polys]
    for a in range(len(polys)):
        for b in range(a, len(polys)):
            assert (polys[a] == polys[b]) == (fps[a].bytes == fps[b].bytes)
            if polys[a] == polys[b]:
                assert fps[a].hash64 == fps[b].hash64


def test_from_fingerprint_rejects_bad_lengths():
    with pytest.raises(DecodeError):
        from_fingerprint(b"")
    with pytest.raises(DecodeError):
        from_fingerprint(bytes([1]) + bytes(8))
    with pytest.raises(DecodeError):
        from_fingerprint(bytes([21]) + bytes(8 * table_size(21)))


def test_format_text_examples():
    assert format_text(one(0)) == "1"
    assert format_text(zero(3)) == "0"
    assert format_text(poly(2, {(2, 0): 1, (0, 2): 1})) == "x^2+λ^2"
    assert format_text(poly(2, {(1, 1): -1, (0, 0): -3})) == "-xλ-3"
    assert format_text(poly(2, {(1, 1): 1}), lam="y") == "xy"


@pytest.mark.parametrize("text", [G_PAIR_POLY, H_PAIR_POLY])
def test_format_text_reproduces_printed_order(text):
    assert format_text(parse_text(text, 8)) == text


@settings(max_examples=200, deadline=None)
@given(bipolys())
def test_serialization_round_trip(p):
    fp = fingerprint(p)
    assert from_fingerprint(fp) == p
    assert Fingerprint.from_hex(fp.hex()) == fp
    assert parse_text(format_text(p), p.order) == p
    assert parse_text(format_text(p, lam="y"), p.order) == p


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_addition_ring_laws(data):
    n = data.draw(st.integers(0, 6))
    p, q, r = (data.draw(bipolys(order=n)) for _ in range(3))
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p + zero(n) == p
    assert p - p == zero(n)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_mul_distributes_over_addition(data):
    n = data.draw(st.integers(1, 6))
    # Keep the top total degree empty so the factor fits.
    trim = lambda s: BiPoly.from_dict(n, {(i, j): c for i, j, c in s.terms() if i + j < n})
    p, q = (trim(data.draw(bipolys(order=n))) for _ in range(2))
    has_x = data.draw(st.booleans())
    a, b = data.draw(st.integers(0, 9)), data.draw(st.integers(0, 9))
    lhs = mul_linear_factor(p + q, has_x, a, b)
    rhs = mul_linear_factor(p, has_x, a, b) + mul_linear_factor(q, has_x, a, b)
    assert lhs == rhs
    for x0, l0 in [(0, 0), (2, -1), (-3, 3)]:
        assert evaluate(lhs, x0, l0) == evaluate(p + q, x0, l0) * (x0 * has_x + a * l0 + b)
