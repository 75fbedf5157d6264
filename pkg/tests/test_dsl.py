import random

import pytest

from fockcalc.dsl import SymbolSyntaxError, format_symbol, parse_complex, parse_symbol
from fockcalc.symbols import (
    Symbol,
    SymbolTerm,
    coordinate,
    exponential,
    kernel,
    relative_residual,
    zero,
)


def test_parse_basic_monomials():
    s = parse_symbol("z1*conj(z1)", 1)
    assert s == coordinate(1, 1) * coordinate(1, 1).conj()


def test_parse_exponential():
    s = parse_symbol("3*exp(z1)", 1)
    assert relative_residual(s, exponential(1, c=[1], coef=3)) == 0.0


def test_parse_kernel():
    s = parse_symbol("K(1,0)", 2)
    assert s == kernel([1, 0])
    t = parse_symbol("K(-6.283185307179586i, 1+2i)", 2)
    assert t == kernel([-6.283185307179586j, 1 + 2j])


def test_parse_powers_and_sums():
    s = parse_symbol("z1^3 - 2*z1 + (0.5-0.25i)", 1)
    z = coordinate(1, 1)
    assert relative_residual(s, z**3 - 2 * z + (0.5 - 0.25j)) == 0.0


def test_parse_nonlinear_exp_rejected():
    with pytest.raises(SymbolSyntaxError) as err:
        parse_symbol("exp(z1^2)", 1)
    assert err.value.position == 0
    with pytest.raises(SymbolSyntaxError):
        parse_symbol("exp(exp(z1))", 1)


def test_parse_exp_constant_folds():
    s = parse_symbol("exp(1 + z1)", 1)
    import math

    assert abs(s.terms[0].coef - math.e) < 1e-14
    assert s.terms[0].c == (1 + 0j,)


def test_structured_diagnostics_carry_positions():
    cases = [
        ("", 0),
        ("z1 +", 4),
        ("z1 * * z1", 5),
        ("q + 1", 0),
        ("z0", 0),
        ("z3", 0),  # out of range at n = 2
        ("conj(z1", 7),
        ("K(1)", 0),  # arity at n = 2
        ("1 @ 2", 2),
        ("(1+2i", 5),
    ]
    for text, pos in cases:
        with pytest.raises(SymbolSyntaxError) as err:
            parse_symbol(text, 2)
        assert err.value.position == pos, (text, err.value.position)


def test_trailing_input_rejected():
    with pytest.raises(SymbolSyntaxError):
        parse_symbol("z1 z1", 1)


def test_format_zero():
    assert format_symbol(zero(3)) == "0"


def test_format_merges_canonically():
    assert format_symbol(parse_symbol("z1 + z1", 1)) == "2*z1"


def test_format_signs_and_complex_coefficients():
    s = parse_symbol("-z1 + (1-2i)*z2 - 0.5i", 2)
    text = format_symbol(s)
    assert format_symbol(parse_symbol(text, 2)) == text
    assert relative_residual(parse_symbol(text, 2), s) <= 1e-12


def random_symbol(rng, n):
    raw = []
    for _ in range(rng.randint(1, 5)):
        a = tuple(rng.randint(0, 3) for _ in range(n))
        b = tuple(rng.randint(0, 2) for _ in range(n))
        coef = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if rng.random() < 0.5:
            c = tuple(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n))
            d = tuple(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n))
        else:
            c = d = (0j,) * n
        raw.append(SymbolTerm(coef, a, b, c, d))
    return Symbol(n, raw)


def test_round_trip_100_random_symbols():
    rng = random.Random(0xF0CC)
    for _ in range(100):
        n = rng.randint(1, 3)
        s = random_symbol(rng, n)
        back = parse_symbol(format_symbol(s), n)
        assert relative_residual(back, s) <= 1e-12


def test_format_parse_idempotent():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 2)
        text = format_symbol(random_symbol(rng, n))
        once = format_symbol(parse_symbol(text, n))
        twice = format_symbol(parse_symbol(once, n))
        assert once == twice


def test_parse_complex_values():
    assert parse_complex("1+2i") == 1 + 2j
    assert parse_complex("-0.5i") == -0.5j
    assert parse_complex("3") == 3
    with pytest.raises(SymbolSyntaxError):
        parse_complex("z1")
