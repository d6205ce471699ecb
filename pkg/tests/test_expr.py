import math
import random
from pathlib import Path

import pytest

from movekit.expr import (ElemKind, ErrorKind, ParseError, RpnProgram,
                          analyse, calculate, sample_parametric,
                          sample_y_of_x)

from oracles.exprref import ref_eval

CORPUS = Path(__file__).parent / "data" / "expr_corpus.txt"


def corpus_lines():
    lines = []
    for raw in CORPUS.read_text().splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def good(text):
    program = analyse(text)
    assert isinstance(program, RpnProgram), program
    return program


def value_at(text, arg):
    out = calculate(good(text), arg)
    assert out.ok
    return out.value


# parsing


def test_the_two_wave_sum_parses_and_evaluates():
    out = calculate(good("2*sin(0.7*x-0.9)+0.2*sin(20*x)"), 0.0)
    assert out.ok
    assert out.value == pytest.approx(2 * math.sin(-0.9), abs=1e-12)
    assert out.value == pytest.approx(-1.566654, abs=1e-6)


def test_error_kinds_and_positions():
    cases = [
        ("", ErrorKind.EMPTY_INPUT, 0),
        ("   ", ErrorKind.EMPTY_INPUT, 0),
        ("sin(x", ErrorKind.UNBALANCED_BRACKET, 5),
        ("2)", ErrorKind.UNBALANCED_BRACKET, 1),
        ("0.7x", ErrorKind.MISSING_OPERATOR, 3),
        ("2(3)", ErrorKind.MISSING_OPERATOR, 1),
        ("2+", ErrorKind.MISSING_OPERAND, 2),
        ("(", ErrorKind.MISSING_OPERAND, 1),
        ("()", ErrorKind.MISSING_OPERAND, 1),
        ("x+-p", ErrorKind.MISSING_OPERAND, 2),
        ("x^-1", ErrorKind.MISSING_OPERAND, 2),
        ("mod", ErrorKind.MISSING_OPERAND, 3),
        ("sin x", ErrorKind.MISSING_OPERAND, 4),
        ("a", ErrorKind.UNKNOWN_TOKEN, 0),
        ("xy*2", ErrorKind.UNKNOWN_TOKEN, 0),
        ("2$3", ErrorKind.UNKNOWN_TOKEN, 1),
        (".5", ErrorKind.BAD_NUMBER, 0),
        ("2.", ErrorKind.BAD_NUMBER, 1),
        ("1.5.2", ErrorKind.BAD_NUMBER, 3),
    ]
    for text, kind, position in cases:
        err = analyse(text)
        assert err == ParseError(kind, position), text


def test_power_is_right_associative_and_below_unary_minus():
    assert value_at("2^3^2", 0.0) == 512
    assert value_at("-x^2", 3.0) == -9
    assert value_at("2+3*4^2", 0.0) == 50


def test_leading_minus_negates_the_whole_chain():
    assert value_at("-x+1", 2.0) == -3
    assert value_at("(-x)+1", 2.0) == -1
    assert value_at("x*(-x)", 3.0) == -9
    assert value_at("-(x+1)", 2.0) == -3


def test_names_ignore_case_and_spaces_are_free():
    assert value_at("SIN(X)+COS(P)", 0.0) == pytest.approx(1.0)
    assert value_at("  sin( x ) + 1 ", 0.0) == pytest.approx(1.0)


def test_programs_are_stack_balanced():
    for line in corpus_lines():
        depth = 0
        for e in good(line).elements:
            if e.kind in (ElemKind.NUMBER, ElemKind.ARGUMENT):
                depth += 1
            elif e.kind is ElemKind.BINARY:
                assert depth >= 2, line
                depth -= 1
            else:
                assert depth >= 1, line
        assert depth == 1, line


# evaluation


def test_domain_violations_fail_quietly():
    assert calculate(good("sin(x)"), 0.0) .value == 0.0
    assert not calculate(good("sqrt(x)"), -1.0).ok
    assert not calculate(good("ln(x)"), 0.0).ok
    assert not calculate(good("lg(x)"), -2.0).ok
    assert not calculate(good("1/x"), 0.0).ok
    assert not calculate(good("exp(x)"), 1000.0).ok
    assert not calculate(good("arcsin(x)"), 1.5).ok
    assert calculate(good("mod(x)"), -3.5).value == 3.5
    assert calculate(good("x^2"), 1e200).ok is False  # runs off to infinity


def test_corpus_matches_the_reference_evaluator():
    rng = random.Random(7)
    lines = corpus_lines()
    assert len(lines) == 50
    for line in lines:
        program = good(line)
        for _ in range(100):
            arg = rng.uniform(-10, 10)
            out = calculate(program, arg)
            ref = ref_eval(line, arg)
            assert out.ok == (ref is not None), (line, arg)
            if out.ok:
                assert abs(out.value - ref) <= 1e-12 * max(1.0, abs(ref)), \
                    (line, arg)


def test_operator_chains_agree_with_plain_arithmetic():
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (rng.uniform(0.1, 9) for _ in range(3))
        s = value_at(f"{a!r}+{b!r}*{c!r}", 0.0)
        assert s == a + b * c
        d = value_at(f"{a!r}-{b!r}-{c!r}", 0.0)
        assert d == (a - b) - c


def test_no_input_crashes_the_parser():
    rng = random.Random(13)
    alphabet = "xXpPrR ()+-*/^.0123456789sincotghlqeamd$#\\"
    for _ in range(20000):
        text = "".join(rng.choice(alphabet)
                       for _ in range(rng.randrange(0, 30)))
        result = analyse(text)
        if isinstance(result, ParseError):
            assert 0 <= result.position <= len(text), text
        else:
            assert isinstance(result, RpnProgram)


# sampling


def test_constant_sampling_is_a_flat_full_polyline():
    points = sample_y_of_x(good("1"), (-5.0, 5.0), 100)
    assert len(points) == 100
    assert all(p is not None and p[1] == 1.0 for p in points)
    assert points[0][0] == -5.0 and points[-1][0] == 5.0


def test_sampling_leaves_gaps_where_evaluation_fails():
    points = sample_y_of_x(good("sqrt(x)"), (-1.0, 1.0), 100)
    assert len(points) == 100
    assert points[0] is None
    assert points[-1] == pytest.approx((1.0, 1.0))
    gaps = sum(1 for p in points if p is None)
    assert 0 < gaps < 100
    for p, x_sign in ((p, p[0] >= 0) for p in points if p is not None):
        assert x_sign, p


def test_parametric_sweep_is_inclusive():
    cx, cy = good("cos(r)"), good("sin(r)")
    points = sample_parametric(cx, cy, (0.0, 2 * math.pi), math.pi / 2)
    assert len(points) == 5
    assert points[0] == pytest.approx((1.0, 0.0))
    assert points[1] == pytest.approx((0.0, 1.0), abs=1e-12)
    assert points[4] == pytest.approx((1.0, 0.0))

    two = sample_parametric(cx, cy, (0.0, 1.0), 10.0)
    assert len(two) == 2
    assert two[0][0] == pytest.approx(math.cos(0.0))
    assert two[1][0] == pytest.approx(math.cos(1.0))


def test_parametric_failures_split_the_polyline():
    points = sample_parametric(good("sqrt(r)"), good("r"), (-1.0, 1.0), 0.5)
    assert len(points) == 5
    assert points[0] is None and points[1] is None
    assert points[2] == pytest.approx((0.0, 0.0))
    assert points[4] == pytest.approx((1.0, 1.0))
    with pytest.raises(ValueError):
        sample_parametric(good("r"), good("r"), (0.0, 1.0), 0.0)
