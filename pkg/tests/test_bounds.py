from decimal import Decimal, localcontext
from fractions import Fraction
from math import factorial

import pytest

from radoforge.bounds import (
    balanced_bound_decimal,
    balanced_bound_holds,
    balanced_cap,
    balanced_reduction,
    bound_report,
    ceil_log2,
    efloor_factorial,
    forced_m_statement,
    forced_m_threshold,
    iroot,
    kosciuszko_bound,
    kosciuszko_holds,
    odd_cycle_ramsey_cap,
    repeated_schur_cap,
    schur_bounds,
)


def test_iroot_exhaustive_small():
    for x in range(0, 200):
        for k in range(1, 6):
            r = iroot(x, k)
            assert r ** k <= x < (r + 1) ** k


def test_iroot_huge():
    x = 7 ** 600 * factorial(50)
    r = iroot(x, 7)
    assert r ** 7 <= x < (r + 1) ** 7


@pytest.mark.parametrize("n,m,r,expected", [
    (3, 1, 1, True), (4, 1, 1, False),
    (35, 2, 2, True), (36, 2, 2, False),
])
def test_balanced_bound_holds_examples(n, m, r, expected):
    assert balanced_bound_holds(n, m, r) is expected


@pytest.mark.parametrize("m,r,expected", [(1, 1, 4), (2, 2, 36), (3, 1, 8)])
def test_balanced_cap_examples(m, r, expected):
    assert balanced_cap(m, r) == expected


def test_balanced_cap_is_least_failing_point():
    for m in range(1, 7):
        for r in range(1, 7):
            cap = balanced_cap(m, r)
            assert balanced_bound_holds(cap - 1, m, r)
            assert not balanced_bound_holds(cap, m, r)


def test_balanced_bound_decimal_brackets_cap():
    for m in range(1, 5):
        for r in range(1, 5):
            floor_of_decimal = int(balanced_bound_decimal(m, r))
            assert balanced_cap(m, r) == floor_of_decimal + 1
            assert balanced_bound_holds(floor_of_decimal, m, r)
            assert not balanced_bound_holds(floor_of_decimal + 1, m, r)


@pytest.mark.parametrize("a,b,expected", [
    ((12), 9, (3, 3, 0)),
    (2, 1, (1, 1, 0)),
    (5, 2, None),
])
def test_balanced_reduction_examples(a, b, expected):
    assert balanced_reduction(a, b) == expected


def test_balanced_reduction_consistency():
    for a in range(2, 16):
        for b in range(1, a):
            got = balanced_reduction(a, b)
            if a > 2 * b:
                assert got is None
            else:
                d, m, w = got
                assert d == a - b and m >= 1 and 0 <= w < d
                assert d * m + w == b
                assert d * (m + 1) + w == a


def test_reduction_of_12_9_gives_the_7_power_cap():
    d, m, w = balanced_reduction(12, 9)
    assert (d, m, w) == (3, 3, 0)
    for r in range(1, 5):
        assert balanced_cap(m, r) == iroot(7 ** (3 * r) * factorial(r), 3) + 1


@pytest.mark.parametrize("a,b,r,expected", [
    (5, 2, 1, 17),
    (2, 1, 1, 3),
    (9, 4, 1, 66),
])
def test_repeated_schur_cap_examples(a, b, r, expected):
    assert repeated_schur_cap(a, b, r) == expected


def test_ceil_log2():
    import math
    for n in range(1, 70):
        assert ceil_log2(n) == math.ceil(math.log2(n))


@pytest.mark.parametrize("r,expected", [
    (1, (Fraction(2), 3)),
    (2, (Fraction(5), 6)),
    (3, (Fraction(14), 17)),
])
def test_schur_bounds_examples(r, expected):
    assert schur_bounds(r) == expected


def test_efloor_factorial_vs_high_precision():
    with localcontext() as ctx:
        ctx.prec = 120
        e = Decimal(1).exp()
        for n in range(1, 21):
            assert efloor_factorial(n) == int(e * factorial(n))


def test_kosciuszko_examples():
    assert str(kosciuszko_bound(2)).startswith("22.04540768")
    assert str(kosciuszko_bound(1)).startswith("4.24264068")
    assert str(kosciuszko_bound(3)).startswith("132.27")
    assert kosciuszko_holds(22, 2) and not kosciuszko_holds(23, 2)
    assert kosciuszko_holds(4, 1)


def test_kosciuszko_decimal_brackets_exact_predicate():
    for r in range(1, 8):
        floor_of_decimal = int(kosciuszko_bound(r))
        assert kosciuszko_holds(floor_of_decimal, r)
        assert not kosciuszko_holds(floor_of_decimal + 1, r)


@pytest.mark.parametrize("ell,q,expected", [
    (1, 1, 3),
    (1, 2, 9),
    (2, 2, 51),  # floor(sqrt(6^4 * 2)) + 1 = 50 + 1
])
def test_odd_cycle_ramsey_cap_examples(ell, q, expected):
    assert odd_cycle_ramsey_cap(ell, q) == expected


def test_forced_m_threshold_boundary_is_ln_r():
    with localcontext() as ctx:
        ctx.prec = 60
        base = 2 * Decimal(1).exp() * Decimal(3).ln()
        ln3 = Decimal(3).ln()
    m0 = forced_m_threshold(3, base)
    assert abs(m0 - ln3) < Decimal("1e-45")


def test_forced_m_threshold_e_squared_case():
    with localcontext() as ctx:
        ctx.prec = 60
        base = 2 * Decimal(1).exp() ** 2 * Decimal(3).ln()
    m0 = forced_m_threshold(3, base)
    import math
    expected = math.log(3) / (2 + math.log(2))
    assert abs(float(m0) - expected) < 1e-12


def test_forced_m_threshold_rejects_bad_parameters():
    with pytest.raises(ValueError):
        forced_m_threshold(3, 1)
    with pytest.raises(ValueError):
        forced_m_threshold(2, 100)


def test_forced_m_statement():
    statement = forced_m_statement(3, 100)
    assert statement.r == 3
    assert "3-coloring" in statement.describe()
    assert statement.to_json_dict()["m_threshold"] == statement.threshold


def test_bound_report_shapes():
    report = bound_report(2, m=2)
    names = {entry["name"] for entry in report["entries"]}
    assert {"balanced_cap", "balanced_bound", "sqrt_factorial_upper"} <= names
    for entry in report["entries"]:
        if entry["kind"] == "exact":
            assert isinstance(entry["value"], int)
        else:
            assert isinstance(entry["value"], str)
    pair = bound_report(1, a=5, b=2)
    names = {entry["name"] for entry in pair["entries"]}
    assert "repeated_schur_cap" in names
    assert "balanced_cap" not in names  # 5 > 2*2: no balanced reduction
    with pytest.raises(ValueError):
        bound_report(2)
    with pytest.raises(ValueError):
        bound_report(2, m=1, a=3, b=1)
