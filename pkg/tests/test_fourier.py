import random
from fractions import Fraction

import pytest

from trace3 import closedforms as cf
from trace3.cyclotomic import (Cyc, cyclotomic_polynomial, embed,
                               imaginary_unit, sqrt2, sqrt2_power)
from trace3.fourier import (analyze_sequence, deviation, dft_extract,
                            is_periodic, reconstruct)
from trace3.traces import trace_census


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(24) == (1, 0, 0, 0, -1, 0, 0, 0, 1)
    assert len(cyclotomic_polynomial(120)) - 1 == 32


def test_zeta_relations():
    for p in (8, 12, 24):
        z = Cyc.zeta_pow(p, 1)
        acc = Cyc.rational(p, 1)
        for _ in range(p):
            acc = acc * z
        assert acc == Cyc.rational(p, 1)
        assert Cyc.zeta_pow(p, p // 2) == Cyc.rational(p, -1)


def test_sqrt2_and_i():
    for p in (8, 24):
        s = sqrt2(p)
        assert s * s == Cyc.rational(p, 2)
        i = imaginary_unit(p)
        assert i * i == Cyc.rational(p, -1)
    assert sqrt2_power(8, -3) * sqrt2_power(8, 3) == Cyc.rational(8, 1)
    assert sqrt2_power(24, 5) == sqrt2_power(24, 4) * sqrt2(24)


def test_conjugation_and_rationality():
    z = Cyc.zeta_pow(24, 7)
    assert z * z.conj() == Cyc.rational(24, 1)
    assert (z + z.conj()).conj() == z + z.conj()
    assert Cyc.rational(24, Fraction(3, 7)).is_rational()
    assert not z.is_rational()
    with pytest.raises(ValueError):
        z.as_rational()


def test_embed():
    z8 = Cyc.zeta_pow(8, 1)
    z24 = Cyc.zeta_pow(24, 3)
    assert embed(z8, 24) == z24
    assert embed(sqrt2(8), 24) == sqrt2(24)


@pytest.mark.parametrize("period", [8, 12, 24])
def test_round_trip_random_vectors(period):
    rng = random.Random(period)
    for _ in range(30):
        vec = [Fraction(rng.randrange(-40, 41), rng.randrange(1, 7))
               for _ in range(period)]
        formula = dft_extract(vec, period)
        for n in range(2 * period):
            assert reconstruct(formula, n) == vec[n % period]
        # real input: conjugation symmetry of the spectrum
        for k in range(period):
            assert formula.coeffs[(period - k) % period] == formula.coeffs[k].conj()


def test_zero_vector():
    formula = dft_extract([0] * 8, 8)
    assert formula.nonzero_indices() == []
    assert reconstruct(formula, 11) == 0


def test_reconstruct_spot_values():
    f = cf.two_trace_formula(0, 0)
    assert reconstruct(f, 8) == Fraction(-1, 2)
    f3 = cf.three_trace_formula(0, 0, 0)
    assert reconstruct(f3, 12) == Fraction(3, 4)
    assert deviation(f3, 12) == 48


def test_reconstruct_rejects_irrational():
    f = cf.two_trace_formula(0, 0)
    with pytest.raises(ValueError):
        reconstruct(f, 3)  # odd n: the normalized value carries sqrt 2
    assert deviation(f, 3) == -1


def test_extraction_recovers_two_trace_formulas():
    for t1 in (0, 1):
        for t2 in (0, 1):
            vec = [Cyc.rational(8, cf.two_trace_deviation(8 + j, t1, t2))
                   * sqrt2_power(8, -(8 + j)) for j in range(8)]
            got = dft_extract(vec, 8)
            assert got == cf.two_trace_formula(t1, t2)
    got = dft_extract(
        [Cyc.rational(8, cf.two_trace_deviation(8 + j, 0, 0))
         * sqrt2_power(8, -(8 + j)) for j in range(8)], 8)
    assert got.nonzero_indices() == [3, 5]
    assert got.coeffs[3].as_rational() == Fraction(-1, 4)
    assert got.coeffs[5].as_rational() == Fraction(-1, 4)


def test_extraction_recovers_three_trace_formulas():
    for t1 in (0, 1):
        for t2 in (0, 1):
            for t3 in (0, 1):
                vec = [Cyc.rational(24, cf.three_trace_deviation(24 + j, t1, t2, t3))
                       * sqrt2_power(24, -(24 + j)) for j in range(24)]
                assert dft_extract(vec, 24) == cf.three_trace_formula(t1, t2, t3)


def test_parseval():
    rng = random.Random(99)
    for period in (8, 24):
        vec = [Fraction(rng.randrange(-9, 10)) for _ in range(period)]
        formula = dft_extract(vec, period)
        total = Cyc.rational(formula.order, 0)
        for g in formula.coeffs:
            total = total + g.norm_squared()
        assert total.scale(period) == Cyc.rational(
            formula.order, sum(v * v for v in vec))


def test_is_periodic_exact():
    values = [1, 0, -2, 0, 4, 0, -8, 0]  # v_n = f/2^(n/2) has period 4, n0 = 0
    assert is_periodic(values, 0, 2, 4)
    assert not is_periodic(values, 0, 2, 2)  # signs alternate
    assert is_periodic([1, 1, 2, 2, 4, 4, 8, 8], 0, 2, 2)
    assert not is_periodic([1, 1, 2, 3, 4, 4, 8, 8], 0, 2, 2)


def test_analyze_census_data_period_8():
    values = []
    for n in range(2, 18):
        census = trace_census(1, n, "two")
        values.append(census.get((0, 0)) - (1 << (n - 2)))
    formula = analyze_sequence(values, 2, 2)
    assert formula.period == 8
    assert formula == cf.two_trace_formula(0, 0)


def test_analyze_zero_sequence():
    formula = analyze_sequence([0] * 6, 3, 2)
    assert formula.period == 1
    assert reconstruct(formula, 5) == 0


def test_analyze_rejects_non_periodic():
    with pytest.raises(ValueError):
        analyze_sequence(list(range(1, 40)), 1, 2)


def test_analyze_pipeline_data_period_24():
    from trace3.curves import closed_count_combined
    q = 4
    values = []
    for n in range(3, 60):
        base = q ** n + 1
        d1 = closed_count_combined(1, 2, n) - base
        d2 = closed_count_combined(2, 2, n) - base
        d3 = closed_count_combined(3, 2, n) - base
        f_val = Fraction(d1 + d2 + (q - 1) * d3, q ** 3)
        assert f_val.denominator == 1
        values.append(int(f_val))
    formula = analyze_sequence(values, 3, 4)
    assert formula.period == 24
    for n in range(3, 60):
        assert (deviation(formula, n)
                == cf.count_all_zero_traces(2, n) - Fraction(4) ** (n - 3))
