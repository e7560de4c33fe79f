import csv
import math

import numpy as np
import pytest

from apvint.cosexample import (MAX_ASYM_TERMS, cos_apv_reference,
                               cos_fpi_asymptotic, cos_apv_integrand,
                               integrate_cos_apv_integrand, si,
                               write_asymptotic_csv)
from apvint.quadrature import QuadConfig

from conftest import COS_FPI_N1, si_series


class TestSi:
    def test_against_series_oracle(self):
        for x in (0.25, 0.5, 1.0, 2.0):
            assert si(x) == pytest.approx(si_series(x), abs=1e-15)

    def test_odd(self):
        assert si(-1.0) == pytest.approx(-si(1.0), abs=1e-15)


class TestIntegrand:
    def test_zero_at_theta_zero(self):
        for n in range(6):
            assert cos_apv_integrand(0.0, n) == 0.0

    def test_half_pi_n1(self):
        assert cos_apv_integrand(math.pi / 2, 1) == pytest.approx(-math.cosh(1.0), abs=1e-15)

    def test_integral_matches_golden_n1(self):
        r = integrate_cos_apv_integrand(1)
        assert r.value.real == pytest.approx(COS_FPI_N1, abs=1e-10)

    def test_integral_matches_contour_average(self):
        for n in range(9):
            theta_value = integrate_cos_apv_integrand(n).value.real
            assert theta_value == pytest.approx(cos_apv_reference(n), abs=1e-8)


class TestAsymptotics:
    def test_even_n_identically_zero(self):
        for n in (2, 10, 50):
            for terms in (1, 3, 6):
                assert cos_fpi_asymptotic(n, terms) == 0.0

    def test_n15_six_terms_close(self):
        ref = cos_apv_reference(15)
        asym = cos_fpi_asymptotic(15, 6)
        assert abs(asym - ref) / abs(ref) < 1e-4

    def test_more_terms_improve_at_n51(self):
        ref = cos_apv_reference(51)
        e2 = abs(cos_fpi_asymptotic(51, 2) - ref)
        e6 = abs(cos_fpi_asymptotic(51, 6) - ref)
        assert e6 < e2

    def test_term_count_monotone_improvement(self):
        cfg = QuadConfig(rel_tol=1e-13, abs_tol=1e-14, max_subdivisions=4000)
        for n in (21, 35):
            ref = cos_apv_reference(n, cfg)
            errs = [abs(cos_fpi_asymptotic(n, t) - ref) for t in range(1, 7)]
            assert all(b < a for a, b in zip(errs, errs[1:]))

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            cos_fpi_asymptotic(0)
        with pytest.raises(ValueError):
            cos_fpi_asymptotic(5, terms=MAX_ASYM_TERMS + 1)


class TestCsvEmission:
    def test_rows_and_header(self, tmp_path):
        out = tmp_path / "asym.csv"
        rows = write_asymptotic_csv(out, [21, 23], terms=6)
        assert len(rows) == 2
        with open(out) as fh:
            lines = list(csv.reader(fh))
        assert lines[0] == ["n", "apv_value", "asym_value", "abs_err"]
        assert len(lines) == 3
        n, ref, asym, err = lines[1]
        assert int(n) == 21
        assert abs(float(ref) - float(asym)) == pytest.approx(float(err))
