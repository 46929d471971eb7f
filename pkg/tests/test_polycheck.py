from fractions import Fraction as F

import pytest

from kwall.polycheck import (
    cauchy_root_bound,
    count_roots_open,
    min_witness,
    nonneg_on_interval,
    nonneg_on_ray,
    poly,
    poly_div_linear,
    poly_eval,
    poly_mul,
    sturm_sequence,
)


def from_roots(*roots):
    p = poly([1])
    for r in roots:
        p = poly_mul(p, poly([-F(r), 1]))
    return p


class TestRootCounting:
    def test_simple_roots(self):
        p = from_roots(1, 2, 5)
        assert count_roots_open(p, F(0), F(10)) == 3
        assert count_roots_open(p, F(1), F(5)) == 1
        assert count_roots_open(p, F(3), F(4)) == 0

    def test_endpoint_roots_excluded(self):
        p = from_roots(1, 2)
        assert count_roots_open(p, F(1), F(2)) == 0
        assert count_roots_open(p, F(1), F(3)) == 1

    def test_multiple_roots_counted_once(self):
        p = poly_mul(from_roots(2), from_roots(2))
        assert count_roots_open(p, F(0), F(3)) == 1

    def test_sturm_sequence_ends_constant(self):
        seq = sturm_sequence(from_roots(0, 1, 2))
        assert len(seq[-1]) == 1

    def test_div_linear(self):
        p = from_roots(3, 4)
        assert poly_div_linear(p, F(3)) == from_roots(4)
        with pytest.raises(ValueError):
            poly_div_linear(p, F(5))


class TestNonnegativity:
    def test_positive_everywhere(self):
        ok, w = nonneg_on_interval(poly([1, 0, 1]), F(-5), F(5))
        assert ok and w is None

    def test_dip_found(self):
        p = from_roots(1, 2)  # negative on (1, 2)
        ok, w = nonneg_on_interval(p, F(0), F(3))
        assert not ok and 1 < w < 2 and poly_eval(p, w) < 0

    def test_touch_is_nonnegative(self):
        p = poly_mul(from_roots(1), from_roots(1))
        ok, _ = nonneg_on_interval(p, F(0), F(2))
        assert ok

    def test_negative_between_endpoint_roots(self):
        # -(x)(2-x) vanishes at both endpoints and dips inside
        p = poly([0, -2, 1])
        ok, w = nonneg_on_interval(p, F(0), F(2))
        assert not ok and 0 < w < 2

    def test_negative_just_inside_endpoint(self):
        p = poly_mul(from_roots(0), from_roots(3))  # x(x-3): negative on (0,3)
        ok, w = nonneg_on_interval(p, F(0), F(3))
        assert not ok

    def test_quartic_double_dip(self):
        p = poly_mul(from_roots(1, 2), from_roots(3, 4))
        ok, w = nonneg_on_interval(p, F(0), F(5))
        assert not ok and poly_eval(p, w) < 0

    def test_ray(self):
        ok, _ = nonneg_on_ray(poly([1, 1]), F(0))
        assert ok
        ok, w = nonneg_on_ray(poly([1, -1]), F(0))  # 1 - x
        assert not ok and poly_eval(poly([1, -1]), w) < 0
        ok, _ = nonneg_on_ray(from_roots(-1, -2), F(0))
        assert ok

    def test_zero_polynomial(self):
        assert min_witness(poly([]), F(0), F(1)) is None

    def test_cauchy_bound(self):
        p = from_roots(7, -9)
        bound = cauchy_root_bound(p)
        assert bound >= 9
