import math

import numpy as np

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from busbar.closedform import STENCIL, Primitive, corner_stencil, primitive_P, stencil_geometry_factor
from busbar.exceptions import DomainError
from busbar.kernels import X, Y, kernel_x
from busbar.model import make_layout
from busbar.quadrature import integrate_reduced


def mixed_fourth_difference(func, u, v, step):
    total = 0.0

    for cu, i in zip(STENCIL.weights, STENCIL.offsets):
        for cv, j in zip(STENCIL.weights, STENCIL.offsets):
            total += cu * cv * func(u + i * step, v + j * step)

    return total / step ** 4


class PrimitiveTestCase(SimpleTestCase):
    def test_on_the_u_axis(self):
        u = 0.03

        self.assertAlmostEqual(primitive_P(u, 0.0), -u ** 3 * math.log(u * u) / 12, places=18)

    def test_on_the_v_axis(self):
        v = 0.05

        # u = 0: only the angle term is left, atan2(v, 0) = pi / 2
        self.assertAlmostEqual(primitive_P(0.0, v), -v ** 3 * (math.pi / 2) / 6, places=18)

    def test_origin_is_rejected(self):
        with self.assertRaises(DomainError):
            primitive_P(0.0, 0.0)

    def test_fixed_point(self):
        u, v = 0.03, 0.05
        value = mixed_fourth_difference(primitive_P, u, v, 1e-3)

        self.assertLess(abs(value - kernel_x(u, v)) / kernel_x(u, v), 1e-4)

    @settings(max_examples=100, deadline=None)
    @given(
        st.floats(min_value=1e-2, max_value=10.0),
        st.floats(min_value=-2.5, max_value=2.5),
    )
    def test_fourth_mixed_derivative_is_the_kernel(self, r, angle):
        u, v = r * math.cos(angle), r * math.sin(angle)
        value = mixed_fourth_difference(primitive_P, u, v, 2e-2 * r)

        # Relative to the kernel scale 1 / r, the kernel itself vanishes on the v axis
        self.assertLess(abs(value - kernel_x(u, v)) * r, 1e-3)

    @given(
        st.floats(min_value=0.01, max_value=1.0),
        st.floats(min_value=-0.5, max_value=0.5),
        st.floats(min_value=0.01, max_value=1.0),
        st.floats(min_value=-0.5, max_value=0.5),
    )
    def test_shift_is_a_polynomial(self, u, v, u0, v0):
        # The shifted primitive differs by terms the stencil annihilates:
        # a cubic times ln(r0^2) and a cubic times theta0
        shifted = Primitive(u0, v0)(u, v)
        expected = (
            primitive_P(u, v)
            + (u ** 3 - 3 * u * v * v) * math.log(u0 * u0 + v0 * v0) / 12
            - (3 * u * u * v - v ** 3) * math.atan2(v0, u0) / 6
        )
        scale = max(1.0, abs(u) + abs(v)) ** 3 * 10

        self.assertLess(abs(shifted - expected), 1e-13 * scale)


class StencilTestCase(SimpleTestCase):
    def test_adjacent_values(self):
        self.assertAlmostEqual(stencil_geometry_factor(make_layout(0.005, 0.05, 0.02)).value / 21.03342654378320, 1.0, places=10)
        self.assertAlmostEqual(stencil_geometry_factor(make_layout(0.005, 0.05, 0.011)).value / 24.51569859480328, 1.0, places=10)

    def test_non_adjacent_values(self):
        layout = make_layout(0.005, 0.05, 0.011, 0.11)

        self.assertAlmostEqual(stencil_geometry_factor(layout, X).value / 1.721371970486631, 1.0, places=10)
        self.assertAlmostEqual(stencil_geometry_factor(layout, Y).value / 10.71459390904238, 1.0, places=10)

    def test_square_layout_is_symmetric(self):
        layout = make_layout(0.01, 0.01, 0.05, 0.05)
        gx = stencil_geometry_factor(layout, X).value
        gy = stencil_geometry_factor(layout, Y).value

        self.assertEqual(gx, gy)
        self.assertAlmostEqual(gx / 10.00214249712983, 1.0, places=10)

    def test_far_field(self):
        layout = make_layout(0.005, 0.005, 1.0)

        self.assertAlmostEqual(stencil_geometry_factor(layout).value, 1.0, places=4)

    def test_far_field_matches_quadrature(self):
        for d in (0.2, 0.5, 1.0):
            layout = make_layout(0.005, 0.05, d)

            np.testing.assert_allclose(
                stencil_geometry_factor(layout, X).value,
                integrate_reduced(layout, X).value,
                rtol=1e-6,
            )

    def test_far_field_non_adjacent(self):
        layout = make_layout(0.005, 0.005, 1.0, 1.0)

        self.assertAlmostEqual(stencil_geometry_factor(layout, X).value, 0.5, places=4)
        self.assertAlmostEqual(stencil_geometry_factor(layout, Y).value, 0.5, places=4)

    def test_shift_does_not_change_the_result(self):
        layout = make_layout(0.005, 0.05, 0.05)

        np.testing.assert_allclose(
            corner_stencil(primitive_P, layout),
            stencil_geometry_factor(layout).value,
            rtol=1e-10,
        )

    def test_just_apart(self):
        layout = make_layout(0.005, 0.05, 0.01 + 1e-9)
        value = stencil_geometry_factor(layout).value

        self.assertTrue(math.isfinite(value))
        self.assertGreater(value, stencil_geometry_factor(make_layout(0.005, 0.05, 0.011)).value)

    @settings(max_examples=50, deadline=None)
    @given(
        st.floats(min_value=0.011, max_value=0.03),
        st.lists(st.floats(min_value=-0.25, max_value=0.25), min_size=4, max_size=4),
    )
    def test_gauge_invariance(self, d, coefficients):
        a, b = 0.005, 0.05
        layout = make_layout(a, b, d)
        c1, c2, c3, c4 = coefficients
        scale = max(abs(primitive_P(u, v)) for u in STENCIL.knots(d, a) for v in STENCIL.knots(0.0, b))

        def perturbed(u, v):
            # Affine in u for fixed v plus affine in v for fixed u
            gauge = c1 * (u / d) * math.cos(v / b) + c2 * math.sin(v / b) + c3 * (v / b) * math.cos(u / a) + c4 * math.exp(-u / d)

            return primitive_P(u, v) + scale * gauge

        np.testing.assert_allclose(corner_stencil(perturbed, layout), corner_stencil(primitive_P, layout), rtol=1e-12)
