import math

import numpy as np

from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from busbar.exceptions import DomainError
from busbar.kernels import (X, Y, DiffCoords, diff_coords, get_kernel, kernel_array, kernel_density,
                            kernel_x, kernel_y)
from busbar.model import FORCE_CONSTANT, CrossSection, CurrentPair, make_layout

coordinates = st.floats(min_value=-10, max_value=10, allow_nan=False).filter(lambda x: abs(x) > 1e-6)


class KernelTestCase(SimpleTestCase):
    def test_values(self):
        self.assertEqual(kernel_x(3.0, 4.0), 3.0 / 25.0)
        self.assertEqual(kernel_y(3.0, 4.0), 4.0 / 25.0)

    def test_origin_is_rejected(self):
        for kernel in (kernel_x, kernel_y):
            with self.assertRaises(DomainError):
                kernel(0.0, 0.0)

    def test_axes(self):
        self.assertEqual(kernel_x(0.0, 2.0), 0.0)
        self.assertEqual(kernel_y(2.0, 0.0), 0.0)

    @given(coordinates, coordinates)
    def test_odd_symmetry(self, l, m):
        self.assertEqual(kernel_x(-l, -m), -kernel_x(l, m))
        self.assertEqual(kernel_y(-l, -m), -kernel_y(l, m))

    @given(coordinates, coordinates)
    def test_parity_in_each_argument(self, l, m):
        self.assertEqual(kernel_x(-l, m), -kernel_x(l, m))
        self.assertEqual(kernel_x(l, -m), kernel_x(l, m))
        self.assertEqual(kernel_y(-l, m), kernel_y(l, m))
        self.assertEqual(kernel_y(l, -m), -kernel_y(l, m))

    @given(coordinates, coordinates)
    def test_projection_identity(self, l, m):
        self.assertAlmostEqual(kernel_x(l, m) * l + kernel_y(l, m) * m, 1.0, places=14)

    @given(coordinates, coordinates)
    def test_swap(self, l, m):
        self.assertEqual(kernel_y(l, m), kernel_x(m, l))

    def test_array_matches_scalar(self):
        l = np.array([0.5, -1.0, 2.0])
        m = np.array([1.0, 0.25, -3.0])

        np.testing.assert_allclose(kernel_array(X, l, m), [kernel_x(*p) for p in zip(l, m)], rtol=1e-15)
        np.testing.assert_allclose(kernel_array(Y, l, m), [kernel_y(*p) for p in zip(l, m)], rtol=1e-15)

    def test_get_kernel(self):
        self.assertIs(get_kernel(X), kernel_x)
        self.assertIs(get_kernel(Y), kernel_y)

        with self.assertRaises(DomainError):
            get_kernel('z')


class DensityTestCase(SimpleTestCase):
    def test_density(self):
        section = CrossSection(0.005, 0.05)
        currents = CurrentPair(2.0, 3.0)
        expected = FORCE_CONSTANT * (2.0 / 0.001) * (3.0 / 0.001) / 5.0

        self.assertAlmostEqual(kernel_density(3.0, 4.0, currents, section) / expected, 1.0, places=14)

    def test_density_projects_onto_kernels(self):
        section = CrossSection(0.005, 0.05)
        currents = CurrentPair(1.0, 1.0)
        l, m = 0.02, 0.01
        f = kernel_density(l, m, currents, section)
        r = math.hypot(l, m)
        scale = FORCE_CONSTANT / section.area ** 2

        self.assertAlmostEqual(f * l / r / (scale * kernel_x(l, m)), 1.0, places=14)
        self.assertAlmostEqual(f * m / r / (scale * kernel_y(l, m)), 1.0, places=14)

    def test_diff_coords(self):
        layout = make_layout(0.005, 0.05, 0.02, 0.2)

        self.assertEqual(diff_coords(0.001, 0.003, -0.01, 0.02, layout), DiffCoords(0.02 + 0.003 - 0.001, 0.2 + 0.02 + 0.01))

    def test_closest_approach(self):
        a, b = 0.005, 0.05
        x = np.linspace(0.0, 2 * a, 9)
        y = np.linspace(-b, b, 9)
        x1, x2, y1, y2 = np.meshgrid(x, x, y, y, indexing='ij')

        for d, h in ((0.011, None), (0.02, None), (0.02, 0.15)):
            layout = make_layout(a, b, d, h)
            coords = diff_coords(x1, x2, y1, y2, layout)
            expected = (d - 2 * a) ** 2 + (0.0 if h is None else (h - 2 * b) ** 2)

            np.testing.assert_allclose(np.min(coords.l ** 2 + coords.m ** 2), expected, rtol=1e-12)
