import app_config
import types

import numpy as np

from django.test import SimpleTestCase

from busbar.closedform import stencil_geometry_factor
from busbar.exceptions import ArgumentError, DomainError
from busbar.filament_oracle import FilamentGrid, filament_force, filament_geometry_factor, filament_pairs_force
from busbar.kernels import X, Y
from busbar.model import FORCE_CONSTANT, CrossSection, CurrentPair, make_layout

EXAMPLE_D = np.linspace(0.011, 0.2, 15)
EXAMPLE_H = np.linspace(0.11, 0.2, 8)
RESOLUTIONS = (32, 64, 128, 256)


class FilamentGridTestCase(SimpleTestCase):
    def test_cell_centres(self):
        grid = FilamentGrid(CrossSection(0.005, 0.05), 4, 5)

        np.testing.assert_allclose(grid.x, [0.00125, 0.00375, 0.00625, 0.00875])
        self.assertAlmostEqual(np.sum(grid.y), 0.0, places=15)
        self.assertAlmostEqual(grid.dy, 0.02)

    def test_currents_sum_to_the_total(self):
        grid = FilamentGrid(CrossSection(0.005, 0.05), 3, 7)

        self.assertAlmostEqual(np.sum(grid.currents(2.0)), 2.0, places=14)

    def test_rejects_empty_grid(self):
        with self.assertRaises(ArgumentError):
            FilamentGrid(CrossSection(0.005, 0.05), 0, 4)


class FilamentSumTestCase(SimpleTestCase):
    def test_single_filament_is_the_thin_wire(self):
        layout = make_layout(0.005, 0.05, 0.02, 0.15)

        self.assertAlmostEqual(filament_geometry_factor(layout, X, 1, 1).value, 0.02 / (0.02 ** 2 + 0.15 ** 2), places=12)
        self.assertAlmostEqual(filament_geometry_factor(layout, Y, 1, 1).value, 0.15 / (0.02 ** 2 + 0.15 ** 2), places=12)

    def test_grouping_matches_the_pair_sum(self):
        layout = make_layout(0.005, 0.05, 0.02, 0.13)
        currents = CurrentPair(3.0, -2.0)

        for nx, ny in ((1, 1), (3, 5), (6, 4)):
            grouped = filament_force(layout, currents, nx, ny)
            pairs = filament_pairs_force(layout, currents, nx, ny)

            np.testing.assert_allclose([grouped.fx, grouped.fy], [pairs.fx, pairs.fy], rtol=1e-12)

    def test_adjacent_y_component_cancels(self):
        layout = make_layout(0.005, 0.05, 0.02)

        self.assertEqual(filament_geometry_factor(layout, Y, 16, 16).value, 0.0)

    def test_reaction_is_opposite(self):
        layout = make_layout(0.005, 0.05, 0.02, 0.12)
        currents = CurrentPair(1.0, 2.0)

        self.assertEqual(filament_force(layout, currents, 32, reaction=True), -filament_force(layout, currents, 32))

    def test_coinciding_filaments(self):
        overlapping = types.SimpleNamespace(section=CrossSection(0.005, 0.05), d=0.0, h=0.0)

        with self.assertRaises(DomainError):
            filament_geometry_factor(overlapping, X, 4, 4)

    def test_force_scaling(self):
        layout = make_layout(0.005, 0.05, 0.05)
        force = filament_force(layout, CurrentPair(2.0, 5.0), 8)

        self.assertAlmostEqual(force.fx / (FORCE_CONSTANT * 10.0 * filament_geometry_factor(layout, X, 8, 8).value), 1.0, places=14)

    def test_default_resolution_follows_the_profile(self):
        layout = make_layout(0.005, 0.05, 0.05)
        currents = CurrentPair(1.0, 1.0)

        self.assertEqual(filament_force(layout, currents), filament_force(layout, currents, app_config.FILAMENT_N))


class FilamentConvergenceTestCase(SimpleTestCase):
    def assertConverges(self, layout, component):
        exact = stencil_geometry_factor(layout, component).value
        errors = [abs(filament_geometry_factor(layout, component, n, n).value - exact) / abs(exact) for n in RESOLUTIONS]

        for coarse, fine in zip(errors, errors[1:]):
            self.assertLess(fine, coarse)

        self.assertLessEqual(errors[-1], 1e-3)

    def test_adjacent_example(self):
        for d in EXAMPLE_D[EXAMPLE_D >= 0.02]:
            self.assertConverges(make_layout(0.005, 0.05, d), X)

    def test_non_adjacent_example_corners(self):
        for d in (EXAMPLE_D[0], EXAMPLE_D[-1]):
            for h in (EXAMPLE_H[0], EXAMPLE_H[-1]):
                layout = make_layout(0.005, 0.05, d, h)

                self.assertConverges(layout, X)
                self.assertConverges(layout, Y)

    def test_non_adjacent_example_grid(self):
        for h in EXAMPLE_H:
            for d in EXAMPLE_D:
                layout = make_layout(0.005, 0.05, d, h)

                for component in (X, Y):
                    np.testing.assert_allclose(
                        filament_geometry_factor(layout, component, 256, 256).value,
                        stencil_geometry_factor(layout, component).value,
                        rtol=1e-3,
                    )
