"""
Test suite for the analytic solver: sequences, regime dispatch,
quasi-regular roots, triangle band, variants and sweeps.
"""

import math
import unittest

from src.angles import AngleConfig, RingParams, area_of, evaluate_J, regular_config
from src.errors import ParameterError, RegimeError
from src.geometry import area, in_ring, perimeter
from src.solver import (
    FAMILY_NOTE,
    NoSolution,
    Regime,
    Solution,
    beta,
    betahat,
    circumscribed_body,
    family_members,
    large_lambda_threshold,
    locate_boundary,
    min_feasible_sides,
    optimal_regular_N,
    p0,
    quasi_regular_root,
    regular_polygon_J,
    regular_switch_lambda,
    sample_circumscribed_family,
    shape_label,
    solve,
    solve_inner_only,
    solve_outer_only,
    sweep,
    triangle_band_solver,
    triangle_candidates,
    unconstrained_regular_N,
    x2y2,
    x_bounds,
    y2_closed_form,
)

BETAHAT_TABLE = {
    3: 0.32862, 4: 0.29260, 5: 0.27706, 6: 0.26881, 7: 0.26388, 8: 0.26068, 9: 0.25848,
    10: 0.25690, 11: 0.25572, 12: 0.25483, 13: 0.25413, 14: 0.25357, 15: 0.25312,
    16: 0.25275, 17: 0.25244, 18: 0.25218, 19: 0.25196, 20: 0.25177, 21: 0.25161,
    22: 0.25147, 23: 0.25135, 24: 0.25124, 25: 0.25114, 26: 0.25106, 27: 0.25098,
    28: 0.25091, 29: 0.25085, 30: 0.25080, 31: 0.25075, 32: 0.25070, 33: 0.25066,
    34: 0.25062, 35: 0.25059, 36: 0.25056, 37: 0.25053, 38: 0.25050, 39: 0.25048,
    40: 0.25045, 41: 0.25043, 42: 0.25041, 43: 0.25039, 44: 0.25037, 45: 0.25036,
    46: 0.25034, 47: 0.25033, 48: 0.25032, 49: 0.25030, 50: 0.25029, 51: 0.25028,
    52: 0.25027,
}

# lambda at which the regular N-gon hands over to the (N+1)-gon for b = 3
SWITCH_TABLE = {3: 0.2191, 4: 0.1951, 5: 0.1847, 6: 0.1792, 7: 0.1759, 8: 0.1738, 9: 0.1723, 10: 0.1713}


class TestSequences(unittest.TestCase):
    """Test cases for the transition constants and side counts."""

    def setUp(self):
        self.ring = RingParams(1.0, 3.0)

    def test_betahat_table(self):
        """Test betahat_N for N = 3..52 against the five-decimal table."""
        for n, expected in BETAHAT_TABLE.items():
            self.assertAlmostEqual(betahat(n), expected, delta=5.01e-6, msg=f"N={n}")

    def test_betahat_decreases_to_quarter(self):
        """Test that betahat_N decreases towards 1/4."""
        values = [betahat(n) for n in range(3, 200)]
        self.assertTrue(all(u > v for u, v in zip(values, values[1:])))
        self.assertGreater(values[-1], 0.25)

    def test_beta(self):
        """Test the first values of beta_N."""
        self.assertAlmostEqual(beta(3), 0.357958, places=6)
        self.assertAlmostEqual(beta(4), 0.303493, places=6)
        with self.assertRaises(ParameterError):
            beta(2)

    def test_switch_lambdas(self):
        """Test the regular polygon switch points for b = 3."""
        for n, expected in SWITCH_TABLE.items():
            self.assertAlmostEqual(regular_switch_lambda(n, 3.0), expected, delta=5.01e-5, msg=f"N={n}")

    def test_regular_polygon_J(self):
        """Test the closed form against the angle encoding."""
        for n in (3, 4, 7):
            expected = evaluate_J(regular_config(self.ring, n), self.ring, 0.2)
            self.assertAlmostEqual(regular_polygon_J(n, 3.0, 0.2), expected, places=10)

    def test_side_counts(self):
        """Test p0, the feasible side count and the optimal regular N."""
        self.assertEqual(p0(self.ring), 2)
        self.assertEqual(p0(RingParams(1.0, 2.0)), 3)
        self.assertEqual(min_feasible_sides(self.ring), 3)
        self.assertEqual(min_feasible_sides(RingParams(1.0, 1.05)), 11)
        self.assertEqual(unconstrained_regular_N(3.0, 0.2), 4)
        self.assertEqual(optimal_regular_N(self.ring, 0.18), 6)
        with self.assertRaises(RegimeError):
            optimal_regular_N(self.ring, 0.1)

    def test_side_count_grows_near_half_inverse_b(self):
        """Test that N keeps growing and stays bracketed as lambda approaches 1/(2b)."""
        counts = []
        for offset in (1e-6, 1e-8, 1e-10):
            lam = 1.0 / 6.0 + offset
            n = unconstrained_regular_N(3.0, lam)
            target = 1.5 * lam
            self.assertLessEqual(betahat(n), target, msg=f"offset={offset}")
            self.assertGreater(betahat(n - 1), target, msg=f"offset={offset}")
            counts.append(n)
        self.assertEqual(counts[0], 702)
        for smaller, larger in zip(counts, counts[1:]):
            self.assertAlmostEqual(larger / smaller, 10.0, delta=0.05)

    def test_betahat_tail(self):
        """Test monotonicity and the 3 pi^2 / (40 n^2) tail for large n."""
        for n in (10**3, 10**4, 10**5, 10**6):
            with self.subTest(n=n):
                if n <= 10**5:
                    self.assertGreater(betahat(n), betahat(n + 1))
                self.assertGreater(betahat(n + 1), 0.25)
                tail = (betahat(n) - 0.25) * n * n
                self.assertAlmostEqual(tail, 3.0 * math.pi**2 / 40.0, delta=2e-3)

    def test_large_lambda_threshold(self):
        """Test the chord/tangent threshold of the minimum-side polygons."""
        self.assertAlmostEqual(large_lambda_threshold(self.ring), 0.6, places=12)
        with self.assertRaises(RegimeError):
            large_lambda_threshold(RingParams(1.0, 2.0))


class TestSolveRegimes(unittest.TestCase):
    """Test cases for the regime table of the ring a = 1, b = 3."""

    def setUp(self):
        self.ring = RingParams(1.0, 3.0)
        self.x = math.pi - 2.0 * self.ring.xi0

    def assertPolygonInRing(self, solution):
        for body in solution.bodies:
            self.assertTrue(in_ring(body, self.ring.a, self.ring.b))
        self.assertAlmostEqual(solution.J, solution.lam * solution.area - solution.perimeter, places=9)
        self.assertLessEqual(solution.certificate.kkt_residual, 1e-8)

    def test_outer_disk(self):
        """Test that D_b is optimal up to lambda = 1/(2b)."""
        for lam in (0.0, 0.1, 1.0 / 6.0):
            solution = solve(self.ring, lam)
            self.assertEqual(solution.regime, Regime.OUTER_DISK)
            self.assertAlmostEqual(solution.area, 9.0 * math.pi, places=12)

    def test_regular_polygons(self):
        """Test the regular inscribed hexagon, pentagon, square and triangle."""
        cases = ((0.18, 6, 23.3827), (0.19, 5, 21.3988), (0.20, 4, 18.0), (0.24, 3, 11.6913))
        for lam, sides, expected_area in cases:
            solution = solve(self.ring, lam)
            self.assertEqual(solution.regime, Regime.INSCRIBED_REGULAR, msg=f"lambda={lam}")
            self.assertEqual(solution.config.side_count, sides)
            self.assertAlmostEqual(solution.area, expected_area, places=4)
            self.assertPolygonInRing(solution)

    def test_quasi_regular_quadrilateral(self):
        """Test the quasi-regular quadrilateral with three angles x and one y."""
        solution = solve(self.ring, 0.21875)
        self.assertEqual(solution.regime, Regime.INSCRIBED_QUASI_REGULAR)
        chords = solution.config.chord_angles
        self.assertEqual(len(chords), 4)
        self.assertAlmostEqual(chords[0], 1.013461, places=5)
        self.assertAlmostEqual(chords[-1], 0.101211, places=5)
        self.assertAlmostEqual(solution.area, 13.0245, places=4)
        self.assertTrue(solution.certificate.second_order_ok)
        self.assertPolygonInRing(solution)
        self.assertEqual(shape_label(solution), "quasi-regular inscribed quadrilateral")

    def test_quasi_regular_pentagon(self):
        """Test the quasi-regular pentagon on its narrow interval."""
        solution = solve(self.ring, 0.19515)
        self.assertEqual(solution.regime, Regime.INSCRIBED_QUASI_REGULAR)
        self.assertEqual(solution.config.side_count, 5)
        self.assertAlmostEqual(solution.config.chord_angles[0], 0.783987, places=5)
        self.assertLess(solution.J, regular_polygon_J(4, 3.0, 0.19515))

    def test_triangle_band(self):
        """Test the equilateral and the isosceles triangle of the band."""
        equilateral = solve(self.ring, 0.28)
        self.assertEqual(equilateral.regime, Regime.TRIANGLE_BAND)
        self.assertAlmostEqual(equilateral.area, 11.6913, places=4)
        isosceles = solve(self.ring, 0.32)
        self.assertEqual(isosceles.regime, Regime.TRIANGLE_BAND)
        self.assertEqual(isosceles.config.p, 2)
        self.assertAlmostEqual(isosceles.area, 10.0566, places=4)
        self.assertPolygonInRing(isosceles)

    def test_min_side_polygons(self):
        """Test the chord triangle below 0.6, the tangent triangle above and both at 0.6."""
        chord = solve(self.ring, 0.5)
        self.assertEqual(chord.regime, Regime.MIN_SIDE_POLYGON)
        self.assertEqual(chord.config, AngleConfig(2, (), (self.x,)))
        self.assertAlmostEqual(chord.area, 10.0566, places=4)
        tangent = solve(self.ring, 1.0)
        self.assertEqual(tangent.config.tangent_angles, (self.x,))
        self.assertAlmostEqual(tangent.area, 6.4650, places=4)
        self.assertPolygonInRing(tangent)
        tie = solve(self.ring, 0.6)
        self.assertEqual(len(tie.bodies), 2)
        self.assertEqual(len(tie.configs), 2)

    def test_xi0_divides_pi(self):
        """Test the regular triangle circumscribed to D_1 and inscribed in D_2."""
        ring = RingParams(1.0, 2.0)
        solution = solve(ring, 0.8)
        self.assertEqual(solution.regime, Regime.MIN_SIDE_POLYGON)
        self.assertEqual(solution.config, AngleConfig(3))
        self.assertAlmostEqual(solution.area, 3.0 * math.sqrt(3.0), places=9)

    def test_family_and_inner_disk(self):
        """Test lambda = 2/a and lambda > 2/a."""
        family = solve(self.ring, 2.0)
        self.assertEqual(family.regime, Regime.CIRCUMSCRIBED_FAMILY)
        self.assertEqual(family.J, 0.0)
        self.assertEqual(family.family_note, FAMILY_NOTE)
        inner = solve(self.ring, 2.5)
        self.assertEqual(inner.regime, Regime.INNER_DISK)
        self.assertAlmostEqual(inner.area, math.pi, places=12)

    def test_invalid_lambda(self):
        """Test that negative and non-finite lambda are rejected."""
        for lam in (-0.1, math.nan, math.inf):
            with self.assertRaises(ParameterError):
                solve(self.ring, lam)

    def test_value_is_nondecreasing(self):
        """Test that the optimal value never decreases as lambda grows."""
        values = [solve(self.ring, 0.05 + 0.1 * k).J for k in range(30)]
        for u, v in zip(values, values[1:]):
            self.assertLessEqual(u, v + 1e-9)

    def test_value_is_continuous_at_boundaries(self):
        """Test continuity of the optimal value across regime boundaries."""
        for lam in (0.25, 1.0 / 3.0, 0.6, 2.0):
            left = solve(self.ring, lam - 1e-9).J
            right = solve(self.ring, lam + 1e-9).J
            self.assertAlmostEqual(left, right, delta=1e-6, msg=f"lambda={lam}")

    def test_solution_round_trip(self):
        """Test that a solution document restores the same result."""
        solution = solve(self.ring, 0.6)
        restored = Solution.from_dict(solution.to_dict())
        self.assertEqual(restored.regime, solution.regime)
        self.assertEqual(restored.configs, solution.configs)
        self.assertEqual(restored.J, solution.J)


class TestQuasiRegular(unittest.TestCase):
    """Test cases for quasi-regular roots and their bracket."""

    def setUp(self):
        self.ring = RingParams(1.0, 3.0)

    def test_root_equations(self):
        """Test that the root satisfies both defining equations."""
        lam = 0.2205
        config = quasi_regular_root(self.ring, lam, 0, 4)
        self.assertIsNotNone(config)
        x, y = config.chord_angles[0], config.chord_angles[-1]
        self.assertAlmostEqual(x, 1.032481, places=5)
        self.assertAlmostEqual(math.cos(x) + math.cos(y), 1.0 / (lam * 3.0), places=10)
        self.assertAlmostEqual(3.0 * x + y, math.pi, places=12)

    def test_fitted_pentagon_root(self):
        """Test the quasi-regular pentagon root at the lambda fitted to x = 0.7829."""
        x_ref = 0.7829
        lam = 1.0 / (3.0 * (math.cos(x_ref) + math.cos(math.pi - 4.0 * x_ref)))
        config = quasi_regular_root(self.ring, lam, 0, 5)
        self.assertIsNotNone(config)
        x, y = config.chord_angles[0], config.chord_angles[-1]
        self.assertAlmostEqual(x, 0.7829, delta=5e-4)
        self.assertAlmostEqual(y, 0.0098, delta=5e-4)
        self.assertAlmostEqual(math.cos(x) + math.cos(y), 1.0 / (lam * 3.0), places=10)
        self.assertGreaterEqual(math.sin(x), 4.0 * math.sin(y))
        self.assertAlmostEqual(area_of(config, self.ring), 18.0879, delta=5e-2)

    def test_fitted_quadrilateral_root(self):
        """Test the quasi-regular quadrilateral root at the lambda fitted to x = 1.0135."""
        x_ref = 1.0135
        lam = 1.0 / (3.0 * (math.cos(x_ref) + math.cos(math.pi - 3.0 * x_ref)))
        config = quasi_regular_root(self.ring, lam, 0, 4)
        self.assertIsNotNone(config)
        x, y = config.chord_angles[0], config.chord_angles[-1]
        self.assertAlmostEqual(x, 1.0135, delta=5e-4)
        self.assertAlmostEqual(y, 0.1012, delta=5e-4)
        self.assertAlmostEqual(math.cos(x) + math.cos(y), 1.0 / (lam * 3.0), places=10)
        self.assertGreaterEqual(math.sin(x), 3.0 * math.sin(y))
        self.assertAlmostEqual(area_of(config, self.ring), 13.0245, delta=5e-2)

    def test_no_root_outside_interval(self):
        """Test that no quadrilateral root exists at lambda = 0.20."""
        self.assertIsNone(quasi_regular_root(self.ring, 0.20, 0, 4))

    def test_y2_closed_form(self):
        """Test the explicit y2 against the bracketed tangency point."""
        for q in (2, 3, 4, 6):
            _, y2 = x2y2(3.0, 0.22, q)
            self.assertAlmostEqual(y2_closed_form(3.0, 0.22, q), y2, places=8, msg=f"q={q}")

    def test_bracket_below_half_inverse_b(self):
        """Test that the bracket does not exist for lambda < 1/(2b)."""
        with self.assertRaises(RegimeError):
            x_bounds(3.0, 0.1)

    def test_square_to_quasi_boundary(self):
        """Test the structural change from the square to the quasi-regular quadrilateral."""
        last_left, first_right, right = locate_boundary(self.ring, 0.2186, 0.2190)
        self.assertGreater(last_left, 0.21869)
        self.assertLess(first_right, 0.21876)
        self.assertEqual(right.regime, Regime.INSCRIBED_QUASI_REGULAR)


class TestTriangleBand(unittest.TestCase):
    """Test cases for the five candidate triangles."""

    def test_candidates(self):
        """Test the feasible candidates at lambda = 0.3."""
        ring = RingParams(1.0, 3.0)
        candidates = triangle_candidates(ring, 0.3)
        self.assertIn("T", candidates)
        self.assertIn("T''", candidates)
        self.assertIn("T''''", candidates)
        self.assertNotIn("T'", candidates)
        for config in candidates.values():
            self.assertEqual(config.side_count, 3)

    def test_band_requires_wide_ring(self):
        """Test that the band solver needs b > 2a."""
        with self.assertRaises(RegimeError):
            triangle_band_solver(RingParams(1.0, 1.8), 0.4)


class TestVariants(unittest.TestCase):
    """Test cases for the single-constraint problems."""

    def test_inner_only_unbounded(self):
        """Test that J has no minimum for lambda < 2/a."""
        result = solve_inner_only(1.0, 1.0)
        self.assertIsInstance(result, NoSolution)
        values = [j for _, j in result.witness]
        self.assertTrue(all(u > v for u, v in zip(values, values[1:])))
        self.assertEqual(result.to_dict()["regime"], "NoSolution")

    def test_inner_only_attained(self):
        """Test the family at lambda = 2/a and D_a above it."""
        family = solve_inner_only(1.0, 2.0)
        self.assertEqual(family.regime, Regime.CIRCUMSCRIBED_FAMILY)
        self.assertIsNone(family.b)
        self.assertEqual(solve_inner_only(1.0, 3.0).regime, Regime.INNER_DISK)

    def test_outer_only(self):
        """Test D_b, an inscribed polygon and the double diameter."""
        self.assertEqual(solve_outer_only(3.0, 0.1).regime, Regime.OUTER_DISK)
        polygon = solve_outer_only(3.0, 0.2)
        self.assertEqual(polygon.a, 0.0)
        self.assertEqual(polygon.config.side_count, 4)
        diameter = solve_outer_only(3.0, 0.5)
        self.assertEqual(diameter.regime, Regime.DOUBLE_DIAMETER)
        self.assertAlmostEqual(diameter.J, -12.0, places=12)
        with self.assertRaises(ParameterError):
            solve_outer_only(-1.0, 0.5)


class TestCircumscribedFamily(unittest.TestCase):
    """Test cases for bodies circumscribed to D_a."""

    def setUp(self):
        self.ring = RingParams(1.0, 3.0)

    def test_sampled_members_have_zero_J(self):
        """Test that every sampled member has J = 0 at lambda = 2/a and fits the ring."""
        members = sample_circumscribed_family(1.0, 6, seed=3, max_half_angle=self.ring.xi0)
        self.assertEqual(len(members), 6)
        for body in members:
            self.assertAlmostEqual(2.0 * area(body) - perimeter(body), 0.0, places=9)
            self.assertTrue(in_ring(body, 1.0, 3.0))

    def test_deterministic(self):
        """Test that equal seeds give equal members."""
        first = family_members(self.ring, 3, seed=5)
        second = family_members(self.ring, 3, seed=5)
        self.assertEqual([b.to_dict() for b in first], [b.to_dict() for b in second])

    def test_no_corner_is_disk(self):
        """Test the empty corner list."""
        body = circumscribed_body(1.0, [])
        self.assertAlmostEqual(area(body), math.pi, places=12)

    def test_overlapping_corners(self):
        """Test that overlapping corners are rejected."""
        with self.assertRaises(ParameterError):
            circumscribed_body(1.0, [(0.0, 1.0), (0.5, 1.0)])


class TestSweep(unittest.TestCase):
    """Test cases for the lambda sweep."""

    def setUp(self):
        self.ring = RingParams(1.0, 3.0)

    def test_rows(self):
        """Test the rows between lambda = 0.3 and lambda = 3."""
        grid = [0.3 + 0.15 * k for k in range(19)]
        rows = sweep(self.ring, grid, n_jobs=1)
        self.assertEqual(len(rows), 5)
        self.assertEqual(rows[0].label, "regular inscribed triangle")
        self.assertAlmostEqual(rows[1].lambda_lo, 0.308013, delta=1e-4)
        self.assertAlmostEqual(rows[2].lambda_lo, 1.0 / 3.0, delta=1e-5)
        self.assertAlmostEqual(rows[3].lambda_lo, 0.6, delta=1e-5)
        self.assertAlmostEqual(rows[4].lambda_lo, 2.0, delta=1e-5)
        self.assertEqual(rows[1].regime, Regime.TRIANGLE_BAND.value)
        self.assertEqual(rows[2].regime, Regime.MIN_SIDE_POLYGON.value)
        self.assertEqual(rows[4].regime, Regime.INNER_DISK.value)
        self.assertEqual(rows[3].p, 2)
        for left, right in zip(rows, rows[1:]):
            self.assertEqual(left.lambda_hi, right.lambda_lo)

    def test_row_regime_holds_at_both_ends(self):
        """Test that every row's regime is the regime solved just inside both of its ends."""
        grid = [0.3 + 0.15 * k for k in range(19)]
        for row in sweep(self.ring, grid, n_jobs=1):
            with self.subTest(lo=row.lambda_lo, hi=row.lambda_hi):
                self.assertEqual(solve(self.ring, row.lambda_lo + 1e-5).regime.value, row.regime)
                self.assertEqual(solve(self.ring, row.lambda_hi - 1e-5).regime.value, row.regime)

    def test_boundaries_over_full_range(self):
        """Test the located boundaries of the a = 1, b = 3 regime table over (0.01, 3]."""
        grid = [k / 100.0 for k in range(1, 301)]
        rows = sweep(self.ring, grid, n_jobs=1)
        boundaries = [row.lambda_lo for row in rows[1:]]
        expected = (1.0 / 6.0, 0.1792, 0.1847, 0.19506, 0.19525, 0.2187, 0.2222, 0.3080, 0.6, 2.0)
        for value in expected:
            with self.subTest(boundary=value):
                nearest = min(boundaries, key=lambda b: abs(b - value))
                self.assertAlmostEqual(nearest, value, delta=5e-4)
        self.assertEqual(rows[0].regime, Regime.OUTER_DISK.value)
        self.assertEqual(rows[-1].regime, Regime.INNER_DISK.value)
        quasi = [row for row in rows if row.label == "quasi-regular inscribed pentagon"]
        self.assertEqual(len(quasi), 1)
        self.assertAlmostEqual(quasi[0].lambda_lo, 0.19506, delta=5e-5)
        self.assertAlmostEqual(quasi[0].lambda_hi, 0.19525, delta=5e-5)

    def test_invalid_grid(self):
        """Test that descending and empty grids are rejected."""
        with self.assertRaises(ParameterError):
            sweep(self.ring, [0.5, 0.4])
        with self.assertRaises(ParameterError):
            sweep(self.ring, [])


if __name__ == "__main__":
    unittest.main()
