"""
Tests for monic orthogonal polynomials and Verblunsky coefficients from
moments.
"""
import numpy as np

from django.test import SimpleTestCase

from core.closedforms import Example1Family, Example2Family
from core.exceptions import SingularMomentSection
from core.opuc import MOMENTS, monic_opuc, verblunsky_from_moments
from core.series import LaurentSeries


def random_weight(rng, band=4, scale=0.1):
    """Real symmetric weight with c_0 = 1 and |c_k| <= scale."""
    c = scale * rng.uniform(-1, 1, band)
    return LaurentSeries(np.concatenate((c[::-1], [1.0], c)))


class MonicPolynomialTests(SimpleTestCase):
    """Test Phi_n from its orthogonality conditions."""

    def test_identity_weight(self):
        phi = monic_opuc(LaurentSeries.constant(), 4)

        np.testing.assert_allclose(phi.coeffs, [0, 0, 0, 0, 1])
        self.assertEqual(phi.degree, 4)
        self.assertEqual(phi.at_zero, 0)

    def test_degree_zero(self):
        self.assertEqual(monic_opuc(LaurentSeries.constant(3), 0).degree, 0)

    def test_orthogonal_to_lower_powers(self):
        w = random_weight(np.random.default_rng(2))
        z = np.exp(2j * np.pi * np.arange(256) / 256)

        phi = monic_opuc(w, 5)

        values = phi(z) * w.evaluate(z).real
        for j in range(5):
            with self.subTest(j=j):
                self.assertAlmostEqual(
                    abs(np.mean(values * z ** -j)), 0, places=12)

    def test_example1_first_polynomial(self):
        """Phi_1(z) = z - w_{-1} / w_0."""
        phi = monic_opuc(Example1Family(0.8).weight(), 1)

        np.testing.assert_allclose(phi.coeffs, [0.4, 1])
        self.assertAlmostEqual(phi(2), 2.4)

    def test_singular_moments(self):
        with self.assertRaises(SingularMomentSection):
            monic_opuc(LaurentSeries.from_dict({-1: 1, 1: 1}), 1)


class VerblunskyFromMomentsTests(SimpleTestCase):
    """Test alpha_n from moment solves against closed forms."""

    def test_identity_weight(self):
        report = verblunsky_from_moments(LaurentSeries.constant(), 6)

        self.assertEqual(report.method, MOMENTS)
        self.assertEqual(len(report.rows), 6)
        self.assertEqual(report.alphas(), [0] * 6)

    def test_example1(self):
        family = Example1Family(0.8)

        report = verblunsky_from_moments(family.weight(), 20)

        for n in range(20):
            with self.subTest(n=n):
                self.assertAlmostEqual(
                    report.alpha(n), family.alpha(n), places=12)

    def test_example2(self):
        family = Example2Family(0.25)

        report = verblunsky_from_moments(family.weight(), 15)

        for n in range(15):
            with self.subTest(n=n):
                self.assertAlmostEqual(
                    report.alpha(n), family.alpha(n), places=11)

    def test_scale_invariance(self):
        w = random_weight(np.random.default_rng(4))

        plain = verblunsky_from_moments(w, 8).alphas()
        scaled = verblunsky_from_moments(w * 7.5, 8).alphas()

        np.testing.assert_allclose(plain, scaled, atol=1e-13)

    def test_random_weights_stay_in_disc(self):
        rng = np.random.default_rng(9)

        for _ in range(5):
            report = verblunsky_from_moments(random_weight(rng), 10)
            self.assertTrue(all(abs(alpha) < 1 for alpha in report.alphas()))
            self.assertEqual(report.failed, [])

    def test_singular_rows_recorded(self):
        report = verblunsky_from_moments(
            LaurentSeries.from_dict({-1: 1, 1: 1}), 3)

        self.assertIsNone(report.rows[0].alpha)
        self.assertEqual(report.rows[0].error, 'SingularMomentSection')
        self.assertIsNotNone(report.rows[1].alpha)
        self.assertEqual([row.n for row in report.failed], [1, 3])

    def test_missing_index(self):
        report = verblunsky_from_moments(LaurentSeries.constant(), 2)

        with self.assertRaises(KeyError):
            report.alpha(5)
