import cmath
import math
import unittest

import heckekit as hk


class Cusps(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(len(hk.enumerate_cusps(6)), 4)
        self.assertEqual(hk.cusp_count(36), 12)
        self.assertEqual(hk.Cusp(6, 2).v, 3)

    def test_width(self):
        self.assertEqual(hk.cusp_width(hk.Cusp(12, 2), "plain"), 3)


class Kloosterman(unittest.TestCase):
    def test_ordinary(self):
        s = hk.ordinary_kloosterman(1, 1, 5)
        self.assertAlmostEqual(s.real, (3 - math.sqrt(5)) / 2, 9)
        self.assertAlmostEqual(s.imag, 0.0, 12)

    def test_closed_matches_bruteforce(self):
        a, b = hk.Cusp(6, 2), hk.Cusp(6, 3)
        for r in (1, 5, 7):
            brute = hk.kloosterman_bruteforce(6, a, b, 2, -1, r, "shifted")
            closed = hk.kloosterman_squarefree(6, 2, 3, 2, -1, r)
            self.assertLess(abs(brute - closed), 1e-9)

    def test_factorized_matches_bruteforce(self):
        a, b = hk.Cusp(12, 4), hk.Cusp(12, 1)
        for c in (1, 2, 5, 6, 7):
            brute = hk.kloosterman_bruteforce(12, a, b, 1, 2, c, "plain")
            self.assertLess(abs(brute - hk.kloosterman_factorized(12, a, b, 1, 2, c)), 1e-9)

    def test_shifted_unavailable(self):
        with self.assertRaises(hk.Error):
            hk.kloosterman_bruteforce(4, hk.Cusp(4, 2), hk.Cusp(4, 2), 1, 1, 1, "shifted")


class Eisenstein(unittest.TestCase):
    def test_level_one_phi(self):
        s = complex(1.6, 0.7)
        want = math.sqrt(math.pi) * hk.gamma(s - 0.5) * hk.zeta(2 * s - 1) / (hk.gamma(s) * hk.zeta(2 * s))
        self.assertLess(abs(hk.eisen_phi(s, 1, 1, 1) - want), 1e-10)

    def test_scattering_unitary(self):
        order, entries = hk.scattering_matrix(complex(0.5, 3.0), 6)
        self.assertEqual(order, [1, 2, 3, 6])
        self.assertEqual(len(entries), 4)
        self.assertLess(hk.unitarity_residual(complex(0.3, 1.0), 6), 1e-9)

    def test_coefficient(self):
        bracket, assembled = hk.eisen_coeff(6, complex(1.6, 0.7), 6, 1, 6)
        self.assertTrue(cmath.isfinite(bracket) and cmath.isfinite(assembled))


class Identities(unittest.TestCase):
    def test_listing(self):
        ids = [i["id"] for i in hk.list_identities()]
        self.assertIn("HURWITZ_SUM", ids)
        self.assertEqual(len(ids), len(set(ids)))

    def test_verify(self):
        r = hk.verify("HURWITZ_SUM", {"q": 12, "m": 5, "s": complex(2.5, 1.0)})
        self.assertTrue(r["pass"])
        self.assertLessEqual(r["max_abs_error"], r["tol"])

    def test_reproducible(self):
        a = hk.verify("RAMANUJAN_CONV", {"N": 256}, 5)
        b = hk.verify("RAMANUJAN_CONV", {"N": 256}, 5)
        self.assertEqual(a["max_abs_error"], b["max_abs_error"])

    def test_errors(self):
        with self.assertRaises(hk.Error):
            hk.verify("NO_SUCH_ID")
        with self.assertRaises(hk.Error):
            hk.verify("HURWITZ_SUM", {"bogus": 1})

    def test_verify_all_filter(self):
        reports = hk.verify_all(pattern="KLOOSTERMAN")
        self.assertEqual(len(reports), 3)
        self.assertTrue(all(r["pass"] for r in reports))


class Moment(unittest.TestCase):
    def test_paths_agree(self):
        r = hk.moment(3.0, [1, 1])
        self.assertLess(abs(r["difference"]), 1e-6 * max(1.0, abs(r["direct"])))


if __name__ == "__main__":
    unittest.main()
