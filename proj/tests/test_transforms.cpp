#include "heckekit/error.hpp"
#include "heckekit/specfun.hpp"
#include "heckekit/transforms.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace heckekit;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

cplx pow2pi(cplx e) { return std::exp(e * std::log(2.0 * kPi)); }

const FourTuple kGeneric{cplx(0.6, 0.1), cplx(0.55, -0.05), cplx(0.5, 0.07), cplx(0.45, 0.02)};

} // namespace

TEST(Transforms, GhatClosedFormAndQuadrature) {
    const auto g = WeightSpec::gaussian_t(1.0);
    EXPECT_NEAR(ghat(g, 0.0).real(), std::sqrt(kPi), 1e-15);
    EXPECT_LT(std::abs(ghat(g, 1.0) - ghat_quadrature(g, 1.0)), 1e-10);
    EXPECT_EQ(ghat(g, 0.7), ghat(g, -0.7));
    const auto g3 = WeightSpec::gaussian_t(3.0);
    EXPECT_LT(std::abs(ghat(g3, 0.4) - ghat_quadrature(g3, 0.4)), 1e-10);
    EXPECT_THROW(ghat(WeightSpec::gaussian_kg(1, 1), 1.0), FamilyError);
}

TEST(Transforms, GstarRepresentationsAgree) {
    const auto g = WeightSpec::gaussian_t(1.0);
    const cplx a = gstar(cplx(1.0, 0.3), 2.0, g, GStarRep::X_INTEGRAL);
    const cplx b = gstar(cplx(1.0, 0.3), 2.0, g, GStarRep::T_INTEGRAL);
    EXPECT_LT(std::abs(a - b), 1e-8);
    const auto g2 = WeightSpec::gaussian_t(2.0);
    for (cplx s : {cplx(0.3, -1.0), cplx(0.5, 0.0), cplx(1.4, 2.0)}) {
        const cplx w(1.7, 0.4);
        EXPECT_LT(std::abs(gstar(s, w, g2, GStarRep::X_INTEGRAL) - gstar(s, w, g2)), 1e-8) << s;
    }
    EXPECT_THROW(gstar(cplx(2.0, 0.0), 2.0, g, GStarRep::X_INTEGRAL), DomainError);
    EXPECT_THROW(gstar(cplx(-0.5, 0.0), 2.0, g, GStarRep::X_INTEGRAL), DomainError);
}

TEST(Transforms, GstarDecaysAlongVerticalLines) {
    const auto g = WeightSpec::gaussian_t(1.0);
    double prev = std::abs(gstar(cplx(0.5, 2.0), 0.5, g));
    for (double t = 4.0; t <= 16.0; t += 2.0) {
        const double cur = std::abs(gstar(cplx(0.5, t), 0.5, g));
        EXPECT_LT(cur, prev) << t;
        prev = cur;
    }
}

TEST(Transforms, GstarOverGammaRegularAtZero) {
    // at s = 0 the Gamma ratio is 1, leaving int g = ghat(0)
    const auto g = WeightSpec::gaussian_t(1.5);
    for (double eps : {1e-4, 1e-6}) {
        const cplx q = gstar(cplx(eps, 0.0), 0.5, g) / cgamma(cplx(eps, 0.0));
        EXPECT_LT(std::abs(q - ghat(g, 0.0)), 10.0 * eps);
    }
}

TEST(Transforms, XiConjugationSymmetryAtHalf) {
    const auto g = WeightSpec::gaussian_t(1.0);
    const auto p = FourTuple::half();
    for (double r : {1.0, 2.3}) {
        const cplx a = xi_transform(cplx(0.0, r), p, g);
        const cplx b = xi_transform(cplx(0.0, -r), p, g);
        EXPECT_LT(std::abs(std::conj(a) - b), 1e-8) << r;
    }
    EXPECT_LT(std::abs(xi_transform(0.0, p, g).imag()), 1e-9);
}

TEST(Transforms, XiPathInvariance) {
    const auto g = WeightSpec::gaussian_t(1.0);
    const auto p = FourTuple::half();
    const double sigma = xi_path(0.4, p);
    EXPECT_NEAR(sigma, 0.45, 1e-15);
    const cplx a = xi_transform(0.4, p, g);
    const cplx b = xi_transform(0.4, p, g, sigma + 0.3);
    EXPECT_LT(std::abs(a - b), 1e-9);
    EXPECT_NEAR(xi_path(cplx(0.0, 1.0), p), 0.25, 1e-15);
    EXPECT_THROW(xi_path(-2.0, p), PathError);
    EXPECT_THROW(phi_path(1.5, p), PathError);
}

TEST(Transforms, PhiDirectMatchesViaXi) {
    const auto g = WeightSpec::gaussian_t(1.0);
    for (const FourTuple& p : {FourTuple::half(), kGeneric}) {
        for (Sign sg : {Sign::PLUS, Sign::MINUS}) {
            const cplx d = phi_pm(sg, cplx(0.0, 0.4), p, g, PhiMethod::DIRECT);
            const cplx x = phi_pm(sg, cplx(0.0, 0.4), p, g, PhiMethod::VIA_XI);
            EXPECT_LT(std::abs(d - x), 1e-7);
        }
    }
    EXPECT_THROW(phi_pm(Sign::PLUS, 0.0, FourTuple::half(), g, PhiMethod::VIA_XI), SingularParameter);
}

TEST(Transforms, BracketMatchesPhiAtGenericTuple) {
    const auto g = WeightSpec::gaussian_t(1.0);
    const cplx pre = 0.5 * pow2pi(1.0 + kGeneric.u - kGeneric.w);
    for (Sign sg : {Sign::PLUS, Sign::MINUS}) {
        const cplx lhs = g_bracket(sg, 1.0, kGeneric, g);
        const cplx rhs = pre * phi_pm(sg, cplx(0.0, 1.0), kGeneric, g, PhiMethod::DIRECT);
        EXPECT_LT(std::abs(lhs - rhs), 1e-8);
    }
}

TEST(Transforms, BracketAtHalfFromXi) {
    const auto g = WeightSpec::gaussian_t(1.0);
    const auto p = FourTuple::half();
    const double r = 1.0;
    const cplx plus = g_bracket_at_half(Sign::PLUS, r, g);
    const cplx minus = g_bracket_at_half(Sign::MINUS, r, g);
    EXPECT_LT(std::abs(plus - g_bracket(Sign::PLUS, r, p, g)), 1e-8);
    EXPECT_LT(std::abs(minus - g_bracket(Sign::MINUS, r, p, g)), 1e-8);
    EXPECT_LT(std::abs(minus.imag()), 1e-9);
    EXPECT_LT(std::abs(plus.imag()), 1e-9);
    EXPECT_NEAR(g_bracket_combined(1, r, g), (plus + minus).real(), 1e-8);
    EXPECT_NEAR(g_bracket_combined(-1, r, g), (plus - minus).real(), 1e-8);
    EXPECT_LT(std::abs(g_bracket_at_half(Sign::PLUS, -r, g) - plus), 1e-9);
    EXPECT_LT(std::abs(g_bracket_at_half(Sign::MINUS, -r, g) - minus), 1e-9);
    EXPECT_THROW(g_bracket_at_half(Sign::PLUS, 0.0, g), SingularParameter);
    EXPECT_THROW(g_bracket_combined(1, 0.0, g), SingularParameter);
}

TEST(Transforms, BesselKernelMatchesMellinBarnes) {
    const auto h = WeightSpec::gaussian_kg(1.0, 1.0);
    for (double x : {0.5, 2.0, 10.0}) {
        const cplx k = bessel_kernel(Sign::MINUS, x, h);
        EXPECT_EQ(k.imag(), 0.0);
        EXPECT_LT(std::abs(k - psi_mellin_barnes(x, h)), 1e-7) << x;
    }
    EXPECT_LT(std::abs(psi_mellin_barnes(2.0, h, 0.25) - psi_mellin_barnes(2.0, h, -0.75)), 1e-9);
    EXPECT_LT(std::abs(bessel_kernel(Sign::PLUS, 2.0, h).imag()), 1e-12);
}

TEST(Transforms, HatPhiOfXExpMinusX) {
    auto phi = [](double x) { return x * std::exp(-x); };
    for (double r : {0.3, 0.7, 1.6}) {
        const double minus = 2.0 * kPi * r / std::sinh(kPi * r);
        const double plus =
            -kPi * std::sin(2.0 * r * std::log(std::sqrt(2.0) - 1.0)) / (std::sqrt(2.0) * std::sinh(kPi * r));
        EXPECT_LT(std::abs(hat_phi(Sign::MINUS, r, phi) - minus), 1e-9) << r;
        EXPECT_LT(std::abs(hat_phi(Sign::PLUS, r, phi) - plus), 1e-9) << r;
        EXPECT_LT(std::abs(hat_phi(Sign::MINUS, -r, phi) - hat_phi(Sign::MINUS, r, phi)), 1e-12);
    }
    EXPECT_THROW(hat_phi(Sign::PLUS, 0.0, phi), SingularParameter);
}

TEST(Transforms, HhatVanishesAtHalfAndMinusHalf) {
    const auto h = WeightSpec::gaussian_kg(30.0, 5.0);
    EXPECT_LT(std::abs(hhat(0.5, h)), 1e-9);
    // relative to the size of hhat nearby
    EXPECT_LT(std::abs(hhat(-0.5, h)), 1e-9 * std::abs(hhat(cplx(-0.5, 1.0), h)));
}

TEST(Transforms, HhatConjugationSymmetry) {
    const auto h = WeightSpec::gaussian_kg(3.0, 1.0);
    for (cplx s : {cplx(0.2, 0.7), cplx(-0.8, -1.5), cplx(1.1, 0.3)}) {
        const cplx a = hhat(std::conj(s), h), b = -std::conj(hhat(s, h));
        EXPECT_LT(std::abs(a - b), 1e-9 * std::max(1.0, std::abs(a))) << s;
    }
}

TEST(Transforms, HhatDerivativesMatchFiniteDifferences) {
    const auto h = WeightSpec::gaussian_kg(30.0, 5.0);
    const auto d = hhat_derivatives_at_half(h);
    const double e = 1e-3;
    const cplx fp = hhat(0.5 + e, h), fm = hhat(0.5 - e, h), f0 = hhat(0.5, h);
    // five-point stencil for the first derivative
    const cplx fp2 = hhat(0.5 + 2 * e, h), fm2 = hhat(0.5 - 2 * e, h);
    const cplx d1 = (fm2 - 8.0 * fm + 8.0 * fp - fp2) / (12.0 * e);
    const cplx d2 = (fp - 2.0 * f0 + fm) / (e * e);
    EXPECT_LT(std::abs(d.d1 - d1), 1e-7 * std::abs(d.d1));
    EXPECT_LT(std::abs(d.d2 - d2), 1e-4 * std::abs(d.d2));
}

TEST(Transforms, HhatDerivativeLeadingAsymptotic) {
    const double K = 200.0, G = std::pow(K, 0.7);
    const auto d = hhat_derivatives_at_half(WeightSpec::gaussian_kg(K, G));
    const cplx ratio = d.d1 / (2.0 * I * std::pow(kPi, 1.5) * K * K * K * G);
    EXPECT_LT(std::abs(ratio - 1.0), 0.1);
}

TEST(Transforms, PsiPlusContourMatchesDoubleIntegral) {
    const auto h = WeightSpec::gaussian_kg(1.0, 1.0);
    for (double x : {0.3, 1.0, 2.5}) {
        const cplx c = psi_kernel(Sign::PLUS, x, h);
        EXPECT_LT(std::abs(c.imag()), 1e-9);
        EXPECT_LT(std::abs(c - psi_plus_double_integral(x, h)), 1e-6) << x;
    }
    EXPECT_LT(std::abs(psi_kernel(Sign::PLUS, 0.7, h, -1.0) - psi_kernel(Sign::PLUS, 0.7, h, -0.8)), 1e-9);
}

TEST(Transforms, PsiMinusContourMatchesRegimes) {
    const auto h = WeightSpec::gaussian_kg(1.0, 1.0);
    EXPECT_EQ(psi_minus_regime_of(0.5), PsiRegime::BELOW_ONE);
    EXPECT_EQ(psi_minus_regime_of(1.0 + 1e-13), PsiRegime::AT_ONE);
    EXPECT_EQ(psi_minus_regime_of(3.0), PsiRegime::ABOVE_ONE);
    for (double x : {0.3, 0.8, 1.0, 2.5}) {
        EXPECT_LT(std::abs(psi_kernel(Sign::MINUS, x, h) - psi_minus_regime(x, h)), 1e-6) << x;
    }
}

TEST(Transforms, PsiMinusAtOneIsLimitFromAbove) {
    const auto h = WeightSpec::gaussian_kg(1.0, 1.0);
    const cplx at = psi_minus_regime(1.0, h);
    EXPECT_LT(std::abs(at - psi_minus_above_one(1.0, h)), 1e-5);
    EXPECT_LT(std::abs(at - psi_minus_above_one(1.0 + 1e-10, h)), 1e-5);
    EXPECT_THROW(psi_minus_above_one(0.9, h), DomainError);
}

TEST(Transforms, MomentRearrangementMatchesDirect) {
    const auto g = WeightSpec::gaussian_t(3.0);
    const auto m = moment_quadrature(g, {1.0, 1.0}, 400.0);
    EXPECT_LT(std::abs(m.difference()), 1e-6);
    EXPECT_LE(m.cutoff, 400.0);
    EXPECT_LT(m.tail_bound, 1e-8);
    const auto one = moment_quadrature(g, {1.0});
    EXPECT_LT(std::abs(one.difference()), 1e-9 * one.direct);
}

TEST(Transforms, MomentIsLinearInWeight) {
    auto g = WeightSpec::gaussian_t(3.0);
    const auto a = moment_quadrature(g, {1.0, cplx(0.5, -0.25), 0.3});
    g.scale = 2.5;
    const auto b = moment_quadrature(g, {1.0, cplx(0.5, -0.25), 0.3});
    EXPECT_NEAR(b.direct, 2.5 * a.direct, 1e-10 * b.direct);
    EXPECT_NEAR(b.rearranged, 2.5 * a.rearranged, 1e-10 * b.direct);
    EXPECT_LT(std::abs(a.difference()), 1e-6);
}

TEST(Transforms, MomentTailErrorBelowCap) {
    EXPECT_THROW(moment_quadrature(WeightSpec::gaussian_t(3.0), {1.0, 1.0}, 6.0), TailError);
    EXPECT_THROW(moment_quadrature(WeightSpec::gaussian_kg(1, 1), {1.0}), FamilyError);
}
