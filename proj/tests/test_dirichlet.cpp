#include "heckekit/arith.hpp"
#include "heckekit/dirichlet.hpp"
#include "heckekit/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace heckekit;

namespace {

CoeffSeries ones(std::size_t n) {
    return from_function([](std::uint64_t) { return cplx(1.0); }, n);
}

CoeffSeries mobius_series(std::size_t n) {
    return from_function([](std::uint64_t k) { return cplx(mobius(k)); }, n);
}

CoeffSeries random_series(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    return from_function([&](std::uint64_t) { return cplx(g(rng), g(rng)); }, n);
}

} // namespace

TEST(Dirichlet, FromFunctionExamples) {
    const auto one = ones(4);
    for (std::size_t i = 1; i <= 4; ++i) EXPECT_EQ(one[i], cplx(1.0));
    const auto mu = mobius_series(4);
    EXPECT_EQ(mu[1], cplx(1.0));
    EXPECT_EQ(mu[2], cplx(-1.0));
    EXPECT_EQ(mu[3], cplx(-1.0));
    EXPECT_EQ(mu[4], cplx(0.0));
    const PrincipalCharacter chi{6};
    const auto c6 = from_function([&](std::uint64_t k) { return cplx(chi(k)); }, 6);
    const double want[] = {1, 0, 0, 0, 1, 0};
    for (std::size_t i = 1; i <= 6; ++i) EXPECT_EQ(c6[i].real(), want[i - 1]);
}

TEST(Dirichlet, ConvolveExamples) {
    const std::size_t n = 2048;
    const auto tau = convolve(ones(n), ones(n));
    EXPECT_EQ(tau[4], cplx(3.0));
    const auto eps = convolve(mobius_series(n), ones(n));
    EXPECT_EQ(eps[1], cplx(1.0));
    for (std::size_t i = 2; i <= n; ++i) ASSERT_EQ(eps[i], cplx(0.0)) << i;
    const auto id = from_function([](std::uint64_t k) { return cplx(static_cast<double>(k)); }, n);
    EXPECT_EQ(convolve(ones(n), id)[6], cplx(12.0));
    const auto tau_direct = from_function([](std::uint64_t k) { return cplx(static_cast<double>(num_divisors(k))); }, n);
    EXPECT_EQ(compare(tau, tau_direct, 0.0).max_error, 0.0);
    EXPECT_THROW(convolve(ones(4), ones(5)), LengthMismatch);
}

TEST(Dirichlet, ConvolveAlgebra) {
    std::mt19937_64 rng(21);
    const std::size_t n = 256;
    for (int trial = 0; trial < 3; ++trial) {
        const auto a = random_series(n, rng), b = random_series(n, rng), c = random_series(n, rng);
        EXPECT_LT(compare(convolve(a, b), convolve(b, a), 1e-12).max_error, 1e-12);
        EXPECT_LT(compare(convolve(convolve(a, b), c), convolve(a, convolve(b, c)), 1e-12).max_error, 1e-12);
    }
}

TEST(Dirichlet, EulerProductMatchesConvolution) {
    const std::size_t n = 2048;
    const auto zeta_c = euler_product([](std::uint64_t, int) { return cplx(1.0); }, n);
    EXPECT_TRUE(compare(zeta_c, ones(n), 0.0).pass);
    const auto mu_c = euler_product([](std::uint64_t, int j) { return cplx(j == 0 ? 1.0 : j == 1 ? -1.0 : 0.0); }, n);
    EXPECT_TRUE(compare(mu_c, mobius_series(n), 0.0).pass);
    const auto tau_c = euler_product([](std::uint64_t, int j) { return cplx(j + 1.0); }, n);
    EXPECT_TRUE(compare(tau_c, convolve(ones(n), ones(n)), 0.0).pass);

    const cplx alpha(0.3, -1.7);
    const auto sigma_c = euler_product(
        [&](std::uint64_t p, int j) {
            cplx acc = 0.0;
            for (int i = 0; i <= j; ++i) acc += std::exp(alpha * (i * std::log(static_cast<double>(p))));
            return acc;
        },
        n);
    const auto pow_a = from_function([&](std::uint64_t k) { return std::exp(alpha * std::log(static_cast<double>(k))); }, n);
    const auto sigma_conv = convolve(ones(n), pow_a);
    const auto res = compare(sigma_c, sigma_conv, 1e-10);
    EXPECT_TRUE(res.pass) << res.max_error << " at " << res.worst_index;
    const auto sigma_direct = from_function([&](std::uint64_t k) { return sigma_complex(k, alpha); }, n);
    EXPECT_TRUE(compare(sigma_c, sigma_direct, 1e-10).pass);
}

TEST(Dirichlet, CompareReportsFailure) {
    const auto r = compare(ones(64), mobius_series(64), 1e-8);
    EXPECT_FALSE(r.pass);
    EXPECT_GE(r.max_error, 1.0);
    EXPECT_TRUE(compare(ones(8), ones(8), 0.0).pass);
    EXPECT_THROW(compare(ones(3), ones(4), 1.0), LengthMismatch);
}

TEST(Dirichlet, TwistPower) {
    const auto t = twist_power(ones(16), cplx(2.0, 0.0));
    EXPECT_NEAR(t[4].real(), 1.0 / 16.0, 1e-15);
}
