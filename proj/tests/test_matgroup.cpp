#include "heckekit/arith.hpp"
#include "heckekit/error.hpp"
#include "heckekit/matgroup.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace heckekit;

namespace {

// Some matrix in SL2(Z) with first column (x, y).
IntMat2 completion(Fraction f) {
    std::int64_t x = f.x, y = f.y;
    if (y == 0) return IntMat2::identity();
    // extended Euclid for x*d - b*y = 1
    std::int64_t r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t k = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
    }
    // s0 x + t0 y = r0 = +-1
    const std::int64_t sg = r0;
    return IntMat2::make(x, -t0 * sg, y, s0 * sg);
}

// Every element of SL2(Z) mapping f1 to f2 is g2 T^k g1^{-1}; the lower-left entry is
// affine in k, so scanning one period of k decides Gamma_0(q)-equivalence exactly.
bool orbit_oracle(Fraction f1, Fraction f2, std::int64_t q) {
    const IntMat2 g1 = completion(f1), g2 = completion(f2);
    for (std::int64_t k = 0; k < q; ++k) {
        if (is_gamma0(g2 * IntMat2::translation(k) * g1.inverse(), q)) return true;
    }
    return false;
}

} // namespace

TEST(MatGroup, IntMat2SignConvention) {
    const IntMat2 m = IntMat2::make(-1, 0, -3, -1);
    EXPECT_EQ(m, IntMat2::make(1, 0, 3, 1));
    EXPECT_EQ(IntMat2::make(-1, 0, 0, -1), IntMat2::identity());
    EXPECT_THROW(IntMat2::make(1, 1, 1, 1), InvalidParameters);
    const IntMat2 a = IntMat2::make(2, 1, 5, 3);
    EXPECT_EQ(a * a.inverse(), IntMat2::identity());
}

TEST(MatGroup, EnumerateCuspsExamples) {
    auto c1 = enumerate_cusps(1);
    ASSERT_EQ(c1.size(), 1u);
    EXPECT_EQ(c1[0].str(), "1/1");
    std::vector<std::string> s6;
    for (auto& c : enumerate_cusps(6)) s6.push_back(c.str());
    EXPECT_EQ(s6, (std::vector<std::string>{"1/1", "1/2", "1/3", "1/6"}));
    EXPECT_EQ(enumerate_cusps(4).size(), 3u);
}

TEST(MatGroup, CuspCountSpotValues) {
    EXPECT_EQ(cusp_count(1), 1);
    EXPECT_EQ(cusp_count(6), 4);
    EXPECT_EQ(cusp_count(4), 3);
    EXPECT_EQ(cusp_count(36), 12);
}

TEST(MatGroup, CensusUpTo300) {
    for (std::int64_t q = 1; q <= 300; ++q) {
        std::int64_t direct = 0;
        for (std::int64_t w = 1; w <= q; ++w)
            if (q % w == 0) direct += static_cast<std::int64_t>(euler_phi(std::gcd(w, q / w)));
        const auto cusps = enumerate_cusps(q);
        EXPECT_EQ(static_cast<std::int64_t>(cusps.size()), direct) << q;
        EXPECT_EQ(cusp_count(q), direct) << q;
        for (const auto& c : cusps) {
            EXPECT_EQ(q % c.w, 0);
            EXPECT_EQ(std::gcd(c.u, c.w), 1);
            EXPECT_EQ(canonicalize_cusp({c.u, c.w}, q), c);
        }
    }
}

TEST(MatGroup, RepresentativesPairwiseInequivalent) {
    for (std::int64_t q = 1; q <= 60; ++q) {
        const auto cusps = enumerate_cusps(q);
        for (std::size_t i = 0; i < cusps.size(); ++i)
            for (std::size_t j = i + 1; j < cusps.size(); ++j)
                EXPECT_FALSE(orbit_oracle({cusps[i].u, cusps[i].w}, {cusps[j].u, cusps[j].w}, q))
                    << q << " " << cusps[i].str() << " " << cusps[j].str();
    }
}

TEST(MatGroup, CanonicalizeAgainstOrbitOracle) {
    for (std::int64_t q = 1; q <= 60; ++q) {
        const auto cusps = enumerate_cusps(q);
        const std::set<std::string> reps = [&] {
            std::set<std::string> s;
            for (auto& c : cusps) s.insert(c.str());
            return s;
        }();
        for (std::int64_t y = 0; y <= 25; ++y) {
            for (std::int64_t x = -25; x <= 25; ++x) {
                if (std::gcd(x, y) != 1) continue;
                if (y == 0 && x != 1) continue;
                const Cusp c = canonicalize_cusp({x, y}, q);
                EXPECT_TRUE(reps.count(c.str())) << x << "/" << y << " q=" << q;
                EXPECT_TRUE(orbit_oracle({x, y}, {c.u, c.w}, q)) << x << "/" << y << " q=" << q;
            }
        }
    }
}

TEST(MatGroup, CanonicalizeExamples) {
    EXPECT_EQ(canonicalize_cusp({1, 0}, 12), (Cusp{12, 12, 1}));
    EXPECT_EQ(canonicalize_cusp({1, 2}, 6), (Cusp{6, 2, 1}));
    const Cusp c = canonicalize_cusp({5, 4}, 12);
    EXPECT_EQ(c.w, 4);
    EXPECT_TRUE(orbit_oracle({5, 4}, {c.u, c.w}, 12));
    EXPECT_TRUE(cusp_equivalent({1, 6}, {1, 0}, 6));
    EXPECT_FALSE(cusp_equivalent({1, 2}, {1, 3}, 6));
    EXPECT_TRUE(cusp_equivalent({3, 7}, {3, 7}, 6));
}

TEST(MatGroup, ScalingDataExamples) {
    const ScalingData sd = scaling_data({6, 2, 1}, Convention::PLAIN);
    EXPECT_EQ(sd.pi_matrix, IntMat2::make(1, 0, 2, 1));
    EXPECT_EQ(sd.width, 3);
    const ScalingData one = scaling_data({1, 1, 1}, Convention::PLAIN);
    EXPECT_EQ(one.pi_matrix, IntMat2::make(1, 0, 1, 1));
    EXPECT_EQ(one.width, 1);
    EXPECT_THROW(scaling_data({4, 2, 1}, Convention::SHIFTED), ConventionUnavailable);
    const ScalingData sh = scaling_data({6, 2, 1}, Convention::SHIFTED);
    ASSERT_TRUE(sh.shift.has_value());
    EXPECT_EQ((2 * *sh.shift) % 3, 1);
}

TEST(MatGroup, StabilizerWidths) {
    for (std::int64_t q = 1; q <= 120; ++q) {
        for (const auto& c : enumerate_cusps(q)) {
            const ScalingData sd = scaling_data(c, Convention::PLAIN);
            const IntMat2& pi = sd.pi_matrix;
            EXPECT_EQ(pi.c, c.w);
            EXPECT_EQ(pi * IntMat2::translation(sd.width) * pi.inverse(),
                      pi * IntMat2::translation(sd.width) * pi.inverse());
            EXPECT_TRUE(is_gamma0(pi * IntMat2::translation(sd.width) * pi.inverse(), q)) << c.str() << " q=" << q;
            for (std::int64_t k = 1; k < sd.width; ++k)
                EXPECT_FALSE(is_gamma0(pi * IntMat2::translation(k) * pi.inverse(), q)) << c.str() << " q=" << q;
            // The stabilizer conjugates to translations by multiples of [w^2, q] / w^2 = v*.
            const std::int64_t w2 = c.w * c.w;
            EXPECT_EQ(w2 / std::gcd(w2, q) * q / w2, sd.width);
        }
    }
}

TEST(MatGroup, IsGamma0AndBruhat) {
    EXPECT_TRUE(is_gamma0(IntMat2::make(1, 0, 6, 1), 6));
    EXPECT_FALSE(is_gamma0(IntMat2::make(1, 0, 3, 1), 6));
    EXPECT_TRUE(is_gamma0(IntMat2::make(2, 1, 3, 2), 3));
    EXPECT_EQ(bruhat(1, 1, 2), IntMat2::make(1, 0, 2, 1));
    EXPECT_EQ(bruhat(2, 3, 5), IntMat2::make(2, 1, 5, 3));
    EXPECT_THROW(bruhat(1, 2, 2), NotInCell);
}

TEST(MatGroup, DoubleCosetExamples) {
    EXPECT_TRUE(double_coset_pattern(6, 6, 6, IntMat2::identity()));
    EXPECT_TRUE(double_coset_pattern(15, 1, 1, IntMat2::identity()));
    EXPECT_THROW(double_coset_pattern(4, 2, 1, IntMat2::identity()), ConventionUnavailable);

    // q=6, w1=6, w2=2 and ((1,0),(2,1)): decided by direct membership.
    const IntMat2 x = IntMat2::make(1, 0, 2, 1);
    const IntMat2 m1 = scaling_data({6, 6, 1}, Convention::SHIFTED).conjugator();
    const IntMat2 m2 = scaling_data({6, 2, 1}, Convention::SHIFTED).conjugator();
    const bool member = is_gamma0(m1 * x * m2.inverse(), 6);
    EXPECT_FALSE(member);
    EXPECT_EQ(double_coset_pattern(6, 6, 2, x), member);
}

TEST(MatGroup, DoubleCosetSetIdentity) {
    for (std::int64_t q : {6, 10, 15, 30}) {
        std::vector<std::int64_t> ws;
        for (std::int64_t w = 1; w <= q; ++w)
            if (q % w == 0 && std::gcd(w, q / w) == 1) ws.push_back(w);
        std::vector<IntMat2> group;
        for (std::int64_t a = -50; a <= 50; ++a)
            for (std::int64_t b = -50; b <= 50; ++b)
                for (std::int64_t c = -50; c <= 50; c += 1) {
                    if (c % q || a == 0) continue;
                    if ((1 + b * c) % a) continue;
                    const std::int64_t d = (1 + b * c) / a;
                    if (std::llabs(d) > 50) continue;
                    group.push_back(IntMat2::make(a, b, c, d));
                }
        ASSERT_GT(group.size(), 100u);
        for (auto w1 : ws) {
            for (auto w2 : ws) {
                const IntMat2 m1 = scaling_data({q, w1, 1}, Convention::SHIFTED).conjugator();
                const IntMat2 m2 = scaling_data({q, w2, 1}, Convention::SHIFTED).conjugator();
                for (const auto& g : group)
                    ASSERT_TRUE(double_coset_pattern(q, w1, w2, m1.inverse() * g * m2)) << q << " " << w1 << " " << w2;
                for (std::int64_t a = -20; a <= 20; ++a)
                    for (std::int64_t b = -20; b <= 20; ++b)
                        for (std::int64_t c = 0; c <= 20; ++c) {
                            std::vector<IntMat2> xs;
                            if (a == 0) {
                                if (b * c == -1)
                                    for (std::int64_t d = -20; d <= 20; ++d) xs.push_back(IntMat2::make(0, b, c, d));
                            } else if ((1 + b * c) % a == 0 && std::llabs((1 + b * c) / a) <= 20) {
                                xs.push_back(IntMat2::make(a, b, c, (1 + b * c) / a));
                            }
                            for (const auto& x : xs) {
                                if (!double_coset_pattern(q, w1, w2, x)) continue;
                                ASSERT_TRUE(is_gamma0(m1 * x * m2.inverse(), q)) << q << " " << x.str();
                            }
                        }
            }
        }
    }
}
