#include "heckekit/error.hpp"
#include "heckekit/identities.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace heckekit;
using nlohmann::json;

TEST(Identities, ListIsStableAndComplete) {
    const auto& ids = list_identities();
    EXPECT_GE(ids.size(), 14u);
    std::set<std::string> names;
    for (const auto& i : ids) {
        names.insert(i.id);
        EXPECT_FALSE(i.description.empty()) << i.id;
    }
    EXPECT_EQ(names.size(), ids.size());
    for (const char* want : {"HURWITZ_SUM", "KLOOSTERMAN_CLOSED", "J0_EULER", "GCD_SUM", "RAMANUJAN_CONV", "EISEN_PHI",
                             "EISEN_EN", "XY_CLOSED", "ZS_EULER", "KLOOSTERMAN_SPECIAL", "KLOOSTERMAN_FACT", "DOUBLE_COSET",
                             "SCATTER_UNITARY", "TRANSFORM_REL", "MOMENT_REARRANGE", "DISSECT_J", "HAT_H_HALF",
                             "PSI_AT_ONE"})
        EXPECT_TRUE(names.count(want)) << want;
    EXPECT_EQ(&list_identities(), &ids);
}

TEST(Identities, HurwitzExample) {
    const auto r = verify("HURWITZ_SUM", {{"q", 12}, {"m", 5}, {"s", {2.5, 1.0}}});
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.max_abs_error, 1e-7);
    EXPECT_EQ(r.params["q"], 12);
}

TEST(Identities, KloostermanClosedExample) {
    const auto r = verify("KLOOSTERMAN_CLOSED", {{"q", 6}, {"rmax", 5}, {"freqs", {-2, -1, 1, 2}}});
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.max_abs_error, 1e-8);
}

TEST(Identities, J0EulerAtTrivialLevel) {
    const auto r = verify("J0_EULER", {{"cd", 1}, {"N", 512}, {"draw", 0}});
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.max_abs_error, 1e-12);
    EXPECT_EQ(r.N, 512);
}

TEST(Identities, ReportsAreReproducible) {
    const auto a = verify("RAMANUJAN_CONV", {{"N", 256}}, 7);
    const auto b = verify("RAMANUJAN_CONV", {{"N", 256}}, 7);
    EXPECT_EQ(a.max_abs_error, b.max_abs_error);
    EXPECT_EQ(a.seed, 7u);
    auto ja = a.to_json(), jb = b.to_json();
    ja.erase("wall_ms");
    jb.erase("wall_ms");
    EXPECT_EQ(ja.dump(), jb.dump());
    // a different seed draws different parameters
    const auto c = verify("RAMANUJAN_CONV", {{"N", 256}}, 8);
    EXPECT_NE(a.max_abs_error, c.max_abs_error);
}

TEST(Identities, PassMatchesTolerance) {
    auto r = verify("XY_CLOSED");
    EXPECT_EQ(r.pass, r.max_abs_error <= r.tol);
    r = verify("XY_CLOSED", {{"tol", 0.0}});
    EXPECT_EQ(r.tol, 0.0);
    EXPECT_EQ(r.pass, r.max_abs_error == 0.0);
}

TEST(Identities, JsonSchema) {
    const auto j = verify("HAT_H_HALF").to_json();
    for (const char* k : {"id", "params", "N", "tol", "max_abs_error", "pass", "seed", "wall_ms", "notes"})
        EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["id"], "HAT_H_HALF");
}

TEST(Identities, Errors) {
    EXPECT_THROW(verify("NO_SUCH_ID"), UnknownIdentity);
    EXPECT_THROW(verify("HURWITZ_SUM", {{"bogus", 1}}), InvalidParameters);
    EXPECT_THROW(verify("HURWITZ_SUM", {{"q", "twelve"}}), InvalidParameters);
    EXPECT_THROW(verify("HURWITZ_SUM", {{"q", 2.5}}), InvalidParameters);
    EXPECT_THROW(verify("HURWITZ_SUM", {{"s", {1, 2, 3}}}), InvalidParameters);
    EXPECT_THROW(verify("J0_EULER", {{"N", 0}}), InvalidParameters);
    EXPECT_THROW(verify("HURWITZ_SUM", json::array({1, 2})), InvalidParameters);
    EXPECT_THROW(verify("GCD_SUM", {{"c", 6}, {"d", 4}}), InvalidParameters);
    EXPECT_THROW(verify("KLOOSTERMAN_CLOSED", {{"q", 4}}), InvalidParameters);
}

TEST(Identities, ComplexAcceptsPlainNumbers) {
    const auto r = verify("HURWITZ_SUM", {{"q", 6}, {"m", 1}, {"s", 3}});
    EXPECT_TRUE(r.pass);
}

TEST(Identities, ZsEulerRecordsLiteralReading) {
    const auto r = verify("ZS_EULER", {{"N", 512}});
    EXPECT_TRUE(r.pass);
    ASSERT_FALSE(r.notes.empty());
}

TEST(Identities, CoefficientLevelFamilies) {
    for (const char* id : {"J0_EULER", "GCD_SUM", "RAMANUJAN_CONV", "ZS_EULER", "EISEN_EN_BRACKET"}) {
        const auto r = verify(id, {{"N", 512}}, 11);
        EXPECT_TRUE(r.pass) << id << " " << r.max_abs_error;
    }
}

TEST(Identities, LightweightDefaultsPass) {
    for (const char* id : {"HURWITZ_SUM", "XY_CLOSED", "KLOOSTERMAN_SPECIAL", "DOUBLE_COSET", "SCATTER_UNITARY",
                           "HAT_H_HALF", "MOMENT_REARRANGE"}) {
        const auto r = verify(id);
        EXPECT_TRUE(r.pass) << id << " " << r.max_abs_error;
    }
}

TEST(Identities, EveryDefaultPasses) {
    for (const auto& info : list_identities()) {
        const auto r = verify(info.id);
        EXPECT_TRUE(r.pass) << info.id << " " << r.max_abs_error;
    }
}
