#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace heckekit {

// 2x2 integer matrix of determinant 1, identified with its negative.
// Stored with c > 0, or c == 0 and d > 0.
struct IntMat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    // Throws InvalidParameters unless ad - bc = 1.
    static IntMat2 make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
    static IntMat2 identity() { return {}; }
    static IntMat2 translation(std::int64_t k) { return make(1, k, 0, 1); }

    IntMat2 inverse() const;
    IntMat2 operator*(const IntMat2& o) const;
    bool operator==(const IntMat2& o) const = default;
    std::string str() const;
};

// A rational point of P^1(Q) in lowest terms; infinity is 1/0.
struct Fraction {
    std::int64_t x = 1, y = 0;
};

struct Cusp {
    std::int64_t q = 1, w = 1, u = 1;
    std::int64_t v() const { return q / w; }
    bool operator==(const Cusp& o) const = default;
    std::string str() const;
};

enum class Convention { PLAIN, SHIFTED };

struct ScalingData {
    IntMat2 pi_matrix;             // maps infinity to u/w, lower row (w, ubar)
    std::int64_t width = 1;        // v* = v / (v, w)
    std::optional<std::int64_t> shift;  // wbar with w*wbar = 1 mod v, coprime splits only
    Convention convention = Convention::PLAIN;

    // The integer matrix conjugating the stabilizer: pi for PLAIN, pi * S^{-wbar} for SHIFTED.
    IntMat2 conjugator() const;
};

std::vector<Cusp> enumerate_cusps(std::int64_t q);
std::int64_t cusp_count(std::int64_t q);
Cusp canonicalize_cusp(Fraction f, std::int64_t q);
bool cusp_equivalent(Fraction f1, Fraction f2, std::int64_t q);

// Throws ConventionUnavailable for SHIFTED when (v, w) > 1.
ScalingData scaling_data(const Cusp& cusp, Convention convention);

bool is_gamma0(const IntMat2& m, std::int64_t q);

// ((a, (ad-1)/c), (c, d)); throws NotInCell unless c | ad - 1.
IntMat2 bruhat(std::int64_t a, std::int64_t d, std::int64_t c);

// Divisibility pattern (v1,w2)|a, (v1,v2)|b, (w1,w2)|c, (w1,v2)|d.
// Throws ConventionUnavailable unless both splits q = v_i w_i are coprime.
bool double_coset_pattern(std::int64_t q, std::int64_t w1, std::int64_t w2, const IntMat2& m);

} // namespace heckekit
