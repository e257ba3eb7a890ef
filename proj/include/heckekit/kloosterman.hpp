#pragma once

#include "heckekit/arith.hpp"
#include "heckekit/matgroup.hpp"

#include <cstdint>
#include <vector>

namespace heckekit {

struct GenKloostermanSpec {
    std::int64_t q = 1;
    Cusp cusp_a, cusp_b;
    Convention convention = Convention::PLAIN;
    std::int64_t m = 1, n = 1;
    std::int64_t c_index = 1;  // the true modulus is c_index * sqrt(v1* v2*)
};

// Conjugating matrix and stabilizer width attached to one cusp.
struct CuspFrame {
    IntMat2 conjugator;
    std::int64_t width = 1;
};

CuspFrame cusp_frame(const Cusp& cusp, Convention convention);

// S(m,n;c) = sum over a d = 1 mod c of e((ma + nd)/c).
cplx ordinary_kloosterman(std::int64_t m, std::int64_t n, std::int64_t c);

// Sum over a mod v1* c, d mod v2* c, ad = 1 mod c, of the Gamma_0(q) indicator of
// M1 B[a,d;c] M2^{-1} times e(ma/(v1* c) + nd/(v2* c)).
cplx kloosterman_sum_frames(std::int64_t q, const CuspFrame& f1, const CuspFrame& f2,
                            std::int64_t m, std::int64_t n, std::int64_t c);

cplx general_kloosterman_bruteforce(const GenKloostermanSpec& spec);

// Closed form for square-free q under the SHIFTED convention, modulus index (w1,w2) r.
cplx general_kloosterman_squarefree(std::int64_t q, std::int64_t w1, std::int64_t w2,
                                    std::int64_t m, std::int64_t n, std::int64_t r);

struct KloostermanFactorization {
    std::int64_t c0 = 1, c_star = 1;
    cplx q_part;        // local sum at modulus c0 with twisted cusps and frequencies
    cplx coprime_part;  // ordinary sum at modulus c_star
    cplx product() const { return q_part * coprime_part; }
};

// Splits the PLAIN-convention sum at modulus index c into a q-part and an ordinary sum.
KloostermanFactorization kloosterman_factorize(std::int64_t q, const Cusp& cusp_a, const Cusp& cusp_b,
                                               std::int64_t m, std::int64_t n, std::int64_t c);

struct WeilReport {
    double abs_value = 0, bound = 0;
    bool holds = false;
};

// |S(m,n;c)| <= tau(c) (m,n,c)^{1/2} c^{1/2}.
WeilReport weil_bound_report(std::int64_t m, std::int64_t n, std::int64_t c);

struct TailReport {
    double partial_sum = 0;  // sum_{c <= C} |S| / (c sqrt(v1* v2*))^tau
    double bound = 0;        // explicit bound on the full series
    bool holds = false;
};

// Requires tau > 3/2, tau - xi > 1, xi > 1/2 and m, n nonzero; PLAIN convention.
TailReport tail_sum_report(std::int64_t q, const Cusp& cusp_a, const Cusp& cusp_b, std::int64_t m,
                           std::int64_t n, double tau, double xi, std::int64_t cmax);

} // namespace heckekit
