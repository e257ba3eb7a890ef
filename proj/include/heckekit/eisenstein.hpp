#pragma once

#include "heckekit/arith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace heckekit {

// Constant-term coefficient phi(s; w1, w2) for the cusps 1/w1, 1/w2 of Gamma_0(q), q square-free.
cplx eisen_phi(cplx s, std::int64_t q, std::int64_t w1, std::int64_t w2);

struct EisenCoeff {
    cplx bracket;    // sum over moduli of c(n) / modulus^{2s}
    cplx assembled;  // 2 pi^s |n|^{s-1/2} / Gamma(s) * bracket
};

// n-th Fourier coefficient, n != 0.
EisenCoeff eisen_coeff(std::int64_t n, cplx s, std::int64_t q, std::int64_t w1, std::int64_t w2);

// Truncated direct series over admissible moduli (w1,w2) r sqrt(v1 v2), r <= rmax, used as oracles.
// The phi series is Richardson-extrapolated from rmax/2 and rmax to cancel its leading tail.
cplx eisen_phi_series(cplx s, std::int64_t q, std::int64_t w1, std::int64_t w2, std::int64_t rmax);
cplx eisen_coeff_series(std::int64_t n, cplx s, std::int64_t q, std::int64_t w1, std::int64_t w2,
                        std::int64_t rmax);

struct ScatteringMatrix {
    std::int64_t q = 1;
    cplx s;
    std::vector<std::int64_t> order;       // divisors of q, ascending
    std::vector<std::vector<cplx>> entries;

    std::string to_json() const;
};

ScatteringMatrix scattering_matrix(cplx s, std::int64_t q);

// max-norm of S(s) S(1-s) - I.
double unitarity_residual(cplx s, std::int64_t q);

// s(1-s) Gamma(s) L(2s, chi_q) times the constant term at height y, sampled on a circle about s0.
struct RegularityProbe {
    cplx center_value;  // mean over the circle
    double variation;   // max deviation from the mean
};
RegularityProbe regularity_probe(cplx s0, std::int64_t q, std::int64_t w1, std::int64_t w2, double y = 1.3,
                             double radius = 1e-6);

struct XYFactors {
    cplx x_divisor_sum, x_closed;
    cplx y_divisor_sum, y_closed;
};

// X_{cd}(ir) and Y_{a,b}(ir) at u = v = w = z = 1/2, divisor-sum and product forms.
XYFactors xy_factors(double r, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

// X_{cd}(xi; u, v, w, z) as a sum over factorizations cd = c1 d1.
cplx x_divisor_sum(cplx xi, cplx u, cplx v, cplx w, cplx z, std::int64_t c, std::int64_t d);

} // namespace heckekit
