#pragma once

#include <complex>
#include <cstdint>

namespace heckekit {

using cplx = std::complex<double>;

struct EvalOptions {
    double tol = 1e-12;       // in [1e-14, 1e-4]
    int em_terms = 20;        // Bernoulli correction terms for Euler-Maclaurin
    int em_shift = 0;         // explicit summation length, 0 = automatic
    int max_halvings = 14;    // trapezoid refinements for the K integral
};

cplx cgamma(cplx s);
cplx rgamma(cplx s);          // 1/Gamma, entire
cplx log_gamma(cplx s);       // a branch of log Gamma; exp(log_gamma) = Gamma
cplx digamma(cplx s);
cplx log_sin_pi(cplx s);      // a branch of log sin(pi s), stable for large |Im s|
cplx cot_pi(cplx s);

cplx zeta(cplx s, const EvalOptions& opt = {});
// zeta(s, omega) = sum_{n >= 0} (n + omega)^{-s}, 0 < omega <= 1.
cplx hurwitz_zeta(cplx s, double omega, const EvalOptions& opt = {});
// zeta(s) prod_{p | q} (1 - p^{-s}).
cplx l_principal(cplx s, std::uint64_t q, const EvalOptions& opt = {});

double bessel_j(double nu, double x);
cplx bessel_j(cplx nu, double x);
// K_{2ir}(x) = int_0^inf exp(-x cosh t) cos(2 r t) dt.
double bessel_k_imag(double r, double x, const EvalOptions& opt = {});

} // namespace heckekit
