#include "heckekit/specfun.hpp"
#include "heckekit/arith.hpp"
#include "heckekit/error.hpp"
#include "heckekit/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace heckekit {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} for k = 1..20.
constexpr std::array<double, 20> kBernoulli = {
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510,
    43867.0 / 798, -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730, 8553103.0 / 6,
    -23749461029.0 / 870, 8615841276005.0 / 14322, -7709321041217.0 / 510, 2577687858367.0 / 6,
    -26315271553053477373.0 / 1919190, 2929993913841559.0 / 6, -261082718496449122051.0 / 13530};

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;

bool is_nonpositive_integer(cplx s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real());
}

cplx lanczos_gamma(cplx s) {
    // Valid for Re s >= 1/2.
    const cplx z = s - 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

cplx stirling_log_gamma(cplx z) {
    // Re z >= 10.
    cplx r = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    const cplx z2 = 1.0 / (z * z);
    cplx zp = 1.0 / z;
    for (int k = 1; k <= 12; ++k) {
        r += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * zp;
        zp *= z2;
    }
    return r;
}

// Euler-Maclaurin for sum_{n >= 0} (n + a)^{-s}, a > 0.
cplx em_zeta(cplx s, double a, const EvalOptions& opt) {
    using lcplx = std::complex<long double>;
    const int N = opt.em_shift > 0 ? opt.em_shift
                                   : static_cast<int>(std::max(16.0, std::ceil(std::abs(s) * 1.2) + 10.0));
    const lcplx ls(s.real(), s.imag());
    lcplx sum = 0.0L;
    for (int n = N - 1; n >= 0; --n) sum += std::exp(-ls * std::log(static_cast<long double>(n) + a));
    const long double x = static_cast<long double>(N) + a;
    const lcplx xs = std::exp(-ls * std::log(x));  // x^{-s}
    sum += xs * x / (ls - 1.0L) + 0.5L * xs;
    // sum_k B_2k/(2k)! s(s+1)...(s+2k-2) x^{-s-2k+1}
    lcplx rising = ls;             // s (s+1) ... (s + 2k - 2)
    lcplx pw = xs / x;             // x^{-s-2k+1}
    long double fact = 2.0L;       // (2k)!
    for (int k = 1; k <= opt.em_terms; ++k) {
        const lcplx term = static_cast<long double>(kBernoulli[k - 1]) / fact * rising * pw;
        sum += term;
        if (std::abs(term) < 1e-20L * std::abs(sum)) break;
        rising *= (ls + (2.0L * k - 1.0L)) * (ls + 2.0L * k);
        pw /= x * x;
        fact *= (2.0L * k + 1.0L) * (2.0L * k + 2.0L);
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

cplx bessel_j_series(cplx nu, double x) {
    const double h = 0.5 * x;
    cplx term = std::exp(nu * std::log(h)) * rgamma(nu + 1.0);
    cplx sum = term;
    for (int k = 0; k < 500; ++k) {
        term *= -h * h / ((k + 1.0) * (nu + (k + 1.0)));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum) && k > 4) break;
    }
    return sum;
}

cplx bessel_j_integral(cplx nu, double x) {
    const int panels = static_cast<int>(std::ceil((x + std::abs(nu)) / 3.0)) + 4;
    const cplx first = integrate_panels([&](double th) { return std::cos(nu * th - x * std::sin(th)); }, 0.0, kPi,
                                        panels, 20) / kPi;
    const cplx snp = std::sin(nu * kPi);
    if (std::abs(snp) == 0.0) return first;
    // tail of int_0^inf exp(-x sinh t - nu t) dt beyond T is below 1e-18
    double T = std::asinh(45.0 / x) + 1.0;
    if (nu.real() < 0) T = std::max(T, 2.0 * std::abs(nu.real()) / x + 2.0);
    const int tp = static_cast<int>(std::ceil(T / 0.25));
    const cplx second = integrate_panels([&](double t) { return std::exp(-x * std::sinh(t) - nu * t); }, 0.0, T, tp, 20);
    return first - snp / kPi * second;
}

} // namespace

cplx cot_pi(cplx s) {
    const cplx I(0.0, 1.0);
    if (s.imag() >= 0.0) {
        const cplx E = std::exp(2.0 * kPi * I * s);
        return I * (E + 1.0) / (E - 1.0);
    }
    const cplx E = std::exp(-2.0 * kPi * I * s);
    return I * (1.0 + E) / (1.0 - E);
}

cplx log_sin_pi(cplx s) {
    const cplx I(0.0, 1.0);
    if (std::abs(s.imag()) < 5.0) return std::log(std::sin(kPi * s));
    if (s.imag() > 0.0)
        return -I * kPi * s + std::log(0.5 * I) + std::log(1.0 - std::exp(2.0 * kPi * I * s));
    return I * kPi * s + std::log(-0.5 * I) + std::log(1.0 - std::exp(-2.0 * kPi * I * s));
}

cplx cgamma(cplx s) {
    if (is_nonpositive_integer(s)) throw PoleError("cgamma: pole at nonpositive integer");
    if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * lanczos_gamma(1.0 - s));
    return lanczos_gamma(s);
}

cplx rgamma(cplx s) {
    if (is_nonpositive_integer(s)) return 0.0;
    if (s.real() < 0.5) return std::sin(kPi * s) * lanczos_gamma(1.0 - s) / kPi;
    return 1.0 / lanczos_gamma(s);
}

cplx log_gamma(cplx s) {
    if (is_nonpositive_integer(s)) throw PoleError("log_gamma: pole at nonpositive integer");
    if (s.real() < 0.5) return std::log(kPi) - log_sin_pi(s) - log_gamma(1.0 - s);
    cplx shift = 0.0;
    cplx z = s;
    while (z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling_log_gamma(z) - shift;
}

cplx digamma(cplx s) {
    if (is_nonpositive_integer(s)) throw PoleError("digamma: pole at nonpositive integer");
    if (s.real() < 0.5) return digamma(1.0 - s) - kPi * cot_pi(s);
    cplx acc = 0.0;
    cplx z = s;
    while (std::abs(z) < 12.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    cplx r = std::log(z) - 0.5 / z;
    const cplx z2 = 1.0 / (z * z);
    cplx zp = z2;
    for (int k = 1; k <= 10; ++k) {
        r -= kBernoulli[k - 1] / (2.0 * k) * zp;
        zp *= z2;
    }
    return r + acc;
}

cplx zeta(cplx s, const EvalOptions& opt) {
    if (s == cplx(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
    if (s.real() < -0.5) {
        // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
        const cplx lchi = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_sin_pi(0.5 * s) + log_gamma(1.0 - s);
        return std::exp(lchi) * em_zeta(1.0 - s, 1.0, opt);
    }
    return em_zeta(s, 1.0, opt);
}

cplx hurwitz_zeta(cplx s, double omega, const EvalOptions& opt) {
    if (!(omega > 0.0 && omega <= 1.0)) throw DomainError("hurwitz_zeta: omega must lie in (0, 1]");
    if (s == cplx(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");
    return em_zeta(s, omega, opt);
}

cplx l_principal(cplx s, std::uint64_t q, const EvalOptions& opt) {
    cplx r = zeta(s, opt);
    for (auto p : prime_divisors(q)) r *= 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
    return r;
}

cplx bessel_j(cplx nu, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_j: x must be positive");
    if (nu.imag() == 0.0 && nu.real() < 0.0 && nu.real() == std::round(nu.real())) {
        const double n = -nu.real();
        return (static_cast<long long>(n) % 2 ? -1.0 : 1.0) * bessel_j(cplx(n, 0.0), x);
    }
    if (x <= 12.0) return bessel_j_series(nu, x);
    return bessel_j_integral(nu, x);
}

double bessel_j(double nu, double x) { return bessel_j(cplx(nu, 0.0), x).real(); }

double bessel_k_imag(double r, double x, const EvalOptions& opt) {
    if (!(x > 0.0)) throw DomainError("bessel_k_imag: x must be positive");
    const double T = std::acosh(std::max(1.0, 41.5 / x)) + 0.5;
    auto trap = [&](double h) {
        const int n = static_cast<int>(std::ceil(T / h));
        double s = 0.5 * std::exp(-x);
        for (int k = 1; k <= n; ++k) {
            const double t = k * h;
            s += std::exp(-x * std::cosh(t)) * std::cos(2.0 * r * t);
        }
        return s * h;
    };
    double h = std::min(0.25, 0.5 / (1.0 + 2.0 * std::abs(r)));
    double prev = trap(h);
    for (int it = 0; it < opt.max_halvings; ++it) {
        h *= 0.5;
        const double cur = trap(h);
        const double rich = (4.0 * cur - prev) / 3.0;
        if (std::abs(cur - prev) < 0.1 * opt.tol) return rich;
        prev = cur;
    }
    return prev;
}

} // namespace heckekit
