#include "heckekit/eisenstein.hpp"
#include "heckekit/error.hpp"
#include "heckekit/specfun.hpp"

#include "json.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace heckekit {

namespace {

constexpr double kPi = std::numbers::pi;

cplx ppow(double p, cplx e) { return std::exp(e * std::log(p)); }

void require_squarefree_pair(std::int64_t q, std::int64_t w1, std::int64_t w2) {
    if (q < 1 || !is_squarefree(static_cast<std::uint64_t>(q)))
        throw InvalidModulus("eisenstein: level must be square-free");
    if (w1 < 1 || w2 < 1 || q % w1 != 0 || q % w2 != 0)
        throw InvalidParameters("eisenstein: cusp widths must divide the level");
}

struct PairData {
    std::int64_t v1, v2, gw, gv, guard;
};

PairData pair_data(std::int64_t q, std::int64_t w1, std::int64_t w2) {
    PairData d;
    d.v1 = q / w1;
    d.v2 = q / w2;
    d.gw = std::gcd(w1, w2);
    d.gv = std::gcd(d.v1, d.v2);
    d.guard = std::gcd(d.v1, w2) * std::gcd(w1, d.v2);
    return d;
}

void check_pole(cplx value, const char* what) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) throw PoleError(what);
}

// phi(n) for n <= N by sieve.
std::vector<std::int64_t> totients(std::int64_t n) {
    std::vector<std::int64_t> phi(static_cast<std::size_t>(n) + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (std::int64_t p = 2; p <= n; ++p) {
        if (phi[p] != p) continue;
        for (std::int64_t k = p; k <= n; k += p) phi[k] -= phi[k] / p;
    }
    return phi;
}

cplx phi_series_raw(cplx s, const PairData& pd, const std::vector<std::int64_t>& phi, std::int64_t rmax) {
    const std::int64_t M = pd.gv * pd.gw;
    const double scale = static_cast<double>(pd.gw) * std::sqrt(static_cast<double>(pd.v1 * pd.v2));
    const auto primes = prime_divisors(static_cast<std::uint64_t>(M));
    cplx acc = 0.0;
    for (std::int64_t r = rmax; r >= 1; --r) {
        if (std::gcd(r, pd.guard) != 1) continue;
        // phi(M r) from phi(r), M square-free
        std::int64_t val = phi[r] * M;
        for (auto p : primes)
            if (r % static_cast<std::int64_t>(p) != 0) val = val / static_cast<std::int64_t>(p) * (static_cast<std::int64_t>(p) - 1);
        acc += static_cast<double>(val) * std::exp(-2.0 * s * std::log(scale * static_cast<double>(r)));
    }
    return acc;
}

} // namespace

cplx eisen_phi(cplx s, std::int64_t q, std::int64_t w1, std::int64_t w2) {
    require_squarefree_pair(q, w1, w2);
    const PairData pd = pair_data(q, w1, w2);
    cplx r = std::sqrt(kPi) * cgamma(s - 0.5) * rgamma(s) * zeta(2.0 * s - 1.0) / zeta(2.0 * s);
    for (auto p : prime_divisors(static_cast<std::uint64_t>(pd.gv * pd.gw))) {
        const double pd_ = static_cast<double>(p);
        r *= (pd_ - 1.0) / (ppow(pd_, 2.0 * s) - 1.0);
    }
    for (auto p : prime_divisors(static_cast<std::uint64_t>(pd.guard))) {
        const double pd_ = static_cast<double>(p);
        r *= (ppow(pd_, s) - ppow(pd_, 1.0 - s)) / (ppow(pd_, 2.0 * s) - 1.0);
    }
    check_pole(r, "eisen_phi: pole");
    return r;
}

EisenCoeff eisen_coeff(std::int64_t n, cplx s, std::int64_t q, std::int64_t w1, std::int64_t w2) {
    require_squarefree_pair(q, w1, w2);
    if (n == 0) throw InvalidParameters("eisen_coeff: n must be nonzero");
    const PairData pd = pair_data(q, w1, w2);
    const std::uint64_t an = static_cast<std::uint64_t>(n < 0 ? -n : n);
    const cplx e = 1.0 - 2.0 * s;
    cplx b = sigma_complex(an, e, static_cast<std::uint64_t>(q)) / l_principal(2.0 * s, static_cast<std::uint64_t>(q));
    const double lcm = static_cast<double>(pd.v1 / pd.gv * pd.v2);
    b *= std::exp(s * std::log(static_cast<double>(pd.gv) / lcm));
    for (auto p : prime_divisors(static_cast<std::uint64_t>(pd.gv * pd.gw))) {
        std::uint64_t np = 1, m = an;
        while (m % p == 0) {
            m /= p;
            np *= p;
        }
        b *= sigma_complex(np, e) * (1.0 - ppow(static_cast<double>(p), -2.0 * s)) - 1.0;
    }
    check_pole(b, "eisen_coeff: pole");
    EisenCoeff out;
    out.bracket = b;
    out.assembled = 2.0 * ppow(kPi, s) * ppow(static_cast<double>(an), s - 0.5) * rgamma(s) * b;
    return out;
}

cplx eisen_phi_series(cplx s, std::int64_t q, std::int64_t w1, std::int64_t w2, std::int64_t rmax) {
    require_squarefree_pair(q, w1, w2);
    if (rmax < 4) throw InvalidParameters("eisen_phi_series: rmax too small");
    const PairData pd = pair_data(q, w1, w2);
    const auto phi = totients(rmax);
    const cplx full = phi_series_raw(s, pd, phi, rmax);
    const cplx half = phi_series_raw(s, pd, phi, rmax / 2);
    // tail ~ C R^{2-2s}
    const cplx k = std::exp((2.0 - 2.0 * s) * std::log(static_cast<double>(rmax) / static_cast<double>(rmax / 2)));
    return std::sqrt(kPi) * cgamma(s - 0.5) * rgamma(s) * (full - k * half) / (1.0 - k);
}

cplx eisen_coeff_series(std::int64_t n, cplx s, std::int64_t q, std::int64_t w1, std::int64_t w2,
                        std::int64_t rmax) {
    require_squarefree_pair(q, w1, w2);
    const PairData pd = pair_data(q, w1, w2);
    const std::int64_t M = pd.gv * pd.gw;
    const double scale = static_cast<double>(pd.gw) * std::sqrt(static_cast<double>(pd.v1 * pd.v2));
    cplx acc = 0.0;
    for (std::int64_t r = rmax; r >= 1; --r) {
        if (std::gcd(r, pd.guard) != 1) continue;
        const auto c = ramanujan_sum(static_cast<std::uint64_t>(M * r), n);
        if (c == 0) continue;
        acc += static_cast<double>(c) * std::exp(-2.0 * s * std::log(scale * static_cast<double>(r)));
    }
    return acc;
}

std::string ScatteringMatrix::to_json() const {
    nlohmann::json j;
    j["q"] = q;
    j["s"] = {s.real(), s.imag()};
    j["order"] = order;
    nlohmann::json flat = nlohmann::json::array();
    for (const auto& row : entries)
        for (const auto& e : row) flat.push_back({e.real(), e.imag()});
    j["entries"] = flat;
    return j.dump();
}

ScatteringMatrix scattering_matrix(cplx s, std::int64_t q) {
    if (q < 1 || !is_squarefree(static_cast<std::uint64_t>(q)))
        throw InvalidModulus("scattering_matrix: level must be square-free");
    ScatteringMatrix m;
    m.q = q;
    m.s = s;
    for (auto d : divisors(static_cast<std::uint64_t>(q))) m.order.push_back(static_cast<std::int64_t>(d));
    for (auto w1 : m.order) {
        std::vector<cplx> row;
        for (auto w2 : m.order) row.push_back(eisen_phi(s, q, w1, w2));
        m.entries.push_back(std::move(row));
    }
    return m;
}

double unitarity_residual(cplx s, std::int64_t q) {
    const auto a = scattering_matrix(s, q), b = scattering_matrix(1.0 - s, q);
    const std::size_t k = a.order.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            cplx acc = i == j ? -1.0 : 0.0;
            for (std::size_t l = 0; l < k; ++l) acc += a.entries[i][l] * b.entries[l][j];
            worst = std::max(worst, std::abs(acc));
        }
    return worst;
}

RegularityProbe regularity_probe(cplx s0, std::int64_t q, std::int64_t w1, std::int64_t w2, double y, double radius) {
    require_squarefree_pair(q, w1, w2);
    constexpr int kPoints = 16;
    std::vector<cplx> vals;
    cplx mean = 0.0;
    for (int k = 0; k < kPoints; ++k) {
        const cplx s = s0 + radius * std::polar(1.0, 2.0 * kPi * (k + 0.5) / kPoints);
        cplx term = eisen_phi(s, q, w1, w2) * std::exp((1.0 - s) * std::log(y));
        if (w1 == w2) term += std::exp(s * std::log(y));
        const cplx f = s * (1.0 - s) * cgamma(s) * l_principal(2.0 * s, static_cast<std::uint64_t>(q)) * term;
        vals.push_back(f);
        mean += f;
    }
    mean /= static_cast<double>(kPoints);
    double var = 0.0;
    for (const auto& v : vals) var = std::max(var, std::abs(v - mean));
    return {mean, var};
}

cplx x_divisor_sum(cplx xi, cplx u, cplx v, cplx w, cplx z, std::int64_t c, std::int64_t d) {
    const std::int64_t cd = c * d;
    if (cd < 1 || !is_squarefree(static_cast<std::uint64_t>(cd)))
        throw InvalidParameters("x_divisor_sum: cd must be square-free");
    const cplx e_a = 0.5 * (u - v - w + z + 1.0) + xi;
    const cplx e_b = 0.5 * (u - v - w + z);
    const cplx e_c = 0.5 * (u + v + w + z - 1.0) - xi;
    const cplx e_d = 0.5 * (u + v - w - z + 1.0) - xi;
    cplx front = 1.0;
    for (auto p : prime_divisors(static_cast<std::uint64_t>(cd))) {
        const double P = static_cast<double>(p);
        front /= (1.0 - ppow(P, -1.0 - 2.0 * xi)) * (1.0 - ppow(P, -1.0 + 2.0 * xi)) * (1.0 - ppow(P, -(u + v)));
    }
    cplx total = 0.0;
    for (auto d1u : divisors(static_cast<std::uint64_t>(cd))) {
        const std::int64_t d1 = static_cast<std::int64_t>(d1u), c1 = cd / d1;
        cplx t = ppow(static_cast<double>(std::gcd(d1, d)) / static_cast<double>(std::gcd(c1, c)), 0.5 + xi) /
                 static_cast<double>(d1);
        for (auto p : prime_divisors(static_cast<std::uint64_t>(std::gcd(d1, c) * std::gcd(c1, d))))
            t *= 1.0 - ppow(static_cast<double>(p), -e_a);
        for (auto p : prime_divisors(static_cast<std::uint64_t>(std::gcd(c1, c) * std::gcd(d1, d)))) {
            const double P = static_cast<double>(p);
            t *= ppow(P, -e_b) - ppow(P, -0.5 - xi);
        }
        for (auto p : prime_divisors(static_cast<std::uint64_t>(d1))) {
            const double P = static_cast<double>(p);
            t *= (1.0 - ppow(P, -e_c)) * (1.0 - ppow(P, -e_d));
        }
        for (auto p : prime_divisors(static_cast<std::uint64_t>(c1))) {
            const double P = static_cast<double>(p);
            t *= (1.0 - ppow(P, -1.0 + 2.0 * xi)) * (1.0 - ppow(P, -(u + v))) -
                 (1.0 - ppow(P, -e_c)) * (1.0 - ppow(P, -e_d));
        }
        total += t;
    }
    return front * total;
}

namespace {

// Local factor of the closed form of X at p_{1/2}, without the c^{-1/2-ir} prefactor.
cplx x_closed_local(double p, double r) {
    const cplx I(0.0, 1.0);
    const cplx b = ppow(p, -0.5 + I * r);
    return (1.0 + b) * (1.0 - 1.0 / p) - (1.0 - b) * (1.0 - b);
}

cplx x_closed(double r, std::int64_t c, std::int64_t d) {
    const cplx I(0.0, 1.0);
    cplx out = ppow(static_cast<double>(c), -0.5 - I * r);
    for (auto p : prime_divisors(static_cast<std::uint64_t>(c * d))) {
        const double P = static_cast<double>(p);
        out *= x_closed_local(P, r) / (std::norm(1.0 + ppow(P, -0.5 - I * r)) * (1.0 - 1.0 / P));
    }
    return out;
}

} // namespace

XYFactors xy_factors(double r, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1) throw InvalidParameters("xy_factors: a, b must be coprime");
    if (c < 1 || d < 1 || a % c != 0 || b % d != 0) throw InvalidParameters("xy_factors: need c | a and d | b");
    if (!is_squarefree(static_cast<std::uint64_t>(a * b)))
        throw InvalidParameters("xy_factors: ab must be square-free");
    const cplx I(0.0, 1.0), h(0.5, 0.0), xi = I * r;
    XYFactors out;
    out.x_divisor_sum = x_divisor_sum(xi, h, h, h, h, c, d);
    out.x_closed = x_closed(r, c, d);
    cplx ysum = 0.0;
    for (auto cc : divisors(static_cast<std::uint64_t>(a)))
        for (auto dd : divisors(static_cast<std::uint64_t>(b))) {
            const auto ci = static_cast<std::int64_t>(cc), di = static_cast<std::int64_t>(dd);
            ysum += static_cast<double>(ci) * ppow(static_cast<double>(di), 0.5 - xi) *
                    x_divisor_sum(xi, h, h, h, h, ci, di);
        }
    out.y_divisor_sum = ysum;
    const std::int64_t ab = a * b;
    cplx y = static_cast<double>(ab) / static_cast<double>(euler_phi(static_cast<std::uint64_t>(ab)));
    for (auto p : prime_divisors(static_cast<std::uint64_t>(ab))) {
        const double P = static_cast<double>(p);
        y *= 4.0 / std::norm(1.0 + ppow(P, -0.5 - xi)) - 1.0 / P;
    }
    out.y_closed = y;
    return out;
}

} // namespace heckekit
