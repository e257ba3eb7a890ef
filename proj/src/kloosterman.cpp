#include "heckekit/kloosterman.hpp"
#include "heckekit/error.hpp"
#include "heckekit/specfun.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace heckekit {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(((static_cast<i128>(a) * b) % m + m) % m);
}

// e(k / c) for an integer k.
cplx unit_root(i64 k, i64 c) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(mod_floor(k, c)) / static_cast<double>(c);
    return {std::cos(t), std::sin(t)};
}

void require_canonical(const Cusp& cusp, i64 q) {
    if (cusp.q != q || q % cusp.w != 0 || !(canonicalize_cusp({cusp.u, cusp.w}, q) == cusp))
        throw InvalidParameters("cusp " + cusp.str() + " is not canonical for level " + std::to_string(q));
}

i64 gcd3(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(a, b), c); }

} // namespace

CuspFrame cusp_frame(const Cusp& cusp, Convention convention) {
    const ScalingData sd = scaling_data(cusp, convention);
    return {sd.conjugator(), sd.width};
}

cplx ordinary_kloosterman(i64 m, i64 n, i64 c) {
    if (c < 1) throw InvalidParameters("ordinary_kloosterman: c must be positive");
    cplx s = 0.0;
    for (i64 a = 0; a < c; ++a) {
        if (std::gcd(a, c) != 1) continue;
        const i64 d = c == 1 ? 0 : mod_inverse(a, c);
        s += unit_root(mulmod(m, a, c) + mulmod(n, d, c), c);
    }
    return {s.real(), 0.0};
}

cplx kloosterman_sum_frames(i64 q, const CuspFrame& f1, const CuspFrame& f2, i64 m, i64 n, i64 c) {
    if (c < 1) throw InvalidParameters("Kloosterman modulus index must be positive");
    const i64 mod_a = f1.width * c, mod_d = f2.width * c;
    const IntMat2 m2inv = f2.conjugator.inverse();
    cplx s = 0.0;
    for (i64 a = 0; a < mod_a; ++a) {
        if (std::gcd(a, c) != 1) continue;
        const i64 d0 = c == 1 ? 0 : mod_inverse(a, c) % c;
        for (i64 k = 0; k < f2.width; ++k) {
            const i64 d = d0 + k * c;
            const IntMat2 g = f1.conjugator * bruhat(a, d, c) * m2inv;
            if (!is_gamma0(g, q)) continue;
            s += unit_root(mulmod(m, a, mod_a), mod_a) * unit_root(mulmod(n, d, mod_d), mod_d);
        }
    }
    return s;
}

cplx general_kloosterman_bruteforce(const GenKloostermanSpec& spec) {
    require_canonical(spec.cusp_a, spec.q);
    require_canonical(spec.cusp_b, spec.q);
    const CuspFrame f1 = cusp_frame(spec.cusp_a, spec.convention);
    const CuspFrame f2 = cusp_frame(spec.cusp_b, spec.convention);
    return kloosterman_sum_frames(spec.q, f1, f2, spec.m, spec.n, spec.c_index);
}

cplx general_kloosterman_squarefree(i64 q, i64 w1, i64 w2, i64 m, i64 n, i64 r) {
    if (q < 1 || w1 < 1 || w2 < 1 || q % w1 || q % w2 || r < 1)
        throw InvalidParameters("general_kloosterman_squarefree: w1, w2 must divide q and r >= 1");
    if (!is_squarefree(static_cast<std::uint64_t>(q)))
        throw ConventionUnavailable("general_kloosterman_squarefree: level is not square-free");
    const i64 v1 = q / w1, v2 = q / w2;
    const i64 left = std::gcd(v1, w2), right = std::gcd(w1, v2);
    if (std::gcd(r, left * right) != 1)
        throw InvalidModulus("general_kloosterman_squarefree: r must be coprime to (v1,w2)(w1,v2)");
    const i64 modulus = std::gcd(v1, v2) * std::gcd(w1, w2) * r;
    if (modulus == 1) return ordinary_kloosterman(m, n, 1);
    return ordinary_kloosterman(mulmod(mod_inverse(left, modulus), m, modulus),
                                mulmod(mod_inverse(right, modulus), n, modulus), modulus);
}

KloostermanFactorization kloosterman_factorize(i64 q, const Cusp& cusp_a, const Cusp& cusp_b, i64 m, i64 n,
                                               i64 c) {
    require_canonical(cusp_a, q);
    require_canonical(cusp_b, q);
    if (c < 1) throw InvalidParameters("kloosterman_factorize: c must be positive");
    KloostermanFactorization out;
    out.c_star = c;
    for (auto p : prime_divisors(static_cast<std::uint64_t>(q))) {
        while (out.c_star % static_cast<i64>(p) == 0) {
            out.c_star /= static_cast<i64>(p);
            out.c0 *= static_cast<i64>(p);
        }
    }
    const i64 c0 = out.c0, cs = out.c_star;
    const i64 cbar = mod_inverse(cs, q);

    // Twisted cusp frames: numerator cbar*u, lower-right entry cs*ubar.
    auto twisted = [&](const Cusp& cusp) {
        const ScalingData sd = scaling_data(cusp, Convention::PLAIN);
        const i64 u2 = cbar * cusp.u, ub2 = cs * sd.pi_matrix.d;
        const IntMat2 pi = IntMat2::make(u2, static_cast<i64>((static_cast<i128>(u2) * ub2 - 1) / cusp.w),
                                         cusp.w, ub2);
        return CuspFrame{pi, sd.width};
    };
    const CuspFrame f1 = twisted(cusp_a), f2 = twisted(cusp_b);
    const i64 m1 = f1.width * c0, m2 = f2.width * c0;
    const i64 ct1 = mod_inverse(cs, m1), ct2 = mod_inverse(cs, m2);
    out.q_part = kloosterman_sum_frames(q, f1, f2, mulmod(ct1, m, m1), mulmod(ct2, n, m2), c0);
    if (cs == 1) {
        out.coprime_part = 1.0;
    } else {
        const i64 vt1 = mod_inverse(m1, cs), vt2 = mod_inverse(m2, cs);
        out.coprime_part = ordinary_kloosterman(mulmod(vt1, m, cs), mulmod(vt2, n, cs), cs);
    }
    return out;
}

WeilReport weil_bound_report(i64 m, i64 n, i64 c) {
    WeilReport r;
    r.abs_value = std::abs(ordinary_kloosterman(m, n, c));
    const double g = static_cast<double>(gcd3(std::llabs(m), std::llabs(n), c));
    r.bound = static_cast<double>(num_divisors(static_cast<std::uint64_t>(c))) * std::sqrt(g * static_cast<double>(c));
    r.holds = r.abs_value <= r.bound + 1e-9;
    return r;
}

// |S| <= v1* v2* phi(c0) |S(.;c*)| and |S(.;c*)| <= tau(c*) ((m,n,c*) c*)^xi give
// sum_c |S| / (c sqrt V)^tau <= V^{1-tau/2} prod_{p|q} (sum_j phi(p^j) p^{-j tau}) |(m,n)|^xi zeta(tau-xi)^2.
TailReport tail_sum_report(i64 q, const Cusp& cusp_a, const Cusp& cusp_b, i64 m, i64 n, double tau, double xi,
                           i64 cmax) {
    if (!(tau > 1.5) || !(tau - xi > 1.0) || !(xi > 0.5) || m == 0 || n == 0 || cmax < 1)
        throw InvalidParameters("tail_sum_report: need tau > 3/2, tau - xi > 1, xi > 1/2, m n != 0");
    GenKloostermanSpec spec{q, cusp_a, cusp_b, Convention::PLAIN, m, n, 1};
    const CuspFrame f1 = cusp_frame(cusp_a, Convention::PLAIN), f2 = cusp_frame(cusp_b, Convention::PLAIN);
    const double V = static_cast<double>(f1.width * f2.width);
    TailReport r;
    for (i64 c = 1; c <= cmax; ++c) {
        spec.c_index = c;
        r.partial_sum += std::abs(general_kloosterman_bruteforce(spec)) / std::pow(static_cast<double>(c) * std::sqrt(V), tau);
    }
    double local = 1.0;
    for (auto p : prime_divisors(static_cast<std::uint64_t>(q))) {
        const double x = std::pow(static_cast<double>(p), 1.0 - tau);
        local *= 1.0 + (1.0 - 1.0 / static_cast<double>(p)) * x / (1.0 - x);
    }
    const double z = zeta(cplx(tau - xi, 0.0)).real();
    r.bound = std::pow(V, 1.0 - tau / 2.0) * local * std::pow(static_cast<double>(std::gcd(std::llabs(m), std::llabs(n))), xi) * z * z;
    r.holds = r.partial_sum <= r.bound;
    return r;
}

} // namespace heckekit
