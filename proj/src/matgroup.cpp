#include "heckekit/matgroup.hpp"
#include "heckekit/arith.hpp"
#include "heckekit/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace heckekit {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw DomainError("IntMat2: entry overflow");
    return static_cast<i64>(v);
}

void check_level(i64 q) {
    if (q < 1) throw InvalidParameters("level must be positive");
}

i64 least_unit_in_class(i64 residue, i64 t, i64 w) {
    i64 u = mod_floor(residue, t);
    if (u == 0) u = t;
    while (std::gcd(u, w) != 1) u += t;
    return u;
}

} // namespace

IntMat2 IntMat2::make(i64 a, i64 b, i64 c, i64 d) {
    if (static_cast<i128>(a) * d - static_cast<i128>(b) * c != 1)
        throw InvalidParameters("IntMat2: determinant is not 1");
    IntMat2 m;
    const bool flip = c < 0 || (c == 0 && d < 0);
    m.a = flip ? -a : a;
    m.b = flip ? -b : b;
    m.c = flip ? -c : c;
    m.d = flip ? -d : d;
    return m;
}

IntMat2 IntMat2::inverse() const { return make(d, -b, -c, a); }

IntMat2 IntMat2::operator*(const IntMat2& o) const {
    return make(narrow(static_cast<i128>(a) * o.a + static_cast<i128>(b) * o.c),
                narrow(static_cast<i128>(a) * o.b + static_cast<i128>(b) * o.d),
                narrow(static_cast<i128>(c) * o.a + static_cast<i128>(d) * o.c),
                narrow(static_cast<i128>(c) * o.b + static_cast<i128>(d) * o.d));
}

std::string IntMat2::str() const {
    std::ostringstream os;
    os << "((" << a << "," << b << "),(" << c << "," << d << "))";
    return os.str();
}

std::string Cusp::str() const { return std::to_string(u) + "/" + std::to_string(w); }

IntMat2 ScalingData::conjugator() const {
    if (convention == Convention::SHIFTED) return pi_matrix * IntMat2::translation(-*shift);
    return pi_matrix;
}

std::int64_t cusp_count(i64 q) {
    check_level(q);
    i64 n = 0;
    for (auto w : divisors(static_cast<std::uint64_t>(q)))
        n += static_cast<i64>(euler_phi(std::gcd(static_cast<i64>(w), q / static_cast<i64>(w))));
    return n;
}

std::vector<Cusp> enumerate_cusps(i64 q) {
    check_level(q);
    std::vector<Cusp> out;
    for (auto wu : divisors(static_cast<std::uint64_t>(q))) {
        const i64 w = static_cast<i64>(wu);
        const i64 t = std::gcd(w, q / w);
        std::vector<i64> us;
        for (i64 rho = 1; rho <= t; ++rho) {
            if (std::gcd(rho, t) != 1) continue;
            us.push_back(least_unit_in_class(rho, t, w));
        }
        std::sort(us.begin(), us.end());
        for (i64 u : us) out.push_back({q, w, u});
    }
    return out;
}

// For x/y with w = (y, q) and t = (w, q/w), the residue x*(y/w) mod t is
// invariant under Gamma_0(q) and separates the representatives u/w.
Cusp canonicalize_cusp(Fraction f, i64 q) {
    check_level(q);
    i64 x = f.x, y = f.y;
    if (y < 0) {
        x = -x;
        y = -y;
    }
    if (y == 0) x = 1;
    if (std::gcd(x, y) != 1) throw InvalidParameters("canonicalize_cusp: fraction not in lowest terms");
    const i64 w = std::gcd(y, q);
    const i64 t = std::gcd(w, q / w);
    const i64 inv = static_cast<i64>((static_cast<i128>(mod_floor(x, t)) * mod_floor(y / w, t)) % t);
    return {q, w, least_unit_in_class(inv, t, w)};
}

bool cusp_equivalent(Fraction f1, Fraction f2, i64 q) {
    return canonicalize_cusp(f1, q) == canonicalize_cusp(f2, q);
}

ScalingData scaling_data(const Cusp& cusp, Convention convention) {
    const i64 w = cusp.w, u = cusp.u, v = cusp.v();
    if (cusp.q % w != 0 || std::gcd(u, w) != 1) throw InvalidParameters("scaling_data: invalid cusp");
    const i64 ubar = mod_inverse(u, w);
    ScalingData sd;
    sd.pi_matrix = IntMat2::make(u, narrow((static_cast<i128>(u) * ubar - 1) / w), w, ubar);
    sd.width = v / std::gcd(v, w);
    sd.convention = convention;
    if (std::gcd(v, w) == 1) sd.shift = mod_inverse(w, v);
    if (convention == Convention::SHIFTED && !sd.shift)
        throw ConventionUnavailable("scaling_data: SHIFTED needs (v, w) = 1 for cusp " + cusp.str());
    return sd;
}

bool is_gamma0(const IntMat2& m, i64 q) {
    check_level(q);
    return m.c % q == 0;
}

IntMat2 bruhat(i64 a, i64 d, i64 c) {
    if (c < 1) throw NotInCell("bruhat: c must be positive");
    const i128 ad1 = static_cast<i128>(a) * d - 1;
    if (ad1 % c != 0) throw NotInCell("bruhat: c does not divide ad - 1");
    return IntMat2::make(a, narrow(ad1 / c), c, d);
}

bool double_coset_pattern(i64 q, i64 w1, i64 w2, const IntMat2& m) {
    check_level(q);
    if (w1 < 1 || w2 < 1 || q % w1 || q % w2) throw InvalidParameters("double_coset_pattern: w must divide q");
    const i64 v1 = q / w1, v2 = q / w2;
    if (std::gcd(v1, w1) != 1 || std::gcd(v2, w2) != 1)
        throw ConventionUnavailable("double_coset_pattern: splitting not coprime");
    return m.a % std::gcd(v1, w2) == 0 && m.b % std::gcd(v1, v2) == 0 &&
           m.c % std::gcd(w1, w2) == 0 && m.d % std::gcd(w1, v2) == 0;
}

} // namespace heckekit
