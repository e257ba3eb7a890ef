#include "heckekit/arith.hpp"
#include "heckekit/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace heckekit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool sprp(u64 n, u64 a) {
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's variant of Pollard rho; n is odd and composite.
u64 rho(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

constexpr u64 kTrialLimit = u64{1} << 21;

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (!sprp(n, a)) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw InvalidParameters("factorize: n must be positive");
    Factorization f;
    f.n = n;
    u64 m = n;
    auto take = [&](u64 p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) f.factors.emplace_back(p, e);
    };
    take(2);
    for (u64 p = 3; p < kTrialLimit && p * p <= m; p += 2) take(p);
    if (m > 1) {
        // Any cofactor left has at most two prime factors, both above the trial bound.
        if (is_prime(m)) {
            f.factors.emplace_back(m, 1);
        } else {
            u64 a = rho(m), b = m / a;
            if (a > b) std::swap(a, b);
            if (a == b) f.factors.emplace_back(a, 2);
            else {
                f.factors.emplace_back(a, 1);
                f.factors.emplace_back(b, 1);
            }
        }
    }
    return f;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> d{1};
    for (auto [p, e] : factorize(n).factors) {
        const std::size_t sz = d.size();
        u64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) d.push_back(d[i] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> ps;
    for (auto [p, e] : factorize(n).factors) ps.push_back(p);
    return ps;
}

MobiusPhiTau mobius_phi_tau(u64 n) {
    MobiusPhiTau r;
    for (auto [p, e] : factorize(n).factors) {
        r.mu = e > 1 ? 0 : -r.mu;
        u64 pk = 1;
        for (int k = 1; k < e; ++k) pk *= p;
        r.phi *= pk * (p - 1);
        r.tau *= static_cast<u64>(e + 1);
    }
    r.divisors = divisors(n);
    return r;
}

int mobius(u64 n) {
    int mu = 1;
    for (auto [p, e] : factorize(n).factors) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

u64 euler_phi(u64 n) {
    u64 phi = n;
    for (auto [p, e] : factorize(n).factors) phi = phi / p * (p - 1);
    return phi;
}

u64 num_divisors(u64 n) {
    u64 t = 1;
    for (auto [p, e] : factorize(n).factors) t *= static_cast<u64>(e + 1);
    return t;
}

bool is_squarefree(u64 n) { return mobius(n) != 0; }

u64 part_p(u64 n, u64 p) {
    if (!is_prime(p)) throw NotPrime("part_p: " + std::to_string(p) + " is not prime");
    if (n == 0) throw InvalidParameters("part_p: n must be positive");
    u64 r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 1) throw InvalidParameters("mod_inverse: modulus must be positive");
    if (m == 1) return 1;
    std::int64_t r0 = m, r1 = mod_floor(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t t = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
    }
    if (r0 != 1)
        throw NotInvertible("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                            std::to_string(m));
    const std::int64_t x = mod_floor(s0, m);
    return x == 0 ? m : x;
}

std::int64_t ramanujan_sum(u64 q, std::int64_t n) {
    if (q == 0) throw InvalidParameters("ramanujan_sum: q must be positive");
    const u64 g = std::gcd(q, static_cast<u64>(n < 0 ? -n : n));
    std::int64_t s = 0;
    for (u64 d : divisors(g)) s += static_cast<std::int64_t>(d) * mobius(q / d);
    return s;
}

cplx cpow_int(u64 d, cplx alpha) {
    if (d == 1) return 1.0;
    return std::exp(alpha * std::log(static_cast<double>(d)));
}

cplx sigma_complex(u64 n, cplx alpha, std::optional<u64> q) {
    cplx s = 0.0;
    for (u64 d : divisors(n)) {
        if (q && std::gcd(d, *q) != 1) continue;
        s += cpow_int(d, alpha);
    }
    return s;
}

int PrincipalCharacter::operator()(std::int64_t n) const {
    return std::gcd(static_cast<u64>(n < 0 ? -n : n), q) == 1 ? 1 : 0;
}

} // namespace heckekit
