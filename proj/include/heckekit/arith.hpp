#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace heckekit {

using cplx = std::complex<double>;

struct Factorization {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;  // (prime, exponent), primes increasing
};

// Trial division to 2^21, then a Miller-Rabin certified split of the cofactor.
Factorization factorize(std::uint64_t n);

struct MobiusPhiTau {
    int mu = 1;
    std::uint64_t phi = 1;
    std::uint64_t tau = 1;
    std::vector<std::uint64_t> divisors;  // ascending
};

MobiusPhiTau mobius_phi_tau(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t num_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

// n_p = (n, p^infinity). Throws NotPrime if p is not prime.
std::uint64_t part_p(std::uint64_t n, std::uint64_t p);

// Least positive x with a*x = 1 mod m. Throws NotInvertible.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Non-negative residue of a mod m.
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

// c_q(n) via the divisor formula sum_{d | (q,n)} d mu(q/d).
std::int64_t ramanujan_sum(std::uint64_t q, std::int64_t n);

// sum_{d | n} d^alpha, optionally restricted to (d, q) = 1.
cplx sigma_complex(std::uint64_t n, cplx alpha, std::optional<std::uint64_t> q = std::nullopt);

// Principal character mod q.
struct PrincipalCharacter {
    std::uint64_t q = 1;
    int operator()(std::int64_t n) const;
};

// d^alpha computed as exp(alpha log d).
cplx cpow_int(std::uint64_t d, cplx alpha);

} // namespace heckekit
