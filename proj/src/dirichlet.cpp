#include "heckekit/dirichlet.hpp"
#include "heckekit/error.hpp"

#include <cmath>

namespace heckekit {

namespace {

void require_same_length(const CoeffSeries& a, const CoeffSeries& b, const char* what) {
    if (a.length() != b.length()) throw LengthMismatch(std::string(what) + ": series lengths differ");
}

// Smallest prime factor of every n <= N.
std::vector<std::uint32_t> least_prime_factors(std::size_t n) {
    std::vector<std::uint32_t> lpf(n + 1, 0);
    for (std::size_t i = 2; i <= n; ++i) {
        if (lpf[i] != 0) continue;
        for (std::size_t j = i; j <= n; j += i)
            if (lpf[j] == 0) lpf[j] = static_cast<std::uint32_t>(i);
    }
    return lpf;
}

} // namespace

CoeffSeries::CoeffSeries(std::size_t n) : coeffs_(n + 1, cplx(0.0)) {
    if (n == 0) throw InvalidParameters("CoeffSeries: length must be positive");
}

CoeffSeries& CoeffSeries::operator*=(cplx k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
}

CoeffSeries CoeffSeries::operator+(const CoeffSeries& o) const {
    require_same_length(*this, o, "operator+");
    CoeffSeries r(length());
    for (std::size_t i = 1; i <= length(); ++i) r[i] = coeffs_[i] + o[i];
    return r;
}

CoeffSeries CoeffSeries::operator-(const CoeffSeries& o) const {
    require_same_length(*this, o, "operator-");
    CoeffSeries r(length());
    for (std::size_t i = 1; i <= length(); ++i) r[i] = coeffs_[i] - o[i];
    return r;
}

CoeffSeries from_function(const std::function<cplx(std::uint64_t)>& f, std::size_t n) {
    CoeffSeries r(n);
    for (std::size_t i = 1; i <= n; ++i) r[i] = f(i);
    return r;
}

CoeffSeries convolve(const CoeffSeries& a, const CoeffSeries& b) {
    require_same_length(a, b, "convolve");
    const std::size_t n = a.length();
    CoeffSeries r(n);
    for (std::size_t d = 1; d <= n; ++d) {
        if (a[d] == cplx(0.0)) continue;
        for (std::size_t e = 1; d * e <= n; ++e) r[d * e] += a[d] * b[e];
    }
    return r;
}

CoeffSeries euler_product(const std::function<cplx(std::uint64_t, int)>& local, std::size_t n) {
    const auto lpf = least_prime_factors(n);
    CoeffSeries r(n);
    r[1] = 1.0;
    for (std::size_t i = 2; i <= n; ++i) {
        const std::size_t p = lpf[i];
        std::size_t m = i;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        r[i] = r[m] * local(p, e);
    }
    return r;
}

CoeffSeries twist_power(const CoeffSeries& a, cplx s) {
    CoeffSeries r(a.length());
    for (std::size_t i = 1; i <= a.length(); ++i)
        r[i] = a[i] * std::exp(-s * std::log(static_cast<double>(i)));
    return r;
}

CompareResult compare(const CoeffSeries& a, const CoeffSeries& b, double tol) {
    require_same_length(a, b, "compare");
    CompareResult res;
    for (std::size_t i = 1; i <= a.length(); ++i) {
        const double e = std::abs(a[i] - b[i]);
        if (e > res.max_error) {
            res.max_error = e;
            res.worst_index = i;
        }
    }
    res.pass = res.max_error <= tol;
    return res;
}

} // namespace heckekit
