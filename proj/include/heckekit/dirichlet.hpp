#pragma once

#include "heckekit/arith.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace heckekit {

// Coefficients a_1..a_N of a truncated Dirichlet series sum a_n n^{-s}.
class CoeffSeries {
public:
    explicit CoeffSeries(std::size_t n);

    std::size_t length() const { return coeffs_.size() - 1; }
    // 1-based; n must lie in [1, length()].
    cplx& operator[](std::size_t n) { return coeffs_[n]; }
    const cplx& operator[](std::size_t n) const { return coeffs_[n]; }

    CoeffSeries& operator*=(cplx k);
    CoeffSeries operator+(const CoeffSeries& o) const;
    CoeffSeries operator-(const CoeffSeries& o) const;

private:
    std::vector<cplx> coeffs_;  // slot 0 unused
};

CoeffSeries from_function(const std::function<cplx(std::uint64_t)>& f, std::size_t n);

// Dirichlet convolution; throws LengthMismatch on unequal lengths.
CoeffSeries convolve(const CoeffSeries& a, const CoeffSeries& b);

// Multiplicative series with coeffs[p^j] = local(p, j).
CoeffSeries euler_product(const std::function<cplx(std::uint64_t, int)>& local, std::size_t n);

// n^{-s} a_n: the coefficients of the series shifted by s.
CoeffSeries twist_power(const CoeffSeries& a, cplx s);

struct CompareResult {
    double max_error = 0;
    std::size_t worst_index = 1;
    bool pass = false;
};

CompareResult compare(const CoeffSeries& a, const CoeffSeries& b, double tol);

} // namespace heckekit
