#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace heckekit {

using cplx = std::complex<double>;

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule, computed once per n and cached.
const GaussRule& gauss_legendre(int n);

// Composite Gauss-Legendre over [a, b] split into equal panels.
cplx integrate_panels(const std::function<cplx(double)>& f, double a, double b, int panels, int order = 20);
double integrate_panels_real(const std::function<double(double)>& f, double a, double b, int panels,
                             int order = 20);

struct LineOptions {
    double panel_width = 1.0;
    int order = 20;
    double rel_cutoff = 1e-16;  // stop once the integrand falls below this fraction of its peak
    int min_panels = 6;         // per direction
    int max_panels = 4000;      // per direction
};

// Integral of f(sigma + i t) d(sigma + i t) over t in (-inf, inf), i.e. i * int f dt.
// Panels of fixed width march outward from t = center until the integrand has decayed.
cplx vertical_line_integral(const std::function<cplx(cplx)>& f, double sigma, double center = 0.0,
                            const LineOptions& opt = {});

// Integral of f over t in (-inf, inf) for an integrand decaying in both directions.
cplx real_line_integral(const std::function<cplx(double)>& f, double center = 0.0, const LineOptions& opt = {});

} // namespace heckekit
