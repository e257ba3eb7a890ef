#include "heckekit/quadrature.hpp"
#include "heckekit/error.hpp"

#include <cmath>
#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>

namespace heckekit {

namespace {

GaussRule build_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

template <class F, class R>
R panel_sum(const F& f, double a, double b, int panels, int order) {
    const GaussRule& g = gauss_legendre(order);
    const double h = (b - a) / panels;
    R total{};
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        R acc{};
        for (int i = 0; i < order; ++i) acc += g.weights[i] * f(mid + 0.5 * h * g.nodes[i]);
        total += acc * (0.5 * h);
    }
    return total;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

cplx integrate_panels(const std::function<cplx(double)>& f, double a, double b, int panels, int order) {
    return panel_sum<std::function<cplx(double)>, cplx>(f, a, b, panels, order);
}

double integrate_panels_real(const std::function<double(double)>& f, double a, double b, int panels, int order) {
    return panel_sum<std::function<double(double)>, double>(f, a, b, panels, order);
}

cplx real_line_integral(const std::function<cplx(double)>& f, double center, const LineOptions& opt) {
    const GaussRule& g = gauss_legendre(opt.order);
    const double h = opt.panel_width;
    double peak = 0.0;
    cplx total = 0.0;
    for (int dir : {1, -1}) {
        int quiet = 0;
        for (int k = 0;; ++k) {
            if (k >= opt.max_panels) throw TailError("line integral: integrand did not decay");
            const double lo = center + dir * k * h;
            const double mid = lo + dir * 0.5 * h;
            cplx acc = 0.0;
            double local = 0.0;
            for (int i = 0; i < opt.order; ++i) {
                const cplx v = f(mid + 0.5 * h * g.nodes[i]);
                acc += g.weights[i] * v;
                local = std::max(local, std::abs(v));
            }
            total += acc * (0.5 * h);
            peak = std::max(peak, local);
            quiet = (local <= opt.rel_cutoff * peak) ? quiet + 1 : 0;
            if (k + 1 >= opt.min_panels && quiet >= 2) break;
        }
    }
    return total;
}

cplx vertical_line_integral(const std::function<cplx(cplx)>& f, double sigma, double center, const LineOptions& opt) {
    const cplx I(0.0, 1.0);
    return I * real_line_integral([&](double t) { return f(cplx(sigma, t)); }, center, opt);
}

} // namespace heckekit
