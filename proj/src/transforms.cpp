#include "heckekit/transforms.hpp"
#include "heckekit/error.hpp"
#include "heckekit/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace heckekit {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

double support_radius(const WeightSpec& h) {
    return h.family == WeightFamily::GAUSSIAN_T ? 9.0 * h.T : h.K + 9.0 * h.G;
}

// int f(r) dr over the real support of the weight.
cplx weight_integral(const std::function<cplx(double)>& f, const WeightSpec& h) {
    const double R = support_radius(h);
    const double width = std::min(1.0, 0.5 * h.decay_scale());
    const int panels = std::max(8, static_cast<int>(std::ceil(2.0 * R / width)));
    return integrate_panels(f, -R, R, panels, 20);
}

double weight_integral_real(const std::function<double(double)>& f, const WeightSpec& h) {
    const double R = support_radius(h);
    const double width = std::min(1.0, 0.5 * h.decay_scale());
    const int panels = std::max(8, static_cast<int>(std::ceil(2.0 * R / width)));
    return integrate_panels_real(f, -R, R, panels, 20);
}

// Panels on [a, b] refined geometrically toward both ends.
double graded_integral(const std::function<double(double)>& f, double a, double b, double finest) {
    std::vector<double> cuts{a, b};
    const double half = 0.5 * (b - a);
    for (double e = 0.25 * half; e > finest; e *= 0.5) {
        cuts.push_back(a + e);
        cuts.push_back(b - e);
    }
    cuts.push_back(a + 0.5 * half);
    cuts.push_back(b - 0.5 * half);
    cuts.push_back(a + finest);
    cuts.push_back(b - finest);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] <= cuts[i]) continue;
        total += integrate_panels_real(f, cuts[i], cuts[i + 1], 1, 20);
    }
    return total;
}

double softplus(double y) { return y > 0.0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y)); }

struct Families {
    double left;   // rightmost pole of Gamma(s+1-w-z) Gamma(s+1-v-w) g*(s,w)
    double right;  // leftmost pole of the xi-dependent factors
};

double left_family(const FourTuple& p) {
    return std::max({(p.w + p.z - 1.0).real(), (p.v + p.w - 1.0).real(), 0.0});
}

double midline(const Families& f, const char* what) {
    if (!(f.right - f.left > 1e-6)) throw PathError(std::string(what) + ": pole families are not separated");
    return 0.5 * (f.left + f.right);
}

// Gamma(A+xi-s) Gamma(A-xi-s) Gamma(s+1-w-z) Gamma(s+1-v-w) g*(s,w), as a log plus g*.
cplx phi_core(cplx s, cplx xi, const FourTuple& p, const WeightSpec& g) {
    const cplx A = 0.5 * (p.sum() - 1.0);
    const cplx lg = log_gamma(A + xi - s) + log_gamma(A - xi - s) + log_gamma(s + 1.0 - p.w - p.z) +
                    log_gamma(s + 1.0 - p.v - p.w);
    return std::exp(lg) * gstar(s, p.w, g);
}

// The two contour integrals shared by Phi and [g].
cplx phi_integral(Sign sign, cplx xi, const FourTuple& p, const WeightSpec& g) {
    const double sigma = phi_path(xi, p);
    const cplx U = p.sum();
    if (sign == Sign::PLUS)
        return vertical_line_integral(
            [&](cplx s) { return std::sin(0.5 * kPi * (U - 2.0 * s)) * phi_core(s, xi, p, g); }, sigma);
    return vertical_line_integral(
        [&](cplx s) { return std::cos(kPi * (p.w + 0.5 * (p.v + p.z) - s)) * phi_core(s, xi, p, g); }, sigma);
}

cplx r_line_ratio(cplx s, double rho, double y) {
    // Gamma(s + i r) / Gamma(1 - s + i r) at r = rho - i y
    const cplx ir(y, rho);
    return std::exp(log_gamma(s + ir) - log_gamma(1.0 - s + ir));
}

} // namespace

WeightSpec WeightSpec::gaussian_t(double T) {
    if (!(T > 0.0)) throw InvalidParameters("gaussian_t: T must be positive");
    WeightSpec w;
    w.family = WeightFamily::GAUSSIAN_T;
    w.T = T;
    return w;
}

WeightSpec WeightSpec::gaussian_kg(double K, double G) {
    if (!(K > 0.0 && G > 0.0)) throw InvalidParameters("gaussian_kg: K and G must be positive");
    WeightSpec w;
    w.family = WeightFamily::GAUSSIAN_KG;
    w.K = K;
    w.G = G;
    return w;
}

cplx WeightSpec::operator()(cplx r) const {
    if (family == WeightFamily::GAUSSIAN_T) return scale * std::exp(-(r / T) * (r / T));
    const cplx a = (r - K) / G, b = (r + K) / G;
    return scale * (r * r + 0.25) * (std::exp(-a * a) + std::exp(-b * b));
}

double WeightSpec::strip_half_width() const { return std::numeric_limits<double>::infinity(); }

std::vector<double> WeightSpec::centers() const {
    if (family == WeightFamily::GAUSSIAN_T) return {0.0};
    return {-K, K};
}

cplx ghat(const WeightSpec& g, double x) {
    if (g.family != WeightFamily::GAUSSIAN_T) throw FamilyError("ghat: closed form needs GAUSSIAN_T");
    return g.scale * g.T * std::sqrt(kPi) * std::exp(-0.25 * g.T * g.T * x * x);
}

cplx ghat_quadrature(const WeightSpec& g, double x) {
    if (g.family != WeightFamily::GAUSSIAN_T) throw FamilyError("ghat_quadrature: needs GAUSSIAN_T");
    return weight_integral([&](double t) { return g(cplx(t, 0.0)) * std::exp(I * (x * t)); }, g);
}

cplx gstar(cplx s, cplx w, const WeightSpec& g, GStarRep rep) {
    if (rep == GStarRep::X_INTEGRAL) {
        if (!(w.real() > s.real() && s.real() > 0.0)) throw DomainError("gstar: X_INTEGRAL needs Re w > Re s > 0");
        auto f = [&](double y) {
            const double L = softplus(y);
            return ghat(g, L) * std::exp(s * y - w * L);
        };
        LineOptions opt;
        opt.max_panels = 20000;
        return real_line_integral(f, 0.0, opt);
    }
    const double eta = std::max(0.0, 0.75 - (w - s).real());
    auto f = [&](double t) {
        const cplx tc(t, -eta);
        return std::exp(log_gamma(w - s + I * tc) - log_gamma(w + I * tc)) * g(tc);
    };
    return cgamma(s) * real_line_integral(f, 0.0);
}

double xi_path(cplx xi, const FourTuple& p) {
    const cplx A = 0.5 * (p.sum() - 1.0);
    return midline({left_family(p), (xi + A).real()}, "xi_transform");
}

cplx xi_transform(cplx xi, const FourTuple& p, const WeightSpec& g, std::optional<double> path) {
    const double sigma = path ? *path : xi_path(xi, p);
    const cplx A = 0.5 * (p.sum() - 1.0);
    const cplx B = 0.5 * (3.0 - p.sum());
    auto f = [&](cplx s) {
        const cplx lg = log_gamma(xi + A - s) - log_gamma(xi + B + s) + log_gamma(s + 1.0 - p.w - p.z) +
                        log_gamma(s + 1.0 - p.v - p.w);
        return std::exp(lg) * gstar(s, p.w, g);
    };
    return vertical_line_integral(f, sigma) / (2.0 * kPi * I);
}

double phi_path(cplx xi, const FourTuple& p) {
    const cplx A = 0.5 * (p.sum() - 1.0);
    return midline({left_family(p), A.real() - std::abs(xi.real())}, "phi_pm");
}

cplx phi_pm(Sign sign, cplx xi, const FourTuple& p, const WeightSpec& g, PhiMethod method) {
    const cplx E = p.w - p.u - 2.0;
    if (method == PhiMethod::DIRECT) {
        const cplx pre = std::exp(E * std::log(2.0 * kPi));
        if (sign == Sign::PLUS)
            return -I * pre * std::cos(0.5 * kPi * (p.v - p.z)) * phi_integral(sign, xi, p, g);
        return I * pre * std::cos(kPi * xi) * phi_integral(sign, xi, p, g);
    }
    const cplx sn = std::sin(kPi * xi);
    if (std::abs(sn) < 1e-12) throw SingularParameter("phi_pm: sin(pi xi) vanishes");
    const cplx pre = std::exp((p.w - p.u) * std::log(2.0 * kPi)) / (4.0 * sn);
    const cplx xp = xi_transform(xi, p, g), xm = xi_transform(-xi, p, g);
    if (sign == Sign::PLUS) return -pre * std::cos(0.5 * kPi * (p.v - p.z)) * (xp - xm);
    const cplx h = 0.5 * (p.u - p.w);
    return pre * (std::sin(kPi * (h + xi)) * xp - std::sin(kPi * (h - xi)) * xm);
}

cplx g_bracket(Sign sign, double r, const FourTuple& p, const WeightSpec& g) {
    const cplx xi(0.0, r);
    const cplx J = phi_integral(sign, xi, p, g);
    if (sign == Sign::PLUS) return std::cos(0.5 * kPi * (p.v - p.z)) * J / (4.0 * kPi * I);
    return -std::cosh(kPi * r) * J / (4.0 * kPi * I);
}

cplx g_bracket_at_half(Sign sign, double r, const WeightSpec& g) {
    const FourTuple p = FourTuple::half();
    if (sign == Sign::PLUS && r == 0.0) throw SingularParameter("g_bracket_at_half: r = 0");
    const cplx xp = xi_transform(cplx(0.0, r), p, g), xm = xi_transform(cplx(0.0, -r), p, g);
    if (sign == Sign::PLUS) return -kPi / (4.0 * I * std::sinh(kPi * r)) * (xp - xm);
    return 0.25 * kPi * (xp + xm);
}

double g_bracket_combined(int eps, double r, const WeightSpec& g) {
    if (eps != 1 && eps != -1) throw InvalidParameters("g_bracket_combined: eps must be +1 or -1");
    if (r == 0.0) throw SingularParameter("g_bracket_combined: r = 0");
    const cplx x = xi_transform(cplx(0.0, r), FourTuple::half(), g);
    return 0.5 * kPi * ((static_cast<double>(eps) + I / std::sinh(kPi * r)) * x).real();
}

cplx bessel_kernel(Sign sign, double x, const WeightSpec& h) {
    if (!(x > 0.0)) throw DomainError("bessel_kernel: x must be positive");
    if (sign == Sign::MINUS) {
        const double v = weight_integral_real(
            [&](double r) { return r * h(r) * std::sinh(kPi * r) * bessel_k_imag(r, x); }, h);
        return 4.0 / (kPi * kPi) * v;
    }
    const cplx v = weight_integral(
        [&](double r) { return r * h(r) / std::cosh(kPi * r) * bessel_j(cplx(0.0, 2.0 * r), x); }, h);
    return 2.0 * I / kPi * v;
}

cplx hat_phi(Sign sign, double r, const std::function<double(double)>& phi) {
    LineOptions opt;
    opt.panel_width = 0.5;
    if (sign == Sign::MINUS) {
        auto f = [&](double y) {
            const double x = std::exp(y);
            const double v = phi(x);
            return cplx(v == 0.0 ? 0.0 : bessel_k_imag(r, x) * v, 0.0);
        };
        return 2.0 * std::cosh(kPi * r) * real_line_integral(f, 0.0, opt);
    }
    if (r == 0.0) throw SingularParameter("hat_phi: r = 0 for the plus sign");
    auto f = [&](double y) {
        const double x = std::exp(y);
        const double v = phi(x);
        if (v == 0.0) return cplx(0.0);
        return (bessel_j(cplx(0.0, 2.0 * r), x) - bessel_j(cplx(0.0, -2.0 * r), x)) * v;
    };
    return kPi * I / (2.0 * std::sinh(kPi * r)) * real_line_integral(f, 0.0, opt);
}

cplx hhat(cplx s, const WeightSpec& h) {
    const double y = -std::min(0.0, s.real() - 0.5);
    return weight_integral(
        [&](double rho) {
            const cplx r(rho, -y);
            return r * h(r) * r_line_ratio(s, rho, y);
        },
        h);
}

HHatDerivatives hhat_derivatives_at_half(const WeightSpec& h) {
    HHatDerivatives d;
    d.d1 = 2.0 * weight_integral(
                     [&](double r) { return r * h(r) * digamma(cplx(0.5, r)); }, h);
    d.d2 = 4.0 * weight_integral(
                     [&](double r) {
                         const cplx p = digamma(cplx(0.5, r));
                         return r * h(r) * p * p;
                     },
                     h);
    return d;
}

cplx psi_mellin_barnes(double x, const WeightSpec& h, double alpha) {
    if (!(x > 0.0)) throw DomainError("psi_mellin_barnes: x must be positive");
    if (!(alpha > -1.5 && alpha < 1.5)) throw DomainError("psi_mellin_barnes: alpha outside (-3/2, 3/2)");
    const double lx = std::log(0.5 * x);
    auto f = [&](cplx s) { return hhat(s, h) / std::cos(kPi * s) * std::exp(-2.0 * s * lx); };
    return vertical_line_integral(f, alpha) / (kPi * kPi);
}

cplx psi_kernel(Sign sign, double x, const WeightSpec& h, double beta) {
    if (!(x > 0.0)) throw DomainError("psi_kernel: x must be positive");
    const double lx = std::log(x);
    auto f = [&](cplx s) {
        const cplx g2 = std::exp(2.0 * log_gamma(0.5 - s));
        const cplx base = g2 * hhat(s, h) * std::exp(s * lx);
        if (sign == Sign::PLUS) return base * std::tan(kPi * s);
        return base / std::cos(kPi * s);
    };
    return vertical_line_integral(f, beta);
}

cplx psi_plus_double_integral(double x, const WeightSpec& h) {
    if (!(x > 0.0)) throw DomainError("psi_plus_double_integral: x must be positive");
    auto F = [&](double L) {
        return weight_integral_real([&](double r) { return r * h(r) * std::tanh(kPi * r) * std::cos(r * L); }, h);
    };
    auto outer = [&](double th) {
        const double sn = std::sin(th), cs = std::cos(th);
        const double y = sn * sn, y1 = cs * cs;
        if (y == 0.0 || y1 == 0.0) return 0.0;
        const double L = std::log(y * y1 / (x + y));
        return 2.0 / std::sqrt(1.0 + y / x) * F(L);
    };
    return 2.0 * kPi * graded_integral(outer, 0.0, 0.5 * kPi, 1e-9);
}

PsiRegime psi_minus_regime_of(double x) {
    if (!(x > 0.0)) throw DomainError("psi_minus_regime_of: x must be positive");
    if (std::abs(x - 1.0) < 1e-12) return PsiRegime::AT_ONE;
    return x > 1.0 ? PsiRegime::ABOVE_ONE : PsiRegime::BELOW_ONE;
}

cplx psi_minus_above_one(double x, const WeightSpec& h) {
    if (!(x >= 1.0)) throw DomainError("psi_minus_above_one: x must be at least 1");
    x = std::max(x, 1.0 + 1e-12);
    auto S = [&](double L) {
        return weight_integral_real([&](double r) { return r * h(r) / std::cosh(kPi * r) * std::sin(r * L); }, h);
    };
    const double d = x - 1.0;
    auto outer = [&](double th) {
        const double sn = std::sin(th), cs = std::cos(th);
        const double y = sn * sn, y1 = cs * cs;
        if (y == 0.0) return 0.0;
        const double xmy = d + y1;  // x - y
        if (xmy <= 0.0) return 0.0;
        const double L = std::log(y * y1 / xmy);
        return 2.0 * std::sqrt(x / xmy) * S(L);
    };
    const double finest = std::max(1e-12, 1e-3 * std::sqrt(d));
    return -2.0 * kPi * graded_integral(outer, 0.0, 0.5 * kPi, finest);
}

cplx psi_minus_regime(double x, const WeightSpec& h) {
    switch (psi_minus_regime_of(x)) {
    case PsiRegime::AT_ONE:
        return 2.0 * kPi * kPi * weight_integral_real(
                                     [&](double r) {
                                         const double c = std::cosh(kPi * r);
                                         return r * h(r) * std::sinh(kPi * r) / (c * c);
                                     },
                                     h);
    case PsiRegime::ABOVE_ONE:
        return psi_minus_above_one(x, h);
    case PsiRegime::BELOW_ONE:
        break;
    }
    const double beta = 0.0;
    const double lx = std::log(x);
    auto M = [&](double lyy) {
        // int x^s (y(y+1))^{s-1} Gamma(1/2-s)^2 / (Gamma(1-2s) cos(pi s)) ds
        auto f = [&](cplx s) {
            const cplx lg = 2.0 * log_gamma(0.5 - s) - log_gamma(1.0 - 2.0 * s);
            return std::exp(lg + s * lx + (s - 1.0) * lyy) / std::cos(kPi * s);
        };
        return vertical_line_integral(f, beta);
    };
    auto inner = [&](double ell) {
        return I * weight_integral_real([&](double r) { return r * h(r) * std::sin(r * ell); }, h);
    };
    auto f = [&](double om) {
        const double lyy = om + softplus(om);  // log(y(y+1)), y = e^om
        const double ell = -softplus(-om);     // log(y/(1+y))
        return std::exp(om) * M(lyy) * inner(ell);
    };
    LineOptions opt;
    opt.rel_cutoff = 1e-14;
    return real_line_integral(f, 0.0, opt);
}

MomentResult moment_quadrature(const WeightSpec& g, const std::vector<cplx>& alpha, double height, double tol) {
    if (g.family != WeightFamily::GAUSSIAN_T) throw FamilyError("moment_quadrature: needs GAUSSIAN_T");
    if (alpha.empty()) throw InvalidParameters("moment_quadrature: empty coefficient list");
    const int n = static_cast<int>(alpha.size());
    double l1 = 0.0;
    for (int k = 1; k <= n; ++k) l1 += std::abs(alpha[k - 1]) / std::sqrt(static_cast<double>(k));
    auto bound = [&](double t) {
        const double z = 0.732 * std::pow(t, 1.0 / 6.0) * std::log(t);
        return z * z * z * z * l1 * l1 * std::abs(g(t));
    };
    MomentResult res;
    double cut = std::max(3.0, 3.0 * g.T);
    while (cut < height && bound(cut) > 1e-3 * tol) cut += 1.0;
    cut = std::min(cut, height);
    // two-sided tail, bound(t) decays at least as fast as exp(-(t/T)^2) t
    res.tail_bound = 2.0 * integrate_panels_real(bound, cut, cut + 12.0 * g.T + 10.0, 64, 20);
    res.cutoff = cut;
    if (res.tail_bound > tol) throw TailError("moment_quadrature: tail bound exceeds tolerance below the height cap");

    auto z4 = [](double t) {
        const double a = std::norm(zeta(cplx(0.5, t)));
        return a * a;
    };
    auto A = [&](double t) {
        cplx s = 0.0;
        for (int k = 1; k <= n; ++k) s += alpha[k - 1] * std::exp(-cplx(0.5, t) * std::log(static_cast<double>(k)));
        return s;
    };
    const int direct_panels = static_cast<int>(std::ceil(2.0 * cut));
    res.direct = integrate_panels_real([&](double t) { return z4(t) * std::norm(A(t)) * g(t); }, -cut, cut,
                                       direct_panels, 20);

    // Rearranged side on an independent rule: half-width panels, 14 nodes.
    const int rp = static_cast<int>(std::ceil(4.0 * cut));
    double total = 0.0;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const double lr = std::log(static_cast<double>(b) / a);
            const cplx I2 = integrate_panels(
                [&](double t) { return z4(t) * std::exp(I * (t * lr)) * g(t); }, -cut, cut, rp, 14);
            for (int c = 1; a * c <= n && b * c <= n; ++c) {
                const cplx coef = alpha[a * c - 1] * std::conj(alpha[b * c - 1]) /
                                  (c * std::sqrt(static_cast<double>(a) * b));
                total += (coef * I2).real();
            }
        }
    res.rearranged = total;
    return res;
}

} // namespace heckekit
