#pragma once

#include "heckekit/arith.hpp"
#include "heckekit/quadrature.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace heckekit {

enum class WeightFamily { GAUSSIAN_T, GAUSSIAN_KG };

// GAUSSIAN_T: g(t) = exp(-(t/T)^2).
// GAUSSIAN_KG: h(r) = (r^2 + 1/4)(exp(-((r-K)/G)^2) + exp(-((r+K)/G)^2)).
// Both are entire; `scale` multiplies the whole weight.
struct WeightSpec {
    WeightFamily family = WeightFamily::GAUSSIAN_T;
    double T = 1.0;
    double K = 1.0, G = 1.0;
    double scale = 1.0;

    static WeightSpec gaussian_t(double T);
    static WeightSpec gaussian_kg(double K, double G);

    cplx operator()(cplx r) const;
    double operator()(double r) const { return (*this)(cplx(r, 0.0)).real(); }
    // Regular in every strip; reported as +inf.
    double strip_half_width() const;
    double decay_scale() const { return family == WeightFamily::GAUSSIAN_T ? T : G; }
    // Points where |weight| is concentrated on the real line.
    std::vector<double> centers() const;
};

struct FourTuple {
    cplx u{0.5}, v{0.5}, w{0.5}, z{0.5};
    static FourTuple half() { return {}; }
    cplx sum() const { return u + v + w + z; }
};

enum class Sign { PLUS, MINUS };
enum class GStarRep { X_INTEGRAL, T_INTEGRAL };
enum class PhiMethod { DIRECT, VIA_XI };

// Fourier transform int g(t) e^{ixt} dt. GAUSSIAN_T only (FamilyError otherwise).
cplx ghat(const WeightSpec& g, double x);
cplx ghat_quadrature(const WeightSpec& g, double x);

// Mellin transform g*(s, w). X_INTEGRAL needs Re w > Re s > 0 (DomainError otherwise).
// T_INTEGRAL lowers its t-line below the poles of Gamma(w - s + it) as needed.
cplx gstar(cplx s, cplx w, const WeightSpec& g, GStarRep rep = GStarRep::T_INTEGRAL);

// Abscissa midway between the two pole families of the Xi integrand; PathError if they overlap.
double xi_path(cplx xi, const FourTuple& p);
cplx xi_transform(cplx xi, const FourTuple& p, const WeightSpec& g, std::optional<double> path = std::nullopt);

// Abscissa for the Phi integrands, PathError if undrawable.
double phi_path(cplx xi, const FourTuple& p);
// Phi_{+-}(xi). VIA_XI throws SingularParameter at integer xi.
cplx phi_pm(Sign sign, cplx xi, const FourTuple& p, const WeightSpec& g, PhiMethod method);

// [g]_{+-}(r) from its own contour integral with the 1/(4 pi i) normalization.
cplx g_bracket(Sign sign, double r, const FourTuple& p, const WeightSpec& g);
// [g]_{+-}(r) at p_{1/2} through Xi(ir) and Xi(-ir). r = 0 is SingularParameter for PLUS.
cplx g_bracket_at_half(Sign sign, double r, const WeightSpec& g);
// (pi/2) Re{(eps + i / sinh(pi r)) Xi(ir)} at p_{1/2}.
double g_bracket_combined(int eps, double r, const WeightSpec& g);

// h_+(x), h_-(x): integrals of the weight against J_{2ir} and K_{2ir}.
cplx bessel_kernel(Sign sign, double x, const WeightSpec& h);
// Transforms of a smooth kernel phi on (0, inf).
cplx hat_phi(Sign sign, double r, const std::function<double(double)>& phi);

// hhat(s) = int r h(r) Gamma(s + ir) / Gamma(1 - s + ir) dr, continued to all s.
cplx hhat(cplx s, const WeightSpec& h);
struct HHatDerivatives {
    cplx d1, d2;  // hhat'(1/2), hhat''(1/2)
};
HHatDerivatives hhat_derivatives_at_half(const WeightSpec& h);

// psi(x) as the Mellin-Barnes integral of hhat(s)/cos(pi s) (x/2)^{-2s} along Re s = alpha.
cplx psi_mellin_barnes(double x, const WeightSpec& h, double alpha = 0.25);

// Psi_{+-}(1/2, 1/2; x; h) as contour integrals along Re s = beta.
cplx psi_kernel(Sign sign, double x, const WeightSpec& h, double beta = -1.0);
// Psi_+ by the double integral over y in (0,1) and r.
cplx psi_plus_double_integral(double x, const WeightSpec& h);
enum class PsiRegime { ABOVE_ONE, AT_ONE, BELOW_ONE };
PsiRegime psi_minus_regime_of(double x);
// Psi_- by the real-variable formula for the regime of x; |x - 1| < 1e-12 routes to AT_ONE.
cplx psi_minus_regime(double x, const WeightSpec& h);
// The x > 1 formula evaluated at any x >= 1 (at x = 1 it is the one-sided limit).
cplx psi_minus_above_one(double x, const WeightSpec& h);

struct MomentResult {
    double rearranged = 0;  // sum over (a,b,c) of alpha_ac conj(alpha_bc)/(c sqrt(ab)) I_2(g; b/a)
    double direct = 0;      // int |zeta(1/2+it)|^4 |A(1/2+it)|^2 g(t) dt
    double tail_bound = 0;  // analytic bound on the discarded |t| > cutoff part
    double cutoff = 0;
    double difference() const { return rearranged - direct; }
};

// alpha[0] is the coefficient of 1^{-s}. GAUSSIAN_T only.
MomentResult moment_quadrature(const WeightSpec& g, const std::vector<cplx>& alpha, double height = 400.0,
                               double tol = 1e-8);

} // namespace heckekit
