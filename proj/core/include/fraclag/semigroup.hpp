#ifndef FRACLAG_SEMIGROUP_HPP
#define FRACLAG_SEMIGROUP_HPP

#include <functional>
#include <vector>

#include "fraclag/laguerre.hpp"

namespace fraclag {

/// Parameters of the conformally invariant fractional operator and its
/// Hardy-weight family.
struct FracParams {
  FracParams(double sigma_, double delta_) : sigma(sigma_), delta(delta_) {
    require(sigma_ > 0.0 && sigma_ < 1.0, "FracParams: requires 0 < sigma < 1");
    require(delta_ > 0.0, "FracParams: requires delta > 0");
  }
  double sigma;
  double delta;
};

/// Spectral symbol 4^sigma Gamma(w + (1+sigma)/2) / Gamma(w + (1-sigma)/2)
/// with w = n + (2 alpha + 2)/4, evaluated in log space.
/// Negative sigma gives the inverse family used by the fundamental solution.
double multiplier(const LaguerreParams& p, double sigma, int n);

struct MultiplierTable {
  LaguerreParams params;
  double sigma;
  std::vector<double> values;
};

MultiplierTable make_multiplier_table(const LaguerreParams& p, double sigma, int count);

/// Heat kernel q_t(r) = (1/(2^alpha Gamma(alpha+1))) (sinh 2t)^{-alpha-1}
/// e^{-(coth 2t) r^2 / 2}, computed in log space.
double heat_kernel(const LaguerreParams& p, double t, double r);

/// Eigenfunction-series route to q_t(r): (2/Gamma(alpha+1)) sum e^{-t lambda_n} phi_n(r).
double heat_kernel_series(const LaguerreParams& p, double t, double r, int terms);

/// q_t as a radial profile (for convolution and analysis).
RadialFunction make_heat_profile(const LaguerreParams& p, double t);

/// Action of the heat semigroup on the constant 1:
/// (cosh 2t)^{-(alpha+1)} e^{-(tanh 2t) r^2 / 2}; lies in (0, 1].
double heat_semigroup_one(const LaguerreParams& p, double t, double r);

/// Translated heat kernel: e^{-(coth 2t /2)(r^2+s^2)} (rs)^{-alpha}
/// I_alpha(rs / sinh 2t) / sinh 2t with the removable singularity at rs = 0
/// evaluated through the entire scaled Bessel series.
double translated_heat_kernel(const LaguerreParams& p, double t, double r, double s);

/// coeffs[n] *= e^{-t (4n + 2 alpha + 2)}.
SpectralVector apply_semigroup(SpectralVector v, double t);

enum class FracKind { conformal, pure };

/// Diagonal action of the fractional operator: conformal uses the Gamma-ratio
/// symbol, pure uses (4n + 2 alpha + 2)^sigma.
SpectralVector apply_fractional(SpectralVector v, double sigma, FracKind kind);

/// sup_n (4n+2alpha+2)^{-sigma} multiplier(n); the sequence tends to 1, and the
/// tail beyond n_max must already sit within 1e-6 of that limit.
double u_sigma_norm(const LaguerreParams& p, double sigma, int n_max);

/// Zero-mode floor of the symbol: 4^sigma Gamma((1+sigma)/2)/Gamma((1-sigma)/2).
double e_sigma(double sigma);

/// Constant in front of the difference term of the pointwise representation:
/// 2^{sigma+1} / |Gamma(-sigma)|.
double frac_rep_constant(double sigma);

/// Integrates h(t) / (sinh 2t)^{sigma+1} dt over (0, inf) through xi = tanh t,
/// split at xi = 1/2.  p0: leading power of h at t ~ 0 (h ~ c t^{p0});
/// p1: leading power of (1-xi) contributed by h as xi -> 1.  sigma may be
/// negative (used with sigma = -s for kernels against (sinh 2t)^{s-1}).
double sinh_power_integral(const std::function<double(double)>& h, double sigma, double p0,
                           double p1, double tol);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Subordination identity behind the integral representation:
/// 2^sigma |Gamma(-sigma)| Gamma(lam/4 + (1+sigma)/2)/Gamma(lam/4 + (1-sigma)/2)
/// against twice the two Meda-substituted integrals.  Requires lam + 2 sigma > -2.
IdentityCheck numerical_identity_check(double sigma, double lam);

/// Off-diagonal kernel K(r,s) = int_0^inf T_r q_t(s) dt / (sinh 2t)^{sigma+1}.
double frac_kernel(const LaguerreParams& p, double sigma, double r, double s);

/// F(r) = int_0^inf (1 - T_t 1(r)) dt / (sinh 2t)^{sigma+1}; nonnegative.
double f_alpha_sigma(const LaguerreParams& p, double sigma, double r);

/// Pointwise action through the kernel representation: difference integral with
/// symmetric diagonal exclusion plus Richardson extrapolation in the excluded
/// radius, plus the zero-order term f(r) (E_sigma + a_sigma F(r)).
double apply_fractional_pointwise(const RadialFunction& f, const LaguerreParams& p,
                                  double sigma, double r);

/// Spectral quadratic form: sum of multiplier * coeff^2.
double quadratic_form(const SpectralVector& v, double sigma, FracKind kind);

/// Symmetrized kernel double integral
///   int int (g(r)-g(s))^2 W(r) W(s) K(r,s) dmu(s) dmu(r)
/// for a profile g vanishing outside [g_lo, g_hi] (g_hi may be infinite) and a
/// smooth positive factor W.  The diagonal strip |s-r| < h is excluded and its
/// contribution recovered by three elimination stages in h over the leading
/// strip exponents; abs_err_estimate reports the size of the final correction.
EvalResult symmetric_kernel_form(const std::function<double(double)>& g, double g_lo,
                                 double g_hi, const std::function<double(double)>& W,
                                 const LaguerreParams& p, double sigma);

/// Kernel route to the same form: (a_sigma/2) double integral of
/// (f(r)-f(s))^2 K(r,s) plus the potential term int f^2 (E_sigma + a_sigma F).
double quadratic_form_integral(const RadialFunction& f, const LaguerreParams& p,
                               double sigma);

}  // namespace fraclag

#endif
