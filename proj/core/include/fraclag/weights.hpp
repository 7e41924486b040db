#ifndef FRACLAG_WEIGHTS_HPP
#define FRACLAG_WEIGHTS_HPP

#include <string>
#include <vector>

#include "fraclag/laguerre.hpp"
#include "fraclag/semigroup.hpp"

namespace fraclag {

/// ln w_{alpha,s}^delta(r) for s = signed_sigma in (-1,1):
///   w = c_{alpha,s} (delta+r^2)^{-nu} K_{nu}((delta+r^2)/2),
///   nu = (alpha+1+s)/2,  c_{alpha,s} = sqrt(pi) 2^{1-s} / Gamma((alpha+2+s)/2);
/// the Macdonald order enters through |nu| (K_nu = K_{-nu}).
double weight_ln(const LaguerreParams& p, const FracParams& frac, double signed_sigma,
                 double r);

double weight(const LaguerreParams& p, const FracParams& frac, double signed_sigma,
              double r);

/// Ground-state weight as a positive Gaussian-decay profile.
struct WeightProfile {
  LaguerreParams params;
  FracParams frac;
  double signed_sigma;
  double operator()(double r) const { return weight(params, frac, signed_sigma, r); }
  RadialFunction to_radial() const;
};

WeightProfile make_weight(const LaguerreParams& p, const FracParams& frac,
                          double signed_sigma);

/// delta^sigma Gamma((alpha+2+sigma)/2) / Gamma((alpha+2-sigma)/2).
double constant_B(const LaguerreParams& p, const FracParams& frac);

/// (4/delta)^sigma B^2 = (4 delta)^sigma (Gamma_+/Gamma_-)^2; the constant of
/// the coefficient relation between the two weights and of the kernel
/// convolution identity.
double connecting_constant(const LaguerreParams& p, const FracParams& frac);

/// (16/delta)^sigma B^2: the constant under which the fractional operator
/// carries w_{-sigma} onto w_{+sigma}; this one drives the sharp middle term
/// of the Hardy chain (equality at f = w_{-sigma}).
double eigen_constant(const LaguerreParams& p, const FracParams& frac);

/// n-th coefficient of w_{alpha,s}^delta against the unnormalized basis phi_n:
///   hat c_n(s) = 2 pi 2^{-s} e^{-delta/2} / Gamma((alpha+2+s)/2)^2
///                * int_0^inf e^{-delta t} t^{b-1} (1+t)^{-c} dt,
///   b = w + (1+s)/2, c = w + (1-s)/2, w = n + (alpha+1)/2.
/// The integral is evaluated peak-normalized so relative accuracy is uniform
/// in n (the raw integrand is globally bounded by 1 since b - c = s).
double weight_coefficient(const LaguerreParams& p, const FracParams& frac,
                          double signed_sigma, int n);

struct EigenIdentityReport {
  std::vector<double> lhs;  // multiplier(sigma, n) * hat c_n(-sigma)
  std::vector<double> rhs;  // eigen_constant * hat c_n(+sigma)
  double max_rel_err = 0.0;
};

/// Term-by-term check that the diagonal action of the fractional operator maps
/// the coefficients of w_{-sigma} onto eigen_constant times those of w_{+sigma}.
EigenIdentityReport eigen_identity_check(const LaguerreParams& p, const FracParams& frac,
                                         int count);

/// Closed form of the kernel inverting the fractional operator away from the
/// origin (requires alpha > sigma):
///   2 Gamma((alpha-sigma)/2 + 1) / (sqrt(pi) Gamma(sigma) Gamma(alpha+1))
///   * r^{-(alpha+1-sigma)} K_{(alpha+1-sigma)/2}(r^2/2).
double fundamental_solution(const LaguerreParams& p, double sigma, double r);

/// Heat-time route to the same kernel:
///   (2^{sigma+1}/Gamma(sigma)) int_0^inf q_t(r) (sinh 2t)^{sigma-1} dt.
double fundamental_solution_integral(const LaguerreParams& p, double sigma, double r);

/// Partial sum of the inverse-symbol series (2/Gamma(alpha+1)) sum_n
/// S_n^{alpha,-sigma} phi_n(r).  Diagnostic only: the series does not converge
/// pointwise (partial sums drift and oscillate as terms grow), so only finite
/// truncations are meaningful.
double fundamental_solution_series(const LaguerreParams& p, double sigma, double r,
                                   int terms);

/// Spectral route to the ground-state defect
///   <L_{alpha,sigma} f, f> - eigen_constant * int f^2 (w_+/w_-) dmu;
/// nonnegative up to analysis truncation.
double ground_state_residual_spectral(const RadialFunction& f, const LaguerreParams& p,
                                      const FracParams& frac, int truncation = 96,
                                      int rule_nodes = 160);

struct GroundStateResidual {
  double spectral;         // truncated-form route
  double double_integral;  // (a_sigma/2) iint (g(r)-g(s))^2 K w_- w_- dmu dmu
  double err_estimate;     // extrapolation residue of the kernel route
};

/// Both routes of the defect with g = f / w_{-sigma}; they agree on bump
/// profiles, and for f = w_{-sigma} itself the kernel route vanishes
/// identically (g is constant).
GroundStateResidual ground_state_residual(const RadialFunction& f, const LaguerreParams& p,
                                          const FracParams& frac);

struct HardyReport {
  double alpha = 0.0;
  double sigma = 0.0;
  double delta = 0.0;
  std::string f_id;
  double lhs_form = 0.0;       // <L_{alpha,sigma} f, f>, spectral route
  double middle_term = 0.0;    // eigen_constant * int f^2 (w_+/w_-) dmu
  double rhs_potential = 0.0;  // constant_B * int f^2 (delta+r^2)^{-sigma} dmu
  double ground_state_residual = 0.0;  // lhs_form - middle_term
  double gap1 = 0.0;                   // lhs_form - middle_term
  double gap2 = 0.0;                   // middle_term - rhs_potential
  bool link1_pass = false;
  bool link2_pass = false;
  bool degraded = false;
  std::string note;
  int truncation = 0;
  int quad_nodes = 0;
  double tail_energy = 0.0;  // relative Parseval tail of the analysis step
  double tol = 0.0;          // verdict slack
};

/// Evaluates the three-term chain lhs >= middle >= rhs for f and issues a
/// per-link verdict with 1e-8 relative slack; accuracy failures set the
/// degraded flag instead of failing.
HardyReport hardy_verdict(const RadialFunction& f, const LaguerreParams& p,
                          const FracParams& frac, const std::string& f_id,
                          int truncation = 96, int quad_nodes = 160);

}  // namespace fraclag

#endif
