#ifndef FRACLAG_LAGUERRE_HPP
#define FRACLAG_LAGUERRE_HPP

#include <functional>
#include <limits>
#include <vector>

#include "fraclag/common.hpp"
#include "fraclag/quadrature.hpp"

namespace fraclag {

/// Order of the radial measure dmu_alpha(r) = r^{2 alpha + 1} dr on (0,inf).
struct LaguerreParams {
  explicit LaguerreParams(double a) : alpha(a) {
    require(a > -0.5, "LaguerreParams: requires alpha > -1/2");
  }
  double alpha;
};

enum class SmoothnessTag { bump, schwartz_like, raw_samples };

/// A radial profile on (0,inf) with evaluation and quadrature metadata.
struct RadialFunction {
  std::function<double(double)> evaluator;
  double support_lo = 0.0;
  double support_hi = std::numeric_limits<double>::infinity();
  SmoothnessTag smoothness_tag = SmoothnessTag::schwartz_like;

  double operator()(double r) const { return evaluator(r); }
  bool bounded_support() const { return std::isfinite(support_hi); }
};

/// exp(-1/((r-a)(b-r))) on (a,b), zero outside; C_c^infinity test profile.
RadialFunction make_bump(double a, double b);

/// (sum_k c[k] r^{2k}) e^{-r^2/2}; finite Laguerre expansion at every alpha.
RadialFunction make_poly_gauss(const std::vector<double>& c);

/// Truncated coefficient sequence against the orthonormal basis psi_n^alpha.
struct SpectralVector {
  LaguerreParams params;
  std::vector<double> coeffs;
  int truncation() const { return static_cast<int>(coeffs.size()); }
};

/// phi_n^alpha(r) = L_n^alpha(r^2) e^{-r^2/2}.
double eval_phi(const LaguerreParams& p, int n, double r);

/// ||phi_n||^2 = Gamma(n+alpha+1) / (2 n!).
double phi_norm2(const LaguerreParams& p, int n);

/// phi_n^alpha(0) = (alpha+1)_n / n! (rising factorial).
double phi_at_zero(const LaguerreParams& p, int n);

/// psi_n^alpha = (2 n! / Gamma(n+alpha+1))^{1/2} phi_n^alpha.
double eval_psi(const LaguerreParams& p, int n, double r);

/// Eigenvalue of the Laguerre operator on phi_n: 4n + 2 alpha + 2.
double eigenvalue(const LaguerreParams& p, int n);

/// Coefficients a_n = <f, psi_n> for n < N using the supplied radial rule.
/// If tail_threshold is finite, throws accuracy_error when the Parseval
/// tail (||f||^2 - sum a_n^2) / ||f||^2 exceeds it.
SpectralVector analyze(const RadialFunction& f, const LaguerreParams& p, int N,
                       const QuadratureRule& rule,
                       double tail_threshold = std::numeric_limits<double>::infinity());

/// sum_n coeffs[n] psi_n^alpha(r).
double synthesize(const SpectralVector& v, double r);

/// Laguerre translation T_r^alpha f(s): the theta-integral against
/// sin^{2 alpha} with the entire Bessel-J factor j_nu(z) = J_nu(z) z^{-nu},
/// nu = alpha - 1/2.
double translate(const LaguerreParams& p, const RadialFunction& f, double r, double s,
                 int n_theta = 96);

/// Laguerre convolution (f *_alpha g)(r) = int T_r f(s) g(s) dmu_alpha(s).
double convolve(const LaguerreParams& p, const RadialFunction& f, const RadialFunction& g,
                double r, int n_nodes = 96);

}  // namespace fraclag

#endif
