#ifndef FRACLAG_QUADRATURE_HPP
#define FRACLAG_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "fraclag/common.hpp"

namespace fraclag {

enum class DomainTag { radial_mu_alpha, angular_theta, meda_xi, generic_interval };

/// Fixed quadrature rule: sum_i weights[i] * f(nodes[i]) approximates the
/// integral of f against the measure named by domain_tag.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  DomainTag domain_tag = DomainTag::generic_interval;
};

/// Gauss rule for the radial measure r^{2 alpha + 1} dr on (0, inf),
/// built under x = r^2 from the generalized Gauss-Laguerre rule for
/// x^alpha e^{-x} dx. Weights absorb e^{+x_i}, so the rule is applied to
/// raw integrands with Gaussian decay: integrates r^{2k} e^{-r^2} exactly
/// for k <= 2 n_nodes - 1.
QuadratureRule radial_rule(double alpha, int n_nodes);

/// Gauss rule for int_0^pi f(theta) sin^{2 alpha}(theta) dtheta,
/// built from the symmetric Jacobi rule under x = cos(theta).
QuadratureRule angular_rule(double alpha, int n_nodes);

/// sum_i w_i f(x_i).
double apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f);

/// Meda substitution xi = tanh(t). Returns xi and dt/dxi = 1/(1 - xi^2);
/// with sinh(2t) = 2 xi / (1 - xi^2) this gives
/// dt / (sinh 2t)^{sigma+1} = (1 - xi^2)^sigma / (2 xi)^{sigma+1} dxi.
struct MedaPoint {
  double xi;
  double jacobian_factor;
};
MedaPoint meda_map(double t);

/// Inverse of the Meda map: t = (1/2) log((1 + xi)/(1 - xi)) = atanh(xi).
double meda_inverse(double xi);

/// Endpoint behavior declarations for adaptive_integrate. An exponent p in
/// (-1, 0) declares f ~ (x - a)^p (resp. (b - x)^p) and triggers a
/// regularizing power substitution. scale sets the splitting scale used by
/// the mapping of an infinite upper limit.
struct IntegrandHints {
  double exponent_at_a = 0.0;
  double exponent_at_b = 0.0;
  double scale = 1.0;
};

/// Adaptive Gauss-Kronrod (7,15) integration of f over (a, b), b possibly
/// +infinity. Converged when the accumulated error estimate is below
/// tol * max(1, |integral|). Throws accuracy_error carrying the partial
/// result if the subdivision budget is exhausted first.
EvalResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                              double tol, const IntegrandHints& hints = {});

}  // namespace fraclag

#endif
