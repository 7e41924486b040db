#include "fraclag/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fraclag/specfun.hpp"

namespace fraclag {

namespace {

// J_nu(z) z^{-nu}, entire in z^2; equals 1/(2^nu Gamma(nu+1)) at z = 0.
double bessel_j_factor(double nu, double z) {
  const double q = 0.25 * z * z;
  if (z <= 12.0) {
    // Alternating series in q; term growth is harmless for z <= 12.
    double term = std::exp(-std::numbers::ln2 * nu - log_gamma(nu + 1.0).value);
    double sum = term;
    for (int k = 0; k < 400; ++k) {
      term *= -q / ((k + 1.0) * (nu + k + 1.0));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum) + 1e-300) break;
    }
    return sum;
  }
  if (nu >= 0.0) return std::cyl_bessel_j(nu, z) * std::pow(z, -nu);
  // Reflection for negative order: J_{-mu} = J_mu cos(mu pi) - Y_mu sin(mu pi).
  const double mu = -nu;
  const double jv = std::cyl_bessel_j(mu, z) * std::cos(mu * std::numbers::pi) -
                    std::cyl_neumann(mu, z) * std::sin(mu * std::numbers::pi);
  return jv * std::pow(z, mu);
}

// Gamma(alpha+1) 2^alpha / sqrt(2 pi); normalises the translation integral
// so that T_0 is exactly the identity.
double translation_constant(double alpha) {
  return std::exp(log_gamma(alpha + 1.0).value + alpha * std::numbers::ln2 -
                  0.5 * std::log(2.0 * std::numbers::pi));
}

}  // namespace

RadialFunction make_bump(double a, double b) {
  require(0.0 <= a && a < b, "make_bump: requires 0 <= a < b");
  RadialFunction f;
  f.evaluator = [a, b](double r) {
    if (r <= a || r >= b) return 0.0;
    return std::exp(-1.0 / ((r - a) * (b - r)));
  };
  f.support_lo = a;
  f.support_hi = b;
  f.smoothness_tag = SmoothnessTag::bump;
  return f;
}

RadialFunction make_poly_gauss(const std::vector<double>& c) {
  require(!c.empty(), "make_poly_gauss: requires at least one coefficient");
  RadialFunction f;
  f.evaluator = [c](double r) {
    const double x = r * r;
    double p = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * x + *it;
    return p * std::exp(-0.5 * x);
  };
  f.smoothness_tag = SmoothnessTag::schwartz_like;
  return f;
}

double eval_phi(const LaguerreParams& p, int n, double r) {
  require(n >= 0, "eval_phi: requires n >= 0");
  const double x = r * r;
  return laguerre_poly(n, p.alpha, x) * std::exp(-0.5 * x);
}

double phi_norm2(const LaguerreParams& p, int n) {
  require(n >= 0, "phi_norm2: requires n >= 0");
  return std::exp(log_gamma(n + p.alpha + 1.0).value - log_gamma(n + 1.0).value -
                  std::numbers::ln2);
}

double phi_at_zero(const LaguerreParams& p, int n) {
  require(n >= 0, "phi_at_zero: requires n >= 0");
  return std::exp(log_gamma(n + p.alpha + 1.0).value - log_gamma(p.alpha + 1.0).value -
                  log_gamma(n + 1.0).value);
}

double eval_psi(const LaguerreParams& p, int n, double r) {
  return eval_phi(p, n, r) / std::sqrt(phi_norm2(p, n));
}

double eigenvalue(const LaguerreParams& p, int n) {
  require(n >= 0, "eigenvalue: requires n >= 0");
  return 4.0 * n + 2.0 * p.alpha + 2.0;
}

SpectralVector analyze(const RadialFunction& f, const LaguerreParams& p, int N,
                       const QuadratureRule& rule, double tail_threshold) {
  require(N > 0, "analyze: requires N > 0");
  require(rule.domain_tag == DomainTag::radial_mu_alpha,
          "analyze: requires a radial rule");
  SpectralVector v{p, std::vector<double>(static_cast<std::size_t>(N), 0.0)};
  std::vector<double> scale(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n)
    scale[static_cast<std::size_t>(n)] = 1.0 / std::sqrt(phi_norm2(p, n));
  double norm2 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    const double fv = f(r);
    if (fv == 0.0) continue;
    const double w = rule.weights[i];
    norm2 += w * fv * fv;
    const double x = r * r;
    const double damp = std::exp(-0.5 * x);
    const std::vector<double> ln = laguerre_seq(N - 1, p.alpha, x);
    const double wf = w * fv * damp;
    for (int n = 0; n < N; ++n)
      v.coeffs[static_cast<std::size_t>(n)] +=
          wf * scale[static_cast<std::size_t>(n)] * ln[static_cast<std::size_t>(n)];
  }
  if (std::isfinite(tail_threshold)) {
    double captured = 0.0;
    for (double a : v.coeffs) captured += a * a;
    const double tail = (norm2 - captured) / std::max(norm2, 1e-300);
    if (!(tail <= tail_threshold))
      throw accuracy_error("analyze: relative Parseval tail energy above threshold", tail,
                           tail_threshold);
  }
  return v;
}

double synthesize(const SpectralVector& v, double r) {
  const int N = v.truncation();
  if (N == 0) return 0.0;
  const double x = r * r;
  const std::vector<double> ln = laguerre_seq(N - 1, v.params.alpha, x);
  double s = 0.0;
  for (int n = 0; n < N; ++n)
    s += v.coeffs[static_cast<std::size_t>(n)] * ln[static_cast<std::size_t>(n)] /
         std::sqrt(phi_norm2(v.params, n));
  return s * std::exp(-0.5 * x);
}

double translate(const LaguerreParams& p, const RadialFunction& f, double r, double s,
                 int n_theta) {
  require(r >= 0.0 && s >= 0.0, "translate: requires r, s >= 0");
  // Arguments sweep [|r-s|, r+s]; skip early when f cannot see that band.
  if (r + s < f.support_lo || std::abs(r - s) > f.support_hi) return 0.0;
  const double nu = p.alpha - 0.5;
  const QuadratureRule rule = angular_rule(p.alpha, n_theta);
  const double rs = r * s;
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double th = rule.nodes[i];
    const double arg2 = r * r + s * s + 2.0 * rs * std::cos(th);
    const double arg = std::sqrt(std::max(arg2, 0.0));
    const double fv = f(arg);
    if (fv == 0.0) continue;
    acc += rule.weights[i] * fv * bessel_j_factor(nu, rs * std::sin(th));
  }
  return translation_constant(p.alpha) * acc;
}

double convolve(const LaguerreParams& p, const RadialFunction& f, const RadialFunction& g,
                double r, int n_nodes) {
  require(r >= 0.0, "convolve: requires r >= 0");
  // T_r f(s) vanishes unless [|r-s|, r+s] meets supp f.
  double lo = std::max(0.0, std::max(f.support_lo - r, r - f.support_hi));
  double hi = r + f.support_hi;
  lo = std::max(lo, g.support_lo);
  hi = std::min(hi, g.support_hi);
  if (hi <= lo) return 0.0;
  const auto h = [&](double s) {
    const double gv = g(s);
    if (gv == 0.0) return 0.0;
    return translate(p, f, r, s, n_nodes) * gv;
  };
  if (std::isfinite(hi)) {
    // Compactly supported integrand: adaptive integration of h dmu_alpha.
    const auto hm = [&](double s) { return h(s) * std::pow(s, 2.0 * p.alpha + 1.0); };
    return adaptive_integrate(hm, lo, hi, 1e-10).value;
  }
  const QuadratureRule rule = radial_rule(p.alpha, n_nodes);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    if (rule.nodes[i] < lo) continue;
    acc += rule.weights[i] * h(rule.nodes[i]);
  }
  return acc;
}

}  // namespace fraclag
