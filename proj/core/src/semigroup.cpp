#include "fraclag/semigroup.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "fraclag/specfun.hpp"

namespace fraclag {

namespace {

constexpr double kPi = std::numbers::pi;

// log sinh x for x > 0 without overflow: x - log 2 + log(1 - e^{-2x}).
double ln_sinh(double x) {
  return x - std::numbers::ln2 + std::log(-std::expm1(-2.0 * x));
}

double ln_cosh(double x) {
  const double y = std::abs(x);
  return y + std::log1p(std::exp(-2.0 * y)) - std::numbers::ln2;
}

// Gamma on both half-lines (non-integer x); reflection below zero.
double signed_gamma(double x) {
  if (x > 0.0) return std::exp(log_gamma(x).value);
  return kPi / (std::sin(kPi * x) * std::exp(log_gamma(1.0 - x).value));
}

// I_nu(z) z^{-nu}, entire; log of it, stable across the z ranges used here.
double ln_bessel_i_factor(double nu, double z) {
  if (z <= 20.0) {
    double term = std::exp(-std::numbers::ln2 * nu - log_gamma(nu + 1.0).value);
    double sum = term;
    const double q = 0.25 * z * z;
    for (int k = 0; k < 300; ++k) {
      term *= q / ((k + 1.0) * (nu + k + 1.0));
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return std::log(sum);
  }
  return z - nu * std::log(z) + std::log(bessel_i_scaled(nu, z).value);
}

}  // namespace

double multiplier(const LaguerreParams& p, double sigma, int n) {
  require(n >= 0, "multiplier: requires n >= 0");
  require(sigma > -1.0 && sigma <= 1.0, "multiplier: requires sigma in (-1, 1]");
  const double w = n + 0.5 * (p.alpha + 1.0);
  return std::exp(sigma * std::log(4.0) + log_gamma(w + 0.5 * (1.0 + sigma)).value -
                  log_gamma(w + 0.5 * (1.0 - sigma)).value);
}

MultiplierTable make_multiplier_table(const LaguerreParams& p, double sigma, int count) {
  require(count > 0, "make_multiplier_table: requires count > 0");
  MultiplierTable t{p, sigma, {}};
  t.values.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) t.values.push_back(multiplier(p, sigma, n));
  return t;
}

double heat_kernel(const LaguerreParams& p, double t, double r) {
  require(t > 0.0, "heat_kernel: requires t > 0");
  const double lnq = -(p.alpha * std::numbers::ln2 + log_gamma(p.alpha + 1.0).value) -
                     (p.alpha + 1.0) * ln_sinh(2.0 * t) -
                     0.5 * r * r / std::tanh(2.0 * t);
  return std::exp(lnq);
}

double heat_kernel_series(const LaguerreParams& p, double t, double r, int terms) {
  require(t > 0.0 && terms > 0, "heat_kernel_series: requires t > 0 and terms > 0");
  const double x = r * r;
  const std::vector<double> ln = laguerre_seq(terms - 1, p.alpha, x);
  double s = 0.0;
  for (int n = 0; n < terms; ++n)
    s += std::exp(-t * (4.0 * n + 2.0 * p.alpha + 2.0)) * ln[static_cast<std::size_t>(n)];
  return s * std::exp(-0.5 * x) * 2.0 / gamma_fn(p.alpha + 1.0);
}

RadialFunction make_heat_profile(const LaguerreParams& p, double t) {
  require(t > 0.0, "make_heat_profile: requires t > 0");
  RadialFunction f;
  const LaguerreParams pc = p;
  f.evaluator = [pc, t](double r) { return heat_kernel(pc, t, r); };
  f.smoothness_tag = SmoothnessTag::schwartz_like;
  return f;
}

double heat_semigroup_one(const LaguerreParams& p, double t, double r) {
  require(t > 0.0, "heat_semigroup_one: requires t > 0");
  return std::exp(-(p.alpha + 1.0) * ln_cosh(2.0 * t) -
                  0.5 * std::tanh(2.0 * t) * r * r);
}

double translated_heat_kernel(const LaguerreParams& p, double t, double r, double s) {
  require(t > 0.0, "translated_heat_kernel: requires t > 0");
  require(r >= 0.0 && s >= 0.0, "translated_heat_kernel: requires r, s >= 0");
  const double ls = ln_sinh(2.0 * t);
  const double z = r * s * std::exp(-ls);
  const double lnv = -(p.alpha + 1.0) * ls - 0.5 * (r * r + s * s) / std::tanh(2.0 * t) +
                     ln_bessel_i_factor(p.alpha, z);
  return std::exp(lnv);
}

SpectralVector apply_semigroup(SpectralVector v, double t) {
  require(t >= 0.0, "apply_semigroup: requires t >= 0");
  const double alpha = v.params.alpha;
  for (std::size_t n = 0; n < v.coeffs.size(); ++n)
    v.coeffs[n] *= std::exp(-t * (4.0 * static_cast<double>(n) + 2.0 * alpha + 2.0));
  return v;
}

SpectralVector apply_fractional(SpectralVector v, double sigma, FracKind kind) {
  require(sigma > 0.0 && sigma <= 1.0, "apply_fractional: requires sigma in (0, 1]");
  for (std::size_t n = 0; n < v.coeffs.size(); ++n) {
    const int ni = static_cast<int>(n);
    const double m = (kind == FracKind::conformal)
                         ? multiplier(v.params, sigma, ni)
                         : std::pow(eigenvalue(v.params, ni), sigma);
    v.coeffs[n] *= m;
  }
  return v;
}

double u_sigma_norm(const LaguerreParams& p, double sigma, int n_max) {
  require(sigma > 0.0 && sigma < 1.0, "u_sigma_norm: requires sigma in (0,1)");
  require(n_max >= 1, "u_sigma_norm: requires n_max >= 1");
  double best = 0.0;
  double last = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    last = std::exp(-sigma * std::log(eigenvalue(p, n))) * multiplier(p, sigma, n);
    best = std::max(best, last);
  }
  if (!(std::abs(last - 1.0) <= 1e-6))
    throw accuracy_error("u_sigma_norm: sequence still moving at n_max", best,
                         std::abs(last - 1.0));
  return std::max(best, 1.0);
}

double e_sigma(double sigma) {
  require(sigma > 0.0 && sigma < 1.0, "e_sigma: requires sigma in (0,1)");
  return std::exp(sigma * std::log(4.0) + log_gamma(0.5 * (1.0 + sigma)).value -
                  log_gamma(0.5 * (1.0 - sigma)).value);
}

double frac_rep_constant(double sigma) {
  require(sigma > 0.0 && sigma < 1.0, "frac_rep_constant: requires sigma in (0,1)");
  return std::exp((sigma + 1.0) * std::numbers::ln2) / gamma_abs_reflect(sigma);
}

double sinh_power_integral(const std::function<double(double)>& h, double sigma, double p0,
                           double p1, double tol) {
  require(sigma > -1.0 && sigma < 1.0, "sinh_power_integral: requires sigma in (-1,1)");
  require(p0 - sigma - 1.0 > -1.0, "sinh_power_integral: divergent at t = 0");
  require(sigma + p1 > -1.0, "sinh_power_integral: divergent at t = inf");
  const double pref = std::exp(-(sigma + 1.0) * std::numbers::ln2);
  const auto g = [&h, sigma, pref](double xi) {
    const double t = std::atanh(xi);
    const double hv = h(t);
    if (hv == 0.0) return 0.0;
    return hv * pref * std::pow(xi, -sigma - 1.0) *
           std::pow((1.0 - xi) * (1.0 + xi), sigma);
  };
  IntegrandHints left;
  const double ea = p0 - sigma - 1.0;
  if (ea < 0.0) left.exponent_at_a = ea;
  IntegrandHints right;
  const double eb = sigma + p1;
  if (eb < 0.0) right.exponent_at_b = eb;
  const EvalResult lo = adaptive_integrate(g, 0.0, 0.5, tol, left);
  const EvalResult hi = adaptive_integrate(g, 0.5, 1.0, tol, right);
  return lo.value + hi.value;
}

IdentityCheck numerical_identity_check(double sigma, double lam) {
  require(sigma > 0.0 && sigma < 1.0, "numerical_identity_check: requires sigma in (0,1)");
  require(lam + 2.0 * sigma > -2.0, "numerical_identity_check: requires lam + 2 sigma > -2");
  const double a1 = 0.25 * lam + 0.5 * (1.0 + sigma);
  const double a2 = 0.25 * lam + 0.5 * (1.0 - sigma);
  const double ratio = (a1 > 0.0 && a2 > 0.0)
                           ? std::exp(log_gamma(a1).value - log_gamma(a2).value)
                           : signed_gamma(a1) / signed_gamma(a2);
  IdentityCheck out;
  out.lhs = std::exp(sigma * std::numbers::ln2) * gamma_abs_reflect(sigma) * ratio;
  const double i1 = sinh_power_integral(
      [](double t) {
        const double sh = std::sinh(t);
        return 2.0 * sh * sh;
      },
      sigma, 2.0, -1.0, 1e-11);
  double i2 = 0.0;
  if (lam != 0.0)
    i2 = sinh_power_integral([lam](double t) { return -std::expm1(-lam * t); }, sigma, 1.0,
                             std::min(0.0, 0.5 * lam), 1e-11);
  out.rhs = 2.0 * (i1 + i2);
  return out;
}

double frac_kernel(const LaguerreParams& p, double sigma, double r, double s) {
  require(sigma > 0.0 && sigma < 1.0, "frac_kernel: requires sigma in (0,1)");
  require(r >= 0.0 && s >= 0.0, "frac_kernel: requires r, s >= 0");
  const double floor = 1e-4 * (1.0 + r + s);
  if (std::abs(r - s) < floor)
    throw accuracy_error("frac_kernel: arguments too close to the diagonal", 0.0,
                         std::abs(r - s));
  const LaguerreParams pc = p;
  return sinh_power_integral(
      [pc, r, s](double t) { return translated_heat_kernel(pc, t, r, s); }, sigma,
      sigma + 1.0, 0.0, 1e-10);
}

double f_alpha_sigma(const LaguerreParams& p, double sigma, double r) {
  require(sigma > 0.0 && sigma < 1.0, "f_alpha_sigma: requires sigma in (0,1)");
  require(r >= 0.0, "f_alpha_sigma: requires r >= 0");
  const double alpha = p.alpha;
  const auto h = [alpha, r](double t) {
    const double ex = (alpha + 1.0) * ln_cosh(2.0 * t) +
                      0.5 * std::tanh(2.0 * t) * r * r;
    return -std::expm1(-ex);
  };
  const double p0 = (r > 0.0) ? 1.0 : 2.0;
  return sinh_power_integral(h, sigma, p0, 0.0, 1e-11);
}

namespace {

// Difference integral of the pointwise representation with the diagonal strip
// |s - r| <= hx removed; the two sides are summed before extrapolation since
// for sigma >= 1/2 they diverge separately as hx -> 0.
double difference_integral(const RadialFunction& f, const LaguerreParams& p, double sigma,
                           double r, double hx) {
  const double fr = f(r);
  const double twoa1 = 2.0 * p.alpha + 1.0;
  const auto g = [&f, &p, sigma, r, fr, twoa1](double s) {
    const double d = fr - f(s);
    if (d == 0.0) return 0.0;
    return d * frac_kernel(p, sigma, r, s) * std::pow(s, twoa1);
  };
  double total = 0.0;
  if (r - hx > 0.0) total += adaptive_integrate(g, 0.0, r - hx, 1e-10).value;
  IntegrandHints tail;
  tail.scale = std::max(1.0, r);
  total += adaptive_integrate(g, r + hx, std::numeric_limits<double>::infinity(), 1e-10,
                              tail).value;
  return total;
}

}  // namespace

namespace {

// Excising the strip |s-r| < h perturbs the integral by a sum of powers of h.
// Writing tau = 2 - 2 sigma, the singular kernel factor contributes h^{tau+2k}
// for the first-difference integrand (odd powers cancel across the two sides)
// and h^{tau+k} for the squared-difference double integral (no cancellation);
// the kernel's smooth remainder adds integer powers h^3, h^5, ... (resp.
// h^3, h^4, ...). Each elimination stage removes the next exponent of the
// merged ladder; levels.size() - 1 stages are run, so five levels h, h/2,
// ..., h/16 clear {tau, .., tau+6} u {3,5,7} terms on the difference route.
// The constants multiplying the h^{tau+2k} terms grow with alpha (they come
// from the Bessel expansion of the kernel about the diagonal), which is what
// sets the level count rather than the nominal residue order.
struct StripExtrapolation {
  double value;
  double err;
};

StripExtrapolation richardson_strip(const std::vector<double>& levels, double sigma,
                                    bool squared) {
  const double tau = 2.0 - 2.0 * sigma;
  const std::size_t nstages = levels.size() - 1;
  std::vector<double> cand =
      squared ? std::vector<double>{tau, tau + 1.0, tau + 2.0, tau + 3.0, 3.0, 4.0, 5.0}
              : std::vector<double>{tau, tau + 2.0, tau + 4.0, tau + 6.0, 3.0, 5.0, 7.0};
  std::sort(cand.begin(), cand.end());
  std::vector<double> p;
  for (double e : cand) {
    if (p.size() == nstages) break;
    if (!p.empty() && e - p.back() < 1e-9) continue;  // merged coincident exponents
    p.push_back(e);
  }
  std::vector<double> r(levels);
  double before_last_stage = r.back();
  for (std::size_t stage = 0; stage < p.size(); ++stage) {
    const double q = std::exp2(-p[stage]);
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      r[i] = (r[i + 1] - q * r[i]) / (1.0 - q);
    r.pop_back();
    if (r.size() == 1) break;
    before_last_stage = r.back();
  }
  return StripExtrapolation{r.front(), std::abs(r.front() - before_last_stage)};
}

}  // namespace

double apply_fractional_pointwise(const RadialFunction& f, const LaguerreParams& p,
                                  double sigma, double r) {
  require(sigma > 0.0 && sigma < 1.0,
          "apply_fractional_pointwise: requires sigma in (0,1)");
  require(r >= 0.0, "apply_fractional_pointwise: requires r >= 0");
  const double a_sig = frac_rep_constant(sigma);
  const double zero_order = f(r) * (e_sigma(sigma) + a_sig * f_alpha_sigma(p, sigma, r));
  const double h0 = 0.05 * std::max(1.0, 0.5 * (1.0 + r));
  std::vector<double> d(5);
  for (int k = 0; k < 5; ++k) d[k] = difference_integral(f, p, sigma, r, std::exp2(-k) * h0);
  const StripExtrapolation ext = richardson_strip(d, sigma, false);
  const double value = a_sig * ext.value + zero_order;
  const double err = a_sig * ext.err;
  if (!(err <= 5e-4 * std::max(1.0, std::abs(value))))
    throw accuracy_error("apply_fractional_pointwise: extrapolation not settled", value,
                         err);
  return value;
}

double quadratic_form(const SpectralVector& v, double sigma, FracKind kind) {
  double s = 0.0;
  for (std::size_t n = 0; n < v.coeffs.size(); ++n) {
    const int ni = static_cast<int>(n);
    const double m = (kind == FracKind::conformal)
                         ? multiplier(v.params, sigma, ni)
                         : std::pow(eigenvalue(v.params, ni), sigma);
    s += m * v.coeffs[n] * v.coeffs[n];
  }
  return s;
}

namespace {

// int_{r in [lo,hi]} dmu(r) int_{|s-r|>hx} (g(r)-g(s))^2 W(r) W(s) K(r,s) dmu(s).
double strip_level(const std::function<double(double)>& g,
                   const std::function<double(double)>& W, const LaguerreParams& p,
                   double sigma, double lo, double hi, double hx) {
  const double twoa1 = 2.0 * p.alpha + 1.0;
  const auto inner = [&](double r) {
    const double gr = g(r);
    const auto q = [&, r, gr](double s) {
      const double d = gr - g(s);
      if (d == 0.0) return 0.0;
      return d * d * W(s) * frac_kernel(p, sigma, r, s) * std::pow(s, twoa1);
    };
    double acc = 0.0;
    if (r - hx > 0.0) acc += adaptive_integrate(q, 0.0, r - hx, 1e-8).value;
    IntegrandHints tail;
    tail.scale = std::max(1.0, r);
    acc += adaptive_integrate(q, r + hx, std::numeric_limits<double>::infinity(), 1e-8,
                              tail).value;
    return acc * W(r) * std::pow(r, twoa1);
  };
  if (std::isfinite(hi)) return adaptive_integrate(inner, lo, hi, 1e-8).value;
  IntegrandHints outer;
  outer.scale = std::max(1.0, lo + 2.0);
  return adaptive_integrate(inner, lo, std::numeric_limits<double>::infinity(), 1e-8,
                            outer).value;
}

}  // namespace

EvalResult symmetric_kernel_form(const std::function<double(double)>& g, double g_lo,
                                 double g_hi, const std::function<double(double)>& W,
                                 const LaguerreParams& p, double sigma) {
  require(sigma > 0.0 && sigma < 1.0, "symmetric_kernel_form: requires sigma in (0,1)");
  require(g_lo >= 0.0 && g_hi > g_lo, "symmetric_kernel_form: bad support window");
  const double twoa1 = 2.0 * p.alpha + 1.0;

  // Off-support block: for r outside [g_lo, g_hi] the difference collapses to
  // g(s)^2.  Near the support edge the kernel floor region is skipped: g
  // vanishes to all orders there, so the omitted mass is below rounding.
  double cross = 0.0;
  if (std::isfinite(g_hi)) {
    const auto cross_inner = [&](double r) {
      const auto q = [&, r](double s) {
        const double gs = g(s);
        if (gs == 0.0) return 0.0;
        if (std::abs(r - s) < 1e-4 * (1.0 + r + s)) return 0.0;
        return gs * gs * W(s) * frac_kernel(p, sigma, r, s) * std::pow(s, twoa1);
      };
      return W(r) * std::pow(r, twoa1) *
             adaptive_integrate(q, g_lo, g_hi, 1e-8).value;
    };
    if (g_lo > 0.0)
      cross += adaptive_integrate(cross_inner, 0.0, g_lo, 1e-8).value;
    IntegrandHints tail;
    tail.scale = std::max(1.0, g_hi);
    cross += adaptive_integrate(cross_inner, g_hi,
                                std::numeric_limits<double>::infinity(), 1e-8, tail).value;
  }

  const double h0 = 0.08;
  const std::vector<double> d{strip_level(g, W, p, sigma, g_lo, g_hi, h0),
                              strip_level(g, W, p, sigma, g_lo, g_hi, 0.5 * h0),
                              strip_level(g, W, p, sigma, g_lo, g_hi, 0.25 * h0),
                              strip_level(g, W, p, sigma, g_lo, g_hi, 0.125 * h0)};
  const StripExtrapolation ext = richardson_strip(d, sigma, true);
  return EvalResult{ext.value + cross, ext.err};
}

double quadratic_form_integral(const RadialFunction& f, const LaguerreParams& p,
                               double sigma) {
  require(sigma > 0.0 && sigma < 1.0, "quadratic_form_integral: requires sigma in (0,1)");
  const double a_sig = frac_rep_constant(sigma);
  const double e_sig = e_sigma(sigma);
  const double twoa1 = 2.0 * p.alpha + 1.0;

  // Potential part: int f^2 (E + a F) dmu over the support of f.
  const auto pot_g = [&](double r) {
    const double fv = f(r);
    if (fv == 0.0) return 0.0;
    return fv * fv * (e_sig + a_sig * f_alpha_sigma(p, sigma, r)) * std::pow(r, twoa1);
  };
  double pot;
  if (f.bounded_support()) {
    pot = adaptive_integrate(pot_g, f.support_lo, f.support_hi, 1e-9).value;
  } else {
    IntegrandHints hint;
    hint.scale = 2.0;
    pot = adaptive_integrate(pot_g, 0.0, std::numeric_limits<double>::infinity(), 1e-9,
                             hint).value;
  }

  const auto g = [&f](double r) { return f(r); };
  const auto one = [](double) { return 1.0; };
  const EvalResult dbl = symmetric_kernel_form(g, f.support_lo, f.support_hi, one, p, sigma);
  const double value = 0.5 * a_sig * dbl.value + pot;
  const double err = 0.5 * a_sig * dbl.abs_err_estimate;
  if (!(err <= 5e-4 * std::max(1.0, std::abs(value))))
    throw accuracy_error("quadratic_form_integral: extrapolation not settled", value, err);
  return value;
}

}  // namespace fraclag
