#include "fraclag/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fraclag/quadrature.hpp"

namespace fraclag {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g=7, 9-term coefficient set (~1e-15 relative on the real axis).
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_ln_gamma(double z, double& fp_err) {
  // z >= 0.5
  double acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z - 1.0 + k);
  const double t = z + 6.5;
  const double main = (z - 0.5) * std::log(t) - t;
  fp_err = 2e-15 + 3e-16 * (std::abs((z - 0.5) * std::log(t)) + t);
  return 0.5 * std::log(2.0 * kPi) + main + std::log(acc);
}

double ln_cosh(double y) {
  const double a = std::abs(y);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

}  // namespace

EvalResult log_gamma(double x) {
  require(std::isfinite(x) && x > 0.0, "log_gamma: requires finite x > 0");
  double fp_err = 0.0;
  if (x >= 0.5) {
    const double v = lanczos_ln_gamma(x, fp_err);
    return EvalResult{v, fp_err};
  }
  const double v = lanczos_ln_gamma(x + 1.0, fp_err) - std::log(x);
  return EvalResult{v, fp_err + 1e-16 * std::abs(std::log(x)) + 1e-16 * std::abs(v)};
}

double gamma_fn(double x) { return std::exp(log_gamma(x).value); }

double gamma_abs_reflect(double s) {
  require(s > 0.0 && s < 1.0, "gamma_abs_reflect: requires s in (0,1)");
  // |Gamma(-s)| = pi / (s sin(pi s) Gamma(s))
  return kPi / (s * std::sin(kPi * s) * gamma_fn(s));
}

double gamma_ratio(double a, double b) {
  return std::exp(log_gamma(a).value - log_gamma(b).value);
}

double rising_factorial(double x, int n) {
  require(n >= 0, "rising_factorial: requires n >= 0");
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= x + i;
  return p;
}

namespace {

// Scaled series e^{-x} sum_k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)), started at
// the peak term to avoid overflow; all terms positive, no cancellation.
EvalResult bessel_i_scaled_series(double nu, double x) {
  const double lx = std::log(0.5 * x);
  long nterms = 0;

  if (x <= 20.0) {
    double t = std::exp(nu * lx - log_gamma(nu + 1.0).value);
    double s = t;
    const double q = 0.25 * x * x;
    for (int k = 0; k < 500; ++k) {
      t *= q / ((k + 1.0) * (nu + k + 1.0));
      s += t;
      ++nterms;
      if (t < 1e-17 * s) break;
    }
    const double v = s * std::exp(-x);
    return EvalResult{v, v * (1e-15 * nterms + 1e-15 * (1.0 + std::abs(nu * lx) * 0.1) + x * 2e-16)};
  }

  const long kpeak = std::lround(0.5 * (std::sqrt((nu + 1.0) * (nu + 1.0) + x * x) - (nu + 1.0)));
  const double lpeak = (nu + 2.0 * kpeak) * lx - log_gamma(kpeak + 1.0).value -
                       log_gamma(nu + kpeak + 1.0).value - x;
  const double upeak = std::exp(lpeak);
  const double q = 0.25 * x * x;
  double s = upeak;
  double u = upeak;
  for (long k = kpeak; k < kpeak + 100000; ++k) {
    u *= q / ((k + 1.0) * (nu + k + 1.0));
    s += u;
    ++nterms;
    if (u < 1e-18 * s) break;
  }
  u = upeak;
  for (long k = kpeak; k > 0; --k) {
    u *= k * (nu + k) / q;
    s += u;
    ++nterms;
    if (u < 1e-18 * s) break;
  }
  const double log_scale_err = 3e-16 * (std::abs((nu + 2.0 * kpeak) * lx) + x);
  return EvalResult{s, s * (1e-15 * nterms + log_scale_err)};
}

}  // namespace

EvalResult bessel_i_scaled(double nu, double x) {
  require(nu >= -0.5, "bessel_i: requires nu >= -1/2");
  require(x >= 0.0, "bessel_i: requires x >= 0");
  if (x == 0.0) {
    if (nu == 0.0) return EvalResult{1.0, 0.0};
    if (nu > 0.0) return EvalResult{0.0, 0.0};
    return EvalResult{std::numeric_limits<double>::infinity(), 0.0};
  }
  return bessel_i_scaled_series(nu, x);
}

EvalResult bessel_i(double nu, double x) {
  EvalResult s = bessel_i_scaled(nu, x);
  const double e = std::exp(x);
  return EvalResult{s.value * e, s.abs_err_estimate * e};
}

namespace {

// K_nu(x) through the scaled representation
//   e^x K_nu(x) = int_0^inf exp(-x(cosh t - 1)) cosh(nu t) dt,
// evaluated as exp(g_peak) * int exp(g(t) - g_peak) dt with
// g(t) = -x(cosh t - 1) + ln cosh(nu t).
struct KScaled {
  double log_value;
  double rel_err;
};

KScaled bessel_k_scaled_log(double nu, double x) {
  nu = std::abs(nu);
  auto gexp = [nu, x](double t) {
    return -x * (std::cosh(t) - 1.0) + ln_cosh(nu * t);
  };
  // peak of g: interior when nu^2 > x, else at t = 0
  double tpeak = 0.0;
  if (nu * nu > x) {
    double lo = 0.0, hi = 1.0;
    auto gp = [nu, x](double t) { return -x * std::sinh(t) + nu * std::tanh(nu * t); };
    while (gp(hi) > 0.0 && hi < 800.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (gp(mid) > 0.0 ? lo : hi) = mid;
    }
    tpeak = 0.5 * (lo + hi);
  }
  const double gpeak = gexp(tpeak);
  double tend = tpeak + 1.0;
  while (gexp(tend) > gpeak - 120.0 && tend < 1600.0) tend *= 1.5;
  EvalResult I = adaptive_integrate(
      [&gexp, gpeak](double t) { return std::exp(gexp(t) - gpeak); }, 0.0, tend, 1e-13);
  const double rel = I.abs_err_estimate / std::max(I.value, 1e-300) +
                     1e-15 * (1.0 + std::abs(gpeak));
  return KScaled{gpeak + std::log(I.value), rel};
}

}  // namespace

EvalResult bessel_k_log(double nu, double x) {
  require(x > 0.0, "bessel_k: requires x > 0");
  const KScaled s = bessel_k_scaled_log(nu, x);
  return EvalResult{s.log_value - x, s.rel_err + 1e-16 * x};
}

EvalResult bessel_k(double nu, double x) {
  const EvalResult lg = bessel_k_log(nu, x);
  const double v = std::exp(lg.value);
  return EvalResult{v, v * lg.abs_err_estimate};
}

double laguerre_poly(int n, double alpha, double x) {
  require(n >= 0, "laguerre_poly: requires n >= 0");
  require(alpha > -1.0, "laguerre_poly: requires alpha > -1");
  require(x >= 0.0, "laguerre_poly: requires x >= 0");
  if (n == 0) return 1.0;
  double pm = 1.0;
  double pc = alpha + 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double pn = ((2.0 * k + alpha + 1.0 - x) * pc - (k + alpha) * pm) / (k + 1.0);
    pm = pc;
    pc = pn;
  }
  return pc;
}

std::vector<double> laguerre_seq(int nmax, double alpha, double x) {
  require(nmax >= 0, "laguerre_seq: requires nmax >= 0");
  require(alpha > -1.0, "laguerre_seq: requires alpha > -1");
  std::vector<double> L(nmax + 1);
  L[0] = 1.0;
  if (nmax == 0) return L;
  L[1] = alpha + 1.0 - x;
  for (int k = 1; k < nmax; ++k)
    L[k + 1] = ((2.0 * k + alpha + 1.0 - x) * L[k] - (k + alpha) * L[k - 1]) / (k + 1.0);
  return L;
}

double ultraspherical_poly(int m, double lambda, double u) {
  require(m >= 0, "ultraspherical_poly: requires m >= 0");
  require(lambda > -0.5, "ultraspherical_poly: requires lambda > -1/2");
  require(u >= -1.0 && u <= 1.0, "ultraspherical_poly: requires u in [-1,1]");
  if (m == 0) return 1.0;
  double pm = 1.0;
  double pc = u;
  // normalized so P_m(1) = 1: P_{k+1} = (2(k+lambda) u P_k - k P_{k-1}) / (k + 2 lambda)
  for (int k = 1; k < m; ++k) {
    const double pn = (2.0 * (k + lambda) * u * pc - k * pm) / (k + 2.0 * lambda);
    pm = pc;
    pc = pn;
  }
  return pc;
}

EvalResult kummer_u(double a, double b, double x) {
  require(a > 0.0, "kummer_u: requires a > 0");
  require(x > 0.0, "kummer_u: requires x > 0");
  IntegrandHints hints;
  if (a < 1.0) hints.exponent_at_a = a - 1.0;
  hints.scale = std::max(1.0, a / x);
  const double pw = b - a - 1.0;
  EvalResult J = adaptive_integrate(
      [a, pw, x](double t) {
        return std::exp(-x * t + (a - 1.0) * std::log(t) + pw * std::log1p(t));
      },
      0.0, std::numeric_limits<double>::infinity(), 1e-12, hints);
  const double inv_ga = std::exp(-log_gamma(a).value);
  return EvalResult{J.value * inv_ga,
                    (J.abs_err_estimate + 1e-14 * std::abs(J.value)) * inv_ga};
}

double l_integral(double a, double b, double c) {
  require(a > 0.0, "l_integral: requires a > 0");
  require(b > 0.0, "l_integral: requires b > 0");
  IntegrandHints hints;
  if (b < 1.0) hints.exponent_at_a = b - 1.0;
  hints.scale = std::max(1.0, b / (2.0 * a));
  EvalResult J = adaptive_integrate(
      [a, b, c](double t) {
        return std::exp(-2.0 * a * t + (b - 1.0) * std::log(t) - c * std::log1p(t));
      },
      0.0, std::numeric_limits<double>::infinity(), 1e-12, hints);
  return std::exp(-a) * J.value;
}

}  // namespace fraclag
