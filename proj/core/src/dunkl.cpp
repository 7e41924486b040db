#include "fraclag/dunkl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fraclag/quadrature.hpp"
#include "fraclag/specfun.hpp"

namespace fraclag {

namespace {

// Normalized Hermite functions h_0..h_kmax at x, written into out.
// h_0 = pi^{-1/4} e^{-x^2/2}; h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}.
void fill_hermite(int kmax, double x, std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(kmax) + 1);
  const double h0 = std::exp(-0.5 * x * x) / std::pow(std::numbers::pi, 0.25);
  out[0] = h0;
  if (kmax == 0) return;
  out[1] = std::numbers::sqrt2 * x * h0;
  for (int k = 1; k < kmax; ++k)
    out[static_cast<std::size_t>(k) + 1] =
        x * std::sqrt(2.0 / (k + 1)) * out[static_cast<std::size_t>(k)] -
        std::sqrt(static_cast<double>(k) / (k + 1)) * out[static_cast<std::size_t>(k) - 1];
}

double radial_integral(const std::function<double(double)>& h, double lo, double hi,
                       double tol) {
  if (std::isfinite(hi)) return adaptive_integrate(h, lo, hi, tol).value;
  IntegrandHints hints;
  hints.scale = std::max(2.0, lo + 1.0);
  return adaptive_integrate(h, lo, hi, tol, hints).value;
}

}  // namespace

double dh_eigenvalue(const DunklParams& dk, int level) {
  require(level >= 0, "dh_eigenvalue: requires level >= 0");
  return 2.0 * level + dk.d + 2.0 * dk.gamma;
}

LaguerreParams mode_params(const DunklParams& dk, int m) {
  require(m >= 0, "mode_params: requires m >= 0");
  return LaguerreParams(dk.lambda + m);
}

HMode make_mode(const DunklParams& dk, int m, int j, const RadialFunction& g,
                int truncation, int rule_nodes) {
  const LaguerreParams pm = mode_params(dk, m);
  const QuadratureRule rule = radial_rule(pm.alpha, rule_nodes);
  return HMode{m, j, g, analyze(g, pm, truncation, rule)};
}

IdentityCheck funk_hecke_bessel_check(double lambda, int m, double z) {
  require(lambda > -0.5, "funk_hecke_bessel_check: requires lambda > -1/2");
  require(m >= 0, "funk_hecke_bessel_check: requires m >= 0");
  require(z > 0.0, "funk_hecke_bessel_check: requires z > 0");
  const double edge = lambda - 0.5;  // (1-u^2)^{lambda-1/2} endpoint exponent
  const auto g = [&](double u) {
    return std::exp(z * u) * ultraspherical_poly(m, lambda, u) *
           std::pow((1.0 - u) * (1.0 + u), edge);
  };
  IntegrandHints left;   // integrable blow-up at u = -1 when lambda < 1/2
  IntegrandHints right;  // same at u = +1
  if (edge < 0.0) {
    left.exponent_at_a = edge;
    right.exponent_at_b = edge;
  }
  const double lhs = adaptive_integrate(g, -1.0, 0.0, 1e-11, left).value +
                     adaptive_integrate(g, 0.0, 1.0, 1e-11, right).value;
  const double rhs = std::sqrt(std::numbers::pi) *
                     std::exp(log_gamma(lambda + 0.5).value - lambda * std::log(0.5 * z)) *
                     bessel_i(lambda + m, z).value;
  return IdentityCheck{lhs, rhs};
}

double hermite_projection_direct(const DunklParams& dk, int m, const RadialFunction& g0,
                                 int level, const std::vector<double>& x0) {
  require(dk.gamma == 0.0, "hermite_projection_direct: requires gamma = 0");
  require(dk.d == 2 || dk.d == 3, "hermite_projection_direct: requires d in {2,3}");
  require(level >= 0 && m >= 0, "hermite_projection_direct: requires level, m >= 0");
  require(static_cast<int>(x0.size()) == dk.d,
          "hermite_projection_direct: x0 must have d entries");
  const int L = level;
  const double tol = 1e-10;

  if (dk.d == 2) {
    // Angular factor is a trig polynomial of degree <= L+m times the constant
    // e^{-r^2/2}; a 64-point uniform theta grid integrates it exactly.
    const int nth = 64;
    std::vector<double> ct(nth), st(nth), cm(nth);
    for (int i = 0; i < nth; ++i) {
      const double th = 2.0 * std::numbers::pi * i / nth;
      ct[static_cast<std::size_t>(i)] = std::cos(th);
      st[static_cast<std::size_t>(i)] = std::sin(th);
      cm[static_cast<std::size_t>(i)] = std::cos(m * th);
    }
    std::vector<double> hx, hy;
    fill_hermite(L, x0[0], hx);
    fill_hermite(L, x0[1], hy);
    std::vector<double> ha, hb;
    const auto integrand = [&](double r) {
      const double gv = g0(r);
      if (gv == 0.0) return 0.0;
      double ang = 0.0;
      for (int i = 0; i < nth; ++i) {
        fill_hermite(L, r * ct[static_cast<std::size_t>(i)], ha);
        fill_hermite(L, r * st[static_cast<std::size_t>(i)], hb);
        double kern = 0.0;
        for (int j = 0; j <= L; ++j)
          kern += ha[static_cast<std::size_t>(j)] *
                  hb[static_cast<std::size_t>(L - j)] *
                  hx[static_cast<std::size_t>(j)] * hy[static_cast<std::size_t>(L - j)];
        ang += cm[static_cast<std::size_t>(i)] * kern;
      }
      ang *= 2.0 * std::numbers::pi / nth;
      return gv * std::pow(r, m + 1) * ang;
    };
    return radial_integral(integrand, g0.support_lo, g0.support_hi, tol);
  }

  // d = 3: Gauss nodes in u3 = cos(polar) via the unit-weight angular rule,
  // uniform azimuth; the spherical integrand is polynomial of degree <= L+m.
  const QuadratureRule polar = angular_rule(0.5, 24);
  const int nps = 48;
  struct SpherePoint {
    double u1, u2, u3, w;
  };
  std::vector<SpherePoint> pts;
  pts.reserve(polar.nodes.size() * static_cast<std::size_t>(nps));
  for (std::size_t k = 0; k < polar.nodes.size(); ++k) {
    const double u3 = std::cos(polar.nodes[k]);
    const double rho = std::sqrt(std::max(0.0, 1.0 - u3 * u3));
    const double leg = ultraspherical_poly(m, 0.5, u3);
    const double wk = polar.weights[k] * leg * 2.0 * std::numbers::pi / nps;
    for (int i = 0; i < nps; ++i) {
      const double ps = 2.0 * std::numbers::pi * i / nps;
      pts.push_back(SpherePoint{rho * std::cos(ps), rho * std::sin(ps), u3, wk});
    }
  }
  std::vector<double> h1, h2, h3;
  fill_hermite(L, x0[0], h1);
  fill_hermite(L, x0[1], h2);
  fill_hermite(L, x0[2], h3);
  std::vector<double> a1, a2, a3;
  const auto integrand = [&](double r) {
    const double gv = g0(r);
    if (gv == 0.0) return 0.0;
    double ang = 0.0;
    for (const SpherePoint& q : pts) {
      fill_hermite(L, r * q.u1, a1);
      fill_hermite(L, r * q.u2, a2);
      fill_hermite(L, r * q.u3, a3);
      double kern = 0.0;
      for (int mu1 = 0; mu1 <= L; ++mu1)
        for (int mu2 = 0; mu2 + mu1 <= L; ++mu2) {
          const int mu3 = L - mu1 - mu2;
          kern += a1[static_cast<std::size_t>(mu1)] * a2[static_cast<std::size_t>(mu2)] *
                  a3[static_cast<std::size_t>(mu3)] * h1[static_cast<std::size_t>(mu1)] *
                  h2[static_cast<std::size_t>(mu2)] * h3[static_cast<std::size_t>(mu3)];
        }
      ang += q.w * kern;
    }
    return gv * std::pow(r, m + 2) * ang;
  };
  return radial_integral(integrand, g0.support_lo, g0.support_hi, tol);
}

HeckeBochnerCheck hecke_bochner_check(const DunklParams& dk, int m, int n,
                                      const RadialFunction& g0,
                                      const std::vector<double>& x0) {
  require(n >= 0, "hecke_bochner_check: requires n >= 0");
  const int level = 2 * n + m;
  const double direct = hermite_projection_direct(dk, m, g0, level, x0);

  double r2 = 0.0;
  for (double c : x0) r2 += c * c;
  const double r0 = std::sqrt(r2);
  require(r0 > 0.0, "hecke_bochner_check: x0 must be nonzero");

  const LaguerreParams pm = mode_params(dk, m);
  RadialFunction phi_prof;
  phi_prof.evaluator = [pm, n](double s) { return eval_phi(pm, n, s); };
  const double conv = convolve(pm, g0, phi_prof, r0);
  const double pref = std::exp(std::numbers::ln2 - log_gamma(pm.alpha + 1.0).value);
  const double radial = pref * std::pow(r0, m) * conv;

  double zonal = 1.0;
  if (dk.d == 2) {
    zonal = std::cos(m * std::atan2(x0[1], x0[0]));
  } else {
    zonal = ultraspherical_poly(m, 0.5, x0[2] / r0);
  }
  return HeckeBochnerCheck{direct, radial * zonal};
}

HHarmonicDecomposition dh_semigroup_modewise(HHarmonicDecomposition decomp, double t) {
  for (HMode& mode : decomp.modes) {
    mode.reduced = apply_semigroup(std::move(mode.reduced), t);
    RadialFunction evolved;
    evolved.evaluator = [v = mode.reduced](double r) { return synthesize(v, r); };
    mode.profile = evolved;
  }
  return decomp;
}

double dh_fractional_form(const HHarmonicDecomposition& decomp, double sigma) {
  double total = 0.0;
  for (const HMode& mode : decomp.modes)
    total += quadratic_form(mode.reduced, sigma, FracKind::conformal);
  return total;
}

DhHardyReport dh_hardy_verdict(const HHarmonicDecomposition& decomp,
                               const FracParams& frac) {
  DhHardyReport rep;
  rep.d = decomp.dunkl.d;
  rep.gamma = decomp.dunkl.gamma;
  rep.lambda = decomp.dunkl.lambda;
  rep.sigma = frac.sigma;
  rep.delta = frac.delta;
  try {
    const LaguerreParams base(decomp.dunkl.lambda);
    const double b_base = constant_B(base, frac);
    bool all_pass = true;
    for (const HMode& mode : decomp.modes) {
      const LaguerreParams pm = mode_params(decomp.dunkl, mode.m);
      DhModeReport mr;
      mr.m = mode.m;
      mr.j = mode.j;
      mr.lhs_form = quadratic_form(mode.reduced, frac.sigma, FracKind::conformal);
      const auto h = [&](double r) {
        const double gv = mode.profile(r);
        if (gv == 0.0) return 0.0;
        return gv * gv * std::pow(frac.delta + r * r, -frac.sigma) *
               std::pow(r, 2.0 * pm.alpha + 1.0);
      };
      const double pot =
          radial_integral(h, mode.profile.support_lo, mode.profile.support_hi, 1e-10);
      mr.intermediate = constant_B(pm, frac) * pot;
      mr.rhs_potential = b_base * pot;
      mr.gap = mr.lhs_form - mr.rhs_potential;
      if (!(mr.gap >= -1e-8 * std::max(1.0, std::abs(mr.lhs_form)))) all_pass = false;
      rep.lhs_total += mr.lhs_form;
      rep.rhs_total += mr.rhs_potential;
      rep.modes.push_back(mr);
    }
    rep.gap = rep.lhs_total - rep.rhs_total;
    if (!(rep.gap >= -1e-8 * std::max(1.0, std::abs(rep.lhs_total)))) all_pass = false;
    rep.pass = all_pass;
  } catch (const accuracy_error& e) {
    rep.degraded = true;
    rep.pass = false;
    rep.note = e.what();
  }
  return rep;
}

}  // namespace fraclag
