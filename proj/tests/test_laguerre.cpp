#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fraclag/laguerre.hpp>
#include <fraclag/quadrature.hpp>
#include <fraclag/semigroup.hpp>
#include <fraclag/specfun.hpp>

#include <cmath>
#include <vector>

using namespace fraclag;

namespace {
double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

RadialFunction wrap_phi(const LaguerreParams& p, int n) {
  return RadialFunction{[p, n](double r) { return eval_phi(p, n, r); }, 0.0,
                        std::numeric_limits<double>::infinity(), SmoothnessTag::schwartz_like};
}
}  // namespace

TEST_CASE("parameter domain is enforced") {
  CHECK_THROWS_AS(LaguerreParams(-0.6), std::domain_error);
  CHECK_NOTHROW(LaguerreParams(-0.49));
}

TEST_CASE("basis evaluation against references and closed forms") {
  const LaguerreParams p(0.5);
  CHECK(rel(eval_phi(p, 5, 1.3), -0.0540808361493808872807) < 1e-12);
  double factorial = 1.0;
  for (int n = 0; n <= 12; ++n) {
    if (n > 0) factorial *= n;
    CHECK(rel(phi_at_zero(p, n), rising_factorial(p.alpha + 1.0, n) / factorial) < 1e-13);
    CHECK(rel(phi_norm2(p, n), gamma_ratio(n + p.alpha + 1.0, n + 1.0) / 2.0) < 1e-12);
    CHECK(rel(eval_psi(p, n, 1.3), eval_phi(p, n, 1.3) / std::sqrt(phi_norm2(p, n))) < 1e-13);
    CHECK(eigenvalue(p, n) == 4.0 * n + 2.0 * p.alpha + 2.0);
  }
}

TEST_CASE("orthonormality of the psi basis under the radial measure") {
  for (double a : {0.0, 0.5, 2.0}) {
    const LaguerreParams p(a);
    const auto rule = radial_rule(a, 160);
    double worst = 0.0;
    for (int i = 0; i <= 24; ++i)
      for (int j = i; j <= 24; ++j) {
        const double g = apply_rule(rule, [&](double r) {
          return eval_psi(p, i, r) * eval_psi(p, j, r) * std::exp(-r * r);
        });
        // the rule absorbs e^{-r^2}; psi_i psi_j e^{r^2} is a polynomial
        worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("polynomial-Gaussian packets have exact finite expansions") {
  const auto f = make_poly_gauss({1.0, 0.3, 0.1});

  const LaguerreParams ph(0.5);
  const auto vh = analyze(f, ph, 12, radial_rule(0.5, 128));
  const double want_h[3] = {1.825, -0.8, 0.2};
  for (int n = 0; n < 3; ++n)
    CHECK(rel(vh.coeffs[n] / std::sqrt(phi_norm2(ph, n)), want_h[n]) < 1e-12);
  for (int n = 3; n < 12; ++n) CHECK(std::abs(vh.coeffs[n]) < 1e-12);

  const LaguerreParams p0(0.0);
  const auto v0 = analyze(f, p0, 12, radial_rule(0.0, 128));
  const double want_0[3] = {1.5, -0.7, 0.2};
  for (int n = 0; n < 3; ++n)
    CHECK(rel(v0.coeffs[n] / std::sqrt(phi_norm2(p0, n)), want_0[n]) < 1e-12);

  for (double r : {0.0, 0.35, 1.1, 2.6})
    CHECK(rel(synthesize(vh, r), f(r)) < 1e-12);
}

TEST_CASE("bump profile expansion matches extended-precision coefficients") {
  const LaguerreParams p(0.5);
  const auto f = make_bump(1.0, 2.0);
  const auto v = analyze(f, p, 96, radial_rule(0.5, 160));
  const double want[6] = {0.0113854927278756008232, -0.00576741063912664319502,
                          -0.0069058773991787009753, -0.00304015438316636401654,
                          0.000876548318894297457449, 0.00314958457757094838971};
  for (int n = 0; n < 6; ++n)
    CHECK(std::abs(v.coeffs[n] / std::sqrt(phi_norm2(p, n)) - want[n]) < 1e-10);

  const double energy = 0.000219353287420672525144;  // int f^2 dmu
  double sum = 0.0;
  for (double c : v.coeffs) sum += c * c;
  CHECK(sum <= energy + 1e-12);
  CHECK(sum > energy - 1e-6);
}

TEST_CASE("generalized translation: product formula with the rising normalization") {
  const LaguerreParams p(0.5);
  const double tv = translate(p, wrap_phi(p, 3), 0.7, 1.1);
  CHECK(rel(tv, -0.0728668197916437445513) < 1e-8);
  // the falling-factorial normalization would give a very different value
  CHECK(std::abs(tv - 2.5503386927075310593) > 0.1);

  for (double a : {0.5, 2.0}) {
    const LaguerreParams q(a);
    for (int n : {1, 3, 5}) {
      const double lhs = translate(q, wrap_phi(q, n), 0.7, 1.1);
      const double rhs = eval_phi(q, n, 0.7) * eval_phi(q, n, 1.1) / phi_at_zero(q, n);
      CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("translation is symmetric and is the identity at the origin") {
  const LaguerreParams p(0.5);
  const auto f = make_bump(0.5, 2.5);
  CHECK(rel(translate(p, f, 0.9, 1.4), translate(p, f, 1.4, 0.9)) < 1e-9);
  for (double r : {0.6, 1.2, 2.0}) CHECK(rel(translate(p, f, r, 0.0), f(r)) < 1e-12);
}

TEST_CASE("translation conserves total mass") {
  const LaguerreParams p(0.5);
  const auto f = make_bump(0.5, 2.5);
  const double twoa1 = 2.0 * p.alpha + 1.0;
  const auto mu = [&](const std::function<double(double)>& g) {
    return adaptive_integrate([&](double s) { return g(s) * std::pow(s, twoa1); }, 0.0,
                              8.0, 1e-11).value;
  };
  const double mass = mu([&](double s) { return f(s); });
  const double translated = mu([&](double s) { return translate(p, f, 0.9, s); });
  CHECK(std::abs(translated - mass) < 1e-9 * std::max(1.0, std::abs(mass)));
}

TEST_CASE("translation scales spectral coefficients by phi_n(s)/phi_n(0)") {
  const LaguerreParams p(0.5);
  const auto f = make_poly_gauss({1.0, 0.3, 0.1});
  const double s = 0.7;
  RadialFunction tf{[&, s](double r) { return translate(p, f, r, s); }, 0.0,
                    std::numeric_limits<double>::infinity(), SmoothnessTag::schwartz_like};
  const auto v = analyze(f, p, 8, radial_rule(0.5, 128));
  const auto w = analyze(tf, p, 8, radial_rule(0.5, 128));
  for (int n = 0; n < 8; ++n) {
    const double want = v.coeffs[n] * eval_phi(p, n, s) / phi_at_zero(p, n);
    CHECK(std::abs(w.coeffs[n] - want) < 1e-8);
  }
}

TEST_CASE("convolution with the constant function reproduces the semigroup mass") {
  const LaguerreParams p(0.0);
  RadialFunction one{[](double) { return 1.0; }, 0.0,
                     std::numeric_limits<double>::infinity(), SmoothnessTag::schwartz_like};
  const auto q = make_heat_profile(p, 0.4);
  const double got = convolve(p, one, q, 1.2);
  CHECK(rel(got, heat_semigroup_one(p, 0.4, 1.2)) < 1e-9);
  CHECK(rel(got, 0.463541188001920720226) < 1e-9);
}

TEST_CASE("convolution is commutative") {
  const LaguerreParams p(0.5);
  const auto f = make_bump(0.5, 2.5);
  const auto g = make_poly_gauss({1.0, -0.2});
  CHECK(rel(convolve(p, f, g, 1.1), convolve(p, g, f, 1.1)) < 1e-10);
}
