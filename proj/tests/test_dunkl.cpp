#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fraclag/dunkl.hpp>

#include <cmath>
#include <vector>

using namespace fraclag;

namespace {
double relv(double got, double want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("reduction parameters and the derived radial order") {
  CHECK_THROWS_AS(DunklParams(1, 0.0), std::domain_error);  // lambda = -1/2
  const DunklParams dk(2, 0.25);
  CHECK(dk.lambda == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(mode_params(dk, 3).alpha == doctest::Approx(3.25).epsilon(1e-15));
}

TEST_CASE("oscillator eigenvalues match the reduced radial eigenvalues exactly") {
  const DunklParams dk(3, 0.7);
  for (int m : {0, 1, 4})
    for (int l : {0, 2, 5}) {
      const double ambient = dh_eigenvalue(dk, 2 * l + m);
      const double reduced = eigenvalue(mode_params(dk, m), l);
      CHECK(std::abs(ambient - reduced) < 1e-12);
    }
}

TEST_CASE("ultraspherical-Bessel reduction identity") {
  {
    const auto c = funk_hecke_bessel_check(1.5, 3, 2.0);
    CHECK(relv(c.lhs, 0.0405145217312203621932) < 1e-10);
    CHECK(std::abs(c.lhs - c.rhs) < 1e-10 * std::abs(c.lhs));
  }
  {
    // m = 0: the identity collapses to 2 sinh(z)/z at lambda = 1/2
    const auto c = funk_hecke_bessel_check(0.5, 0, 1.3);
    CHECK(relv(c.lhs, 2.61289605737325509026) < 1e-11);
    CHECK(relv(c.lhs, 2.0 * std::sinh(1.3) / 1.3) < 1e-11);
  }
  for (double lam : {0.75, 1.5})
    for (int m : {0, 1, 2, 3})
      for (double z : {0.6, 2.0}) {
        const auto c = funk_hecke_bessel_check(lam, m, z);
        CHECK(std::abs(c.lhs - c.rhs) < 1e-8 * std::max(1.0, std::abs(c.lhs)));
      }
}

TEST_CASE("radial-times-harmonic projections: direct route equals the reduction") {
  const DunklParams dk2(2, 0.0);
  const auto g0 = make_bump(0.5, 2.0);
  const std::vector<double> x0{0.7, 0.4};
  const auto c = hecke_bochner_check(dk2, 1, 1, g0, x0);
  CHECK(relv(c.direct, 0.0141772633642368532239) < 1e-8);
  CHECK(relv(c.formula, 0.0141772633642368532239) < 1e-8);
  CHECK(std::abs(c.direct - hermite_projection_direct(dk2, 1, g0, 3, x0)) < 1e-14);

  const DunklParams dk3(3, 0.0);
  const std::vector<double> y0{0.4, 0.2, 0.6};
  const auto c3 = hecke_bochner_check(dk3, 1, 0, g0, y0);
  CHECK(std::abs(c3.direct - c3.formula) < 1e-6 * std::max(1.0, std::abs(c3.direct)));
}

TEST_CASE("mode construction reproduces the reduced profile") {
  const DunklParams dk(2, 0.25);
  const auto g = make_bump(0.5, 2.0);
  const auto mode = make_mode(dk, 2, 0, g);
  CHECK(mode.m == 2);
  CHECK(mode.reduced.params.alpha == doctest::Approx(2.25).epsilon(1e-15));
  for (double r : {0.8, 1.3, 1.8})
    CHECK(std::abs(synthesize(mode.reduced, r) - g(r)) < 1e-6);
}

TEST_CASE("modewise heat flow decays at the ambient rates") {
  const DunklParams dk(2, 0.25);
  HHarmonicDecomposition dec{dk, {make_mode(dk, 0, 0, make_bump(0.5, 2.0)),
                                  make_mode(dk, 2, 0, make_bump(1.0, 2.5))}};
  const double t = 0.35;
  const auto flowed = dh_semigroup_modewise(dec, t);
  for (size_t k = 0; k < dec.modes.size(); ++k) {
    const auto& before = dec.modes[k].reduced;
    const auto& after = flowed.modes[k].reduced;
    for (int l = 0; l < 8; ++l) {
      const double rate = dh_eigenvalue(dk, 2 * l + dec.modes[k].m);
      CHECK(std::abs(after.coeffs[l] - before.coeffs[l] * std::exp(-t * rate)) < 1e-14);
    }
  }
}

TEST_CASE("dimensional constants grow with the harmonic degree") {
  const DunklParams dk(2, 0.25);
  const FracParams fr(0.5, 1.0);
  CHECK(relv(constant_B(mode_params(dk, 0), fr), 0.815777218395202023302) < 1e-12);
  CHECK(relv(constant_B(mode_params(dk, 2), fr), 1.28193562890674603662) < 1e-12);
  double prev = constant_B(mode_params(dk, 0), fr);
  for (int m = 1; m <= 10; ++m) {
    const double bm = constant_B(mode_params(dk, m), fr);
    CHECK(bm >= prev * (1.0 - 1e-14));
    prev = bm;
  }
}

TEST_CASE("Hardy chain for a two-mode decomposition against oracle anchors") {
  const DunklParams dk(2, 0.25);
  const FracParams fr(0.5, 1.0);
  HHarmonicDecomposition dec{dk, {make_mode(dk, 0, 0, make_bump(0.5, 2.0)),
                                  make_mode(dk, 2, 0, make_bump(1.0, 2.5))}};
  const auto rep = dh_hardy_verdict(dec, fr);
  REQUIRE(rep.modes.size() == 2);

  // quadratic forms carry the basis-truncation bias of the expansions
  CHECK(relv(rep.modes[0].lhs_form, 0.062838353922791731298) < 3e-3);
  CHECK(relv(rep.modes[1].lhs_form, 1.49319319348576792604) < 3e-3);
  // potential terms are direct quadratures against the oracle bare integrals
  const double pot0 = 0.0148900478869530084567, pot2 = 0.210013982235677079314;
  const double bl = 0.815777218395202023302, bl2 = 1.28193562890674603662;
  CHECK(relv(rep.modes[0].rhs_potential, bl * pot0) < 1e-6);
  CHECK(relv(rep.modes[1].rhs_potential, bl * pot2) < 1e-6);
  CHECK(relv(rep.modes[1].intermediate, bl2 * pot2) < 1e-6);

  for (const auto& mode : rep.modes) {
    CHECK(mode.intermediate >= mode.rhs_potential * (1.0 - 1e-14));
    CHECK(mode.gap > 0.0);
  }
  CHECK(rep.pass);
  CHECK(!rep.degraded);
  CHECK(rep.gap > 0.0);
  CHECK(relv(rep.lhs_total, rep.modes[0].lhs_form + rep.modes[1].lhs_form) < 1e-13);
}

TEST_CASE("fractional form of a decomposition sums the per-mode forms") {
  const DunklParams dk(2, 0.25);
  HHarmonicDecomposition dec{dk, {make_mode(dk, 0, 0, make_bump(0.5, 2.0)),
                                  make_mode(dk, 2, 0, make_bump(1.0, 2.5))}};
  const double total = dh_fractional_form(dec, 0.5);
  double manual = 0.0;
  for (const auto& mode : dec.modes)
    manual += quadratic_form(mode.reduced, 0.5, FracKind::conformal);
  CHECK(relv(total, manual) < 1e-13);
}
