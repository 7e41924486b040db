#ifndef FRACLAG_DUNKL_HPP
#define FRACLAG_DUNKL_HPP

#include <string>
#include <vector>

#include "fraclag/laguerre.hpp"
#include "fraclag/semigroup.hpp"
#include "fraclag/weights.hpp"

namespace fraclag {

/// Reduction parameters: ambient dimension d, multiplicity sum gamma, and the
/// derived radial order lambda = d/2 + gamma - 1 (must exceed -1/2).
struct DunklParams {
  DunklParams(int d_, double gamma_)
      : d(d_), gamma(gamma_), lambda(0.5 * d_ + gamma_ - 1.0) {
    require(d_ >= 1, "DunklParams: requires d >= 1");
    require(gamma_ >= 0.0, "DunklParams: requires gamma >= 0");
    require(lambda > -0.5, "DunklParams: requires d/2 + gamma - 1 > -1/2");
  }
  int d;
  double gamma;
  double lambda;
};

/// Oscillator eigenvalue at total degree `level`: 2 level + d + 2 gamma.
double dh_eigenvalue(const DunklParams& dk, int level);

/// Radial Laguerre order carrying harmonic degree m: lambda + m.
LaguerreParams mode_params(const DunklParams& dk, int m);

/// One harmonic mode: degree m, index j, reduced radial profile
/// g_{m,j}(r) = r^{-m} f_{m,j}(r) held both pointwise and spectrally at order
/// lambda + m.
struct HMode {
  int m = 0;
  int j = 0;
  RadialFunction profile;
  SpectralVector reduced;
};

struct HHarmonicDecomposition {
  DunklParams dunkl;
  std::vector<HMode> modes;
};

HMode make_mode(const DunklParams& dk, int m, int j, const RadialFunction& g,
                int truncation = 96, int rule_nodes = 160);

/// Ultraspherical-Bessel reduction identity
///   int_{-1}^1 e^{zu} P_m^lambda(u) (1-u^2)^{lambda-1/2} du
///     = sqrt(pi) Gamma(lambda+1/2) (z/2)^{-lambda} I_{lambda+m}(z)
/// with P_m^lambda normalized to 1 at u = 1; returns both sides.
IdentityCheck funk_hecke_bessel_check(double lambda, int m, double z);

/// Direct eigenlevel projection of f(x) = |x|^m g0(|x|) Y_m(x/|x|) at the
/// reflection-free case (gamma = 0, d in {2,3}), evaluated at the point x0:
/// tensor-Hermite coefficients at total degree `level` times the basis values.
/// Y_m is the zonal harmonic (d=2: cos(m theta); d=3: Legendre P_m(u3)).
double hermite_projection_direct(const DunklParams& dk, int m, const RadialFunction& g0,
                                 int level, const std::vector<double>& x0);

struct HeckeBochnerCheck {
  double direct;   // tensor-Hermite projection at level 2n+m
  double formula;  // r^m (2/Gamma(lambda+m+1)) [g0 *_{lambda+m} phi_n] times Y_m
};

/// Both routes to the projection of |x|^m g0(|x|) Y_m at level 2n+m.
HeckeBochnerCheck hecke_bochner_check(const DunklParams& dk, int m, int n,
                                      const RadialFunction& g0,
                                      const std::vector<double>& x0);

/// Heat flow mode by mode: each reduced profile evolves at its own order
/// lambda + m, so mode (m, radial index l) decays by e^{-t(4l + 2m + d + 2gamma)}.
HHarmonicDecomposition dh_semigroup_modewise(HHarmonicDecomposition decomp, double t);

/// Fractional quadratic form of the decomposition: sum over modes of the
/// order-(lambda+m) spectral form.
double dh_fractional_form(const HHarmonicDecomposition& decomp, double sigma);

struct DhModeReport {
  int m = 0;
  int j = 0;
  double lhs_form = 0.0;       // <L_{lambda+m,sigma} g, g>
  double intermediate = 0.0;   // B_{lambda+m} * potential integral (per-mode bound)
  double rhs_potential = 0.0;  // B_{lambda} * potential integral
  double gap = 0.0;            // lhs_form - rhs_potential
};

struct DhHardyReport {
  int d = 0;
  double gamma = 0.0;
  double lambda = 0.0;
  double sigma = 0.0;
  double delta = 0.0;
  std::vector<DhModeReport> modes;
  double lhs_total = 0.0;
  double rhs_total = 0.0;
  double gap = 0.0;
  bool pass = false;
  bool degraded = false;
  std::string note;
};

/// Hardy chain for the decomposition: per-mode forms against the dimensional
/// constant B_{lambda,sigma}^delta, with the per-mode intermediate bound
/// B_{lambda+m} >= B_{lambda} reported alongside.
DhHardyReport dh_hardy_verdict(const HHarmonicDecomposition& decomp,
                               const FracParams& frac);

}  // namespace fraclag

#endif
