#ifndef FRACLAG_SPECFUN_HPP
#define FRACLAG_SPECFUN_HPP

#include <vector>

#include "fraclag/common.hpp"

namespace fraclag {

/// ln Gamma(x) for x > 0. Lanczos approximation, shifted for x < 0.5.
/// abs_err_estimate <= 1e-13 * max(1, |ln Gamma(x)|).
EvalResult log_gamma(double x);

/// Gamma(x) for x > 0, through log_gamma.
double gamma_fn(double x);

/// |Gamma(-s)| for 0 < s < 1, via the reflection identity
/// |Gamma(-s)| = pi / (s * sin(pi s) * Gamma(s)).
double gamma_abs_reflect(double s);

/// Gamma(a)/Gamma(b), a,b > 0, as exp(lnGamma(a) - lnGamma(b)).
double gamma_ratio(double a, double b);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), n >= 0.
double rising_factorial(double x, int n);

/// Modified Bessel I_nu(x), nu >= -1/2, x >= 0.
EvalResult bessel_i(double nu, double x);

/// e^{-x} I_nu(x); overflow-safe for large x.
EvalResult bessel_i_scaled(double nu, double x);

/// Macdonald function K_nu(x), x > 0, any real nu (K_nu = K_{-nu}).
EvalResult bessel_k(double nu, double x);

/// ln K_nu(x); usable where K itself under- or overflows.
EvalResult bessel_k_log(double nu, double x);

/// Laguerre polynomial L_n^alpha(x), three-term recurrence in n.
double laguerre_poly(int n, double alpha, double x);

/// L_0^alpha(x) .. L_nmax^alpha(x) in one forward pass.
std::vector<double> laguerre_seq(int nmax, double alpha, double x);

/// Ultraspherical polynomial of type lambda normalized so P_m(1) = 1.
/// Valid for lambda > -1/2 including lambda = 0 (Chebyshev limit).
double ultraspherical_poly(int m, double lambda, double u);

/// Confluent hypergeometric U(a,b,x), a > 0, x > 0, from the defining
/// integral U = (1/Gamma(a)) int_0^inf e^{-xt} t^{a-1} (1+t)^{b-a-1} dt.
EvalResult kummer_u(double a, double b, double x);

/// L(a,b,c) = int_0^inf e^{-a(2x+1)} x^{b-1} (1+x)^{-c} dx, a,b > 0.
double l_integral(double a, double b, double c);

}  // namespace fraclag

#endif
