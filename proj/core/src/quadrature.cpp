#include "fraclag/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>

#include "fraclag/specfun.hpp"

namespace fraclag {

namespace {

// Gauss-Kronrod (7,15) on [-1,1], QUADPACK abscissae/weights.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
  double a, b;
  double integral;
  double err;
};
struct PanelLess {
  bool operator()(const Panel& p, const Panel& q) const { return p.err < q.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double fv[15];
  double resk = 0.0, resg = 0.0;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    fv[j] = f(c - x);
    fv[14 - j] = f(c + x);
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
  }
  fv[7] = f(c);
  resk += kWgk[7] * fv[7];
  // Gauss nodes are the odd-index Kronrod nodes.
  for (int j = 0; j < 3; ++j) resg += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
  resg += kWg[3] * fv[7];

  const double mean = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  resasc *= std::abs(h);

  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  return Panel{a, b, resk * h, err};
}

// Adaptive GK on a finite interval after all substitutions are applied.
EvalResult adapt_finite(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_panels) {
  std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
  Panel p0 = gk15(f, a, b);
  double total = p0.integral;
  double toterr = p0.err;
  heap.push(p0);
  int used = 1;
  while (!(toterr <= tol * std::max(1.0, std::abs(total)))) {
    if (!std::isfinite(total))
      throw accuracy_error("adaptive_integrate: integrand produced a non-finite value", total,
                           toterr);
    if (used >= max_panels || heap.empty())
      throw accuracy_error("adaptive_integrate: subdivision budget exhausted", total, toterr);
    Panel p = heap.top();
    heap.pop();
    const double m = 0.5 * (p.a + p.b);
    if (!(m > p.a && m < p.b))
      throw accuracy_error("adaptive_integrate: interval collapsed", total, toterr);
    Panel l = gk15(f, p.a, m);
    Panel r = gk15(f, m, p.b);
    total += l.integral + r.integral - p.integral;
    toterr += l.err + r.err - p.err;
    heap.push(l);
    heap.push(r);
    ++used;
  }
  return EvalResult{total, toterr};
}

// Symmetric tridiagonal eigensolver (implicit QL) tracking only the first
// row of the eigenvector matrix; d = diagonal, e = off-diagonal.
void tridiag_first_components(std::vector<double>& d, std::vector<double>& e,
                              std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-15 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw accuracy_error("quadrature rule construction: QL failed to converge", 0.0, 0.0);
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double fv = s * e[i];
          const double b = c * e[i];
          r = std::hypot(fv, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = fv / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          fv = z[i + 1];
          z[i + 1] = s * z[i] + c * fv;
          z[i] = c * z[i] - s * fv;
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

QuadratureRule gauss_from_jacobi(std::vector<double> diag, std::vector<double> offdiag,
                                 double mu0_log, DomainTag tag) {
  const int n = static_cast<int>(diag.size());
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  tridiag_first_components(diag, offdiag, z);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return diag[i] < diag[j]; });
  QuadratureRule rule;
  rule.domain_tag = tag;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  for (int k : idx) {
    rule.nodes.push_back(diag[k]);
    // log form keeps extreme-node weights alive after the e^{+x} unweighting
    rule.weights.push_back(mu0_log + 2.0 * std::log(std::abs(z[k])));
  }
  return rule;
}

}  // namespace

QuadratureRule radial_rule(double alpha, int n_nodes) {
  require(alpha > -0.5, "radial_rule: requires alpha > -1/2");
  require(n_nodes >= 2, "radial_rule: requires n_nodes >= 2");
  require(n_nodes <= 192, "radial_rule: n_nodes beyond supported range");
  // Jacobi matrix of generalized Laguerre weight x^alpha e^{-x}.
  std::vector<double> d(n_nodes), e(n_nodes - 1);
  for (int k = 0; k < n_nodes; ++k) d[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < n_nodes; ++k) e[k - 1] = std::sqrt(k * (k + alpha));
  QuadratureRule rule =
      gauss_from_jacobi(std::move(d), std::move(e), log_gamma(alpha + 1.0).value,
                        DomainTag::radial_mu_alpha);
  // x = r^2: node -> sqrt(x); weight -> e^{+x} w / 2 applied to raw f(r).
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    rule.weights[i] = 0.5 * std::exp(rule.weights[i] + x);
    rule.nodes[i] = std::sqrt(x);
  }
  return rule;
}

QuadratureRule angular_rule(double alpha, int n_nodes) {
  require(alpha > -0.5, "angular_rule: requires alpha > -1/2");
  require(n_nodes >= 2, "angular_rule: requires n_nodes >= 2");
  // Jacobi matrix of the Gegenbauer weight (1-x^2)^{alpha-1/2} on (-1,1).
  std::vector<double> d(n_nodes, 0.0), e(n_nodes - 1);
  for (int k = 1; k < n_nodes; ++k) {
    const double beta = k * (k + 2.0 * alpha - 1.0) / (4.0 * (k + alpha) * (k + alpha - 1.0));
    e[k - 1] = std::sqrt(beta);
  }
  const double mu0_log =
      0.5 * std::log(std::numbers::pi) + log_gamma(alpha + 0.5).value - log_gamma(alpha + 1.0).value;
  QuadratureRule rule =
      gauss_from_jacobi(std::move(d), std::move(e), mu0_log, DomainTag::angular_theta);
  // x = cos(theta); reverse to keep theta ascending.
  std::vector<double> th(rule.nodes.size()), w(rule.nodes.size());
  const std::size_t n = rule.nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    th[n - 1 - i] = std::acos(std::clamp(rule.nodes[i], -1.0, 1.0));
    w[n - 1 - i] = std::exp(rule.weights[i]);
  }
  rule.nodes = std::move(th);
  rule.weights = std::move(w);
  return rule;
}

double apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
  return s;
}

MedaPoint meda_map(double t) {
  require(t > 0.0, "meda_map: requires t > 0");
  const double xi = std::tanh(t);
  return MedaPoint{xi, 1.0 / (1.0 - xi * xi)};
}

double meda_inverse(double xi) {
  require(xi > 0.0 && xi < 1.0, "meda_inverse: requires xi in (0,1)");
  return std::atanh(xi);
}

EvalResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                              double tol, const IntegrandHints& hints) {
  require(tol > 0.0, "adaptive_integrate: requires tol > 0");
  require_finite(a, "adaptive_integrate: lower limit must be finite");
  require(b > a, "adaptive_integrate: requires b > a");

  std::function<double(double)> g = f;
  double lo = a, hi = b;

  if (std::isinf(b)) {
    // u in (0,1), x = a + S u/(1-u); exponential decay of f compresses near u=1.
    const double S = hints.scale > 0.0 ? hints.scale : 1.0;
    auto base = g;
    g = [base, a, S](double u) {
      const double om = 1.0 - u;
      const double x = a + S * u / om;
      return base(x) * S / (om * om);
    };
    lo = 0.0;
    hi = 1.0;
  } else {
    const double pb = hints.exponent_at_b;
    if (pb > -1.0 && pb < 0.0) {
      // (b - x)^pb: mirror substitution b - x = v^{1/(1+pb)} (a-endpoint hint
      // is not combined with this one; no formula here needs both).
      require(!(hints.exponent_at_a > -1.0 && hints.exponent_at_a < 0.0),
              "adaptive_integrate: singular hints at both endpoints unsupported");
      const double q = 1.0 / (1.0 + pb);
      auto base = g;
      const double len = b - a;
      g = [base, b, q](double v) {
        const double t = std::pow(v, q);
        return base(b - t) * q * t / v;
      };
      lo = 0.0;
      hi = std::pow(len, 1.0 + pb);
    }
  }

  const double pa = hints.exponent_at_a;
  if (pa > -1.0 && pa < 0.0) {
    // (x - lo)^pa: substitution x - lo = v^{1/(1+pa)} regularizes the endpoint.
    const double q = 1.0 / (1.0 + pa);
    auto base = g;
    const double l0 = lo;
    g = [base, l0, q](double v) {
      const double t = std::pow(v, q);
      return base(l0 + t) * q * t / v;
    };
    lo = 0.0;
    hi = std::pow(hi - l0, 1.0 + pa);
  }

  return adapt_finite(g, lo, hi, tol, 4000);
}

}  // namespace fraclag
