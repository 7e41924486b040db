#ifndef FRACLAG_COMMON_HPP
#define FRACLAG_COMMON_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace fraclag {

/// A numerical value together with an absolute error estimate.
struct EvalResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
};

/// Thrown when an integration or summation cannot reach the requested
/// accuracy. Carries the best value obtained so far and its error estimate.
class accuracy_error : public std::runtime_error {
public:
  accuracy_error(const std::string& what, double partial, double err)
      : std::runtime_error(what), partial_value(partial), err_estimate(err) {}
  double partial_value;
  double err_estimate;
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

inline void require_finite(double x, const char* msg) {
  if (!std::isfinite(x)) throw std::domain_error(msg);
}

}  // namespace fraclag

#endif
