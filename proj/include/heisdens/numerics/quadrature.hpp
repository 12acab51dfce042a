#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace heisdens {

/// Result of an adaptive integration: the value, a conservative absolute
/// error estimate and the number of panel bisections performed.
struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t subdivisions = 0;
};

/// Thrown when the requested tolerance cannot be met within the subdivision
/// cap. Carries the best estimate reached so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_(best) {}

  const QuadratureResult& best() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

inline constexpr std::size_t kDefaultMaxSubdivisions = 4000;

/// Globally adaptive Gauss-Kronrod (10/21 point) integration of f over [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below abs_tol. Panel errors use the QUADPACK scaling of
/// |K21 - G10|, which overestimates the true error for smooth integrands.
/// f must be finite on the open interval; endpoints are never evaluated.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    std::size_t max_subdivisions = kDefaultMaxSubdivisions);

}  // namespace heisdens
