#pragma once

#include <cstddef>
#include <functional>

namespace heisdens {

struct MaximizeResult {
  double argmax = 0.0;
  double max = 0.0;
};

inline constexpr std::size_t kDefaultScanPoints = 512;

/// Maximizes f on [lo, hi]: a uniform scan over scan_points + 1 nodes picks the
/// best cell, then golden-section search refines inside the neighbouring
/// cells until the bracket is narrower than tol. The scan guards against
/// local maxima for objectives not known to be unimodal.
MaximizeResult maximize_1d(const std::function<double(double)>& f, double lo, double hi,
                           double tol, std::size_t scan_points = kDefaultScanPoints);

}  // namespace heisdens
