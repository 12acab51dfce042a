#include "heisdens/numerics/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace heisdens {

MaximizeResult maximize_1d(const std::function<double(double)>& f, double lo, double hi,
                           double tol, std::size_t scan_points) {
  if (!(lo < hi)) {
    throw std::invalid_argument("maximize_1d: require lo < hi");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("maximize_1d: tol must be positive");
  }
  scan_points = std::max<std::size_t>(scan_points, 2);

  const double step = (hi - lo) / static_cast<double>(scan_points);
  std::size_t best_i = 0;
  double best_f = f(lo);
  for (std::size_t i = 1; i <= scan_points; ++i) {
    const double x = (i == scan_points) ? hi : lo + step * static_cast<double>(i);
    const double y = f(x);
    if (y > best_f) {
      best_f = y;
      best_i = i;
    }
  }
  const double best_x = (best_i == scan_points) ? hi : lo + step * static_cast<double>(best_i);

  // Golden-section search on the two cells adjacent to the best node.
  constexpr double inv_phi = 0.6180339887498948482;
  double a = std::max(lo, best_x - step);
  double b = std::min(hi, best_x + step);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }

  MaximizeResult result{best_x, best_f};
  const double candidates[] = {a, b, c, d};
  const double values[] = {f(a), f(b), fc, fd};
  for (std::size_t i = 0; i < 4; ++i) {
    if (values[i] > result.max) {
      result = {candidates[i], values[i]};
    }
  }
  return result;
}

}  // namespace heisdens
