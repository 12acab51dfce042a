#include "heisdens/group.hpp"

#include <cmath>
#include <stdexcept>

namespace heisdens {

bool is_finite(const GroupPoint& p) noexcept {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.t);
}

GroupPoint group_multiply(const GroupPoint& p, const GroupPoint& q) noexcept {
  return {p.x + q.x, p.y + q.y, p.t + q.t - 2.0 * p.x * q.y + 2.0 * q.x * p.y};
}

GroupPoint group_inverse(const GroupPoint& p) noexcept { return {-p.x, -p.y, -p.t}; }

GroupPoint dilate(double s, const GroupPoint& p) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("dilate: scale must be positive and finite");
  }
  return {s * p.x, s * p.y, s * s * p.t};
}

}  // namespace heisdens
