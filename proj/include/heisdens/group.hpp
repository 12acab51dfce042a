#pragma once

namespace heisdens {

/// Point (x, y, t) of the first Heisenberg group in exponential coordinates.
/// x and y are horizontal (length); t is vertical (length squared).
///
/// The left-invariant horizontal frame is X = d/dx + 2y d/dt and
/// Y = d/dy - 2x d/dt; it is implicit in the group law below and is not
/// represented as data.
struct GroupPoint {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;

  bool operator==(const GroupPoint&) const = default;
};

inline constexpr GroupPoint kOrigin{};

bool is_finite(const GroupPoint& p) noexcept;

/// (x, y, t) . (x', y', t') = (x + x', y + y', t + t' - 2xy' + 2x'y).
GroupPoint group_multiply(const GroupPoint& p, const GroupPoint& q) noexcept;

/// (-x, -y, -t).
GroupPoint group_inverse(const GroupPoint& p) noexcept;

/// Anisotropic dilation (sx, sy, s^2 t). Throws std::invalid_argument unless s > 0.
GroupPoint dilate(double s, const GroupPoint& p);

}  // namespace heisdens
