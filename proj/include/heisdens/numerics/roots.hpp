#pragma once

#include <functional>

namespace heisdens {

inline constexpr int kMaxRootIterations = 200;

/// Called once per iteration with the current sign-change bracket [lo, hi].
using BracketObserver = std::function<void(double lo, double hi)>;

/// Bracketed root of a continuous f on [lo, hi] (Brent's bisection/secant/
/// inverse-quadratic scheme). Requires f(lo) * f(hi) <= 0; the bracket keeps a
/// sign change at every step. Terminates when the bracket is narrower than
/// tol plus a few ulps of the root, or after kMaxRootIterations steps.
double find_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                 const BracketObserver& observer = {});

}  // namespace heisdens
