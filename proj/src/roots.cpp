#include "heisdens/numerics/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace heisdens {

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                 const BracketObserver& observer) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("find_root: tol must be positive");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("find_root: bracket must be finite");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();

  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (std::isnan(fa) || std::isnan(fb)) {
    throw std::invalid_argument("find_root: f is NaN at a bracket end");
  }
  if (fa == 0.0) {
    return a;
  }
  if (fb == 0.0) {
    return b;
  }
  if ((fa > 0.0) == (fb > 0.0)) {
    throw std::invalid_argument("find_root: f(lo) and f(hi) have the same sign");
  }

  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;

  for (int iter = 0; iter < kMaxRootIterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (observer) {
      observer(std::min(b, c), std::max(b, c));
    }
    if (std::abs(xm) <= tol1 || fb == 0.0) {
      return b;
    }

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      const double s = fb / fa;
      double p;
      double q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      }
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }

    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
    fb = f(b);
    if (std::isnan(fb)) {
      throw std::domain_error("find_root: f returned NaN inside the bracket");
    }
  }
  return b;
}

}  // namespace heisdens
