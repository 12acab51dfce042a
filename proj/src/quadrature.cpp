#include "heisdens/numerics/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace heisdens {

namespace {

// Kronrod 21-point abscissae on [-1, 1] (positive half, descending). Odd
// indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980178215, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct PanelOrder {
  bool operator()(const Panel& lhs, const Panel& rhs) const { return lhs.error < rhs.error; }
};

double checked_eval(const std::function<double(double)>& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream os;
    os << "integrand is not finite at x = " << x;
    throw std::domain_error(os.str());
  }
  return y;
}

Panel gauss_kronrod_21(const std::function<double(double)>& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 10> f_lo{};
  std::array<double, 10> f_hi{};
  const double f_center = checked_eval(f, center);

  double kronrod = kKronrodWeights[10] * f_center;
  double gauss = 0.0;
  double abs_sum = std::abs(kronrod);

  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * kKronrodNodes[i];
    f_lo[i] = checked_eval(f, center - dx);
    f_hi[i] = checked_eval(f, center + dx);
    const double pair = f_lo[i] + f_hi[i];
    kronrod += kKronrodWeights[i] * pair;
    abs_sum += kKronrodWeights[i] * (std::abs(f_lo[i]) + std::abs(f_hi[i]));
    if (i % 2 == 1) {
      gauss += kGaussWeights[i / 2] * pair;
    }
  }

  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[10] * std::abs(f_center - mean);
  for (std::size_t i = 0; i < 10; ++i) {
    asc += kKronrodWeights[i] * (std::abs(f_lo[i] - mean) + std::abs(f_hi[i] - mean));
  }

  const double value = kronrod * half;
  const double res_abs = abs_sum * std::abs(half);
  const double res_asc = asc * std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  if (res_asc != 0.0 && error != 0.0) {
    error = res_asc * std::min(1.0, std::pow(200.0 * error / res_asc, 1.5));
  }
  if (res_abs > tiny / (50.0 * eps)) {
    error = std::max(50.0 * eps * res_abs, error);
  }
  return Panel{a, b, value, error};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, std::size_t max_subdivisions) {
  if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integrate_adaptive: require finite a <= b");
  }
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("integrate_adaptive: abs_tol must be positive");
  }
  if (a == b) {
    return {};
  }

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> panels;
  panels.push(gauss_kronrod_21(f, a, b));
  std::size_t subdivisions = 0;

  auto totals = [&panels]() {
    // Copy-and-drain keeps the summation order deterministic.
    auto copy = panels;
    std::vector<Panel> all;
    all.reserve(copy.size());
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    double value = 0.0;
    double error = 0.0;
    for (const auto& p : all) {
      value += p.value;
      error += p.error;
    }
    return std::pair{value, error};
  };

  double running_error = panels.top().error;
  while (true) {
    if (running_error <= abs_tol) {
      const auto [value, error] = totals();
      if (error <= abs_tol) {
        return {value, error, subdivisions};
      }
      running_error = error;
    }
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (subdivisions >= max_subdivisions || !(worst.a < mid && mid < worst.b)) {
      const auto [value, error] = totals();
      std::ostringstream os;
      os << "integrate_adaptive: tolerance " << abs_tol << " not reached after " << subdivisions
         << " subdivisions (estimate " << error << ")";
      throw QuadratureError(os.str(), {value, error, subdivisions});
    }
    panels.pop();
    const Panel left = gauss_kronrod_21(f, worst.a, mid);
    const Panel right = gauss_kronrod_21(f, mid, worst.b);
    panels.push(left);
    panels.push(right);
    ++subdivisions;
    running_error += left.error + right.error - worst.error;
    if (running_error < 0.0) {
      running_error = totals().second;
    }
  }
}

}  // namespace heisdens
