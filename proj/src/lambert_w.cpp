#include "setpart/lambert_w.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace setpart {
namespace {

constexpr int kMaxIterations = 50;
constexpr double kRelativeStep = 1e-14;

// eta - x * exp(-eta), i.e. (eta * exp(eta) - x) scaled by exp(-eta) so the
// iteration never overflows for x close to the largest double.
double scaled_defect(double eta, double x) { return eta - x * std::exp(-eta); }

double residual_of(double eta, double x) {
  const double g = scaled_defect(eta, x);
  if (x <= 1.0) return std::abs(g) * std::exp(eta);
  return std::abs(g) / (x * std::exp(-eta));
}

}  // namespace

WSolution lambert_w0(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("lambert_w0: argument must be finite and >= 0, got " +
                            std::to_string(x));
  }
  if (x == 0.0) return {x, 0.0, 0.0};

  double eta = x < std::numbers::e ? x / (1.0 + x) : std::log1p(x);
  for (int i = 0; i < kMaxIterations; ++i) {
    // Halley on f(eta) = eta e^eta - x with f, f', f'' all divided by e^eta.
    const double g = scaled_defect(eta, x);
    const double d1 = eta + 1.0;
    const double step = g / (d1 - (eta + 2.0) * g / (2.0 * d1));
    const double next = eta - step;
    const bool done = std::abs(step) <= kRelativeStep * std::abs(next);
    eta = std::max(next, 0.0);
    if (done) break;
  }
  return {x, eta, residual_of(eta, x)};
}

}  // namespace setpart
