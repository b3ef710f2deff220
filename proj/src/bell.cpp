#include "setpart/bell.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "setpart/lambert_w.hpp"

namespace setpart {
namespace {

void check_exact_range(int n, int lo, const char* what) {
  if (n < lo || n > kMaxExactBellN) {
    throw std::out_of_range(std::string(what) + ": n must be in [" + std::to_string(lo) +
                            ", " + std::to_string(kMaxExactBellN) + "], got " +
                            std::to_string(n));
  }
}

class BellMemo {
 public:
  BigUint get(int n) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<int>(values_.size())) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend_to(n);
    return values_[n];
  }

 private:
  // Appends B_m for m = size()..n. Row m-1 of Pascal's triangle is built
  // multiplicatively, C(m-1, k+1) = C(m-1, k) * (m-1-k) / (k+1).
  void extend_to(int n) {
    if (values_.empty()) values_.push_back(1);
    for (int m = static_cast<int>(values_.size()); m <= n; ++m) {
      BigUint sum = 1;
      BigUint binom = 1;
      for (int k = 1; k <= m - 1; ++k) {
        binom *= (m - k);
        binom /= k;
        sum += binom * values_[k];
      }
      values_.push_back(std::move(sum));
    }
  }

  std::shared_mutex mutex_;
  std::vector<BigUint> values_;
};

BellMemo& memo() {
  static BellMemo instance;
  return instance;
}

LogApprox make_approx(int n, double log_value) {
  LogApprox out{n, log_value, std::nullopt};
  if (log_value < std::log(std::numeric_limits<double>::max())) {
    out.direct_value = std::exp(log_value);
  }
  return out;
}

}  // namespace

ExactBell bell_exact(int n) {
  check_exact_range(n, 0, "bell_exact");
  return {n, memo().get(n)};
}

std::vector<ExactBell> bell_triangle(int n_max) {
  check_exact_range(n_max, 0, "bell_triangle");
  std::vector<ExactBell> out;
  out.reserve(n_max + 1);
  out.push_back({0, 1});

  // Each row starts with the last entry of the previous one; every further
  // entry is its left neighbour plus the entry above that neighbour. The row
  // heads are B_0, B_1, B_2, ...
  std::vector<BigUint> row{1};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<BigUint> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const BigUint& above : row) next.push_back(next.back() + above);
    row = std::move(next);
    out.push_back({n, row.front()});
  }
  return out;
}

LogApprox bell_moser_wyman(int n) {
  if (n < 1) throw std::out_of_range("bell_moser_wyman: n must be >= 1");
  const double nn = n;
  const double w = lambert_w0(nn).eta;
  const double wp1 = w + 1.0;
  const double correction =
      1.0 - w * w * (2.0 * w * w + 7.0 * w + 10.0) / (24.0 * nn * wp1 * wp1 * wp1);
  const double log_value =
      nn * w + nn / w - nn - 1.0 - 0.5 * std::log(wp1) + std::log(correction);
  return make_approx(n, log_value);
}

LogApprox bell_berend_tassa(int n) {
  if (n < 1) throw std::out_of_range("bell_berend_tassa: n must be >= 1");
  const double nn = n;
  return make_approx(n, nn * (std::log(0.792 * nn) - std::log(std::log(nn + 1.0))));
}

double relative_error_mw(int n) {
  check_exact_range(n, 2, "relative_error_mw");
  const double log_exact = log_of(bell_exact(n).value);
  return std::abs(std::expm1(bell_moser_wyman(n).log_value - log_exact));
}

double log_of(const BigUint& value) {
  if (value <= 0) throw std::domain_error("log_of: value must be positive");
  const unsigned top_bit = boost::multiprecision::msb(value);
  if (top_bit < 64) return std::log(static_cast<double>(value.convert_to<std::uint64_t>()));
  const unsigned shift = top_bit - 63;
  const auto lead = static_cast<std::uint64_t>(value >> shift);
  return std::log(static_cast<long double>(lead)) +
         static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
}

}  // namespace setpart
