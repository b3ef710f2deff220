#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace setpart {

using BigUint = boost::multiprecision::cpp_int;

/// Largest n accepted by the exact Bell routines.
inline constexpr int kMaxExactBellN = 1000;

struct ExactBell {
  int n = 0;
  BigUint value;
};

/// An approximation carried in natural-log space. direct_value holds
/// exp(log_value) when that is a finite double.
struct LogApprox {
  int n = 0;
  double log_value = 0.0;
  std::optional<double> direct_value;
};

/// B_n via B_n = 1 + sum_{k=1}^{n-1} C(n-1, k) B_k, with B_0 = 1.
///
/// Values are memoized in a process-wide table: concurrent readers share a
/// lock, growth of the table takes it exclusively. Throws std::out_of_range
/// outside [0, kMaxExactBellN].
ExactBell bell_exact(int n);

/// B_0 .. B_{n_max} from the additive Bell triangle. Shares no code with
/// bell_exact and is used as its cross-check.
std::vector<ExactBell> bell_triangle(int n_max);

/// Moser-Wyman asymptotic estimate, n >= 1.
LogApprox bell_moser_wyman(int n);

/// Berend-Tassa upper bound (0.792 n / ln(n + 1))^n, n >= 1.
LogApprox bell_berend_tassa(int n);

/// |B*_n / B_n - 1| for the Moser-Wyman estimate, 2 <= n <= kMaxExactBellN.
double relative_error_mw(int n);

/// Natural log of a positive big integer from its bit length and leading
/// 64 bits.
double log_of(const BigUint& value);

}  // namespace setpart
