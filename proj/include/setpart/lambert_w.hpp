#pragma once

namespace setpart {

/// Result of solving eta * exp(eta) = x on the principal branch.
struct WSolution {
  double x = 0.0;
  double eta = 0.0;
  /// |eta * exp(eta) - x| / max(x, 1)
  double residual = 0.0;
};

/// Principal branch of the Lambert W function for x >= 0.
///
/// Halley iteration started from x / (1 + x) below e and log(1 + x) above.
/// Throws std::domain_error for negative, NaN or infinite input. Pure and
/// reentrant.
WSolution lambert_w0(double x);

}  // namespace setpart
