#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cycperm {

/**
 * A polynomial in q with exact int64 coefficients, stored densely by
 * exponent. Trailing zero coefficients are trimmed, so the zero polynomial
 * has no coefficients. Arithmetic throws std::overflow_error rather than
 * wrapping.
 */
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<std::int64_t> coefficients);
  QPoly(std::initializer_list<std::int64_t> coefficients);

  /// c * q^exponent.
  static QPoly monomial(std::size_t exponent, std::int64_t c = 1);

  const std::vector<std::int64_t> &coefficients() const { return coeffs_; }
  std::int64_t coefficient(std::size_t exponent) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  std::int64_t evaluate(std::int64_t q) const;

  QPoly &operator+=(const QPoly &rhs);
  friend QPoly operator+(QPoly lhs, const QPoly &rhs) { return lhs += rhs; }
  friend QPoly operator*(const QPoly &lhs, const QPoly &rhs);

  bool operator==(const QPoly &) const = default;

private:
  void trim();

  std::vector<std::int64_t> coeffs_;
};

/// Gaussian binomial [a choose b]_q. Requires 0 <= b <= a.
QPoly q_binomial(int a, int b);

} // namespace cycperm
