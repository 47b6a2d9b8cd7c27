#include "cycperm/qpoly.hpp"

#include <stdexcept>

namespace cycperm {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("QPoly: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("QPoly: coefficient overflow");
  return r;
}

} // namespace

QPoly::QPoly(std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

QPoly::QPoly(std::initializer_list<std::int64_t> coefficients)
    : QPoly(std::vector<std::int64_t>(coefficients)) {}

QPoly QPoly::monomial(std::size_t exponent, std::int64_t c) {
  std::vector<std::int64_t> coeffs(exponent + 1, 0);
  coeffs[exponent] = c;
  return QPoly(std::move(coeffs));
}

std::int64_t QPoly::coefficient(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : 0;
}

std::int64_t QPoly::evaluate(std::int64_t q) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = checked_add(checked_mul(acc, q), *it);
  return acc;
}

QPoly &QPoly::operator+=(const QPoly &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[k] = checked_add(coeffs_[k], rhs.coeffs_[k]);
  trim();
  return *this;
}

QPoly operator*(const QPoly &lhs, const QPoly &rhs) {
  if (lhs.is_zero() || rhs.is_zero())
    return QPoly();
  std::vector<std::int64_t> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] =
          checked_add(out[i + j], checked_mul(lhs.coeffs_[i], rhs.coeffs_[j]));
  return QPoly(std::move(out));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

QPoly q_binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a)
    throw std::invalid_argument("q_binomial: need 0 <= b <= a");
  // Pascal recurrence [a,b] = [a-1,b-1] + q^b [a-1,b], row by row.
  std::vector<QPoly> row{QPoly{1}};
  for (int r = 1; r <= a; ++r) {
    std::vector<QPoly> next(static_cast<std::size_t>(r) + 1);
    next[0] = QPoly{1};
    next[static_cast<std::size_t>(r)] = QPoly{1};
    for (int k = 1; k < r; ++k)
      next[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] +
          QPoly::monomial(static_cast<std::size_t>(k)) *
              row[static_cast<std::size_t>(k)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

} // namespace cycperm
