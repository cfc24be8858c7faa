#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string_view>
#include <vector>

#include "hopfcoh/field.hpp"

// Characteristic-0 linear algebra. Dense and small: the prime-field path carries
// all heavy computations, this one exists for checking statements over Q.

namespace hopfcoh::rational {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Row-major dense matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix from_integers(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

Rational parse(std::string_view text);

/// Fraction-free (Bareiss) elimination on the integer-scaled matrix.
std::size_t rank(const QMatrix& m);
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);
std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b);

}  // namespace hopfcoh::rational
