#include "hopfcoh/rational.hpp"

#include <string>

namespace hopfcoh::rational {

QMatrix QMatrix::from_integers(const std::vector<std::vector<std::int64_t>>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (rows[r].size() != m.cols()) throw Error("ragged rational matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw Error("QMatrix::apply: length mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
  return y;
}

Rational parse(std::string_view text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw Error("malformed rational literal '" + std::string(text) + "'");
  }
}

std::size_t rank(const QMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) lcm = boost::multiprecision::lcm(lcm, denominator(m.at(r, c)));
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = numerator(m.at(r, c)) * (lcm / denominator(m.at(r, c)));
  }
  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[rk][c] * a[i][j] - a[i][c] * a[rk][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

namespace {

// Gauss-Jordan over Q; returns pivot columns, leaves m in reduced form.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  QMatrix w = m;
  auto pivots = rref(w);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw Error("solve: right-hand side length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto pivots = rref(aug);
  std::vector<Rational> x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols()) return std::nullopt;
    x[pivots[r]] = aug.at(r, m.cols());
  }
  return x;
}

}  // namespace hopfcoh::rational
