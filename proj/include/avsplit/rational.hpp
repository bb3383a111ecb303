#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace avsplit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

// Parses "p", "-p/q" or "p/q". Throws std::invalid_argument on bad input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

// Dense rational matrix; just enough exact linear algebra for the oracle.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator+(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;

  bool is_zero() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

QMatrix bracket(const QMatrix& x, const QMatrix& y);  // xy - yx

// Rank by fraction-free (Bareiss) elimination on the denominator-cleared
// integer matrix.
int rank(const QMatrix& m);

// Basis of the right kernel {x : m x = 0}, as columns. Exact.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// Incremental echelon span of vectors over Q: used to keep bases of
// subspaces while closing under brackets.
class SpanBuilder {
 public:
  explicit SpanBuilder(int ambient_dim) : dim_(ambient_dim) {}

  // Returns true (and keeps the vector) if v was independent of the span.
  bool add(const std::vector<Rational>& v);
  bool contains(const std::vector<Rational>& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  int dim_;
  std::vector<std::vector<Rational>> rows_;  // echelon rows
  std::vector<int> pivots_;
};

}  // namespace avsplit
