#include "avsplit/rational.hpp"

#include <stdexcept>

namespace avsplit {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text), 1);
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal \"" + text + "\"");
  }
}

std::string to_string(const Rational& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  QMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.numerator() == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum: dimension mismatch");
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference: dimension mismatch");
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
  return out;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x.numerator() != 0) return false;
  return true;
}

QMatrix bracket(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

namespace {

// Clears denominators row by row, giving an integer matrix with the same
// row space.
std::vector<std::vector<Int>> to_integer_rows(const QMatrix& m) {
  std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    Int lcm = 1;
    for (int j = 0; j < m.cols(); ++j) {
      const Int& den = m.at(i, j).denominator();
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& q = m.at(i, j);
      rows[i][j] = q.numerator() * (lcm / q.denominator());
    }
  }
  return rows;
}

// Fraction-free Bareiss elimination to row echelon form. Returns the pivot
// column of each eliminated row.
std::vector<int> bareiss_echelon(std::vector<std::vector<Int>>& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivot_cols;
  Int prev_pivot = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i)
      if (a[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[row], a[pr]);
    const Int pivot = a[row][col];
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        a[i][j] = (a[i][j] * pivot - a[i][col] * a[row][j]) / prev_pivot;
      a[i][col] = 0;
    }
    prev_pivot = pivot;
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int rank(const QMatrix& m) {
  auto rows = to_integer_rows(m);
  return static_cast<int>(bareiss_echelon(rows).size());
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  auto a = to_integer_rows(m);
  const auto pivot_cols = bareiss_echelon(a);
  const int n = m.cols();
  const int r = static_cast<int>(pivot_cols.size());

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[free_col] = Rational(1);
    // Back-substitute through the echelon rows.
    for (int i = r - 1; i >= 0; --i) {
      const int pc = pivot_cols[i];
      Rational s(0);
      for (int j = pc + 1; j < n; ++j)
        if (x[j].numerator() != 0 && a[i][j] != 0) s += Rational(a[i][j]) * x[j];
      x[pc] = -s / Rational(a[i][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Rational> SpanBuilder::reduce(std::vector<Rational> v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const int p = pivots_[k];
    if (v[p].numerator() == 0) continue;
    const Rational c = v[p] / rows_[k][p];
    for (int j = p; j < dim_; ++j) v[j] -= c * rows_[k][j];
  }
  return v;
}

bool SpanBuilder::add(const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("SpanBuilder: wrong dimension");
  std::vector<Rational> red = reduce(v);
  for (int j = 0; j < dim_; ++j) {
    if (red[j].numerator() != 0) {
      // Keep rows sorted by pivot for triangular reduction.
      std::size_t pos = 0;
      while (pos < pivots_.size() && pivots_[pos] < j) ++pos;
      rows_.insert(rows_.begin() + pos, std::move(red));
      pivots_.insert(pivots_.begin() + pos, j);
      return true;
    }
  }
  return false;
}

bool SpanBuilder::contains(const std::vector<Rational>& v) const {
  std::vector<Rational> red = reduce(v);
  for (const auto& x : red)
    if (x.numerator() != 0) return false;
  return true;
}

}  // namespace avsplit
