#include "loopspace/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopspace {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Rational> operator*(const Matrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  return out;
}

namespace {

// Index of the pivot row for column c among rows [from, rows): smallest
// magnitude, lowest index on ties. Returns rows if the column is zero there.
template <class Grid, class Magnitude>
std::size_t pick_pivot(const Grid& g, std::size_t rows, std::size_t from, std::size_t c, Magnitude mag) {
  std::size_t best = rows;
  for (std::size_t r = from; r < rows; ++r) {
    if (sgn(g[r][c]) == 0) continue;
    if (best == rows || mag(g[r][c]) < mag(g[best][c])) best = r;
  }
  return best;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer lcm_den = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (lcm_den / m(r, c).get_den());
  }

  Integer prev = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    const std::size_t p = pick_pivot(a, rows, k, c, [](const Integer& z) { return Integer(abs(z)); });
    if (p == rows) continue;
    std::swap(a[k], a[p]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[k][c] * a[i][j] - a[i][c] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[k][c];
    ++k;
  }
  return k;
}

RowEchelon row_reduce(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rational>> a(rows);
  for (std::size_t r = 0; r < rows; ++r) a[r].assign(m.row(r).begin(), m.row(r).end());

  RowEchelon out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    const std::size_t p = pick_pivot(a, rows, k, c, [](const Rational& q) { return Integer(abs(q.get_num())); });
    if (p == rows) continue;
    std::swap(a[k], a[p]);
    const Rational inv = 1 / a[k][c];
    for (std::size_t j = c; j < cols; ++j) a[k][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[k][j];
    }
    out.pivot_columns.push_back(c);
    ++k;
  }
  out.reduced = Matrix::from_rows(a, cols);
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) x[e.pivot_columns[i]] = e.reduced(i, m.cols());
  return x;
}

std::vector<Rational> RowSpace::reduce(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("RowSpace: vector has wrong length");
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = w[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) w[j] -= f * rows_[i][j];
  }
  return w;
}

bool RowSpace::contains(std::span<const Rational> v) const {
  const auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool RowSpace::insert(std::span<const Rational> v) {
  auto w = reduce(v);
  const auto it = std::find_if(w.begin(), w.end(), [](const Rational& q) { return sgn(q) != 0; });
  if (it == w.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - w.begin());
  const Rational inv = 1 / w[pivot];
  for (auto& q : w) q *= inv;
  // Keep existing rows reduced against the new pivot.
  for (auto& row : rows_) {
    const Rational f = row[pivot];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) row[j] -= f * w[j];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace loopspace
