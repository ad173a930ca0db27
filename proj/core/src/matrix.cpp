#include <corners/matrix.hpp>
#include <corners/errors.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace corners {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  bool seen_slash = false, digit_before = false, digit_after = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (seen_slash) throw ParseError("malformed rational: " + s);
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("malformed rational: " + s);
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw ParseError("malformed rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

std::vector<Rational> Matrix::col(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool Matrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if (sgn((*this)(r, c)) != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> keep) const {
  Matrix m(keep.size(), cols_);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(keep[i], c);
  return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> keep) const {
  Matrix m(rows_, keep.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < keep.size(); ++i) m(r, i) = (*this)(r, keep[i]);
  return m;
}

Matrix Matrix::drop_row(std::size_t r) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows_; ++i)
    if (i != r) keep.push_back(i);
  return select_rows(keep);
}

Matrix Matrix::drop_col(std::size_t c) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < cols_; ++i)
    if (i != c) keep.push_back(i);
  return select_cols(keep);
}

Matrix Matrix::insert_zero_row(std::size_t r) const {
  Matrix m(rows_ + 1, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i < r ? i : i + 1, c) = (*this)(i, c);
  return m;
}

Matrix Matrix::insert_zero_col(std::size_t c) const {
  return transpose().insert_zero_row(c).transpose();
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + a.data_.size());
  return m;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) m(a.rows_ + r, a.cols_ + c) = b(r, c);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& v = (*this)(r, k);
      if (sgn(v) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) m(r, c) += v * rhs(k, c);
    }
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& v : m.data_) v = -v;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).get_str();
    }
  }
  os << ']';
  return os.str();
}

std::vector<Rational> operator*(const Matrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector: shape mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

RowEchelon row_echelon(Matrix m) {
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
    Rational inv = 1 / m(lead, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(lead, k);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t f = free_cols[j];
    k(f, j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = -e.reduced(r, f);
  }
  return k;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rational factor = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RowEchelon e = row_echelon(Matrix::hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  std::vector<std::size_t> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
  return e.reduced.select_cols(right);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  RowEchelon e = row_echelon(Matrix::hstack(a, b));
  if (e.pivots.size() < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (e.pivots[i] != i) return std::nullopt;
  if (e.pivots.size() > n) return std::nullopt;  // inconsistent
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = e.reduced(r, n + c);
  return x;
}

std::vector<std::size_t> independent_columns(const Matrix& m, bool from_right) {
  if (!from_right) return row_echelon(m).pivots;
  std::vector<std::size_t> order(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) order[i] = m.cols() - 1 - i;
  std::vector<std::size_t> picked;
  for (auto p : row_echelon(m.select_cols(order)).pivots) picked.push_back(order[p]);
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace corners
