#include "nilhodge/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace nilhodge {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector conj(const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.conj());
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v);
  for (auto& x : out) x *= s;
  return out;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw std::invalid_argument("Matrix: entries length must equal rows * cols");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::select(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const {
  Matrix m(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c)
      m(r, c) = (*this)(row_idx[r], col_idx[c]);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix m(*this);
  for (auto& s : m.data_) s = s.conj();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << nilhodge::to_string(row(r));
  }
  os << ']';
  return os.str();
}

Echelon row_reduce(Matrix m) {
  Echelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      for (std::size_t k = c; k < cols; ++k) std::swap(m(piv, k), m(lead, k));
    if (!m(lead, c).is_one()) {
      const Scalar inv = Scalar(1) / m(lead, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(lead, k).is_zero()) m(lead, k) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const Scalar f = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(lead, k).is_zero()) m(r, k) -= f * m(lead, k);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) return row_reduce(m.transpose()).pivots.size();
  return row_reduce(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  std::vector<Vector> basis;
  if (m.rows() == 0) {
    for (std::size_t c = 0; c < cols; ++c) basis.push_back(unit_vector(cols, c));
    return basis;
  }
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.reduced(r, f).is_zero()) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> span_basis(std::span<const Vector> vectors, std::size_t dim) {
  std::vector<Vector> out;
  if (vectors.empty()) return out;
  const Echelon e = row_reduce(Matrix::from_rows(vectors, dim));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

bool in_span(const Vector& v, std::span<const Vector> basis) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<Vector> all(basis.begin(), basis.end());
  const std::size_t before = rank(Matrix::from_rows(all, v.size()));
  all.push_back(v);
  return rank(Matrix::from_rows(all, v.size())) == before;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_reduce(std::move(aug));
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Vector SpanBuilder::reduce(Vector v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    const Scalar f = v[p];
    for (std::size_t k = p; k < dim_; ++k)
      if (!rows_[r][k].is_zero()) v[k] -= f * rows_[r][k];
  }
  return v;
}

bool SpanBuilder::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool SpanBuilder::add(const Vector& v) {
  Vector w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = Scalar(1) / w[p];
  for (std::size_t k = p; k < dim_; ++k)
    if (!w[k].is_zero()) w[k] *= inv;
  // Pivots are not kept sorted, so a later row may have a nonzero entry at an
  // earlier row's pivot; reduce() handles that because it sweeps in insertion
  // order and each row is already clear at all earlier pivots.
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

} // namespace nilhodge
