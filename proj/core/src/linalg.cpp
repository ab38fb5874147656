#include "rht/linalg.hpp"

#include <cassert>

#include "rht/errors.hpp"

namespace rht {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw InputError("ragged rows in matrix construction");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
  if (cols.empty()) return QMatrix();
  QMatrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw InputError("ragged columns in matrix construction");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  QVector out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

QVector QMatrix::column(std::size_t j) const {
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols_) throw InputError("matrix/vector size mismatch");
  QVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product size mismatch");
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        if (other.at(k, j) != 0) out.at(i, j) += at(i, k) * other.at(k, j);
    }
  return out;
}

Rref rref(const QMatrix& m) {
  Rref r;
  r.matrix = m;
  QMatrix& a = r.matrix;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
    Rational inv = 1 / a.at(lead, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(lead, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead || a.at(i, col) == 0) continue;
      Rational f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(lead, j);
    }
    r.pivots.push_back(col);
    ++lead;
  }
  r.rank = r.pivots.size();
  return r;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.matrix.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw InputError("solve: rhs size mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Rref r = rref(aug);
  for (auto p : r.pivots)
    if (p == m.cols()) return std::nullopt;  // pivot in the rhs column: inconsistent
  QVector x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    x[r.pivots[i]] = r.matrix.at(i, m.cols());
  return x;
}

bool is_zero_vector(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool member(const std::vector<QVector>& basis, const QVector& v) {
  if (is_zero_vector(v)) return true;
  if (basis.empty()) return false;
  return solve(QMatrix::from_columns(basis), v).has_value();
}

std::optional<QVector> coordinates_in(const std::vector<QVector>& basis, const QVector& v) {
  if (basis.empty()) return is_zero_vector(v) ? std::optional<QVector>(QVector{}) : std::nullopt;
  return solve(QMatrix::from_columns(basis), v);
}

std::vector<std::size_t> independent_subset(const std::vector<QVector>& vectors) {
  std::vector<std::size_t> picked;
  std::vector<QVector> chosen;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (is_zero_vector(vectors[i])) continue;
    if (!member(chosen, vectors[i])) {
      chosen.push_back(vectors[i]);
      picked.push_back(i);
    }
  }
  return picked;
}

}  // namespace rht
