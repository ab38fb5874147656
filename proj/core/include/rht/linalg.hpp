#ifndef RHT_LINALG_HPP
#define RHT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rht/rational.hpp"

namespace rht {

using QVector = std::vector<Rational>;

/* Dense matrix over Q, row major. Sizes here are small (monomial bases in one
 * degree), so no sparsity games. */
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix from_columns(const std::vector<QVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const;
  QMatrix transposed() const;
  bool is_zero() const;

  QVector apply(const QVector& v) const;  // matrix * column vector
  QMatrix operator*(const QMatrix& other) const;
  bool operator==(const QMatrix& other) const = default;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

struct Rref {
  QMatrix matrix;                  // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per pivot row, ascending
  std::size_t rank = 0;
};

/* Gauss-Jordan with exact pivots; first nonzero entry in column order, so the
 * result is deterministic for a given input. */
Rref rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/* Basis of { x : m x = 0 }: one vector per free column, unit in that column.
 * Empty when the kernel is trivial. */
std::vector<QVector> kernel_basis(const QMatrix& m);

/* Some solution of m x = b, or nullopt when inconsistent. */
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/* Whether v lies in the span of `basis`. Zero is in every span. */
bool member(const std::vector<QVector>& basis, const QVector& v);

/* Coordinates of v in `basis` when v lies in its span and the basis vectors
 * are independent; nullopt otherwise. */
std::optional<QVector> coordinates_in(const std::vector<QVector>& basis, const QVector& v);

/* Indices of an independent spanning subset of `vectors`, scanning left to right. */
std::vector<std::size_t> independent_subset(const std::vector<QVector>& vectors);

bool is_zero_vector(const QVector& v);

}  // namespace rht

#endif
