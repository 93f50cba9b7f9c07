#pragma once

#include "qtoric/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qtoric {

/* Dense rational matrix, row-major. All elimination is exact. */
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  QVec row(std::size_t i) const;
  QVec col(std::size_t j) const;
  QMatrix transposed() const;

  bool operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

QMatrix mul(const QMatrix& a, const QMatrix& b);
QVec mul(const QMatrix& a, const QVec& x);

Rat det(QMatrix a);
std::size_t rank(QMatrix a);

/* Unique solution of a square system, or nullopt when singular. */
std::optional<QVec> solve_square(QMatrix a, QVec b);

/* Inverse of a nonsingular square matrix, or nullopt. */
std::optional<QMatrix> inverse(const QMatrix& a);

/* Reduced row echelon form; pivot column indices appended to *pivots. */
QMatrix rref(QMatrix a, std::vector<std::size_t>* pivots = nullptr);

}  // namespace qtoric
