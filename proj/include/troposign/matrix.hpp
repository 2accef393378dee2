#pragma once

#include <cstddef>
#include <vector>

#include "troposign/scalar.hpp"

namespace troposign {

// Dense row-major matrix with positive dimensions.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(checked_size(rows, cols), fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows.front().empty()) throw Error("matrix dimensions must be positive");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static std::size_t checked_size(std::size_t r, std::size_t c) {
    if (r == 0 || c == 0) throw Error("matrix dimensions must be positive");
    return r * c;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using TropVec = std::vector<TropNum>;
using SignedVec = std::vector<SignedTrop>;
using TropMat = Matrix<TropNum>;
using SignedMat = Matrix<SignedTrop>;
using RatMat = Matrix<Rational>;

}  // namespace troposign
