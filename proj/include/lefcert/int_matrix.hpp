#pragma once

#include "lefcert/numeric.hpp"

#include <cstddef>
#include <vector>

namespace lefcert {

/// Dense matrix over arbitrary-precision integers. Arithmetic never wraps.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;  // DimensionMismatch on shape error
  IntVec operator*(const IntVec& v) const;

  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Int& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace lefcert
