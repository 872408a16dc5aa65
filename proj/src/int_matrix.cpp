#include "lefcert/int_matrix.hpp"

#include "lefcert/errors.hpp"

#include <utility>

namespace lefcert {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t.at(c, r) = at(r, c);
    }
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw Error(Err::DimensionMismatch, "matrix product " + std::to_string(rows_) + "x" +
                                            std::to_string(cols_) + " * " +
                                            std::to_string(rhs.rows_) + "x" +
                                            std::to_string(rhs.cols_));
  }
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(r, k);
      if (a == 0) {
        continue;
      }
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        out.at(r, c) += a * rhs.at(k, c);
      }
    }
  }
  return out;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (cols_ != v.size()) {
    throw Error(Err::DimensionMismatch, "matrix-vector product");
  }
  IntVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(at(a, c), at(b, c));
  }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    std::swap(at(r, a), at(r, b));
  }
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
  for (std::size_t c = 0; c < cols_; ++c) {
    at(target, c) += factor * at(source, c);
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Int& factor) {
  for (std::size_t r = 0; r < rows_; ++r) {
    at(r, target) += factor * at(r, source);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) {
    at(r, c) = -at(r, c);
  }
}

}  // namespace lefcert
