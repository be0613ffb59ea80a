#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "dicactus/errors.hpp"
#include "dicactus/rational.hpp"

namespace dicactus {

/// Dense square matrix, row-major, 0-based element access. The 0x0 matrix is
/// a valid value.
template <typename T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
      : dim_(rows.size()), data_() {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw DimensionError("matrix rows must be square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix out(dim);
    for (std::size_t k = 0; k < dim; ++k) out(k, k) = T(1);
    return out;
  }

  std::size_t dim() const noexcept { return dim_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * dim_, data_.begin() + (a + 1) * dim_,
                     data_.begin() + b * dim_);
  }

  SquareMatrix transposed() const {
    SquareMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  std::vector<T> row_sums() const {
    std::vector<T> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out[r] += (*this)(r, c);
    return out;
  }

  std::vector<T> column_sums() const {
    std::vector<T> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out[c] += (*this)(r, c);
    return out;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    check_same(a, b);
    SquareMatrix out(a.dim_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      out.data_[k] = a.data_[k] + b.data_[k];
    return out;
  }

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    check_same(a, b);
    SquareMatrix out(a.dim_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      out.data_[k] = a.data_[k] - b.data_[k];
    return out;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    check_same(a, b);
    const std::size_t n = a.dim_;
    SquareMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        const T& lhs = a(r, k);
        if (lhs == 0) continue;
        for (std::size_t c = 0; c < n; ++c) out(r, c) += lhs * b(k, c);
      }
    }
    return out;
  }

  friend SquareMatrix operator*(const T& scalar, const SquareMatrix& m) {
    SquareMatrix out(m);
    for (auto& x : out.data_) x *= scalar;
    return out;
  }

 private:
  static void check_same(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) {
      throw DimensionError("dimension mismatch: " + std::to_string(a.dim_) +
                           " vs " + std::to_string(b.dim_));
    }
  }

  std::size_t dim_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = SquareMatrix<Integer>;
using RationalMatrix = SquareMatrix<Rational>;

inline RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

/// True when every entry has denominator 1.
inline bool is_integral(const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (m(r, c).get_den() != 1) return false;
  return true;
}

inline IntegerMatrix to_integer(const RationalMatrix& m) {
  if (!is_integral(m)) throw DimensionError("matrix has non-integral entries");
  IntegerMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c).get_num();
  return out;
}

}  // namespace dicactus
