#pragma once

// Exact dense linear algebra over the integers and rationals.

#include <cstddef>
#include <string>
#include <vector>

#include "dicactus/digraph.hpp"
#include "dicactus/errors.hpp"
#include "dicactus/matrix.hpp"
#include "dicactus/rational.hpp"

namespace dicactus {

/// Default ceiling on matrix dimension for the cubic exact kernels.
inline constexpr std::size_t kDefaultMaxDimension = 512;

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(std::size_t dim)
      : Error("matrix of dimension " + std::to_string(dim) +
              " is singular (det = 0)") {}
  Rational determinant() const { return Rational(0); }
};

namespace detail {

inline void check_guard(std::size_t dim, std::size_t max_dim) {
  if (dim > max_dim) {
    throw GuardError("matrix dimension " + std::to_string(dim) +
                     " exceeds the limit " + std::to_string(max_dim));
  }
}

inline void check_index_set(const VertexSet& set, std::size_t n) {
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (set[k] < 1 || set[k] > n) {
      throw DimensionError("index " + std::to_string(set[k]) + " outside 1.." +
                           std::to_string(n));
    }
    if (k > 0 && set[k - 1] >= set[k]) {
      throw DimensionError("index sets must be strictly ascending");
    }
  }
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant. Every division in the elimination is
/// exact; a non-exact one is an internal error and throws std::logic_error.
inline Integer determinant(const IntegerMatrix& m,
                           std::size_t max_dim = kDefaultMaxDimension) {
  detail::check_guard(m.dim(), max_dim);
  const std::size_t n = m.dim();
  if (n == 0) return Integer(1);
  IntegerMatrix a(m);
  Integer previous(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return Integer(0);
    if (pivot != k) {
      a.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        if (!mpz_divisible_p(t.get_mpz_t(), previous.get_mpz_t())) {
          throw std::logic_error("Bareiss step produced an inexact division");
        }
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Integer input goes through Bareiss; anything else through rational
/// Gaussian elimination with the first nonzero pivot.
inline Rational determinant(const RationalMatrix& m,
                            std::size_t max_dim = kDefaultMaxDimension) {
  detail::check_guard(m.dim(), max_dim);
  if (is_integral(m)) return Rational(determinant(to_integer(m), max_dim));
  const std::size_t n = m.dim();
  RationalMatrix a(m);
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      a.swap_rows(pivot, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational factor = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

/// Gauss-Jordan inverse. Throws SingularMatrixError when det = 0.
inline RationalMatrix inverse(const RationalMatrix& m,
                              std::size_t max_dim = kDefaultMaxDimension) {
  detail::check_guard(m.dim(), max_dim);
  const std::size_t n = m.dim();
  RationalMatrix a(m);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError(n);
    a.swap_rows(pivot, k);
    inv.swap_rows(pivot, k);
    Rational scale = 1 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= scale;
      inv(k, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational factor = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

inline RationalMatrix inverse(const IntegerMatrix& m,
                              std::size_t max_dim = kDefaultMaxDimension) {
  return inverse(to_rational(m), max_dim);
}

/// M[rows^c, cols^c]: drop the 1-based rows in `rows` and columns in `cols`,
/// keep the rest in ascending order. The sets must have equal size.
template <typename T>
SquareMatrix<T> complement_minor(const SquareMatrix<T>& m, const VertexSet& rows,
                                 const VertexSet& cols) {
  if (rows.size() != cols.size()) {
    throw DimensionError("complement minor needs |rows| == |cols|");
  }
  detail::check_index_set(rows, m.dim());
  detail::check_index_set(cols, m.dim());
  auto keep = [&](const VertexSet& drop) {
    std::vector<std::size_t> out;
    std::size_t d = 0;
    for (std::size_t k = 1; k <= m.dim(); ++k) {
      if (d < drop.size() && drop[d] == k) {
        ++d;
        continue;
      }
      out.push_back(k - 1);
    }
    return out;
  };
  const auto r = keep(rows);
  const auto c = keep(cols);
  SquareMatrix<T> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out(i, j) = m(r[i], c[j]);
  return out;
}

/// Classical adjugate from cofactors: adj(M)_ij = (-1)^(i+j) det(M[{j}^c,{i}^c]).
/// The adjugate of a 1x1 matrix is [1].
inline RationalMatrix adjugate(const RationalMatrix& m,
                               std::size_t max_dim = kDefaultMaxDimension) {
  detail::check_guard(m.dim(), max_dim);
  const std::size_t n = m.dim();
  if (n == 0) throw DimensionError("adjugate of a 0x0 matrix is undefined");
  RationalMatrix adj(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      Rational minor = determinant(complement_minor(m, {j}, {i}), max_dim);
      adj(i - 1, j - 1) = (i + j) % 2 == 0 ? minor : Rational(-minor);
    }
  }
  return adj;
}

/// Sum of all cofactors, i.e. 1' adj(M) 1.
inline Rational cofactor_sum(const RationalMatrix& m,
                             std::size_t max_dim = kDefaultMaxDimension) {
  const RationalMatrix adj = adjugate(m, max_dim);
  Rational total(0);
  for (std::size_t r = 0; r < adj.dim(); ++r)
    for (std::size_t c = 0; c < adj.dim(); ++c) total += adj(r, c);
  return total;
}

/// Moore-Penrose inverse of a Laplacian-like integer matrix L with zero row
/// and column sums and rank n-1. With B = L[{n}^c,{n}^c], C = B^-1,
/// x = Ce (row sums of C), y = C'e (column sums) and s = e'Ce:
///
///   L+ = [ C - (1/n)(e y' + x e')   -(1/n) x ]  +  (s/n^2) 11'
///        [      -(1/n) y'               0    ]
inline RationalMatrix moore_penrose_laplacian(
    const IntegerMatrix& l, std::size_t max_dim = kDefaultMaxDimension) {
  detail::check_guard(l.dim(), max_dim);
  const std::size_t n = l.dim();
  if (n == 0) throw DimensionError("Laplacian must have dimension >= 1");
  const auto rows = l.row_sums();
  const auto cols = l.column_sums();
  for (std::size_t k = 0; k < n; ++k) {
    if (rows[k] != 0) {
      throw PreconditionError("row " + std::to_string(k + 1) +
                              " of the Laplacian does not sum to zero");
    }
    if (cols[k] != 0) {
      throw PreconditionError("column " + std::to_string(k + 1) +
                              " of the Laplacian does not sum to zero");
    }
  }
  const IntegerMatrix b = complement_minor(l, {n}, {n});
  if (determinant(b, max_dim) == 0) {
    throw PreconditionError(
        "rank of the Laplacian is below n-1 (det L[{n}^c,{n}^c] = 0)");
  }
  const RationalMatrix c = inverse(b, max_dim);
  const std::size_t m = n - 1;
  const auto x = c.row_sums();
  const auto y = c.column_sums();
  Rational s(0);
  for (const auto& v : x) s += v;

  const Rational nn(static_cast<long>(n));
  const Rational shift = s / (nn * nn);
  RationalMatrix out(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out(i, j) = c(i, j) - (x[i] + y[j]) / nn + shift;
    }
    out(i, m) = -x[i] / nn + shift;
    out(m, i) = -y[i] / nn + shift;
  }
  out(m, m) = shift;
  return out;
}

/// The four Penrose conditions, checked exactly.
inline bool is_moore_penrose(const RationalMatrix& a, const RationalMatrix& x) {
  if (a.dim() != x.dim()) {
    throw DimensionError("is_moore_penrose: dimension mismatch");
  }
  const RationalMatrix ax = a * x;
  const RationalMatrix xa = x * a;
  return ax * a == a && xa * x == x && ax.transposed() == ax &&
         xa.transposed() == xa;
}

}  // namespace dicactus
