#pragma once

// The two worked examples: a 5-vertex balanced digraph and a 7-vertex directed
// cactus, with their matrices as printed alongside them.

#include <string>
#include <vector>

#include "dicactus/dicactus.hpp"

namespace dicactus::testing {

inline Digraph sample5_graph() {
  return Digraph(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5},
                     {3, 2}, {3, 4}, {4, 1}, {4, 2}, {5, 1}});
}

inline Digraph cactus7_graph() {
  return Digraph(7, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5},
                     {5, 6}, {6, 1}, {1, 7}, {7, 1}});
}

inline Digraph digon() { return Digraph(2, {{1, 2}, {2, 1}}); }

inline RationalMatrix rational_matrix(const std::vector<std::vector<std::string>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = parse_rational(rows[r][c]);
  return m;
}

inline IntegerMatrix integer_matrix(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  return m;
}

inline IntegerMatrix sample5_laplacian() {
  return integer_matrix({{2, -1, -1, 0, 0},
                         {0, 3, -1, -1, -1},
                         {0, -1, 2, -1, 0},
                         {-1, -1, 0, 2, 0},
                         {-1, 0, 0, 0, 1}});
}

inline RationalMatrix sample5_pseudoinverse() {
  return rational_matrix({{"9/35", "0", "1/35", "-3/35", "-1/5"},
                          {"-4/35", "1/5", "-2/35", "-1/35", "0"},
                          {"-6/35", "0", "11/35", "2/35", "-1/5"},
                          {"-1/35", "0", "-4/35", "12/35", "-1/5"},
                          {"2/35", "-1/5", "-6/35", "-2/7", "3/5"}});
}

inline RationalMatrix sample5_resistance() {
  return rational_matrix({{"0", "16/35", "18/35", "27/35", "44/35"},
                          {"24/35", "0", "22/35", "3/5", "4/5"},
                          {"32/35", "18/35", "0", "19/35", "46/35"},
                          {"23/35", "19/35", "31/35", "0", "47/35"},
                          {"26/35", "6/5", "44/35", "53/35", "0"}});
}

inline IntegerMatrix sample5_distance() {
  return integer_matrix({{0, 1, 1, 2, 2},
                         {2, 0, 1, 1, 1},
                         {2, 1, 0, 1, 2},
                         {1, 1, 2, 0, 2},
                         {1, 2, 2, 3, 0}});
}

inline RationalMatrix cactus7_resistance() {
  return rational_matrix({{"0", "6/7", "8/7", "5/7", "1", "9/7", "1"},
                          {"8/7", "0", "2/7", "13/7", "15/7", "17/7", "15/7"},
                          {"6/7", "12/7", "0", "11/7", "13/7", "15/7", "13/7"},
                          {"9/7", "15/7", "17/7", "0", "2/7", "4/7", "16/7"},
                          {"1", "13/7", "15/7", "12/7", "0", "2/7", "2"},
                          {"5/7", "11/7", "13/7", "10/7", "12/7", "0", "12/7"},
                          {"1", "13/7", "15/7", "12/7", "2", "16/7", "0"}});
}

inline IntegerMatrix cactus7_distance() {
  return integer_matrix({{0, 1, 2, 1, 2, 3, 1},
                         {2, 0, 1, 3, 4, 5, 3},
                         {1, 2, 0, 2, 3, 4, 2},
                         {3, 4, 5, 0, 1, 2, 4},
                         {2, 3, 4, 3, 0, 1, 3},
                         {1, 2, 3, 2, 3, 0, 2},
                         {1, 2, 3, 2, 3, 4, 0}});
}

/// Test-only determinant by the Leibniz permutation expansion; independent of
/// the elimination kernels.
inline Rational leibniz_determinant(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  Rational total(0);
  do {
    Rational term(1);
    for (std::size_t r = 0; r < n; ++r) term *= m(r, perm[r]);
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    if (inversions % 2 == 0) total += term;
    else total -= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace dicactus::testing
