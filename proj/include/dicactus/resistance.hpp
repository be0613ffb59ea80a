#pragma once

// Resistance distance on balanced, strongly connected digraphs:
//   r_ij = l+_ii + l+_jj - 2 l+_ij
// where L+ is the Moore-Penrose inverse of the out-degree Laplacian.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dicactus/cactus.hpp"
#include "dicactus/digraph.hpp"
#include "dicactus/exact_linalg.hpp"
#include "dicactus/matrix.hpp"
#include "dicactus/rational.hpp"

namespace dicactus {

/// Throws PreconditionError unless `g` is balanced and strongly connected.
inline void require_balanced_strongly_connected(const Digraph& g) {
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.in_degree(v) != g.out_degree(v)) {
      throw PreconditionError("graph is not balanced: vertex " +
                              std::to_string(v) + " has indegree " +
                              std::to_string(g.in_degree(v)) + " and outdegree " +
                              std::to_string(g.out_degree(v)));
    }
  }
  if (!is_strongly_connected(g)) {
    throw PreconditionError("graph is not strongly connected");
  }
}

/// Number of spanning trees rooted at any vertex, det L[{n}^c,{n}^c]. The
/// minor at vertex 1 is evaluated as well; disagreement is an internal error.
inline Integer kappa(const Digraph& g, std::size_t max_dim = kDefaultMaxDimension) {
  require_balanced_strongly_connected(g);
  const IntegerMatrix l = laplacian(g);
  const std::size_t n = g.order();
  Integer at_last = determinant(complement_minor(l, {n}, {n}), max_dim);
  if (n > 1) {
    Integer at_first = determinant(complement_minor(l, {1}, {1}), max_dim);
    if (at_first != at_last) {
      throw std::logic_error("principal cofactors disagree: " + to_string(at_first) +
                             " vs " + to_string(at_last));
    }
  }
  return at_last;
}

/// R from a Moore-Penrose inverse.
inline RationalMatrix resistance_from_pseudoinverse(const RationalMatrix& pinv) {
  const std::size_t n = pinv.dim();
  RationalMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r(i, j) = pinv(i, i) + pinv(j, j) - 2 * pinv(i, j);
  return r;
}

inline RationalMatrix resistance_matrix(const Digraph& g,
                                        std::size_t max_dim = kDefaultMaxDimension) {
  require_balanced_strongly_connected(g);
  return resistance_from_pseudoinverse(moore_penrose_laplacian(laplacian(g), max_dim));
}

namespace detail {

inline VertexSet sorted_pair(Vertex a, Vertex b) {
  return a < b ? VertexSet{a, b} : VertexSet{b, a};
}

inline void check_distinct(const Digraph& g, Vertex i, Vertex j) {
  check_vertex(g, i);
  check_vertex(g, j);
  if (i == j) throw PreconditionError("vertices must be distinct");
}

}  // namespace detail

/// det L[{i,j}^c,{i,j}^c], which counts spanning forests of two trees rooted
/// at i and j.
inline Integer two_forest_count(const Digraph& g, Vertex i, Vertex j,
                                std::size_t max_dim = kDefaultMaxDimension) {
  detail::check_distinct(g, i, j);
  const VertexSet drop = detail::sorted_pair(i, j);
  return determinant(complement_minor(laplacian(g), drop, drop), max_dim);
}

/// 2 det L[{i,j}^c,{i,j}^c] / kappa, which equals r_ij + r_ji.
inline Rational pair_resistance_sum(const Digraph& g, Vertex i, Vertex j,
                                    std::size_t max_dim = kDefaultMaxDimension) {
  detail::check_distinct(g, i, j);
  const Integer k = kappa(g, max_dim);
  return make_rational(2 * two_forest_count(g, i, j, max_dim), k);
}

/// Number of two-tree spanning forests where one tree is rooted at `anchor`
/// and the other is rooted at j and contains i. The anchor is swapped into
/// position n first; then the count is (-1)^(i'+j') det L'[{n,i'}^c,{n,j'}^c].
inline Integer anchored_forest_count(const Digraph& g, Vertex anchor, Vertex i,
                                     Vertex j,
                                     std::size_t max_dim = kDefaultMaxDimension) {
  detail::check_vertex(g, anchor);
  detail::check_vertex(g, i);
  detail::check_vertex(g, j);
  if (i == anchor || j == anchor) {
    throw PreconditionError("i and j must differ from the anchor");
  }
  const std::size_t n = g.order();
  auto swap_to_last = [&](Vertex v) {
    return v == anchor ? n : (v == n ? anchor : v);
  };
  std::vector<Vertex> perm(n);
  for (Vertex v = 1; v <= n; ++v) perm[v - 1] = swap_to_last(v);
  const Digraph moved = relabel(g, perm);
  const Vertex ii = swap_to_last(i);
  const Vertex jj = swap_to_last(j);
  const IntegerMatrix l = laplacian(moved);
  Integer det = determinant(
      complement_minor(l, detail::sorted_pair(ii, n), detail::sorted_pair(jj, n)),
      max_dim);
  if ((ii + jj) % 2 != 0) det = -det;
  if (det < 0) {
    throw std::logic_error("anchored forest count came out negative");
  }
  return det;
}

struct Violation {
  Vertex i = 0;
  Vertex j = 0;
  Rational r;
  Integer d;
};

struct ResistanceReport {
  Digraph graph;
  IntegerMatrix laplacian;
  RationalMatrix pseudoinverse;
  RationalMatrix resistance;
  IntegerMatrix distance;
  Integer kappa;
  bool is_cactus = false;
  bool r_le_d = true;
  /// Every ordered pair with r_ij > d_ij, in row-major order.
  std::vector<Violation> violations;
};

/// Full resistance analysis. On a directed cactus r_le_d is a theorem check;
/// on any other balanced strongly connected digraph it is a conjecture check.
inline ResistanceReport analyze(const Digraph& g,
                                std::size_t max_dim = kDefaultMaxDimension) {
  require_balanced_strongly_connected(g);
  detail::check_guard(g.order(), max_dim);
  IntegerMatrix l = laplacian(g);
  RationalMatrix pinv = moore_penrose_laplacian(l, max_dim);
  RationalMatrix r = resistance_from_pseudoinverse(pinv);
  IntegerMatrix d = distance_matrix(g);
  std::vector<Violation> violations;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) {
      if (r(i, j) > d(i, j)) violations.push_back({i + 1, j + 1, r(i, j), d(i, j)});
    }
  }
  ResistanceReport report{g,
                          std::move(l),
                          std::move(pinv),
                          std::move(r),
                          std::move(d),
                          kappa(g, max_dim),
                          is_directed_cactus(g),
                          violations.empty(),
                          std::move(violations)};
  return report;
}

}  // namespace dicactus
