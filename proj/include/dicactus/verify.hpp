#pragma once

// The invariant suite run by `dicactus verify`: each check is evaluated
// exactly and reported as pass, fail or skip (not applicable).

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "dicactus/cactus.hpp"
#include "dicactus/exact_linalg.hpp"
#include "dicactus/oracle.hpp"
#include "dicactus/resistance.hpp"

namespace dicactus {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

namespace detail {

inline std::string pair_label(Vertex i, Vertex j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

inline bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace detail

/// Empty string when the sign/support pattern of C = L'[{n}^c,{n}^c]^-1 holds
/// for edge (i,j) of a cactus relabeled so that i = 1 and j = n:
///   c_1k = 1/kappa for k in V_n(1->), 0 for other k in 2..n-1;
///   c_k1 >= 1/kappa for k in V_n(1->).
/// Otherwise a description of the first failure.
inline std::string inverse_row_pattern_failure(const Digraph& g, Vertex i, Vertex j,
                                               std::size_t max_dim = kDefaultMaxDimension) {
  const std::size_t n = g.order();
  const Digraph moved = relabel(g, permutation_to_ends(n, i, j));
  const IntegerMatrix l = laplacian(moved);
  const IntegerMatrix b = complement_minor(l, {n}, {n});
  const Integer k_count = determinant(b, max_dim);
  const RationalMatrix c = inverse(b, max_dim);
  const Rational unit = make_rational(1, k_count);
  const VertexPartition part = reachability_partition(moved, 1, n);
  for (Vertex k = 2; k + 1 <= n; ++k) {
    const bool forward = detail::contains(part.forward, k);
    const Rational expected = forward ? unit : Rational(0);
    if (c(0, k - 1) != expected) {
      return "edge " + detail::pair_label(i, j) + ": c_1" + std::to_string(k) + " = " +
             to_string(c(0, k - 1)) + ", expected " + to_string(expected);
    }
    if (forward && c(k - 1, 0) < unit) {
      return "edge " + detail::pair_label(i, j) + ": c_" + std::to_string(k) + "1 = " +
             to_string(c(k - 1, 0)) + " < 1/kappa";
    }
  }
  return {};
}

/// Empty string when {i,j}, forward and backward partition V disjointly and
/// forward lies inside co_reach.
inline std::string partition_failure(const Digraph& g, Vertex i, Vertex j) {
  const VertexPartition p = reachability_partition(g, i, j);
  std::vector<int> hits(g.order() + 1, 0);
  ++hits[i];
  ++hits[j];
  for (Vertex v : p.forward) ++hits[v];
  for (Vertex v : p.backward) ++hits[v];
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (hits[v] != 1) {
      return "edge " + detail::pair_label(i, j) + ": vertex " + std::to_string(v) +
             " covered " + std::to_string(hits[v]) + " times";
    }
  }
  if (!std::includes(p.co_reach.begin(), p.co_reach.end(), p.forward.begin(),
                     p.forward.end())) {
    return "edge " + detail::pair_label(i, j) + ": forward set not inside co-reach set";
  }
  return {};
}

inline std::vector<CheckResult> verify_invariants(const Digraph& g,
                                                  std::size_t max_dim = kDefaultMaxDimension) {
  const ResistanceReport report = analyze(g, max_dim);
  const std::size_t n = g.order();
  const RationalMatrix& r = report.resistance;
  std::vector<CheckResult> out;
  auto record = [&](std::string name, std::string failure) {
    out.push_back({std::move(name), failure.empty() ? CheckStatus::kPass : CheckStatus::kFail,
                   std::move(failure)});
  };
  auto skip = [&](std::string name, std::string why) {
    out.push_back({std::move(name), CheckStatus::kSkip, std::move(why)});
  };

  record("Moore-Penrose conditions",
         is_moore_penrose(to_rational(report.laplacian), report.pseudoinverse)
             ? ""
             : "L+ fails a Penrose condition");

  {
    std::string fail;
    for (std::size_t i = 0; i < n && fail.empty(); ++i)
      for (std::size_t j = 0; j < n && fail.empty(); ++j)
        if (sgn(r(i, j)) < 0)
          fail = "r" + detail::pair_label(i + 1, j + 1) + " = " + to_string(r(i, j));
    record("resistance nonnegative", fail);
  }

  {
    std::string fail;
    for (std::size_t i = 0; i < n && fail.empty(); ++i)
      for (std::size_t k = 0; k < n && fail.empty(); ++k)
        for (std::size_t j = 0; j < n && fail.empty(); ++j)
          if (r(i, j) > r(i, k) + r(k, j))
            fail = "r" + detail::pair_label(i + 1, j + 1) + " > r" +
                   detail::pair_label(i + 1, k + 1) + " + r" +
                   detail::pair_label(k + 1, j + 1);
    record("triangle inequality", fail);
  }

  {
    std::string fail;
    for (Vertex i = 1; i <= n && fail.empty(); ++i) {
      for (Vertex j = i + 1; j <= n && fail.empty(); ++j) {
        const Rational lhs = pair_resistance_sum(g, i, j, max_dim);
        if (lhs != r(i - 1, j - 1) + r(j - 1, i - 1)) {
          fail = "pair " + detail::pair_label(i, j) + ": 2 det/kappa = " + to_string(lhs);
        }
      }
    }
    record("pair sum identity r_ij + r_ji = 2 det L[{i,j}^c,{i,j}^c] / kappa", fail);
  }

  {
    std::string fail;
    for (const Edge& e : g.edges()) {
      const Integer forests = two_forest_count(g, e.from, e.to, max_dim);
      if (forests > report.kappa) {
        fail = "edge " + detail::pair_label(e.from, e.to) + ": " + to_string(forests) +
               " > kappa = " + to_string(report.kappa);
        break;
      }
    }
    record("edge-pair two-tree forests <= kappa", fail);
  }

  {
    std::string fail;
    bool applicable = false;
    for (const Edge& e : g.edges()) {
      if (g.out_degree(e.from) != 1 && g.out_degree(e.to) != 1) continue;
      applicable = true;
      if (r(e.from - 1, e.to - 1) > 1) {
        fail = "edge " + detail::pair_label(e.from, e.to) +
               ": r = " + to_string(r(e.from - 1, e.to - 1));
        break;
      }
    }
    const std::string name = "edge with a degree-1 endpoint has r <= 1";
    if (applicable) record(name, fail);
    else skip(name, "no edge has an endpoint of degree 1");
  }

  const std::string partition_name = "reachability partition covers V (cactus edges)";
  const std::string pattern_name = "inverse row pattern of L[{n}^c,{n}^c]^-1 (cactus edges)";
  const std::string paths_name = "unique simple path between every ordered pair (cactus)";
  if (report.is_cactus) {
    std::string partition_fail;
    std::string pattern_fail;
    for (const Edge& e : g.edges()) {
      if (partition_fail.empty()) partition_fail = partition_failure(g, e.from, e.to);
      if (pattern_fail.empty())
        pattern_fail = inverse_row_pattern_failure(g, e.from, e.to, max_dim);
    }
    record(partition_name, partition_fail);
    record(pattern_name, pattern_fail);
    if (n <= oracle::kMaxVertices && g.size() <= oracle::kMaxEdgesPerVertex * n) {
      std::string fail;
      for (Vertex i = 1; i <= n && fail.empty(); ++i) {
        for (Vertex j = 1; j <= n && fail.empty(); ++j) {
          if (i == j) continue;
          const auto paths = oracle::enumerate_simple_paths(g, i, j);
          if (paths.size() != 1) {
            fail = detail::pair_label(i, j) + " has " + std::to_string(paths.size()) +
                   " simple paths";
          } else if (paths.front().size() - 1 != report.distance(i - 1, j - 1)) {
            fail = detail::pair_label(i, j) + ": path length differs from distance";
          }
        }
      }
      record(paths_name, fail);
    } else {
      skip(paths_name, "graph exceeds the enumeration guard");
    }
  } else {
    skip(partition_name, "not a directed cactus");
    skip(pattern_name, "not a directed cactus");
    skip(paths_name, "not a directed cactus");
  }

  std::string rd_fail;
  if (!report.violations.empty()) {
    const Violation& v = report.violations.front();
    rd_fail = std::to_string(report.violations.size()) + " violation(s), first r" +
              detail::pair_label(v.i, v.j) + " = " + to_string(v.r) + " > d = " +
              to_string(v.d);
  }
  record(report.is_cactus ? "r <= d (theorem check)" : "r <= d (conjecture check)", rd_fail);
  return out;
}

}  // namespace dicactus
