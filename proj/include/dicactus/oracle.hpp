#pragma once

// Brute-force ground truth: rooted spanning trees, constrained spanning
// forests, simple paths and directed cycles, all by exhaustive enumeration.
// Every entry point refuses graphs beyond the enumeration guard instead of
// returning partial results.
//
// Forest enumeration assigns each non-root vertex one incoming edge (its
// parent) and discards assignments that close a cycle, so the work is the
// product of the non-root indegrees rather than a subset search.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "dicactus/digraph.hpp"
#include "dicactus/errors.hpp"
#include "dicactus/rational.hpp"

namespace dicactus::oracle {

inline constexpr std::size_t kMaxVertices = 10;
inline constexpr std::size_t kMaxEdgesPerVertex = 3;
inline constexpr std::size_t kMaxDeltaSize = 3;

/// Tree membership marks (delta1) and tree roots (delta2), equal sizes.
struct ForestConstraint {
  VertexSet delta1;
  VertexSet delta2;
};

struct EdgeSetEnumeration {
  std::size_t count = 0;
  /// Each edge set sorted; the list in enumeration order.
  std::vector<std::vector<Edge>> edge_sets;
};

inline void check_guard(const Digraph& g) {
  if (g.order() > kMaxVertices || g.size() > kMaxEdgesPerVertex * g.order()) {
    throw GuardError("enumeration guard: need n <= " + std::to_string(kMaxVertices) +
                     " and |E| <= 3n, got n = " + std::to_string(g.order()) +
                     ", |E| = " + std::to_string(g.size()));
  }
}

namespace detail {

inline void check_set(const Digraph& g, const VertexSet& s, const char* name) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!g.contains(s[k])) {
      throw PreconditionError(std::string(name) + " has vertex " +
                              std::to_string(s[k]) + " outside the graph");
    }
    if (k > 0 && s[k - 1] >= s[k]) {
      throw PreconditionError(std::string(name) + " must be strictly ascending");
    }
  }
}

inline void check_constraint(const Digraph& g, const ForestConstraint& c) {
  if (c.delta1.size() != c.delta2.size()) {
    throw PreconditionError("forest constraint needs |delta1| == |delta2|");
  }
  check_set(g, c.delta1, "delta1");
  check_set(g, c.delta2, "delta2");
}

/// Visits every spanning forest whose roots are exactly `roots`, as a parent
/// array (parent[root] == 0) plus the root of every vertex.
template <typename Visit>
void for_each_rooted_forest(const Digraph& g, const VertexSet& roots, Visit&& visit) {
  const std::size_t n = g.order();
  std::vector<bool> is_root(n + 1, false);
  for (Vertex r : roots) is_root[r] = true;
  std::vector<Vertex> free;
  for (Vertex v = 1; v <= n; ++v) {
    if (is_root[v]) continue;
    if (g.in_degree(v) == 0) return;
    free.push_back(v);
  }

  std::vector<std::size_t> choice(free.size(), 0);
  std::vector<Vertex> parent(n + 1, 0);
  std::vector<Vertex> root_of(n + 1, 0);
  std::vector<int> state(n + 1, 0);
  std::vector<Vertex> trail;
  while (true) {
    for (std::size_t k = 0; k < free.size(); ++k) {
      parent[free[k]] = g.in_neighbors(free[k])[choice[k]];
    }
    // 0 = unknown, 1 = on the current walk, 2 = resolved.
    std::fill(state.begin(), state.end(), 0);
    bool acyclic = true;
    for (Vertex r : roots) {
      state[r] = 2;
      root_of[r] = r;
    }
    for (Vertex start = 1; start <= n && acyclic; ++start) {
      trail.clear();
      Vertex v = start;
      while (state[v] == 0) {
        state[v] = 1;
        trail.push_back(v);
        v = parent[v];
      }
      if (state[v] == 1) {
        acyclic = false;
        break;
      }
      for (Vertex t : trail) {
        state[t] = 2;
        root_of[t] = root_of[v];
      }
    }
    if (acyclic) visit(parent, root_of);

    std::size_t k = 0;
    while (k < free.size()) {
      if (++choice[k] < g.in_degree(free[k])) break;
      choice[k] = 0;
      ++k;
    }
    if (k == free.size()) return;
  }
}

inline std::vector<Edge> forest_edges(const std::vector<Vertex>& parent) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < parent.size(); ++v) {
    if (parent[v] != 0) edges.push_back({parent[v], v});
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// Root of each delta1 vertex, provided every tree holds exactly one delta1
/// vertex; empty otherwise.
inline std::vector<Vertex> delta_bijection(const ForestConstraint& c,
                                           const std::vector<Vertex>& root_of) {
  std::vector<Vertex> image;
  image.reserve(c.delta1.size());
  for (Vertex a : c.delta1) image.push_back(root_of[a]);
  std::vector<Vertex> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != c.delta2) return {};
  return image;
}

}  // namespace detail

/// Spanning trees rooted at `root`: every other vertex has indegree 1, the
/// root has indegree 0, no directed cycle.
inline EdgeSetEnumeration enumerate_rooted_spanning_trees(const Digraph& g, Vertex root) {
  check_guard(g);
  dicactus::detail::check_vertex(g, root);
  EdgeSetEnumeration out;
  detail::for_each_rooted_forest(g, {root}, [&](const auto& parent, const auto&) {
    ++out.count;
    out.edge_sets.push_back(detail::forest_edges(parent));
  });
  return out;
}

/// Spanning forests with |delta2| trees, each rooted at a delta2 vertex and
/// holding exactly one delta1 vertex.
inline EdgeSetEnumeration enumerate_forests(const Digraph& g, const ForestConstraint& c) {
  check_guard(g);
  detail::check_constraint(g, c);
  EdgeSetEnumeration out;
  if (c.delta2.empty()) return out;
  detail::for_each_rooted_forest(g, c.delta2, [&](const auto& parent, const auto& root_of) {
    if (detail::delta_bijection(c, root_of).empty()) return;
    ++out.count;
    out.edge_sets.push_back(detail::forest_edges(parent));
  });
  return out;
}

/// Two-tree case of enumerate_forests.
inline std::size_t enumerate_two_tree_forests(const Digraph& g, const ForestConstraint& c) {
  if (c.delta1.size() != 2 || c.delta2.size() != 2) {
    throw PreconditionError("two-tree forests need |delta1| == |delta2| == 2");
  }
  return enumerate_forests(g, c).count;
}

/// Signed forest sum of the all-minors matrix-tree theorem:
///   (-1)^(alpha(delta1) + alpha(delta2)) * sum_F (-1)^inv(pi_F)
/// where pi_F sends each delta1 vertex to the root of its tree and alpha sums
/// the labels. On balanced digraphs it equals det L[delta1^c, delta2^c].
inline Integer all_minors_signed_sum(const Digraph& g, const ForestConstraint& c) {
  check_guard(g);
  detail::check_constraint(g, c);
  if (c.delta1.empty() || c.delta1.size() > kMaxDeltaSize) {
    throw PreconditionError("all-minors sum supports 1 <= |delta| <= " +
                            std::to_string(kMaxDeltaSize));
  }
  long total = 0;
  detail::for_each_rooted_forest(g, c.delta2, [&](const auto&, const auto& root_of) {
    const auto pi = detail::delta_bijection(c, root_of);
    if (pi.empty()) return;
    int inversions = 0;
    for (std::size_t a = 0; a < pi.size(); ++a)
      for (std::size_t b = a + 1; b < pi.size(); ++b)
        if (pi[a] > pi[b]) ++inversions;
    total += inversions % 2 == 0 ? 1 : -1;
  });
  std::size_t alpha = 0;
  for (Vertex v : c.delta1) alpha += v;
  for (Vertex v : c.delta2) alpha += v;
  return Integer(alpha % 2 == 0 ? total : -total);
}

/// All simple directed paths from i to j, each as its vertex sequence, found
/// by DFS with ascending neighbor order.
inline std::vector<std::vector<Vertex>> enumerate_simple_paths(const Digraph& g, Vertex i,
                                                               Vertex j) {
  check_guard(g);
  dicactus::detail::check_vertex(g, i);
  dicactus::detail::check_vertex(g, j);
  if (i == j) throw PreconditionError("simple paths need i != j");
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> path{i};
  std::vector<bool> on_path(g.order() + 1, false);
  on_path[i] = true;
  auto dfs = [&](auto&& self, Vertex u) -> void {
    for (Vertex w : g.out_neighbors(u)) {
      if (on_path[w]) continue;
      path.push_back(w);
      if (w == j) {
        paths.push_back(path);
      } else {
        on_path[w] = true;
        self(self, w);
        on_path[w] = false;
      }
      path.pop_back();
    }
  };
  dfs(dfs, i);
  return paths;
}

/// Every directed cycle once, as a vertex sequence starting at its smallest
/// vertex. Digons appear as length-2 cycles.
inline std::vector<std::vector<Vertex>> enumerate_directed_cycles(const Digraph& g) {
  check_guard(g);
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> path;
  std::vector<bool> on_path(g.order() + 1, false);
  for (Vertex start = 1; start <= g.order(); ++start) {
    path.assign(1, start);
    on_path[start] = true;
    auto dfs = [&](auto&& self, Vertex u) -> void {
      for (Vertex w : g.out_neighbors(u)) {
        if (w == start) {
          cycles.push_back(path);
        } else if (w > start && !on_path[w]) {
          on_path[w] = true;
          path.push_back(w);
          self(self, w);
          path.pop_back();
          on_path[w] = false;
        }
      }
    };
    dfs(dfs, start);
    on_path[start] = false;
  }
  return cycles;
}

/// The definition itself: strongly connected and each edge on exactly one
/// directed cycle.
inline bool is_directed_cactus_by_enumeration(const Digraph& g) {
  if (!is_strongly_connected(g)) return false;
  std::vector<std::size_t> hits(g.size(), 0);
  const auto& edges = g.edges();
  for (const auto& cycle : enumerate_directed_cycles(g)) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Edge e{cycle[k], cycle[(k + 1) % cycle.size()]};
      auto it = std::lower_bound(edges.begin(), edges.end(), e);
      ++hits[static_cast<std::size_t>(it - edges.begin())];
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
}

/// Checks that `edges` is a spanning tree of `g` rooted at `root`.
inline bool is_rooted_spanning_tree(const Digraph& g, const std::vector<Edge>& edges,
                                    Vertex root) {
  const std::size_t n = g.order();
  if (edges.size() + 1 != n) return false;
  std::vector<Vertex> parent(n + 1, 0);
  for (const Edge& e : edges) {
    if (!g.has_edge(e.from, e.to) || e.to == root || parent[e.to] != 0) return false;
    parent[e.to] = e.from;
  }
  for (Vertex v = 1; v <= n; ++v) {
    Vertex u = v;
    std::size_t steps = 0;
    while (u != root) {
      u = parent[u];
      if (u == 0 || ++steps > n) return false;
    }
  }
  return true;
}

/// For an edge (i,j): adding (i,j) to each two-tree forest rooted at i and j
/// yields a distinct spanning tree rooted at i.
inline bool forest_extension_is_injective(const Digraph& g, Vertex i, Vertex j) {
  if (!g.has_edge(i, j)) throw PreconditionError("(i,j) must be an edge");
  const VertexSet pair = i < j ? VertexSet{i, j} : VertexSet{j, i};
  std::set<std::vector<Edge>> images;
  for (auto forest : enumerate_forests(g, {pair, pair}).edge_sets) {
    forest.push_back({i, j});
    std::sort(forest.begin(), forest.end());
    if (!is_rooted_spanning_tree(g, forest, i)) return false;
    if (!images.insert(std::move(forest)).second) return false;
  }
  return true;
}

}  // namespace dicactus::oracle
