#pragma once

// Simple digraphs on vertices 1..n, the edge-list text format, and the
// structural queries the resistance code builds on.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <deque>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dicactus/errors.hpp"
#include "dicactus/matrix.hpp"

namespace dicactus {

/// 1-based vertex id.
using Vertex = std::size_t;

/// Ascending, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Digraph {
 public:
  /// Throws GraphError on n == 0, out-of-range ids, self-loops or duplicates.
  Digraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ == 0) throw GraphError("a digraph needs at least one vertex");
    std::sort(edges_.begin(), edges_.end());
    out_.resize(n_ + 1);
    in_.resize(n_ + 1);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const Edge& e = edges_[k];
      if (e.from < 1 || e.from > n_ || e.to < 1 || e.to > n_) {
        throw GraphError("edge (" + std::to_string(e.from) + "," +
                         std::to_string(e.to) + ") has a vertex outside 1.." +
                         std::to_string(n_));
      }
      if (e.from == e.to) {
        throw GraphError("self-loop at vertex " + std::to_string(e.from));
      }
      if (k > 0 && edges_[k - 1] == e) {
        throw GraphError("duplicate edge (" + std::to_string(e.from) + "," +
                         std::to_string(e.to) + ")");
      }
      out_[e.from].push_back(e.to);
      in_[e.to].push_back(e.from);
    }
    for (auto& list : in_) std::sort(list.begin(), list.end());
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Lexicographically sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_.at(v); }
  std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_.at(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u < 1 || u > n_) return false;
    const auto& list = out_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline std::optional<std::pair<std::size_t, std::size_t>> parse_pair(
    std::string_view line) {
  std::size_t values[2];
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (int k = 0; k < 2; ++k) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) return std::nullopt;
    auto [next, ec] = std::from_chars(p, end, values[k]);
    if (ec != std::errc() || next == p) return std::nullopt;
    if (next < end && *next != ' ' && *next != '\t') return std::nullopt;
    p = next;
  }
  while (p < end && (*p == ' ' || *p == '\t')) ++p;
  if (p != end) return std::nullopt;
  return std::pair{values[0], values[1]};
}

inline void check_vertex(const Digraph& g, Vertex v) {
  if (!g.contains(v)) {
    throw PreconditionError("vertex " + std::to_string(v) + " is outside 1.." +
                            std::to_string(g.order()));
  }
}

}  // namespace detail

/// Reads the edge-list format: a header "n m", then m lines "u v". Lines whose
/// first non-blank character is '#' and blank lines are skipped; CRLF is
/// accepted.
inline Digraph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto pair = detail::parse_pair(line);
    if (!pair) {
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "expected two non-negative integers, got '" +
                           std::string(line) + "'");
    }
    if (!header) {
      if (pair->first == 0) {
        throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                         "vertex count must be positive");
      }
      header = pair;
      seen.resize(pair->first + 1);
      continue;
    }
    const auto [n, m] = *header;
    if (edges.size() == m) {
      throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no,
                       "more than the declared " + std::to_string(m) +
                           " edges");
    }
    const auto [u, v] = *pair;
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") outside 1.." + std::to_string(n));
    }
    if (u == v) {
      throw ParseError(ParseErrorKind::kSelfLoop, line_no,
                       "self-loop at vertex " + std::to_string(u));
    }
    auto& targets = seen[u];
    if (std::find(targets.begin(), targets.end(), v) != targets.end()) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, line_no,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") listed twice");
    }
    targets.push_back(v);
    edges.push_back({u, v});
  }
  if (!header) {
    throw ParseError(ParseErrorKind::kMissingHeader, 0, "no \"n m\" header");
  }
  if (edges.size() != header->second) {
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no,
                     "declared " + std::to_string(header->second) +
                         " edges, found " + std::to_string(edges.size()));
  }
  return Digraph(header->first, std::move(edges));
}

inline Digraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

/// Canonical edge-list text: header then edges in lexicographic order.
inline std::string write_edge_list(const Digraph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.from) + " " + std::to_string(e.to) + "\n";
  }
  return out;
}

inline bool is_balanced(const Digraph& g) {
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.in_degree(v) != g.out_degree(v)) return false;
  }
  return true;
}

namespace detail {

enum class Direction { kForward, kBackward };

/// BFS from `source` that never enters `avoid` (0 = avoid nothing). Returns
/// hop counts indexed by vertex id; -1 marks unreached.
inline std::vector<long> bfs(const Digraph& g, Vertex source, Vertex avoid,
                             Direction dir) {
  std::vector<long> dist(g.order() + 1, -1);
  std::deque<Vertex> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    auto next = dir == Direction::kForward ? g.out_neighbors(u) : g.in_neighbors(u);
    for (Vertex w : next) {
      if (w == avoid || dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace detail

inline bool is_strongly_connected(const Digraph& g) {
  for (auto dir : {detail::Direction::kForward, detail::Direction::kBackward}) {
    auto dist = detail::bfs(g, 1, 0, dir);
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (dist[v] < 0) return false;
    }
  }
  return true;
}

/// Shortest directed path lengths; d_ii = 0. Throws StructuralError naming the
/// first unreachable ordered pair.
inline IntegerMatrix distance_matrix(const Digraph& g) {
  const std::size_t n = g.order();
  IntegerMatrix d(n);
  for (Vertex i = 1; i <= n; ++i) {
    auto dist = detail::bfs(g, i, 0, detail::Direction::kForward);
    for (Vertex j = 1; j <= n; ++j) {
      if (dist[j] < 0) throw StructuralError(i, j);
      d(i - 1, j - 1) = dist[j];
    }
  }
  return d;
}

/// Out-degree Laplacian: l_ii = outdeg(i), l_ij = -1 for each edge (i,j).
inline IntegerMatrix laplacian(const Digraph& g) {
  IntegerMatrix l(g.order());
  for (const Edge& e : g.edges()) {
    l(e.from - 1, e.to - 1) -= 1;
    l(e.from - 1, e.from - 1) += 1;
  }
  return l;
}

/// Vertex sets around an ordered pair (i,j), all excluding i and j:
///  forward  - reachable from i without passing through j,
///  backward - reachable from j without passing through i,
///  co_reach - can reach i without passing through j.
struct VertexPartition {
  std::pair<Vertex, Vertex> pair;
  VertexSet forward;
  VertexSet backward;
  VertexSet co_reach;
};

inline VertexPartition reachability_partition(const Digraph& g, Vertex i, Vertex j) {
  detail::check_vertex(g, i);
  detail::check_vertex(g, j);
  if (i == j) throw PreconditionError("reachability partition needs i != j");

  auto collect = [&](Vertex source, Vertex avoid, detail::Direction dir) {
    auto dist = detail::bfs(g, source, avoid, dir);
    VertexSet out;
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (v != i && v != j && dist[v] >= 0) out.push_back(v);
    }
    return out;
  };
  VertexPartition p;
  p.pair = {i, j};
  p.forward = collect(i, j, detail::Direction::kForward);
  p.backward = collect(j, i, detail::Direction::kForward);
  p.co_reach = collect(i, j, detail::Direction::kBackward);
  return p;
}

/// Image of `g` under the vertex map v -> perm[v - 1]; `perm` must be a
/// permutation of 1..n.
inline Digraph relabel(const Digraph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw DimensionError("permutation has wrong length");
  std::vector<bool> hit(n + 1, false);
  for (Vertex v : perm) {
    if (v < 1 || v > n || hit[v]) throw PreconditionError("not a permutation of 1..n");
    hit[v] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.from - 1], perm[e.to - 1]});
  return Digraph(n, std::move(edges));
}

/// A permutation sending `first` to 1 and `last` to n, fixing as much else as
/// possible. Used to move an edge (i,j) into the (1,n) position.
inline std::vector<Vertex> permutation_to_ends(std::size_t n, Vertex first, Vertex last) {
  if (first == last || first < 1 || last < 1 || first > n || last > n) {
    throw PreconditionError("need two distinct vertices in 1..n");
  }
  std::vector<Vertex> perm(n);
  for (Vertex v = 1; v <= n; ++v) perm[v - 1] = v;
  // Apply transposition (first 1), then (last' n) where last' is where `last`
  // landed after the first swap.
  auto swap_labels = [&](Vertex a, Vertex b) {
    for (auto& image : perm) {
      if (image == a) image = b;
      else if (image == b) image = a;
    }
  };
  swap_labels(perm[first - 1], 1);
  swap_labels(perm[last - 1], n);
  return perm;
}

}  // namespace dicactus
