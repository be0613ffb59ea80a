#pragma once

// Directed cactus recognition through the block (biconnected component)
// decomposition of the underlying undirected multigraph.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "dicactus/digraph.hpp"

namespace dicactus {

/// Blocks of the underlying undirected multigraph. Each directed edge is one
/// undirected edge, so a digon {(u,v),(v,u)} is a pair of parallel edges and
/// forms its own block. Every edge belongs to exactly one block; isolated
/// vertices produce no block.
inline std::vector<std::vector<Edge>> biconnected_blocks(const Digraph& g) {
  const std::size_t n = g.order();
  const auto& edges = g.edges();
  struct Incidence {
    Vertex other;
    std::size_t edge;
  };
  std::vector<std::vector<Incidence>> adj(n + 1);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    adj[edges[k].from].push_back({edges[k].to, k});
    adj[edges[k].to].push_back({edges[k].from, k});
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n + 1, kNone);
  std::vector<std::size_t> low(n + 1, 0);
  std::vector<std::size_t> edge_stack;
  std::vector<std::vector<Edge>> blocks;
  std::size_t clock = 0;

  struct Frame {
    Vertex v;
    std::size_t parent_edge;
    std::size_t next = 0;
  };

  for (Vertex root = 1; root <= n; ++root) {
    if (disc[root] != kNone) continue;
    std::vector<Frame> frames{{root, kNone}};
    disc[root] = low[root] = clock++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj[f.v].size()) {
        const Incidence inc = adj[f.v][f.next++];
        if (inc.edge == f.parent_edge) continue;
        if (disc[inc.other] == kNone) {
          edge_stack.push_back(inc.edge);
          disc[inc.other] = low[inc.other] = clock++;
          frames.push_back({inc.other, inc.edge});
        } else if (disc[inc.other] < disc[f.v]) {
          edge_stack.push_back(inc.edge);
          low[f.v] = std::min(low[f.v], disc[inc.other]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      const Vertex parent = frames.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        std::vector<Edge> block;
        while (true) {
          std::size_t e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(edges[e]);
          if (e == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

/// True when `block` (a set of directed edges) is exactly one directed cycle:
/// as many edges as vertices and every vertex entered once and left once.
inline bool is_directed_cycle_block(const std::vector<Edge>& block) {
  std::vector<Vertex> verts;
  for (const Edge& e : block) {
    verts.push_back(e.from);
    verts.push_back(e.to);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() != block.size()) return false;
  std::vector<int> out(verts.size(), 0);
  std::vector<int> in(verts.size(), 0);
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (const Edge& e : block) {
    ++out[index(e.from)];
    ++in[index(e.to)];
  }
  for (std::size_t k = 0; k < verts.size(); ++k) {
    if (out[k] != 1 || in[k] != 1) return false;
  }
  return true;
}

/// Strongly connected and every edge on exactly one directed cycle. The
/// single-vertex graph counts as a (trivial) cactus.
inline bool is_directed_cactus(const Digraph& g) {
  if (!is_strongly_connected(g)) return false;
  for (const auto& block : biconnected_blocks(g)) {
    if (!is_directed_cycle_block(block)) return false;
  }
  return true;
}

}  // namespace dicactus
