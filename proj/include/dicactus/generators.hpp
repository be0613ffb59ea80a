#pragma once

// Seeded graph generators. The bit source is std::mt19937_64, whose output
// sequence is fixed by the standard; bounded draws use rejection sampling
// implemented here (std::uniform_int_distribution is implementation-defined),
// so a given spec produces the same graph on every platform.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dicactus/digraph.hpp"
#include "dicactus/errors.hpp"

namespace dicactus {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw PreconditionError("empty range");
    const std::uint64_t span = hi - lo;
    if (span == UINT64_MAX) return engine_();
    const std::uint64_t bound = span + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + x % bound;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t k = items.size(); k > 1; --k) {
      std::swap(items[k - 1], items[uniform(0, k - 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives well-separated child seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// C_n: 1 -> 2 -> ... -> n -> 1.
inline Digraph directed_cycle(std::size_t n) {
  if (n <= 1) throw PreconditionError("a directed cycle needs n > 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({n, 1});
  return Digraph(n, std::move(edges));
}

struct CactusSpec {
  std::uint64_t seed = 0;
  std::size_t cycle_count = 1;
  std::size_t max_cycle_len = 4;
  /// 0 = unbounded; otherwise cycles are shortened or dropped to fit.
  std::size_t max_vertices = 0;
};

/// Grows a cactus from one directed cycle by repeatedly gluing a new cycle at
/// a uniformly chosen existing vertex, then shuffles the vertex labels.
inline Digraph random_directed_cactus(const CactusSpec& spec) {
  if (spec.cycle_count < 1 || spec.max_cycle_len < 2) {
    throw PreconditionError("cactus spec needs cycle_count >= 1 and max_cycle_len >= 2");
  }
  if (spec.max_vertices != 0 && spec.max_vertices < 2) {
    throw PreconditionError("max_vertices must be 0 or at least 2");
  }
  Rng rng(spec.seed);
  std::size_t n = 0;
  std::vector<Edge> edges;
  auto add_cycle = [&](Vertex anchor, std::size_t len) {
    std::vector<Vertex> ring;
    if (anchor != 0) ring.push_back(anchor);
    while (ring.size() < len) ring.push_back(++n);
    for (std::size_t k = 0; k < len; ++k) edges.push_back({ring[k], ring[(k + 1) % len]});
  };

  auto room = [&]() -> std::size_t {
    return spec.max_vertices == 0 ? SIZE_MAX : spec.max_vertices - n;
  };
  std::size_t first = rng.uniform(2, spec.max_cycle_len);
  if (spec.max_vertices != 0) first = std::min(first, spec.max_vertices);
  add_cycle(0, first);
  for (std::size_t c = 1; c < spec.cycle_count; ++c) {
    std::size_t len = rng.uniform(2, spec.max_cycle_len);
    const Vertex anchor = rng.uniform(1, n);
    if (room() == 0) break;
    len = std::min(len, room() + 1);
    add_cycle(anchor, len);
  }

  std::vector<Vertex> perm(n);
  for (Vertex v = 1; v <= n; ++v) perm[v - 1] = v;
  rng.shuffle(perm);
  return relabel(Digraph(n, std::move(edges)), perm);
}

struct BalancedSpec {
  std::uint64_t seed = 0;
  std::size_t n = 2;
  std::size_t overlays = 0;
  std::size_t max_cycle_len = 0;  ///< 0 = up to n
};

/// Hamiltonian cycle 1 -> ... -> n -> 1 plus up to `overlays` extra directed
/// cycles on random vertex subsets. A candidate cycle that would repeat an
/// existing edge is redrawn (bounded attempts) and otherwise skipped, so the
/// graph stays an edge-disjoint union of cycles.
inline Digraph random_balanced_digraph(const BalancedSpec& spec) {
  if (spec.n < 2) throw PreconditionError("balanced spec needs n >= 2");
  if (spec.max_cycle_len == 1) throw PreconditionError("max_cycle_len must be >= 2");
  constexpr int kAttempts = 16;
  Rng rng(spec.seed);
  const std::size_t n = spec.n;
  const std::size_t longest =
      spec.max_cycle_len == 0 ? n : std::min(spec.max_cycle_len, n);
  std::vector<std::vector<bool>> present(n + 1, std::vector<bool>(n + 1, false));
  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) {
    present[u][v] = true;
    edges.push_back({u, v});
  };
  for (Vertex v = 1; v <= n; ++v) add(v, v % n + 1);

  std::vector<Vertex> pool(n);
  for (std::size_t o = 0; o < spec.overlays; ++o) {
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      const std::size_t len = rng.uniform(2, longest);
      for (Vertex v = 1; v <= n; ++v) pool[v - 1] = v;
      // Partial Fisher-Yates: the first `len` slots become the cycle.
      for (std::size_t k = 0; k < len; ++k) std::swap(pool[k], pool[rng.uniform(k, n - 1)]);
      bool clash = false;
      for (std::size_t k = 0; k < len && !clash; ++k) {
        clash = present[pool[k]][pool[(k + 1) % len]];
      }
      if (clash) continue;
      for (std::size_t k = 0; k < len; ++k) add(pool[k], pool[(k + 1) % len]);
      break;
    }
  }
  return Digraph(n, std::move(edges));
}

enum class Family { kCactus, kGeneral };

/// Graph number `index` of a search corpus: the shape parameters come from a
/// stream derived from (seed, index), so any single graph can be regenerated
/// without the others. Cactus graphs have 1..max_n-1 cycles of length up to
/// max_n; general graphs have n in 2..max_n and 0..n overlay cycles. Every
/// graph has at most max_n vertices.
inline Digraph corpus_graph(Family family, std::uint64_t seed, std::size_t index,
                            std::size_t max_n) {
  if (max_n < 2) throw PreconditionError("corpus graphs need max_n >= 2");
  const std::uint64_t graph_seed = mix_seed(seed, index);
  Rng rng(graph_seed);
  if (family == Family::kCactus) {
    CactusSpec spec;
    spec.seed = mix_seed(graph_seed, 1);
    spec.cycle_count = rng.uniform(1, max_n - 1);
    spec.max_cycle_len = max_n;
    spec.max_vertices = max_n;
    return random_directed_cactus(spec);
  }
  BalancedSpec spec;
  spec.seed = mix_seed(graph_seed, 1);
  spec.n = rng.uniform(2, max_n);
  spec.overlays = rng.uniform(0, spec.n);
  return random_balanced_digraph(spec);
}

}  // namespace dicactus
