#pragma once

// Independent reference implementations used as test oracles. They favour
// obviousness over speed: dense adjacency matrices, exhaustive subsets,
// Floyd-Warshall, and a direct simulation of the growth rule.

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "frustum/graph.hpp"

namespace reference {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency_matrix(const frustum::FrustumGraph& g) {
  const std::size_t n = g.order();
  Matrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

/// Every k-subset of {0..n-1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::uint32_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<std::uint32_t>(i);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline bool is_clique(const Matrix& a, const std::vector<std::uint32_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!a[s[i]][s[j]]) return false;
    }
  }
  return true;
}

/// All k-cliques by testing every k-subset.
inline std::vector<std::vector<std::uint32_t>> cliques(const Matrix& a, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  for_each_subset(a.size(), k, [&](const std::vector<std::uint32_t>& s) {
    if (is_clique(a, s)) out.push_back(s);
  });
  return out;
}

inline std::vector<std::uint64_t> cliques_per_vertex(const Matrix& a, std::size_t k) {
  std::vector<std::uint64_t> c(a.size(), 0);
  for (const auto& s : cliques(a, k)) {
    for (auto v : s) ++c[v];
  }
  return c;
}

inline constexpr std::uint64_t kInf = UINT64_MAX / 4;

/// Floyd-Warshall; kInf for unreachable pairs.
inline std::vector<std::vector<std::uint64_t>> distances(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
      }
    }
  }
  return d;
}

/// Direct simulation of the growth rule on a dense matrix.
struct Run {
  Matrix adjacency;
  std::vector<std::int64_t> birth;
  std::vector<std::size_t> order_at;  // order after step t, t = 0..T
  std::vector<std::size_t> edges_at;
};

inline std::size_t edge_count(const Matrix& a) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) e += a[i][j];
  }
  return e;
}

inline Run simulate(std::size_t n, const std::function<std::int64_t(std::int64_t)>& f,
                    const std::function<std::int64_t(std::int64_t)>& g, std::int64_t horizon) {
  Run r;
  r.adjacency.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r.adjacency[i][j] = i != j;
  }
  r.birth.assign(n, 0);
  r.order_at.push_back(n);
  r.edges_at.push_back(edge_count(r.adjacency));
  for (std::int64_t t = 1; t <= horizon; ++t) {
    const auto parents = cliques(r.adjacency, static_cast<std::size_t>(f(t)));
    const auto width = static_cast<std::size_t>(g(t));
    const std::size_t old = r.adjacency.size();
    const std::size_t grown = old + parents.size() * width;
    for (auto& row : r.adjacency) row.resize(grown, false);
    r.adjacency.resize(grown, std::vector<bool>(grown, false));
    r.birth.resize(grown, t);
    std::size_t next = old;
    for (const auto& s : parents) {
      std::vector<std::size_t> cap;
      for (std::size_t i = 0; i < width; ++i) cap.push_back(next++);
      for (auto y : cap) {
        for (auto x : s) r.adjacency[x][y] = r.adjacency[y][x] = true;
        for (auto z : cap) {
          if (z != y) r.adjacency[y][z] = true;
        }
      }
    }
    r.order_at.push_back(grown);
    r.edges_at.push_back(edge_count(r.adjacency));
  }
  return r;
}

/// Erdos-Renyi G(n, p) with a fixed seed.
inline frustum::FrustumGraph random_graph(std::size_t n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<frustum::VertexId, frustum::VertexId>> edges;
  for (frustum::VertexId u = 0; u < n; ++u) {
    for (frustum::VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return frustum::FrustumGraph::from_edges(n, edges);
}

}  // namespace reference
