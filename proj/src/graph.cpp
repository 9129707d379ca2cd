#include "frustum/graph.hpp"

#include <algorithm>
#include <string>

#include "frustum/errors.hpp"
#include "graph_builder.hpp"

namespace frustum {

FrustumGraph FrustumGraph::complete(std::size_t n) {
  FrustumGraph g;
  g.adjacency_.resize(n);
  g.meta_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    adj.reserve(n - 1);
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v) adj.push_back(static_cast<VertexId>(u));
    }
    g.meta_[v] = VertexMeta{static_cast<VertexId>(v), 0, std::nullopt};
  }
  g.edge_count_ = n * (n - (n > 0 ? 1 : 0)) / 2;
  return g;
}

FrustumGraph FrustumGraph::from_parts(std::vector<std::vector<VertexId>> adjacency,
                                      std::vector<VertexMeta> meta, std::vector<CapRecord> caps,
                                      std::optional<std::int64_t> horizon) {
  const std::size_t n = adjacency.size();
  if (meta.size() != n) {
    throw InputError("vertex metadata has " + std::to_string(meta.size()) + " entries for " +
                     std::to_string(n) + " vertices");
  }
  std::uint64_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = adjacency[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw InputError("multi-edge at vertex " + std::to_string(v));
    }
    for (VertexId u : adj) {
      if (u >= n) throw InputError("edge endpoint " + std::to_string(u) + " out of range");
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(v));
    }
    degree_sum += adj.size();
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (VertexId u : adjacency[v]) {
      if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), static_cast<VertexId>(v))) {
        throw InputError("asymmetric adjacency between " + std::to_string(v) + " and " +
                         std::to_string(u));
      }
    }
  }

  std::int64_t max_time = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& m = meta[v];
    if (m.id != v) throw InputError("vertex ids must be contiguous and in order");
    if (m.birth_time < 0) throw InputError("negative birth time at vertex " + std::to_string(v));
    if (v > 0 && m.birth_time < meta[v - 1].birth_time) {
      throw InputError("vertex ids must be assigned in birth order");
    }
    if ((m.birth_time == 0) != !m.cap_id.has_value()) {
      throw InputError("vertex " + std::to_string(v) + ": seeds (and only seeds) have no cap");
    }
    if (m.cap_id && *m.cap_id >= caps.size() && !caps.empty()) {
      throw InputError("vertex " + std::to_string(v) + " references unknown cap");
    }
    max_time = std::max(max_time, m.birth_time);
  }
  for (std::size_t i = 0; i < caps.size(); ++i) {
    const auto& c = caps[i];
    if (c.cap_id != i) throw InputError("cap ids must be contiguous and in order");
    if (c.time < 1) throw InputError("cap " + std::to_string(i) + " has time < 1");
    if (i > 0 && c.time < caps[i - 1].time) throw InputError("caps must be ordered by time");
    for (VertexId y : c.new_vertices) {
      if (y >= n || meta[y].cap_id != c.cap_id || meta[y].birth_time != c.time) {
        throw InputError("cap " + std::to_string(i) + " lists vertex " + std::to_string(y) +
                         " whose metadata disagrees");
      }
    }
    for (VertexId x : c.parent_clique) {
      if (x >= n || meta[x].birth_time >= c.time) {
        throw InputError("cap " + std::to_string(i) + " has a parent not born before it");
      }
    }
    max_time = std::max(max_time, c.time);
  }
  if (horizon && *horizon < max_time) throw InputError("horizon precedes the last birth time");

  FrustumGraph g;
  g.adjacency_ = std::move(adjacency);
  g.meta_ = std::move(meta);
  g.caps_ = std::move(caps);
  g.edge_count_ = degree_sum / 2;
  g.horizon_ = horizon.value_or(max_time);
  return g;
}

FrustumGraph FrustumGraph::from_edges(std::size_t n,
                                      std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<VertexMeta> meta(n);
  for (std::size_t v = 0; v < n; ++v) meta[v] = VertexMeta{static_cast<VertexId>(v), 0, std::nullopt};
  return from_parts(std::move(adj), std::move(meta), {}, 0);
}

bool FrustumGraph::adjacent(VertexId u, VertexId v) const {
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::size_t FrustumGraph::order_at(std::int64_t s) const {
  auto it = std::upper_bound(meta_.begin(), meta_.end(), s,
                             [](std::int64_t t, const VertexMeta& m) { return t < m.birth_time; });
  return static_cast<std::size_t>(it - meta_.begin());
}

std::vector<std::pair<VertexId, VertexId>> FrustumGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    const auto& adj = adjacency_[u];
    for (auto it = std::upper_bound(adj.begin(), adj.end(), u); it != adj.end(); ++it) {
      out.emplace_back(u, *it);
    }
  }
  return out;
}

FrustumGraph snapshot_at(const FrustumGraph& g, std::int64_t s) {
  if (s < 0 || s > g.horizon()) {
    throw InputError("snapshot time " + std::to_string(s) + " outside [0, " +
                     std::to_string(g.horizon()) + "]");
  }
  if (s == g.horizon()) return g;
  const std::size_t n = g.order_at(s);
  std::vector<std::vector<VertexId>> adj(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    auto end = std::lower_bound(nb.begin(), nb.end(), static_cast<VertexId>(n));
    adj[v].assign(nb.begin(), end);
  }
  std::vector<VertexMeta> meta(g.vertex_meta().begin(), g.vertex_meta().begin() + n);
  std::vector<CapRecord> caps;
  for (const auto& c : g.caps()) {
    if (c.time > s) break;
    caps.push_back(c);
  }
  return FrustumGraph::from_parts(std::move(adj), std::move(meta), std::move(caps), s);
}

void GraphBuilder::reserve(std::size_t vertices, std::size_t caps) {
  g_.adjacency_.reserve(vertices);
  g_.meta_.reserve(vertices);
  g_.caps_.reserve(caps);
}

void GraphBuilder::add_cap(std::int64_t t, std::span<const VertexId> parent, std::size_t g) {
  const CapId cap = g_.caps_.size();
  const auto first = static_cast<VertexId>(g_.adjacency_.size());
  CapRecord rec{cap, t, std::vector<VertexId>(parent.begin(), parent.end()), {}};
  rec.new_vertices.reserve(g);
  for (std::size_t i = 0; i < g; ++i) rec.new_vertices.push_back(first + static_cast<VertexId>(i));

  // New ids exceed every existing id, so appending keeps parents' lists sorted.
  for (VertexId x : parent) {
    auto& adj = g_.adjacency_[x];
    adj.insert(adj.end(), rec.new_vertices.begin(), rec.new_vertices.end());
  }
  for (VertexId y : rec.new_vertices) {
    std::vector<VertexId> adj;
    adj.reserve(parent.size() + g - 1);
    adj.assign(parent.begin(), parent.end());
    for (VertexId z : rec.new_vertices) {
      if (z != y) adj.push_back(z);
    }
    g_.adjacency_.push_back(std::move(adj));
    g_.meta_.push_back(VertexMeta{y, t, cap});
  }
  g_.edge_count_ += static_cast<std::uint64_t>(parent.size()) * g + static_cast<std::uint64_t>(g) * (g - 1) / 2;
  g_.caps_.push_back(std::move(rec));
}

}  // namespace frustum
