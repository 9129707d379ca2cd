#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace frustum {

using VertexId = std::uint32_t;
using CapId = std::uint64_t;

struct VertexMeta {
  VertexId id = 0;
  std::int64_t birth_time = 0;
  std::optional<CapId> cap_id;  // empty for seed vertices

  friend bool operator==(const VertexMeta&, const VertexMeta&) = default;
};

/// One clique extension: parent_clique (order f_t, from G_{t-1}) joined to
/// new_vertices (order g_t) at step `time`.
struct CapRecord {
  CapId cap_id = 0;
  std::int64_t time = 0;
  std::vector<VertexId> parent_clique;
  std::vector<VertexId> new_vertices;

  friend bool operator==(const CapRecord&, const CapRecord&) = default;
};

/// Simple undirected graph with per-vertex birth times and cap provenance.
///
/// Vertex ids are dense and ordered by birth time, so the snapshot at any
/// step s is the prefix of vertices born at or before s. Adjacency lists are
/// sorted ascending. Instances are immutable once built.
class FrustumGraph {
 public:
  FrustumGraph() = default;

  /// The clique K_n with every vertex born at time 0.
  static FrustumGraph complete(std::size_t n);

  /// Builds from raw parts and checks every structural invariant; throws
  /// InputError on loops, duplicate or asymmetric edges, non-contiguous ids,
  /// birth times out of order, or cap records inconsistent with the metadata.
  /// `horizon` defaults to the largest birth/cap time.
  static FrustumGraph from_parts(std::vector<std::vector<VertexId>> adjacency,
                                 std::vector<VertexMeta> meta, std::vector<CapRecord> caps,
                                 std::optional<std::int64_t> horizon = std::nullopt);

  /// Undirected edges (u < v), no metadata (all vertices born at 0).
  static FrustumGraph from_edges(std::size_t n,
                                 std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::uint64_t edge_count() const noexcept { return edge_count_; }
  std::int64_t horizon() const noexcept { return horizon_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool adjacent(VertexId u, VertexId v) const;

  const std::vector<VertexMeta>& vertex_meta() const noexcept { return meta_; }
  const std::vector<CapRecord>& caps() const noexcept { return caps_; }

  /// Number of vertices born at or before s (the order of the snapshot at s).
  std::size_t order_at(std::int64_t s) const;

  /// All edges (u < v) in ascending lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const FrustumGraph&, const FrustumGraph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<VertexMeta> meta_;
  std::vector<CapRecord> caps_;
  std::uint64_t edge_count_ = 0;
  std::int64_t horizon_ = 0;
};

/// Induced subgraph on vertices born at or before s, keeping caps with time <= s.
/// Throws InputError when s is outside [0, G.horizon()].
FrustumGraph snapshot_at(const FrustumGraph& g, std::int64_t s);

}  // namespace frustum
