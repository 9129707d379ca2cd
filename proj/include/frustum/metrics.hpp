#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "frustum/exact.hpp"
#include "frustum/graph.hpp"

namespace frustum {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Unweighted distances from one source; kUnreachable marks other components.
struct DistanceTable {
  VertexId source = 0;
  std::vector<std::uint32_t> distances;
};

std::vector<std::uint32_t> bfs_distances(const FrustumGraph& g, VertexId source);

/// One BFS table per vertex, in id order. O(n^2) memory; fine at desk scale.
std::vector<DistanceTable> all_pairs_distances(const FrustumGraph& g);

/// Aggregates of all-pairs BFS without storing the tables.
struct DistanceSummary {
  bool connected = true;
  std::uint64_t diameter = 0;  // over reachable pairs
  BigInt wiener = 0;           // sum over unordered reachable pairs
};

DistanceSummary distance_summary(const FrustumGraph& g);

/// Throws GraphError when g is disconnected.
std::uint64_t diameter(const FrustumGraph& g);
BigInt wiener_index(const FrustumGraph& g);
/// W / binom(n, 2). Throws GraphError for n < 2 or a disconnected graph.
Rational average_distance(const FrustumGraph& g);

std::size_t connected_components(const FrustumGraph& g);

/// e(x): edges among the neighbors of x, for every x.
std::vector<std::uint64_t> neighbor_edge_counts(const FrustumGraph& g);

/// e(x) / binom(deg x, 2), and 0 when deg x < 2.
Rational local_clustering(const FrustumGraph& g, VertexId x);
/// Mean of the local coefficients over all vertices (0 for the empty graph).
Rational global_clustering(const FrustumGraph& g);

/// Degree of x in the snapshot at s. Throws InputError if x is born after s.
std::uint64_t degree_at(const FrustumGraph& g, VertexId x, std::int64_t s);

std::map<std::size_t, std::size_t> degree_histogram(const FrustumGraph& g);

/// n_s and e_s for every snapshot s in [0, horizon].
struct TrajectoryPoint {
  std::int64_t t = 0;
  std::uint64_t order = 0;
  std::uint64_t edges = 0;

  friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

std::vector<TrajectoryPoint> trajectory(const FrustumGraph& g);

struct Increment {
  std::int64_t t = 0;
  std::uint64_t d_order = 0;
  std::uint64_t d_edges = 0;
  Rational ratio;  // d_edges / d_order
};

/// Per-step increments. Needs at least two points; throws GraphError on a
/// step that added no vertices.
std::vector<Increment> increment_series(const std::vector<TrajectoryPoint>& points);

namespace serial {

DistanceSummary distance_summary(const FrustumGraph& g);
std::vector<std::uint64_t> neighbor_edge_counts(const FrustumGraph& g);

}  // namespace serial
}  // namespace frustum
