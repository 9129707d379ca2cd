#include "frustum/metrics.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "frustum/errors.hpp"

namespace frustum {
namespace {

// BFS into a caller-owned buffer; returns (max distance, distance sum, reached count).
struct SourceStats {
  std::uint64_t eccentricity = 0;
  std::uint64_t distance_sum = 0;
  std::uint64_t reached = 0;
};

SourceStats bfs_into(const FrustumGraph& g, VertexId source, std::vector<std::uint32_t>& dist,
                     std::vector<VertexId>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  SourceStats s;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    const std::uint32_t dv = dist[v];
    s.eccentricity = std::max<std::uint64_t>(s.eccentricity, dv);
    s.distance_sum += dv;
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dv + 1;
        queue.push_back(w);
      }
    }
  }
  s.reached = queue.size();
  return s;
}

DistanceSummary combine(const std::vector<SourceStats>& per_source, std::size_t n) {
  DistanceSummary out;
  BigInt ordered_sum = 0;
  for (const auto& s : per_source) {
    out.diameter = std::max(out.diameter, s.eccentricity);
    ordered_sum += s.distance_sum;
    if (s.reached != n) out.connected = false;
  }
  out.wiener = ordered_sum / 2;
  return out;
}

std::uint64_t common_count(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::uint64_t c = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

// Edges among neighbors of x: each neighbor pair (w < z) counted once via w's
// larger neighbors.
std::uint64_t neighbor_edges(const FrustumGraph& g, VertexId x) {
  const auto nx = g.neighbors(x);
  std::uint64_t total = 0;
  for (VertexId w : nx) {
    const auto nw = g.neighbors(w);
    const auto fw = std::upper_bound(nw.begin(), nw.end(), w);
    const auto fx = std::upper_bound(nx.begin(), nx.end(), w);
    total += common_count(std::span<const VertexId>(fw, nw.end()), std::span<const VertexId>(fx, nx.end()));
  }
  return total;
}

Rational clustering_of(std::uint64_t e, std::size_t deg) {
  if (deg < 2) return Rational(0);
  return Rational(BigInt(e), BigInt(deg) * (deg - 1) / 2);
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const FrustumGraph& g, VertexId source) {
  if (source >= g.order()) throw InputError("BFS source out of range");
  std::vector<std::uint32_t> dist(g.order());
  std::vector<VertexId> queue;
  queue.reserve(g.order());
  bfs_into(g, source, dist, queue);
  return dist;
}

std::vector<DistanceTable> all_pairs_distances(const FrustumGraph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<DistanceTable> tables(static_cast<std::size_t>(n));
#pragma omp parallel
  {
    std::vector<VertexId> queue;
    queue.reserve(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t s = 0; s < n; ++s) {
      auto& t = tables[static_cast<std::size_t>(s)];
      t.source = static_cast<VertexId>(s);
      t.distances.resize(static_cast<std::size_t>(n));
      bfs_into(g, t.source, t.distances, queue);
    }
  }
  return tables;
}

DistanceSummary distance_summary(const FrustumGraph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<SourceStats> per_source(static_cast<std::size_t>(n));
#pragma omp parallel
  {
    std::vector<std::uint32_t> dist(static_cast<std::size_t>(n));
    std::vector<VertexId> queue;
    queue.reserve(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t s = 0; s < n; ++s) {
      per_source[static_cast<std::size_t>(s)] = bfs_into(g, static_cast<VertexId>(s), dist, queue);
    }
  }
  return combine(per_source, g.order());
}

namespace serial {

DistanceSummary distance_summary(const FrustumGraph& g) {
  // Independent of the parallel kernel: plain queue BFS, totals accumulated directly.
  DistanceSummary out;
  const std::size_t n = g.order();
  BigInt ordered_sum = 0;
  for (VertexId s = 0; s < n; ++s) {
    std::vector<std::uint32_t> dist(n, kUnreachable);
    std::deque<VertexId> q{s};
    dist[s] = 0;
    std::size_t reached = 0;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop_front();
      ++reached;
      ordered_sum += dist[v];
      out.diameter = std::max<std::uint64_t>(out.diameter, dist[v]);
      for (VertexId w : g.neighbors(v)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          q.push_back(w);
        }
      }
    }
    if (reached != n) out.connected = false;
  }
  out.wiener = ordered_sum / 2;
  return out;
}

std::vector<std::uint64_t> neighbor_edge_counts(const FrustumGraph& g) {
  // Pairwise adjacency test over neighbor pairs.
  std::vector<std::uint64_t> out(g.order());
  for (VertexId x = 0; x < g.order(); ++x) {
    const auto nx = g.neighbors(x);
    for (std::size_t i = 0; i < nx.size(); ++i) {
      for (std::size_t j = i + 1; j < nx.size(); ++j) {
        if (g.adjacent(nx[i], nx[j])) ++out[x];
      }
    }
  }
  return out;
}

}  // namespace serial

std::uint64_t diameter(const FrustumGraph& g) {
  const auto s = distance_summary(g);
  if (!s.connected) throw GraphError("diameter of a disconnected graph");
  return s.diameter;
}

BigInt wiener_index(const FrustumGraph& g) {
  const auto s = distance_summary(g);
  if (!s.connected) throw GraphError("Wiener index of a disconnected graph");
  return s.wiener;
}

Rational average_distance(const FrustumGraph& g) {
  if (g.order() < 2) throw GraphError("average distance needs at least two vertices");
  const BigInt w = wiener_index(g);
  const BigInt n = g.order();
  return Rational(w, n * (n - 1) / 2);
}

std::size_t connected_components(const FrustumGraph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexId> stack;
  std::size_t comps = 0;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return comps;
}

std::vector<std::uint64_t> neighbor_edge_counts(const FrustumGraph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t x = 0; x < n; ++x) {
    out[static_cast<std::size_t>(x)] = neighbor_edges(g, static_cast<VertexId>(x));
  }
  return out;
}

Rational local_clustering(const FrustumGraph& g, VertexId x) {
  if (x >= g.order()) throw InputError("vertex " + std::to_string(x) + " not in graph");
  return clustering_of(neighbor_edges(g, x), g.degree(x));
}

Rational global_clustering(const FrustumGraph& g) {
  if (g.order() == 0) return Rational(0);
  const auto e = neighbor_edge_counts(g);
  Rational sum = 0;
  for (VertexId x = 0; x < g.order(); ++x) sum += clustering_of(e[x], g.degree(x));
  return sum / g.order();
}

std::uint64_t degree_at(const FrustumGraph& g, VertexId x, std::int64_t s) {
  if (x >= g.order()) throw InputError("vertex " + std::to_string(x) + " not in graph");
  const auto born = g.vertex_meta()[x].birth_time;
  if (born > s) {
    throw InputError("vertex " + std::to_string(x) + " is born at " + std::to_string(born) +
                     ", after s=" + std::to_string(s));
  }
  const auto limit = static_cast<VertexId>(g.order_at(s));
  const auto nb = g.neighbors(x);
  return static_cast<std::uint64_t>(std::lower_bound(nb.begin(), nb.end(), limit) - nb.begin());
}

std::map<std::size_t, std::size_t> degree_histogram(const FrustumGraph& g) {
  std::map<std::size_t, std::size_t> h;
  for (VertexId v = 0; v < g.order(); ++v) ++h[g.degree(v)];
  return h;
}

std::vector<TrajectoryPoint> trajectory(const FrustumGraph& g) {
  const auto T = g.horizon();
  std::vector<std::uint64_t> born(static_cast<std::size_t>(T) + 1, 0);
  std::vector<std::uint64_t> edges_born(static_cast<std::size_t>(T) + 1, 0);
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto t = static_cast<std::size_t>(g.vertex_meta()[v].birth_time);
    ++born[t];
    // An edge appears when its younger (larger-id) endpoint does.
    const auto nb = g.neighbors(v);
    edges_born[t] += static_cast<std::uint64_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  }
  std::vector<TrajectoryPoint> out;
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  for (std::int64_t t = 0; t <= T; ++t) {
    n += born[static_cast<std::size_t>(t)];
    e += edges_born[static_cast<std::size_t>(t)];
    out.push_back({t, n, e});
  }
  return out;
}

std::vector<Increment> increment_series(const std::vector<TrajectoryPoint>& points) {
  if (points.size() < 2) throw InputError("increment series needs at least two snapshots");
  std::vector<Increment> out;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto& a = points[i - 1];
    const auto& b = points[i];
    if (b.order <= a.order) {
      throw GraphError("no vertices added at step " + std::to_string(b.t));
    }
    Increment inc;
    inc.t = b.t;
    inc.d_order = b.order - a.order;
    inc.d_edges = b.edges - a.edges;
    inc.ratio = Rational(BigInt(inc.d_edges), BigInt(inc.d_order));
    out.push_back(inc);
  }
  return out;
}

}  // namespace frustum
