#include "frustum/cliques.hpp"

#include <algorithm>
#include <iterator>

#include "frustum/errors.hpp"

namespace frustum {
namespace {

// Neighbors of v with larger ids.
std::span<const VertexId> forward_neighbors(const FrustumGraph& g, VertexId v) {
  const auto nb = g.neighbors(v);
  const auto it = std::upper_bound(nb.begin(), nb.end(), v);
  return nb.subspan(static_cast<std::size_t>(it - nb.begin()));
}

// Ordered extension: `stack` holds the current partial clique, `candidates`
// are common forward neighbors (ascending). Visiting candidates in ascending
// order yields cliques in lexicographic order.
template <class Emit>
void extend(const FrustumGraph& g, std::vector<VertexId>& stack, std::span<const VertexId> candidates,
            std::size_t remaining, Emit& emit) {
  if (remaining == 0) {
    emit(stack);
    return;
  }
  if (candidates.size() < remaining) return;
  std::vector<VertexId> next;
  for (std::size_t i = 0; i + remaining <= candidates.size(); ++i) {
    const VertexId v = candidates[i];
    stack.push_back(v);
    if (remaining == 1) {
      emit(stack);
    } else {
      next.clear();
      const auto fwd = forward_neighbors(g, v);
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                            fwd.begin(), fwd.end(), std::back_inserter(next));
      extend(g, stack, next, remaining - 1, emit);
    }
    stack.pop_back();
  }
}

template <class Emit>
void cliques_rooted_at(const FrustumGraph& g, VertexId root, std::size_t k, Emit& emit) {
  std::vector<VertexId> stack{root};
  extend(g, stack, forward_neighbors(g, root), k - 1, emit);
}

// Cliques of size `remaining` inside the candidate set (any order), counted.
std::uint64_t count_within(const FrustumGraph& g, std::span<const VertexId> candidates,
                           std::size_t remaining) {
  if (remaining == 0) return 1;
  if (candidates.size() < remaining) return 0;
  if (remaining == 1) return candidates.size();
  std::uint64_t total = 0;
  std::vector<VertexId> next;
  for (std::size_t i = 0; i + remaining <= candidates.size(); ++i) {
    next.clear();
    const auto fwd = forward_neighbors(g, candidates[i]);
    std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                          fwd.begin(), fwd.end(), std::back_inserter(next));
    total += count_within(g, next, remaining - 1);
  }
  return total;
}

void require_k(std::size_t k) {
  if (k == 0) throw InputError("clique order k must be >= 1");
}

std::size_t clamp_limit(const FrustumGraph& g, std::size_t limit) {
  return std::min(limit, g.order());
}

}  // namespace

std::vector<std::vector<VertexId>> CliqueList::to_vectors() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto c = (*this)[i];
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

std::uint64_t clique_count_containing(const FrustumGraph& g, std::size_t k, VertexId u) {
  require_k(k);
  if (u >= g.order()) throw InputError("vertex " + std::to_string(u) + " not in graph");
  return count_within(g, g.neighbors(u), k - 1);
}

namespace serial {

CliqueList enumerate_k_cliques(const FrustumGraph& g, std::size_t k) {
  require_k(k);
  std::vector<VertexId> flat;
  auto emit = [&flat](const std::vector<VertexId>& c) { flat.insert(flat.end(), c.begin(), c.end()); };
  for (VertexId v = 0; v < g.order(); ++v) cliques_rooted_at(g, v, k, emit);
  return CliqueList(k, std::move(flat));
}

std::uint64_t count_k_cliques(const FrustumGraph& g, std::size_t k) {
  require_k(k);
  std::uint64_t total = 0;
  for (VertexId v = 0; v < g.order(); ++v) total += count_within(g, forward_neighbors(g, v), k - 1);
  return total;
}

std::vector<std::uint64_t> clique_counts_per_vertex(const FrustumGraph& g, std::size_t k,
                                                    std::size_t limit) {
  require_k(k);
  const std::size_t n = clamp_limit(g, limit);
  std::vector<std::uint64_t> out(n);
  for (VertexId u = 0; u < n; ++u) out[u] = count_within(g, g.neighbors(u), k - 1);
  return out;
}

}  // namespace serial

CliqueList enumerate_k_cliques(const FrustumGraph& g, std::size_t k) {
  require_k(k);
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<std::vector<VertexId>> per_root(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t v = 0; v < n; ++v) {
    auto& out = per_root[static_cast<std::size_t>(v)];
    auto emit = [&out](const std::vector<VertexId>& c) { out.insert(out.end(), c.begin(), c.end()); };
    cliques_rooted_at(g, static_cast<VertexId>(v), k, emit);
  }
  std::size_t total = 0;
  for (const auto& r : per_root) total += r.size();
  std::vector<VertexId> flat;
  flat.reserve(total);
  for (auto& r : per_root) {
    flat.insert(flat.end(), r.begin(), r.end());
    std::vector<VertexId>().swap(r);
  }
  return CliqueList(k, std::move(flat));
}

std::uint64_t count_k_cliques(const FrustumGraph& g, std::size_t k) {
  require_k(k);
  const auto n = static_cast<std::int64_t>(g.order());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (std::int64_t v = 0; v < n; ++v) {
    total += count_within(g, forward_neighbors(g, static_cast<VertexId>(v)), k - 1);
  }
  return total;
}

std::vector<std::uint64_t> clique_counts_per_vertex(const FrustumGraph& g, std::size_t k,
                                                    std::size_t limit) {
  require_k(k);
  const auto n = static_cast<std::int64_t>(clamp_limit(g, limit));
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t u = 0; u < n; ++u) {
    out[static_cast<std::size_t>(u)] = count_within(g, g.neighbors(static_cast<VertexId>(u)), k - 1);
  }
  return out;
}

}  // namespace frustum
