#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frustum/graph.hpp"

namespace frustum {

/// k-cliques stored flat: clique i occupies [i*k, (i+1)*k), each sorted ascending,
/// cliques in lexicographic order.
class CliqueList {
 public:
  CliqueList() = default;
  CliqueList(std::size_t k, std::vector<VertexId> flat) : k_(k), flat_(std::move(flat)) {}

  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return k_ == 0 ? 0 : flat_.size() / k_; }
  bool empty() const noexcept { return size() == 0; }
  std::span<const VertexId> operator[](std::size_t i) const {
    return std::span<const VertexId>(flat_).subspan(i * k_, k_);
  }
  const std::vector<VertexId>& flat() const noexcept { return flat_; }

  /// Materialized as nested vectors; convenient in tests.
  std::vector<std::vector<VertexId>> to_vectors() const;

  friend bool operator==(const CliqueList&, const CliqueList&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<VertexId> flat_;
};

/// All k-cliques (k >= 1) of g, lexicographically ordered.
/// Parallel over the smallest vertex of each clique; output does not depend
/// on the thread count.
CliqueList enumerate_k_cliques(const FrustumGraph& g, std::size_t k);

/// Number of k-cliques, without materializing them.
std::uint64_t count_k_cliques(const FrustumGraph& g, std::size_t k);

/// C^k(u): number of k-cliques containing u.
std::uint64_t clique_count_containing(const FrustumGraph& g, std::size_t k, VertexId u);

/// C^k(u) for every vertex u < limit (limit defaults to the whole graph).
std::vector<std::uint64_t> clique_counts_per_vertex(const FrustumGraph& g, std::size_t k,
                                                    std::size_t limit = SIZE_MAX);

namespace serial {

CliqueList enumerate_k_cliques(const FrustumGraph& g, std::size_t k);
std::uint64_t count_k_cliques(const FrustumGraph& g, std::size_t k);
std::vector<std::uint64_t> clique_counts_per_vertex(const FrustumGraph& g, std::size_t k,
                                                    std::size_t limit = SIZE_MAX);

}  // namespace serial
}  // namespace frustum
