#pragma once

// Internal: in-place mutation of a FrustumGraph for the generator.

#include "frustum/graph.hpp"

namespace frustum {

class GraphBuilder {
 public:
  explicit GraphBuilder(FrustumGraph g) : g_(std::move(g)) {}

  /// Appends one cap at step t: g new vertices joined to each other and to parent.
  /// parent must be a sorted clique of the current graph.
  void add_cap(std::int64_t t, std::span<const VertexId> parent, std::size_t g);

  void set_horizon(std::int64_t t) { g_.horizon_ = t; }
  void reserve(std::size_t vertices, std::size_t caps);

  const FrustumGraph& view() const { return g_; }
  FrustumGraph release() && { return std::move(g_); }

 private:
  FrustumGraph g_;
};

}  // namespace frustum
