#include "frustum/generator.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>

#include "frustum/cliques.hpp"
#include "frustum/errors.hpp"
#include "graph_builder.hpp"

namespace frustum {
namespace {

using Wide = boost::multiprecision::checked_int128_t;

struct Projection {
  std::uint64_t order;
  std::uint64_t edges;
};

// n_t and e_t after extending `cliques` cliques of order f with g new vertices each.
Projection project(const FrustumGraph& g, std::uint64_t cliques, std::int64_t f, std::int64_t gt,
                   std::int64_t t, std::uint64_t budget) {
  Wide order;
  Wide edges;
  try {
    const Wide c = cliques;
    const Wide fw = f;
    const Wide gw = gt;
    order = Wide(g.order()) + gw * c;
    // binom(f+g, 2) - binom(f, 2) = f*g + g*(g-1)/2
    edges = Wide(g.edge_count()) + (fw * gw + gw * (gw - 1) / 2) * c;
  } catch (const std::overflow_error&) {
    throw ResourceError(ResourceError::Kind::kOverflow,
                        "step " + std::to_string(t) + ": projected counts overflow 128-bit arithmetic");
  }
  if (order > Wide(budget)) {
    throw ResourceError(ResourceError::Kind::kBudget,
                        "step " + std::to_string(t) + ": projected order n_" + std::to_string(t) + " = " +
                            order.str() + " exceeds vertex budget " + std::to_string(budget));
  }
  if (order > Wide(std::numeric_limits<VertexId>::max()) ||
      edges > Wide(std::numeric_limits<std::uint64_t>::max())) {
    throw ResourceError(ResourceError::Kind::kOverflow,
                        "step " + std::to_string(t) + ": projected order " + order.str() +
                            " or size " + edges.str() + " exceeds the graph's id/edge range");
  }
  return {order.convert_to<std::uint64_t>(), edges.convert_to<std::uint64_t>()};
}

StepOutcome apply_step(GraphBuilder& builder, std::int64_t t, std::int64_t f, std::int64_t gt,
                       std::uint64_t budget, std::vector<std::string>* warnings) {
  if (f < 1 || gt < 1) {
    throw InputError("step " + std::to_string(t) + " needs f_t >= 1 and g_t >= 1 (got f=" +
                     std::to_string(f) + ", g=" + std::to_string(gt) + ")");
  }
  const FrustumGraph& current = builder.view();
  const auto k = static_cast<std::size_t>(f);
  const std::uint64_t count = count_k_cliques(current, k);
  const Projection next = project(current, count, f, gt, t, budget);
  if (count == 0 && warnings != nullptr) {
    warnings->push_back("step " + std::to_string(t) + ": no clique of order " + std::to_string(f) +
                        " to extend; growth stalls");
  }

  const CliqueList cliques = enumerate_k_cliques(current, k);
  builder.reserve(next.order, current.caps().size() + cliques.size());
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    builder.add_cap(t, cliques[i], static_cast<std::size_t>(gt));
  }
  builder.set_horizon(t);
  return StepOutcome{t, count, next.order, next.edges};
}

}  // namespace

FrustumGraph extend_step(const FrustumGraph& g, std::int64_t t, std::int64_t f_t, std::int64_t g_t,
                         std::uint64_t vertex_budget, std::vector<std::string>* warnings) {
  if (t != g.horizon() + 1) {
    throw InputError("extend_step at t=" + std::to_string(t) + " needs the snapshot at t-1 = " +
                     std::to_string(t - 1) + " (graph horizon is " + std::to_string(g.horizon()) + ")");
  }
  GraphBuilder builder(g);
  apply_step(builder, t, f_t, g_t, vertex_budget, warnings);
  return std::move(builder).release();
}

Generation generate_run(const ModelParams& p) {
  require_valid(p);
  if (static_cast<std::uint64_t>(p.n) > p.vertex_budget) {
    throw ResourceError(ResourceError::Kind::kBudget, "seed order n = " + std::to_string(p.n) +
                                                          " exceeds vertex budget " +
                                                          std::to_string(p.vertex_budget));
  }
  Generation run;
  GraphBuilder builder(FrustumGraph::complete(static_cast<std::size_t>(p.n)));
  for (std::int64_t t = 1; t <= p.horizon; ++t) {
    run.steps.push_back(apply_step(builder, t, p.f(t), p.g(t), p.vertex_budget, &run.warnings));
  }
  run.graph = std::move(builder).release();
  return run;
}

}  // namespace frustum
