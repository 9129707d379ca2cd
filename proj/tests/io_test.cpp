#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "frustum/errors.hpp"
#include "frustum/generator.hpp"
#include "frustum/io.hpp"
#include "frustum/metrics.hpp"
#include "frustum/report.hpp"
#include "support/temp_dir.hpp"

namespace frustum::io {
namespace {

using testing_support::TempDir;

ModelParams model(std::int64_t n, SequenceSpec f, SequenceSpec g, std::int64_t horizon) {
  ModelParams p;
  p.n = n;
  p.f = std::move(f);
  p.g = std::move(g);
  p.horizon = horizon;
  return p;
}

TEST(Export, FormatsOfOneStep) {
  const auto g = generate(model(1, SequenceSpec::constant(1), SequenceSpec::constant(2), 1));
  std::ostringstream edges, meta, caps;
  write_edge_list(edges, g);
  write_vertex_meta(meta, g);
  write_caps(caps, g);
  EXPECT_EQ(edges.str(), "0 1\n0 2\n1 2\n");
  EXPECT_EQ(meta.str(), "0 0 -\n1 1 0\n2 1 0\n");
  EXPECT_EQ(caps.str(), "0 1 0 1,2\n");
}

TEST(Export, CompleteGraphEdgeList) {
  std::ostringstream edges;
  write_edge_list(edges, generate(model(5, SequenceSpec::constant(1), SequenceSpec::constant(1), 0)));
  const std::string text = edges.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);
}

class RoundTrip : public ::testing::TestWithParam<ModelParams> {};

TEST_P(RoundTrip, SaveLoadIsIdentity) {
  const auto g = generate(GetParam());
  TempDir dir;
  save_graph(dir.path(), g);
  const auto back = load_graph(dir.path());
  EXPECT_EQ(back, g);
  std::ostringstream a, b;
  write_metrics_report(a, build_metrics_report(g, {}));
  write_metrics_report(b, build_metrics_report(back, {}));
  EXPECT_EQ(a.str(), b.str());

  // Without caps the metadata still carries every snapshot.
  std::filesystem::remove(dir / kCapsFile);
  const auto bare = load_graph(dir.path());
  EXPECT_EQ(bare.edges(), g.edges());
  EXPECT_EQ(bare.vertex_meta(), g.vertex_meta());
  EXPECT_EQ(trajectory(bare), trajectory(g));
}

INSTANTIATE_TEST_SUITE_P(
    Models, RoundTrip,
    ::testing::Values(model(1, SequenceSpec::constant(1), SequenceSpec::constant(1), 3),
                      model(1, SequenceSpec::constant(1), SequenceSpec::affine(1, 0), 3),
                      model(3, SequenceSpec::constant(2), SequenceSpec::constant(2), 2),
                      model(2, SequenceSpec::table({2, 2, 3}), SequenceSpec::table({1, 1, 1}), 3),
                      model(4, SequenceSpec::constant(3), SequenceSpec::constant(1), 0)));

TEST(Import, MalformedInput) {
  std::istringstream bad_edge("0 x\n");
  EXPECT_THROW(read_edge_list(bad_edge), InputError);
  std::istringstream bad_meta("0 0\n");
  EXPECT_THROW(read_vertex_meta(bad_meta), InputError);
  std::istringstream bad_cap("0 1 0\n");
  EXPECT_THROW(read_caps(bad_cap), InputError);
  TempDir dir;
  EXPECT_THROW(load_graph(dir.path()), InputError);
}

TEST(Import, InconsistentFilesAreRejected) {
  TempDir dir;
  testing_support::write_file(dir / kEdgesFile, "0 1\n0 2\n");
  testing_support::write_file(dir / kVerticesFile, "0 0 -\n1 0 -\n");
  EXPECT_THROW(load_graph(dir.path()), InputError);
}

}  // namespace
}  // namespace frustum::io
