#include <sstream>

#include <gtest/gtest.h>

#include "frustum/errors.hpp"
#include "frustum/params.hpp"
#include "frustum/sequence.hpp"

namespace frustum {
namespace {

TEST(Sequence, ConstantAffineTable) {
  EXPECT_EQ(eval_sequence(SequenceSpec::constant(1), 5), 1);
  EXPECT_EQ(eval_sequence(SequenceSpec::affine(1, 0), 3), 3);
  EXPECT_EQ(eval_sequence(SequenceSpec::affine(1, 1), 1), 2);
  EXPECT_EQ(eval_sequence(SequenceSpec::table({2, 3, 5}), 2), 3);
}

TEST(Sequence, TableOutsideDomainIsAnError) {
  const auto s = SequenceSpec::table({2, 3, 5});
  EXPECT_THROW(s(4), InputError);
  EXPECT_THROW(s(0), InputError);
  EXPECT_FALSE(s.defined_at(4));
  EXPECT_TRUE(s.defined_at(3));
}

TEST(Sequence, NonPositiveValueIsAnError) {
  EXPECT_THROW(SequenceSpec::affine(1, 0)(0), InputError);
  EXPECT_THROW(SequenceSpec::constant(0)(1), InputError);
  EXPECT_THROW(SequenceSpec::table({1, -2})(2), InputError);
}

TEST(Sequence, CompactRoundTrip) {
  for (const auto& s : {SequenceSpec::constant(2), SequenceSpec::affine(3, -1), SequenceSpec::table({1, 1, 4})}) {
    EXPECT_EQ(SequenceSpec::parse_compact(s.compact()), s) << s.compact();
    EXPECT_EQ(SequenceSpec::parse(s.kind(), s.params()), s) << s.compact();
  }
  EXPECT_EQ(SequenceSpec::parse_compact("const:1").compact(), "const:1");
  EXPECT_EQ(SequenceSpec::parse("const", "4"), SequenceSpec::constant(4));
  EXPECT_THROW(SequenceSpec::parse_compact("cubic:1"), InputError);
  EXPECT_THROW(SequenceSpec::parse_compact("const:"), InputError);
  EXPECT_THROW(SequenceSpec::parse("affine", "1"), InputError);
}

ModelParams model(std::int64_t n, SequenceSpec f, SequenceSpec g, std::int64_t horizon) {
  ModelParams p;
  p.n = n;
  p.f = std::move(f);
  p.g = std::move(g);
  p.horizon = horizon;
  return p;
}

TEST(Params, ConeAndCylinderAreValid) {
  EXPECT_TRUE(validate_params(model(1, SequenceSpec::constant(1), SequenceSpec::constant(1), 3)).empty());
  EXPECT_TRUE(validate_params(model(1, SequenceSpec::constant(1), SequenceSpec::affine(1, 0), 6)).empty());
  EXPECT_TRUE(validate_params(model(2, SequenceSpec::constant(2), SequenceSpec::constant(2), 3)).empty());
  EXPECT_TRUE(validate_params(model(3, SequenceSpec::constant(2), SequenceSpec::constant(2), 4)).empty());
}

TEST(Params, SeedCliqueTooSmall) {
  const auto v = validate_params(model(3, SequenceSpec::table({5, 5, 5}), SequenceSpec::constant(1), 3));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().condition, "seed-clique");
  EXPECT_THROW(require_valid(model(3, SequenceSpec::table({5, 5, 5}), SequenceSpec::constant(1), 3)),
               InputError);
}

TEST(Params, EveryViolationIsReported) {
  // Decreasing f and an f_t larger than any available clique.
  const auto p = model(2, SequenceSpec::table({2, 1, 9}), SequenceSpec::table({1, 1, 1}), 3);
  const auto v = validate_params(p);
  bool monotone = false;
  bool available = false;
  for (const auto& x : v) {
    monotone = monotone || x.condition == "f-nondecreasing";
    available = available || x.condition == "clique-available";
  }
  EXPECT_TRUE(monotone);
  EXPECT_TRUE(available);
}

TEST(Params, TableShorterThanHorizon) {
  EXPECT_FALSE(validate_params(model(1, SequenceSpec::constant(1), SequenceSpec::table({1, 2}), 3)).empty());
}

TEST(Params, ZeroHorizonIsValid) {
  EXPECT_TRUE(validate_params(model(5, SequenceSpec::constant(9), SequenceSpec::constant(1), 0)).empty());
}

TEST(Params, ModelFileRoundTrip) {
  const auto p = model(3, SequenceSpec::constant(2), SequenceSpec::affine(1, 1), 4);
  std::ostringstream out;
  write_model(out, p);
  std::istringstream in(out.str());
  const auto q = parse_model(in);
  EXPECT_EQ(q.n, 3);
  EXPECT_EQ(q.f, p.f);
  EXPECT_EQ(q.g, p.g);
  EXPECT_EQ(q.horizon, 4);
  EXPECT_EQ(q.vertex_budget, p.vertex_budget);
}

TEST(Params, ModelFileErrors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_model(in);
  };
  const std::string base = "n = 1\nf.kind = constant\nf.params = 1\ng.kind = constant\ng.params = 2\nhorizon = 3\n";
  EXPECT_NO_THROW(parse(base));
  EXPECT_NO_THROW(parse("# comment\n" + base + "\n"));
  EXPECT_THROW(parse(base + "colour = red\n"), InputError);
  EXPECT_THROW(parse(base + "n = 2\n"), InputError);
  EXPECT_THROW(parse("n = 1\n"), InputError);
  EXPECT_THROW(parse("n = x\nf.kind = constant\nf.params = 1\ng.kind = constant\ng.params = 2\nhorizon = 3\n"),
               InputError);
}

}  // namespace
}  // namespace frustum
