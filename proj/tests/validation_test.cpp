#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "frustum/errors.hpp"
#include "frustum/validation.hpp"

namespace frustum::validation {
namespace {

ModelParams model(std::int64_t n, SequenceSpec f, SequenceSpec g, std::int64_t horizon) {
  ModelParams p;
  p.n = n;
  p.f = std::move(f);
  p.g = std::move(g);
  p.horizon = horizon;
  return p;
}

const Row* find(const Report& r, const std::string& quantity, std::int64_t t) {
  for (const auto& row : r.rows) {
    if (row.quantity == quantity && row.t == t) return &row;
  }
  return nullptr;
}

TEST(Validation, ConePathRecordsWienerArbitration) {
  const auto r = validate_model("path", model(1, SequenceSpec::constant(1), SequenceSpec::constant(1), 2));
  EXPECT_TRUE(r.passed());
  const Row* rec = find(r, "wiener:pair-recurrence", 2);
  ASSERT_NE(rec, nullptr);
  EXPECT_EQ(rec->measured, "10");
  EXPECT_EQ(rec->verdict, Verdict::kMatch);
  EXPECT_TRUE(rec->mandatory);
  const Row* thm = find(r, "wiener:theorem-statement", 2);
  ASSERT_NE(thm, nullptr);
  EXPECT_FALSE(thm->mandatory);
  EXPECT_EQ(r.wiener_recommended, "pair-recurrence");
}

TEST(Validation, FaultInjectionFails) {
  Options o;
  o.fault = "order-increment";
  const auto r = validate_model("f", model(3, SequenceSpec::constant(2), SequenceSpec::constant(2), 2), o);
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.faults_applied, 0u);
  for (const auto& row : r.failures()) EXPECT_EQ(row.quantity, "order-increment");
}

TEST(Validation, InvalidModelThrows) {
  EXPECT_THROW(validate_model("bad", model(3, SequenceSpec::constant(9), SequenceSpec::constant(1), 2)),
               InputError);
}

TEST(Validation, CompleteGraphSpectra) {
  for (std::size_t n = 2; n <= 5; ++n) EXPECT_TRUE(validate_complete_graph(n).passed()) << n;
}

TEST(Validation, DefaultSuitePasses) {
  const auto suite = default_suite();
  EXPECT_GE(suite.size(), 20u);
  const auto r = run_default_suite();
  for (const auto& f : r.failures()) ADD_FAILURE() << f.run << " " << f.quantity << " t=" << f.t;
  EXPECT_TRUE(r.passed());
}

TEST(Validation, JsonDocumentShape) {
  const auto r = validate_model("k", model(2, SequenceSpec::constant(2), SequenceSpec::constant(1), 2));
  std::ostringstream out;
  write_json(out, r);
  const auto doc = nlohmann::json::parse(out.str());
  const auto& checks = doc.is_array() ? doc : doc.at("checks");
  ASSERT_EQ(checks.size(), r.rows.size());
  for (const auto& c : checks) {
    for (const char* key : {"run", "quantity", "t", "expected", "measured", "verdict", "mandatory"}) {
      EXPECT_TRUE(c.contains(key)) << key;
    }
  }
  std::ostringstream text;
  write_text(text, r);
  EXPECT_NE(text.str().find("PASS"), std::string::npos);
}

}  // namespace
}  // namespace frustum::validation
