#include "frustum/params.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "frustum/errors.hpp"

namespace frustum {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) {
    throw InputError("model field '" + key + "' is not an integer: '" + value + "'");
  }
  return v;
}

// Checks that `seq` is defined, positive and non-decreasing on [1, horizon].
// Returns false when evaluation fails somewhere so later checks can skip it.
bool check_sequence(const char* name, const SequenceSpec& seq, std::int64_t horizon,
                    std::vector<Violation>& out) {
  bool ok = true;
  std::int64_t prev = 0;
  for (std::int64_t t = 1; t <= horizon; ++t) {
    if (!seq.defined_at(t)) {
      out.push_back({std::string(name) + "-domain", t,
                     std::string(name) + " is not defined at t=" + std::to_string(t)});
      return false;
    }
    std::int64_t v = 0;
    try {
      v = seq(t);
    } catch (const InputError& e) {
      out.push_back({std::string(name) + "-positive", t, e.what()});
      ok = false;
      continue;
    }
    if (t > 1 && v < prev) {
      out.push_back({std::string(name) + "-nondecreasing", t,
                     std::string(name) + "_" + std::to_string(t) + " = " + std::to_string(v) +
                         " < " + std::string(name) + "_" + std::to_string(t - 1) + " = " +
                         std::to_string(prev)});
    }
    prev = v;
  }
  return ok;
}

}  // namespace

std::string ModelParams::label() const {
  return "frus(" + std::to_string(n) + ", " + f.compact() + ", " + g.compact() +
         ") T=" + std::to_string(horizon);
}

std::vector<Violation> validate_params(const ModelParams& p) {
  std::vector<Violation> out;
  if (p.n < 1) out.push_back({"n-positive", 0, "seed order n must be >= 1"});
  if (p.horizon < 0) out.push_back({"horizon-nonnegative", 0, "horizon must be >= 0"});
  if (p.vertex_budget < 1) out.push_back({"budget-positive", 0, "vertex_budget must be >= 1"});

  const bool f_ok = check_sequence("f", p.f, p.horizon, out);
  const bool g_ok = check_sequence("g", p.g, p.horizon, out);
  if (!f_ok || !g_ok || p.horizon < 1) return out;

  const std::int64_t f1 = p.f(1);
  const std::int64_t g1 = p.g(1);
  if (f1 > p.n) {
    out.push_back({"seed-clique", 1,
                   "f_1 = " + std::to_string(f1) + " exceeds the seed order n = " + std::to_string(p.n)});
  }
  if (!(p.n < f1 + g1)) {
    out.push_back({"seed-growth", 1,
                   "n = " + std::to_string(p.n) + " is not < f_1 + g_1 = " + std::to_string(f1 + g1)});
  }
  for (std::int64_t t = 2; t <= p.horizon; ++t) {
    const std::int64_t ft = p.f(t);
    const std::int64_t prev = p.f(t - 1) + p.g(t - 1);
    if (ft > prev) {
      out.push_back({"clique-available", t,
                     "f_" + std::to_string(t) + " = " + std::to_string(ft) + " exceeds f_" +
                         std::to_string(t - 1) + " + g_" + std::to_string(t - 1) + " = " +
                         std::to_string(prev)});
    }
  }
  return out;
}

void require_valid(const ModelParams& p) {
  const auto violations = validate_params(p);
  if (violations.empty()) return;
  std::string msg = "invalid model " + p.label() + ":";
  for (const auto& v : violations) msg += "\n  [" + v.condition + "] " + v.message;
  throw InputError(msg);
}

ModelParams parse_model(std::istream& in) {
  std::map<std::string, std::string> fields;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError("model line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    static const char* const kKnown[] = {"n",        "f.kind",  "f.params",     "g.kind",
                                         "g.params", "horizon", "vertex_budget"};
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      throw InputError("model line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (!fields.emplace(key, value).second) {
      throw InputError("model line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }
  for (const char* required : {"n", "f.kind", "f.params", "g.kind", "g.params", "horizon"}) {
    if (!fields.count(required)) throw InputError(std::string("model is missing '") + required + "'");
  }
  ModelParams p;
  p.n = parse_int("n", fields["n"]);
  p.f = SequenceSpec::parse(fields["f.kind"], fields["f.params"]);
  p.g = SequenceSpec::parse(fields["g.kind"], fields["g.params"]);
  p.horizon = parse_int("horizon", fields["horizon"]);
  if (auto it = fields.find("vertex_budget"); it != fields.end()) {
    const auto budget = parse_int("vertex_budget", it->second);
    if (budget < 1) throw InputError("vertex_budget must be positive");
    p.vertex_budget = static_cast<std::uint64_t>(budget);
  }
  return p;
}

ModelParams load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path + "'");
  return parse_model(in);
}

void write_model(std::ostream& out, const ModelParams& p) {
  out << "n = " << p.n << '\n'
      << "f.kind = " << p.f.kind() << '\n'
      << "f.params = " << p.f.params() << '\n'
      << "g.kind = " << p.g.kind() << '\n'
      << "g.params = " << p.g.params() << '\n'
      << "horizon = " << p.horizon << '\n'
      << "vertex_budget = " << p.vertex_budget << '\n';
}

}  // namespace frustum
