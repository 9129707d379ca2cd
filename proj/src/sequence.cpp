#include "frustum/sequence.hpp"

#include <sstream>

#include "frustum/errors.hpp"

namespace frustum {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::int64_t> parse_ints(const std::string& text, char sep) {
  std::vector<std::int64_t> out;
  std::string token;
  std::istringstream in(text);
  auto push = [&](const std::string& tok) {
    if (tok.empty()) return;
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw InputError("not an integer: '" + tok + "'");
    out.push_back(v);
  };
  if (sep == ' ') {
    while (in >> token) push(token);
  } else {
    while (std::getline(in, token, sep)) {
      const auto b = token.find_first_not_of(" \t");
      const auto e = token.find_last_not_of(" \t");
      push(b == std::string::npos ? std::string() : token.substr(b, e - b + 1));
    }
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

bool SequenceSpec::defined_at(std::int64_t t) const {
  if (t < 0) return false;
  if (const auto* table = std::get_if<Table>(&rep_)) {
    return t >= 1 && t <= static_cast<std::int64_t>(table->values.size());
  }
  return true;
}

std::int64_t SequenceSpec::operator()(std::int64_t t) const {
  if (!defined_at(t)) {
    throw InputError("sequence " + compact() + " is not defined at t=" + std::to_string(t));
  }
  const std::int64_t v = std::visit(
      Overloaded{[](const Constant& c) { return c.value; },
                 [t](const Affine& a) {
                   std::int64_t prod = 0;
                   std::int64_t sum = 0;
                   if (__builtin_mul_overflow(a.slope, t, &prod) ||
                       __builtin_add_overflow(prod, a.offset, &sum)) {
                     throw InputError("affine sequence overflows at t=" + std::to_string(t));
                   }
                   return sum;
                 },
                 [t](const Table& tb) { return tb.values[static_cast<std::size_t>(t - 1)]; }},
      rep_);
  if (v < 1) {
    throw InputError("sequence " + compact() + " is not positive at t=" + std::to_string(t) +
                     " (value " + std::to_string(v) + ")");
  }
  return v;
}

std::string SequenceSpec::kind() const {
  return std::visit(Overloaded{[](const Constant&) { return std::string("constant"); },
                               [](const Affine&) { return std::string("affine"); },
                               [](const Table&) { return std::string("table"); }},
                    rep_);
}

std::string SequenceSpec::params() const {
  return std::visit(
      Overloaded{[](const Constant& c) { return std::to_string(c.value); },
                 [](const Affine& a) { return std::to_string(a.slope) + " " + std::to_string(a.offset); },
                 [](const Table& t) { return join(t.values, ' '); }},
      rep_);
}

std::string SequenceSpec::compact() const {
  return std::visit(
      Overloaded{[](const Constant& c) { return "const:" + std::to_string(c.value); },
                 [](const Affine& a) {
                   return "affine:" + std::to_string(a.slope) + "," + std::to_string(a.offset);
                 },
                 [](const Table& t) { return "table:" + join(t.values, ','); }},
      rep_);
}

SequenceSpec SequenceSpec::parse(const std::string& kind, const std::string& params) {
  const auto values = parse_ints(params, ' ');
  if (kind == "constant" || kind == "const") {
    if (values.size() != 1) throw InputError("constant sequence takes one parameter");
    return constant(values[0]);
  }
  if (kind == "affine") {
    if (values.size() != 2) throw InputError("affine sequence takes two parameters: slope offset");
    return affine(values[0], values[1]);
  }
  if (kind == "table") {
    if (values.empty()) throw InputError("table sequence needs at least one value");
    return table(values);
  }
  throw InputError("unknown sequence kind '" + kind + "'");
}

SequenceSpec SequenceSpec::parse_compact(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("expected kind:params, got '" + text + "'");
  const auto values = parse_ints(text.substr(colon + 1), ',');
  std::string spaced = join(values, ' ');
  return parse(text.substr(0, colon), spaced);
}

bool operator==(const SequenceSpec& a, const SequenceSpec& b) { return a.compact() == b.compact(); }

}  // namespace frustum
