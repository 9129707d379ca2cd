#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace frustum {

/// Integer sequence f_t or g_t, described declaratively.
///
/// Constant and affine kinds are defined for every t >= 0. A table holds
/// v_1..v_L and is only defined on [1, L]; there is no extension past the end.
/// Every evaluation must be a positive integer.
class SequenceSpec {
 public:
  struct Constant {
    std::int64_t value;
  };
  struct Affine {
    std::int64_t slope;
    std::int64_t offset;
  };
  struct Table {
    std::vector<std::int64_t> values;
  };

  static SequenceSpec constant(std::int64_t value) { return SequenceSpec(Constant{value}); }
  static SequenceSpec affine(std::int64_t slope, std::int64_t offset) {
    return SequenceSpec(Affine{slope, offset});
  }
  static SequenceSpec table(std::vector<std::int64_t> values) {
    return SequenceSpec(Table{std::move(values)});
  }

  /// Throws InputError when t is outside the domain or the value is not positive.
  std::int64_t operator()(std::int64_t t) const;

  /// Whether t lies in the domain (the value may still be non-positive).
  bool defined_at(std::int64_t t) const;

  /// "constant", "affine" or "table".
  std::string kind() const;
  /// Space-separated parameter list, as written in model files.
  std::string params() const;
  /// Compact form "const:1", "affine:1,0", "table:2,3,5" used on the command line.
  std::string compact() const;

  /// Inverse of kind()/params().
  static SequenceSpec parse(const std::string& kind, const std::string& params);
  /// Inverse of compact().
  static SequenceSpec parse_compact(const std::string& text);

  friend bool operator==(const SequenceSpec& a, const SequenceSpec& b);

 private:
  using Variant = std::variant<Constant, Affine, Table>;
  explicit SequenceSpec(Variant v) : rep_(std::move(v)) {}

  Variant rep_;
};

/// eval_sequence: free-function spelling of SequenceSpec::operator().
inline std::int64_t eval_sequence(const SequenceSpec& spec, std::int64_t t) { return spec(t); }

}  // namespace frustum
