#include "frustum/exact.hpp"

#include "frustum/errors.hpp"

namespace frustum {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    if (q == 0) throw InputError("zero denominator in rational '" + text + "'");
    return Rational(p, q);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const InputError*>(&e) != nullptr) throw;
    throw InputError("malformed rational '" + text + "'");
  }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace frustum
