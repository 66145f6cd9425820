#include "tmg/rational.hpp"

#include "tmg/error.hpp"

namespace tmg {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorCode::DomainError, "rational with zero denominator");
  return Rational(num) / Rational(den);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorCode::ParseError, "empty rational");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos)
      fail(ErrorCode::ParseError, "malformed rational '" + text + "'");
    const Int d(den);
    if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return make_rational(Int(num), d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "malformed rational '" + text + "'");
  }
}

std::string format_rational(const Rational& value) {
  const Int num = numerator(value);
  const Int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigFloat to_bigfloat(const Rational& value) {
  return BigFloat(numerator(value).str()) / BigFloat(denominator(value).str());
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base == 0) fail(ErrorCode::DomainError, "0 to a negative power");
    return Rational(1) / pow_rational(base, -exp);
  }
  Rational acc(1);
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::optional<Int> exact_root(const Int& value, unsigned long k) {
  if (k == 0) fail(ErrorCode::DomainError, "zeroth root");
  if (value < 0) return std::nullopt;
  Int root;
  const int exact = mpz_root(root.backend().data(), value.backend().data(), k);
  if (!exact) return std::nullopt;
  return root;
}

std::optional<Rational> exact_pow(const Rational& base, const Rational& exp) {
  if (base == 0) {
    if (exp <= 0) fail(ErrorCode::DomainError, "0 to a nonpositive power");
    return Rational(0);
  }
  Int p = numerator(exp);
  const Int q = denominator(exp);
  Rational b = base;
  if (p < 0) {
    b = Rational(1) / b;
    p = -p;
  }
  if (q == 1) return pow_rational(b, p.convert_to<long>());
  if (b < 0) return std::nullopt;  // even roots of negatives aside, keep it simple
  const auto root_num = exact_root(numerator(b), q.convert_to<unsigned long>());
  const auto root_den = exact_root(denominator(b), q.convert_to<unsigned long>());
  if (!root_num || !root_den) return std::nullopt;
  return pow_rational(make_rational(*root_num, *root_den), p.convert_to<long>());
}

}  // namespace tmg
