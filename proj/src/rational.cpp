#include "fclab/rational.hpp"

#include <sstream>

namespace fclab {

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::string to_fraction_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw std::domain_error("rational_pow: 0^negative");
  const unsigned long mag = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rational r(boost::multiprecision::pow(numerator(base), mag),
             boost::multiprecision::pow(denominator(base), mag));
  if (exp < 0) r = Rational(1) / r;
  return r;
}

}  // namespace fclab
