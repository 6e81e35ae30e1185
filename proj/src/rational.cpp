#include "semicomm/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace semicomm {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  Rational r;
  r.v_ = a.v_ / b.v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

std::string to_string(const Rational& r) { return r.value().get_str(); }

Rational rational_from_string(std::string_view text) {
  // Grammar: '-'? digit+ ('/' digit+)?   with a nonzero denominator.
  const auto fail = [&](const char* why) {
    throw std::invalid_argument("bad rational \"" + std::string(text) + "\": " + why);
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) fail("expected digits in numerator");
  bool has_den = false;
  if (i < text.size() && text[i] == '/') {
    has_den = true;
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start) fail("expected digits in denominator");
  }
  if (i != text.size()) fail("trailing characters");

  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) fail("unparseable");
  if (has_den && sgn(q.get_den()) == 0) fail("zero denominator");
  q.canonicalize();
  return Rational(q);
}

}  // namespace semicomm
