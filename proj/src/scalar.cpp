#include "tqv/scalar.hpp"

#include <cctype>
#include <ostream>

#include "tqv/error.hpp"

namespace tqv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational \"" + std::string(text) +
                     "\" (expected p/q)");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw InputError("zero denominator in \"" + std::string(text) + "\"");
  }
  Rational r(p, q);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Scalar Scalar::inverse() const {
  Rational n = norm_sq();
  if (sgn(n) == 0) throw InputError("division by zero scalar");
  return Scalar(Rational(re_ / n), Rational(-im_ / n));
}

std::string format_scalar(const Scalar& s) {
  std::string out = format_rational(s.re());
  if (sgn(s.im()) < 0) {
    out += "-" + format_rational(Rational(-s.im()));
  } else {
    out += "+" + format_rational(s.im());
  }
  return out + "·i";
}

std::string pretty_scalar(const Scalar& s) {
  if (s.is_real()) return s.re().get_str();
  if (sgn(s.re()) == 0) {
    if (s.im() == 1) return "i";
    if (s.im() == -1) return "-i";
    return s.im().get_str() + "i";
  }
  std::string out = s.re().get_str();
  out += sgn(s.im()) < 0 ? "-" : "+";
  Rational mag = abs(s.im());
  if (mag != 1) out += mag.get_str();
  return out + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << pretty_scalar(s);
}

}  // namespace tqv
