#include "acurv/rational.hpp"

#include <cctype>

#include "acurv/errors.hpp"

namespace acurv {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!den.empty() && (den[0] == '-' || den[0] == '+')) {
      throw ParseError("rational '" + std::string(text) + "': sign in denominator");
    }
  }
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("rational '" + std::string(text) + "': expected p/q with integer p, q");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("rational '" + std::string(text) + "': zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace acurv
