#include "magnus/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace magnus {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) {
    throw std::domain_error("not an integer: " + to_string(q));
  }
  return q.get_num();
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_int(num) || !valid_int(den)) {
    throw std::invalid_argument("malformed rational: \"" + text + "\"");
  }
  Integer d(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: \"" + text + "\"");
  }
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str();  // canonical "p" or "p/q"
}

}  // namespace magnus
