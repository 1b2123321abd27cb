#include "lasserre/rational.hpp"

#include <cmath>
#include <cstdio>

namespace lasserre {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational rational_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty input");

  bool neg = false;
  size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    pos = 1;
  }
  std::string body = s.substr(pos);
  if (body.empty()) throw std::invalid_argument("rational_from_string: no digits in '" + text + "'");

  auto digits_only = [](const std::string& d) {
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  Rational r;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den))
      throw std::invalid_argument("rational_from_string: bad fraction '" + text + "'");
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("rational_from_string: zero denominator");
    r = Rational(n) / Rational(d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!digits_only(ip) || (!fp.empty() && !digits_only(fp)))
      throw std::invalid_argument("rational_from_string: bad decimal '" + text + "'");
    Integer scaled(ip + fp);
    Integer den = integer_pow(Integer(10), fp.size());
    r = Rational(scaled) / Rational(den);
  } else {
    if (!digits_only(body))
      throw std::invalid_argument("rational_from_string: bad number '" + text + "'");
    r = Rational(Integer(body));
  }
  if (neg) r = -r;
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace lasserre
