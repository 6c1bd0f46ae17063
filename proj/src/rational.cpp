#include "qcox/rational.hpp"

#include <cctype>
#include <charconv>

#include "qcox/error.hpp"

namespace qcox {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += to_string(p[i]);
  }
  return out + ")";
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& full) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed rational '" + full + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_int(t, text));
  std::int64_t n = parse_int(std::string_view(t).substr(0, slash), text);
  std::int64_t d = parse_int(std::string_view(t).substr(slash + 1), text);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(n, d);
}

Point operator+(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point operator*(const Rational& c, const Point& a) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

}  // namespace qcox
