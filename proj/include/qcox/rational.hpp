#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace boost {

// Under C++20 rewritten comparisons, boost's mixed rational/integer operator==
// templates select each other and recurse forever. Exact non-template
// overloads win overload resolution and break the cycle.
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, long long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, long b) {
  return a.denominator() == 1 && a.numerator() == b;
}

}  // namespace boost

namespace qcox {

using Rational = boost::rational<std::int64_t>;

/// A point of the apartment in simple-coroot coordinates.
using Point = std::vector<Rational>;

/// Integer vector (root covectors, coroot coordinates, alcove coordinates).
using IntVector = std::vector<std::int64_t>;

/// Largest integer not exceeding q.
inline std::int64_t floor(const Rational& q) {
  std::int64_t n = q.numerator();
  std::int64_t d = q.denominator();  // always positive
  std::int64_t r = n / d;
  if (n % d != 0 && n < 0) --r;
  return r;
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

std::string to_string(const Rational& q);

/// "(a,b,c)" with rationals written as n or n/d.
std::string to_string(const Point& p);

/// Parses "n" or "n/d" (optional sign). Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

inline Point zero_point(std::size_t dim) { return Point(dim, Rational(0)); }

inline Point to_point(const IntVector& v) {
  Point p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = Rational(v[i]);
  return p;
}

/// Sum of x_i * c_i for a point and an integer covector.
inline Rational pair(const Point& x, const IntVector& covector) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (covector[i] != 0) s += x[i] * covector[i];
  return s;
}

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& c, const Point& a);

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline std::size_t hash_value(const Rational& q) {
  std::size_t h = std::hash<std::int64_t>{}(q.numerator());
  hash_combine(h, std::hash<std::int64_t>{}(q.denominator()));
  return h;
}

}  // namespace qcox
