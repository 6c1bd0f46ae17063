#include "qcox/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <set>

#include "qcox/error.hpp"

namespace qcox {

namespace {

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

std::string fmt(double v) {
  if (std::abs(v) < 5e-13) v = 0.0;  // no "-0.000000000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

void require_rank_two(const RootSystem& rs) {
  if (rs.rank() != 2)
    throw PreconditionError("rendering needs a rank-2 root system, got " + rs.datum().name());
}

const char* kStyle =
    "polygon{stroke:#333333;stroke-width:0.8;stroke-linejoin:round}"
    ".plain{fill:#ffffff}.base{fill:#d62728}.class{fill:#ff9896}"
    ".gallery{fill:#9ecae1}.chamber{fill:#e5e5e5}";

}  // namespace

Embedding::Embedding(const RootSystem& rs) {
  require_rank_two(rs);
  const auto& a = rs.cartan_matrix();
  // Symmetrizer: a_ij d_j = a_ji d_i; a_12 != 0 for every rank-2 type.
  const double d1 = 1.0;
  const double d2 = static_cast<double>(a(1, 0)) * d1 / static_cast<double>(a(0, 1));
  const double b11 = a(0, 0) * d1, b12 = a(0, 1) * d2, b22 = a(1, 1) * d2;
  l11_ = std::sqrt(b11);
  l21_ = b12 / l11_;
  l22_ = std::sqrt(b22 - l21_ * l21_);
}

std::array<double, 2> Embedding::operator()(const Point& x) const {
  const double x1 = to_double(x[0]), x2 = to_double(x[1]);
  return {l11_ * x1 + l21_ * x2, l22_ * x2};
}

std::vector<Alcove> alcoves_in_box(const RootSystem& rs, std::size_t radius) {
  const auto r = static_cast<std::int64_t>(radius);
  auto inside = [&](const Alcove& a) {
    return std::all_of(a.coords.begin(), a.coords.end(), [&](auto k) { return -r <= k && k < r; });
  };
  // The box is convex, so its alcoves are connected through walls inside it.
  std::set<Alcove> seen;
  std::deque<Alcove> queue;
  Alcove base = base_alcove(rs);
  if (!inside(base)) return {};
  seen.insert(base);
  queue.push_back(base);
  while (!queue.empty()) {
    Alcove a = queue.front();
    queue.pop_front();
    for (const auto& h : walls(rs, a)) {
      Alcove b = reflect_alcove(rs, a, h);
      if (inside(b) && seen.insert(b).second) queue.push_back(b);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Point> alcove_vertices(const RootSystem& rs, const Alcove& a) {
  require_rank_two(rs);
  std::vector<Hyperplane> ws = walls(rs, a);
  std::vector<Point> out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      const IntVector& c = rs.positive_roots()[ws[i].root].covector;
      const IntVector& d = rs.positive_roots()[ws[j].root].covector;
      const std::int64_t det = c[0] * d[1] - c[1] * d[0];
      QCOX_ENSURE(det != 0, "two walls of an alcove are parallel");
      const Rational k1(ws[i].level), k2(ws[j].level);
      out.push_back(Point{(k1 * d[1] - k2 * c[1]) / det, (k2 * c[0] - k1 * d[0]) / det});
    }
  }
  QCOX_ENSURE(out.size() == 3, "a rank-2 alcove has three vertices");
  std::sort(out.begin(), out.end());
  return out;
}

std::string render_svg(const QuasiCoxeterGroup& g, const FigureSpec& spec) {
  const RootSystem& rs = g.root_system();
  require_rank_two(rs);
  const Embedding embed(rs);
  const std::vector<Alcove> alcoves = alcoves_in_box(rs, spec.radius);

  std::set<Alcove> members, gallery(spec.gallery.begin(), spec.gallery.end());
  for (const auto& w : spec.class_members) members.insert(alcove_of(g, w));
  const Alcove base = base_alcove(rs);
  std::optional<Region> shaded;
  if (spec.shade == Shade::Dominant) shaded = base_chamber(rs);
  if (spec.shade == Shade::Antidominant) shaded = opposite_base_chamber(rs);

  auto role = [&](const Alcove& a) -> const char* {
    if (a == base) return "base";
    if (members.count(a)) return "class";
    if (gallery.count(a)) return "gallery";
    if (shaded && region_contains_alcove(*shaded, a)) return "chamber";
    return "plain";
  };

  std::vector<std::array<std::array<double, 2>, 3>> triangles;
  double xmin = std::numeric_limits<double>::max(), ymin = xmin;
  double xmax = std::numeric_limits<double>::lowest(), ymax = xmax;
  for (const auto& a : alcoves) {
    std::array<std::array<double, 2>, 3> t;
    auto verts = alcove_vertices(rs, a);
    for (std::size_t i = 0; i < 3; ++i) {
      auto p = embed(verts[i]);
      t[i] = {p[0] * spec.scale, -p[1] * spec.scale};  // SVG y grows downward
      xmin = std::min(xmin, t[i][0]);
      xmax = std::max(xmax, t[i][0]);
      ymin = std::min(ymin, t[i][1]);
      ymax = std::max(ymax, t[i][1]);
    }
    triangles.push_back(t);
  }
  if (alcoves.empty()) xmin = ymin = xmax = ymax = 0.0;
  const double margin = 10.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fmt(xmin - margin) + " " +
         fmt(ymin - margin) + " " + fmt(xmax - xmin + 2 * margin) + " " + fmt(ymax - ymin + 2 * margin) +
         "\">\n";
  out += "<title>" + rs.datum().name() + " alcoves, radius " + std::to_string(spec.radius) + "</title>\n";
  out += "<style>" + std::string(kStyle) + "</style>\n";
  for (std::size_t i = 0; i < alcoves.size(); ++i) {
    std::string pts;
    for (std::size_t k = 0; k < 3; ++k)
      pts += (k ? " " : "") + fmt(triangles[i][k][0]) + "," + fmt(triangles[i][k][1]);
    out += "<polygon class=\"" + std::string(role(alcoves[i])) + "\" points=\"" + pts + "\"/>\n";
  }
  out += "<circle cx=\"0.000000000000\" cy=\"0.000000000000\" r=\"3\" fill=\"#000000\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace qcox
