#include "qcox/geometry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "qcox/error.hpp"

namespace qcox {

std::string to_string(const Hyperplane& h) {
  return "H(" + std::to_string(h.root) + "," + std::to_string(h.level) + ")";
}

std::size_t AlcoveHash::operator()(const Alcove& a) const {
  std::size_t seed = a.coords.size();
  for (auto k : a.coords) hash_combine(seed, std::hash<std::int64_t>{}(k));
  return seed;
}

namespace {

using AlcoveSet = std::unordered_set<Alcove, AlcoveHash>;

const Root& root_at(const RootSystem& rs, std::size_t index) {
  if (index >= rs.positive_roots().size())
    throw PreconditionError("hyperplane root index " + std::to_string(index) + " out of range");
  return rs.positive_roots()[index];
}

// Whether crossing h out of a lowers the violation of the constraint on h.root.
bool crossing_helps(const Alcove& a, const Hyperplane& h, const HalfSpace& c) {
  std::int64_t k = a.coords[h.root];
  if (c.sign > 0) return k < c.plane.level && h.level == k + 1;
  return k >= c.plane.level && h.level == k;
}

const HalfSpace* constraint_on(const Region& r, std::size_t root) {
  for (const auto& c : r.constraints)
    if (c.plane.root == root) return &c;
  return nullptr;
}

int strict_sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

// --- points and hyperplanes -------------------------------------------------

Point reflect_point(const RootSystem& rs, const Point& x, const Hyperplane& h) {
  const Root& r = root_at(rs, h.root);
  Rational shift = rs.pairing(x, r.covector) - Rational(h.level);
  Point y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= shift * r.coroot[i];
  return y;
}

bool is_special(const RootSystem& rs, const Point& v) {
  for (const auto& r : rs.positive_roots())
    if (!is_integer(rs.pairing(v, r.covector))) return false;
  return true;
}

Hyperplane image_of_hyperplane(const QuasiCoxeterGroup& g, const GroupElement& w,
                               const Hyperplane& h) {
  const RootSystem& rs = g.root_system();
  // w(H) = {y : <y, u beta> = k + <lambda, u beta>}.
  IntVector image = w.finite.act_on_root(root_at(rs, h.root).covector);
  Rational level = Rational(h.level) + pair(w.lambda, image);
  if (!is_integer(level))
    throw DomainError("image of " + to_string(h) + " has non-integral level " +
                      qcox::to_string(level));
  auto ref = rs.find_root(image);
  QCOX_ENSURE(ref.has_value(), "finite Weyl element did not map a root to a root");
  std::int64_t k = level.numerator();
  return {ref->index, ref->sign > 0 ? k : -k};
}

Hyperplane base_wall(const RootSystem& rs, std::size_t s) {
  if (s > rs.rank()) throw PreconditionError("generator index " + std::to_string(s) + " out of range");
  if (s == 0) return {rs.highest_root_index(), 1};
  return {s - 1, 0};
}

// --- alcoves ----------------------------------------------------------------

Alcove alcove_containing(const RootSystem& rs, const Point& x) {
  Alcove a;
  a.witness = x;
  a.coords.reserve(rs.positive_roots().size());
  for (const auto& r : rs.positive_roots()) {
    Rational p = rs.pairing(x, r.covector);
    if (is_integer(p))
      throw PreconditionError("point " + to_string(x) + " lies on a root hyperplane");
    a.coords.push_back(floor(p));
  }
  return a;
}

Alcove base_alcove(const RootSystem& rs) { return alcove_containing(rs, rs.base_interior_point()); }

Alcove alcove_of(const QuasiCoxeterGroup& g, const GroupElement& w) {
  return alcove_containing(g.root_system(), g.act_on_point(w, g.root_system().base_interior_point()));
}

Alcove reflect_alcove(const RootSystem& rs, const Alcove& a, const Hyperplane& h) {
  return alcove_containing(rs, reflect_point(rs, a.witness, h));
}

int side_of(const Alcove& a, const Hyperplane& h) {
  if (h.root >= a.coords.size()) throw PreconditionError("hyperplane root index out of range");
  return a.coords[h.root] >= h.level ? 1 : -1;
}

bool separates(const Hyperplane& h, const Alcove& a, const Alcove& b) {
  return side_of(a, h) != side_of(b, h);
}

std::size_t distance(const Alcove& a, const Alcove& b) {
  if (a.coords.size() != b.coords.size()) throw PreconditionError("alcoves of different root systems");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    d += static_cast<std::size_t>(std::abs(a.coords[i] - b.coords[i]));
  return d;
}

bool adjacent(const Alcove& a, const Alcove& b) { return distance(a, b) == 1; }

std::vector<Hyperplane> walls(const RootSystem& rs, const Alcove& a) {
  std::vector<Hyperplane> out;
  for (std::size_t j = 0; j < a.coords.size(); ++j) {
    for (std::int64_t level : {a.coords[j], a.coords[j] + 1}) {
      Hyperplane h{j, level};
      if (adjacent(a, reflect_alcove(rs, a, h))) out.push_back(h);
    }
  }
  QCOX_ENSURE(out.size() == rs.rank() + 1, "alcove does not have rank + 1 walls");
  return out;
}

bool is_wall(const RootSystem& rs, const Alcove& a, const Hyperplane& h) {
  auto ws = walls(rs, a);
  return std::find(ws.begin(), ws.end(), h) != ws.end();
}

bool closure_contains(const RootSystem& rs, const Alcove& a, const Point& v) {
  const auto& roots = rs.positive_roots();
  for (std::size_t j = 0; j < roots.size(); ++j) {
    Rational p = rs.pairing(v, roots[j].covector);
    if (p < Rational(a.coords[j]) || p > Rational(a.coords[j] + 1)) return false;
  }
  return true;
}

std::vector<Alcove> alcove_ball(const RootSystem& rs, const Alcove& center, std::size_t radius) {
  std::vector<Alcove> out{center};
  AlcoveSet seen{center};
  std::size_t frontier_begin = 0;
  for (std::size_t d = 0; d < radius; ++d) {
    std::size_t frontier_end = out.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& h : walls(rs, out[i])) {
        Alcove next = reflect_alcove(rs, out[i], h);
        if (seen.insert(next).second) out.push_back(next);
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

std::vector<Alcove> alcoves_at(const RootSystem& rs, const Point& v) {
  // v + eps * p lies in an alcove whose closure contains v once eps is below
  // every nonzero gap between <v, alpha> and the next integer.
  std::int64_t lcm = 1;
  for (const auto& r : rs.positive_roots())
    lcm = std::lcm(lcm, rs.pairing(v, r.covector).denominator());
  Point start = v + Rational(1, 2 * lcm) * rs.base_interior_point();
  Alcove first = alcove_containing(rs, start);
  QCOX_ENSURE(closure_contains(rs, first, v), "perturbed vertex left the star");

  std::vector<Alcove> out{first};
  AlcoveSet seen{first};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& h : walls(rs, out[i])) {
      Alcove next = reflect_alcove(rs, out[i], h);
      if (closure_contains(rs, next, v) && seen.insert(next).second) out.push_back(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- marked alcoves ---------------------------------------------------------

MarkedAlcove base_marking(const QuasiCoxeterGroup& g) {
  const RootSystem& rs = g.root_system();
  MarkedAlcove m{base_alcove(rs), zero_point(rs.rank()), {}};
  for (std::size_t s = 0; s <= rs.rank(); ++s) m.labeling.push_back(base_wall(rs, s));
  return m;
}

MarkedAlcove marked_alcove_of(const QuasiCoxeterGroup& g, const GroupElement& w) {
  const RootSystem& rs = g.root_system();
  MarkedAlcove m{alcove_of(g, w), g.act_on_point(w, zero_point(rs.rank())), {}};
  for (std::size_t s = 0; s <= rs.rank(); ++s)
    m.labeling.push_back(image_of_hyperplane(g, w, base_wall(rs, s)));
  return m;
}

MarkedAlcove reflect_marked(const QuasiCoxeterGroup& g, const MarkedAlcove& m, std::size_t s) {
  const RootSystem& rs = g.root_system();
  if (s >= m.labeling.size()) throw PreconditionError("generator index out of range");
  const Hyperplane h = m.labeling[s];
  GroupElement refl = g.affine_reflection(h.root, h.level);
  MarkedAlcove out{reflect_alcove(rs, m.alcove, h), reflect_point(rs, m.vertex, h), {}};
  for (const auto& wall : m.labeling) out.labeling.push_back(image_of_hyperplane(g, refl, wall));
  return out;
}

// --- regions ----------------------------------------------------------------

Region half_space(const Hyperplane& h, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("half-space sign must be +1 or -1");
  Region r;
  r.kind = Region::Kind::HalfSpace;
  r.constraints.push_back({h, sign});
  return r;
}

Region chamber(const RootSystem& rs, const Point& apex, const FiniteWeylElement& u, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("chamber sign must be +1 or -1");
  if (!is_special(rs, apex)) throw PreconditionError("chamber apex " + to_string(apex) + " is not special");
  Region r;
  r.kind = sign > 0 ? Region::Kind::Chamber : Region::Kind::OppositeChamber;
  r.apex = apex;
  r.orientation = u;
  const FiniteWeylElement u_inv = u.inverse();
  const auto& roots = rs.positive_roots();
  for (std::size_t j = 0; j < roots.size(); ++j) {
    // x in apex + u(C) iff <x - apex, beta> has the sign of u^{-1} beta.
    auto ref = rs.find_root(u_inv.act_on_root(roots[j].covector));
    QCOX_ENSURE(ref.has_value(), "finite Weyl element did not map a root to a root");
    std::int64_t level = rs.pairing(apex, roots[j].covector).numerator();
    r.constraints.push_back({{j, level}, ref->sign * sign});
  }
  return r;
}

Region base_chamber(const RootSystem& rs) {
  return chamber(rs, zero_point(rs.rank()), FiniteWeylElement::identity(rs.rank()), 1);
}

Region opposite_base_chamber(const RootSystem& rs) {
  return chamber(rs, zero_point(rs.rank()), FiniteWeylElement::identity(rs.rank()), -1);
}

Region chamber_of(const RootSystem& rs, const MarkedAlcove& m) {
  if (!is_special(rs, m.vertex))
    throw PreconditionError("marked vertex " + to_string(m.vertex) + " is not special");
  if (!closure_contains(rs, m.alcove, m.vertex))
    throw PreconditionError("marked vertex is not in the closure of the alcove");
  const auto& roots = rs.positive_roots();
  std::vector<int> signs(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j)
    signs[j] = strict_sign(rs.pairing(m.alcove.witness - m.vertex, roots[j].covector));

  // Find u with u(positive roots) = {signs[j] * beta_j}: peel a simple root
  // from the negated set until none remains.
  FiniteWeylElement u = FiniteWeylElement::identity(rs.rank());
  std::vector<int> current = signs;
  for (;;) {
    std::size_t i = 0;
    while (i < rs.rank() && current[i] > 0) ++i;
    if (i == rs.rank()) break;
    FiniteWeylElement s = rs.simple_reflection(i + 1);
    std::vector<int> next(roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j) {
      auto ref = rs.find_root(s.act_on_root(roots[j].covector));
      next[ref->index] = current[j] * ref->sign;
    }
    current = std::move(next);
    u = u * s;
  }
  Region r = chamber(rs, m.vertex, u, 1);
  for (const auto& c : r.constraints)
    QCOX_ENSURE(c.sign == signs[c.plane.root], "chamber orientation reconstruction failed");
  QCOX_ENSURE(region_contains_alcove(r, m.alcove), "chamber does not contain its alcove");
  return r;
}

bool region_contains_alcove(const Region& r, const Alcove& a) {
  for (const auto& c : r.constraints)
    if (side_of(a, c.plane) != c.sign) return false;
  return true;
}

bool region_contains_point(const RootSystem& rs, const Region& r, const Point& x) {
  for (const auto& c : r.constraints) {
    Rational d = rs.pairing(x, root_at(rs, c.plane.root).covector) - Rational(c.plane.level);
    if (strict_sign(d) != c.sign) return false;
  }
  return true;
}

bool region_closure_contains_point(const RootSystem& rs, const Region& r, const Point& x) {
  for (const auto& c : r.constraints) {
    Rational d = rs.pairing(x, root_at(rs, c.plane.root).covector) - Rational(c.plane.level);
    if (strict_sign(d) == -c.sign) return false;
  }
  return true;
}

bool region_contains_region(const RootSystem& rs, const Region& outer, const Region& inner) {
  if (outer.kind == Region::Kind::HalfSpace || inner.kind == Region::Kind::HalfSpace)
    throw PreconditionError("region containment is defined for chambers only");
  if (outer.constraints.size() != inner.constraints.size()) return false;
  for (std::size_t j = 0; j < outer.constraints.size(); ++j)
    if (outer.constraints[j].sign != inner.constraints[j].sign) return false;
  return region_closure_contains_point(rs, outer, inner.apex);
}

std::size_t separating_wall_count(const Alcove& a, const Region& r) {
  std::size_t count = 0;
  for (const auto& c : r.constraints) {
    std::int64_t k = a.coords.at(c.plane.root);
    std::int64_t level = c.plane.level;
    if (c.sign > 0 && k < level) count += static_cast<std::size_t>(level - k);
    if (c.sign < 0 && k >= level) count += static_cast<std::size_t>(k - level + 1);
  }
  return count;
}

namespace {

// Crosses only walls separating the current alcove from the whole region.
// Succeeds exactly when the separating-wall lower bound is attained.
std::optional<RegionDistance> greedy_region_walk(const RootSystem& rs, const Alcove& a,
                                                 const Region& r) {
  RegionDistance out{0, a, {a}};
  while (!region_contains_alcove(r, out.nearest)) {
    std::optional<Hyperplane> chosen;
    for (const auto& h : walls(rs, out.nearest)) {
      const HalfSpace* c = constraint_on(r, h.root);
      if (c != nullptr && crossing_helps(out.nearest, h, *c)) {
        chosen = h;
        break;
      }
    }
    if (!chosen) return std::nullopt;
    out.nearest = reflect_alcove(rs, out.nearest, *chosen);
    out.gallery.push_back(out.nearest);
    ++out.distance;
  }
  return out;
}

// A* over alcoves; the separating-wall count is a consistent lower bound.
RegionDistance astar_region_walk(const RootSystem& rs, const Alcove& a, const Region& r,
                                 std::size_t node_cap) {
  struct Entry {
    std::size_t f, g, node;
    bool operator>(const Entry& o) const { return f != o.f ? f > o.f : g < o.g; }
  };
  std::vector<Alcove> nodes{a};
  std::vector<std::size_t> parent{0};
  std::vector<std::size_t> cost{0};
  std::unordered_map<Alcove, std::size_t, AlcoveHash> index{{a, 0}};
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  open.push({separating_wall_count(a, r), 0, 0});
  while (!open.empty()) {
    Entry e = open.top();
    open.pop();
    if (e.g != cost[e.node]) continue;
    if (region_contains_alcove(r, nodes[e.node])) {
      RegionDistance out{e.g, nodes[e.node], {}};
      for (std::size_t n = e.node;; n = parent[n]) {
        out.gallery.push_back(nodes[n]);
        if (n == 0) break;
      }
      std::reverse(out.gallery.begin(), out.gallery.end());
      return out;
    }
    for (const auto& h : walls(rs, nodes[e.node])) {
      Alcove next = reflect_alcove(rs, nodes[e.node], h);
      auto [it, inserted] = index.try_emplace(next, nodes.size());
      if (inserted) {
        if (nodes.size() >= node_cap)
          throw ResourceError("region distance search exceeded " + std::to_string(node_cap) +
                              " alcoves");
        nodes.push_back(next);
        parent.push_back(e.node);
        cost.push_back(e.g + 1);
      } else if (cost[it->second] <= e.g + 1) {
        continue;
      } else {
        parent[it->second] = e.node;
        cost[it->second] = e.g + 1;
      }
      open.push({e.g + 1 + separating_wall_count(next, r), e.g + 1, it->second});
    }
  }
  throw PreconditionError("region contains no alcove");
}

}  // namespace

RegionDistance dist_alcove_region(const RootSystem& rs, const Alcove& a, const Region& r,
                                  std::size_t node_cap) {
  const std::size_t bound = separating_wall_count(a, r);
  if (auto greedy = greedy_region_walk(rs, a, r)) {
    QCOX_ENSURE(greedy->distance == bound, "greedy region walk exceeded the lower bound");
    return *greedy;
  }
  RegionDistance out = astar_region_walk(rs, a, r, node_cap);
  QCOX_ENSURE(out.distance >= bound, "region distance below the separating wall count");
  return out;
}

std::size_t dist_vertex_region(const RootSystem& rs, const Point& v, const Region& r,
                               std::size_t node_cap) {
  std::size_t best = SIZE_MAX;
  for (const auto& a : alcoves_at(rs, v))
    best = std::min(best, dist_alcove_region(rs, a, r, node_cap).distance);
  return best;
}

std::optional<std::size_t> bfs_dist_alcove_region(const RootSystem& rs, const Alcove& a,
                                                  const Region& r, std::size_t radius) {
  std::deque<std::pair<Alcove, std::size_t>> queue{{a, 0}};
  AlcoveSet seen{a};
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    if (region_contains_alcove(r, cur)) return d;
    if (d == radius) continue;
    for (const auto& h : walls(rs, cur)) {
      Alcove next = reflect_alcove(rs, cur, h);
      if (seen.insert(next).second) queue.emplace_back(std::move(next), d + 1);
    }
  }
  return std::nullopt;
}

// --- galleries --------------------------------------------------------------

Gallery minimal_gallery(const RootSystem& rs, const Alcove& a, const Alcove& b) {
  Gallery g{a};
  while (!(g.back() == b)) {
    const Alcove& cur = g.back();
    bool moved = false;
    for (const auto& h : walls(rs, cur)) {
      if (separates(h, cur, b)) {
        g.push_back(reflect_alcove(rs, cur, h));
        moved = true;
        break;
      }
    }
    QCOX_ENSURE(moved, "no wall of the current alcove separates it from the target");
  }
  QCOX_ENSURE(g.size() == distance(a, b) + 1, "greedy gallery is not minimal");
  return g;
}

bool is_gallery(const Gallery& g) {
  if (g.empty()) return false;
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (!adjacent(g[i], g[i + 1])) return false;
  return true;
}

bool is_minimal_gallery(const Gallery& g) {
  return is_gallery(g) && distance(g.front(), g.back()) == g.size() - 1;
}

std::vector<Hyperplane> intermediate_walls(const Gallery& g) {
  if (!is_gallery(g)) throw PreconditionError("not a gallery");
  std::vector<Hyperplane> out;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    for (std::size_t j = 0; j < g[i].coords.size(); ++j) {
      if (g[i].coords[j] != g[i + 1].coords[j]) {
        out.push_back({j, std::max(g[i].coords[j], g[i + 1].coords[j])});
        break;
      }
    }
  }
  return out;
}

bool is_umbrella(const RootSystem& rs, const Gallery& g, const Alcove& a, const Hyperplane& h) {
  if (!is_wall(rs, a, h)) throw PreconditionError(to_string(h) + " is not a wall of the alcove");
  if (g.empty()) throw PreconditionError("empty gallery");
  const int side = side_of(a, h);
  for (const auto& b : g)
    if (side_of(b, h) != side) return false;
  if (!is_minimal_gallery(g)) return false;
  auto ws = intermediate_walls(g);
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (!separates(ws[i], g[i], a)) return false;
  return true;
}

std::vector<std::size_t> infinite_gallery_word(const QuasiCoxeterGroup& g) {
  const RootSystem& rs = g.root_system();
  GroupElement t = g.translation(Rational(2) * rs.rho_check());
  ElementWord w = g.reduced_decomposition(t);
  QCOX_ENSURE(w.omega == g.omega_identity(), "2 rho^vee is not in the coroot lattice");
  QCOX_ENSURE(!w.word.empty() && w.word.front() == 0,
              "reduced word of the dominant translation does not start with s_aff");
  return w.word;
}

}  // namespace qcox
