#include "qcox/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "qcox/error.hpp"
#include "qcox/linalg.hpp"

namespace qcox {

QParams QParams::uniform(const QuasiCoxeterGroup& g, std::int64_t q) {
  return QParams{std::vector<std::int64_t>(g.num_generators(), q)};
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Order of s_i s_j, or 0 when it exceeds the largest finite Coxeter label.
std::size_t braid_order(const QuasiCoxeterGroup& g, std::size_t i, std::size_t j) {
  const GroupElement prod = g.compose(g.generator(i), g.generator(j));
  GroupElement p = prod;
  for (std::size_t m = 1; m <= 6; ++m) {
    if (p == g.identity()) return m;
    p = g.compose(p, prod);
  }
  return 0;
}

OmegaElement omega_negate(const QuasiCoxeterGroup& g, const OmegaElement& c) {
  return g.omega_projection(g.inverse(g.omega_representative(c)));
}

std::int64_t to_int64(const linalg::BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ResourceError("center basis coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::vector<std::vector<std::size_t>> generator_conjugacy_classes(const QuasiCoxeterGroup& g) {
  const std::size_t n = g.num_generators();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (braid_order(g, i, j) % 2 == 1) uf.unite(i, j);
  if (g.normalizes_affine_group()) {
    for (const auto& c : g.omega_generators()) {
      GroupElement sigma = g.omega_section(c);
      for (std::size_t i = 0; i < n; ++i) {
        GroupElement image = g.conjugate(sigma, g.generator(i));
        auto it = std::find(g.generators().begin(), g.generators().end(), image);
        QCOX_ENSURE(it != g.generators().end(), "Omega section does not permute the generators");
        uf.unite(i, static_cast<std::size_t>(it - g.generators().begin()));
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) classes[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

void check_q_params(const QuasiCoxeterGroup& g, const QParams& q) {
  if (q.values.size() != g.num_generators())
    throw ConstructionError("q needs one value per generator (" + std::to_string(g.num_generators()) + ")");
  for (std::size_t s = 0; s < q.values.size(); ++s)
    if (q.values[s] <= 0) throw ConstructionError("q(" + generator_name(s) + ") must be positive");
  for (const auto& cls : generator_conjugacy_classes(g))
    for (auto s : cls)
      if (q(s) != q(cls.front()))
        throw ConstructionError("q differs on conjugate generators " + generator_name(cls.front()) +
                                " and " + generator_name(s));
}

// --- elements ---------------------------------------------------------------

HeckeElement HeckeElement::basis(const GroupElement& w, Rational c) {
  HeckeElement h;
  h.add(w, c);
  return h;
}

void HeckeElement::add(const GroupElement& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational HeckeElement::coefficient(const GroupElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement operator-(HeckeElement a, const HeckeElement& b) {
  for (const auto& [w, c] : b.terms_) a.add(w, -c);
  return a;
}

HeckeElement operator*(const Rational& c, const HeckeElement& h) {
  HeckeElement out;
  for (const auto& [w, v] : h.terms_) out.add(w, c * v);
  return out;
}

// --- algebra ----------------------------------------------------------------

HeckeAlgebra::HeckeAlgebra(const QuasiCoxeterGroup& g, QParams q) : g_(g), q_(std::move(q)) {
  if (!g.normalizes_affine_group())
    throw DomainError("the lattice does not normalize the affine Weyl group");
  check_q_params(g_, q_);
}

HeckeElement HeckeAlgebra::mul_generator_left(std::size_t s, const HeckeElement& h) const {
  const GroupElement& gs = g_.generator(s);
  const Rational q(q_(s));
  HeckeElement out;
  for (const auto& [w, c] : h.terms()) {
    GroupElement sw = g_.compose(gs, w);
    if (g_.length(sw) > g_.length(w)) {
      out.add(sw, c);
    } else {
      out.add(w, (q - 1) * c);
      out.add(sw, q * c);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_generator_right(const HeckeElement& h, std::size_t s) const {
  const GroupElement& gs = g_.generator(s);
  const Rational q(q_(s));
  HeckeElement out;
  for (const auto& [w, c] : h.terms()) {
    GroupElement ws = g_.compose(w, gs);
    if (g_.length(ws) > g_.length(w)) {
      out.add(ws, c);
    } else {
      out.add(w, (q - 1) * c);
      out.add(ws, q * c);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_omega(const HeckeElement& h, const OmegaElement& c, Side side) const {
  const GroupElement tau = g_.omega_section(c);
  HeckeElement out;
  for (const auto& [w, v] : h.terms())
    out.add(side == Side::Left ? g_.compose(tau, w) : g_.compose(w, tau), v);
  return out;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [w, c] : b.terms()) {
    ElementWord dec = g_.reduced_decomposition(w);
    HeckeElement part = a;
    for (auto s : dec.word) part = mul_generator_right(part, s);
    out += c * mul_omega(part, dec.omega, Side::Right);
  }
  return out;
}

bool HeckeAlgebra::is_central(const HeckeElement& h) const {
  for (std::size_t s = 0; s < g_.num_generators(); ++s)
    if (!(mul_generator_left(s, h) == mul_generator_right(h, s))) return false;
  for (const auto& c : g_.omega_generators())
    if (!(mul_omega(h, c, Side::Left) == mul_omega(h, c, Side::Right))) return false;
  return true;
}

// --- center -----------------------------------------------------------------

CentralitySystem build_centrality_system(const HeckeAlgebra& H, std::size_t L, const OmegaElement& tau) {
  const QuasiCoxeterGroup& g = H.group();
  g.validate_class(tau);
  CentralitySystem sys;
  sys.length_bound = L;
  sys.tau = tau;
  sys.variables = g.enumerate_ball(L, tau);
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index;
  for (std::size_t i = 0; i < sys.variables.size(); ++i) index.emplace(sys.variables[i], i);

  auto emit = [&](const std::vector<std::pair<GroupElement, std::int64_t>>& terms) {
    std::map<std::size_t, std::int64_t> row;
    for (const auto& [x, c] : terms) {
      auto it = index.find(x);
      if (it == index.end()) continue;  // outside the truncation: h_x = 0
      row[it->second] += c;
    }
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    if (!row.empty()) sys.equations.push_back(std::move(row));
  };

  // Coefficient of T_x in T_s h minus that in h T_s.
  for (const auto& x : g.enumerate_ball(L + 1, tau)) {
    const std::size_t lx = g.length(x);
    for (std::size_t s = 0; s < g.num_generators(); ++s) {
      const std::int64_t q = H.q()(s);
      GroupElement sx = g.compose(g.generator(s), x);
      GroupElement xs = g.compose(x, g.generator(s));
      std::vector<std::pair<GroupElement, std::int64_t>> terms;
      if (g.length(sx) > lx) {
        terms.emplace_back(sx, q);
      } else {
        terms.emplace_back(sx, 1);
        terms.emplace_back(x, q - 1);
      }
      if (g.length(xs) > lx) {
        terms.emplace_back(xs, -q);
      } else {
        terms.emplace_back(xs, -1);
        terms.emplace_back(x, -(q - 1));
      }
      emit(terms);
    }
  }
  // h_{x sigma} = h_{sigma x} for each Omega generator section sigma.
  for (const auto& c : g.omega_generators()) {
    GroupElement sigma = g.omega_section(c);
    OmegaElement source = g.omega_add(tau, omega_negate(g, c));
    for (const auto& x : g.enumerate_ball(L, source))
      emit({{g.compose(x, sigma), 1}, {g.compose(sigma, x), -1}});
  }
  return sys;
}

CenterResult center_basis(const HeckeAlgebra& H, std::size_t L, const OmegaElement& tau) {
  CenterResult out{build_centrality_system(H, L, tau), {}};
  const auto& sys = out.system;
  const std::size_t n = sys.variables.size();
  linalg::Matrix<linalg::BigInt> m(sys.equations.size(), n);
  for (std::size_t r = 0; r < sys.equations.size(); ++r)
    for (const auto& [col, c] : sys.equations[r]) m(r, col) = c;
  for (const auto& v : linalg::integer_nullspace(m)) {
    HeckeElement z;
    for (std::size_t j = 0; j < n; ++j)
      if (v[j] != 0) z.add(sys.variables[j], Rational(to_int64(v[j])));
    QCOX_ENSURE(H.is_central(z), "nullspace vector of the centrality system is not central");
    out.basis.push_back(std::move(z));
  }
  return out;
}

std::size_t center_dimension(const HeckeAlgebra& H, std::size_t L, const OmegaElement& tau) {
  return center_basis(H, L, tau).dimension();
}

OrbitCount translation_orbit_count(const QuasiCoxeterGroup& g, std::size_t L, const OmegaElement& tau) {
  g.validate_class(tau);
  const auto finite = g.root_system().enumerate_finite_weyl();
  const GroupElement tor = g.torsion_element(tau.torsion_class);
  OrbitCount out;
  for (const auto& lambda : dominant_translations(g, L)) {
    GroupElement t = g.compose(g.translation(lambda), tor);
    if (!(g.omega_projection(t) == tau)) continue;
    TranslationOrbit orbit{lambda, 0, g.length(t)};
    std::set<Point> images;
    for (const auto& u : finite) images.insert(u.apply(lambda));
    for (const auto& mu : images)
      QCOX_ENSURE(g.length(g.translation(mu)) == orbit.length, "length is not constant on an orbit");
    orbit.size = images.size();
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

BoundReport check_dimension_bound(const HeckeAlgebra& H, std::size_t L, const OmegaElement& tau) {
  const QuasiCoxeterGroup& g = H.group();
  CenterResult center = center_basis(H, L, tau);
  for (const auto& z : center.basis)
    for (const auto& [w, c] : z.terms())
      QCOX_ENSURE(g.is_translation(w) || g.length(w) < L,
                  "central element supported on a non-translation of maximal length");
  BoundReport r;
  r.length_bound = L;
  r.tau = tau;
  r.q = H.q()(0);
  r.dimension = center.dimension();
  r.orbit_count = translation_orbit_count(g, L, tau).count();
  return r;
}

}  // namespace qcox
