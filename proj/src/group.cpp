#include "qcox/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

#include "qcox/error.hpp"

namespace qcox {

using linalg::IntMatrix;
using linalg::RationalMatrix;

LatticeSpec LatticeSpec::adjoint(const RootSystem& rs) {
  LatticeSpec s;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    Point e = zero_point(rs.rank());
    e[i] = 1;
    s.free_generators.push_back(e);
  }
  return s;
}

LatticeSpec LatticeSpec::coweight(const RootSystem& rs) {
  LatticeSpec s;
  s.free_generators = rs.fundamental_coweights();
  return s;
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  if (a.lambda != b.lambda) return a.lambda < b.lambda;
  if (a.torsion != b.torsion) return a.torsion < b.torsion;
  return a.finite < b.finite;
}

std::size_t GroupElement::hash() const {
  std::size_t h = finite.hash();
  for (const auto& q : lambda) hash_combine(h, hash_value(q));
  for (auto t : torsion) hash_combine(h, std::hash<std::int64_t>{}(t));
  return h;
}

std::string to_string(const OmegaElement& c) {
  std::string out = "omega(";
  bool first = true;
  for (auto v : c.free_class) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  for (auto v : c.torsion_class) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

std::string generator_name(std::size_t i) { return "s" + std::to_string(i); }

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

IntMatrix to_int_matrix(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      QCOX_ENSURE(is_integer(m(i, j)), "expected an integer matrix");
      out(i, j) = m(i, j).numerator();
    }
  return out;
}

RationalMatrix to_rational_matrix(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

QuasiCoxeterGroup::QuasiCoxeterGroup(RootSystem rs, LatticeSpec spec)
    : rs_(std::move(rs)), spec_(std::move(spec)) {
  const std::size_t n = rank();
  if (spec_.free_generators.size() < n)
    throw ConstructionError("lattice needs at least " + std::to_string(n) + " generators, got " +
                            std::to_string(spec_.free_generators.size()));
  for (std::size_t k = 0; k < spec_.free_generators.size(); ++k)
    if (spec_.free_generators[k].size() != n)
      throw ConstructionError("lattice generator " + std::to_string(k + 1) + " has dimension " +
                              std::to_string(spec_.free_generators[k].size()) + ", expected " +
                              std::to_string(n));
  for (std::size_t j = 0; j < spec_.torsion_orders.size(); ++j)
    if (spec_.torsion_orders[j] <= 0)
      throw ConstructionError("torsion order " + std::to_string(j + 1) + " is not positive");

  for (const auto& g : spec_.free_generators)
    for (const auto& q : g) denominator_ = std::lcm(denominator_, q.denominator());

  IntMatrix scaled(spec_.free_generators.size(), n);
  for (std::size_t k = 0; k < spec_.free_generators.size(); ++k)
    for (std::size_t j = 0; j < n; ++j)
      scaled(k, j) = (spec_.free_generators[k][j] * denominator_).numerator();
  IntMatrix hnf = linalg::hermite_normal_form(scaled);
  if (hnf.rows() != n)
    throw ConstructionError("lattice generators span a sublattice of rank " +
                            std::to_string(hnf.rows()) + " < " + std::to_string(n));
  RationalMatrix basis(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Point b(n);
    for (std::size_t j = 0; j < n; ++j) {
      b[j] = Rational(hnf(k, j), denominator_);
      basis(k, j) = b[j];
    }
    basis_.push_back(b);
  }
  basis_inv_ = linalg::inverse(basis);

  for (std::size_t i = 0; i < n; ++i) {
    Point e = zero_point(n);
    e[i] = 1;
    if (!lattice_coords(e))
      throw ConstructionError("lattice does not contain the simple coroot alpha_" +
                              std::to_string(i + 1) + "^vee");
  }
  for (std::size_t k = 0; k < spec_.free_generators.size(); ++k)
    for (std::size_t i = 1; i <= n; ++i)
      if (!lattice_coords(rs_.simple_reflection(i).apply(spec_.free_generators[k])))
        throw ConstructionError("lattice is not stable under s_" + std::to_string(i) +
                                ": generator " + std::to_string(k + 1) + " " +
                                to_string(spec_.free_generators[k]) + " maps outside");

  // Rows of C are the lattice coordinates of the simple coroots; Lambda/Q^vee = Z^n / rowspace(C).
  IntMatrix c = to_int_matrix(basis_inv_);
  linalg::SmithForm snf = linalg::smith_normal_form(c);
  smith_right_ = snf.right;
  smith_right_inv_ = to_int_matrix(linalg::inverse(to_rational_matrix(snf.right)));
  for (std::size_t i = 0; i < n; ++i)
    if (snf.diagonal[i] > 1) {
      nontrivial_.push_back(i);
      invariants_.push_back(snf.diagonal[i]);
    }

  for (const auto& b : basis_)
    for (std::size_t i = 1; i <= n; ++i)
      normalizes_ = normalizes_ && is_integer(pair(b, rs_.simple_root(i).covector));

  for (std::size_t i = 0; i <= n; ++i)
    generators_.push_back(i == 0 ? affine_reflection(rs_.highest_root_index(), 1)
                                 : finite_element(rs_.simple_reflection(i)));
}

// ---------------------------------------------------------------------------
// Elements

GroupElement QuasiCoxeterGroup::identity() const {
  return {zero_point(rank()), std::vector<std::int64_t>(spec_.torsion_orders.size(), 0),
          FiniteWeylElement::identity(rank())};
}

const GroupElement& QuasiCoxeterGroup::generator(std::size_t i) const {
  if (i >= generators_.size()) throw PreconditionError("generator index out of range");
  return generators_[i];
}

GroupElement QuasiCoxeterGroup::translation(const Point& lambda) const {
  if (lambda.size() != rank()) throw PreconditionError("translation: dimension mismatch");
  if (!lattice_contains(lambda))
    throw PreconditionError("translation vector " + to_string(lambda) + " is not in the lattice");
  GroupElement g = identity();
  g.lambda = lambda;
  return g;
}

GroupElement QuasiCoxeterGroup::torsion_element(const std::vector<std::int64_t>& residues) const {
  if (residues.size() != spec_.torsion_orders.size())
    throw PreconditionError("torsion element: expected " +
                            std::to_string(spec_.torsion_orders.size()) + " residues");
  GroupElement g = identity();
  for (std::size_t j = 0; j < residues.size(); ++j)
    g.torsion[j] = mod(residues[j], spec_.torsion_orders[j]);
  return g;
}

GroupElement QuasiCoxeterGroup::finite_element(const FiniteWeylElement& u) const {
  if (u.rank() != rank()) throw PreconditionError("finite element: rank mismatch");
  GroupElement g = identity();
  g.finite = u;
  return g;
}

GroupElement QuasiCoxeterGroup::affine_reflection(std::size_t root_index,
                                                  std::int64_t level) const {
  const Root& r = rs_.positive_roots().at(root_index);
  GroupElement g = identity();
  g.finite = rs_.reflection(root_index);
  g.lambda = Rational(level) * to_point(r.coroot);
  return g;
}

void QuasiCoxeterGroup::check_context(const GroupElement& w) const {
  if (w.lambda.size() != rank() || w.finite.rank() != rank() ||
      w.torsion.size() != spec_.torsion_orders.size())
    throw PreconditionError("group element belongs to a different group context");
}

GroupElement QuasiCoxeterGroup::compose(const GroupElement& a, const GroupElement& b) const {
  check_context(a);
  check_context(b);
  GroupElement c;
  c.lambda = a.lambda + a.finite.apply(b.lambda);
  c.torsion.resize(a.torsion.size());
  for (std::size_t j = 0; j < a.torsion.size(); ++j)
    c.torsion[j] = (a.torsion[j] + b.torsion[j]) % spec_.torsion_orders[j];
  c.finite = a.finite * b.finite;
  return c;
}

GroupElement QuasiCoxeterGroup::inverse(const GroupElement& a) const {
  check_context(a);
  GroupElement c;
  c.finite = a.finite.inverse();
  c.lambda = Rational(-1) * c.finite.apply(a.lambda);
  c.torsion.resize(a.torsion.size());
  for (std::size_t j = 0; j < a.torsion.size(); ++j)
    c.torsion[j] = mod(-a.torsion[j], spec_.torsion_orders[j]);
  return c;
}

GroupElement QuasiCoxeterGroup::conjugate(const GroupElement& s, const GroupElement& w) const {
  return compose(compose(s, w), inverse(s));
}

Point QuasiCoxeterGroup::act_on_point(const GroupElement& w, const Point& x) const {
  check_context(w);
  if (x.size() != rank()) throw PreconditionError("act_on_point: dimension mismatch");
  return w.finite.apply(x) + w.lambda;
}

std::size_t QuasiCoxeterGroup::length(const GroupElement& w) const {
  Point p = act_on_point(w, rs_.base_interior_point());
  std::size_t len = 0;
  for (const Root& r : rs_.positive_roots()) len += static_cast<std::size_t>(std::llabs(floor(pair(p, r.covector))));
  return len;
}

std::size_t QuasiCoxeterGroup::length_formula(const GroupElement& w) const {
  check_context(w);
  FiniteWeylElement uinv = w.finite.inverse();
  Rational total(0);
  for (const Root& r : rs_.positive_roots()) {
    Rational v = pair(w.lambda, r.covector);
    auto ref = rs_.find_root(uinv.act_on_root(r.covector));
    QCOX_ENSURE(ref.has_value(), "finite part does not permute the roots");
    if (ref->sign < 0) v -= 1;
    total += v < 0 ? -v : v;
  }
  if (!is_integer(total))
    throw DomainError("length formula needs translations pairing integrally with roots");
  return static_cast<std::size_t>(total.numerator());
}

std::optional<std::vector<std::int64_t>> QuasiCoxeterGroup::lattice_coords(
    const Point& lambda) const {
  const std::size_t n = rank();
  std::vector<std::int64_t> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational s(0);
    for (std::size_t j = 0; j < n; ++j) s += lambda[j] * basis_inv_(j, k);
    if (!is_integer(s)) return std::nullopt;
    c[k] = s.numerator();
  }
  return c;
}

bool QuasiCoxeterGroup::lattice_contains(const Point& lambda) const {
  if (lambda.size() != rank()) return false;
  return lattice_coords(lambda).has_value();
}

// ---------------------------------------------------------------------------
// Omega

OmegaElement QuasiCoxeterGroup::omega_projection(const GroupElement& w) const {
  check_context(w);
  auto c = lattice_coords(w.lambda);
  if (!c) throw PreconditionError("translation part " + to_string(w.lambda) + " is not in the lattice");
  OmegaElement out;
  for (std::size_t f = 0; f < nontrivial_.size(); ++f) {
    std::size_t i = nontrivial_[f];
    std::int64_t s = 0;
    for (std::size_t k = 0; k < rank(); ++k) s += (*c)[k] * smith_right_(k, i);
    out.free_class.push_back(mod(s, invariants_[f]));
  }
  out.torsion_class = w.torsion;
  return out;
}

OmegaElement QuasiCoxeterGroup::omega_identity() const {
  return {std::vector<std::int64_t>(invariants_.size(), 0),
          std::vector<std::int64_t>(spec_.torsion_orders.size(), 0)};
}

void QuasiCoxeterGroup::validate_class(const OmegaElement& c) const {
  if (c.free_class.size() != invariants_.size() ||
      c.torsion_class.size() != spec_.torsion_orders.size())
    throw PreconditionError("Omega class " + to_string(c) + " has the wrong shape: expected " +
                            std::to_string(invariants_.size()) + " free and " +
                            std::to_string(spec_.torsion_orders.size()) + " torsion residues");
  for (std::size_t f = 0; f < invariants_.size(); ++f)
    if (c.free_class[f] < 0 || c.free_class[f] >= invariants_[f])
      throw PreconditionError("Omega class " + to_string(c) + ": free residue out of range");
  for (std::size_t j = 0; j < spec_.torsion_orders.size(); ++j)
    if (c.torsion_class[j] < 0 || c.torsion_class[j] >= spec_.torsion_orders[j])
      throw PreconditionError("Omega class " + to_string(c) + ": torsion residue out of range");
}

OmegaElement QuasiCoxeterGroup::omega_add(const OmegaElement& a, const OmegaElement& b) const {
  validate_class(a);
  validate_class(b);
  OmegaElement c = a;
  for (std::size_t f = 0; f < invariants_.size(); ++f)
    c.free_class[f] = (a.free_class[f] + b.free_class[f]) % invariants_[f];
  for (std::size_t j = 0; j < spec_.torsion_orders.size(); ++j)
    c.torsion_class[j] = (a.torsion_class[j] + b.torsion_class[j]) % spec_.torsion_orders[j];
  return c;
}

std::int64_t QuasiCoxeterGroup::omega_order() const {
  std::int64_t n = 1;
  for (auto d : invariants_) n *= d;
  for (auto t : spec_.torsion_orders) n *= t;
  return n;
}

std::vector<OmegaElement> QuasiCoxeterGroup::omega_classes() const {
  std::vector<std::int64_t> moduli = invariants_;
  moduli.insert(moduli.end(), spec_.torsion_orders.begin(), spec_.torsion_orders.end());
  std::vector<OmegaElement> out;
  std::vector<std::int64_t> digits(moduli.size(), 0);
  for (;;) {
    OmegaElement c;
    c.free_class.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(invariants_.size()));
    c.torsion_class.assign(digits.begin() + static_cast<std::ptrdiff_t>(invariants_.size()), digits.end());
    out.push_back(std::move(c));
    std::size_t k = moduli.size();
    while (k > 0) {
      --k;
      if (++digits[k] < moduli[k]) break;
      digits[k] = 0;
      if (k == 0) return out;
    }
    if (moduli.empty()) return out;
  }
}

std::vector<OmegaElement> QuasiCoxeterGroup::omega_generators() const {
  std::vector<OmegaElement> out;
  for (std::size_t f = 0; f < invariants_.size(); ++f) {
    OmegaElement c = omega_identity();
    c.free_class[f] = 1;
    out.push_back(c);
  }
  for (std::size_t j = 0; j < spec_.torsion_orders.size(); ++j) {
    if (spec_.torsion_orders[j] == 1) continue;
    OmegaElement c = omega_identity();
    c.torsion_class[j] = 1;
    out.push_back(c);
  }
  return out;
}

GroupElement QuasiCoxeterGroup::omega_representative(const OmegaElement& c) const {
  validate_class(c);
  const std::size_t n = rank();
  std::vector<std::int64_t> target(n, 0);
  for (std::size_t f = 0; f < nontrivial_.size(); ++f) target[nontrivial_[f]] = c.free_class[f];
  // Lattice coordinates x with x^T V = target.
  Point lambda = zero_point(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t xk = 0;
    for (std::size_t i = 0; i < n; ++i) xk += target[i] * smith_right_inv_(i, k);
    lambda = lambda + Rational(xk) * basis_[k];
  }
  return compose(translation(lambda), torsion_element(c.torsion_class));
}

GroupElement QuasiCoxeterGroup::omega_section(const OmegaElement& c) const {
  validate_class(c);
  if (!normalizes_ && c != omega_identity())
    throw DomainError("lattice is not contained in the coweight lattice; Omega has no sections");
  GroupElement g = descend(omega_representative(c));
  QCOX_ENSURE(omega_projection(g) == c, "section left its Omega class");
  return g;
}

GroupElement QuasiCoxeterGroup::descend(GroupElement g) const {
  std::size_t len = length(g);
  while (len > 0) {
    bool moved = false;
    for (const auto& s : generators_) {
      GroupElement h = compose(s, g);
      std::size_t hl = length(h);
      if (hl < len) {
        g = std::move(h);
        len = hl;
        moved = true;
        break;
      }
    }
    QCOX_ENSURE(moved, "positive-length element without a left descent");
  }
  return g;
}

ElementWord QuasiCoxeterGroup::reduced_decomposition(const GroupElement& w) const {
  ElementWord out;
  out.omega = omega_projection(w);
  GroupElement g = compose(w, inverse(omega_section(out.omega)));
  std::size_t len = length(g);
  while (len > 0) {
    bool moved = false;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      GroupElement h = compose(generators_[i], g);
      std::size_t hl = length(h);
      if (hl < len) {
        out.word.push_back(i);
        g = std::move(h);
        len = hl;
        moved = true;
        break;
      }
    }
    QCOX_ENSURE(moved, "positive-length element without a left descent");
  }
  QCOX_ENSURE(g == identity(), "coset representative did not reduce to the identity");
  return out;
}

GroupElement QuasiCoxeterGroup::from_word(const std::vector<std::size_t>& word,
                                          const OmegaElement& omega) const {
  GroupElement g = omega_section(omega);
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = compose(generator(*it), g);
  return g;
}

GroupElement QuasiCoxeterGroup::random_element(std::size_t word_length, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, generators_.size() - 1);
  GroupElement g = identity();
  for (std::size_t k = 0; k < word_length; ++k) g = compose(g, generators_[pick(rng)]);
  auto classes = omega_classes();
  std::uniform_int_distribution<std::size_t> pick_class(0, classes.size() - 1);
  return compose(g, omega_section(classes[pick_class(rng)]));
}

std::vector<GroupElement> QuasiCoxeterGroup::enumerate_ball(std::size_t max_length,
                                                            std::optional<OmegaElement> omega,
                                                            std::size_t cap) const {
  std::vector<OmegaElement> classes;
  if (omega) {
    validate_class(*omega);
    classes.push_back(*omega);
  } else {
    classes = omega_classes();
  }
  std::vector<std::pair<std::size_t, GroupElement>> found;
  ElementSet seen;
  for (const auto& c : classes) {
    GroupElement start = omega_section(c);
    std::deque<std::pair<std::size_t, GroupElement>> queue;
    if (seen.insert(start).second) {
      queue.emplace_back(0, start);
      found.emplace_back(0, start);
    }
    while (!queue.empty()) {
      auto [len, g] = queue.front();
      queue.pop_front();
      if (len >= max_length) continue;
      for (const auto& s : generators_) {
        GroupElement h = compose(s, g);
        std::size_t hl = length(h);
        if (hl != len + 1 || !seen.insert(h).second) continue;
        if (found.size() >= cap)
          throw ResourceError("ball of radius " + std::to_string(max_length) +
                              " exceeds the enumeration cap of " + std::to_string(cap));
        found.emplace_back(hl, h);
        queue.emplace_back(hl, std::move(h));
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<GroupElement> out;
  out.reserve(found.size());
  for (auto& [len, g] : found) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------------------------------
// Translations

namespace {

// Enumerates lattice translations with |<lambda, alpha_i>| <= bound + 1 for
// every simple root; ell(t_lambda) <= bound forces this box.
std::vector<Point> lattice_box(const QuasiCoxeterGroup& g, std::size_t bound) {
  const RootSystem& rs = g.root_system();
  const std::size_t n = rs.rank();
  std::int64_t den = 1;
  for (const auto& b : g.lattice_basis())
    for (std::size_t i = 1; i <= n; ++i)
      den = std::lcm(den, pair(b, rs.simple_root(i).covector).denominator());

  // lambda = A^{-T} p where p_i = <lambda, alpha_i>.
  RationalMatrix at(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at(i, j) = Rational(rs.cartan_matrix()(j, i));
  RationalMatrix at_inv = linalg::inverse(at);

  const std::int64_t reach = den * static_cast<std::int64_t>(bound + 1);
  std::vector<Point> out;
  std::vector<std::int64_t> x(n, -reach);
  for (;;) {
    Point lambda = zero_point(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (x[j] != 0) lambda[i] += at_inv(i, j) * Rational(x[j], den);
    if (g.lattice_contains(lambda)) out.push_back(std::move(lambda));
    std::size_t k = 0;
    while (k < n && ++x[k] > reach) x[k++] = -reach;
    if (k == n) break;
  }
  return out;
}

}  // namespace

std::vector<Point> translations_up_to(const QuasiCoxeterGroup& g, std::size_t bound) {
  std::vector<Point> out;
  for (auto& lambda : lattice_box(g, bound))
    if (g.length(g.translation(lambda)) <= bound) out.push_back(std::move(lambda));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> dominant_translations(const QuasiCoxeterGroup& g, std::size_t bound) {
  const RootSystem& rs = g.root_system();
  std::vector<Point> out;
  for (auto& lambda : translations_up_to(g, bound)) {
    bool dominant = true;
    for (std::size_t i = 1; i <= rs.rank(); ++i)
      dominant = dominant && pair(lambda, rs.simple_root(i).covector) >= 0;
    if (dominant) out.push_back(std::move(lambda));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

bool ValidationReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.name << " " << (r.passed ? "pass" : "FAIL");
    if (!r.witness.empty()) os << "  witness: " << r.witness;
    os << "\n";
  }
  os << "omega_order " << omega_order << "\n";
  os << "result " << (passed() ? "pass" : "FAIL") << "\n";
  return os.str();
}

namespace {

std::string describe(const GroupElement& w) {
  std::string out = "t" + to_string(w.lambda);
  if (!w.torsion.empty()) {
    out += " tor(";
    for (std::size_t j = 0; j < w.torsion.size(); ++j) out += (j ? "," : "") + std::to_string(w.torsion[j]);
    out += ")";
  }
  std::ostringstream m;
  m << " u=[";
  const auto& mat = w.finite.matrix();
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    if (i) m << ";";
    for (std::size_t j = 0; j < mat.cols(); ++j) m << (j ? "," : "") << mat(i, j);
  }
  m << "]";
  return out + m.str();
}

// Vertices of the closure of the base alcove: 0 and omega_i / c_i, theta = sum c_i alpha_i.
std::vector<Point> base_vertices(const RootSystem& rs) {
  std::vector<Point> out{zero_point(rs.rank())};
  const auto& theta = rs.highest_root().simple_coords;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    out.push_back(Rational(1, theta[i]) * rs.fundamental_coweights()[i]);
  std::sort(out.begin(), out.end());
  return out;
}

HypothesisResult check_sections(const QuasiCoxeterGroup& g) {
  const auto vertices = base_vertices(g.root_system());
  for (const auto& c : g.omega_classes()) {
    GroupElement rep = g.omega_representative(c);
    GroupElement tau = g.descend(rep);
    if (!(g.omega_projection(tau) == c))
      return {"QCG1", false,
              to_string(c) + ": greedy descent from " + describe(rep) + " reaches " +
                  describe(tau) + " in class " + to_string(g.omega_projection(tau))};
    std::vector<Point> image;
    for (const auto& v : vertices) image.push_back(g.act_on_point(tau, v));
    std::sort(image.begin(), image.end());
    if (image != vertices)
      return {"QCG1", false,
              to_string(c) + ": length-0 element " + describe(tau) +
                  " does not stabilize the base alcove"};
    for (std::size_t i = 0; i < g.num_generators(); ++i) {
      GroupElement conj = g.conjugate(tau, g.generator(i));
      if (std::find(g.generators().begin(), g.generators().end(), conj) == g.generators().end())
        return {"QCG1", false, to_string(c) + ": conjugating " + generator_name(i) +
                                   " leaves the affine generating set"};
    }
  }
  return {"QCG1", true, ""};
}

// Rebuilds (lambda, u) from the affine action alone and compares.
bool factors_uniquely(const QuasiCoxeterGroup& g, const GroupElement& w) {
  const std::size_t n = g.rank();
  Point origin = g.act_on_point(w, zero_point(n));
  if (origin != w.lambda || !g.lattice_contains(origin)) return false;
  for (std::size_t j = 0; j < n; ++j) {
    Point e = zero_point(n);
    e[j] = 1;
    Point col = g.act_on_point(w, e) - origin;
    for (std::size_t i = 0; i < n; ++i)
      if (col[i] != Rational(w.finite.matrix()(i, j))) return false;
  }
  return g.root_system().find_root(w.finite.act_on_root(g.root_system().simple_root(1).covector))
      .has_value();
}

bool constant_on_orbit(const QuasiCoxeterGroup& g, const Point& lambda,
                       const std::vector<FiniteWeylElement>& weyl, std::string& witness) {
  std::size_t len = g.length(g.translation(lambda));
  for (const auto& u : weyl) {
    Point mu = u.apply(lambda);
    std::size_t other = g.length(g.translation(mu));
    if (other != len) {
      witness = "l(t" + to_string(lambda) + ") = " + std::to_string(len) + " but l(t" +
                to_string(mu) + ") = " + std::to_string(other);
      return false;
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_qcg(const RootSystem& rs, const LatticeSpec& spec,
                              const ValidationOptions& opts) {
  QuasiCoxeterGroup g(rs, spec);
  ValidationReport report;
  report.omega_order = g.omega_order();

  report.results.push_back(check_sections(g));

  HypothesisResult qcg2{"QCG2", true, ""};
  std::vector<GroupElement> sample =
      g.enumerate_ball(std::min<std::size_t>(opts.exhaustive_length, 4), g.omega_identity());
  for (std::size_t k = 0, n = sample.size(); k < n; ++k)
    for (const auto& b : g.lattice_basis()) sample.push_back(g.compose(g.translation(b), sample[k]));
  if (g.normalizes_affine_group())
    for (std::size_t k = 0; k < opts.random_samples; ++k)
      sample.push_back(g.random_element(opts.random_word_length, opts.seed + k));
  for (const auto& w : sample)
    if (!factors_uniquely(g, w)) {
      qcg2 = {"QCG2", false, describe(w)};
      break;
    }
  report.results.push_back(qcg2);

  HypothesisResult qcg3{"QCG3", true, ""};
  auto weyl = rs.enumerate_finite_weyl();
  for (const auto& lambda : translations_up_to(g, opts.exhaustive_length)) {
    std::string witness;
    if (!constant_on_orbit(g, lambda, weyl, witness)) {
      qcg3 = {"QCG3", false, witness};
      break;
    }
  }
  if (qcg3.passed) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::int64_t> coeff(-6, 6);
    for (std::size_t k = 0; k < opts.random_samples && qcg3.passed; ++k) {
      Point lambda = zero_point(rs.rank());
      for (const auto& b : g.lattice_basis()) lambda = lambda + Rational(coeff(rng)) * b;
      std::string witness;
      if (!constant_on_orbit(g, lambda, weyl, witness)) qcg3 = {"QCG3", false, witness};
    }
  }
  report.results.push_back(qcg3);

  // Lambda is a finitely generated abelian group by construction.
  report.results.push_back({"QCG4", true, ""});
  return report;
}

}  // namespace qcox
