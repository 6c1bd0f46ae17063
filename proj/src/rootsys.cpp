#include "qcox/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "qcox/error.hpp"

namespace qcox {

using linalg::IntMatrix;

CartanDatum CartanDatum::parse(const std::string& name) {
  if (name.size() < 2) throw ConstructionError("bad root system type '" + name + "'");
  CartanDatum d;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'A': d.family = Family::A; break;
    case 'B': d.family = Family::B; break;
    case 'C': d.family = Family::C; break;
    case 'D': d.family = Family::D; break;
    case 'F': d.family = Family::F; break;
    case 'G': d.family = Family::G; break;
    default: throw ConstructionError("unsupported root system family in '" + name + "'");
  }
  try {
    std::size_t used = 0;
    d.rank = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ConstructionError("bad rank in root system type '" + name + "'");
  }
  d.validate();
  return d;
}

std::string CartanDatum::name() const {
  static const char letters[] = {'A', 'B', 'C', 'D', 'F', 'G'};
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

void CartanDatum::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw ConstructionError("inadmissible root system type " + name());
}

IntMatrix cartan_matrix(const CartanDatum& d) {
  d.validate();
  const std::size_t n = static_cast<std::size_t>(d.rank);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) {  // 1-based, simply laced
    a(i - 1, j - 1) = -1;
    a(j - 1, i - 1) = -1;
  };
  switch (d.family) {
    case Family::A:
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // <alpha_n^vee, alpha_{n-1}> with alpha_n short
      break;
    case Family::C:
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // <alpha_{n-1}^vee, alpha_n> with alpha_n long
      break;
    case Family::D:
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::F:
      link(1, 2);
      link(3, 4);
      a(1, 2) = -1;
      a(2, 1) = -2;
      break;
    case Family::G:
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
  }
  return a;
}

// ---------------------------------------------------------------------------
// FiniteWeylElement

FiniteWeylElement FiniteWeylElement::identity(std::size_t rank) {
  return {IntMatrix::identity(rank), IntMatrix::identity(rank)};
}

Point FiniteWeylElement::apply(const Point& x) const {
  const std::size_t n = rank();
  Point y(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (matrix_(i, j) != 0 && x[j] != 0) y[i] += x[j] * matrix_(i, j);
  return y;
}

IntVector FiniteWeylElement::apply(const IntVector& x) const {
  const std::size_t n = rank();
  IntVector y(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += matrix_(i, j) * x[j];
  return y;
}

IntVector FiniteWeylElement::act_on_root(const IntVector& c) const {
  const std::size_t n = rank();
  IntVector out(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out[j] += c[i] * inverse_(i, j);
  return out;
}

bool FiniteWeylElement::is_identity() const { return matrix_ == IntMatrix::identity(rank()); }

std::int64_t FiniteWeylElement::determinant() const {
  linalg::RationalMatrix m(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) = Rational(matrix_(i, j));
  Rational det(1);
  for (std::size_t c = 0; c < rank(); ++c) {
    std::size_t p = c;
    while (p < rank() && m(p, c) == 0) ++p;
    if (p == rank()) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < rank(); ++i) {
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < rank(); ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det.numerator();
}

FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b) {
  return {linalg::multiply(a.matrix_, b.matrix_), linalg::multiply(b.inverse_, a.inverse_)};
}

bool operator<(const FiniteWeylElement& a, const FiniteWeylElement& b) {
  const auto& x = a.matrix_;
  const auto& y = b.matrix_;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != y(i, j)) return x(i, j) < y(i, j);
  return false;
}

std::size_t FiniteWeylElement::hash() const {
  std::size_t h = 0;
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      hash_combine(h, std::hash<std::int64_t>{}(matrix_(i, j)));
  return h;
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

bool is_positive(const IntVector& simple_coords) {
  bool nonzero = false;
  for (auto c : simple_coords) {
    if (c < 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

}  // namespace

RootSystem::RootSystem(CartanDatum datum) : datum_(datum), cartan_(qcox::cartan_matrix(datum)) {
  const std::size_t n = rank();

  auto covector_of = [&](const IntVector& c) {
    IntVector cov(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) cov[j] += c[i] * cartan_(j, i);
    return cov;
  };

  // Closure of the simple roots under simple reflections, tracking coroots.
  std::map<IntVector, Root> found;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Root r;
    r.simple_coords.assign(n, 0);
    r.simple_coords[i] = 1;
    r.coroot.assign(n, 0);
    r.coroot[i] = 1;
    r.covector = covector_of(r.simple_coords);
    r.height = 1;
    queue.push_back(r.simple_coords);
    found.emplace(r.simple_coords, r);
  }
  while (!queue.empty()) {
    Root beta = found.at(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      // s_i(beta) = beta - <alpha_i^vee, beta> alpha_i
      IntVector c = beta.simple_coords;
      c[i] -= beta.covector[i];
      if (!is_positive(c) || found.count(c)) continue;
      // s_i(beta^vee) = beta^vee - <beta^vee, alpha_i> alpha_i^vee
      std::int64_t p = 0;
      for (std::size_t j = 0; j < n; ++j) p += beta.coroot[j] * cartan_(j, i);
      Root r;
      r.simple_coords = c;
      r.coroot = beta.coroot;
      r.coroot[i] -= p;
      r.covector = covector_of(c);
      r.height = 0;
      for (auto v : c) r.height += static_cast<int>(v);
      found.emplace(c, r);
      queue.push_back(c);
    }
  }
  for (auto& [key, r] : found) roots_.push_back(r);
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple_coords > b.simple_coords;  // alpha_1 before alpha_2 at height 1
  });
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    index_.emplace(roots_[k].covector, k);
    QCOX_ENSURE(pair(to_point(roots_[k].coroot), roots_[k].covector) == 2,
                "coroot does not pair to 2 with its root");
  }
  highest_ = roots_.size() - 1;
  QCOX_ENSURE(roots_.size() < 2 || roots_[highest_].height > roots_[highest_ - 1].height,
              "highest root is not unique");

  // omega_i solves <omega_i, alpha_j> = delta_ij, i.e. rows of A^{-1} (as W A = I).
  linalg::RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(cartan_(i, j));
  linalg::RationalMatrix inv = linalg::inverse(a);
  rho_check_ = zero_point(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = inv(i, k);
    coweights_.push_back(w);
    rho_check_ = rho_check_ + w;
  }
  interior_ = Rational(1, coxeter_number()) * rho_check_;
}

const Root& RootSystem::simple_root(std::size_t i) const {
  if (i < 1 || i > rank()) throw PreconditionError("simple root index out of range");
  return roots_[i - 1];
}

std::optional<RootRef> RootSystem::find_root(const IntVector& covector) const {
  auto it = index_.find(covector);
  if (it != index_.end()) return RootRef{it->second, 1};
  IntVector neg = covector;
  for (auto& v : neg) v = -v;
  it = index_.find(neg);
  if (it != index_.end()) return RootRef{it->second, -1};
  return std::nullopt;
}

Rational RootSystem::pairing(const Point& x, const IntVector& root_covector) const {
  if (x.size() != rank() || root_covector.size() != rank())
    throw PreconditionError("pairing: dimension mismatch");
  return pair(x, root_covector);
}

FiniteWeylElement RootSystem::reflection(std::size_t k) const {
  if (k >= roots_.size()) throw PreconditionError("root index out of range");
  const Root& r = roots_[k];
  const std::size_t n = rank();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a, b) -= r.coroot[a] * r.covector[b];
  return {m, m};
}

FiniteWeylElement RootSystem::simple_reflection(std::size_t i) const {
  if (i < 1 || i > rank()) throw PreconditionError("simple reflection index out of range");
  return reflection(i - 1);
}

std::size_t RootSystem::weyl_length(const FiniteWeylElement& u) const {
  std::size_t len = 0;
  for (const Root& r : roots_) {
    auto ref = find_root(u.act_on_root(r.covector));
    QCOX_ENSURE(ref.has_value(), "Weyl element does not permute the roots");
    if (ref->sign < 0) ++len;
  }
  return len;
}

std::vector<std::size_t> RootSystem::reduced_word(const FiniteWeylElement& u) const {
  std::vector<std::size_t> word;
  FiniteWeylElement cur = u;
  while (!cur.is_identity()) {
    bool moved = false;
    for (std::size_t i = 1; i <= rank(); ++i) {
      auto ref = find_root(cur.act_on_root(simple_root(i).covector));
      QCOX_ENSURE(ref.has_value(), "Weyl element does not permute the roots");
      if (ref->sign < 0) {  // right descent
        cur = cur * simple_reflection(i);
        word.push_back(i);
        moved = true;
        break;
      }
    }
    QCOX_ENSURE(moved, "non-identity Weyl element without a descent");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<FiniteWeylElement> RootSystem::enumerate_finite_weyl(std::size_t cap) const {
  std::vector<FiniteWeylElement> out{FiniteWeylElement::identity(rank())};
  std::set<FiniteWeylElement> seen{out.front()};
  std::vector<FiniteWeylElement> gens;
  for (std::size_t i = 1; i <= rank(); ++i) gens.push_back(simple_reflection(i));
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      FiniteWeylElement next = out[head] * g;
      if (seen.insert(next).second) {
        if (out.size() >= cap)
          throw ResourceError("finite Weyl group of " + datum_.name() + " exceeds the cap of " +
                              std::to_string(cap) + " elements");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace qcox
