#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcox/group.hpp"
#include "qcox/rational.hpp"

namespace qcox {

/// Positive integer parameter per generator (index 0 = s_aff).
struct QParams {
  std::vector<std::int64_t> values;

  static QParams uniform(const QuasiCoxeterGroup& g, std::int64_t q);
  std::int64_t operator()(std::size_t s) const { return values.at(s); }
};

/// Classes of generators conjugate in the quasi-Coxeter group: joined by a
/// braid relation of odd order, or permuted by an Omega section.
std::vector<std::vector<std::size_t>> generator_conjugacy_classes(const QuasiCoxeterGroup& g);

/// Throws ConstructionError unless q is positive and constant on each class.
void check_q_params(const QuasiCoxeterGroup& g, const QParams& q);

/// Finitely supported combination of basis elements T_w; zeros are dropped.
class HeckeElement {
 public:
  HeckeElement() = default;
  static HeckeElement basis(const GroupElement& w, Rational c = Rational(1));

  void add(const GroupElement& w, const Rational& c);
  Rational coefficient(const GroupElement& w) const;
  const std::map<GroupElement, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  HeckeElement& operator+=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b);
  friend HeckeElement operator*(const Rational& c, const HeckeElement& h);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  std::map<GroupElement, Rational> terms_;
};

enum class Side { Left, Right };

/// The Iwahori-Matsumoto algebra of a quasi-Coxeter group at integer parameters.
class HeckeAlgebra {
 public:
  /// Checks the parameters with check_q_params.
  HeckeAlgebra(const QuasiCoxeterGroup& g, QParams q);

  const QuasiCoxeterGroup& group() const { return g_; }
  const QParams& q() const { return q_; }

  HeckeElement one() const { return HeckeElement::basis(g_.identity()); }
  HeckeElement mul_generator_left(std::size_t s, const HeckeElement& h) const;
  HeckeElement mul_generator_right(const HeckeElement& h, std::size_t s) const;
  /// Multiplication by T_tau for the length-0 section tau of the class.
  HeckeElement mul_omega(const HeckeElement& h, const OmegaElement& c, Side side) const;
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;
  /// Commutes with every T_s and with T_tau for each Omega generator.
  bool is_central(const HeckeElement& h) const;

 private:
  const QuasiCoxeterGroup& g_;
  QParams q_;
};

/// Sparse integer rows over the variables h_x, x in {l(x) <= L, Omega(x) = tau}.
struct CentralitySystem {
  std::vector<GroupElement> variables;  // sorted by (length, element)
  std::vector<std::map<std::size_t, std::int64_t>> equations;
  std::size_t length_bound = 0;
  OmegaElement tau;
};

/// Equations from l(x) <= L + 1 only: for longer x every term has length
/// >= l(x) - 1 > L, so all its variables vanish. Throws DomainError if the
/// lattice does not normalize the affine Weyl group.
CentralitySystem build_centrality_system(const HeckeAlgebra& H, std::size_t L, const OmegaElement& tau);

struct CenterResult {
  CentralitySystem system;
  std::vector<HeckeElement> basis;  // every element asserted central
  std::size_t dimension() const { return basis.size(); }
};

/// Exact nullspace by fraction-free elimination.
CenterResult center_basis(const HeckeAlgebra& H, std::size_t L, const OmegaElement& tau);
std::size_t center_dimension(const HeckeAlgebra& H, std::size_t L, const OmegaElement& tau);

struct TranslationOrbit {
  Point dominant;          // dominant representative of the free part
  std::size_t size = 0;    // number of translations in the orbit
  std::size_t length = 0;  // common length (asserted constant)
};

struct OrbitCount {
  std::vector<TranslationOrbit> orbits;
  std::size_t count() const { return orbits.size(); }
};

/// Finite-Weyl orbits of translations t with l(t) <= L and Omega(t) = tau.
/// Torsion is fixed by the finite Weyl group, so orbits are indexed by the
/// dominant free part with torsion equal to tau's torsion residues.
OrbitCount translation_orbit_count(const QuasiCoxeterGroup& g, std::size_t L, const OmegaElement& tau);

struct BoundReport {
  std::size_t length_bound = 0;
  OmegaElement tau;
  std::int64_t q = 0;
  std::size_t dimension = 0;
  std::size_t orbit_count = 0;
  bool passed() const { return dimension <= orbit_count; }
  bool tight() const { return dimension == orbit_count; }
};

/// Computes dim Z_{L,tau} and N_{L,tau}. Throws InvariantError if a basis
/// element is supported on a non-translation of length exactly L.
BoundReport check_dimension_bound(const HeckeAlgebra& H, std::size_t L, const OmegaElement& tau);

}  // namespace qcox
