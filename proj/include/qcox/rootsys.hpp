#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcox/linalg.hpp"
#include "qcox/rational.hpp"

namespace qcox {

enum class Family { A, B, C, D, F, G };

/// Type of a reduced irreducible root system, e.g. {G, 2}.
struct CartanDatum {
  Family family = Family::A;
  int rank = 1;

  /// Parses names like "A2", "c3", "G2". Throws ConstructionError.
  static CartanDatum parse(const std::string& name);
  std::string name() const;
  /// Throws ConstructionError for inadmissible family/rank pairs.
  void validate() const;

  friend bool operator==(const CartanDatum&, const CartanDatum&) = default;
};

/// Element of the finite Weyl group, as an integer matrix acting on
/// simple-coroot coordinates (column vectors). The inverse is carried along
/// so that the action on roots never needs a matrix inversion.
class FiniteWeylElement {
 public:
  FiniteWeylElement() = default;
  FiniteWeylElement(linalg::IntMatrix matrix, linalg::IntMatrix inverse)
      : matrix_(std::move(matrix)), inverse_(std::move(inverse)) {}

  static FiniteWeylElement identity(std::size_t rank);

  std::size_t rank() const { return matrix_.rows(); }
  const linalg::IntMatrix& matrix() const { return matrix_; }
  const linalg::IntMatrix& inverse_matrix() const { return inverse_; }

  Point apply(const Point& x) const;
  IntVector apply(const IntVector& x) const;
  /// Covector of u(alpha) given the covector of alpha: c -> c * M^{-1}.
  IntVector act_on_root(const IntVector& covector) const;

  FiniteWeylElement inverse() const { return {inverse_, matrix_}; }
  bool is_identity() const;
  std::int64_t determinant() const;

  friend FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b);
  friend bool operator==(const FiniteWeylElement& a, const FiniteWeylElement& b) {
    return a.matrix_ == b.matrix_;
  }
  friend bool operator<(const FiniteWeylElement& a, const FiniteWeylElement& b);
  std::size_t hash() const;

 private:
  linalg::IntMatrix matrix_;
  linalg::IntMatrix inverse_;
};

/// A positive root, stored three ways.
struct Root {
  IntVector simple_coords;  // alpha = sum c_i alpha_i
  IntVector covector;       // (<alpha_j^vee, alpha>)_j, so <x, alpha> = x . covector
  IntVector coroot;         // alpha^vee in simple-coroot coordinates
  int height = 0;
};

/// Which positive root a root covector is, and with which sign.
struct RootRef {
  std::size_t index = 0;
  int sign = 1;
};

/// Reduced irreducible root system in simple-coroot coordinates.
///
/// Simple roots follow the Bourbaki labeling and are 1-based in every public
/// interface (so that index i names the generator s_i; s_0 is the affine
/// reflection). Cartan entries are a_ij = <alpha_i^vee, alpha_j>.
///
///   B_n: alpha_n short      C_n: alpha_n long
///   D_n: alpha_{n-2} is the branch node
///   F_4: alpha_1, alpha_2 long      G_2: alpha_1 short
class RootSystem {
 public:
  static constexpr std::size_t kDefaultWeylCap = 2000;

  explicit RootSystem(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  std::size_t rank() const { return static_cast<std::size_t>(datum_.rank); }
  const linalg::IntMatrix& cartan_matrix() const { return cartan_; }

  /// Positive roots ordered by height, then by simple coordinates; the first
  /// rank() entries are the simple roots in label order.
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& simple_root(std::size_t i) const;  // 1-based
  std::optional<RootRef> find_root(const IntVector& covector) const;

  const Root& highest_root() const { return roots_[highest_]; }
  std::size_t highest_root_index() const { return highest_; }
  /// <rho^vee, theta> + 1.
  std::int64_t coxeter_number() const { return highest_root().height + 1; }

  const std::vector<Point>& fundamental_coweights() const { return coweights_; }
  const Point& rho_check() const { return rho_check_; }
  /// p = rho^vee / (<rho^vee, theta> + 1), interior to the base alcove.
  const Point& base_interior_point() const { return interior_; }

  Rational pairing(const Point& x, const IntVector& root_covector) const;

  FiniteWeylElement simple_reflection(std::size_t i) const;  // 1-based
  FiniteWeylElement reflection(std::size_t root_index) const;

  /// Length of u in the finite Weyl group (number of inverted positive roots).
  std::size_t weyl_length(const FiniteWeylElement& u) const;
  /// A reduced word (1-based simple indices) with u = s_{w[0]} ... s_{w[k-1]}.
  std::vector<std::size_t> reduced_word(const FiniteWeylElement& u) const;

  /// Every element of the finite Weyl group, identity first, in BFS order.
  /// Throws ResourceError if more than `cap` elements are found.
  std::vector<FiniteWeylElement> enumerate_finite_weyl(std::size_t cap = kDefaultWeylCap) const;

 private:
  CartanDatum datum_;
  linalg::IntMatrix cartan_;
  std::vector<Root> roots_;
  std::map<IntVector, std::size_t> index_;
  std::size_t highest_ = 0;
  std::vector<Point> coweights_;
  Point rho_check_;
  Point interior_;
};

/// Standard Cartan matrix for the family, Bourbaki labeling.
linalg::IntMatrix cartan_matrix(const CartanDatum& datum);

}  // namespace qcox
