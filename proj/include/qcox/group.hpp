#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "qcox/linalg.hpp"
#include "qcox/rational.hpp"
#include "qcox/rootsys.hpp"

namespace qcox {

/// The translation lattice Lambda = Lambda_free x T. Lambda_free is spanned by
/// rational points of the apartment; T is a finite abelian group acting
/// trivially on the apartment and fixed by the finite Weyl group.
struct LatticeSpec {
  std::vector<Point> free_generators;
  std::vector<std::int64_t> torsion_orders;

  /// Lambda_free = coroot lattice.
  static LatticeSpec adjoint(const RootSystem& rs);
  /// Lambda_free = coweight lattice (spanned by the fundamental coweights).
  static LatticeSpec coweight(const RootSystem& rs);
};

/// w = t_lambda * tor * u, acting on the apartment by x -> u(x) + lambda.
struct GroupElement {
  Point lambda;
  std::vector<std::int64_t> torsion;
  FiniteWeylElement finite;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.lambda == b.lambda && a.torsion == b.torsion && a.finite == b.finite;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b);
  std::size_t hash() const;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

using ElementSet = std::unordered_set<GroupElement, GroupElementHash>;

/// Class in Omega = Lambda / Q^vee. The free part lists residues modulo the
/// nontrivial Smith invariants of Lambda_free / Q^vee, in order.
struct OmegaElement {
  std::vector<std::int64_t> free_class;
  std::vector<std::int64_t> torsion_class;

  friend bool operator==(const OmegaElement&, const OmegaElement&) = default;
  friend auto operator<=>(const OmegaElement&, const OmegaElement&) = default;
};

std::string to_string(const OmegaElement& c);

/// Reduced decomposition w = s_{word[0]} ... s_{word[k-1]} * section.
struct ElementWord {
  std::vector<std::size_t> word;  // generator indices, 0 = s_aff
  OmegaElement omega;
};

/// The quasi-Coxeter group W = Lambda x| W_0 = W_aff x| Omega.
///
/// Generators of W_aff are indexed 0..rank: index 0 is the affine reflection
/// across {<x, theta> = 1}, index i >= 1 the simple reflection s_i.
class QuasiCoxeterGroup {
 public:
  /// Throws ConstructionError if Lambda_free is not a full-rank lattice
  /// containing the coroot lattice and stable under the finite Weyl group.
  QuasiCoxeterGroup(RootSystem rs, LatticeSpec spec);

  const RootSystem& root_system() const { return rs_; }
  const LatticeSpec& lattice() const { return spec_; }
  std::size_t rank() const { return rs_.rank(); }
  std::size_t num_generators() const { return rs_.rank() + 1; }

  GroupElement identity() const;
  const GroupElement& generator(std::size_t i) const;
  const std::vector<GroupElement>& generators() const { return generators_; }

  /// Translation by lambda; throws PreconditionError unless lambda is in Lambda_free.
  GroupElement translation(const Point& lambda) const;
  GroupElement torsion_element(const std::vector<std::int64_t>& residues) const;
  GroupElement finite_element(const FiniteWeylElement& u) const;
  /// The affine reflection across {<x, root> = level}.
  GroupElement affine_reflection(std::size_t root_index, std::int64_t level) const;

  GroupElement compose(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  /// s * w * s^{-1}.
  GroupElement conjugate(const GroupElement& s, const GroupElement& w) const;

  Point act_on_point(const GroupElement& w, const Point& x) const;

  /// Number of affine root hyperplanes separating the base alcove from its
  /// image, read off from the image of the interior point.
  std::size_t length(const GroupElement& w) const;
  /// Closed form over positive roots of the translation/finite factorization.
  std::size_t length_formula(const GroupElement& w) const;

  bool is_translation(const GroupElement& w) const { return w.finite.is_identity(); }
  bool lattice_contains(const Point& lambda) const;

  OmegaElement omega_projection(const GroupElement& w) const;
  OmegaElement omega_identity() const;
  OmegaElement omega_add(const OmegaElement& a, const OmegaElement& b) const;
  const std::vector<std::int64_t>& omega_invariants() const { return invariants_; }
  std::int64_t omega_order() const;
  std::vector<OmegaElement> omega_classes() const;
  /// One generator per cyclic factor of Omega.
  std::vector<OmegaElement> omega_generators() const;
  /// Greedy-descent minimum of the W_aff coset for the class. Throws
  /// DomainError when the lattice is not inside the coweight lattice, where
  /// W_aff is not normal and the class map is not multiplicative.
  GroupElement omega_section(const OmegaElement& c) const;
  /// t_lambda * tor for a lambda in the class; not length-minimal.
  GroupElement omega_representative(const OmegaElement& c) const;
  /// Left-multiplies by generators while that lowers the length.
  GroupElement descend(GroupElement g) const;
  /// Lambda_free lies in the coweight lattice (W_0 acts trivially on Omega).
  bool normalizes_affine_group() const { return normalizes_; }
  /// Throws PreconditionError if residues are out of range.
  void validate_class(const OmegaElement& c) const;

  ElementWord reduced_decomposition(const GroupElement& w) const;
  GroupElement from_word(const std::vector<std::size_t>& word, const OmegaElement& omega) const;

  /// Product of `word_length` uniform generators, then one uniform Omega section.
  GroupElement random_element(std::size_t word_length, std::uint64_t seed) const;

  /// Every element with length <= max_length in the given class (or in all
  /// classes), sorted by (length, element). Throws ResourceError past `cap`.
  std::vector<GroupElement> enumerate_ball(std::size_t max_length,
                                           std::optional<OmegaElement> omega = std::nullopt,
                                           std::size_t cap = 2'000'000) const;

  /// Common denominator of Lambda_free in simple-coroot coordinates.
  std::int64_t denominator() const { return denominator_; }
  const std::vector<Point>& lattice_basis() const { return basis_; }

 private:
  std::optional<std::vector<std::int64_t>> lattice_coords(const Point& lambda) const;
  void check_context(const GroupElement& w) const;

  RootSystem rs_;
  LatticeSpec spec_;
  std::int64_t denominator_ = 1;
  std::vector<Point> basis_;            // HNF basis of Lambda_free
  linalg::RationalMatrix basis_inv_;    // maps lambda to lattice coordinates
  linalg::IntMatrix smith_right_;       // V of U C V = diag
  linalg::IntMatrix smith_right_inv_;
  std::vector<std::size_t> nontrivial_; // Smith positions with d_i > 1
  std::vector<std::int64_t> invariants_;
  std::vector<GroupElement> generators_;
  bool normalizes_ = true;
};

/// Per-hypothesis outcome of the quasi-Coxeter checks.
struct HypothesisResult {
  std::string name;
  bool passed = true;
  std::string witness;  // empty on success
};

struct ValidationReport {
  std::vector<HypothesisResult> results;
  std::int64_t omega_order = 0;
  bool passed() const;
  std::string to_text() const;
};

struct ValidationOptions {
  std::size_t exhaustive_length = 8;
  std::size_t random_samples = 64;
  std::size_t random_word_length = 20;
  std::uint64_t seed = 1;
};

/// Structural lattice errors throw ConstructionError naming the offending
/// generator; hypothesis failures are reported with a witness.
ValidationReport validate_qcg(const RootSystem& rs, const LatticeSpec& spec,
                              const ValidationOptions& opts = {});

/// Dominant translations lambda in Lambda_free with length(t_lambda) <= bound.
std::vector<Point> dominant_translations(const QuasiCoxeterGroup& g, std::size_t bound);
/// All translations lambda in Lambda_free with length(t_lambda) <= bound.
std::vector<Point> translations_up_to(const QuasiCoxeterGroup& g, std::size_t bound);

std::string generator_name(std::size_t i);

}  // namespace qcox
