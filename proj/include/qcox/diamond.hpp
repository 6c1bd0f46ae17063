#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcox/geometry.hpp"
#include "qcox/group.hpp"

namespace qcox {

enum class Phase { Intermediate, Antidominant, DominantShortcut };

std::string to_string(Phase p);

struct TranscriptStep {
  GroupElement element;
  std::size_t length = 0;
  Phase phase = Phase::Intermediate;
  std::optional<std::size_t> conjugator;  // the generator applied after this step
  std::string note;
};

/// final_element = s_n ... s_1 * original * s_1 ... s_n, every intermediate
/// conjugate has the length of `original`, and `witness` realizes the Direct
/// Diamond Property for final_element.
struct DiamondCertificate {
  GroupElement original;
  std::vector<std::size_t> conjugators;
  std::size_t witness = 0;
  GroupElement final_element;
  std::vector<TranscriptStep> transcript;
  std::size_t antidominant_iterations = 0;
};

struct DiamondOptions {
  /// Proof-shadowing checks (Umbrella invariant, distance measures). Cheap
  /// at desk scale; switch off for long batch runs.
  bool instrument = true;
  /// Default 16 * (length + 2) * length(t_{2 rho^vee}).
  std::optional<std::size_t> max_iter;
};

/// l(sw) > l(w), l(ws) > l(w) and sws != w. Also computes l(sws) > l(w) and
/// throws InvariantError if the two forms disagree.
bool has_direct_diamond(const QuasiCoxeterGroup& g, const GroupElement& w, std::size_t s);

/// The same property for a pair of marked alcoves: the walls labeled s
/// differ and both alcoves lie on one side of each.
bool has_direct_diamond(const MarkedAlcove& a, const MarkedAlcove& b, std::size_t s);

/// For w = t u outside Lambda with w(A) inside the dominant chamber: the least
/// simple s_i with u(alpha_i) negative. Throws PreconditionError otherwise.
std::size_t dominant_case_witness(const QuasiCoxeterGroup& g, const GroupElement& w);

struct IntermediateResult {
  std::vector<std::size_t> conjugators;
  GroupElement reduced;
  /// Set when some s gave l(sws) > l(w): the loop stopped with a direct diamond.
  std::optional<std::size_t> direct_witness;
  std::vector<TranscriptStep> transcript;
};

/// Conjugates by the least s_i with l(s_i w) > l(w) and <w(0), alpha_i> != 0
/// until no such s_i is left; w(0) is then antidominant.
IntermediateResult intermediate_reduction(const QuasiCoxeterGroup& g, const GroupElement& w,
                                          const DiamondOptions& opts = {});

/// Requires w outside Lambda with w(0) in the closed antidominant chamber.
DiamondCertificate antidominant_search(const QuasiCoxeterGroup& g, const GroupElement& w,
                                       const DiamondOptions& opts = {});

/// Throws DomainError for w in Lambda. The result passes verify_certificate.
DiamondCertificate find_diamond(const QuasiCoxeterGroup& g, const GroupElement& w,
                                const DiamondOptions& opts = {});

struct CertificateCheck {
  bool passed = true;
  std::string failure;  // first violated condition
  explicit operator bool() const { return passed; }
};

/// Replays the certificate using only composition and length.
CertificateCheck verify_certificate(const QuasiCoxeterGroup& g, const GroupElement& w,
                                    const DiamondCertificate& c);

enum class SearchStatus { Found, Exhausted, CapReached };

struct BruteForceResult {
  SearchStatus status = SearchStatus::CapReached;
  std::optional<GroupElement> element;
  std::optional<std::size_t> witness;
  std::size_t depth = 0;
  std::size_t visited = 0;
};

/// Breadth-first search of the lateral class for an element with a direct
/// diamond. Exhausted means the class was closed without one.
BruteForceResult brute_force_diamond(const QuasiCoxeterGroup& g, const GroupElement& w,
                                     std::size_t node_cap);

struct LateralClass {
  std::vector<GroupElement> members;  // sorted
  bool complete = true;               // false if the cap stopped the search
  bool contains(const GroupElement& w) const;
};

/// Closure of {w} under w -> sws for generators s with l(sws) = l(w).
LateralClass lateral_class(const QuasiCoxeterGroup& g, const GroupElement& w, std::size_t node_cap);

}  // namespace qcox
