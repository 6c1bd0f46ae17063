#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "qcox/group.hpp"
#include "qcox/hecke.hpp"

namespace qcox {

/// Parsed group configuration. INI grammar, comments on their own line:
///
///   [group]
///   type = G2
///   lattice = adjoint          (adjoint | coweight | explicit)
///   torsion = 2 2              (optional torsion orders)
///   [lattice]
///   row1 = 1/2 0               (explicit generators, coroot coordinates)
///   [hecke]
///   q = 2                      (one value, or one per generator s0..sr)
///   [limits]
///   node_cap = 50000
///   max_iter = 0               (0 = default)
///   seed = 1
struct GroupConfig {
  std::string type;
  std::string lattice = "adjoint";
  std::vector<Point> rows;
  std::vector<std::int64_t> torsion;
  std::vector<std::int64_t> q{2};
  std::size_t node_cap = 50'000;
  std::optional<std::size_t> max_iter;
  std::uint64_t seed = 1;
};

/// Throws ParseError with the offending line, or naming [section] key when
/// the problem is semantic.
GroupConfig parse_config(std::istream& in);
GroupConfig load_config(const std::string& path);

/// QCOX_NODE_CAP overrides [limits] node_cap.
void apply_environment(GroupConfig& cfg);

/// Throws ConstructionError for inadmissible type or lattice data.
LatticeSpec lattice_spec(const RootSystem& rs, const GroupConfig& cfg);
QuasiCoxeterGroup build_group(const GroupConfig& cfg);
/// One value means uniform; otherwise one value per generator.
QParams q_params(const QuasiCoxeterGroup& g, const std::vector<std::int64_t>& values);

/// Product, left to right, of tokens s0..sr, t(c1,...,cr), tor(r1,...),
/// omega(a,...) and 1. Throws ParseError.
GroupElement parse_element(const QuasiCoxeterGroup& g, const std::string& text);
/// "omega(a,...)" with free residues then torsion residues.
OmegaElement parse_omega(const QuasiCoxeterGroup& g, const std::string& text);

/// Canonical form t(lambda) tor(r) s_i ... (finite part as a reduced word);
/// parse_element inverts it exactly. The identity is "1".
std::string format_element(const QuasiCoxeterGroup& g, const GroupElement& w);
/// Reduced word followed by the Omega class, e.g. "s1 s0 omega(1)"; falls
/// back to format_element when no length-0 sections exist.
std::string format_word(const QuasiCoxeterGroup& g, const GroupElement& w);

}  // namespace qcox
