#pragma once

#include <string>

#include "qcox/config.hpp"
#include "qcox/diamond.hpp"

namespace qcox {

/// JSON certificate document. Elements are stored in the canonical
/// format_element form; the group block records type, lattice and torsion so
/// that a replay against a different group is refused.
///
///   { "format": "qcox-certificate/1",
///     "group": {"type": "C2", "lattice": "adjoint", "rows": [], "torsion": []},
///     "element": "s2", "length": 1, "conjugators": [], "witness": "s1",
///     "final": "s2", "antidominant_iterations": 0,
///     "transcript": [{"element": "s2", "length": 1, "phase": "intermediate",
///                     "conjugator": null, "note": "..."}] }
std::string write_certificate(const QuasiCoxeterGroup& g, const GroupConfig& cfg,
                              const DiamondCertificate& c);

/// Throws ParseError on malformed documents or a group mismatch.
DiamondCertificate read_certificate(const QuasiCoxeterGroup& g, const GroupConfig& cfg,
                                    const std::string& text);

}  // namespace qcox
