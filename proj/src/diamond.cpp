#include "qcox/diamond.hpp"

#include <algorithm>
#include <deque>

#include "qcox/error.hpp"

namespace qcox {

std::string to_string(Phase p) {
  switch (p) {
    case Phase::Intermediate: return "intermediate";
    case Phase::Antidominant: return "antidominant";
    case Phase::DominantShortcut: return "dominant-shortcut";
  }
  return "?";
}

namespace {

void require_non_translation(const QuasiCoxeterGroup& g, const GroupElement& w) {
  if (g.is_translation(w))
    throw DomainError(
        "the element lies in the translation subgroup Lambda; the Diamond Property is only "
        "guaranteed for w not in Lambda");
}

bool antidominant_vertex(const QuasiCoxeterGroup& g, const GroupElement& w) {
  const RootSystem& rs = g.root_system();
  for (const auto& r : rs.positive_roots())
    if (rs.pairing(w.lambda, r.covector) > 0) return false;
  return true;
}

// The base alcove lies in w(C) = lambda + u(C): <p - lambda, u alpha_i> > 0.
bool base_alcove_in_chamber_of(const QuasiCoxeterGroup& g, const GroupElement& w) {
  const RootSystem& rs = g.root_system();
  Point d = rs.base_interior_point() - w.lambda;
  for (std::size_t i = 1; i <= rs.rank(); ++i)
    if (pair(d, w.finite.act_on_root(rs.simple_root(i).covector)) <= 0) return false;
  return true;
}

}  // namespace

bool has_direct_diamond(const QuasiCoxeterGroup& g, const GroupElement& w, std::size_t s) {
  const GroupElement& gs = g.generator(s);
  const std::size_t len = g.length(w);
  const GroupElement conj = g.conjugate(gs, w);
  const bool three = g.length(g.compose(gs, w)) > len && g.length(g.compose(w, gs)) > len &&
                     !(conj == w);
  const bool unified = g.length(conj) > len;
  QCOX_ENSURE(three == unified, "direct diamond conditions disagree with l(sws) > l(w)");
  return three;
}

bool has_direct_diamond(const MarkedAlcove& a, const MarkedAlcove& b, std::size_t s) {
  if (s >= a.labeling.size() || s >= b.labeling.size())
    throw PreconditionError("generator index out of range");
  const Hyperplane& ha = a.labeling[s];
  const Hyperplane& hb = b.labeling[s];
  return !(ha == hb) && !separates(ha, a.alcove, b.alcove) && !separates(hb, a.alcove, b.alcove);
}

std::size_t dominant_case_witness(const QuasiCoxeterGroup& g, const GroupElement& w) {
  require_non_translation(g, w);
  const RootSystem& rs = g.root_system();
  if (!region_contains_alcove(base_chamber(rs), alcove_of(g, w)))
    throw PreconditionError("w(A) is not contained in the dominant chamber");
  // The walls of u(C) separating u(A) from A are u(H_i) with u(alpha_i) < 0.
  for (std::size_t i = 1; i <= rs.rank(); ++i) {
    auto ref = rs.find_root(w.finite.act_on_root(rs.simple_root(i).covector));
    QCOX_ENSURE(ref.has_value(), "finite Weyl element did not map a root to a root");
    if (ref->sign < 0) {
      QCOX_ENSURE(has_direct_diamond(g, w, i), "dominant-case witness has no direct diamond");
      return i;
    }
  }
  throw InvariantError("non-translation with trivial finite part");
}

IntermediateResult intermediate_reduction(const QuasiCoxeterGroup& g, const GroupElement& w,
                                          const DiamondOptions& opts) {
  require_non_translation(g, w);
  const RootSystem& rs = g.root_system();
  const Region opposite = opposite_base_chamber(rs);
  const std::size_t len = g.length(w);
  IntermediateResult out{{}, w, std::nullopt, {}};
  std::optional<std::size_t> measure;
  if (opts.instrument) measure = dist_vertex_region(rs, w.lambda, opposite);

  for (;;) {
    GroupElement& cur = out.reduced;
    std::optional<std::size_t> chosen;
    for (std::size_t i = 1; i <= rs.rank() && !chosen; ++i) {
      if (rs.pairing(cur.lambda, rs.simple_root(i).covector) == 0) continue;
      if (g.length(g.compose(g.generator(i), cur)) > len) chosen = i;
    }
    if (!chosen) {
      QCOX_ENSURE(antidominant_vertex(g, cur), "empty S but w(0) is not antidominant");
      out.transcript.push_back({cur, len, Phase::Intermediate, std::nullopt, "S empty"});
      return out;
    }
    const std::size_t s = *chosen;
    GroupElement next = g.conjugate(g.generator(s), cur);
    const std::size_t next_len = g.length(next);
    if (next_len > len) {
      // Any length increase is l(sws) = l(w) + 2: a direct diamond at s.
      QCOX_ENSURE(has_direct_diamond(g, cur, s), "length increase without a direct diamond");
      out.direct_witness = s;
      out.transcript.push_back(
          {cur, len, Phase::Intermediate, std::nullopt, "length increase at " + generator_name(s)});
      return out;
    }
    QCOX_ENSURE(next_len == len, "intermediate conjugation lowered the length");
    out.transcript.push_back({cur, len, Phase::Intermediate, s, ""});
    out.conjugators.push_back(s);
    cur = std::move(next);
    if (measure) {
      std::size_t m = dist_vertex_region(rs, cur.lambda, opposite);
      QCOX_ENSURE(m < *measure, "vertex distance to the antidominant chamber did not decrease");
      measure = m;
    }
  }
}

DiamondCertificate antidominant_search(const QuasiCoxeterGroup& g, const GroupElement& w,
                                       const DiamondOptions& opts) {
  require_non_translation(g, w);
  if (!antidominant_vertex(g, w))
    throw PreconditionError("w(0) is not in the closed antidominant chamber");
  const std::size_t len = g.length(w);
  DiamondCertificate cert{w, {}, 0, w, {}, 0};

  if (base_alcove_in_chamber_of(g, w)) {
    // Swap the roles of the two alcoves: w^{-1}(A) lies in the dominant chamber.
    cert.witness = dominant_case_witness(g, g.inverse(w));
    QCOX_ENSURE(has_direct_diamond(g, w, cert.witness), "swapped-frame witness failed");
    cert.transcript.push_back({w, len, Phase::DominantShortcut, std::nullopt,
                               "base alcove inside the chamber of w"});
    return cert;
  }

  const RootSystem& rs = g.root_system();
  const std::vector<std::size_t> word = infinite_gallery_word(g);
  const std::size_t max_iter = opts.max_iter.value_or(16 * (len + 2) * word.size());

  GroupElement cur = w;
  GroupElement prefix = g.identity();  // g_i = s_0 ... s_{i-1}
  Gallery b_gallery{alcove_of(g, w)};
  for (std::size_t i = 0; i < max_iter; ++i) {
    const std::size_t s = word[i % word.size()];
    if (has_direct_diamond(g, cur, s)) {
      cert.witness = s;
      cert.final_element = cur;
      cert.antidominant_iterations = i;
      cert.transcript.push_back({cur, len, Phase::Antidominant, std::nullopt,
                                 "direct diamond at " + generator_name(s)});
      return cert;
    }
    GroupElement next = g.conjugate(g.generator(s), cur);
    QCOX_ENSURE(g.length(next) == len, "anti-dominant conjugation changed the length");
    cert.transcript.push_back({cur, len, Phase::Antidominant, s, ""});
    cert.conjugators.push_back(s);
    cur = std::move(next);
    prefix = g.compose(prefix, g.generator(s));

    if (opts.instrument) {
      // B_{i+1} = w g_{i+1}(A), A_{i+1} = g_{i+1}(A), H_{i+1} its wall labeled s_{i+1}.
      b_gallery.push_back(alcove_of(g, g.compose(w, prefix)));
      const Alcove a_next = alcove_of(g, prefix);
      const Hyperplane h_next =
          image_of_hyperplane(g, prefix, base_wall(rs, word[(i + 1) % word.size()]));
      QCOX_ENSURE(distance(a_next, b_gallery.back()) == len, "pair distance changed");
      QCOX_ENSURE(is_umbrella(rs, b_gallery, a_next, h_next), "Umbrella invariant failed");
    }
  }
  throw ResourceError("anti-dominant search exceeded " + std::to_string(max_iter) +
                      " iterations without a direct diamond; termination is guaranteed, so "
                      "either the cap is too small or the implementation is wrong");
}

DiamondCertificate find_diamond(const QuasiCoxeterGroup& g, const GroupElement& w,
                                const DiamondOptions& opts) {
  require_non_translation(g, w);
  IntermediateResult mid = intermediate_reduction(g, w, opts);
  DiamondCertificate cert;
  if (mid.direct_witness) {
    cert = DiamondCertificate{w, {}, *mid.direct_witness, mid.reduced, {}, 0};
  } else {
    cert = antidominant_search(g, mid.reduced, opts);
    cert.original = w;
  }
  std::vector<std::size_t> conjugators = mid.conjugators;
  conjugators.insert(conjugators.end(), cert.conjugators.begin(), cert.conjugators.end());
  cert.conjugators = std::move(conjugators);
  std::vector<TranscriptStep> transcript = mid.transcript;
  transcript.insert(transcript.end(), cert.transcript.begin(), cert.transcript.end());
  cert.transcript = std::move(transcript);
  CertificateCheck check = verify_certificate(g, w, cert);
  QCOX_ENSURE(check.passed, "certificate failed verification: " + check.failure);
  return cert;
}

CertificateCheck verify_certificate(const QuasiCoxeterGroup& g, const GroupElement& w,
                                    const DiamondCertificate& c) {
  auto fail = [](std::string msg) { return CertificateCheck{false, std::move(msg)}; };
  if (!(c.original == w)) return fail("certificate is for a different element");
  if (c.witness >= g.num_generators()) return fail("witness is not a generator");
  const std::size_t len = g.length(w);
  GroupElement cur = w;
  for (std::size_t i = 0; i < c.conjugators.size(); ++i) {
    std::size_t s = c.conjugators[i];
    if (s >= g.num_generators()) return fail("conjugator " + std::to_string(i) + " is not a generator");
    cur = g.compose(g.compose(g.generator(s), cur), g.generator(s));
    if (g.length(cur) != len)
      return fail("length changes after conjugator " + std::to_string(i + 1));
  }
  if (!(cur == c.final_element)) return fail("replayed conjugates do not reach the final element");
  const GroupElement& s = g.generator(c.witness);
  if (g.length(g.compose(s, cur)) <= len) return fail("l(s w') > l(w') fails for the witness");
  if (g.length(g.compose(cur, s)) <= len) return fail("l(w' s) > l(w') fails for the witness");
  if (g.compose(g.compose(s, cur), s) == cur) return fail("s w' s = w' for the witness");
  return {};
}

BruteForceResult brute_force_diamond(const QuasiCoxeterGroup& g, const GroupElement& w,
                                     std::size_t node_cap) {
  require_non_translation(g, w);
  const std::size_t len = g.length(w);
  BruteForceResult out;
  ElementSet seen{w};
  std::deque<std::pair<GroupElement, std::size_t>> queue{{w, 0}};
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    ++out.visited;
    std::vector<GroupElement> neighbors;
    for (std::size_t s = 0; s < g.num_generators(); ++s) {
      const GroupElement& gs = g.generator(s);
      GroupElement conj = g.compose(g.compose(gs, cur), gs);
      const std::size_t l = g.length(conj);
      if (l > len) {
        out.status = SearchStatus::Found;
        out.element = cur;
        out.witness = s;
        out.depth = depth;
        return out;
      }
      if (l == len) neighbors.push_back(std::move(conj));
    }
    for (auto& n : neighbors) {
      if (seen.count(n)) continue;
      if (seen.size() >= node_cap) {
        out.status = SearchStatus::CapReached;
        return out;
      }
      seen.insert(n);
      queue.emplace_back(std::move(n), depth + 1);
    }
  }
  out.status = SearchStatus::Exhausted;
  return out;
}

bool LateralClass::contains(const GroupElement& w) const {
  return std::binary_search(members.begin(), members.end(), w);
}

LateralClass lateral_class(const QuasiCoxeterGroup& g, const GroupElement& w, std::size_t node_cap) {
  const std::size_t len = g.length(w);
  LateralClass out;
  ElementSet seen{w};
  std::deque<GroupElement> queue{w};
  while (!queue.empty()) {
    GroupElement cur = queue.front();
    queue.pop_front();
    out.members.push_back(cur);
    for (const auto& gs : g.generators()) {
      GroupElement conj = g.compose(g.compose(gs, cur), gs);
      if (g.length(conj) != len || seen.count(conj)) continue;
      if (seen.size() >= node_cap) {
        out.complete = false;
        continue;
      }
      seen.insert(conj);
      queue.push_back(std::move(conj));
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace qcox
