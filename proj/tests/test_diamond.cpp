#include "doctest.h"

#include <set>

#include "qcox/diamond.hpp"
#include "qcox/error.hpp"

using namespace qcox;

namespace {

QuasiCoxeterGroup make(const char* name, bool coweight = false) {
  RootSystem rs(CartanDatum::parse(name));
  return QuasiCoxeterGroup(rs, coweight ? LatticeSpec::coweight(rs) : LatticeSpec::adjoint(rs));
}

GroupElement word(const QuasiCoxeterGroup& g, std::vector<std::size_t> letters) {
  return g.from_word(letters, g.omega_identity());
}

bool all_lengths_equal(const QuasiCoxeterGroup& g, const DiamondCertificate& c) {
  for (const auto& step : c.transcript)
    if (step.length != g.length(c.original) || g.length(step.element) != step.length) return false;
  return true;
}

}  // namespace

TEST_CASE("direct diamond basics") {
  auto g = make("C2");
  for (std::size_t s = 0; s < g.num_generators(); ++s) CHECK_FALSE(has_direct_diamond(g, g.identity(), s));
  // In C2 with theta = 2 alpha_1 + alpha_2, s_2 commutes with s_aff.
  const GroupElement& s0 = g.generator(0);
  const GroupElement& s2 = g.generator(2);
  REQUIRE(g.compose(s0, s2) == g.compose(s2, s0));
  CHECK_FALSE(has_direct_diamond(g, s2, 0));
  CHECK(has_direct_diamond(g, s2, 1));
  // l(sws) = l(w) + 2 forces the property.
  for (const auto& w : g.enumerate_ball(5))
    for (std::size_t s = 0; s < g.num_generators(); ++s)
      if (g.length(g.conjugate(g.generator(s), w)) == g.length(w) + 2) CHECK(has_direct_diamond(g, w, s));
}

TEST_CASE("element and marked-alcove forms of the direct diamond agree") {
  for (const char* name : {"A1", "A2", "C2", "G2"}) {
    for (bool cw : {false, true}) {
      CAPTURE(name);
      auto g = make(name, cw);
      const MarkedAlcove base = base_marking(g);
      for (const auto& w : g.enumerate_ball(6)) {
        MarkedAlcove b = marked_alcove_of(g, w);
        for (std::size_t s = 0; s < g.num_generators(); ++s)
          CHECK(has_direct_diamond(g, w, s) == has_direct_diamond(base, b, s));
      }
    }
  }
}

TEST_CASE("dominant case witness") {
  auto a1 = make("A1");
  const GroupElement& s_aff = a1.generator(0);
  CHECK(dominant_case_witness(a1, s_aff) == 1);
  CHECK(a1.length(a1.conjugate(a1.generator(1), s_aff)) == 3);
  CHECK_THROWS_AS(dominant_case_witness(a1, a1.generator(1)), PreconditionError);
  CHECK_THROWS_AS(dominant_case_witness(a1, a1.translation(Point{2})), DomainError);

  for (const char* name : {"A2", "C2", "G2"}) {
    CAPTURE(name);
    auto g = make(name, true);
    const Region dom = base_chamber(g.root_system());
    std::size_t seen = 0;
    for (const auto& w : g.enumerate_ball(7)) {
      if (g.is_translation(w) || !region_contains_alcove(dom, alcove_of(g, w))) continue;
      std::size_t s = dominant_case_witness(g, w);
      CHECK(s >= 1);
      CHECK(has_direct_diamond(g, w, s));
      ++seen;
    }
    CHECK(seen > 0);
    for (const auto& u : g.root_system().enumerate_finite_weyl())
      if (!u.is_identity()) CHECK_THROWS_AS(dominant_case_witness(g, g.finite_element(u)), PreconditionError);
  }
  auto a2 = make("A2");
  GroupElement w = a2.compose(a2.translation(Rational(2) * a2.root_system().rho_check()), a2.generator(1));
  REQUIRE(region_contains_alcove(base_chamber(a2.root_system()), alcove_of(a2, w)));
  std::size_t s = dominant_case_witness(a2, w);
  CHECK((s == 1 || s == 2));
}

TEST_CASE("intermediate reduction") {
  auto c2 = make("C2");
  GroupElement rot = word(c2, {1, 2});
  IntermediateResult r = intermediate_reduction(c2, rot);
  CHECK(r.conjugators.empty());
  CHECK(r.reduced == rot);
  CHECK_FALSE(r.direct_witness.has_value());
  auto a1 = make("A1");
  CHECK_THROWS_AS(intermediate_reduction(a1, a1.translation(Point{1})), DomainError);

  for (const char* name : {"A2", "C2", "G2"}) {
    CAPTURE(name);
    auto g = make(name);
    for (const auto& w : g.enumerate_ball(7)) {
      if (g.is_translation(w)) continue;
      IntermediateResult res = intermediate_reduction(g, w);
      CHECK(g.length(res.reduced) == g.length(w));
      if (!res.direct_witness) {
        for (const auto& root : g.root_system().positive_roots())
          CHECK(g.root_system().pairing(res.reduced.lambda, root.covector) <= 0);
      } else {
        CHECK(has_direct_diamond(g, res.reduced, *res.direct_witness));
      }
    }
  }
}

TEST_CASE("anti-dominant search") {
  auto a1 = make("A1");
  DiamondCertificate c = antidominant_search(a1, a1.generator(1));
  CHECK(c.antidominant_iterations <= 2);
  CHECK(verify_certificate(a1, a1.generator(1), c));
  CHECK_THROWS_AS(antidominant_search(a1, a1.generator(0)), PreconditionError);

  auto g2 = make("G2");
  std::size_t tested = 0;
  for (const auto& u : g2.root_system().enumerate_finite_weyl()) {
    if (g2.root_system().weyl_length(u) != 5) continue;
    GroupElement w = g2.finite_element(u);
    DiamondCertificate cert = antidominant_search(g2, w);
    CHECK(verify_certificate(g2, w, cert));
    CHECK(all_lengths_equal(g2, cert));
    ++tested;
  }
  CHECK(tested == 2);

  // With w(0) = lambda antidominant, p - lambda is strictly dominant, so the
  // base alcove lies in lambda + u(C) only for u = 1: the shortcut is
  // unreachable from the base frame for non-translations.
  auto a2 = make("A2");
  std::size_t shortcuts = 0;
  for (const auto& w : a2.enumerate_ball(8)) {
    if (a2.is_translation(w)) continue;
    bool anti = true;
    for (const auto& r : a2.root_system().positive_roots())
      anti = anti && a2.root_system().pairing(w.lambda, r.covector) <= 0;
    if (!anti) continue;
    DiamondCertificate cert = antidominant_search(a2, w);
    CHECK(verify_certificate(a2, w, cert));
    if (cert.transcript.back().phase == Phase::DominantShortcut) {
      ++shortcuts;
      CHECK(cert.conjugators.empty());
    }
  }
  CHECK(shortcuts == 0);
}

TEST_CASE("find_diamond is sound on every short non-translation") {
  struct Case {
    const char* name;
    bool coweight;
    std::size_t radius;
  };
  for (auto c : {Case{"A1", false, 8}, Case{"A1", true, 8}, Case{"A2", false, 8},
                 Case{"C2", true, 6}, Case{"G2", false, 6}, Case{"B3", false, 4}}) {
    CAPTURE(c.name);
    CAPTURE(c.coweight);
    auto g = make(c.name, c.coweight);
    for (const auto& w : g.enumerate_ball(c.radius)) {
      if (g.is_translation(w)) {
        CHECK_THROWS_AS(find_diamond(g, w), DomainError);
        continue;
      }
      DiamondCertificate cert = find_diamond(g, w);
      CHECK(verify_certificate(g, w, cert));
      CHECK(all_lengths_equal(g, cert));
      CHECK(g.omega_projection(cert.final_element) == g.omega_projection(w));
    }
  }
}

TEST_CASE("find_diamond with torsion") {
  RootSystem rs(CartanDatum::parse("A1"));
  LatticeSpec spec = LatticeSpec::coweight(rs);
  spec.torsion_orders = {2};
  QuasiCoxeterGroup g(rs, spec);
  std::size_t count = 0;
  for (const auto& w : g.enumerate_ball(6)) {
    if (g.is_translation(w)) continue;
    CHECK(verify_certificate(g, w, find_diamond(g, w)));
    ++count;
  }
  CHECK(count > 0);
}

TEST_CASE("certificate verification rejects tampering") {
  auto c2 = make("C2");
  const GroupElement& s2 = c2.generator(2);
  DiamondCertificate cert = find_diamond(c2, s2);
  CHECK(verify_certificate(c2, s2, cert));

  DiamondCertificate commuting = cert;
  commuting.conjugators.clear();
  commuting.final_element = s2;
  commuting.witness = 0;  // s_aff commutes with s_2
  CertificateCheck check = verify_certificate(c2, s2, commuting);
  CHECK_FALSE(check.passed);
  CHECK(check.failure.find("s w' s = w'") != std::string::npos);

  DiamondCertificate wrong_final = cert;
  wrong_final.final_element = c2.identity();
  CHECK_FALSE(verify_certificate(c2, s2, wrong_final));
  CHECK_FALSE(verify_certificate(c2, c2.generator(1), cert));

  // Empty conjugator list with a witness that lengthens by 2.
  DiamondCertificate direct{s2, {}, 1, s2, {}, 0};
  CHECK(verify_certificate(c2, s2, direct));
}

TEST_CASE("brute force oracle agrees with the constructive search") {
  for (const char* name : {"A2", "C2", "G2"}) {
    CAPTURE(name);
    auto g = make(name, true);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      GroupElement w = g.random_element(1 + seed % 14, seed);
      if (g.is_translation(w)) continue;
      BruteForceResult bf = brute_force_diamond(g, w, 50'000);
      CHECK(bf.status == SearchStatus::Found);
      CHECK(has_direct_diamond(g, *bf.element, *bf.witness));
      DiamondCertificate cert = find_diamond(g, w);
      LateralClass cls = lateral_class(g, w, 50'000);
      CHECK(cls.complete);
      CHECK(cls.contains(cert.final_element));
      CHECK(cls.contains(*bf.element));
    }
  }
  auto c2 = make("C2");
  BruteForceResult bf = brute_force_diamond(c2, c2.generator(2), 100);
  CHECK(bf.status == SearchStatus::Found);
  CHECK(bf.depth == 0);
  CHECK(bf.witness != std::optional<std::size_t>(0));
  CHECK_THROWS_AS(brute_force_diamond(c2, c2.identity(), 100), DomainError);
}

TEST_CASE("lateral classes") {
  auto a2 = make("A2");
  LateralClass id = lateral_class(a2, a2.identity(), 100);
  CHECK(id.members.size() == 1);
  CHECK(id.complete);
  // A translation's class is its finite Weyl orbit.
  for (const auto& lambda : dominant_translations(a2, 6)) {
    std::set<GroupElement> orbit;
    for (const auto& u : a2.root_system().enumerate_finite_weyl())
      orbit.insert(a2.translation(u.apply(lambda)));
    LateralClass cls = lateral_class(a2, a2.translation(lambda), 10'000);
    CHECK(std::set<GroupElement>(cls.members.begin(), cls.members.end()) == orbit);
  }
  LateralClass capped = lateral_class(a2, a2.translation(Point{2, 1}), 2);
  CHECK_FALSE(capped.complete);
}
