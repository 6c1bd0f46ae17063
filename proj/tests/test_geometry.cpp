#include "doctest.h"

#include <algorithm>
#include <set>

#include "qcox/error.hpp"
#include "qcox/geometry.hpp"

using namespace qcox;

namespace {

QuasiCoxeterGroup adjoint(const char* name) {
  RootSystem rs(CartanDatum::parse(name));
  return QuasiCoxeterGroup(rs, LatticeSpec::adjoint(rs));
}

QuasiCoxeterGroup extended(const char* name) {
  RootSystem rs(CartanDatum::parse(name));
  return QuasiCoxeterGroup(rs, LatticeSpec::coweight(rs));
}

const char* const kTypes[] = {"A1", "A2", "C2", "G2"};

}  // namespace

TEST_CASE("base alcove and its walls") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = adjoint(name);
    const RootSystem& rs = g.root_system();
    Alcove a = base_alcove(rs);
    for (auto k : a.coords) CHECK(k == 0);
    std::vector<Hyperplane> expected;
    for (std::size_t s = 0; s <= rs.rank(); ++s) expected.push_back(base_wall(rs, s));
    std::sort(expected.begin(), expected.end());
    CHECK(walls(rs, a) == expected);
    CHECK(base_marking(g) == marked_alcove_of(g, g.identity()));
  }
  RootSystem a2(CartanDatum::parse("A2"));
  CHECK_THROWS_AS(alcove_containing(a2, Point{1, Rational(1, 2)}), PreconditionError);
}

TEST_CASE("alcove distance from the base equals length") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = extended(name);
    const RootSystem& rs = g.root_system();
    const Alcove base = base_alcove(rs);
    for (const auto& w : g.enumerate_ball(6)) {
      Alcove a = alcove_of(g, w);
      CHECK(distance(base, a) == g.length(w));
      CHECK(walls(rs, a).size() == rs.rank() + 1);
    }
  }
}

TEST_CASE("alcove balls are in bijection with affine Weyl balls") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = adjoint(name);
    const RootSystem& rs = g.root_system();
    for (std::size_t radius : {0u, 1u, 3u, 6u}) {
      auto ball = alcove_ball(rs, base_alcove(rs), radius);
      std::set<Alcove> images;
      for (const auto& w : g.enumerate_ball(radius)) images.insert(alcove_of(g, w));
      CHECK(std::set<Alcove>(ball.begin(), ball.end()) == images);
      CHECK(ball.size() == images.size());
    }
  }
}

TEST_CASE("marked alcoves are compatible with right multiplication") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = extended(name);
    for (const auto& w : g.enumerate_ball(5)) {
      MarkedAlcove m = marked_alcove_of(g, w);
      CHECK(is_special(g.root_system(), m.vertex));
      CHECK(closure_contains(g.root_system(), m.alcove, m.vertex));
      for (std::size_t s = 0; s < g.num_generators(); ++s) {
        CHECK(is_wall(g.root_system(), m.alcove, m.labeling[s]));
        CHECK(reflect_marked(g, m, s) == marked_alcove_of(g, g.compose(w, g.generator(s))));
      }
    }
  }
}

TEST_CASE("geometric length criteria") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = extended(name);
    const RootSystem& rs = g.root_system();
    const Alcove base = base_alcove(rs);
    for (const auto& w : g.enumerate_ball(5)) {
      MarkedAlcove m = marked_alcove_of(g, w);
      const std::size_t len = g.length(w);
      for (std::size_t s = 0; s < g.num_generators(); ++s) {
        const GroupElement& gs = g.generator(s);
        CHECK((g.length(g.compose(gs, w)) > len) == !separates(base_wall(rs, s), base, m.alcove));
        CHECK((g.length(g.compose(w, gs)) > len) == !separates(m.labeling[s], base, m.alcove));
        // s w s differs from w exactly when the labels of s differ.
        CHECK((g.conjugate(gs, w) == w) == (m.labeling[s] == base_wall(rs, s)));
      }
    }
  }
}

TEST_CASE("chamber of a marked alcove is w applied to the dominant chamber") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = extended(name);
    const RootSystem& rs = g.root_system();
    for (const auto& w : g.enumerate_ball(5)) {
      Region c = chamber_of(rs, marked_alcove_of(g, w));
      CHECK(c.orientation == w.finite);
      CHECK(c.apex == w.lambda);
      CHECK(region_contains_point(rs, c, g.act_on_point(w, rs.rho_check() + rs.rho_check())));
    }
  }
}

TEST_CASE("alcoves around a vertex") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = adjoint(name);
    const RootSystem& rs = g.root_system();
    const std::size_t order = rs.enumerate_finite_weyl().size();
    CHECK(alcoves_at(rs, zero_point(rs.rank())).size() == order);
    CHECK(alcoves_at(rs, rs.rho_check()).size() == order);
    // The vertex omega_i / c_i of the base alcove.
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      auto c = rs.highest_root().simple_coords[i];
      Point v = Rational(1, c) * rs.fundamental_coweights()[i];
      auto star = alcoves_at(rs, v);
      CHECK(std::find(star.begin(), star.end(), base_alcove(rs)) != star.end());
      for (const auto& a : star) CHECK(closure_contains(rs, a, v));
      if (c == 1) CHECK(star.size() == order);
      else CHECK(star.size() < order);
    }
  }
}

TEST_CASE("region distance agrees with breadth-first search") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = extended(name);
    const RootSystem& rs = g.root_system();
    std::vector<Region> regions{base_chamber(rs), opposite_base_chamber(rs),
                                half_space({rs.highest_root_index(), 2}, 1),
                                half_space({0, -1}, -1)};
    for (const auto& w : g.enumerate_ball(2)) {
      if (!w.finite.is_identity()) regions.push_back(chamber_of(rs, marked_alcove_of(g, w)));
      regions.push_back(chamber(rs, w.lambda, w.finite, -1));
    }
    for (const auto& a : alcove_ball(rs, base_alcove(rs), 4)) {
      for (const auto& r : regions) {
        RegionDistance d = dist_alcove_region(rs, a, r);
        auto oracle = bfs_dist_alcove_region(rs, a, r, 20);
        REQUIRE(oracle.has_value());
        CHECK(d.distance == *oracle);
        CHECK(region_contains_alcove(r, d.nearest));
        CHECK(is_minimal_gallery(d.gallery));
        CHECK(d.gallery.size() == d.distance + 1);
      }
    }
  }
}

TEST_CASE("region distance can exceed the separating wall count") {
  RootSystem rs(CartanDatum::parse("A2"));
  // Pairings (12/5, 11/5, 23/5) with alpha_1, alpha_2, theta.
  Alcove a = alcove_containing(rs, Point{Rational(7, 3), Rational(34, 15)});
  CHECK(a.coords == IntVector{2, 2, 4});
  Region r = chamber(rs, zero_point(2), rs.simple_reflection(1), 1);
  RegionDistance d = dist_alcove_region(rs, a, r);
  CHECK(separating_wall_count(a, r) == 3);
  CHECK(d.distance == *bfs_dist_alcove_region(rs, a, r, 20));
  CHECK(d.distance > 3);
  CHECK(is_minimal_gallery(d.gallery));
  CHECK(region_contains_alcove(r, d.nearest));
  CHECK_THROWS_AS(dist_alcove_region(rs, a, r, 3), ResourceError);
}

TEST_CASE("vertex distance is the minimum over the star") {
  RootSystem a1(CartanDatum::parse("A1"));
  CHECK(dist_vertex_region(a1, Point{1}, opposite_base_chamber(a1)) == 2);
  auto g = adjoint("A2");
  const RootSystem& rs = g.root_system();
  Region opp = opposite_base_chamber(rs);
  for (const auto& w : g.enumerate_ball(5)) {
    Point v = w.lambda;
    std::size_t best = SIZE_MAX;
    for (const auto& a : alcove_ball(rs, base_alcove(rs), 9))
      if (closure_contains(rs, a, v)) best = std::min(best, *bfs_dist_alcove_region(rs, a, opp, 20));
    CHECK(dist_vertex_region(rs, v, opp) == best);
  }
  CHECK(dist_vertex_region(rs, zero_point(2), opp) == 0);
}

TEST_CASE("minimal galleries and intermediate walls") {
  auto g = adjoint("G2");
  const RootSystem& rs = g.root_system();
  const Alcove base = base_alcove(rs);
  for (const auto& b : alcove_ball(rs, base, 5)) {
    Gallery gal = minimal_gallery(rs, base, b);
    CHECK(is_minimal_gallery(gal));
    auto ws = intermediate_walls(gal);
    CHECK(ws.size() == distance(base, b));
    std::set<Hyperplane> distinct(ws.begin(), ws.end());
    CHECK(distinct.size() == ws.size());
    for (const auto& h : ws) CHECK(separates(h, base, b));
  }
  CHECK_THROWS_AS(intermediate_walls({base, base}), PreconditionError);
}

TEST_CASE("umbrella predicate") {
  auto g = adjoint("A2");
  const RootSystem& rs = g.root_system();
  const Alcove base = base_alcove(rs);
  const Hyperplane aff = base_wall(rs, 0);
  // A gallery walking away from the base across walls through the origin.
  MarkedAlcove m = base_marking(g);
  Gallery away{reflect_marked(g, m, 1).alcove};
  away.push_back(reflect_marked(g, reflect_marked(g, m, 1), 2).alcove);
  CHECK(is_umbrella(rs, {away[0]}, base, aff));
  // Walking toward the base keeps each crossed wall between the gallery and it.
  CHECK(is_umbrella(rs, {away[1], away[0]}, base, aff));
  // Walking away violates the separation property.
  CHECK_FALSE(is_umbrella(rs, away, base, aff));
  // Backtracking is not minimal.
  CHECK_FALSE(is_umbrella(rs, {away[0], away[1], away[0]}, base, aff));
  // Crossing the marked wall violates the same-side property.
  CHECK_FALSE(is_umbrella(rs, {reflect_alcove(rs, base, aff)}, base, aff));
  CHECK_THROWS_AS(is_umbrella(rs, away, base, Hyperplane{0, 5}), PreconditionError);
}

TEST_CASE("infinite gallery word") {
  struct Case {
    const char* name;
    std::size_t length;
  };
  for (auto c : {Case{"A1", 2}, Case{"A2", 8}, Case{"C2", 14}, Case{"G2", 32}, Case{"B3", 0}}) {
    CAPTURE(c.name);
    auto g = adjoint(c.name);
    const RootSystem& rs = g.root_system();
    auto word = infinite_gallery_word(g);
    if (c.length > 0) CHECK(word.size() == c.length);
    CHECK(word.front() == 0);
    // Cycling the word three times stays in the dominant chamber and moves
    // strictly away from the base alcove.
    MarkedAlcove m = base_marking(g);
    const Alcove base = base_alcove(rs);
    const Region dom = base_chamber(rs);
    for (std::size_t i = 0; i < 3 * word.size(); ++i) {
      m = reflect_marked(g, m, word[i % word.size()]);
      CHECK(distance(base, m.alcove) == i + 1);
      CHECK(region_contains_alcove(dom, m.alcove));
    }
  }
}

TEST_CASE("a hyperplane meeting the dominant chamber misses the closed opposite chamber") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = adjoint(name);
    const RootSystem& rs = g.root_system();
    const Region dom = base_chamber(rs);
    const Region opp = opposite_base_chamber(rs);
    auto ball = alcove_ball(rs, base_alcove(rs), 10);
    std::set<Hyperplane> opposite_walls;
    for (const auto& a : ball)
      if (region_contains_alcove(opp, a))
        for (const auto& h : walls(rs, a)) opposite_walls.insert(h);
    std::size_t checked = 0;
    for (const auto& a : ball) {
      if (!region_contains_alcove(dom, a)) continue;
      for (const auto& h : walls(rs, a)) {
        if (std::abs(h.level) > 5) continue;
        if (!region_contains_alcove(dom, reflect_alcove(rs, a, h))) continue;
        ++checked;
        CHECK(opposite_walls.count(h) == 0);
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("a chamber at a vertex of the closed opposite chamber contains or misses the dominant chamber") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = adjoint(name);
    const RootSystem& rs = g.root_system();
    const Region dom = base_chamber(rs);
    const Region opp = opposite_base_chamber(rs);
    auto finite = rs.enumerate_finite_weyl();
    auto far = alcove_ball(rs, base_alcove(rs), 8);
    std::set<Point> vertices;
    for (const auto& w : g.enumerate_ball(6))
      if (region_closure_contains_point(rs, opp, w.lambda)) vertices.insert(w.lambda);
    CHECK(vertices.size() > 1);
    for (const auto& v : vertices) {
      for (const auto& u : finite) {
        Region c = chamber(rs, v, u, 1);
        bool overlap = false;
        bool contained = true;
        for (const auto& a : far) {
          if (!region_contains_alcove(dom, a)) continue;
          bool inside = region_contains_alcove(c, a);
          overlap = overlap || inside;
          contained = contained && inside;
        }
        CHECK((!overlap || contained));
        CHECK(contained == region_contains_alcove(c, base_alcove(rs)));
      }
    }
  }
}

TEST_CASE("the infinite gallery leaves every chamber disjoint from the dominant one") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = adjoint(name);
    const RootSystem& rs = g.root_system();
    auto word = infinite_gallery_word(g);
    std::vector<Region> targets{opposite_base_chamber(rs)};
    for (std::size_t i = 1; i <= rs.rank(); ++i)
      targets.push_back(chamber(rs, zero_point(rs.rank()), rs.simple_reflection(i), 1));
    MarkedAlcove m = base_marking(g);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (auto s : word) m = reflect_marked(g, m, s);
      for (const auto& r : targets) {
        std::size_t d = dist_alcove_region(rs, m.alcove, r).distance;
        CHECK(d >= n);
        if (n <= 2) CHECK(bfs_dist_alcove_region(rs, m.alcove, r, 80) == d);
      }
    }
  }
}

TEST_CASE("image levels must be integral") {
  RootSystem a1(CartanDatum::parse("A1"));
  QuasiCoxeterGroup g(a1, LatticeSpec{{Point{Rational(1, 3)}}, {}});
  CHECK_THROWS_AS(marked_alcove_of(g, g.translation(Point{Rational(1, 3)})), DomainError);
}

TEST_CASE("reflecting a marked alcove twice is the identity") {
  auto g = extended("C2");
  for (const auto& w : g.enumerate_ball(4)) {
    MarkedAlcove m = marked_alcove_of(g, w);
    for (std::size_t s = 0; s < g.num_generators(); ++s)
      CHECK(reflect_marked(g, reflect_marked(g, m, s), s) == m);
  }
  MarkedAlcove base = base_marking(g);
  const Point origin = zero_point(2);
  for (std::size_t s = 1; s < g.num_generators(); ++s) CHECK(reflect_marked(g, base, s).vertex == origin);
  CHECK_FALSE(reflect_marked(g, base, 0).vertex == origin);
}

TEST_CASE("minimal galleries between dominant alcoves stay dominant") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = adjoint(name);
    const RootSystem& rs = g.root_system();
    const Region dom = base_chamber(rs);
    std::vector<Alcove> dominant;
    for (const auto& a : alcove_ball(rs, base_alcove(rs), 7))
      if (region_contains_alcove(dom, a)) dominant.push_back(a);
    for (std::size_t i = 0; i < dominant.size(); i += 3) {
      for (std::size_t j = 0; j < dominant.size(); j += 5) {
        Gallery gal = minimal_gallery(rs, dominant[i], dominant[j]);
        for (const auto& a : gal) CHECK(region_contains_alcove(dom, a));
        // A sub-gallery of a minimal gallery is minimal.
        if (gal.size() > 2) CHECK(is_minimal_gallery(Gallery(gal.begin() + 1, gal.end() - 1)));
      }
    }
  }
}

TEST_CASE("one period of the infinite gallery reaches the translated base alcove") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = adjoint(name);
    const RootSystem& rs = g.root_system();
    MarkedAlcove m = base_marking(g);
    for (auto s : infinite_gallery_word(g)) m = reflect_marked(g, m, s);
    GroupElement t = g.translation(Rational(2) * rs.rho_check());
    CHECK(m == marked_alcove_of(g, t));
  }
}

TEST_CASE("region examples") {
  RootSystem a1(CartanDatum::parse("A1"));
  CHECK(dist_alcove_region(a1, base_alcove(a1), opposite_base_chamber(a1)).distance == 1);
  for (const char* name : kTypes) {
    CAPTURE(name);
    auto g = adjoint(name);
    const RootSystem& rs = g.root_system();
    const Alcove base = base_alcove(rs);
    CHECK(dist_alcove_region(rs, base, base_chamber(rs)).distance == 0);
    CHECK(dist_alcove_region(rs, base, half_space(base_wall(rs, 0), 1)).distance == 1);
    CHECK(region_contains_alcove(base_chamber(rs), alcove_of(g, g.generator(0))));
    CHECK_FALSE(region_contains_alcove(base_chamber(rs), alcove_of(g, g.generator(1))));
    CHECK(dist_vertex_region(rs, zero_point(rs.rank()), base_chamber(rs)) == 0);
    CHECK(dist_vertex_region(rs, zero_point(rs.rank()), opposite_base_chamber(rs)) == 0);
    CHECK_THROWS_AS(chamber(rs, rs.base_interior_point(),
                            FiniteWeylElement::identity(rs.rank())),
                    PreconditionError);
  }
}
