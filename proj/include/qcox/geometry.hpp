#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcox/group.hpp"
#include "qcox/rational.hpp"
#include "qcox/rootsys.hpp"

namespace qcox {

/// {x : <x, alpha> = level} for the positive root alpha = positive_roots()[root].
struct Hyperplane {
  std::size_t root = 0;
  std::int64_t level = 0;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

std::string to_string(const Hyperplane& h);

/// An alcove, identified by k_alpha = floor<x, alpha> for interior x.
/// The witness is an interior point; equality ignores it.
struct Alcove {
  IntVector coords;
  Point witness;

  friend bool operator==(const Alcove& a, const Alcove& b) { return a.coords == b.coords; }
  friend bool operator<(const Alcove& a, const Alcove& b) { return a.coords < b.coords; }
};

struct AlcoveHash {
  std::size_t operator()(const Alcove& a) const;
};

/// (alcove, special vertex in its closure, labeling). labeling[s] is the wall
/// labeled by the generator with index s (0 = s_aff).
struct MarkedAlcove {
  Alcove alcove;
  Point vertex;
  std::vector<Hyperplane> labeling;

  friend bool operator==(const MarkedAlcove& a, const MarkedAlcove& b) {
    return a.alcove == b.alcove && a.vertex == b.vertex && a.labeling == b.labeling;
  }
};

using Gallery = std::vector<Alcove>;

/// Open half-space {sign * (<x, alpha> - level) > 0}.
struct HalfSpace {
  Hyperplane plane;
  int sign = 1;
};

/// Intersection of open half-spaces, at most one per positive root. Chambers
/// list a constraint for every positive root, so that each wall family not
/// listed meets the region.
struct Region {
  enum class Kind { HalfSpace, Chamber, OppositeChamber };
  Kind kind = Kind::HalfSpace;
  std::vector<HalfSpace> constraints;
  Point apex;                     // chambers only
  FiniteWeylElement orientation;  // chambers only: region = apex + sign * u(C)
};

// --- points and hyperplanes -------------------------------------------------

Point reflect_point(const RootSystem& rs, const Point& x, const Hyperplane& h);
bool is_special(const RootSystem& rs, const Point& v);
/// Image w(H) with the root sign normalized to positive. Throws DomainError
/// if the image level is not integral (lattice outside the coweight lattice).
Hyperplane image_of_hyperplane(const QuasiCoxeterGroup& g, const GroupElement& w,
                               const Hyperplane& h);
/// The wall of the base alcove fixed by generator s.
Hyperplane base_wall(const RootSystem& rs, std::size_t s);

// --- alcoves ----------------------------------------------------------------

/// Throws PreconditionError if x lies on a hyperplane.
Alcove alcove_containing(const RootSystem& rs, const Point& x);
Alcove base_alcove(const RootSystem& rs);
Alcove alcove_of(const QuasiCoxeterGroup& g, const GroupElement& w);
Alcove reflect_alcove(const RootSystem& rs, const Alcove& a, const Hyperplane& h);

/// +1 iff the alcove lies in {<x, alpha> > level}.
int side_of(const Alcove& a, const Hyperplane& h);
bool separates(const Hyperplane& h, const Alcove& a, const Alcove& b);
std::size_t distance(const Alcove& a, const Alcove& b);
bool adjacent(const Alcove& a, const Alcove& b);
/// The r + 1 walls of the alcove, sorted.
std::vector<Hyperplane> walls(const RootSystem& rs, const Alcove& a);
bool is_wall(const RootSystem& rs, const Alcove& a, const Hyperplane& h);
/// The closure contains v: k_alpha <= <v, alpha> <= k_alpha + 1 for every root.
bool closure_contains(const RootSystem& rs, const Alcove& a, const Point& v);
/// Every alcove at distance <= radius from the center.
std::vector<Alcove> alcove_ball(const RootSystem& rs, const Alcove& center, std::size_t radius);
/// Every alcove whose closure contains v.
std::vector<Alcove> alcoves_at(const RootSystem& rs, const Point& v);

// --- marked alcoves ---------------------------------------------------------

MarkedAlcove base_marking(const QuasiCoxeterGroup& g);
MarkedAlcove marked_alcove_of(const QuasiCoxeterGroup& g, const GroupElement& w);
/// (s_H(A), s_H(v), s_H o t) for H the wall labeled s.
MarkedAlcove reflect_marked(const QuasiCoxeterGroup& g, const MarkedAlcove& m, std::size_t s);

// --- regions ----------------------------------------------------------------

Region half_space(const Hyperplane& h, int sign);
/// apex + sign * u(C) for the dominant cone C. The apex must be special.
Region chamber(const RootSystem& rs, const Point& apex, const FiniteWeylElement& u, int sign = 1);
Region base_chamber(const RootSystem& rs);
Region opposite_base_chamber(const RootSystem& rs);
/// The Weyl chamber at the marked vertex containing the alcove.
Region chamber_of(const RootSystem& rs, const MarkedAlcove& m);

bool region_contains_alcove(const Region& r, const Alcove& a);
bool region_contains_point(const RootSystem& rs, const Region& r, const Point& x);
bool region_closure_contains_point(const RootSystem& rs, const Region& r, const Point& x);
/// Chamber B contains chamber C: both cones, same orientation, apex of C in closure of B.
bool region_contains_region(const RootSystem& rs, const Region& outer, const Region& inner);

struct RegionDistance {
  std::size_t distance = 0;
  Alcove nearest;      // an alcove of the region realizing the distance
  Gallery gallery;     // minimal gallery from the start to `nearest`
};

inline constexpr std::size_t kDefaultRegionNodeCap = 2'000'000;

/// Number of hyperplanes separating the alcove from every alcove of the
/// region. A lower bound for the distance, not always attained: every path
/// from coords (2,2,4) in A2 to s_1(C) must also cross theta-walls.
std::size_t separating_wall_count(const Alcove& a, const Region& r);
/// Greedy crossing of walls that separate the current alcove from the whole
/// region; optimal whenever it arrives, since it then meets the lower bound.
/// When it stalls, an A* search guided by the lower bound finishes exactly.
/// Throws ResourceError if the search visits more than node_cap alcoves.
RegionDistance dist_alcove_region(const RootSystem& rs, const Alcove& a, const Region& r,
                                  std::size_t node_cap = kDefaultRegionNodeCap);
/// Minimum of dist_alcove_region over the alcoves whose closure contains v.
std::size_t dist_vertex_region(const RootSystem& rs, const Point& v, const Region& r,
                               std::size_t node_cap = kDefaultRegionNodeCap);
/// Breadth-first search oracle, bounded by `radius`. Empty if not reached.
std::optional<std::size_t> bfs_dist_alcove_region(const RootSystem& rs, const Alcove& a,
                                                  const Region& r, std::size_t radius);

// --- galleries --------------------------------------------------------------

Gallery minimal_gallery(const RootSystem& rs, const Alcove& a, const Alcove& b);
/// Wall between each consecutive pair; throws PreconditionError on a non-gallery.
std::vector<Hyperplane> intermediate_walls(const Gallery& g);
bool is_gallery(const Gallery& g);
bool is_minimal_gallery(const Gallery& g);
/// Every gallery alcove is on a's side of h, the gallery is minimal, and each
/// intermediate wall separates its alcove from a. Throws PreconditionError
/// unless h is a wall of a.
bool is_umbrella(const RootSystem& rs, const Gallery& g, const Alcove& a, const Hyperplane& h);

/// A reduced word for the translation by 2 rho^vee; cycling it from the base
/// marking walks a minimal infinite gallery inside the dominant chamber.
std::vector<std::size_t> infinite_gallery_word(const QuasiCoxeterGroup& g);

}  // namespace qcox
