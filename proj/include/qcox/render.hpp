#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qcox/geometry.hpp"
#include "qcox/group.hpp"

namespace qcox {

enum class Shade { None, Dominant, Antidominant };

/// Rank-2 alcove picture. Fill roles, by priority: base, class, gallery,
/// shaded chamber, plain.
struct FigureSpec {
  std::size_t radius = 3;                  // alcoves with -radius <= k_alpha < radius
  std::vector<GroupElement> class_members; // alcoves w(A) drawn as "class"
  std::vector<Alcove> gallery;             // drawn as "gallery"
  Shade shade = Shade::None;
  double scale = 60.0;                     // pixels per unit length
};

/// Euclidean embedding of simple-coroot coordinates: x -> L^T x where
/// L L^T is the Gram matrix (alpha_i^vee, alpha_j^vee) = a_ij d_j.
class Embedding {
 public:
  explicit Embedding(const RootSystem& rs);
  std::array<double, 2> operator()(const Point& x) const;

 private:
  double l11_ = 0, l21_ = 0, l22_ = 0;
};

/// Alcoves with every coordinate in [-radius, radius), sorted.
std::vector<Alcove> alcoves_in_box(const RootSystem& rs, std::size_t radius);
/// Vertices of a rank-2 alcove, exact, sorted.
std::vector<Point> alcove_vertices(const RootSystem& rs, const Alcove& a);

/// Byte-deterministic SVG 1.1 document. Throws PreconditionError unless rank 2.
std::string render_svg(const QuasiCoxeterGroup& g, const FigureSpec& spec);

}  // namespace qcox
