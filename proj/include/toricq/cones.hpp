#pragma once

// Strongly convex rational polyhedral cones in a lattice N = Z^rank.
//
// A Cone is always constructed through cone_from_rays, which primitivizes
// the generators, drops the ones that are not extreme and computes the dual
// description eagerly. Facets are found by brute force over (dim-1)-subsets
// of the extreme rays, which is fine for the dozen-ray cones we deal with.

#include <cstddef>
#include <vector>

#include "toricq/intlin.hpp"

namespace toricq {

/// Inequalities and equations cutting out a cone inside Q^rank:
/// {x : <e, x> = 0 for all equations e, <u, x> >= 0 for all facet normals u}.
/// Facet normals are chosen inside the linear span of the cone.
struct DualDescription {
  std::vector<IntVector> facet_normals;
  std::vector<IntVector> span_equations;
};

class Cone {
 public:
  /// The zero cone in `rank` dimensions.
  explicit Cone(std::size_t rank = 0);

  std::size_t ambient_rank() const { return rank_; }
  /// Primitive extreme rays, in order of first appearance among the generators.
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& facet_normals() const { return dual_.facet_normals; }
  const std::vector<IntVector>& span_equations() const { return dual_.span_equations; }
  const DualDescription& dual() const { return dual_; }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return rays_.empty(); }

  /// Same ambient rank and same set of rays.
  friend bool operator==(const Cone& a, const Cone& b);

 private:
  friend Cone cone_from_rays(std::size_t rank, const std::vector<IntVector>& generators);

  std::size_t rank_;
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  DualDescription dual_;
};

/// Throws InvalidRayError on a zero generator or wrong length, and
/// StrongConvexityError when the generators span a cone containing a line.
Cone cone_from_rays(std::size_t rank, const std::vector<IntVector>& generators);

DualDescription dual_description(const Cone& c);

/// Facets and span equations of cone(generators), which may contain lines.
/// Generators must be nonzero.
DualDescription hull_dual_description(std::size_t rank, const std::vector<IntVector>& generators);

bool contains_point(const Cone& c, const RatVector& p);
bool contains_point(const Cone& c, const IntVector& p);
/// Does p satisfy every constraint in `dual`?
bool satisfies(const DualDescription& dual, const IntVector& p);

Cone intersect(const Cone& a, const Cone& b);

bool is_face_of(const Cone& f, const Cone& c);

/// Every face of c exactly once, as index sets into c.rays() (sorted).
/// The first entry is c itself; the zero face is always present.
std::vector<std::vector<std::size_t>> face_ray_subsets(const Cone& c);
std::vector<Cone> faces(const Cone& c);

std::size_t dim(const Cone& c);
bool is_simplicial(const Cone& c);
/// Simplicial, with rays extending to a lattice basis.
bool is_smooth(const Cone& c);

/// Rays as the columns of a rank x #rays matrix.
IntMatrix ray_matrix(const Cone& c);

}  // namespace toricq
