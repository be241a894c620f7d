#pragma once

// Fans in N = Z^rank: validation, face closure, the nondegeneracy and
// convex-support hypotheses, completeness, and maps of fans.

#include <cstddef>
#include <optional>
#include <vector>

#include "toricq/cones.hpp"

namespace toricq {

/// A cone of a fan, remembered by the (sorted) indices of its rays in the
/// fan's ray list.
struct FanCone {
  std::vector<std::size_t> rays;
  Cone cone;
};

class Fan {
 public:
  /// Rays and maximal cones given by index. The ray order is kept as given and
  /// fixes the coordinates of the Cox construction. Throws InvalidFanError on
  /// malformed data, OverlapError / ContainmentError on fan-axiom violations.
  Fan(std::size_t rank, std::vector<IntVector> rays, const std::vector<std::vector<std::size_t>>& max_cones);

  std::size_t rank() const { return rank_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<FanCone>& max_cones() const { return max_cones_; }
  /// Face closure of the maximal cones, sorted by dimension then ray indices.
  const std::vector<FanCone>& cones() const { return cones_; }

 private:
  std::size_t rank_;
  std::vector<IntVector> rays_;
  std::vector<FanCone> max_cones_;
  std::vector<FanCone> cones_;
};

/// Builds a fan from explicit cones; rays are numbered by first appearance.
Fan fan_from_max_cones(std::size_t rank, const std::vector<Cone>& cones);

/// Rays as the columns of a rank x m matrix (the map Z^m -> N).
IntMatrix ray_matrix(const Fan& f);

/// The rays span N ⊗ Q.
bool is_nondegenerate(const Fan& f);

struct Wall {
  std::vector<std::size_t> rays;
  Cone face;
  /// Indices into max_cones() of the full-dimensional cones containing it.
  std::vector<std::size_t> incident;
};

std::vector<Wall> walls(const Fan& f);

/// All maximal cones have dimension rank.
bool is_pure_full_dimensional(const Fan& f);
bool is_complete(const Fan& f);

enum class SupportVerdict { convex, not_convex, not_certified };

struct ConvexSupportReport {
  SupportVerdict verdict = SupportVerdict::not_certified;
  /// For not_convex: a point of cone(all rays) lying in no cone of the fan.
  std::optional<RatVector> witness;
  /// For not_convex: ray indices of a boundary wall that is not on the
  /// boundary of cone(all rays).
  std::optional<std::vector<std::size_t>> offending_wall;
};

/// Decides whether |f| = cone(all rays) through the boundary walls. Fans that
/// are not pure full-dimensional after restricting to the span of their rays
/// come back as not_certified.
ConvexSupportReport convex_support_report(const Fan& f);

/// Throws UnsupportedShapeError where the report is not_certified.
bool has_convex_support(const Fan& f);

/// Convex support, which is a sufficient condition for the variety to have
/// no small holes. Unsupported shapes are reported as false.
bool has_no_small_holes_sufficient(const Fan& f);

/// Does the lattice map F (rank2 x rank1) send every cone of f1 into some
/// cone of f2?
bool is_map_of_fans(const IntMatrix& map, const Fan& f1, const Fan& f2);

/// Is p in some cone of f?
bool support_contains(const Fan& f, const IntVector& p);

std::string to_string(SupportVerdict v);

}  // namespace toricq
