#include "toricq/fans.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "toricq/errors.hpp"

namespace toricq {

namespace {

std::string cone_label(std::size_t i) { return "cone " + std::to_string(i); }

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Fan::Fan(std::size_t rank, std::vector<IntVector> rays, const std::vector<std::vector<std::size_t>>& max_cones)
    : rank_(rank), rays_(std::move(rays)) {
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const IntVector& r = rays_[i];
    if (r.size() != rank_)
      throw InvalidFanError("ray " + std::to_string(i) + " has " + std::to_string(r.size()) +
                            " coordinates, expected " + std::to_string(rank_));
    Integer g = gcd(r);
    if (g == 0) throw InvalidFanError("ray " + std::to_string(i) + " is the zero vector");
    if (g != 1)
      throw InvalidFanError("ray " + std::to_string(i) + " = " + to_string(r) +
                            " is not primitive; use " + to_string(primitive_vector(r)));
    if (!index.emplace(r, i).second)
      throw InvalidFanError("ray " + std::to_string(i) + " duplicates ray " + std::to_string(index[r]));
  }

  std::vector<bool> used(rays_.size(), false);
  for (std::size_t c = 0; c < max_cones.size(); ++c) {
    std::vector<std::size_t> idx = max_cones[c];
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw InvalidFanError(cone_label(c) + " lists a ray twice");
    std::vector<IntVector> gens;
    for (std::size_t i : idx) {
      if (i >= rays_.size())
        throw InvalidFanError(cone_label(c) + " refers to missing ray " + std::to_string(i));
      gens.push_back(rays_[i]);
      used[i] = true;
    }
    Cone cone(rank_);
    try {
      cone = cone_from_rays(rank_, gens);
    } catch (const StrongConvexityError&) {
      throw InvalidFanError(cone_label(c) + " is not strongly convex");
    }
    if (cone.rays().size() != idx.size())
      throw InvalidFanError(cone_label(c) + " lists a ray that is not an extreme ray of the cone");
    max_cones_.push_back({std::move(idx), std::move(cone)});
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw InvalidFanError("ray " + std::to_string(i) + " lies in no cone");

  for (std::size_t i = 0; i < max_cones_.size(); ++i)
    for (std::size_t j = i + 1; j < max_cones_.size(); ++j) {
      const Cone& a = max_cones_[i].cone;
      const Cone& b = max_cones_[j].cone;
      Cone meet = intersect(a, b);
      if (!is_face_of(meet, a) || !is_face_of(meet, b))
        throw OverlapError(i, j,
                           "cones " + std::to_string(i) + " and " + std::to_string(j) +
                               " intersect in a cone that is not a common face");
    }

  // A maximal cone that is a face of another one.
  for (std::size_t i = 0; i < max_cones_.size(); ++i)
    for (std::size_t j = 0; j < max_cones_.size(); ++j) {
      if (i == j) continue;
      const Cone& a = max_cones_[i].cone;
      const Cone& b = max_cones_[j].cone;
      if (std::all_of(a.rays().begin(), a.rays().end(), [&](const IntVector& r) { return contains_point(b, r); }))
        throw ContainmentError(i, j, cone_label(i) + " is contained in " + cone_label(j));
    }

  // Face closure, deduplicated by ray index set.
  std::set<std::vector<std::size_t>> seen;
  std::vector<FanCone> all;
  for (const auto& mc : max_cones_) {
    std::map<IntVector, std::size_t> local;
    for (std::size_t i : mc.rays) local[rays_[i]] = i;
    for (const auto& subset : face_ray_subsets(mc.cone)) {
      std::vector<std::size_t> ids;
      std::vector<IntVector> gens;
      for (std::size_t p : subset) {
        ids.push_back(local.at(mc.cone.rays()[p]));
        gens.push_back(mc.cone.rays()[p]);
      }
      std::sort(ids.begin(), ids.end());
      if (!seen.insert(ids).second) continue;
      all.push_back({ids, cone_from_rays(rank_, gens)});
    }
  }
  if (max_cones_.empty()) all.push_back({{}, Cone(rank_)});
  std::sort(all.begin(), all.end(), [](const FanCone& a, const FanCone& b) {
    if (a.cone.dim() != b.cone.dim()) return a.cone.dim() < b.cone.dim();
    return a.rays < b.rays;
  });
  cones_ = std::move(all);
}

Fan fan_from_max_cones(std::size_t rank, const std::vector<Cone>& cones) {
  std::vector<IntVector> rays;
  std::map<IntVector, std::size_t> index;
  std::vector<std::vector<std::size_t>> idx;
  for (const auto& c : cones) {
    if (c.ambient_rank() != rank) throw ShapeError("fan_from_max_cones: cone has wrong ambient rank");
    std::vector<std::size_t> ids;
    for (const auto& r : c.rays()) {
      auto [it, fresh] = index.emplace(r, rays.size());
      if (fresh) rays.push_back(r);
      ids.push_back(it->second);
    }
    idx.push_back(std::move(ids));
  }
  return Fan(rank, std::move(rays), idx);
}

IntMatrix ray_matrix(const Fan& f) { return IntMatrix::from_columns(f.rank(), f.rays()); }

bool is_nondegenerate(const Fan& f) { return rank(ray_matrix(f)) == f.rank(); }

std::vector<Wall> walls(const Fan& f) {
  std::vector<Wall> out;
  if (f.rank() == 0) return out;
  for (const auto& c : f.cones()) {
    if (c.cone.dim() + 1 != f.rank()) continue;
    Wall w{c.rays, c.cone, {}};
    for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
      const auto& m = f.max_cones()[i];
      if (m.cone.dim() == f.rank() && is_subset(c.rays, m.rays)) w.incident.push_back(i);
    }
    out.push_back(std::move(w));
  }
  return out;
}

bool is_pure_full_dimensional(const Fan& f) {
  return std::all_of(f.max_cones().begin(), f.max_cones().end(),
                     [&](const FanCone& c) { return c.cone.dim() == f.rank(); });
}

bool is_complete(const Fan& f) {
  if (f.max_cones().empty() || !is_pure_full_dimensional(f)) return false;
  for (const auto& w : walls(f))
    if (w.incident.size() != 2) return false;
  return true;
}

bool support_contains(const Fan& f, const IntVector& p) {
  for (const auto& c : f.max_cones())
    if (contains_point(c.cone, p)) return true;
  return f.max_cones().empty() && is_zero(p);
}

namespace {

// Convex-support test for a pure full-dimensional fan. Because the support
// is closed and its boundary lies in the boundary walls, it equals
// C = cone(all rays) as soon as every boundary wall sits in a facet of C.
ConvexSupportReport full_dimensional_report(const Fan& f) {
  ConvexSupportReport report;
  DualDescription hull = hull_dual_description(f.rank(), f.rays());
  for (const auto& w : walls(f)) {
    if (w.incident.size() != 1) continue;
    bool on_boundary = std::any_of(hull.facet_normals.begin(), hull.facet_normals.end(), [&](const IntVector& u) {
      return std::all_of(w.rays.begin(), w.rays.end(), [&](std::size_t i) { return dot(u, f.rays()[i]) == 0; });
    });
    if (on_boundary) continue;

    // Witness: step off the wall's centre to the side away from its only
    // cone, then push outward along the centre until the point is inside C
    // and misses every cone.
    const Cone& sigma = f.max_cones()[w.incident.front()].cone;
    IntVector centre(f.rank());
    for (std::size_t i : w.rays) centre = add(centre, f.rays()[i]);
    IntVector normal;
    for (const auto& u : sigma.facet_normals())
      if (std::all_of(w.rays.begin(), w.rays.end(), [&](std::size_t i) { return dot(u, f.rays()[i]) == 0; }))
        normal = u;
    if (normal.empty()) throw InternalConsistencyError("boundary wall is not a facet of its cone");
    for (Integer t = 1; t < Integer(1) << 62; t *= 2) {
      IntVector p = add(scale(centre, t), negate(normal));
      if (satisfies(hull, p) && !support_contains(f, p)) {
        report.verdict = SupportVerdict::not_convex;
        report.witness = RatVector(p.begin(), p.end());
        report.offending_wall = w.rays;
        return report;
      }
    }
    throw InternalConsistencyError("no witness found for a non-convex support");
  }
  report.verdict = SupportVerdict::convex;
  return report;
}

}  // namespace

ConvexSupportReport convex_support_report(const Fan& f) {
  ConvexSupportReport report;
  if (f.rays().empty()) {
    report.verdict = SupportVerdict::convex;
    return report;
  }
  IntMatrix rays = ray_matrix(f);
  if (rank(rays) == f.rank()) {
    if (!is_pure_full_dimensional(f)) return report;
    return full_dimensional_report(f);
  }

  // Restrict to the saturated span of the rays and recurse there.
  IntMatrix basis = saturation(rays);  // rank x k
  const std::size_t k = basis.cols();
  std::vector<IntVector> coords;
  for (const auto& r : f.rays()) {
    auto y = solve_integer(basis, r);
    if (!y) throw InternalConsistencyError("ray outside the saturated span of the rays");
    coords.push_back(*y);
  }
  std::vector<std::vector<std::size_t>> idx;
  for (const auto& c : f.max_cones()) idx.push_back(c.rays);
  Fan reduced(k, std::move(coords), idx);
  if (!is_pure_full_dimensional(reduced)) return report;
  report = full_dimensional_report(reduced);
  if (report.witness) {
    IntVector y = clear_denominators(*report.witness);
    IntVector x = basis * y;
    report.witness = RatVector(x.begin(), x.end());
  }
  return report;
}

bool has_convex_support(const Fan& f) {
  ConvexSupportReport r = convex_support_report(f);
  if (r.verdict == SupportVerdict::not_certified)
    throw UnsupportedShapeError("fan is not pure full-dimensional in the span of its rays");
  return r.verdict == SupportVerdict::convex;
}

bool has_no_small_holes_sufficient(const Fan& f) {
  return convex_support_report(f).verdict == SupportVerdict::convex;
}

bool is_map_of_fans(const IntMatrix& map, const Fan& f1, const Fan& f2) {
  if (map.rows() != f2.rank() || map.cols() != f1.rank())
    throw ShapeError("is_map_of_fans: map is " + std::to_string(map.rows()) + "x" + std::to_string(map.cols()) +
                     ", expected " + std::to_string(f2.rank()) + "x" + std::to_string(f1.rank()));
  for (const auto& sigma : f1.max_cones()) {
    std::vector<IntVector> images;
    for (const auto& r : sigma.cone.rays()) images.push_back(map * r);
    bool hit = std::any_of(f2.cones().begin(), f2.cones().end(), [&](const FanCone& tau) {
      return std::all_of(images.begin(), images.end(),
                         [&](const IntVector& p) { return contains_point(tau.cone, p); });
    });
    if (!hit) return false;
  }
  return true;
}

std::string to_string(SupportVerdict v) {
  switch (v) {
    case SupportVerdict::convex:
      return "true";
    case SupportVerdict::not_convex:
      return "false";
    case SupportVerdict::not_certified:
      return "not-certified";
  }
  return "not-certified";
}

}  // namespace toricq
