#include "toricq/cones.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toricq/errors.hpp"

namespace toricq {

namespace {

// Calls f(subset) for every k-subset of {0..n-1}, in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<IntVector> dedupe_primitive(std::size_t rank, const std::vector<IntVector>& generators) {
  std::vector<IntVector> out;
  std::set<IntVector> seen;
  for (const auto& g : generators) {
    if (g.size() != rank) throw InvalidRayError("generator " + to_string(g) + " has wrong length");
    IntVector p = primitive_vector(g);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

DualDescription hull_dual_description(std::size_t rank, const std::vector<IntVector>& generators) {
  DualDescription dual;
  IntMatrix g = IntMatrix::from_rows(rank, generators);
  dual.span_equations = kernel_basis(g);
  // Saturated basis of the span; normals are taken inside it.
  std::vector<IntVector> span = kernel_basis(IntMatrix::from_rows(rank, dual.span_equations));
  const std::size_t k = span.size();
  if (k == 0) return dual;
  IntMatrix span_t = IntMatrix::from_columns(rank, span);  // rank x k

  std::set<IntVector> normals;
  for_each_subset(generators.size(), k - 1, [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVector> rows;
    for (std::size_t i : subset) rows.push_back(generators[i]);
    IntMatrix s = IntMatrix::from_rows(rank, rows) * span_t;  // (k-1) x k
    std::vector<IntVector> ker = kernel_basis(s);
    if (ker.size() != 1) return;
    IntVector u = primitive_vector(span_t * ker.front());
    bool pos = false, neg = false;
    for (const auto& gen : generators) {
      const int s = sgn(dot(u, gen));
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) return;
    if (neg) u = negate(u);
    normals.insert(std::move(u));
  });
  dual.facet_normals.assign(normals.begin(), normals.end());
  return dual;
}

Cone::Cone(std::size_t rank) : rank_(rank) {
  for (std::size_t i = 0; i < rank; ++i) {
    IntVector e(rank);
    e[i] = 1;
    dual_.span_equations.push_back(std::move(e));
  }
}

bool operator==(const Cone& a, const Cone& b) {
  if (a.rank_ != b.rank_ || a.rays_.size() != b.rays_.size()) return false;
  std::vector<IntVector> ra = a.rays_, rb = b.rays_;
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

Cone cone_from_rays(std::size_t rank, const std::vector<IntVector>& generators) {
  std::vector<IntVector> gens = dedupe_primitive(rank, generators);
  Cone c(rank);
  if (gens.empty()) return c;

  DualDescription dual = hull_dual_description(rank, gens);
  const std::size_t k = rank - dual.span_equations.size();
  if (toricq::rank(IntMatrix::from_rows(rank, dual.facet_normals)) != k)
    throw StrongConvexityError("cone generated by these vectors contains a line");

  // In a pointed cone of dimension k, a generator is extreme exactly when the
  // facets through it cut out a (k-1)-dimensional space.
  for (const auto& g : gens) {
    std::vector<IntVector> tight;
    for (const auto& u : dual.facet_normals)
      if (dot(u, g) == 0) tight.push_back(u);
    if (toricq::rank(IntMatrix::from_rows(rank, tight)) + 1 == k) c.rays_.push_back(g);
  }
  c.dim_ = k;
  c.dual_ = std::move(dual);
  return c;
}

DualDescription dual_description(const Cone& c) { return c.dual(); }

bool satisfies(const DualDescription& dual, const IntVector& p) {
  for (const auto& e : dual.span_equations)
    if (dot(e, p) != 0) return false;
  for (const auto& u : dual.facet_normals)
    if (dot(u, p) < 0) return false;
  return true;
}

bool contains_point(const Cone& c, const IntVector& p) {
  if (p.size() != c.ambient_rank()) throw ShapeError("contains_point: point has wrong length");
  return satisfies(c.dual(), p);
}

bool contains_point(const Cone& c, const RatVector& p) {
  if (p.size() != c.ambient_rank()) throw ShapeError("contains_point: point has wrong length");
  return satisfies(c.dual(), clear_denominators(p));
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw ShapeError("intersect: ambient ranks differ");
  const std::size_t n = a.ambient_rank();

  // Work inside the common linear span L, with coordinates y -> basis * y.
  std::vector<IntVector> eqs = a.span_equations();
  eqs.insert(eqs.end(), b.span_equations().begin(), b.span_equations().end());
  std::vector<IntVector> lbasis = kernel_basis(IntMatrix::from_rows(n, eqs));
  const std::size_t k = lbasis.size();
  if (k == 0) return Cone(n);
  IntMatrix basis = IntMatrix::from_columns(n, lbasis);  // n x k

  std::set<IntVector> cons;
  for (const Cone* c : {&a, &b})
    for (const auto& u : c->facet_normals()) {
      IntVector r = basis.transpose() * u;
      if (!is_zero(r)) cons.insert(primitive_vector(r));
    }
  std::vector<IntVector> constraints(cons.begin(), cons.end());

  auto feasible = [&](const IntVector& y) {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const IntVector& u) { return dot(u, y) >= 0; });
  };

  // Extreme rays of a pointed cone {y : <u,y> >= 0} in Q^k are the feasible
  // lines cut out by k-1 independent tight constraints.
  std::vector<IntVector> rays;
  for_each_subset(constraints.size(), k - 1, [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVector> rows;
    for (std::size_t i : subset) rows.push_back(constraints[i]);
    std::vector<IntVector> ker = kernel_basis(IntMatrix::from_rows(k, rows));
    if (ker.size() != 1) return;
    for (const IntVector& y : {ker.front(), negate(ker.front())})
      if (feasible(y)) rays.push_back(basis * y);
  });
  return cone_from_rays(n, rays);
}

bool is_face_of(const Cone& f, const Cone& c) {
  if (f.ambient_rank() != c.ambient_rank()) throw ShapeError("is_face_of: ambient ranks differ");
  for (const auto& r : f.rays())
    if (!contains_point(c, r)) return false;
  std::vector<const IntVector*> tight;
  for (const auto& u : c.facet_normals())
    if (std::all_of(f.rays().begin(), f.rays().end(), [&](const IntVector& r) { return dot(u, r) == 0; }))
      tight.push_back(&u);
  std::set<IntVector> face_rays;
  for (const auto& r : c.rays())
    if (std::all_of(tight.begin(), tight.end(), [&](const IntVector* u) { return dot(*u, r) == 0; }))
      face_rays.insert(r);
  std::set<IntVector> frays(f.rays().begin(), f.rays().end());
  return face_rays == frays;
}

std::vector<std::vector<std::size_t>> face_ray_subsets(const Cone& c) {
  const auto& rays = c.rays();
  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) all[i] = i;

  // Close {all rays} under "keep the rays on one more facet".
  std::vector<std::vector<std::size_t>> out{all};
  std::set<std::vector<std::size_t>> seen{all};
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    for (const auto& u : c.facet_normals()) {
      std::vector<std::size_t> next;
      for (std::size_t i : out[pos])
        if (dot(u, rays[i]) == 0) next.push_back(i);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<Cone> faces(const Cone& c) {
  std::vector<Cone> out;
  for (const auto& subset : face_ray_subsets(c)) {
    std::vector<IntVector> gens;
    for (std::size_t i : subset) gens.push_back(c.rays()[i]);
    out.push_back(cone_from_rays(c.ambient_rank(), gens));
  }
  return out;
}

std::size_t dim(const Cone& c) { return c.dim(); }

bool is_simplicial(const Cone& c) { return c.rays().size() == c.dim(); }

IntMatrix ray_matrix(const Cone& c) { return IntMatrix::from_columns(c.ambient_rank(), c.rays()); }

bool is_smooth(const Cone& c) {
  if (!is_simplicial(c)) return false;
  for (const auto& f : smith_normal_form(ray_matrix(c)).invariant_factors())
    if (f != 1) return false;
  return true;
}

}  // namespace toricq
