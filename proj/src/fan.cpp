#include "semitoric/fan.hpp"

#include "semitoric/errors.hpp"

#include <algorithm>
#include <set>

namespace semitoric {

bool Fan::has_cone(const SimplicialCone& c) const {
  return std::binary_search(cones_.begin(), cones_.end(), c,
                            [](const SimplicialCone& a, const SimplicialCone& b) {
                              if (a.dim() != b.dim()) return a.dim() < b.dim();
                              return a.rays() < b.rays();
                            });
}

namespace {

bool cone_order(const SimplicialCone& a, const SimplicialCone& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.rays() < b.rays();
}

}  // namespace

Fan fan_from_max_cones(const std::vector<SimplicialCone>& max_cones, int ambient_dim) {
  for (const SimplicialCone& c : max_cones)
    if (c.ambient_dim() != ambient_dim)
      throw DimensionMismatch("fan_from_max_cones: ambient dimension mismatch");

  std::set<SimplicialCone> closure;
  closure.insert(zero_cone(ambient_dim));
  for (const SimplicialCone& c : max_cones)
    for (const SimplicialCone& f : faces(c)) closure.insert(f);

  std::vector<SimplicialCone> cones(closure.begin(), closure.end());
  std::sort(cones.begin(), cones.end(), cone_order);

  // Two cones intersect in a common face iff no pair of distinct faces has
  // overlapping relative interiors.
  std::vector<SimplicialCone> dedup_max;
  for (const SimplicialCone& c : max_cones) {
    bool is_maximal = true;
    for (const SimplicialCone& other : max_cones)
      if (other != c && is_face_of(c, other)) {
        is_maximal = false;
        break;
      }
    if (is_maximal && std::find(dedup_max.begin(), dedup_max.end(), c) == dedup_max.end())
      dedup_max.push_back(c);
  }
  for (size_t a = 0; a < dedup_max.size(); ++a)
    for (size_t b = a + 1; b < dedup_max.size(); ++b) {
      for (const SimplicialCone& fa : faces(dedup_max[a]))
        for (const SimplicialCone& fb : faces(dedup_max[b])) {
          if (fa == fb) continue;
          if (relint_intersects(fa.rays(), fb.rays(), ambient_dim))
            throw NotAFan("fan_from_max_cones: cones " + std::to_string(a) + " and " +
                          std::to_string(b) + " do not intersect in a common face");
        }
    }

  std::sort(dedup_max.begin(), dedup_max.end(), cone_order);
  return Fan(ambient_dim, std::move(cones), std::move(dedup_max));
}

std::optional<SimplicialCone> minimal_cone_containing(const Fan& fan,
                                                      const std::vector<IntVec>& points) {
  std::optional<SimplicialCone> best;
  for (const SimplicialCone& c : fan.cones()) {
    bool all = true;
    for (const IntVec& p : points)
      if (!simplicial_contains(c, p, Containment::closed)) {
        all = false;
        break;
      }
    if (!all) continue;
    if (!best || c.dim() < best->dim()) best = c;
  }
  return best;
}

FanHomCheck fan_hom_check(const LatticeHom& phi, const Fan& source, const Fan& target) {
  if (phi.source_dim() != source.ambient_dim() || phi.target_dim() != target.ambient_dim())
    throw DimensionMismatch("fan_hom_check: dimension mismatch");
  FanHomCheck result;
  result.ok = true;
  for (const SimplicialCone& sigma : source.maximal_cones()) {
    std::vector<IntVec> images;
    for (const IntVec& r : sigma.rays()) images.push_back(phi.apply(r));
    auto best = minimal_cone_containing(target, images);
    if (!best) {
      result.ok = false;
      result.failing_cone = sigma;
      result.image_cone.clear();
      return result;
    }
    result.image_cone.emplace(sigma, *best);
  }
  return result;
}

}  // namespace semitoric
