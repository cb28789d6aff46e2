#pragma once

#include "semitoric/cone.hpp"

#include <map>
#include <optional>
#include <vector>

namespace semitoric {

/// A finite collection of simplicial cones closed under faces, any two of
/// which intersect in a common face. Always contains the zero cone.
class Fan {
 public:
  Fan() : ambient_(0) {}
  Fan(int ambient_dim, std::vector<SimplicialCone> cones, std::vector<SimplicialCone> maximal)
      : ambient_(ambient_dim), cones_(std::move(cones)), maximal_(std::move(maximal)) {}

  int ambient_dim() const { return ambient_; }
  const std::vector<SimplicialCone>& cones() const { return cones_; }
  const std::vector<SimplicialCone>& maximal_cones() const { return maximal_; }
  bool has_cone(const SimplicialCone& c) const;

  friend bool operator==(const Fan& a, const Fan& b) = default;

 private:
  int ambient_;
  std::vector<SimplicialCone> cones_;    // sorted by (dim, rays)
  std::vector<SimplicialCone> maximal_;  // subset of cones_, same order
};

/// Face closure plus the pairwise common-face check; throws NotAFan naming
/// the offending pair.
Fan fan_from_max_cones(const std::vector<SimplicialCone>& max_cones, int ambient_dim);

struct FanHomCheck {
  bool ok = false;
  /// For each maximal cone of the source, the minimal cone of the target
  /// containing its image (present only when ok).
  std::map<SimplicialCone, SimplicialCone> image_cone;
  std::optional<SimplicialCone> failing_cone;
};

/// Does phi map every maximal cone of sigma-fan into some cone of the
/// target fan? Certificate maps each maximal cone to the minimal image cone.
FanHomCheck fan_hom_check(const LatticeHom& phi, const Fan& source, const Fan& target);

/// Minimal cone of the fan containing all the given points, if any.
std::optional<SimplicialCone> minimal_cone_containing(const Fan& fan,
                                                      const std::vector<IntVec>& points);

}  // namespace semitoric
