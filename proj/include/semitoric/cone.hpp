#pragma once

#include "semitoric/lattice.hpp"
#include "semitoric/linear.hpp"

#include <compare>
#include <vector>

namespace semitoric {

enum class Containment { closed, relative_interior };

/// Coordinates for Z^d modulo a saturated sublattice: the quotient is free
/// and the section produces a canonical lift.
struct QuotientMap {
  int from_dim = 0;
  int to_dim = 0;
  IntMatrix proj;     // from_dim x to_dim, applied as v * proj
  IntMatrix section;  // to_dim x from_dim, applied as q * section

  IntVec apply(const IntVec& v) const { return row_apply(v, proj); }
  IntVec lift(const IntVec& q) const { return row_apply(q, section); }
};
QuotientMap quotient_by(const Sublattice& saturated_kernel);

/// A rational simplicial cone: independent primitive rays in lex order.
/// The zero cone is the cone with no rays.
class SimplicialCone {
 public:
  SimplicialCone() : ambient_(0) {}
  SimplicialCone(int ambient_dim, std::vector<IntVec> canonical_rays)
      : ambient_(ambient_dim), rays_(std::move(canonical_rays)) {}

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rays_.size()); }
  const std::vector<IntVec>& rays() const { return rays_; }
  bool is_zero() const { return rays_.empty(); }

  friend bool operator==(const SimplicialCone& a, const SimplicialCone& b) = default;
  auto operator<=>(const SimplicialCone& other) const = default;

 private:
  int ambient_;
  std::vector<IntVec> rays_;
};

/// Primitivize, sort and check independence. Throws DependentRays.
SimplicialCone make_cone(std::vector<IntVec> rays, int ambient_dim);
SimplicialCone zero_cone(int ambient_dim);

/// All 2^k faces (ray subsets), ordered by dimension then lex.
std::vector<SimplicialCone> faces(const SimplicialCone& sigma);
bool is_face_of(const SimplicialCone& tau, const SimplicialCone& sigma);

/// Exact membership for a simplicial cone: solves the ray coordinates.
bool simplicial_contains(const SimplicialCone& sigma, const IntVec& v, Containment mode);

/// The unique face with v in its relative interior. Throws NotInCone.
SimplicialCone minimal_face_containing(const SimplicialCone& sigma, const IntVec& v);

/// A rational cone given as canonical rays plus a lineality space:
/// cone = Cone(rays) + span(lineality). Rays are primitive, reduced to the
/// canonical representative modulo lineality, non-redundant and sorted; the
/// facet description is precomputed and exact.
class GenCone {
 public:
  GenCone() : ambient_(0) {}
  static GenCone from_rays_lineality(const std::vector<IntVec>& rays,
                                     const std::vector<IntVec>& lineality_gens, int ambient_dim);
  /// Cone positively generated by arbitrary vectors; the lineality space is
  /// detected automatically.
  static GenCone from_generators(const std::vector<IntVec>& gens, int ambient_dim);
  static GenCone zero(int ambient_dim);
  static GenCone full(int ambient_dim);
  static GenCone of_simplicial(const SimplicialCone& sigma);

  int ambient_dim() const { return ambient_; }
  /// Dimension of the linear span.
  int dim() const { return static_cast<int>(rays_.size()) == 0 && lineality_.rank() == 0
                        ? 0
                        : span_dim_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const Sublattice& lineality_lattice() const { return lineality_; }
  const std::vector<IntVec>& facet_normals() const { return facet_normals_; }
  /// Basis rows of span(cone)^perp; membership requires these to vanish.
  const IntMatrix& span_equations() const { return span_perp_; }

  bool contains(const IntVec& v, Containment mode) const;
  /// Indices of facets vanishing on v (precondition: closed containment).
  std::vector<int> tight_facets(const IntVec& v) const;
  /// The face cut out by the given facets: rays on all of them + lineality.
  GenCone face_from_tight(const std::vector<int>& facet_indices) const;
  /// The minimal face containing v; throws NotInCone.
  GenCone minimal_face(const IntVec& v) const;
  /// All faces, ordered by dimension then rays.
  std::vector<GenCone> faces() const;
  GenCone dual() const;
  bool is_pointed() const { return lineality_.rank() == 0; }

  friend bool operator==(const GenCone& a, const GenCone& b);
  std::strong_ordering operator<=>(const GenCone& other) const;

 private:
  int ambient_ = 0;
  int span_dim_ = 0;
  std::vector<IntVec> rays_;
  Sublattice lineality_;               // saturated
  std::vector<IntVec> facet_normals_;  // canonical, vanish on lineality
  IntMatrix span_perp_;
  void compute_derived();
};

/// sigma^vee = { m : <m, n> >= 0 for all n in sigma }.
GenCone dual_cone(const SimplicialCone& sigma);
/// sigma^vee ∩ tau^perp for a face tau of sigma. Throws NotAFace.
GenCone tau_star(const SimplicialCone& sigma, const SimplicialCone& tau);
/// m ∩ tau^perp.
Sublattice perp_lattice(const SimplicialCone& tau, const Sublattice& m);
bool cone_contains(const GenCone& c, const IntVec& v, Containment mode);

/// Canonical strictly positive grading on the pointed part: the sum of the
/// canonical rays of the dual cone. Vanishes exactly on the lineality space.
IntVec positive_grading(const GenCone& c);

}  // namespace semitoric
