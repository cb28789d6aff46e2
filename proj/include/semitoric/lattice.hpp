#pragma once

#include "semitoric/matrix.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace semitoric {

/// A subgroup of Z^d, stored by the unique row-style Hermite normal form of
/// its basis. Equality of sublattices is equality of the stored basis.
class Sublattice {
 public:
  Sublattice() : ambient_(0), basis_(0, 0) {}
  static Sublattice span(const std::vector<IntVec>& gens, int ambient_dim);
  static Sublattice full(int ambient_dim);
  static Sublattice zero(int ambient_dim);
  /// Rows must already be an HNF basis without zero rows (use span otherwise).
  static Sublattice from_hnf_basis(const IntMatrix& basis, int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  std::vector<IntVec> basis_rows() const { return basis_.row_list(); }

  bool contains(const IntVec& v) const;
  /// Coordinates x with v = x * basis, if v lies in the lattice.
  std::optional<IntVec> coordinates(const IntVec& v) const;
  /// The unique representative of v + L with HNF-reduced pivot entries.
  IntVec reduce(const IntVec& v) const;

  /// Smallest saturated sublattice containing this one: (Q L) ∩ Z^d.
  Sublattice saturate() const;
  bool is_saturated() const;
  /// Intersection with the rational span of the given vectors.
  Sublattice intersect_subspace(const std::vector<IntVec>& subspace_gens) const;
  Sublattice sum(const Sublattice& other) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) = default;
  std::strong_ordering operator<=>(const Sublattice& other) const = default;

 private:
  int ambient_;
  IntMatrix basis_;
};

/// Index information for a pair of sublattices of the same ambient lattice.
struct LatticeIndex {
  enum class Kind { finite, infinite, not_contained } kind;
  Int value;  // meaningful only when kind == finite

  static LatticeIndex finite(Int v) { return {Kind::finite, std::move(v)}; }
  static LatticeIndex infinite() { return {Kind::infinite, 0}; }
  static LatticeIndex not_contained() { return {Kind::not_contained, 0}; }
  bool is_finite() const { return kind == Kind::finite; }
};

/// [b : a] for a ⊆ b, distinguishing non-containment from infinite index.
LatticeIndex index_in(const Sublattice& a, const Sublattice& b);

/// A homomorphism of lattices N -> N', acting on column vectors.
struct LatticeHom {
  IntMatrix matrix;  // target_dim x source_dim
  int source_dim() const { return matrix.cols(); }
  int target_dim() const { return matrix.rows(); }

  static LatticeHom from_matrix(const IntMatrix& m) { return LatticeHom{m}; }
  static LatticeHom identity(int dim) { return LatticeHom{IntMatrix::identity(dim)}; }

  IntVec apply(const IntVec& v) const { return mat_apply(matrix, v); }
  /// The transpose map between the dual lattices M' -> M.
  IntVec apply_transpose_vec(const IntVec& m) const {
    return mat_apply(matrix.transposed(), m);
  }
  LatticeHom compose(const LatticeHom& inner) const {
    return LatticeHom{mat_mul(matrix, inner.matrix)};
  }
};

/// Image of a sublattice of the target's dual under the transpose map.
Sublattice apply_transpose(const LatticeHom& hom, const Sublattice& target_dual_lattice);

}  // namespace semitoric
