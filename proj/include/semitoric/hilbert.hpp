#pragma once

#include "semitoric/monoid.hpp"

namespace semitoric {

/// Minimal generating set of C ∩ L, canonically sorted. The pointed part is
/// computed from parallelepiped lattice points of a triangulation of the
/// cone; the lineality part contributes ±(basis of L ∩ lineality).
/// Requires span(C) ⊆ span_Q(L).
std::vector<IntVec> hilbert_basis(const GenCone& c, const Sublattice& l);

/// The saturation cone(S) ∩ group(S), given by its Hilbert basis.
AffineMonoid saturation(const AffineMonoid& s);

bool is_saturated(const AffineMonoid& s);

/// First Hilbert basis element of the saturation missing from S, if any.
std::optional<IntVec> saturation_witness(const AffineMonoid& s);

/// Triangulation of a pointed cone into simplicial subcones, returned as
/// lists of extreme rays (pulling triangulation, deterministic).
std::vector<std::vector<IntVec>> triangulate_pointed(const std::vector<IntVec>& extreme_rays,
                                                     int ambient_dim);

}  // namespace semitoric
