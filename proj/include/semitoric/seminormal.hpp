#pragma once

#include "semitoric/hilbert.hpp"
#include "semitoric/monoid.hpp"

namespace semitoric {

/// The seminormalization S+ of an affine monoid: membership oracle plus a
/// certified finite generator list. S ⊆ S+ ⊆ saturation(S); S+ saturates the
/// interior of every face of cone(S).
struct SeminormalizationResult {
  MembershipOracle oracle;
  AffineMonoid gens;
};

SeminormalizationResult seminormalize(const AffineMonoid& s);

/// S equals its seminormalization.
bool is_semisaturated(const AffineMonoid& s);

/// First generator of S+ missing from S (canonical order), if any.
std::optional<IntVec> seminormality_witness(const AffineMonoid& s);

/// Extract a certified generating set from a membership oracle:
/// enumerate members by an exact positive grading of the pointed quotient,
/// keep elements that are not sums of two earlier members, stop after a
/// silent window as wide as the largest generator degree, then certify the
/// result against the oracle on the box of degree <= 3 * (max degree).
/// `cone` must be the recession cone of the oracle monoid and `units` its
/// unit group (full rank in the lineality of `cone`).
/// Throws CertificationFailure when the checks fail.
AffineMonoid extract_generators(const std::function<bool(const IntVec&)>& oracle,
                                const GenCone& cone, const Sublattice& units);

/// Certification helper reused by tests: oracle membership equals generated
/// membership for every lattice point of the cone with grading degree
/// <= degree_bound (together with all unit-coset translates).
bool certify_against_oracle(const std::function<bool(const IntVec&)>& oracle,
                            const AffineMonoid& extracted, const GenCone& cone,
                            const Sublattice& units, const Int& degree_bound,
                            IntVec* counterexample = nullptr);

}  // namespace semitoric
