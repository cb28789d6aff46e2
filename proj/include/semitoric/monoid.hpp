#pragma once

#include "semitoric/cone.hpp"
#include "semitoric/fan.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace semitoric {

/// A finitely generated submonoid of Z^d, stored by its canonical generator
/// list (lex-sorted, deduplicated, zero removed) with the generated group
/// and recession cone cached.
class AffineMonoid {
 public:
  AffineMonoid() : ambient_(0) {}

  int ambient_dim() const { return ambient_; }
  const std::vector<IntVec>& generators() const { return gens_; }
  const Sublattice& group() const { return group_; }
  const GenCone& cone() const { return cone_; }
  bool is_trivial() const { return gens_.empty(); }

  friend bool operator==(const AffineMonoid& a, const AffineMonoid& b) {
    return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
  }

 private:
  friend AffineMonoid make_monoid(std::vector<IntVec> gens, int ambient_dim);
  int ambient_;
  std::vector<IntVec> gens_;
  Sublattice group_;
  GenCone cone_;
};

AffineMonoid make_monoid(std::vector<IntVec> gens, int ambient_dim);

/// Exact membership: m is a nonnegative integer combination of the
/// generators. Decided by bounded search along a strictly positive grading
/// of the pointed part; the unit part is a lattice membership test.
bool monoid_member(const AffineMonoid& s, const IntVec& m);

/// Membership in Int(S) = S ∩ relint(cone(S)).
bool interior_member(const AffineMonoid& s, const IntVec& m);

/// The submonoid of generators lying on a face of cone(S); equals S ∩ F.
AffineMonoid face_restrict(const AffineMonoid& s, const GenCone& face);

/// Free abelian group generated by the generators of S lying in tau^perp.
Sublattice m_group(const AffineMonoid& s, const SimplicialCone& tau);

/// Monoid generated by S together with ±(basis of L).
AffineMonoid sum_with_group(const AffineMonoid& s, const Sublattice& l);

/// Equality as submonoids of Z^d (mutual generator membership).
bool monoid_equal(const AffineMonoid& a, const AffineMonoid& b);

/// Kernel of Z^n -> Z^d sending the i-th unit vector to the i-th canonical
/// generator: the integer form of the binomial relations.
Sublattice relation_lattice(const AffineMonoid& s);

/// Unit group of S: the sublattice generated by the generators lying in the
/// lineality space of cone(S). Equals S ∩ (-S).
Sublattice unit_group(const AffineMonoid& s);

enum class Provenance { generated, seminormalization, functor_gamma, sum_with_group };

/// A total membership test for a submonoid of Z^d that need not be given by
/// generators; results are memoized behind a synchronized table.
class MembershipOracle {
 public:
  MembershipOracle() = default;
  MembershipOracle(int ambient_dim, Provenance tag, std::function<bool(const IntVec&)> fn);

  int ambient_dim() const { return ambient_; }
  Provenance tag() const { return tag_; }
  bool operator()(const IntVec& v) const;

 private:
  int ambient_ = 0;
  Provenance tag_ = Provenance::generated;
  std::function<bool(const IntVec&)> fn_;
  struct Memo;
  std::shared_ptr<Memo> memo_;
};

}  // namespace semitoric
