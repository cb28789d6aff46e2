#pragma once

#include "semitoric/int_types.hpp"

#include <optional>
#include <vector>

namespace semitoric {

enum class Rel { eq, ge, gt };

/// a · x + b  REL  0 over the rationals.
struct LinCon {
  std::vector<Rat> a;
  Rat b;
  Rel rel;
};

/// A finite system of linear constraints in a fixed number of variables,
/// with exact Fourier-Motzkin elimination.
class LinearSystem {
 public:
  explicit LinearSystem(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::vector<LinCon>& constraints() const { return cons_; }
  void add(LinCon c);
  void add_eq(const std::vector<Rat>& a, Rat b);
  void add_ineq(const std::vector<Rat>& a, Rat b, bool strict);

  /// Project out the last variable; the result has one variable fewer.
  LinearSystem eliminate_last() const;
  bool feasible() const;

  /// Constraints on variable `var` after substituting fixed values for
  /// variables 0..var-1 (all later variables must already be eliminated).
  /// Returns the integer solutions range [lo, hi] (empty optional bound =
  /// unbounded); nullopt result = contradiction.
  struct VarRange {
    std::optional<Int> lo, hi;
    bool empty = false;
  };
  VarRange integer_range(int var, const std::vector<Int>& fixed) const;

 private:
  int nvars_;
  std::vector<LinCon> cons_;
};

/// Enumerates the lattice points of { x in Z^k : A x >= 0 rows, E x = 0 rows,
/// w · x = degree }, in ascending lexicographic order. The inequality system
/// is projected once with Fourier-Motzkin (degree kept symbolic), so repeated
/// slices are cheap.
class SliceEnumerator {
 public:
  SliceEnumerator(const std::vector<IntVec>& ineq_rows, const std::vector<IntVec>& eq_rows,
                  const IntVec& grading);
  std::vector<IntVec> points(const Int& degree) const;
  const IntVec& grading() const { return grading_; }

 private:
  int dim_;
  IntVec grading_;
  std::vector<LinearSystem> levels_;  // levels_[j]: vars x_0..x_j plus trailing t
};

/// Exact test for v ∈ cone(gens) + span(lin_gens).
bool in_cone_q(const IntVec& v, const std::vector<IntVec>& gens,
               const std::vector<IntVec>& lin_gens);

/// Exact test for relint(cone(a_rays)) ∩ relint(cone(b_rays)) != {} with
/// both cones simplicial; the zero cone has empty relative interior overlap
/// with everything except itself.
bool relint_intersects(const std::vector<IntVec>& a_rays, const std::vector<IntVec>& b_rays,
                       int dim);

}  // namespace semitoric
