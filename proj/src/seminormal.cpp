#include "semitoric/seminormal.hpp"

#include "semitoric/errors.hpp"

#include <algorithm>
#include <map>

namespace semitoric {

namespace {

// Shared fiber structure for enumerating a monoid with units modulo its
// unit group: quotient by the saturated lineality lattice, plus the finite
// list of unit-group cosets inside each fiber.
struct FiberedEnumeration {
  QuotientMap quot;
  std::vector<IntVec> coset_reps;  // representatives of (lineality ∩ Z^d) / units
  GenCone quotient_cone;           // pointed image of the cone
  IntVec grading;                  // strictly positive on the image cone
  SliceEnumerator slices;

  FiberedEnumeration(const GenCone& cone, const Sublattice& units)
      : quot(quotient_by(cone.lineality_lattice())),
        quotient_cone(make_quotient_cone(cone, quot)),
        grading(positive_grading(quotient_cone)),
        slices(quotient_cone.facet_normals(), quotient_cone.span_equations().row_list(),
               grading) {
    const Sublattice& lin = cone.lineality_lattice();
    if (units.rank() != lin.rank() || index_in(units, lin).kind != LatticeIndex::Kind::finite)
      throw Error("extract_generators: unit lattice must have finite index in the lineality");
    coset_reps = enumerate_cosets(lin, units);
  }

  static GenCone make_quotient_cone(const GenCone& cone, const QuotientMap& q) {
    std::vector<IntVec> images;
    for (const IntVec& r : cone.rays()) images.push_back(q.apply(r));
    return GenCone::from_rays_lineality(images, {}, q.to_dim);
  }

  static std::vector<IntVec> enumerate_cosets(const Sublattice& lin, const Sublattice& units) {
    if (lin.rank() == 0) return {IntVec(lin.ambient_dim(), Int(0))};
    IntMatrix coords(units.rank(), lin.rank());
    for (int i = 0; i < units.rank(); ++i) {
      auto c = lin.coordinates(units.basis().row(i));
      if (!c) throw Error("extract_generators: units not inside the lineality lattice");
      coords.set_row(i, *c);
    }
    IntMatrix h = hnf(coords).h;
    std::vector<IntVec> reps;
    IntVec x(lin.rank(), Int(0));
    auto rec = [&](auto&& self, int i) -> void {
      if (i == lin.rank()) {
        reps.push_back(row_apply(x, lin.basis()));
        return;
      }
      for (Int c = 0; c < h.at(i, i); ++c) {
        x[i] = c;
        self(self, i + 1);
      }
      x[i] = 0;
    };
    rec(rec, 0);
    return reps;
  }

  // All candidate points over one quotient fiber.
  std::vector<IntVec> fiber_points(const IntVec& q) const {
    IntVec base = quot.from_dim == quot.to_dim ? q : quot.lift(q);
    std::vector<IntVec> out;
    if (coset_reps.size() == 1 && coset_reps[0].empty()) {
      out.push_back(base);
      return out;
    }
    for (const IntVec& r : coset_reps) out.push_back(vec_add(base, r));
    return out;
  }
};

}  // namespace

AffineMonoid extract_generators(const std::function<bool(const IntVec&)>& oracle,
                                const GenCone& cone, const Sublattice& units) {
  const int d = cone.ambient_dim();
  FiberedEnumeration fe(cone, units);

  // Degree 0: the members in the lineality space must be exactly the units.
  for (const IntVec& m : fe.fiber_points(IntVec(fe.quot.to_dim, Int(0)))) {
    bool expected = units.rank() == 0 ? is_zero(m) : units.contains(m);
    if (oracle(m) != expected)
      throw CertificationFailure("extract_generators: oracle disagrees with the unit group at " +
                                 to_string(m));
  }

  std::vector<IntVec> gens;
  for (const IntVec& b : units.basis_rows()) {
    gens.push_back(b);
    gens.push_back(vec_neg(b));
  }

  std::map<Int, std::vector<IntVec>> members;  // by grading degree, pointed part only
  Int max_gen_degree = 0, last_gen_degree = 0;
  bool found_any = false;
  const Int safety_cap = 512;

  if (fe.quotient_cone.dim() > 0) {
    for (Int deg = 1;; ++deg) {
      if (found_any && deg > last_gen_degree + max_gen_degree) break;
      if (!found_any && deg > safety_cap)
        throw CertificationFailure("extract_generators: no generators below the safety bound");
      for (const IntVec& q : fe.slices.points(deg)) {
        for (const IntVec& m : fe.fiber_points(q)) {
          if (!oracle(m)) continue;
          members[deg].push_back(m);
          bool reachable = false;
          for (Int d1 = 1; !reachable && d1 + d1 <= deg; ++d1) {
            auto it1 = members.find(d1);
            auto it2 = members.find(deg - d1);
            if (it1 == members.end() || it2 == members.end()) continue;
            for (const IntVec& m1 : it1->second) {
              for (const IntVec& m2 : it2->second) {
                IntVec sum = vec_add(m1, m2);
                IntVec diff = vec_sub(sum, m);
                bool same = units.rank() == 0 ? is_zero(diff) : units.contains(diff);
                if (same) {
                  reachable = true;
                  break;
                }
              }
              if (reachable) break;
            }
          }
          if (!reachable) {
            gens.push_back(m);
            found_any = true;
            last_gen_degree = deg;
            if (deg > max_gen_degree) max_gen_degree = deg;
          }
        }
      }
    }
  }

  AffineMonoid extracted = make_monoid(gens, d);
  IntVec bad;
  if (!certify_against_oracle(oracle, extracted, cone, units, 3 * max_gen_degree, &bad))
    throw CertificationFailure("extract_generators: certification failed at " + to_string(bad));
  return extracted;
}

bool certify_against_oracle(const std::function<bool(const IntVec&)>& oracle,
                            const AffineMonoid& extracted, const GenCone& cone,
                            const Sublattice& units, const Int& degree_bound,
                            IntVec* counterexample) {
  FiberedEnumeration fe(cone, units);
  for (Int deg = 0; deg <= degree_bound; ++deg) {
    for (const IntVec& q : fe.slices.points(deg)) {
      for (const IntVec& m : fe.fiber_points(q)) {
        if (oracle(m) != monoid_member(extracted, m)) {
          if (counterexample) *counterexample = m;
          return false;
        }
      }
    }
  }
  return true;
}

SeminormalizationResult seminormalize(const AffineMonoid& s) {
  const int d = s.ambient_dim();
  const GenCone& cone = s.cone();

  // Face data: the group of sections over each face, keyed by the set of
  // facets of cone(S) that vanish there.
  auto face_groups = std::make_shared<std::map<std::vector<int>, Sublattice>>();
  auto gens = std::make_shared<std::vector<IntVec>>(s.generators());
  auto cone_copy = std::make_shared<GenCone>(cone);

  auto raw = [face_groups, gens, cone_copy, d](const IntVec& m) -> bool {
    if (is_zero(m)) return true;
    if (!cone_copy->contains(m, Containment::closed)) return false;
    std::vector<int> tight = cone_copy->tight_facets(m);
    auto it = face_groups->find(tight);
    if (it == face_groups->end()) {
      std::vector<IntVec> in_face;
      for (const IntVec& g : *gens) {
        bool on_all = true;
        for (int f : tight)
          if (dot(cone_copy->facet_normals()[f], g) != 0) {
            on_all = false;
            break;
          }
        if (on_all) in_face.push_back(g);
      }
      it = face_groups->emplace(tight, Sublattice::span(in_face, d)).first;
    }
    return it->second.contains(m);
  };

  MembershipOracle oracle(d, Provenance::seminormalization, raw);
  Sublattice units = unit_group(s);
  AffineMonoid extracted =
      s.is_trivial() ? s : extract_generators([oracle](const IntVec& v) { return oracle(v); },
                                              cone, units);
  return SeminormalizationResult{oracle, extracted};
}

std::optional<IntVec> seminormality_witness(const AffineMonoid& s) {
  for (const IntVec& g : seminormalize(s).gens.generators())
    if (!monoid_member(s, g)) return g;
  return std::nullopt;
}

bool is_semisaturated(const AffineMonoid& s) { return !seminormality_witness(s).has_value(); }

}  // namespace semitoric
