#include "semitoric/monoid.hpp"

#include "semitoric/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace semitoric {

AffineMonoid make_monoid(std::vector<IntVec> gens, int ambient_dim) {
  std::vector<IntVec> cleaned;
  for (IntVec& g : gens) {
    if (static_cast<int>(g.size()) != ambient_dim)
      throw DimensionMismatch("make_monoid: generator dimension mismatch");
    if (!is_zero(g)) cleaned.push_back(std::move(g));
  }
  std::sort(cleaned.begin(), cleaned.end());
  cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
  AffineMonoid s;
  s.ambient_ = ambient_dim;
  s.group_ = Sublattice::span(cleaned, ambient_dim);
  s.cone_ = GenCone::from_generators(cleaned, ambient_dim);
  s.gens_ = std::move(cleaned);
  return s;
}

Sublattice unit_group(const AffineMonoid& s) {
  const Sublattice& lin = s.cone().lineality_lattice();
  std::vector<IntVec> unit_gens;
  for (const IntVec& g : s.generators())
    if (lin.contains(g)) unit_gens.push_back(g);
  return Sublattice::span(unit_gens, s.ambient_dim());
}

namespace {

struct MemberSearch {
  const std::vector<IntVec>* pointed;  // generators off the lineality space
  std::vector<Int> degrees;            // grading values of pointed generators
  const Sublattice* units;
  const GenCone* cone;

  bool dfs(const IntVec& residual, const Int& rdeg, size_t from) const {
    if (rdeg == 0) return units->rank() == 0 ? is_zero(residual) : units->contains(residual);
    if (!cone->contains(residual, Containment::closed)) return false;
    for (size_t i = from; i < pointed->size(); ++i) {
      if (degrees[i] > rdeg) continue;
      // Try coefficient >= 1 for generator i, then move on.
      IntVec next = vec_sub(residual, (*pointed)[i]);
      if (dfs(next, rdeg - degrees[i], i)) return true;
    }
    return false;
  }
};

}  // namespace

bool monoid_member(const AffineMonoid& s, const IntVec& m) {
  if (static_cast<int>(m.size()) != s.ambient_dim())
    throw DimensionMismatch("monoid_member: dimension mismatch");
  if (is_zero(m)) return true;
  if (!s.group().contains(m)) return false;
  if (!s.cone().contains(m, Containment::closed)) return false;

  IntVec w = positive_grading(s.cone());
  Sublattice units = unit_group(s);
  Int mdeg = dot(w, m);
  if (mdeg == 0) return units.contains(m);

  std::vector<std::pair<Int, IntVec>> ordered;
  for (const IntVec& g : s.generators()) {
    Int d = dot(w, g);
    if (d > 0) ordered.emplace_back(std::move(d), g);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
  std::vector<IntVec> pointed;
  std::vector<Int> degs;
  for (auto& [d, g] : ordered) {
    degs.push_back(d);
    pointed.push_back(g);
  }
  MemberSearch search;
  search.pointed = &pointed;
  search.degrees = std::move(degs);
  search.units = &units;
  search.cone = &s.cone();
  return search.dfs(m, mdeg, 0);
}

bool interior_member(const AffineMonoid& s, const IntVec& m) {
  if (static_cast<int>(m.size()) != s.ambient_dim())
    throw DimensionMismatch("interior_member: dimension mismatch");
  return s.cone().contains(m, Containment::relative_interior) && monoid_member(s, m);
}

AffineMonoid face_restrict(const AffineMonoid& s, const GenCone& face) {
  if (face.ambient_dim() != s.ambient_dim())
    throw DimensionMismatch("face_restrict: dimension mismatch");
  // Sanity: a face must be contained in the cone with matching lineality.
  for (const IntVec& r : face.rays())
    if (!s.cone().contains(r, Containment::closed)) throw NotAFace("face_restrict");
  std::vector<IntVec> kept;
  for (const IntVec& g : s.generators())
    if (face.contains(g, Containment::closed)) kept.push_back(g);
  return make_monoid(std::move(kept), s.ambient_dim());
}

Sublattice m_group(const AffineMonoid& s, const SimplicialCone& tau) {
  if (tau.ambient_dim() != s.ambient_dim())
    throw DimensionMismatch("m_group: dimension mismatch");
  std::vector<IntVec> kept;
  for (const IntVec& g : s.generators()) {
    bool perp = true;
    for (const IntVec& r : tau.rays())
      if (dot(g, r) != 0) {
        perp = false;
        break;
      }
    if (perp) kept.push_back(g);
  }
  return Sublattice::span(kept, s.ambient_dim());
}

AffineMonoid sum_with_group(const AffineMonoid& s, const Sublattice& l) {
  if (l.ambient_dim() != s.ambient_dim())
    throw DimensionMismatch("sum_with_group: dimension mismatch");
  std::vector<IntVec> gens = s.generators();
  for (const IntVec& b : l.basis_rows()) {
    gens.push_back(b);
    gens.push_back(vec_neg(b));
  }
  return make_monoid(std::move(gens), s.ambient_dim());
}

bool monoid_equal(const AffineMonoid& a, const AffineMonoid& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("monoid_equal: dimension mismatch");
  for (const IntVec& g : a.generators())
    if (!monoid_member(b, g)) return false;
  for (const IntVec& g : b.generators())
    if (!monoid_member(a, g)) return false;
  return true;
}

Sublattice relation_lattice(const AffineMonoid& s) {
  const int n = static_cast<int>(s.generators().size());
  IntMatrix g = IntMatrix::from_rows(s.generators(), s.ambient_dim());
  IntMatrix k = left_kernel(g);
  return Sublattice::from_hnf_basis(k, n);
}

struct MembershipOracle::Memo {
  std::mutex mu;
  std::map<IntVec, bool> values;
};

MembershipOracle::MembershipOracle(int ambient_dim, Provenance tag,
                                   std::function<bool(const IntVec&)> fn)
    : ambient_(ambient_dim), tag_(tag), fn_(std::move(fn)), memo_(std::make_shared<Memo>()) {}

bool MembershipOracle::operator()(const IntVec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw DimensionMismatch("MembershipOracle: dimension mismatch");
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->values.find(v);
    if (it != memo_->values.end()) return it->second;
  }
  bool result = fn_(v);
  std::lock_guard<std::mutex> lock(memo_->mu);
  memo_->values.emplace(v, result);
  return result;
}

}  // namespace semitoric
