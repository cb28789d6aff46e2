#include "semitoric/cone.hpp"

#include "semitoric/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semitoric {

QuotientMap quotient_by(const Sublattice& saturated_kernel) {
  const int d = saturated_kernel.ambient_dim();
  const int l = saturated_kernel.rank();
  SnfResult s = snf(saturated_kernel.basis());
  for (int i = 0; i < l; ++i)
    if (s.s.at(i, i) != 1)
      throw Error("quotient_by: kernel lattice is not saturated");
  QuotientMap q;
  q.from_dim = d;
  q.to_dim = d - l;
  q.proj = IntMatrix(d, d - l);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d - l; ++j) q.proj.at(i, j) = s.v.at(i, l + j);
  IntMatrix vinv = unimodular_inverse(s.v);
  q.section = IntMatrix(d - l, d);
  for (int i = 0; i < d - l; ++i)
    for (int j = 0; j < d; ++j) q.section.at(i, j) = vinv.at(l + i, j);
  return q;
}

namespace {

// Solve sum λ_i cols_i = target over Q; the columns must be independent.
std::optional<std::vector<Rat>> solve_coordinates(const std::vector<IntVec>& cols,
                                                  const IntVec& target) {
  const int d = static_cast<int>(target.size());
  const int k = static_cast<int>(cols.size());
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(k + 1));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = Rat(cols[j][i]);
    m[i][k] = Rat(target[i]);
  }
  int row = 0;
  std::vector<int> pivot_of_col(k, -1);
  for (int col = 0; col < k && row < d; ++col) {
    int p = -1;
    for (int i = row; i < d; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;  // dependent columns; callers guarantee otherwise
    std::swap(m[row], m[p]);
    for (int i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[row][col];
      for (int j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (int i = row; i < d; ++i)
    if (m[i][k] != 0) return std::nullopt;  // inconsistent
  std::vector<Rat> lambda(k);
  for (int col = 0; col < k; ++col) {
    int p = pivot_of_col[col];
    lambda[col] = m[p][k] / m[p][col];
  }
  return lambda;
}

}  // namespace

SimplicialCone make_cone(std::vector<IntVec> rays, int ambient_dim) {
  for (IntVec& r : rays) {
    if (static_cast<int>(r.size()) != ambient_dim)
      throw DimensionMismatch("make_cone: ray dimension mismatch");
    r = primitive(r);
    if (is_zero(r)) throw DependentRays("make_cone: zero ray");
  }
  std::sort(rays.begin(), rays.end());
  if (rank(IntMatrix::from_rows(rays, ambient_dim)) != static_cast<int>(rays.size()))
    throw DependentRays("make_cone: rays are linearly dependent");
  return SimplicialCone(ambient_dim, std::move(rays));
}

SimplicialCone zero_cone(int ambient_dim) { return SimplicialCone(ambient_dim, {}); }

std::vector<SimplicialCone> faces(const SimplicialCone& sigma) {
  const auto& rays = sigma.rays();
  const int k = static_cast<int>(rays.size());
  std::vector<SimplicialCone> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<IntVec> sub;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) sub.push_back(rays[i]);
    out.emplace_back(sigma.ambient_dim(), std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const SimplicialCone& a, const SimplicialCone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.rays() < b.rays();
  });
  return out;
}

bool is_face_of(const SimplicialCone& tau, const SimplicialCone& sigma) {
  if (tau.ambient_dim() != sigma.ambient_dim()) return false;
  return std::includes(sigma.rays().begin(), sigma.rays().end(), tau.rays().begin(),
                       tau.rays().end());
}

bool simplicial_contains(const SimplicialCone& sigma, const IntVec& v, Containment mode) {
  if (static_cast<int>(v.size()) != sigma.ambient_dim())
    throw DimensionMismatch("simplicial_contains: dimension mismatch");
  if (sigma.is_zero()) return is_zero(v);
  auto lambda = solve_coordinates(sigma.rays(), v);
  if (!lambda) return false;
  for (const Rat& l : *lambda) {
    if (mode == Containment::closed ? l < 0 : l <= 0) return false;
  }
  return true;
}

SimplicialCone minimal_face_containing(const SimplicialCone& sigma, const IntVec& v) {
  if (static_cast<int>(v.size()) != sigma.ambient_dim())
    throw DimensionMismatch("minimal_face_containing: dimension mismatch");
  if (sigma.is_zero()) {
    if (!is_zero(v)) throw NotInCone("minimal_face_containing: vector outside cone");
    return sigma;
  }
  auto lambda = solve_coordinates(sigma.rays(), v);
  if (!lambda) throw NotInCone("minimal_face_containing: vector outside cone");
  std::vector<IntVec> sub;
  for (size_t i = 0; i < lambda->size(); ++i) {
    if ((*lambda)[i] < 0) throw NotInCone("minimal_face_containing: vector outside cone");
    if ((*lambda)[i] > 0) sub.push_back(sigma.rays()[i]);
  }
  return SimplicialCone(sigma.ambient_dim(), std::move(sub));
}

void GenCone::compute_derived() {
  const int d = ambient_;
  std::vector<IntVec> span_gens = rays_;
  for (const IntVec& b : lineality_.basis_rows()) span_gens.push_back(b);
  span_perp_ = left_kernel(IntMatrix::from_rows(span_gens, d).transposed());
  span_dim_ = d - span_perp_.rows();

  facet_normals_.clear();
  if (rays_.empty()) return;
  const int l = lineality_.rank();
  const int k = span_dim_ - l;  // dimension of the pointed part
  const int m = static_cast<int>(rays_.size());
  std::vector<IntVec> span_rows = span_gens;
  std::set<IntVec> found;
  // All (k-1)-subsets of rays; every facet carries a spanning one.
  std::vector<int> comb;
  auto consider = [&](const std::vector<int>& subset) {
    std::vector<IntVec> rows;
    for (int i : subset) rows.push_back(rays_[i]);
    for (const IntVec& b : lineality_.basis_rows()) rows.push_back(b);
    IntMatrix msub = IntMatrix::from_rows(rows, d);
    if (rank(msub) != l + k - 1) return;
    IntMatrix kern = left_kernel(msub.transposed());
    Sublattice kl = Sublattice::from_hnf_basis(kern, d);
    Sublattice dir = kl.intersect_subspace(span_rows);
    if (dir.rank() != 1) return;
    IntVec h = dir.basis().row(0);
    bool pos = false, neg = false;
    for (const IntVec& r : rays_) {
      Int s = dot(h, r);
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (pos && neg) return;
    if (neg) h = vec_neg(h);
    if (!pos && !neg) return;
    found.insert(h);
  };
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      consider(comb);
      return;
    }
    for (int i = start; i + remaining <= m; ++i) {
      comb.push_back(i);
      self(self, i + 1, remaining - 1);
      comb.pop_back();
    }
  };
  rec(rec, 0, k - 1);
  facet_normals_.assign(found.begin(), found.end());
}

GenCone GenCone::from_rays_lineality(const std::vector<IntVec>& rays,
                                     const std::vector<IntVec>& lineality_gens, int ambient_dim) {
  for (const IntVec& v : rays)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw DimensionMismatch("GenCone: ray dimension mismatch");
  GenCone c;
  c.ambient_ = ambient_dim;
  c.lineality_ = Sublattice::span(lineality_gens, ambient_dim).saturate();

  std::vector<IntVec> reduced;
  if (c.lineality_.rank() == 0) {
    for (const IntVec& r : rays) {
      if (is_zero(r)) continue;
      reduced.push_back(primitive(r));
    }
    std::sort(reduced.begin(), reduced.end());
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  } else {
    QuotientMap q = quotient_by(c.lineality_);
    std::set<IntVec> images;
    for (const IntVec& r : rays) {
      IntVec img = q.apply(r);
      if (is_zero(img)) continue;  // absorbed into the lineality space
      images.insert(primitive(img));
    }
    // Canonical representative: the section lift of the primitive image.
    for (const IntVec& img : images) reduced.push_back(q.lift(img));
    std::sort(reduced.begin(), reduced.end());
  }

  // Drop rays that are positive combinations of the others.
  std::vector<IntVec> lin_rows = c.lineality_.basis_rows();
  std::vector<IntVec> kept;
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<IntVec> others = kept;
    for (size_t j = i + 1; j < reduced.size(); ++j) others.push_back(reduced[j]);
    if (!in_cone_q(reduced[i], others, lin_rows)) kept.push_back(reduced[i]);
  }
  c.rays_ = std::move(kept);
  c.compute_derived();
  return c;
}

GenCone GenCone::from_generators(const std::vector<IntVec>& gens, int ambient_dim) {
  std::vector<IntVec> nonzero;
  for (const IntVec& g : gens) {
    if (static_cast<int>(g.size()) != ambient_dim)
      throw DimensionMismatch("GenCone: generator dimension mismatch");
    if (!is_zero(g)) nonzero.push_back(g);
  }
  std::vector<IntVec> lin;
  for (const IntVec& g : nonzero)
    if (in_cone_q(vec_neg(g), nonzero, {})) lin.push_back(g);
  return from_rays_lineality(nonzero, lin, ambient_dim);
}

GenCone GenCone::zero(int ambient_dim) { return from_rays_lineality({}, {}, ambient_dim); }

GenCone GenCone::full(int ambient_dim) {
  std::vector<IntVec> basis;
  for (int i = 0; i < ambient_dim; ++i) {
    IntVec e(ambient_dim, Int(0));
    e[i] = 1;
    basis.push_back(e);
  }
  return from_rays_lineality({}, basis, ambient_dim);
}

GenCone GenCone::of_simplicial(const SimplicialCone& sigma) {
  return from_rays_lineality(sigma.rays(), {}, sigma.ambient_dim());
}

bool GenCone::contains(const IntVec& v, Containment mode) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw DimensionMismatch("GenCone::contains: dimension mismatch");
  for (int i = 0; i < span_perp_.rows(); ++i)
    if (dot(span_perp_.row(i), v) != 0) return false;
  for (const IntVec& h : facet_normals_) {
    Int s = dot(h, v);
    if (mode == Containment::closed ? s < 0 : s <= 0) return false;
  }
  return true;
}

std::vector<int> GenCone::tight_facets(const IntVec& v) const {
  std::vector<int> out;
  for (size_t i = 0; i < facet_normals_.size(); ++i)
    if (dot(facet_normals_[i], v) == 0) out.push_back(static_cast<int>(i));
  return out;
}

GenCone GenCone::face_from_tight(const std::vector<int>& facet_indices) const {
  std::vector<IntVec> sub;
  for (const IntVec& r : rays_) {
    bool on_all = true;
    for (int i : facet_indices)
      if (dot(facet_normals_[i], r) != 0) {
        on_all = false;
        break;
      }
    if (on_all) sub.push_back(r);
  }
  return from_rays_lineality(sub, lineality_.basis_rows(), ambient_);
}

GenCone GenCone::minimal_face(const IntVec& v) const {
  if (!contains(v, Containment::closed)) throw NotInCone("GenCone::minimal_face");
  return face_from_tight(tight_facets(v));
}

std::vector<GenCone> GenCone::faces() const {
  std::set<std::vector<IntVec>> seen;
  std::vector<GenCone> out;
  const int f = static_cast<int>(facet_normals_.size());
  for (unsigned mask = 0; mask < (1u << f); ++mask) {
    std::vector<int> idxs;
    for (int i = 0; i < f; ++i)
      if (mask & (1u << i)) idxs.push_back(i);
    GenCone face = face_from_tight(idxs);
    if (seen.insert(face.rays()).second) out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const GenCone& a, const GenCone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.rays() < b.rays();
  });
  return out;
}

GenCone GenCone::dual() const {
  return from_rays_lineality(facet_normals_, span_perp_.row_list(), ambient_);
}

bool operator==(const GenCone& a, const GenCone& b) {
  return a.ambient_ == b.ambient_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
}

std::strong_ordering GenCone::operator<=>(const GenCone& other) const {
  if (auto c = ambient_ <=> other.ambient_; c != 0) return c;
  if (rays_ < other.rays_) return std::strong_ordering::less;
  if (rays_ > other.rays_) return std::strong_ordering::greater;
  return lineality_ <=> other.lineality_;
}

GenCone dual_cone(const SimplicialCone& sigma) {
  GenCone dual = GenCone::of_simplicial(sigma).dual();
  // Certify the sign pattern: each dual ray pairs positively with exactly
  // one ray of sigma and vanishes on the rest; the lineality is sigma^perp.
  const auto& rays = sigma.rays();
  std::set<size_t> hit;
  for (const IntVec& f : dual.rays()) {
    int positive = -1;
    for (size_t j = 0; j < rays.size(); ++j) {
      Int s = dot(f, rays[j]);
      if (s < 0) throw Error("dual_cone: certification failed (negative pairing)");
      if (s > 0) {
        if (positive >= 0) throw Error("dual_cone: certification failed (pattern)");
        positive = static_cast<int>(j);
      }
    }
    if (positive < 0) throw Error("dual_cone: certification failed (zero row)");
    hit.insert(static_cast<size_t>(positive));
  }
  if (hit.size() != rays.size()) throw Error("dual_cone: certification failed (coverage)");
  for (const IntVec& b : dual.lineality_lattice().basis_rows())
    for (const IntVec& r : rays)
      if (dot(b, r) != 0) throw Error("dual_cone: certification failed (lineality)");
  return dual;
}

GenCone tau_star(const SimplicialCone& sigma, const SimplicialCone& tau) {
  if (!is_face_of(tau, sigma)) throw NotAFace("tau_star: tau is not a face of sigma");
  GenCone dual = dual_cone(sigma);
  std::vector<IntVec> kept;
  for (const IntVec& f : dual.rays()) {
    bool vanishes_on_tau = true;
    for (const IntVec& e : tau.rays())
      if (dot(f, e) != 0) {
        vanishes_on_tau = false;
        break;
      }
    if (vanishes_on_tau) kept.push_back(f);
  }
  return GenCone::from_rays_lineality(kept, dual.lineality_lattice().basis_rows(),
                                      sigma.ambient_dim());
}

Sublattice perp_lattice(const SimplicialCone& tau, const Sublattice& m) {
  if (tau.ambient_dim() != m.ambient_dim())
    throw DimensionMismatch("perp_lattice: dimension mismatch");
  IntMatrix rays = IntMatrix::from_rows(tau.rays(), tau.ambient_dim());
  IntMatrix perp = left_kernel(rays.transposed());
  return m.intersect_subspace(perp.row_list());
}

bool cone_contains(const GenCone& c, const IntVec& v, Containment mode) {
  return c.contains(v, mode);
}

IntVec positive_grading(const GenCone& c) {
  IntVec w(c.ambient_dim(), Int(0));
  for (const IntVec& h : c.facet_normals()) w = vec_add(w, h);
  return w;
}

}  // namespace semitoric
