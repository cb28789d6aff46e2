#include "semitoric/lattice.hpp"

#include <stdexcept>

namespace semitoric {

namespace {

int pivot_col(const IntMatrix& m, int row) {
  for (int j = 0; j < m.cols(); ++j)
    if (m.at(row, j) != 0) return j;
  return -1;
}

}  // namespace

Sublattice Sublattice::span(const std::vector<IntVec>& gens, int ambient_dim) {
  for (const IntVec& v : gens)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw std::invalid_argument("Sublattice::span: dimension mismatch");
  IntMatrix h = hnf(IntMatrix::from_rows(gens, ambient_dim)).h;
  std::vector<IntVec> rows;
  for (int i = 0; i < h.rows(); ++i)
    if (pivot_col(h, i) >= 0) rows.push_back(h.row(i));
  Sublattice l;
  l.ambient_ = ambient_dim;
  l.basis_ = IntMatrix::from_rows(rows, ambient_dim);
  return l;
}

Sublattice Sublattice::full(int ambient_dim) {
  Sublattice l;
  l.ambient_ = ambient_dim;
  l.basis_ = IntMatrix::identity(ambient_dim);
  return l;
}

Sublattice Sublattice::zero(int ambient_dim) {
  Sublattice l;
  l.ambient_ = ambient_dim;
  l.basis_ = IntMatrix(0, ambient_dim);
  return l;
}

Sublattice Sublattice::from_hnf_basis(const IntMatrix& basis, int ambient_dim) {
  Sublattice l;
  l.ambient_ = ambient_dim;
  l.basis_ = basis;
  return l;
}

std::optional<IntVec> Sublattice::coordinates(const IntVec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Sublattice::coordinates: dimension mismatch");
  IntVec w = v;
  IntVec coords(basis_.rows(), Int(0));
  for (int i = 0; i < basis_.rows(); ++i) {
    int p = pivot_col(basis_, i);
    if (w[p] % basis_.at(i, p) != 0) return std::nullopt;
    Int t = w[p] / basis_.at(i, p);
    coords[i] = t;
    if (t != 0)
      for (int j = 0; j < ambient_; ++j) w[j] -= t * basis_.at(i, j);
  }
  if (!is_zero(w)) return std::nullopt;
  return coords;
}

bool Sublattice::contains(const IntVec& v) const { return coordinates(v).has_value(); }

IntVec Sublattice::reduce(const IntVec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Sublattice::reduce: dimension mismatch");
  IntVec w = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    int p = pivot_col(basis_, i);
    Int t = floor_div(w[p], basis_.at(i, p));
    if (t != 0)
      for (int j = 0; j < ambient_; ++j) w[j] -= t * basis_.at(i, j);
  }
  return w;
}

Sublattice Sublattice::saturate() const {
  // (L^perp)^perp: both kernels are saturated, so this is (Q L) ∩ Z^d.
  IntMatrix perp = left_kernel(basis_.transposed());
  IntMatrix sat = left_kernel(perp.transposed());
  return Sublattice::from_hnf_basis(sat, ambient_);
}

bool Sublattice::is_saturated() const { return *this == saturate(); }

Sublattice Sublattice::intersect_subspace(const std::vector<IntVec>& subspace_gens) const {
  for (const IntVec& v : subspace_gens)
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("intersect_subspace: dimension mismatch");
  // x = t * basis lies in span(W) iff t kills every constraint of W^perp.
  IntMatrix w = IntMatrix::from_rows(subspace_gens, ambient_);
  IntMatrix wperp = left_kernel(w.transposed());     // rows c with c ⟂ span(W)
  IntMatrix constraints = mat_mul(basis_, wperp.transposed());
  IntMatrix t = left_kernel(constraints);            // coefficient vectors
  IntMatrix rows = mat_mul(t, basis_);
  return Sublattice::span(rows.row_list(), ambient_);
}

Sublattice Sublattice::sum(const Sublattice& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Sublattice::sum: dimension mismatch");
  std::vector<IntVec> gens = basis_.row_list();
  for (const IntVec& v : other.basis_.row_list()) gens.push_back(v);
  return Sublattice::span(gens, ambient_);
}

LatticeIndex index_in(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("index_in: dimension mismatch");
  std::vector<IntVec> coords;
  for (const IntVec& row : a.basis_rows()) {
    auto c = b.coordinates(row);
    if (!c) return LatticeIndex::not_contained();
    coords.push_back(*c);
  }
  if (a.rank() < b.rank()) return LatticeIndex::infinite();
  IntMatrix t = IntMatrix::from_rows(coords, b.rank());
  Int d = det(t);
  return LatticeIndex::finite(d < 0 ? -d : d);
}

Sublattice apply_transpose(const LatticeHom& hom, const Sublattice& target_dual_lattice) {
  if (target_dual_lattice.ambient_dim() != hom.target_dim())
    throw std::invalid_argument("apply_transpose: dimension mismatch");
  std::vector<IntVec> images;
  for (const IntVec& row : target_dual_lattice.basis_rows())
    images.push_back(hom.apply_transpose_vec(row));
  return Sublattice::span(images, hom.source_dim());
}

}  // namespace semitoric
