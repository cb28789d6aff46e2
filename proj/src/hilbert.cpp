#include "semitoric/hilbert.hpp"

#include "semitoric/errors.hpp"

#include <algorithm>
#include <set>

namespace semitoric {

std::vector<std::vector<IntVec>> triangulate_pointed(const std::vector<IntVec>& extreme_rays,
                                                     int ambient_dim) {
  const int k = rank(IntMatrix::from_rows(extreme_rays, ambient_dim));
  if (static_cast<int>(extreme_rays.size()) == k) return {extreme_rays};
  GenCone cone = GenCone::from_rays_lineality(extreme_rays, {}, ambient_dim);
  const IntVec& apex = cone.rays().front();
  std::vector<std::vector<IntVec>> out;
  for (const IntVec& h : cone.facet_normals()) {
    if (dot(h, apex) == 0) continue;  // facets through the apex are not needed
    std::vector<IntVec> on_facet;
    for (const IntVec& r : cone.rays())
      if (dot(h, r) == 0) on_facet.push_back(r);
    for (auto& simplex : triangulate_pointed(on_facet, ambient_dim)) {
      simplex.push_back(apex);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

namespace {

// Rational solution of sum lambda_j cols_j = target for independent columns.
std::vector<Rat> solve_full(const std::vector<IntVec>& cols, const IntVec& target) {
  const int d = static_cast<int>(target.size());
  const int k = static_cast<int>(cols.size());
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(k + 1));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = Rat(cols[j][i]);
    m[i][k] = Rat(target[i]);
  }
  int row = 0;
  std::vector<int> piv(k, -1);
  for (int col = 0; col < k && row < d; ++col) {
    int p = -1;
    for (int i = row; i < d; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw Error("solve_full: dependent columns");
    std::swap(m[row], m[p]);
    for (int i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[row][col];
      for (int j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    piv[col] = row;
    ++row;
  }
  for (int i = row; i < d; ++i)
    if (m[i][k] != 0) throw Error("solve_full: inconsistent system");
  std::vector<Rat> lambda(k);
  for (int j = 0; j < k; ++j) lambda[j] = m[piv[j]][k] / m[piv[j]][j];
  return lambda;
}

// Nonzero lattice points of the half-open parallelepiped
// { sum lambda_i rows_i : 0 <= lambda_i < 1 } for a full-rank square system:
// one representative per coset of the row lattice, shifted into the box.
std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& rows, int dim) {
  const int k = static_cast<int>(rows.size());
  if (k != dim) throw Error("parallelepiped_points: expects a full-dimensional simplex");
  IntMatrix h = hnf(IntMatrix::from_rows(rows, dim)).h;
  for (int i = 0; i < k; ++i)
    if (h.at(i, i) == 0) throw Error("parallelepiped_points: rows are dependent");

  std::vector<IntVec> out;
  IntVec rep(dim, Int(0));
  auto rec = [&](auto&& self, int coord) -> void {
    if (coord == dim) {
      // Shift the residue representative into the parallelepiped.
      std::vector<Rat> lambda = solve_full(rows, rep);
      IntVec shifted = rep;
      for (int j = 0; j < k; ++j) {
        Int fl = floor_rat(lambda[j]);
        if (fl != 0) shifted = vec_sub(shifted, vec_scale(fl, rows[j]));
      }
      if (!is_zero(shifted)) out.push_back(std::move(shifted));
      return;
    }
    // The coordinate box 0 <= x_i < h_ii enumerates Z^dim modulo the rows.
    for (Int c = 0; c < h.at(coord, coord); ++c) {
      rep[coord] = c;
      self(self, coord + 1);
    }
    rep[coord] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<IntVec> hilbert_basis(const GenCone& c, const Sublattice& l) {
  const int d = c.ambient_dim();
  if (l.ambient_dim() != d) throw DimensionMismatch("hilbert_basis: dimension mismatch");
  Sublattice lsat = l.saturate();
  for (const IntVec& r : c.rays())
    if (!lsat.contains(r)) throw InvalidInput("hilbert_basis: cone not inside span of lattice");
  for (const IntVec& b : c.lineality_lattice().basis_rows())
    if (!lsat.contains(b)) throw InvalidInput("hilbert_basis: cone not inside span of lattice");

  // Work in coordinates of L, where the lattice is all of Z^r.
  const int r = l.rank();
  IntMatrix basis = l.basis();
  std::vector<IntVec> basis_cols;
  for (int i = 0; i < r; ++i) basis_cols.push_back(basis.row(i));
  // Primitive integer direction of the L-coordinates of a span(L) vector.
  auto to_coords = [&](const IntVec& v) -> IntVec {
    std::vector<Rat> q = solve_full(basis_cols, v);
    Int scale = 1;
    for (const Rat& x : q) scale = scale / gcd(scale, rat_den(x)) * rat_den(x);
    IntVec coords(r);
    for (int j = 0; j < r; ++j) coords[j] = rat_num(q[j] * scale);
    return primitive(coords);
  };
  auto from_coords = [&](const IntVec& x) { return row_apply(x, basis); };

  std::vector<IntVec> cone_rays;
  for (const IntVec& ray : c.rays()) cone_rays.push_back(to_coords(ray));
  std::vector<IntVec> cone_lin;
  for (const IntVec& b : c.lineality_lattice().basis_rows()) cone_lin.push_back(to_coords(b));
  GenCone cc = GenCone::from_rays_lineality(cone_rays, cone_lin, r);

  std::vector<IntVec> result_coords;
  // Lineality part: ±basis of (Z^r ∩ lineality) = ± lineality lattice basis.
  for (const IntVec& b : cc.lineality_lattice().basis_rows()) {
    result_coords.push_back(b);
    result_coords.push_back(vec_neg(b));
  }

  if (!cc.rays().empty()) {
    // Split off the lineality and restrict to the span of the pointed part.
    QuotientMap q = quotient_by(cc.lineality_lattice());
    std::vector<IntVec> prays;
    for (const IntVec& ray : cc.rays()) prays.push_back(primitive(q.apply(ray)));
    // Restrict to the saturated span of the rays.
    Sublattice span_l = Sublattice::span(prays, q.to_dim).saturate();
    const int k = span_l.rank();
    IntMatrix sb = span_l.basis();
    auto span_coords = [&](const IntVec& v) -> IntVec {
      auto coord = span_l.coordinates(v);
      if (!coord) throw Error("hilbert_basis: internal span restriction failure");
      return *coord;
    };
    std::vector<IntVec> frays;
    for (const IntVec& ray : prays) frays.push_back(span_coords(ray));

    GenCone full_cone = GenCone::from_rays_lineality(frays, {}, k);
    std::set<IntVec> candidates;
    for (const IntVec& ray : full_cone.rays()) candidates.insert(ray);
    for (const auto& simplex : triangulate_pointed(full_cone.rays(), k))
      for (IntVec& p : parallelepiped_points(simplex, k)) candidates.insert(std::move(p));

    IntVec w = positive_grading(full_cone);
    std::vector<std::pair<Int, IntVec>> by_degree;
    for (const IntVec& x : candidates) by_degree.emplace_back(dot(w, x), x);
    std::sort(by_degree.begin(), by_degree.end());
    std::vector<IntVec> irreducible;
    for (const auto& [deg, x] : by_degree) {
      bool reducible = false;
      for (const auto& [adeg, a] : by_degree) {
        if (adeg >= deg) break;
        if (full_cone.contains(vec_sub(x, a), Containment::closed)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) irreducible.push_back(x);
    }
    // Lift back: span coordinates -> quotient -> canonical lift -> ambient.
    for (const IntVec& x : irreducible) {
      IntVec in_quot = row_apply(x, sb);
      result_coords.push_back(q.lift(in_quot));
    }
  }

  std::vector<IntVec> result;
  for (const IntVec& x : result_coords) result.push_back(from_coords(x));
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

AffineMonoid saturation(const AffineMonoid& s) {
  if (s.is_trivial()) return s;
  return make_monoid(hilbert_basis(s.cone(), s.group()), s.ambient_dim());
}

std::optional<IntVec> saturation_witness(const AffineMonoid& s) {
  for (const IntVec& g : saturation(s).generators())
    if (!monoid_member(s, g)) return g;
  return std::nullopt;
}

bool is_saturated(const AffineMonoid& s) { return !saturation_witness(s).has_value(); }

}  // namespace semitoric
