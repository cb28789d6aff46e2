#include "semitoric/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace semitoric {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative size");
  a_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("IntMatrix::from_rows: dimension mismatch");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(int i) const {
  IntVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

std::vector<IntVec> IntMatrix::row_list() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void IntMatrix::set_row(int i, const IntVec& v) {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("IntMatrix::set_row: dimension mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

std::strong_ordering IntMatrix::operator<=>(const IntMatrix& other) const {
  if (auto c = rows_ <=> other.rows_; c != 0) return c;
  if (auto c = cols_ <=> other.cols_; c != 0) return c;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] < other.a_[i]) return std::strong_ordering::less;
    if (a_[i] > other.a_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec mat_apply(const IntMatrix& a, const IntVec& v) {
  if (a.cols() != static_cast<int>(v.size()))
    throw std::invalid_argument("mat_apply: dimension mismatch");
  IntVec out(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < a.cols(); ++j) s += a.at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

IntVec row_apply(const IntVec& v, const IntMatrix& a) {
  if (a.rows() != static_cast<int>(v.size()))
    throw std::invalid_argument("row_apply: dimension mismatch");
  IntVec out(a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    Int s = 0;
    for (int i = 0; i < a.rows(); ++i) s += v[i] * a.at(i, j);
    out[j] = s;
  }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void negate_row(IntMatrix& m, int i) {
  for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

// row_i -= t * row_j
void add_row_multiple(IntMatrix& m, int i, int j, const Int& t) {
  if (t == 0) return;
  for (int c = 0; c < m.cols(); ++c) m.at(i, c) -= t * m.at(j, c);
}

// Replace rows (i, j) by (p*ri + q*rj, a/g*rj - b/g*ri) where
// g = p*a + q*b = gcd(a, b); the 2x2 transform has determinant 1.
void gcd_rows(IntMatrix& m, IntMatrix& u, int i, int j, const Int& a, const Int& b) {
  Xgcd e = xgcd(a, b);
  Int adg = a / e.g, bdg = b / e.g;
  for (IntMatrix* mat : {&m, &u}) {
    for (int c = 0; c < mat->cols(); ++c) {
      Int ri = mat->at(i, c), rj = mat->at(j, c);
      mat->at(i, c) = e.p * ri + e.q * rj;
      mat->at(j, c) = adg * rj - bdg * ri;
    }
  }
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  int pivot_row = 0;
  for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    int nz = -1;
    for (int i = pivot_row; i < h.rows(); ++i)
      if (h.at(i, col) != 0) {
        nz = i;
        break;
      }
    if (nz < 0) continue;
    swap_rows(h, pivot_row, nz);
    swap_rows(u, pivot_row, nz);
    for (int i = pivot_row + 1; i < h.rows(); ++i) {
      if (h.at(i, col) == 0) continue;
      Int pa = h.at(pivot_row, col), pb = h.at(i, col);
      gcd_rows(h, u, pivot_row, i, pa, pb);
    }
    if (h.at(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    const Int& p = h.at(pivot_row, col);
    for (int i = 0; i < pivot_row; ++i) {
      Int t = floor_div(h.at(i, col), p);
      add_row_multiple(h, i, pivot_row, t);
      add_row_multiple(u, i, pivot_row, t);
    }
    ++pivot_row;
  }
  return {h, u};
}

SnfResult snf(const IntMatrix& a) {
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const int n = std::min(a.rows(), a.cols());

  auto swap_cols = [](IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
  };
  auto gcd_cols = [](IntMatrix& m, IntMatrix& w, int i, int j, const Int& ca, const Int& cb) {
    Xgcd e = xgcd(ca, cb);
    Int adg = ca / e.g, bdg = cb / e.g;
    for (IntMatrix* mat : {&m, &w}) {
      for (int r = 0; r < mat->rows(); ++r) {
        Int ci = mat->at(r, i), cj = mat->at(r, j);
        mat->at(r, i) = e.p * ci + e.q * cj;
        mat->at(r, j) = adg * cj - bdg * ci;
      }
    }
  };

  for (int t = 0; t < n; ++t) {
    // Move a nonzero entry of the trailing block to (t, t).
    int pi = -1, pj = -1;
    for (int i = t; i < s.rows() && pi < 0; ++i)
      for (int j = t; j < s.cols(); ++j)
        if (s.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    swap_rows(s, t, pi);
    swap_rows(u, t, pi);
    swap_cols(s, t, pj);
    swap_cols(v, t, pj);

    for (bool clean = false; !clean;) {
      for (int i = t + 1; i < s.rows(); ++i)
        if (s.at(i, t) != 0) gcd_rows(s, u, t, i, s.at(t, t), s.at(i, t));
      for (int j = t + 1; j < s.cols(); ++j)
        if (s.at(t, j) != 0) gcd_cols(s, v, t, j, s.at(t, t), s.at(t, j));
      clean = true;
      for (int i = t + 1; i < s.rows(); ++i)
        if (s.at(i, t) != 0) clean = false;
      // Divisibility: fold in any entry the pivot does not divide.
      if (clean) {
        bool fixed = false;
        for (int i = t + 1; i < s.rows() && !fixed; ++i)
          for (int j = t + 1; j < s.cols() && !fixed; ++j)
            if (s.at(i, j) % s.at(t, t) != 0) {
              add_row_multiple(s, t, i, Int(-1));
              add_row_multiple(u, t, i, Int(-1));
              fixed = true;
            }
        if (fixed) clean = false;
      }
    }
    if (s.at(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return {s, u, v};
}

int rank(const IntMatrix& a) {
  IntMatrix h = hnf(a).h;
  int r = 0;
  for (int i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++r;
  }
  return r;
}

Int det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: square matrix required");
  const int n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      swap_rows(m, k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unimodular_inverse: square required");
  HnfResult r = hnf(u);
  if (r.h != IntMatrix::identity(u.rows()))
    throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
  return r.u;
}

IntMatrix left_kernel(const IntMatrix& a) {
  HnfResult r = hnf(a);
  std::vector<IntVec> rows;
  for (int i = 0; i < r.h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < r.h.cols(); ++j)
      if (r.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) rows.push_back(r.u.row(i));
  }
  IntMatrix k = IntMatrix::from_rows(rows, a.rows());
  return hnf(k).h;  // canonical basis; kernels of this form are saturated
}

}  // namespace semitoric
