#pragma once

#include "semitoric/int_types.hpp"

#include <compare>
#include <vector>

namespace semitoric {

/// Dense row-major integer matrix. Zero rows/columns are allowed so that
/// rank-0 lattices and empty generator lists have honest carriers.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntVec row(int i) const;
  std::vector<IntVec> row_list() const;
  void set_row(int i, const IntVec& v);

  IntMatrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  std::strong_ordering operator<=>(const IntMatrix& other) const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
/// A * v with v as a column vector.
IntVec mat_apply(const IntMatrix& a, const IntVec& v);
/// v * A with v as a row vector.
IntVec row_apply(const IntVec& v, const IntMatrix& a);

/// Row-style Hermite normal form: h = u * a with u unimodular, zero rows
/// last, pivots positive and entries above each pivot reduced into
/// [0, pivot).
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};
HnfResult hnf(const IntMatrix& a);

/// Smith normal form: s = u * a * v diagonal with d1 | d2 | ... and u, v
/// unimodular.
struct SnfResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};
SnfResult snf(const IntMatrix& a);

int rank(const IntMatrix& a);
/// Determinant of a square matrix (fraction-free elimination).
Int det(const IntMatrix& a);
/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Basis of { x : x * a = 0 }, saturated by construction, rows in HNF.
IntMatrix left_kernel(const IntMatrix& a);

}  // namespace semitoric
