#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer and rational linear algebra on small dense matrices.
// Everything here works over Z or Q with no floating point; matrices in
// this project are at most dim(E8) = 248 on a side and usually <= 9.

namespace alcove {

using Int = long long;
using Vec = std::vector<Int>;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arbitrary-precision is not needed here: entries stay tiny.  Guarded
// multiply/add keep us honest in debug builds.
Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  Int operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);
  bool operator==(const Mat& o) const = default;
};

Mat mat_mul(const Mat& A, const Mat& B);
Vec mat_vec(const Mat& A, const Vec& x);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_add(const Vec& x, const Vec& y);
Vec vec_scale(Int c, const Vec& x);
Int dot(const Vec& x, const Vec& y);
bool is_zero(const Vec& x);

// Determinant by fraction-free (Bareiss) elimination.
Int det(Mat A);

// Rank over Q.
int rank(Mat A);

// Smith normal form: P * A * Q = D with P, Q unimodular and D diagonal
// with d_1 | d_2 | ... (trailing zeros for rank deficiency).  Only P and
// the diagonal are needed by callers.
struct Smith {
  Mat P;                  // rows x rows, unimodular
  std::vector<Int> diag;  // length min(rows, cols), nonneg, divisibility chain
  int rows = 0, cols = 0;

  // Class key of x in Z^rows / (column span of A): (P x)_i reduced mod
  // diag_i where diag_i > 0; coordinates beyond the column rank are free
  // and kept exact.
  Vec class_key(const Vec& x) const;
  bool in_lattice(const Vec& x) const { return is_zero(class_key(x)); }
  // Invariant factors of the torsion part (entries > 1), then one 0 per
  // free rank, matching the convention used throughout the library.
  std::vector<Int> invariant_factors() const;
  // Additive order of [x]; throws if the class has infinite order.
  Int class_order(const Vec& x) const;
};

Smith smith_normal_form(Mat A);

// Exact rational vector with a single positive denominator.
struct RatVec {
  Vec num;
  Int den = 1;

  void normalize();
  static RatVec integral(const Vec& v) { return RatVec{v, 1}; }
  bool operator==(const RatVec& o) const = default;
};

RatVec rat_sub(const RatVec& x, const RatVec& y);
RatVec rat_add(const RatVec& x, const RatVec& y);

// Solve A x = b exactly over Q; A square nonsingular.
RatVec solve_exact(Mat A, Vec b);

// Primitive integral basis of the rational nullspace of A (x with A x = 0).
std::vector<Vec> nullspace(Mat A);

}  // namespace alcove
