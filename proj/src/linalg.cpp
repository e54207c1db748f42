#include "alcove/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace alcove {

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in multiply");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in add");
  return r;
}

Mat Mat::identity(int n) {
  Mat I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  assert(A.cols == B.rows);
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      Int aik = A(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        C(i, j) = checked_add(C(i, j), checked_mul(aik, B(k, j)));
    }
  return C;
}

Vec mat_vec(const Mat& A, const Vec& x) {
  assert(static_cast<int>(x.size()) == A.cols);
  Vec y(A.rows, 0);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      y[i] = checked_add(y[i], checked_mul(A(i, j), x[j]));
  return y;
}

Vec vec_sub(const Vec& x, const Vec& y) {
  assert(x.size() == y.size());
  Vec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

Vec vec_add(const Vec& x, const Vec& y) {
  assert(x.size() == y.size());
  Vec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = checked_add(x[i], y[i]);
  return z;
}

Vec vec_scale(Int c, const Vec& x) {
  Vec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = checked_mul(c, x[i]);
  return z;
}

Int dot(const Vec& x, const Vec& y) {
  assert(x.size() == y.size());
  Int s = 0;
  for (size_t i = 0; i < x.size(); ++i) s = checked_add(s, checked_mul(x[i], y[i]));
  return s;
}

bool is_zero(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; });
}

namespace {

struct Frac {
  Int num = 0, den = 1;

  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    Int g = std::gcd(std::abs(num), den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }
  static Frac make(Int n, Int d) {
    Frac f{n, d};
    f.reduce();
    return f;
  }
};

Frac fadd(Frac a, Frac b) { return Frac::make(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)), checked_mul(a.den, b.den)); }
Frac fsub(Frac a, Frac b) { return Frac::make(checked_mul(a.num, b.den) - checked_mul(b.num, a.den), checked_mul(a.den, b.den)); }
Frac fmul(Frac a, Frac b) { return Frac::make(checked_mul(a.num, b.num), checked_mul(a.den, b.den)); }
Frac fdiv(Frac a, Frac b) {
  if (b.num == 0) throw Error("division by zero");
  return Frac::make(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

}  // namespace

Int det(Mat A) {
  if (A.rows != A.cols) throw Error("det: matrix not square");
  int n = A.rows;
  // Bareiss fraction-free elimination.
  Int prev = 1, sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (A(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int v = checked_mul(A(i, j), A(k, k)) - checked_mul(A(i, k), A(k, j));
        assert(v % prev == 0);
        A(i, j) = v / prev;
      }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

int rank(Mat A) {
  int r = 0;
  int n = A.rows, m = A.cols;
  for (int col = 0; col < m && r < n; ++col) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (A(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    for (int j = 0; j < m; ++j) std::swap(A(r, j), A(p, j));
    for (int i = r + 1; i < n; ++i) {
      // integer row elimination: scale rows, growth is harmless at our sizes
      Int a = A(i, col), b = A(r, col);
      if (a == 0) continue;
      Int g = std::gcd(std::abs(a), std::abs(b));
      Int ma = b / g, mb = a / g;
      for (int j = 0; j < m; ++j)
        A(i, j) = checked_mul(ma, A(i, j)) - checked_mul(mb, A(r, j));
    }
    ++r;
  }
  return r;
}

Smith smith_normal_form(Mat A) {
  int n = A.rows, m = A.cols;
  Smith s;
  s.rows = n;
  s.cols = m;
  s.P = Mat::identity(n);
  Mat D = A;

  auto row_swap = [&](int i, int j) {
    for (int c = 0; c < m; ++c) std::swap(D(i, c), D(j, c));
    for (int c = 0; c < n; ++c) std::swap(s.P(i, c), s.P(j, c));
  };
  auto row_addmul = [&](int i, int j, Int c) {  // row_i += c * row_j
    for (int k = 0; k < m; ++k) D(i, k) = checked_add(D(i, k), checked_mul(c, D(j, k)));
    for (int k = 0; k < n; ++k) s.P(i, k) = checked_add(s.P(i, k), checked_mul(c, s.P(j, k)));
  };
  auto row_negate = [&](int i) {
    for (int k = 0; k < m; ++k) D(i, k) = -D(i, k);
    for (int k = 0; k < n; ++k) s.P(i, k) = -s.P(i, k);
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(D(r, i), D(r, j));
  };
  auto col_addmul = [&](int i, int j, Int c) {  // col_i += c * col_j
    for (int r = 0; r < n; ++r) D(r, i) = checked_add(D(r, i), checked_mul(c, D(r, j)));
  };

  int t = 0;
  int lim = std::min(n, m);
  while (t < lim) {
    // find pivot: nonzero entry of smallest absolute value in D[t.., t..]
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (D(i, j) != 0 && (pi < 0 || std::abs(D(i, j)) < best)) {
          pi = i; pj = j; best = std::abs(D(i, j));
        }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (D(t, t) < 0) row_negate(t);

    bool dirty = false;
    for (int i = t + 1; i < n; ++i)
      if (D(i, t) != 0) {
        Int q = D(i, t) / D(t, t);
        row_addmul(i, t, -q);
        if (D(i, t) != 0) dirty = true;
      }
    for (int j = t + 1; j < m; ++j)
      if (D(t, j) != 0) {
        Int q = D(t, j) / D(t, t);
        col_addmul(j, t, -q);
        if (D(t, j) != 0) dirty = true;
      }
    if (dirty) continue;  // pivot shrank; redo this corner

    // enforce divisibility d_t | D(i,j) for the rest
    bool fixed = true;
    for (int i = t + 1; i < n && fixed; ++i)
      for (int j = t + 1; j < m && fixed; ++j)
        if (D(i, j) % D(t, t) != 0) {
          row_addmul(t, i, 1);
          fixed = false;
        }
    if (!fixed) continue;
    ++t;
  }

  s.diag.assign(lim, 0);
  for (int i = 0; i < lim; ++i) s.diag[i] = D(i, i);
  return s;
}

Vec Smith::class_key(const Vec& x) const {
  assert(static_cast<int>(x.size()) == rows);
  Vec y = mat_vec(P, x);
  for (int i = 0; i < rows; ++i) {
    Int d = (i < static_cast<int>(diag.size())) ? diag[i] : 0;
    if (d > 0) {
      y[i] %= d;
      if (y[i] < 0) y[i] += d;
    }
  }
  return y;
}

std::vector<Int> Smith::invariant_factors() const {
  std::vector<Int> out;
  for (Int d : diag)
    if (d > 1) out.push_back(d);
  int free_rank = rows;
  for (Int d : diag)
    if (d != 0) --free_rank;
  for (int i = 0; i < free_rank; ++i) out.push_back(0);
  return out;
}

Int Smith::class_order(const Vec& x) const {
  Vec y = mat_vec(P, x);
  Int ord = 1;
  for (int i = 0; i < rows; ++i) {
    Int d = (i < static_cast<int>(diag.size())) ? diag[i] : 0;
    if (d == 0) {
      if (y[i] != 0) throw Error("class_order: element has infinite order");
      continue;
    }
    Int r = ((y[i] % d) + d) % d;
    Int o = d / std::gcd(r, d);
    ord = std::lcm(ord, o);
  }
  return ord;
}

void RatVec::normalize() {
  if (den < 0) {
    den = -den;
    for (auto& v : num) v = -v;
  }
  Int g = den;
  for (Int v : num) g = std::gcd(g, std::abs(v));
  if (g > 1) {
    den /= g;
    for (auto& v : num) v /= g;
  }
}

RatVec rat_sub(const RatVec& x, const RatVec& y) {
  RatVec z;
  z.den = std::lcm(x.den, y.den);
  Int cx = z.den / x.den, cy = z.den / y.den;
  z.num.resize(x.num.size());
  for (size_t i = 0; i < x.num.size(); ++i)
    z.num[i] = checked_mul(cx, x.num[i]) - checked_mul(cy, y.num[i]);
  z.normalize();
  return z;
}

RatVec rat_add(const RatVec& x, const RatVec& y) {
  RatVec z;
  z.den = std::lcm(x.den, y.den);
  Int cx = z.den / x.den, cy = z.den / y.den;
  z.num.resize(x.num.size());
  for (size_t i = 0; i < x.num.size(); ++i)
    z.num[i] = checked_add(checked_mul(cx, x.num[i]), checked_mul(cy, y.num[i]));
  z.normalize();
  return z;
}

RatVec solve_exact(Mat A, Vec b) {
  if (A.rows != A.cols) throw Error("solve_exact: matrix not square");
  int n = A.rows;
  std::vector<std::vector<Frac>> M(n, std::vector<Frac>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = Frac{A(i, j), 1};
    M[i][n] = Frac{b[i], 1};
  }
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (M[i][k].num != 0) { p = i; break; }
    if (p < 0) throw Error("solve_exact: singular matrix");
    std::swap(M[k], M[p]);
    for (int i = 0; i < n; ++i) {
      if (i == k || M[i][k].num == 0) continue;
      Frac f = fdiv(M[i][k], M[k][k]);
      for (int j = k; j <= n; ++j) M[i][j] = fsub(M[i][j], fmul(f, M[k][j]));
    }
  }
  RatVec out;
  out.num.resize(n);
  Int den = 1;
  std::vector<Frac> xs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = fdiv(M[i][n], M[i][i]);
    den = std::lcm(den, xs[i].den);
  }
  out.den = den;
  for (int i = 0; i < n; ++i) out.num[i] = checked_mul(xs[i].num, den / xs[i].den);
  out.normalize();
  return out;
}

std::vector<Vec> nullspace(Mat A) {
  int n = A.rows, m = A.cols;
  std::vector<std::vector<Frac>> M(n, std::vector<Frac>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) M[i][j] = Frac{A(i, j), 1};

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (M[i][c].num != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(M[r], M[p]);
    for (int i = 0; i < n; ++i) {
      if (i == r || M[i][c].num == 0) continue;
      Frac f = fdiv(M[i][c], M[r][c]);
      for (int j = 0; j < m; ++j) M[i][j] = fsub(M[i][j], fmul(f, M[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<Vec> basis;
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int c = 0; c < m; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Frac> x(m, Frac{0, 1});
    x[c] = Frac{1, 1};
    for (int i = 0; i < r; ++i)
      x[pivot_col[i]] = fsub(Frac{0, 1}, fdiv(M[i][c], M[i][pivot_col[i]]));
    Int den = 1;
    for (auto& f : x) den = std::lcm(den, f.den);
    Vec v(m);
    for (int j = 0; j < m; ++j) v[j] = checked_mul(x[j].num, den / x[j].den);
    Int g = 0;
    for (Int t : v) g = std::gcd(g, std::abs(t));
    if (g > 1)
      for (Int& t : v) t /= g;
    basis.push_back(v);
  }
  return basis;
}

}  // namespace alcove
