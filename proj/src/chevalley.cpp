#include "alcove/chevalley.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace alcove {

bool TitsElement::is_diagonal() const {
  for (size_t g = 0; g < perm.size(); ++g)
    if (perm[g] != static_cast<int>(g)) return false;
  return true;
}

int ChevalleyAlgebra::string_depth(int g, int h) const {
  // max k with (h - k g) a root
  const RootDatum& d = *datum_;
  int depth = 0;
  Vec cur = d.root(h).alpha;
  for (;;) {
    cur = vec_sub(cur, d.root(g).alpha);
    if (d.root_index(cur) < 0) break;
    ++depth;
  }
  return depth;
}

ChevalleyAlgebra ChevalleyAlgebra::build(const RootDatum& d) {
  if (!d.is_irreducible()) throw Error("Chevalley algebra requires an irreducible datum");
  if (d.rank() > 8) throw Error("rank limit exceeded");
  ChevalleyAlgebra A;
  A.datum_ = std::make_shared<RootDatum>(d);
  A.build_constants();
  A.build_simple_lifts();
  return A;
}

void ChevalleyAlgebra::build_constants() {
  const RootDatum& d = *datum_;
  int nr = d.num_roots();
  int np = nr / 2;
  ntab_.assign(static_cast<size_t>(nr) * nr, 0);
  auto nt = [&](int g, int h) -> Int& { return ntab_[static_cast<size_t>(g) * nr + h]; };

  // N_{u,-v} for positive u != v, zero unless u - v is a root; reduces to
  // already-known positive pairs of smaller sum height
  auto nmixed = [&](int u, int v) -> Int {
    Vec diff = vec_sub(d.root(u).alpha, d.root(v).alpha);
    int widx = d.root_index(diff);
    if (widx < 0) return 0;
    if (d.root(widx).positive) {
      // u = v + w: N_{u,-v} = -(w,w) N_{v,w} / (u,u)
      Int num = checked_mul(-d.root(widx).norm2, nt(v, widx));
      if (num % d.root(u).norm2 != 0) throw Error("structure constant reduction not integral");
      return num / d.root(u).norm2;
    }
    int wp = d.root(widx).negative_of;  // w' = v - u > 0
    // v = w' + u: N_{u,-v} = (w',w') N_{w',u} / (v,v)
    Int num = checked_mul(d.root(wp).norm2, nt(wp, u));
    if (num % d.root(v).norm2 != 0) throw Error("structure constant reduction not integral");
    return num / d.root(v).norm2;
  };

  // extraspecial pairs and induction over the height of the sum; the
  // canonical storage order is already height-then-lex
  for (int g = 0; g < np; ++g) {
    const Root& gamma = d.root(g);
    if (gamma.height < 2) continue;
    int eps = -1, eta = -1;
    for (int u = 0; u < np && eps < 0; ++u) {
      Vec rest = vec_sub(gamma.alpha, d.root(u).alpha);
      int v = d.root_index(rest);
      if (v >= 0 && d.root(v).positive) {
        eps = u;
        eta = v;
      }
    }
    if (eps < 0) throw Error("no decomposition of a non-simple root");
    Int n_eps_eta = string_depth(eps, eta) + 1;

    for (int u = 0; u < np; ++u) {
      Vec rest = vec_sub(gamma.alpha, d.root(u).alpha);
      int v = d.root_index(rest);
      if (v < 0 || !d.root(v).positive) continue;
      Int value;
      if (u == eps) {
        value = n_eps_eta;
      } else if (u == eta) {
        value = -n_eps_eta;
      } else {
        // N_{u,v} N_{eps,eta}/(g,g) =
        //   N_{eta,-u} N_{eps,-v}/|eta-u|^2 + N_{-u,eps} N_{eta,-v}/|eps-u|^2
        Int total_num = 0, total_den = 1;
        Vec du = vec_sub(d.root(eta).alpha, d.root(u).alpha);
        if (d.root_index(du) >= 0) {
          Int t = checked_mul(nmixed(eta, u), nmixed(eps, v));
          Int den = d.root(d.root_index(du)).norm2;
          total_num = checked_add(checked_mul(total_num, den), checked_mul(t, total_den));
          total_den = checked_mul(total_den, den);
        }
        Vec de = vec_sub(d.root(eps).alpha, d.root(u).alpha);
        if (d.root_index(de) >= 0) {
          Int t = checked_mul(-nmixed(eps, u), nmixed(eta, v));
          Int den = d.root(d.root_index(de)).norm2;
          total_num = checked_add(checked_mul(total_num, den), checked_mul(t, total_den));
          total_den = checked_mul(total_den, den);
        }
        Int num = checked_mul(gamma.norm2, total_num);
        Int den = checked_mul(total_den, n_eps_eta);
        if (den == 0 || num % den != 0) throw Error("structure constant induction not integral");
        value = num / den;
      }
      nt(u, v) = value;
      nt(v, u) = -value;
    }
  }

  // extend to all sign combinations
  for (int u = 0; u < np; ++u)
    for (int v = 0; v < np; ++v) {
      if (u == v) continue;
      Int m = nmixed(u, v);
      int nu = d.root(u).negative_of, nv = d.root(v).negative_of;
      if (m != 0) {
        nt(u, nv) = m;
        nt(nv, u) = -m;
      }
      if (nt(u, v) != 0) {
        nt(nu, nv) = -nt(u, v);
        nt(nv, nu) = nt(u, v);
      }
    }

  // verification: antisymmetry and |N| = p + 1 wherever the sum is a root
  for (int g = 0; g < nr; ++g)
    for (int h = 0; h < nr; ++h) {
      Vec sum = vec_add(d.root(g).alpha, d.root(h).alpha);
      int idx = d.root_index(sum);
      if (idx < 0) {
        if (nt(g, h) != 0) throw Error("nonzero constant for a non-root sum");
        continue;
      }
      if (nt(g, h) != -nt(h, g)) throw Error("structure constants are not antisymmetric");
      if (std::abs(nt(g, h)) != string_depth(g, h) + 1)
        throw Error("structure constant magnitude differs from the string depth");
    }
}

void ChevalleyAlgebra::build_simple_lifts() {
  const RootDatum& d = *datum_;
  int nr = d.num_roots();
  int r = d.rank();
  int n = dim();

  // dense ad matrix of coeff * X_g: basis = root spaces, then Cartan
  auto ad_matrix = [&](int g, Int coeff) {
    Mat M(n, n);
    for (int h = 0; h < nr; ++h) {
      Vec sum = vec_add(d.root(g).alpha, d.root(h).alpha);
      if (is_zero(sum)) {
        const Vec& cor = d.root(g).alpha_check;
        for (int i = 0; i < r; ++i) M(nr + i, h) = checked_mul(coeff, cor[i]);
        continue;
      }
      int idx = d.root_index(sum);
      if (idx >= 0) M(idx, h) = checked_mul(coeff, structure_constant(g, h));
    }
    for (int j = 0; j < r; ++j) {
      // [X_g, H_j] = -<gamma, alpha_j^vee> X_g
      Int p = 0;
      for (int i = 0; i < r; ++i) p = checked_add(p, checked_mul(d.root(g).alpha[i], d.cartan(i, j)));
      M(g, nr + j) = checked_mul(coeff, -p);
    }
    return M;
  };

  auto scaled_exp = [&](const Mat& A) {
    // 24 * exp(A); requires A^5 = 0
    Mat A2 = mat_mul(A, A);
    Mat A3 = mat_mul(A2, A);
    Mat A4 = mat_mul(A3, A);
    Mat A5 = mat_mul(A4, A);
    for (Int v : A5.a)
      if (v != 0) throw Error("ad matrix is not nilpotent of index <= 5");
    Mat E(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        E(i, j) = 24 * (i == j ? 1 : 0) + 24 * A(i, j) + 12 * A2(i, j) + 4 * A3(i, j) + A4(i, j);
    return E;
  };

  simple_.clear();
  for (int i = 0; i < r; ++i) {
    int g = d.simple_root_index(i);
    int ng = d.root(g).negative_of;
    Mat E1 = scaled_exp(ad_matrix(g, 1));
    Mat E2 = scaled_exp(ad_matrix(ng, -1));
    Mat P = mat_mul(mat_mul(E1, E2), E1);  // 24^3 * n_beta
    const Int scale = 24ll * 24 * 24;
    TitsElement t;
    t.perm.assign(nr, -1);
    t.signs.assign(nr, 0);
    t.cartan_block = Mat(r, r);
    t.underlying = d.canonicalize({i + 1});
    for (int col = 0; col < n; ++col)
      for (int row = 0; row < n; ++row) {
        if (P(row, col) % scale != 0) throw Error("lift matrix is not integral");
        P(row, col) /= scale;
      }
    for (int col = 0; col < nr; ++col) {
      int hits = 0;
      for (int row = 0; row < n; ++row) {
        if (P(row, col) == 0) continue;
        ++hits;
        if (row >= nr || std::abs(P(row, col)) != 1)
          throw Error("lift is not monomial on the root spaces");
        t.perm[col] = row;
        t.signs[col] = static_cast<int>(P(row, col));
      }
      if (hits != 1) throw Error("lift is not monomial on the root spaces");
      if (t.perm[col] != d.act_on_root(t.underlying, col))
        throw Error("lift permutation disagrees with the Weyl action");
    }
    for (int col = 0; col < r; ++col)
      for (int row = 0; row < n; ++row) {
        if (row < nr) {
          if (P(row, nr + col) != 0) throw Error("lift mixes Cartan and root spaces");
        } else {
          t.cartan_block(row - nr, col) = P(row, nr + col);
        }
      }
    simple_.push_back(std::move(t));
  }
}

TitsElement ChevalleyAlgebra::identity_element() const {
  const RootDatum& d = *datum_;
  TitsElement t;
  t.perm.resize(d.num_roots());
  std::iota(t.perm.begin(), t.perm.end(), 0);
  t.signs.assign(d.num_roots(), 1);
  t.cartan_block = Mat::identity(d.rank());
  return t;
}

TitsElement ChevalleyAlgebra::compose(const TitsElement& a, const TitsElement& b) const {
  TitsElement t;
  int nr = datum_->num_roots();
  t.perm.resize(nr);
  t.signs.resize(nr);
  for (int g = 0; g < nr; ++g) {
    t.perm[g] = a.perm[b.perm[g]];
    t.signs[g] = b.signs[g] * a.signs[b.perm[g]];
  }
  t.cartan_block = mat_mul(a.cartan_block, b.cartan_block);
  t.underlying = datum_->multiply(a.underlying, b.underlying);
  return t;
}

TitsElement ChevalleyAlgebra::invert(const TitsElement& a) const {
  TitsElement t;
  int nr = datum_->num_roots();
  int r = datum_->rank();
  t.perm.resize(nr);
  t.signs.resize(nr);
  for (int g = 0; g < nr; ++g) {
    t.perm[a.perm[g]] = g;
    t.signs[a.perm[g]] = a.signs[g];
  }
  t.cartan_block = Mat(r, r);
  for (int col = 0; col < r; ++col) {
    Vec e(r, 0);
    e[col] = 1;
    RatVec sol = solve_exact(a.cartan_block, e);
    if (sol.den != 1) throw Error("Cartan block inverse is not integral");
    for (int row = 0; row < r; ++row) t.cartan_block(row, col) = sol.num[row];
  }
  t.underlying = datum_->inverse(a.underlying);
  return t;
}

TitsElement ChevalleyAlgebra::tits_lift_word(const std::vector<int>& reduced_word) const {
  WeylElement check = datum_->canonicalize(reduced_word);
  if (check.length() != static_cast<int>(reduced_word.size()))
    throw Error("tits lift requires a reduced word");
  TitsElement acc = identity_element();
  for (int letter : reduced_word) acc = compose(acc, simple_[letter - 1]);
  return acc;
}

TitsElement ChevalleyAlgebra::tits_lift(const WeylElement& w) const {
  return tits_lift_word(w.word);
}

TitsElement ChevalleyAlgebra::torus_minus_one(const Vec& mu_cw) const {
  const RootDatum& d = *datum_;
  TitsElement t = identity_element();
  for (int g = 0; g < d.num_roots(); ++g)
    t.signs[g] = (dot(d.root(g).alpha, mu_cw) % 2 == 0) ? 1 : -1;
  return t;
}

std::pair<int, int> ChevalleyAlgebra::sign_action(const TitsElement& n, int root_idx) const {
  return {n.perm[root_idx], n.signs[root_idx]};
}

Mat ChevalleyAlgebra::full_matrix(const TitsElement& t) const {
  int nr = datum_->num_roots();
  int r = datum_->rank();
  Mat M(nr + r, nr + r);
  for (int g = 0; g < nr; ++g) M(t.perm[g], g) = t.signs[g];
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) M(nr + i, nr + j) = t.cartan_block(i, j);
  return M;
}

int ChevalleyAlgebra::root_image_under(const std::vector<int>& simple_perm, int root_idx) const {
  const RootDatum& d = *datum_;
  const Vec& al = d.root(root_idx).alpha;
  Vec im(d.rank(), 0);
  for (int i = 0; i < d.rank(); ++i) im[simple_perm[i]] = al[i];
  int idx = d.root_index(im);
  if (idx < 0) throw Error("diagram automorphism image is not a root");
  return idx;
}

int torus_sign(const RootDatum& d, int coroot_of, int delta) {
  Int p = d.pair_root_coroot(d.root(delta).alpha, d.root(coroot_of).alpha_check);
  return p % 2 == 0 ? 1 : -1;
}

W0SquareCertificate w0_square_identity(const ChevalleyAlgebra& A) {
  const RootDatum& d = A.datum();
  W0SquareCertificate cert;
  cert.dimension = A.dim();
  TitsElement n0 = A.tits_lift(d.longest_element());
  TitsElement sq = A.compose(n0, n0);
  bool ok = sq.is_diagonal();
  for (int g = 0; ok && g < d.num_roots(); ++g) {
    int expect = d.rho_pairing(g) % 2 == 0 ? 1 : -1;
    if (sq.signs[g] != expect) ok = false;
  }
  if (!(sq.cartan_block == Mat::identity(d.rank()))) ok = false;
  cert.verified = ok;
  cert.detail = ok ? "matrix equality holds" : "matrix equality failed";
  return cert;
}

}  // namespace alcove
