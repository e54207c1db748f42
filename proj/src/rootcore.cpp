#include "alcove/rootcore.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace alcove {

namespace {

std::string vec_key(const Vec& v) {
  std::string s;
  s.reserve(v.size() * 3);
  for (Int x : v) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

}  // namespace

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw Error(std::string("unknown family '") + c + "'");
  }
}

void CartanType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw Error("invalid rank " + std::to_string(rank) + " for family " +
                std::string(1, static_cast<char>(family)));
  bool twist_ok = twist == 1;
  if (twist == 2)
    twist_ok = (family == Family::A && rank >= 2) || family == Family::D ||
               (family == Family::E && rank == 6);
  if (twist == 3) twist_ok = family == Family::D && rank == 4;
  if (!twist_ok)
    throw Error("invalid twist " + std::to_string(twist) + " for type " +
                std::string(1, static_cast<char>(family)) + std::to_string(rank));
}

std::string CartanType::name() const {
  std::string s;
  if (twist > 1) s += std::to_string(twist);
  s += static_cast<char>(family);
  s += std::to_string(rank);
  return s;
}

Mat cartan_matrix(CartanType type) {
  type.validate();
  int n = type.rank;
  Mat C(n, n);
  auto chain = [&](int i, int j) {  // single bond, 0-based
    C(i, j) = -1;
    C(j, i) = -1;
  };
  for (int i = 0; i < n; ++i) C(i, i) = 2;
  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      C(n - 2, n - 1) = -2;  // <alpha_{n-1}, alpha_n^vee>, alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      C(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
      chain(0, 2);
      chain(2, 3);
      chain(3, 4);
      chain(4, 5);
      if (n >= 7) chain(5, 6);
      if (n >= 8) chain(6, 7);
      chain(1, 3);
      break;
    case Family::F:
      chain(0, 1);
      chain(1, 2);
      chain(2, 3);
      C(1, 2) = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Family::G:
      chain(0, 1);
      C(1, 0) = -3;  // alpha_1 short, alpha_2 long
      break;
  }
  return C;
}

std::vector<int> diagram_automorphism(CartanType type) {
  type.validate();
  int n = type.rank;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (type.twist == 1) return p;
  if (type.family == Family::A) {
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  } else if (type.family == Family::D && type.twist == 2) {
    std::swap(p[n - 2], p[n - 1]);
  } else if (type.family == Family::D && type.twist == 3) {
    p[0] = 2; p[2] = 3; p[3] = 0;  // Bourbaki 1 -> 3 -> 4 -> 1
  } else if (type.family == Family::E) {
    p[0] = 5; p[5] = 0; p[2] = 4; p[4] = 2;
  }
  Mat C = cartan_matrix(type);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (C(p[i], p[j]) != C(i, j)) throw Error("diagram automorphism does not preserve the Cartan matrix");
  return p;
}

Int FundamentalGroup::order() const {
  Int o = 1;
  for (Int d : invariant_factors) {
    if (d == 0) throw Error("fundamental group has free part");
    o = checked_mul(o, d);
  }
  return o;
}

RootDatum RootDatum::build(CartanType type, Isogeny isogeny, std::optional<Mat> cochar_basis) {
  type.validate();
  RootDatum d;
  d.type_ = type;
  d.isogeny_ = isogeny;
  d.rank_ = type.rank;
  d.cartan_ = alcove::cartan_matrix(type);

  if (isogeny == Isogeny::intermediate) {
    if (!cochar_basis) throw Error("intermediate isogeny requires an explicit cocharacter basis");
    d.cochar_basis_ = *cochar_basis;
  }
  d.finish_construction();
  return d;
}

RootDatum RootDatum::build_so(CartanType type) {
  if (type.family == Family::B) return build(type, Isogeny::adjoint);
  if (type.family != Family::D) throw Error("build_so: type must be B or D");
  int n = type.rank;
  // X_*(T) for SO_{2n}: the standard lattice Z<e_i>, written in the
  // fundamental-coweight basis via coordinates <alpha_j, e_i>.
  Mat L(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) L(i, j) = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
    L(i, n - 1) = (i == n - 2 ? 1 : 0) + (i == n - 1 ? 1 : 0);
  }
  return build(type, Isogeny::intermediate, L);
}

RootDatum RootDatum::product(const RootDatum& a, const RootDatum& b) {
  RootDatum d;
  d.type_ = a.type_;  // nominal; a product is never a valid simple type
  d.isogeny_ = Isogeny::adjoint;
  d.rank_ = a.rank_ + b.rank_;
  d.cartan_ = Mat(d.rank_, d.rank_);
  for (int i = 0; i < a.rank_; ++i)
    for (int j = 0; j < a.rank_; ++j) d.cartan_(i, j) = a.cartan_(i, j);
  for (int i = 0; i < b.rank_; ++i)
    for (int j = 0; j < b.rank_; ++j) d.cartan_(a.rank_ + i, a.rank_ + j) = b.cartan_(i, j);
  d.finish_construction();
  return d;
}

void RootDatum::finish_construction() {
  int n = rank_;

  // Symmetrizers: d_i with d_i * C(i,j) = d_j * C(j,i), short roots d = 1.
  sym_.assign(n, 0);
  std::deque<int> bfs;
  for (int comp = 0; comp < n; ++comp) {
    if (sym_[comp] != 0) continue;
    sym_[comp] = 1;
    bfs.push_back(comp);
    while (!bfs.empty()) {
      int i = bfs.front();
      bfs.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan_(i, j) == 0 || sym_[j] != 0) continue;
        // symmetry d_j C(i,j) = d_i C(j,i) gives d_j = d_i C(j,i) / C(i,j)
        Int num = checked_mul(sym_[i], cartan_(j, i));
        if (num % cartan_(i, j) != 0) {
          // scale the component found so far to keep symmetrizers integral
          Int scale = std::abs(cartan_(i, j));
          for (int k = 0; k < n; ++k)
            if (sym_[k] != 0) sym_[k] = checked_mul(sym_[k], scale);
          num = checked_mul(sym_[i], cartan_(j, i));
        }
        sym_[j] = num / cartan_(i, j);
        bfs.push_back(j);
      }
    }
  }
  Int g = 0;
  for (Int v : sym_) g = std::gcd(g, v);
  for (Int& v : sym_) v /= g;

  // Reflection closure of the simple roots, tracking coroots in parallel.
  std::map<Vec, Vec> closure;  // alpha -> alpha_check
  std::deque<Vec> work;
  for (int i = 0; i < n; ++i) {
    Vec a(n, 0), b(n, 0);
    a[i] = 1;
    b[i] = 1;
    closure.emplace(a, b);
    work.push_back(a);
  }
  while (!work.empty()) {
    Vec a = work.front();
    work.pop_front();
    Vec b = closure.at(a);
    for (int j = 0; j < n; ++j) {
      Int pa = 0, pb = 0;
      for (int i = 0; i < n; ++i) pa = checked_add(pa, checked_mul(a[i], cartan_(i, j)));
      for (int i = 0; i < n; ++i) pb = checked_add(pb, checked_mul(b[i], cartan_(j, i)));
      Vec a2 = a, b2 = b;
      a2[j] -= pa;
      b2[j] -= pb;
      if (closure.emplace(a2, b2).second) work.push_back(a2);
    }
  }

  // Canonical order: positive roots by (height, lex), negatives mirrored.
  std::vector<std::pair<Vec, Vec>> positives;
  for (auto& [a, b] : closure) {
    bool pos = true, neg = true;
    for (Int v : a) {
      if (v > 0) neg = false;
      if (v < 0) pos = false;
    }
    if (!pos && !neg) throw Error("root closure produced a mixed-sign vector");
    if (pos) positives.emplace_back(a, b);
  }
  std::sort(positives.begin(), positives.end(), [](const auto& x, const auto& y) {
    Int hx = std::accumulate(x.first.begin(), x.first.end(), Int{0});
    Int hy = std::accumulate(y.first.begin(), y.first.end(), Int{0});
    if (hx != hy) return hx < hy;
    return x.first < y.first;
  });

  int np = static_cast<int>(positives.size());
  roots_.clear();
  roots_.resize(2 * np);
  for (int k = 0; k < np; ++k) {
    Root r;
    r.alpha = positives[k].first;
    r.alpha_check = positives[k].second;
    r.height = static_cast<int>(std::accumulate(r.alpha.begin(), r.alpha.end(), Int{0}));
    Int norm = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        norm = checked_add(norm, checked_mul(checked_mul(r.alpha[i], r.alpha[j]),
                                             checked_mul(sym_[j], cartan_(i, j))));
    r.norm2 = norm;
    r.positive = true;
    r.negative_of = np + k;
    roots_[k] = r;

    Root m = r;
    for (auto& v : m.alpha) v = -v;
    for (auto& v : m.alpha_check) v = -v;
    m.height = -r.height;
    m.positive = false;
    m.negative_of = k;
    roots_[np + k] = m;
  }

  root_lookup_.clear();
  for (int k = 0; k < 2 * np; ++k) root_lookup_[vec_key(roots_[k].alpha)] = k;
  simple_index_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    simple_index_[i] = root_index(e);
  }
  max_norm2_ = 0;
  for (auto& r : roots_) max_norm2_ = std::max(max_norm2_, r.norm2);

  if (cochar_basis_.rows == 0) {
    if (isogeny_ == Isogeny::adjoint) {
      cochar_basis_ = Mat::identity(n);
    } else if (isogeny_ == Isogeny::simply_connected) {
      // basis = simple coroots, rows in coweight coordinates
      cochar_basis_ = Mat(n, n);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) cochar_basis_(j, k) = cartan_(k, j);
    }
  }
  if (cochar_basis_.rows != n || cochar_basis_.cols != n)
    throw Error("cocharacter basis has wrong shape");
  if (det(cochar_basis_) == 0) throw Error("cocharacter basis is singular");

  Mat LT(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) LT(i, j) = cochar_basis_(j, i);
  cochar_smith_ = smith_normal_form(LT);
  coroot_smith_ = smith_normal_form(cartan_);

  // Coroots must lie in X_*.
  for (int j = 0; j < n; ++j) {
    Vec cw(n, 0);
    for (int k = 0; k < n; ++k) cw[k] = cartan_(k, j);
    if (!cochar_smith_.in_lattice(cw))
      throw Error("cocharacter lattice does not contain the coroot lattice");
  }
}

int RootDatum::root_index(const Vec& alpha) const {
  auto it = root_lookup_.find(vec_key(alpha));
  return it == root_lookup_.end() ? -1 : it->second;
}

bool RootDatum::is_irreducible() const {
  int n = rank_;
  std::vector<bool> seen(n, false);
  std::deque<int> bfs{0};
  seen[0] = true;
  int count = 1;
  while (!bfs.empty()) {
    int i = bfs.front();
    bfs.pop_front();
    for (int j = 0; j < n; ++j)
      if (!seen[j] && cartan_(i, j) != 0) {
        seen[j] = true;
        ++count;
        bfs.push_back(j);
      }
  }
  return count == n;
}

int RootDatum::highest_root_index() const {
  if (!is_irreducible()) throw Error("highest root requires an irreducible datum");
  int best = -1, best_h = -1;
  for (int k = 0; k < num_positive(); ++k)
    if (roots_[k].height > best_h) {
      best = k;
      best_h = roots_[k].height;
    }
  return best;
}

const Vec& RootDatum::marks() const {
  if (!marks_cache_) marks_cache_ = roots_[highest_root_index()].alpha;
  return *marks_cache_;
}

Vec RootDatum::dual_marks() const { return roots_[highest_root_index()].alpha_check; }

Int RootDatum::coxeter_number() const {
  const Vec& m = marks();
  return 1 + std::accumulate(m.begin(), m.end(), Int{0});
}

Int RootDatum::dual_coxeter_number() const {
  Vec m = dual_marks();
  return 1 + std::accumulate(m.begin(), m.end(), Int{0});
}

Int RootDatum::pair_root_coroot(const Vec& a, const Vec& b) const {
  Int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s = checked_add(s, checked_mul(checked_mul(a[i], b[j]), cartan_(i, j)));
  return s;
}

Int RootDatum::pair_root_coweight(const Vec& alpha, const Vec& cw) const {
  return dot(alpha, cw);
}

Int RootDatum::rho_pairing(int root_idx) const {
  if (root_idx < 0 || root_idx >= num_roots()) throw Error("rho_pairing: not a root");
  Int s = 0;
  for (int k = 0; k < num_positive(); ++k)
    s = checked_add(s, pair_root_coroot(roots_[root_idx].alpha, roots_[k].alpha_check));
  return s;
}

bool RootDatum::in_cochar_lattice(const Vec& cw) const { return cochar_smith_.in_lattice(cw); }

Vec RootDatum::coroot_in_coweight_coords(int root_idx) const {
  return coroot_coords_to_coweight(roots_[root_idx].alpha_check);
}

Vec RootDatum::coroot_coords_to_coweight(const Vec& b) const {
  Vec cw(rank_, 0);
  for (int k = 0; k < rank_; ++k)
    for (int j = 0; j < rank_; ++j)
      cw[k] = checked_add(cw[k], checked_mul(cartan_(k, j), b[j]));
  return cw;
}

FundamentalGroup RootDatum::fundamental_group() const {
  int n = rank_;
  // Columns: simple coroots in the X_* basis.
  Mat LT(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) LT(i, j) = cochar_basis_(j, i);
  Mat A(n, n);
  for (int j = 0; j < n; ++j) {
    Vec cw(n, 0);
    for (int k = 0; k < n; ++k) cw[k] = cartan_(k, j);
    RatVec y = solve_exact(LT, cw);
    if (y.den != 1) throw Error("coroot not in cocharacter lattice");
    for (int i = 0; i < n; ++i) A(i, j) = y.num[i];
  }
  Smith s = smith_normal_form(A);
  FundamentalGroup fg;
  fg.invariant_factors = s.invariant_factors();
  // Generators of the cyclic factors: columns of P^{-1} for nontrivial d_i.
  for (size_t i = 0; i < s.diag.size(); ++i) {
    if (s.diag[i] == 1) continue;
    Vec e(n, 0);
    e[static_cast<int>(i)] = 1;
    RatVec z = solve_exact(s.P, e);
    if (z.den != 1) throw Error("unimodular solve failed");
    // convert from X_* basis coordinates to coweight coordinates
    Vec cw(n, 0);
    for (int k = 0; k < n; ++k)
      for (int b = 0; b < n; ++b)
        cw[k] = checked_add(cw[k], checked_mul(z.num[b], cochar_basis_(b, k)));
    fg.generator_reps.push_back(cw);
  }
  return fg;
}

// --- Weyl group -------------------------------------------------------------

std::vector<int> RootDatum::left_descents(const Mat& inv_action) const {
  // i is a left descent of w iff w^{-1}(alpha_i) < 0, i.e. column i of the
  // inverse action matrix is nonpositive.
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i) {
    bool nonpos = true;
    for (int k = 0; k < rank_; ++k)
      if (inv_action(k, i) > 0) {
        nonpos = false;
        break;
      }
    if (nonpos) out.push_back(i);
  }
  return out;
}

WeylElement RootDatum::canonicalize(const std::vector<int>& word) const {
  int n = rank_;
  auto refl_matrix = [&](int j0) {
    Mat S = Mat::identity(n);
    for (int k = 0; k < n; ++k) S(j0, k) -= cartan_(k, j0);
    return S;
  };
  // w = s_{i1} ... s_{iL} acts by M = S_{i1} ... S_{iL}; build M by right
  // multiplication and M^{-1} by left multiplication as letters stream in.
  Mat M = Mat::identity(n), Minv = Mat::identity(n);
  for (int letter : word) {
    if (letter < 1 || letter > n) throw Error("word letter out of range");
    Mat S = refl_matrix(letter - 1);
    M = mat_mul(M, S);
    Minv = mat_mul(S, Minv);
  }
  WeylElement out;
  Mat I = Mat::identity(n);
  while (!(M == I)) {
    auto desc = left_descents(Minv);
    if (desc.empty()) throw Error("canonicalize: no descent for non-identity element");
    int i = desc.front();
    out.word.push_back(i + 1);
    Mat S = refl_matrix(i);
    M = mat_mul(S, M);
    Minv = mat_mul(Minv, S);
  }
  return out;
}

WeylElement RootDatum::multiply(const WeylElement& u, const WeylElement& v) const {
  std::vector<int> w = u.word;
  w.insert(w.end(), v.word.begin(), v.word.end());
  return canonicalize(w);
}

WeylElement RootDatum::inverse(const WeylElement& w) const {
  std::vector<int> rev(w.word.rbegin(), w.word.rend());
  return canonicalize(rev);
}

Vec RootDatum::act_root_coords(const WeylElement& w, Vec x) const {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    int j = *it - 1;
    Int p = 0;
    for (int i = 0; i < rank_; ++i) p = checked_add(p, checked_mul(x[i], cartan_(i, j)));
    x[j] -= p;
  }
  return x;
}

Vec RootDatum::act_coweight_coords(const WeylElement& w, Vec y) const {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    int j = *it - 1;
    Int yj = y[j];
    if (yj == 0) continue;
    for (int k = 0; k < rank_; ++k) y[k] -= checked_mul(yj, cartan_(k, j));
  }
  return y;
}

int RootDatum::act_on_root(const WeylElement& w, int root_idx) const {
  int idx = root_index(act_root_coords(w, roots_[root_idx].alpha));
  if (idx < 0) throw Error("act_on_root: image is not a root");
  return idx;
}

Mat RootDatum::matrix_root_coords(const WeylElement& w) const {
  Mat M(rank_, rank_);
  for (int j = 0; j < rank_; ++j) {
    Vec e(rank_, 0);
    e[j] = 1;
    Vec img = act_root_coords(w, e);
    for (int i = 0; i < rank_; ++i) M(i, j) = img[i];
  }
  return M;
}

Mat RootDatum::matrix_coweight_coords(const WeylElement& w) const {
  Mat M(rank_, rank_);
  for (int j = 0; j < rank_; ++j) {
    Vec e(rank_, 0);
    e[j] = 1;
    Vec img = act_coweight_coords(w, e);
    for (int i = 0; i < rank_; ++i) M(i, j) = img[i];
  }
  return M;
}

std::vector<int> RootDatum::inversion_set(const WeylElement& w) const {
  std::vector<int> out;
  for (int k = 0; k < num_positive(); ++k) {
    Vec img = act_root_coords(w, roots_[k].alpha);
    bool neg = true;
    for (Int v : img)
      if (v > 0) {
        neg = false;
        break;
      }
    if (neg) out.push_back(k);
  }
  return out;
}

int RootDatum::length_by_inversions(const WeylElement& w) const {
  return static_cast<int>(inversion_set(w).size());
}

WeylElement RootDatum::longest_element() const {
  std::vector<int> all(rank_);
  std::iota(all.begin(), all.end(), 1);
  return longest_element(all);
}

WeylElement RootDatum::longest_element(const std::vector<int>& parabolic) const {
  // Sort -rho_J to dominance inside the parabolic; the recorded word is a
  // reduced word for the longest element of W_J.
  std::vector<bool> in_j(rank_, false);
  for (int i : parabolic) in_j[i - 1] = true;
  Vec x(rank_, 0);  // fundamental-weight coordinates
  for (int i = 0; i < rank_; ++i)
    if (in_j[i]) x[i] = -1;
  std::vector<int> word;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < rank_; ++i)
      if (in_j[i] && x[i] < 0) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    word.push_back(pick + 1);
    Int xi = x[pick];
    for (int k = 0; k < rank_; ++k) x[k] -= checked_mul(xi, cartan_(pick, k));
  }
  return canonicalize(word);
}

WeylElement RootDatum::minimal_mapping_to(int simple_1based, int target_root_idx) const {
  // Raising chain: repeatedly reflect upward until the target is reached.
  Vec v(rank_, 0);
  v[simple_1based - 1] = 1;
  const Vec& target = roots_[target_root_idx].alpha;
  std::vector<int> word_rev;
  size_t guard = roots_.size() * roots_.size() + 16;
  while (v != target) {
    int pick = -1;
    for (int j = 0; j < rank_; ++j) {
      Int p = 0;
      for (int i = 0; i < rank_; ++i) p = checked_add(p, checked_mul(v[i], cartan_(i, j)));
      if (p < 0) {
        pick = j;
        break;
      }
    }
    if (pick < 0) throw Error("minimal_mapping_to: target not reachable upward");
    Int p = 0;
    for (int i = 0; i < rank_; ++i) p = checked_add(p, checked_mul(v[i], cartan_(i, pick)));
    v[pick] -= p;
    word_rev.push_back(pick + 1);
    if (word_rev.size() > guard) throw Error("minimal_mapping_to: no convergence");
  }
  std::vector<int> word(word_rev.rbegin(), word_rev.rend());
  return canonicalize(word);
}

WeylElement RootDatum::from_inversion_set(std::vector<int> pos_root_indices) const {
  std::set<Vec> T;
  for (int idx : pos_root_indices) {
    if (!roots_[idx].positive) throw Error("from_inversion_set: roots must be positive");
    T.insert(roots_[idx].alpha);
  }
  std::vector<int> word_rev;
  size_t expected = T.size();
  while (!T.empty()) {
    int pick = -1;
    for (int j = 0; j < rank_; ++j) {
      Vec e(rank_, 0);
      e[j] = 1;
      if (T.count(e)) {
        pick = j;
        break;
      }
    }
    if (pick < 0) throw Error("from_inversion_set: set is not biconvex");
    word_rev.push_back(pick + 1);
    Vec e(rank_, 0);
    e[pick] = 1;
    T.erase(e);
    std::set<Vec> T2;
    for (const Vec& a : T) {
      Int p = 0;
      for (int i = 0; i < rank_; ++i) p = checked_add(p, checked_mul(a[i], cartan_(i, pick)));
      Vec a2 = a;
      a2[pick] -= p;
      T2.insert(a2);
    }
    T = std::move(T2);
  }
  std::vector<int> word(word_rev.rbegin(), word_rev.rend());
  WeylElement w = canonicalize(word);
  if (w.length() != static_cast<int>(expected))
    throw Error("from_inversion_set: set is not an inversion set");
  return w;
}

std::vector<WeylElement> RootDatum::enumerate_weyl(size_t guard) const {
  std::map<std::vector<int>, WeylElement> seen;  // keyed by root permutation
  auto perm_of = [&](const WeylElement& w) {
    std::vector<int> p(roots_.size());
    for (size_t k = 0; k < roots_.size(); ++k) p[k] = act_on_root(w, static_cast<int>(k));
    return p;
  };
  std::deque<WeylElement> work;
  WeylElement e;
  seen.emplace(perm_of(e), e);
  work.push_back(e);
  while (!work.empty()) {
    WeylElement w = work.front();
    work.pop_front();
    for (int i = 1; i <= rank_; ++i) {
      std::vector<int> word = w.word;
      word.push_back(i);
      WeylElement w2 = canonicalize(word);
      auto key = perm_of(w2);
      if (seen.emplace(key, w2).second) {
        if (seen.size() > guard) throw Error("enumerate_weyl: guard exceeded");
        work.push_back(w2);
      }
    }
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (auto& [k, w] : seen) out.push_back(w);
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return out;
}

std::vector<Int> RootDatum::invariant_degrees() const {
  // The height counts (n_1, n_2, ...) of the positive roots form a
  // partition; the exponents are the parts of its conjugate.
  std::map<int, int> by_height;
  for (int k = 0; k < num_positive(); ++k) by_height[roots_[k].height]++;
  int n1 = by_height.count(1) ? by_height[1] : 0;  // = rank for semisimple
  std::vector<Int> degrees;
  for (int i = 1; i <= n1; ++i) {
    Int conj = 0;
    for (auto& [h, c] : by_height)
      if (c >= i) ++conj;
    degrees.push_back(conj + 1);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

Int RootDatum::weyl_order() const {
  Int o = 1;
  for (Int d : invariant_degrees()) o = checked_mul(o, d);
  return o;
}

}  // namespace alcove
