#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "alcove/rootcore.hpp"

using namespace alcove;

namespace {

// Independent oracle: close the simple roots under *simple* reflections on
// rational weight-coordinate vectors.  This shares no code with the
// library's root-coordinate closure.
int closure_count_oracle(const Mat& cartan) {
  int n = cartan.rows;
  // weight coordinates of alpha_j: row j of the Cartan matrix
  std::set<Vec> seen;
  std::vector<Vec> work;
  for (int j = 0; j < n; ++j) {
    Vec w(n);
    for (int k = 0; k < n; ++k) w[k] = cartan(j, k);
    if (seen.insert(w).second) work.push_back(w);
  }
  while (!work.empty()) {
    Vec x = work.back();
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      Vec y = x;
      Int xi = x[i];
      for (int k = 0; k < n; ++k) y[k] -= xi * cartan(i, k);
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  return static_cast<int>(seen.size());
}

// Independent Smith-normal-form oracle on a copy of the matrix, with no
// transform tracking: plain elementary reduction to diagonal form.
std::vector<Int> snf_diagonal_oracle(Mat A) {
  int n = A.rows, m = A.cols;
  int t = 0;
  while (t < std::min(n, m)) {
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (A(i, j) != 0 && (pi < 0 || std::abs(A(i, j)) < best)) {
          pi = i;
          pj = j;
          best = std::abs(A(i, j));
        }
    if (pi < 0) break;
    for (int j = 0; j < m; ++j) std::swap(A(t, j), A(pi, j));
    for (int i = 0; i < n; ++i) std::swap(A(i, t), A(i, pj));
    bool again = false;
    for (int i = t + 1; i < n; ++i)
      while (A(i, t) != 0) {
        Int q = A(i, t) / A(t, t);
        for (int j = 0; j < m; ++j) A(i, j) -= q * A(t, j);
        if (A(i, t) != 0) {
          for (int j = 0; j < m; ++j) std::swap(A(t, j), A(i, j));
          again = true;
        }
      }
    for (int j = t + 1; j < m; ++j)
      while (A(t, j) != 0) {
        Int q = A(t, j) / A(t, t);
        for (int i = 0; i < n; ++i) A(i, j) -= q * A(i, t);
        if (A(t, j) != 0) {
          for (int i = 0; i < n; ++i) std::swap(A(i, t), A(i, j));
          again = true;
        }
      }
    if (again) continue;
    bool div_ok = true;
    for (int i = t + 1; i < n && div_ok; ++i)
      for (int j = t + 1; j < m && div_ok; ++j)
        if (A(i, j) % A(t, t) != 0) {
          for (int k = 0; k < m; ++k) A(t, k) += A(i, k);
          div_ok = false;
        }
    if (!div_ok) continue;
    ++t;
  }
  std::vector<Int> d;
  for (int i = 0; i < std::min(n, m); ++i)
    if (std::abs(A(i, i)) > 1) d.push_back(std::abs(A(i, i)));
  return d;
}

std::vector<CartanType> simple_types_up_to(int max_rank) {
  std::vector<CartanType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r, 1});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r, 1});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::C, r, 1});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::D, r, 1});
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({Family::E, r, 1});
  if (max_rank >= 4) out.push_back({Family::F, 4, 1});
  if (max_rank >= 2) out.push_back({Family::G, 2, 1});
  return out;
}

}  // namespace

TEST_CASE("build_root_datum counts and Weyl orders") {
  auto a2 = RootDatum::build({Family::A, 2, 1}, Isogeny::adjoint);
  CHECK(a2.num_roots() == 6);  // rank-2 hand enumeration
  CHECK(a2.weyl_order() == 6);

  auto g2 = RootDatum::build({Family::G, 2, 1}, Isogeny::adjoint);
  CHECK(closure_count_oracle(g2.cartan_matrix()) == 12);
  CHECK(g2.num_roots() == 12);

  auto e8 = RootDatum::build({Family::E, 8, 1}, Isogeny::adjoint);
  CHECK(closure_count_oracle(e8.cartan_matrix()) == 240);
  CHECK(e8.num_roots() == 240);
  CHECK(e8.dimension() == 248);
  CHECK(e8.weyl_order() == 696729600);
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(RootDatum::build({Family::D, 2, 1}, Isogeny::adjoint), Error);
  CHECK_THROWS_AS(RootDatum::build({Family::E, 9, 1}, Isogeny::adjoint), Error);
  CHECK_THROWS_AS(RootDatum::build({Family::F, 3, 1}, Isogeny::adjoint), Error);
  CHECK_THROWS_AS(RootDatum::build({Family::A, 1, 2}, Isogeny::adjoint), Error);
  CHECK_THROWS_AS(RootDatum::build({Family::D, 5, 3}, Isogeny::adjoint), Error);
}

TEST_CASE("reflection closure matches orbit oracle for every type of rank <= 7") {
  for (auto t : simple_types_up_to(7)) {
    auto d = RootDatum::build(t, Isogeny::adjoint);
    CHECK_MESSAGE(closure_count_oracle(d.cartan_matrix()) == d.num_roots(), t.name());
  }
}

TEST_CASE("highest root marks") {
  for (int n = 1; n <= 6; ++n) {
    auto d = RootDatum::build({Family::A, n, 1}, Isogeny::adjoint);
    for (Int m : d.marks()) CHECK(m == 1);
  }
  auto e6 = RootDatum::build({Family::E, 6, 1}, Isogeny::adjoint);
  CHECK(e6.marks() == Vec{1, 2, 2, 3, 2, 1});  // end nodes 1 and 6 have mark one

  auto a1 = RootDatum::build({Family::A, 1, 1}, Isogeny::adjoint);
  CHECK(a1.marks() == Vec{1});
  CHECK(a1.root(a1.highest_root_index()).alpha == Vec{1});

  auto prod = RootDatum::product(a1, a1);
  CHECK_THROWS_AS(prod.highest_root_index(), Error);
}

TEST_CASE("coxeter numbers and parity") {
  for (int n = 2; n <= 8; ++n) {
    auto d = RootDatum::build({Family::A, n - 1, 1}, Isogeny::adjoint);
    CHECK(d.coxeter_number() == n);
  }
  auto e8 = RootDatum::build({Family::E, 8, 1}, Isogeny::adjoint);
  CHECK(e8.coxeter_number() == 30);
  auto a1 = RootDatum::build({Family::A, 1, 1}, Isogeny::adjoint);
  CHECK(a1.coxeter_number() == 2);

  for (auto t : simple_types_up_to(8)) {
    auto d = RootDatum::build(t, Isogeny::adjoint);
    bool expect_odd = t.family == Family::A && t.rank % 2 == 0;
    CHECK_MESSAGE((d.coxeter_number() % 2 == 1) == expect_odd, t.name());
  }
}

TEST_CASE("fundamental groups") {
  auto e6 = RootDatum::build({Family::E, 6, 1}, Isogeny::adjoint);
  CHECK(e6.fundamental_group().invariant_factors == std::vector<Int>{3});
  for (int n = 2; n <= 7; ++n) {
    auto b = RootDatum::build({Family::B, n, 1}, Isogeny::adjoint);
    CHECK(b.fundamental_group().invariant_factors == std::vector<Int>{2});
  }
  for (int n = 1; n <= 8; ++n) {
    auto a = RootDatum::build({Family::A, n, 1}, Isogeny::adjoint);
    auto oracle = snf_diagonal_oracle(a.cartan_matrix());
    auto fg = a.fundamental_group();
    CHECK(fg.invariant_factors == oracle);
    CHECK(fg.invariant_factors == std::vector<Int>{n + 1});
  }
  // |Omega| = |det(Cartan)| across all simple types
  for (auto t : simple_types_up_to(8)) {
    auto d = RootDatum::build(t, Isogeny::adjoint);
    CHECK_MESSAGE(d.fundamental_group().order() == std::abs(det(d.cartan_matrix())), t.name());
  }
  // simply connected groups have trivial fundamental group
  auto c3 = RootDatum::build({Family::C, 3, 1}, Isogeny::simply_connected);
  CHECK(c3.fundamental_group().invariant_factors.empty());
  // D parity: Z/4 for odd rank, Z/2 x Z/2 for even rank
  auto d5 = RootDatum::build({Family::D, 5, 1}, Isogeny::adjoint);
  CHECK(d5.fundamental_group().invariant_factors == std::vector<Int>{4});
  auto d6 = RootDatum::build({Family::D, 6, 1}, Isogeny::adjoint);
  CHECK(d6.fundamental_group().invariant_factors == std::vector<Int>{2, 2});
}

TEST_CASE("generator representatives map onto the cyclic factors") {
  for (auto t : simple_types_up_to(6)) {
    auto d = RootDatum::build(t, Isogeny::adjoint);
    auto fg = d.fundamental_group();
    const Smith& s = d.coroot_smith();
    for (size_t i = 0; i < fg.generator_reps.size(); ++i)
      CHECK(s.class_order(fg.generator_reps[i]) == fg.invariant_factors[i]);
  }
}

TEST_CASE("rho pairing") {
  auto a1 = RootDatum::build({Family::A, 1, 1}, Isogeny::adjoint);
  CHECK(a1.rho_pairing(a1.simple_root_index(0)) == 2);

  for (auto t : {CartanType{Family::A, 3, 1}, CartanType{Family::D, 4, 1},
                 CartanType{Family::E, 6, 1}}) {
    auto d = RootDatum::build(t, Isogeny::adjoint);
    CHECK(d.rho_pairing(d.highest_root_index()) == 2 * d.coxeter_number() - 2);
  }
  for (auto t : simple_types_up_to(6)) {
    auto d = RootDatum::build(t, Isogeny::adjoint);
    for (int i = 0; i < d.rank(); ++i) CHECK(d.rho_pairing(d.simple_root_index(i)) == 2);
  }
  auto c2 = RootDatum::build({Family::C, 2, 1}, Isogeny::adjoint);
  CHECK_THROWS_AS(c2.rho_pairing(-1), Error);
}

TEST_CASE("weyl words: length equals inversion count, exhaustively in small rank") {
  for (auto t : {CartanType{Family::A, 3, 1}, CartanType{Family::B, 3, 1},
                 CartanType{Family::C, 2, 1}, CartanType{Family::G, 2, 1}}) {
    auto d = RootDatum::build(t, Isogeny::adjoint);
    auto all = d.enumerate_weyl();
    CHECK(static_cast<Int>(all.size()) == d.weyl_order());
    for (const auto& w : all) CHECK(w.length() == d.length_by_inversions(w));
  }
}

TEST_CASE("weyl canonical words are lexicographically minimal (spot check in B3)") {
  auto d = RootDatum::build({Family::B, 3, 1}, Isogeny::adjoint);
  auto all = d.enumerate_weyl();
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& w = all[pick(rng)];
    // shuffle the word through random braid-free rewriting: multiply by
    // s_i s_i pairs and recanonicalize
    std::vector<int> word = w.word;
    std::uniform_int_distribution<int> letter(1, 3);
    int s = letter(rng);
    word.push_back(s);
    word.push_back(s);
    CHECK(d.canonicalize(word) == w);
  }
}

TEST_CASE("weyl action preserves the pairing") {
  auto d = RootDatum::build({Family::F, 4, 1}, Isogeny::adjoint);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(1, 4);
  std::uniform_int_distribution<int> root(0, d.num_roots() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> word;
    for (int i = 0; i < 12; ++i) word.push_back(letter(rng));
    auto w = d.canonicalize(word);
    int g = root(rng), h = root(rng);
    Int before = d.pair_root_coroot(d.root(g).alpha, d.root(h).alpha_check);
    int wg = d.act_on_root(w, g), wh = d.act_on_root(w, h);
    Int after = d.pair_root_coroot(d.root(wg).alpha, d.root(wh).alpha_check);
    CHECK(before == after);
  }
}

TEST_CASE("longest element") {
  for (auto t : simple_types_up_to(6)) {
    auto d = RootDatum::build(t, Isogeny::adjoint);
    auto w0 = d.longest_element();
    CHECK(w0.length() == d.num_positive());
    // w0 sends every positive root to a negative root
    CHECK(static_cast<int>(d.inversion_set(w0).size()) == d.num_positive());
  }
  auto d = RootDatum::build({Family::D, 4, 1}, Isogeny::adjoint);
  auto wj = d.longest_element(std::vector<int>{1, 3});
  CHECK(wj.length() == 2);  // A1 x A1 parabolic
  auto wa2 = d.longest_element(std::vector<int>{1, 2});
  CHECK(wa2.length() == 3);  // adjacent pair, type A2
}

TEST_CASE("invariant degrees") {
  auto c2 = RootDatum::build({Family::C, 2, 1}, Isogeny::adjoint);
  CHECK(c2.invariant_degrees() == std::vector<Int>{2, 4});
  auto f4 = RootDatum::build({Family::F, 4, 1}, Isogeny::adjoint);
  CHECK(f4.invariant_degrees() == std::vector<Int>{2, 6, 8, 12});
  auto e7 = RootDatum::build({Family::E, 7, 1}, Isogeny::adjoint);
  CHECK(e7.invariant_degrees() == std::vector<Int>{2, 6, 8, 10, 12, 14, 18});
  for (auto t : simple_types_up_to(8)) {
    auto d = RootDatum::build(t, Isogeny::adjoint);
    auto deg = d.invariant_degrees();
    Int sum2e1 = 0;
    for (Int dd : deg) sum2e1 += 2 * (dd - 1) + 1;
    CHECK(sum2e1 == d.dimension());
  }
}

TEST_CASE("SO lattice for D types") {
  auto so8 = RootDatum::build_so({Family::D, 4, 1});
  // index 2 in the coweight lattice on each side: fundamental group Z/2
  CHECK(so8.fundamental_group().invariant_factors == std::vector<Int>{2});
}
