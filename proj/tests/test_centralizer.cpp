#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "alcove/centralizer.hpp"

using namespace alcove;

namespace {

AffineRootSystem adjoint_affine(Family f, int r) {
  return AffineRootSystem::build(RootDatum::build({f, r, 1}, Isogeny::adjoint));
}

// Brute-force oracle: all Weyl elements as coweight-coordinate matrices.
std::vector<Mat> all_weyl_matrices(const RootDatum& d) {
  std::vector<Mat> out;
  std::map<std::vector<Int>, char> seen;
  std::deque<Mat> work;
  Mat I = Mat::identity(d.rank());
  seen.emplace(I.a, 1);
  work.push_back(I);
  out.push_back(I);
  std::vector<Mat> gens;
  for (int i = 1; i <= d.rank(); ++i)
    gens.push_back(d.matrix_coweight_coords(d.canonicalize({i})));
  while (!work.empty()) {
    Mat cur = work.front();
    work.pop_front();
    for (const Mat& g : gens) {
      Mat nxt = mat_mul(g, cur);
      if (seen.emplace(nxt.a, 1).second) {
        work.push_back(nxt);
        out.push_back(nxt);
      }
    }
  }
  return out;
}

bool lambda_fixed_mod(const RootDatum& d, const Mat& w, const Vec& lambda, Int m) {
  Vec img = mat_vec(w, lambda);
  Vec diff = vec_sub(img, lambda);
  const Smith& s = d.cochar_smith();
  Vec y = mat_vec(s.P, diff);
  for (int i = 0; i < d.rank(); ++i)
    if (y[i] % (m * s.diag[i]) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("pseudo levi of the identity point is everything") {
  auto c2 = adjoint_affine(Family::C, 2);
  KacPoint s{1, {0, 0}, false};
  auto pl = pseudo_levi(c2, s);
  CHECK(static_cast<int>(pl.roots_H.size()) == c2.datum().num_roots());
  CHECK(pl.shape == "C2");
}

TEST_CASE("E8 order-2 points give D8 and E7+A1") {
  auto e8 = adjoint_affine(Family::E, 8);
  const Vec& marks = e8.datum().marks();
  // mark-2 nodes of E8 are alpha_1 and alpha_8
  CHECK(marks[0] == 2);
  CHECK(marks[7] == 2);
  {
    Vec lam(8, 0);
    lam[0] = 1;
    auto pl = pseudo_levi(e8, KacPoint{2, lam, false});
    // brute-force scan oracle over all 240 roots
    int count = 0;
    for (int k = 0; k < e8.datum().num_roots(); ++k)
      if (dot(e8.datum().root(k).alpha, lam) % 2 == 0) ++count;
    CHECK(count == 112 + 8 * 0);  // D8 has 112 roots
    CHECK(static_cast<int>(pl.roots_H.size()) == count);
    CHECK(pl.shape == "D8");
  }
  {
    Vec lam(8, 0);
    lam[7] = 1;
    auto pl = pseudo_levi(e8, KacPoint{2, lam, false});
    CHECK(pl.shape == "A1+E7");
    CHECK(pl.roots_H.size() == 126 + 2);
  }
}

TEST_CASE("long-root A1 inside the simply connected C2 datum") {
  auto sp4 = AffineRootSystem::build(RootDatum::build({Family::C, 2, 1}, Isogeny::simply_connected));
  // lambda = first fundamental coweight, inside the coroot lattice
  KacPoint s{3, {1, 0}, false};
  auto pl = pseudo_levi(sp4, s);
  CHECK(pl.shape == "A1");
  REQUIRE(pl.roots_H.size() == 2);
  for (int k : pl.roots_H) CHECK(sp4.datum().is_long(k));
  // Steinberg: simply connected centralizers are connected
  auto cg = component_group(sp4, s);
  CHECK(cg.order() == 1);
  CHECK(cg.confidence == Confidence::exhaustive);
}

TEST_CASE("component group of an order-2 point in adjoint A1") {
  auto a1 = adjoint_affine(Family::A, 1);
  KacPoint s{2, {1}, false};
  auto cg = component_group(a1, s);
  CHECK(cg.order() == 2);
  CHECK(cg.confidence == Confidence::exhaustive);
  CHECK(cg.table == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  // brute force over the 2-element Weyl group and lattice translations
  auto W = all_weyl_matrices(a1.datum());
  int stab = 0;
  for (auto& w : W)
    if (lambda_fixed_mod(a1.datum(), w, s.lambda_cw, s.order)) ++stab;
  CHECK(stab == 2);  // both elements fix it; Phi_H is empty so pi_0 = W_s
  auto pl = pseudo_levi(a1, s);
  CHECK(pl.roots_H.empty());
}

TEST_CASE("component groups match a brute-force stabilizer oracle (small ranks)") {
  for (auto t : {CartanType{Family::A, 2, 1}, CartanType{Family::C, 2, 1},
                 CartanType{Family::B, 3, 1}, CartanType{Family::G, 2, 1}}) {
    auto a = AffineRootSystem::build(RootDatum::build(t, Isogeny::adjoint));
    const RootDatum& d = a.datum();
    auto W = all_weyl_matrices(d);
    for (Int m = 1; m <= 4; ++m) {
      // exhaust alcove points: kac coordinates with sum marks*s_i + s_0 = m
      const Vec& marks = d.marks();
      std::vector<Vec> points;
      std::function<void(int, Int, Vec)> rec = [&](int i, Int left, Vec acc) {
        if (i == d.rank()) {
          points.push_back(acc);  // s_0 = left >= 0
          return;
        }
        for (Int v = 0; v * marks[i] <= left; ++v) {
          Vec nxt = acc;
          nxt.push_back(v);
          rec(i + 1, left - v * marks[i], nxt);
        }
      };
      rec(0, m, {});
      for (const Vec& lam : points) {
        KacPoint s{m, lam, false};
        auto cg = component_group(a, s);
        // oracle: |W_s| / |W(Phi_H)|
        Int stab = 0;
        for (auto& w : W)
          if (lambda_fixed_mod(d, w, lam, m)) ++stab;
        // order of W(Phi_H): subgroup generated by reflections of roots
        // annihilating the point
        std::vector<Mat> hgens;
        for (int k = 0; k < d.num_roots(); ++k) {
          if (dot(d.root(k).alpha, lam) % m != 0) continue;
          // reflection s_gamma on coweights: y -> y - <gamma, y> gamma^vee
          Mat R = Mat::identity(d.rank());
          Vec gcw = d.coroot_in_coweight_coords(k);
          for (int col = 0; col < d.rank(); ++col)
            for (int row = 0; row < d.rank(); ++row)
              R(row, col) -= d.root(k).alpha[col] * gcw[row];
          hgens.push_back(R);
        }
        std::map<std::vector<Int>, char> hseen;
        std::deque<Mat> hwork;
        Mat I = Mat::identity(d.rank());
        hseen.emplace(I.a, 1);
        hwork.push_back(I);
        while (!hwork.empty()) {
          Mat cur = hwork.front();
          hwork.pop_front();
          for (auto& g : hgens) {
            Mat nxt = mat_mul(g, cur);
            if (hseen.emplace(nxt.a, 1).second) hwork.push_back(nxt);
          }
        }
        Int wh = static_cast<Int>(hseen.size());
        REQUIRE(stab % wh == 0);
        CHECK_MESSAGE(cg.order() == stab / wh,
                      t.name(), " m=", m, " lambda size ", lam.size());
      }
    }
  }
}

TEST_CASE("canonicalization is idempotent and orbit-stable") {
  auto b3 = adjoint_affine(Family::B, 3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<Int> coord(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Vec lam(3);
    for (auto& v : lam) v = coord(rng);
    Int m = 1 + (trial % 6);
    KacPoint s{m, lam, false};
    KacPoint c = canonicalize(b3, s);
    CHECK(canonicalize(b3, c) == c);
    // canonical representative lies in the closed alcove
    Vec kc = c.kac_coordinates(b3);
    for (Int v : kc) CHECK(v >= 0);
    // acting by a random Weyl word plus lattice shift does not change it
    std::uniform_int_distribution<int> letter(1, 3);
    Vec moved = c.lambda_cw;
    for (int i = 0; i < 6; ++i) {
      auto w = b3.datum().canonicalize({letter(rng)});
      moved = b3.datum().act_coweight_coords(w, moved);
    }
    for (int i = 0; i < 3; ++i) moved[i] += c.order * coord(rng);
    CHECK(canonicalize(b3, KacPoint{c.order, moved, false}) == c);
  }
}

TEST_CASE("pseudo levi basis sits in the extended diagram (random sample)") {
  std::mt19937 rng(23);
  for (auto t : {CartanType{Family::F, 4, 1}, CartanType{Family::D, 5, 1},
                 CartanType{Family::E, 6, 1}}) {
    auto a = AffineRootSystem::build(RootDatum::build(t, Isogeny::adjoint));
    std::uniform_int_distribution<Int> coord(-4, 4);
    for (int trial = 0; trial < 150; ++trial) {
      Vec lam(t.rank);
      for (auto& v : lam) v = coord(rng);
      Int m = 1 + (trial % 6);
      auto pl = pseudo_levi(a, KacPoint{m, lam, false});
      // closure and basis checks run inside pseudo_levi; also confirm the
      // basis nodes are genuine diagram nodes
      for (int node : pl.basis_nodes) CHECK(node <= a.rank());
      CHECK(pl.roots_H.size() % 2 == 0);
    }
  }
}

TEST_CASE("frobenius rationality") {
  auto e6 = adjoint_affine(Family::E, 6);
  auto split = FrobeniusForm::make(e6, 1, 0);
  // identity: rational for any coprime q
  KacPoint id{1, Vec(6, 0), false};
  CHECK(frobenius_rational(e6, id, split, 5));
  // m | q - 1 makes any point rational for the split form
  KacPoint s{3, {1, 0, 0, 0, 0, 0}, false};
  CHECK(frobenius_rational(e6, s, split, 7));   // 7 = 1 mod 3
  CHECK(frobenius_rational(e6, s, split, 13));  // 13 = 1 mod 3
  // an order-3 point with q = 2 mod 3 on the split form is not rational
  CHECK_FALSE(frobenius_rational(e6, s, split, 5));
  CHECK_THROWS_AS(frobenius_rational(e6, s, split, 3), Error);  // p | m
}

TEST_CASE("frobenius rationality agrees with an independent reduction oracle") {
  auto c2 = adjoint_affine(Family::C, 2);
  auto split = FrobeniusForm::make(c2, 1, 0);
  auto W = all_weyl_matrices(c2.datum());
  std::mt19937 rng(5);
  std::uniform_int_distribution<Int> coord(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    Vec lam(2);
    for (auto& v : lam) v = coord(rng);
    Int m = 1 + (trial % 5);
    KacPoint s = canonicalize(c2, KacPoint{m, lam, false});
    for (Int q : {2, 3, 5, 7}) {
      if (std::gcd(q, s.order) != 1) continue;
      // oracle: the canonical representative is exactly fixed by the
      // twisted multiplication, checked with raw matrices
      Vec img = vec_scale(q, s.lambda_cw);
      Vec diff = vec_sub(img, s.lambda_cw);
      bool oracle = true;
      const Smith& sm = c2.datum().cochar_smith();
      Vec y = mat_vec(sm.P, diff);
      for (int i = 0; i < 2; ++i)
        if (y[i] % (s.order * sm.diag[i]) != 0) oracle = false;
      CHECK(frobenius_rational(c2, s, split, q) == oracle);
    }
  }
  (void)W;
}

TEST_CASE("standard representation eigenvalues") {
  // identity in SO_7 (adjoint B3): all phases 0
  auto b3 = adjoint_affine(Family::B, 3);
  auto ph = standard_rep_eigenvalues(b3, KacPoint{1, Vec(3, 0), false});
  CHECK(ph.has_plus_one);
  CHECK_FALSE(ph.has_minus_one);
  for (auto& [n, d] : ph.phases) CHECK(n == 0);

  // central order-2 element of SO_8: all phases 1/2
  auto so8 = AffineRootSystem::build(RootDatum::build_so({Family::D, 4, 1}));
  KacPoint center{2, kac_point_from_lattice_coords(so8.datum(), 2, {1, 1, 1, 1}).lambda_cw, false};
  auto ph2 = standard_rep_eigenvalues(so8, center);
  CHECK_FALSE(ph2.has_plus_one);
  CHECK(ph2.has_minus_one);
  for (auto& [n, d] : ph2.phases) {
    CHECK(n == 1);
    CHECK(d == 2);
  }

  // an order-4 point with all weight pairings odd: phases +-1/4 only
  KacPoint quarter = kac_point_from_lattice_coords(so8.datum(), 4, {1, 1, 1, 1});
  auto ph4 = standard_rep_eigenvalues(so8, quarter);
  CHECK_FALSE(ph4.has_plus_one);
  CHECK_FALSE(ph4.has_minus_one);
  for (auto& [n, d] : ph4.phases) CHECK(d == 4);

  // adjoint D datum is rejected: half-integral pairings
  auto d4ad = adjoint_affine(Family::D, 4);
  CHECK_THROWS_AS(standard_rep_eigenvalues(d4ad, KacPoint{2, {1, 0, 0, 0}, false}), Error);
  // non-orthogonal types are rejected
  auto c3 = adjoint_affine(Family::C, 3);
  CHECK_THROWS_AS(standard_rep_eigenvalues(c3, KacPoint{2, {1, 0, 0}, false}), Error);
}

TEST_CASE("index identity at a facet") {
  // split C2, middle vertex, identity parameter: A = Omega_{G,x}^Frob
  auto c2 = adjoint_affine(Family::C, 2);
  auto split = FrobeniusForm::make(c2, 1, 0);
  Facet middle{{0, 2}};
  KacPoint id{1, {0, 0}, false};
  auto rep = index_identity_check(c2, id, split, middle);
  CHECK(rep.orders_consistent);
  CHECK(rep.image_order == rep.omega_Gx_frob_order);
  CHECK(rep.image_order == 2);

  // order-3 point with H = long A1 x torus: Omega_{H,x} is smaller
  KacPoint s3{3, {1, 0}, false};
  auto rep3 = index_identity_check(c2, s3, split, middle);
  CHECK(rep3.orders_consistent);
  CHECK(rep3.image_order * rep3.kernel_frob_order == rep3.omega_Hx_frob_order);
}

TEST_CASE("kac point input validation") {
  auto c2 = adjoint_affine(Family::C, 2);
  CHECK_THROWS_AS(canonicalize(c2, KacPoint{0, {1, 0}, false}), Error);
  CHECK_THROWS_AS(canonicalize(c2, KacPoint{2, {1}, false}), Error);
  // order reduction: 2/4 of a coweight reduces to 1/2
  KacPoint s{4, {2, 0}, false};
  KacPoint c = canonicalize(c2, s);
  CHECK(c.order == 2);
}
