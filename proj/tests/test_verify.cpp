#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alcove/verify.hpp"

using namespace alcove;

namespace {

struct Ctx {
  RootDatum d;
  AffineRootSystem a;
  ChevalleyAlgebra A;
};

Ctx make(Family f, int r) {
  RootDatum d = RootDatum::build({f, r, 1}, Isogeny::adjoint);
  return Ctx{d, AffineRootSystem::build(d), ChevalleyAlgebra::build(d)};
}

}  // namespace

TEST_CASE("highest root lift independence, exhaustive small ranks") {
  for (auto [f, r] : {std::pair{Family::C, 2}, {Family::G, 2}, {Family::D, 4},
                      {Family::B, 3}, {Family::F, 4}}) {
    auto c = make(f, r);
    auto cert = verify_highest_root_indep(c.A);
    CHECK_MESSAGE(cert.verdict == Verdict::verified, c.d.type().name());
    CHECK(cert.witness["mode"] == "exhaustive");
  }
  auto a3 = make(Family::A, 3);
  CHECK(verify_highest_root_indep(a3.A).verdict == Verdict::not_applicable);
}

TEST_CASE("highest root lift independence, generated path") {
  auto c = make(Family::D, 5);
  auto cert = verify_highest_root_indep(c.A);
  CHECK(cert.verdict == Verdict::verified);
  CHECK(cert.witness["mode"] == "stabilizer-generated");
}

TEST_CASE("y versus y-prime") {
  for (auto [f, r] : {std::pair{Family::C, 2}, {Family::B, 3}, {Family::E, 6},
                      {Family::G, 2}, {Family::D, 4}}) {
    auto c = make(f, r);
    auto cert = verify_y_vs_y_prime(c.A);
    CHECK_MESSAGE(cert.verdict == Verdict::verified, c.d.type().name());
  }
  // type A is excluded by the standing assumption
  auto a2 = make(Family::A, 2);
  CHECK(verify_y_vs_y_prime(a2.A).verdict == Verdict::not_applicable);
}

TEST_CASE("adjacent long pairs flip the sign") {
  for (auto [f, r] : {std::pair{Family::B, 3}, {Family::D, 4}, {Family::B, 4},
                      {Family::E, 7}, {Family::F, 4}}) {
    auto c = make(f, r);
    auto cert = verify_dist_of_root(c.A);
    CHECK_MESSAGE(cert.verdict == Verdict::verified, c.d.type().name());
    CHECK(cert.witness["even_path_consistent"] == true);
  }
  // the C family has a single long simple root: no pair exists
  auto c2 = make(Family::C, 2);
  CHECK(verify_dist_of_root(c2.A).verdict == Verdict::not_applicable);
  auto c3 = make(Family::C, 3);
  CHECK(verify_dist_of_root(c3.A).verdict == Verdict::not_applicable);
  auto g2 = make(Family::G, 2);
  CHECK(verify_dist_of_root(g2.A).verdict == Verdict::not_applicable);
}

TEST_CASE("highest-root element combinatorics") {
  // C2, long alpha: observed counts (0 long, 1 short), pairing sum h - 2
  auto c2 = make(Family::C, 2);
  auto cert = cp_prop71_check(c2.A, 2);
  CHECK(cert.verdict == Verdict::verified);
  CHECK(cert.witness["counts"]["long"] == 0);
  CHECK(cert.witness["counts"]["short"] == 1);
  CHECK(cert.witness["pairing_sum"] == 2);  // h - 2 with h = 4
  CHECK(cert.witness["coxeter_number"] == 4);

  // G2 long alpha
  auto g2 = make(Family::G, 2);
  auto cg = cp_prop71_check(g2.A, 2);
  CHECK(cg.verdict == Verdict::verified);
  CHECK(cg.witness["pairing_sum"] == 4);  // h - 2 with h = 6

  // A3 middle node: combinatorial counts only
  auto a3 = make(Family::A, 3);
  auto ca = cp_prop71_check(a3.A, 2);
  CHECK(ca.verdict == Verdict::verified);
  CHECK(ca.witness["length"] == 2);

  // all long simples across a few types
  for (auto [f, r] : {std::pair{Family::B, 3}, {Family::D, 4}, {Family::E, 6},
                      {Family::F, 4}, {Family::A, 4}}) {
    auto c = make(f, r);
    auto call = cp_prop71_check_all(c.A);
    CHECK_MESSAGE(call.verdict == Verdict::verified, c.d.type().name());
  }
}

TEST_CASE("pinning lifts: split forms, standard facet without the affine node") {
  auto c = make(Family::C, 4);
  auto split = FrobeniusForm::make(c.a, 1, 0);
  // remove the affine node: Delta_F = Delta, stabilizer is trivial
  Facet f{{1, 2, 3, 4}};
  auto cert = verify_pinning_theorem(c.A, c.a, split, f);
  CHECK(cert.verdict == Verdict::verified);
}

TEST_CASE("pinning lifts: C4 middle vertex with the swap") {
  auto c = make(Family::C, 4);
  auto split = FrobeniusForm::make(c.a, 1, 0);
  Facet f{{0, 1, 3, 4}};
  auto cert = verify_pinning_theorem(c.A, c.a, split, f);
  REQUIRE(cert.verdict == Verdict::verified);
  CHECK(cert.witness["lifts"].size() == 1);
  CHECK(cert.witness["lifts"][0]["verified"] == true);
}

TEST_CASE("pinning lifts: C6 middle vertex") {
  auto c = make(Family::C, 6);
  auto split = FrobeniusForm::make(c.a, 1, 0);
  Facet f{{0, 1, 2, 4, 5, 6}};
  auto cert = verify_pinning_theorem(c.A, c.a, split, f);
  CHECK(cert.verdict == Verdict::verified);
}

TEST_CASE("pinning lifts: B3 facet with the zero-one swap") {
  auto c = make(Family::B, 3);
  auto split = FrobeniusForm::make(c.a, 1, 0);
  Facet f{{0, 1, 3}};
  auto cert = verify_pinning_theorem(c.A, c.a, split, f);
  REQUIRE(cert.verdict == Verdict::verified);
  CHECK(cert.witness["lifts"][0]["verified"] == true);
}

TEST_CASE("pinning lifts: D5 facet with the rotation of order four") {
  auto c = make(Family::D, 5);
  // the facet keeping the four end nodes is stabilized by the whole Z/4
  Facet f{{0, 1, 4, 5}};
  auto split = FrobeniusForm::make(c.a, 1, 0);
  f.validate(c.a, split);
  auto stab = facet_stabilizer(c.a, split, f);
  REQUIRE(stab.stabilizer.size() == 4);
  REQUIRE(stab.frob_fixed.size() == 4);
  auto cert = verify_pinning_theorem(c.A, c.a, split, f);
  REQUIRE(cert.verdict == Verdict::verified);
  // the same facet under the inner form: the cyclic corollary path
  auto inner = FrobeniusForm::make(c.a, 1, 4);
  f.validate(c.a, inner);
  auto icert = verify_pinning_theorem(c.A, c.a, inner, f);
  REQUIRE(icert.verdict == Verdict::verified);
}

TEST_CASE("pinning lifts: inner forms") {
  // split C4, inner twist: cyclic stabilizer, allowed
  auto c = make(Family::C, 4);
  auto inner = FrobeniusForm::make(c.a, 1, 4);
  Facet f{{0, 1, 3, 4}};
  auto cert = verify_pinning_theorem(c.A, c.a, inner, f);
  CHECK(cert.verdict == Verdict::verified);

  // inner form of split D4: flagged out of scope, never verified
  auto dd = make(Family::D, 4);
  auto dinner = FrobeniusForm::make(dd.a, 1, 1);
  Facet fd{{0, 1, 3, 4}};
  fd.validate(dd.a, dinner);
  auto certd = verify_pinning_theorem(dd.A, dd.a, dinner, fd);
  CHECK(certd.verdict == Verdict::not_computed);
}

TEST_CASE("pinning lifts: quasi-split twisted forms") {
  // 2A3: Frobenius-fixed stabilizer of the two-node vertex
  auto aa = make(Family::A, 3);
  auto tw = FrobeniusForm::make(aa.a, 2, 0);
  Facet f{{0, 2}};
  auto cert = verify_pinning_theorem(aa.A, aa.a, tw, f);
  CHECK(cert.ok());

  // 2D5
  auto dd = make(Family::D, 5);
  auto twd = FrobeniusForm::make(dd.a, 2, 0);
  Facet fd{{0, 1, 2, 3}};
  fd.validate(dd.a, twd);
  auto certd = verify_pinning_theorem(dd.A, dd.a, twd, fd);
  CHECK(certd.ok());
}

TEST_CASE("atlas: split E6") {
  auto c = make(Family::E, 6);
  auto split = FrobeniusForm::make(c.a, 1, 0);
  auto rep = atlas_report(c.a, split);
  REQUIRE(rep.has_reference);
  CHECK(rep.matches_reference);
  REQUIRE(rep.special_removed.size() == 1);
  CHECK(rep.special_removed[0] == std::vector<int>{4});
  for (const auto& row : rep.rows)
    if (row.removed_nodes == std::vector<int>{4}) {
      CHECK(row.shape == "A2+A2+A2");
      CHECK(row.center_factors == std::vector<Int>{3});
      CHECK(row.stabilizer_order == 3);
    }
}

TEST_CASE("atlas: inner form of E6") {
  auto c = make(Family::E, 6);
  auto inner = FrobeniusForm::make(c.a, 1, 1);
  auto rep = atlas_report(c.a, inner);
  REQUIRE(rep.has_reference);
  CHECK(rep.matches_reference);
  CHECK(rep.special_removed.size() == 2);
}

TEST_CASE("atlas: split E7 has exactly two special classes") {
  auto c = make(Family::E, 7);
  auto split = FrobeniusForm::make(c.a, 1, 0);
  auto rep = atlas_report(c.a, split);
  REQUIRE(rep.has_reference);
  CHECK(rep.matches_reference);
  REQUIRE(rep.special_removed.size() == 2);
  CHECK(rep.special_removed[0] == std::vector<int>{2});
  CHECK(rep.special_removed[1] == std::vector<int>{4});
  for (const auto& row : rep.rows) {
    if (row.removed_nodes == std::vector<int>{2}) CHECK(row.shape == "A7");
    if (row.removed_nodes == std::vector<int>{4}) CHECK(row.shape == "A1+A3+A3");
  }
}

TEST_CASE("atlas: type A is always connected-center") {
  for (int n : {1, 2, 3, 4, 7}) {
    auto c = make(Family::A, n);
    auto split = FrobeniusForm::make(c.a, 1, 0);
    auto rep = atlas_report(c.a, split);
    CHECK(rep.special_removed.empty());
    CHECK(rep.matches_reference);
  }
}

TEST_CASE("atlas: C families") {
  auto c4 = make(Family::C, 4);
  auto rep4 = atlas_report(c4.a, FrobeniusForm::make(c4.a, 1, 0));
  CHECK(rep4.matches_reference);
  REQUIRE(rep4.special_removed.size() == 1);
  CHECK(rep4.special_removed[0] == std::vector<int>{2});

  auto c5 = make(Family::C, 5);
  auto rep5 = atlas_report(c5.a, FrobeniusForm::make(c5.a, 1, 0));
  CHECK(rep5.matches_reference);
  CHECK(rep5.special_removed.empty());
}

TEST_CASE("atlas: B and D orthogonal families") {
  auto b4 = make(Family::B, 4);
  auto repb = atlas_report(b4.a, FrobeniusForm::make(b4.a, 1, 0));
  CHECK(repb.matches_reference);
  CHECK(repb.special_removed == std::vector<std::vector<int>>{{2}, {3}, {4}});

  auto d5 = make(Family::D, 5);
  auto repd = atlas_report(d5.a, FrobeniusForm::make(d5.a, 1, 0));
  CHECK(repd.matches_reference);
  CHECK(repd.special_removed == std::vector<std::vector<int>>{{2}, {3}});

  auto repd2 = atlas_report(d5.a, FrobeniusForm::make(d5.a, 2, 0));
  CHECK(repd2.matches_reference);
  CHECK(repd2.special_removed == std::vector<std::vector<int>>{{2}, {3}});
  // removing the swapped spinor pair loses a mark-one node: center stays
  // connected
  for (const auto& row : repd2.rows)
    if (row.removed_nodes == std::vector<int>{4, 5}) {
      CHECK(row.center_factors.empty());
      CHECK(row.stabilizer_order == 2);
    }
}

TEST_CASE("atlas: trivial fixed stabilizers") {
  for (auto [f, r, tw] : {std::tuple{Family::E, 8, 1}, {Family::F, 4, 1}, {Family::G, 2, 1},
                          {Family::E, 6, 2}, {Family::D, 4, 3}}) {
    auto c = make(f, r);
    auto rep = atlas_report(c.a, FrobeniusForm::make(c.a, tw, 0));
    CHECK_MESSAGE(rep.special_removed.empty(), c.d.type().name(), " twist ", tw);
    CHECK(rep.matches_reference);
  }
}

TEST_CASE("certificates serialize with stable fields") {
  auto c2 = make(Family::C, 2);
  auto cert = verify_y_vs_y_prime(c2.A);
  Json j = cert.to_json();
  CHECK(j.contains("claim"));
  CHECK(j.contains("scope"));
  CHECK(j.contains("verdict"));
  CHECK(j.contains("witness"));
  CHECK(j["verdict"] == "verified");
}
