// Oracle tests for skew-shape generating-function matrices and their
// unitriangular-diagonal-unitriangular factorizations. Region generating
// functions are cross-checked against brute-force enumeration of all
// down-closed subsets; factorizations against hand-computed pins and random
// shapes; the q-specialization against the area-weighted Catalan numbers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "snfmom/families.hpp"
#include "snfmom/moments.hpp"
#include "snfmom/qfun.hpp"
#include "snfmom/young.hpp"

using namespace snfmom;

namespace {

std::string cellvar(int u, int v) {
  return "x" + std::to_string(u) + "_" + std::to_string(v);
}

// Sum over all down-closed subsets of the region's cells of the product of
// the complementary variables, by checking every subset.
Poly brute_genfun(const RingPtr& ring, const Region& r) {
  auto cells = region_cells(r);
  int n = static_cast<int>(cells.size());
  REQUIRE(n <= 16);
  auto index_of = [&](int u, int v) -> int {
    for (int i = 0; i < n; ++i)
      if (cells[i] == std::make_pair(u, v)) return i;
    return -1;
  };
  Poly acc = Poly::zero(ring);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (!((mask >> i) & 1)) continue;
      auto [u, v] = cells[i];
      int up = index_of(u - 1, v), lf = index_of(u, v - 1);
      if (up >= 0 && !((mask >> up) & 1)) closed = false;
      if (lf >= 0 && !((mask >> lf) & 1)) closed = false;
    }
    if (!closed) continue;
    Poly term = Poly::constant(1, ring);
    for (int i = 0; i < n; ++i)
      if (!((mask >> i) & 1)) {
        auto [u, v] = cells[i];
        term *= Poly::variable(ring, cellvar(u, v));
      }
    acc += term;
  }
  return acc;
}

YoungShape random_shape(std::mt19937& rng, int max_cells) {
  std::uniform_int_distribution<int> rowd(1, 4), cold(1, 5);
  for (;;) {
    int r = rowd(rng);
    std::vector<int> rows;
    int prev = cold(rng), total = 0;
    for (int i = 0; i < r; ++i) {
      std::uniform_int_distribution<int> d(1, prev);
      int len = d(rng);
      rows.push_back(len);
      prev = len;
      total += len;
    }
    if (total <= max_cells) return YoungShape(rows);
  }
}

std::vector<std::pair<int, int>> all_anchors(const YoungShape& s) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= s.row_count() + 1; ++a)
    for (int b = 1; b <= s.col_count() + 1; ++b)
      if (border_anchor(s, a, b)) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("shape construction, conjugate, diagonal length") {
  CHECK_THROWS_AS(YoungShape({1, 3}), PolyError);
  CHECK_THROWS_AS(YoungShape({2, 0}), PolyError);
  CHECK_THROWS_AS(YoungShape({-1}), PolyError);

  YoungShape s({3, 1});
  CHECK(s.row_count() == 2);
  CHECK(s.col_count() == 3);
  CHECK(s.cell_count() == 4);
  CHECK(s.contains(1, 3));
  CHECK(s.contains(2, 1));
  CHECK_FALSE(s.contains(2, 2));
  CHECK_FALSE(s.contains(3, 1));
  CHECK_FALSE(s.contains(0, 1));
  CHECK(s.conjugate() == std::vector<int>({2, 1, 1}));
  CHECK(s.diagonal_length() == 1);
  CHECK(s.to_string() == "(3,1)");

  CHECK(YoungShape({3, 3, 1}).diagonal_length() == 2);
  CHECK(YoungShape({3, 3, 1}).conjugate() == std::vector<int>({3, 2, 2}));
  CHECK(YoungShape({1}).diagonal_length() == 1);

  YoungShape stairs = YoungShape::staircase(3);
  CHECK(stairs.rows() == std::vector<int>({3, 2, 1}));
  CHECK(stairs.diagonal_length() == 2);

  YoungShape empty = YoungShape::staircase(0);
  CHECK(empty.row_count() == 0);
  CHECK(empty.cell_count() == 0);
  CHECK(empty.diagonal_length() == 0);
  CHECK_FALSE(empty.contains(1, 1));
}

TEST_CASE("region construction and cell lists") {
  YoungShape s({3, 1});

  Region full = lambda_region(s, 1, 1);
  CHECK(full.top == 1);
  CHECK(full.left == 1);
  CHECK(full.len == std::vector<int>({3, 1}));
  CHECK_FALSE(full.transposed);
  CHECK(region_cells(full) ==
        std::vector<std::pair<int, int>>({{1, 1}, {1, 2}, {1, 3}, {2, 1}}));

  Region r12 = lambda_region(s, 1, 2);
  CHECK(r12.len == std::vector<int>({2}));
  CHECK(r12.left == 2);
  CHECK(region_cells(r12) ==
        std::vector<std::pair<int, int>>({{1, 2}, {1, 3}}));

  CHECK(lambda_region(s, 2, 1).len == std::vector<int>({1}));
  CHECK(lambda_region(s, 2, 2).cell_count() == 0);
  CHECK(lambda_region(s, 3, 1).cell_count() == 0);

  Region up = upper_region(s, 1, 3, 0);  // rows 1..2, columns >= 3
  CHECK(up.len == std::vector<int>({1}));
  CHECK(region_cells(up) == std::vector<std::pair<int, int>>({{1, 3}}));

  Region low = lower_region(s, 2, 1, 0);  // columns 1..1, rows >= 2
  CHECK(low.transposed);
  CHECK(region_cells(low) == std::vector<std::pair<int, int>>({{2, 1}}));
  CHECK(lower_region(s, 3, 1, 0).cell_count() == 0);

  // Shifted variants used by the rectangular factorization.
  Region upshift = upper_region(s, 1, 2, 1);  // row 1, columns >= 1
  CHECK(region_cells(upshift) ==
        std::vector<std::pair<int, int>>({{1, 1}, {1, 2}, {1, 3}}));
  Region lowshift = lower_region(s, 2, 1, -1);  // column 1, rows >= 3
  CHECK(lowshift.cell_count() == 0);
}

TEST_CASE("region generating functions match brute-force enumeration") {
  std::mt19937 rng(20260819u);
  for (int trial = 0; trial < 30; ++trial) {
    YoungShape s = random_shape(rng, 10);
    auto ring = Ring::create();
    for (int i = 1; i <= s.row_count() + 1; ++i)
      for (int j = 1; j <= s.col_count() + 1; ++j) {
        Region r = lambda_region(s, i, j);
        CHECK(region_genfun(ring, r) == brute_genfun(ring, r));
      }
    std::uniform_int_distribution<int> pick(1, s.row_count() + 2);
    std::uniform_int_distribution<int> shd(-1, 2);
    for (int t = 0; t < 4; ++t) {
      int i = pick(rng), k = pick(rng), sh = shd(rng);
      Region up = upper_region(s, std::min(i, k), std::max(i, k) + 1, sh);
      CHECK(region_genfun(ring, up) == brute_genfun(ring, up));
      Region low = lower_region(s, std::max(i, k) + 1, std::min(i, k), sh);
      CHECK(region_genfun(ring, low) == brute_genfun(ring, low));
    }
  }
}

TEST_CASE("pinned generating functions over the shape (3,1)") {
  YoungShape s({3, 1});
  auto ring = Ring::create();
  Poly g11 = region_genfun(ring, lambda_region(s, 1, 1));
  CHECK(g11 == Poly::parse(ring,
                           "x1_1*x1_2*x1_3*x2_1 + x1_2*x1_3*x2_1 + x1_3*x2_1 "
                           "+ x1_2*x1_3 + x2_1 + x1_3 + 1"));
  CHECK(region_genfun(ring, lambda_region(s, 1, 2)) ==
        Poly::parse(ring, "x1_2*x1_3 + x1_3 + 1"));
  CHECK(region_genfun(ring, lambda_region(s, 2, 1)) ==
        Poly::parse(ring, "x2_1 + 1"));
  CHECK(region_genfun(ring, lambda_region(s, 2, 2)).is_one());

  CHECK(region_product(ring, lambda_region(s, 1, 1)) ==
        Poly::parse(ring, "x1_1*x1_2*x1_3*x2_1"));
  CHECK(region_product(ring, lambda_region(s, 3, 1)).is_one());

  CHECK(region_genfun_uniform(ring, lambda_region(YoungShape({1}), 1, 1),
                              "q") == Poly::parse(ring, "q + 1"));
  CHECK(region_genfun_uniform(ring, lambda_region(s, 1, 1), "q") ==
        Poly::parse(ring, "q^4 + q^3 + 2*q^2 + 2*q + 1"));
}

TEST_CASE("skew matrix and square factorization for (3,1)") {
  YoungShape s({3, 1});
  auto ring = Ring::create();
  PolyMatrix a = a_matrix(ring, s);
  REQUIRE(a.rows() == 2);
  REQUIRE(a.cols() == 2);
  CHECK(a.at(0, 1) == Poly::parse(ring, "x1_2*x1_3 + x1_3 + 1"));
  CHECK(a.at(1, 0) == Poly::parse(ring, "x2_1 + 1"));
  CHECK(a.at(1, 1).is_one());

  UdlFactors f = udl_combinatorial(ring, s);
  CHECK(f.u.at(0, 0).is_one());
  CHECK(f.u.at(1, 0).is_zero());
  CHECK(f.u.at(0, 1) == Poly::parse(ring, "x1_2*x1_3 + x1_3 + 1"));
  CHECK(f.d.at(0, 0) == Poly::parse(ring, "x1_1*x1_2*x1_3*x2_1"));
  CHECK(f.d.at(1, 1).is_one());
  CHECK(f.l.at(1, 0) == Poly::parse(ring, "x2_1 + 1"));
  CHECK(f.u * f.d * f.l == a);
}

TEST_CASE("square factorization verifies on pinned and random shapes") {
  for (auto rows : std::vector<std::vector<int>>{
           {1}, {3, 1}, {2, 2}, {4, 4, 2, 1}, {3, 2, 1}}) {
    VerificationReport rep = verify_udl(YoungShape(rows));
    INFO(rep.case_id, ": ", rep.witness);
    CHECK(rep.match);
    CHECK(rep.claimed.front() == "1");
  }

  VerificationReport rep = verify_udl(YoungShape({2, 2}));
  REQUIRE(rep.claimed.size() == 3);
  CHECK(rep.claimed[1] == "x2_2");
  CHECK(rep.claimed[2] == "x1_1*x1_2*x2_1*x2_2");
  CHECK(rep.extracted[0] == rep.claimed[2]);
  auto has = [&](const std::string& m) {
    for (auto& x : rep.methods)
      if (x == m) return true;
    return false;
  };
  CHECK(has("combinatorial-factorization"));
  CHECK(has("determinant"));
  CHECK(has("ssnf-chain"));

  std::mt19937 rng(97531u);
  for (int trial = 0; trial < 50; ++trial) {
    YoungShape s = random_shape(rng, 12);
    VerificationReport r = verify_udl(s);
    INFO(r.case_id, ": ", r.witness);
    CHECK(r.match);
  }
}

TEST_CASE("border anchors of (3,1)") {
  YoungShape s({3, 1});
  std::set<std::pair<int, int>> got;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 6; ++b)
      if (border_anchor(s, a, b)) got.insert({a, b});
  std::set<std::pair<int, int>> want{{1, 4}, {2, 2}, {2, 3},
                                     {3, 1}, {3, 2}, {2, 4}};
  CHECK(got == want);

  // The strip endpoints exist for every nonempty shape.
  std::mt19937 rng(1112u);
  for (int trial = 0; trial < 10; ++trial) {
    YoungShape t = random_shape(rng, 12);
    CHECK(border_anchor(t, t.row_count() + 1, 1));
    CHECK(border_anchor(t, 1, t.col_count() + 1));
    CHECK_FALSE(border_anchor(t, 1, 1));
  }
}

TEST_CASE("rectangular factorization at the hand-checked anchor") {
  YoungShape s({3, 1});
  auto ring = Ring::create();
  PolyMatrix a = rect_a_matrix(ring, s, 3, 2);
  REQUIRE(a.rows() == 3);
  REQUIRE(a.cols() == 2);
  CHECK(a.at(0, 1) == Poly::parse(ring, "x1_2*x1_3 + x1_3 + 1"));
  CHECK(a.at(1, 0) == Poly::parse(ring, "x2_1 + 1"));
  CHECK(a.at(1, 1).is_one());
  CHECK(a.at(2, 0).is_one());
  CHECK(a.at(2, 1).is_one());

  UdlFactors f = rect_udl_combinatorial(ring, s, 3, 2);
  CHECK(f.u.at(0, 1) ==
        Poly::parse(ring, "x1_1*x1_2*x1_3 + x1_2*x1_3 + x1_3 + 1"));
  CHECK(f.u.at(0, 2) == Poly::parse(ring, "x1_2*x1_3 + x1_3 + 1"));
  CHECK(f.u.at(1, 2).is_one());
  CHECK(f.l.at(1, 0).is_one());
  CHECK(f.d.at(2, 1).is_one());
  CHECK(f.d.at(1, 0) == Poly::parse(ring, "x2_1"));
  CHECK(f.d.at(0, 0).is_zero());
  CHECK(f.d.at(0, 1).is_zero());
  CHECK(f.u * f.d * f.l == a);

  VerificationReport rep = verify_rect_udl(s, 3, 2);
  INFO(rep.witness);
  CHECK(rep.match);
  REQUIRE(rep.claimed.size() == 2);
  CHECK(rep.claimed[0] == "1");
  CHECK(rep.claimed[1] == "x2_1");

  CHECK_THROWS_AS(verify_rect_udl(s, 3, 3), PolyError);
}

TEST_CASE("rectangular factorization across anchor regimes") {
  YoungShape s({3, 1});
  for (auto [a, b] : all_anchors(s)) {
    VerificationReport rep = verify_rect_udl(s, a, b);
    INFO(rep.case_id, ": ", rep.witness);
    CHECK(rep.match);
    CHECK(rep.claimed.front() == "1");
    CHECK(rep.claimed.size() == static_cast<std::size_t>(std::min(a, b)));
  }

  std::mt19937 rng(777u);
  for (int trial = 0; trial < 20; ++trial) {
    YoungShape t = random_shape(rng, 12);
    auto anchors = all_anchors(t);
    REQUIRE_FALSE(anchors.empty());
    std::uniform_int_distribution<std::size_t> pick(0, anchors.size() - 1);
    auto [a, b] = anchors[pick(rng)];
    VerificationReport rep = verify_rect_udl(t, a, b);
    INFO(rep.case_id, ": ", rep.witness);
    CHECK(rep.match);
  }
}

TEST_CASE("staircase q-specialization matches Catalan moment matrices") {
  for (int n = 1; n <= 3; ++n)
    for (bool odd : {false, true}) {
      VerificationReport rep = catalan_specialization(n, odd);
      INFO(rep.case_id, ": ", rep.witness);
      CHECK(rep.match);
      auto has = [&](const std::string& m) {
        for (auto& x : rep.methods)
          if (x == m) return true;
        return false;
      };
      CHECK(has("combinatorial-factorization"));
      CHECK(has("minor-gcd"));
      CHECK(has("hankel-bridge"));
      CHECK(has("moment-claim-bridge"));
    }

  VerificationReport even1 = catalan_specialization(1, false);
  CHECK(even1.claimed == std::vector<std::string>({"1", "q"}));
  VerificationReport odd1 = catalan_specialization(1, true);
  CHECK(odd1.claimed == std::vector<std::string>({"1", "q^3"}));
  VerificationReport even2 = catalan_specialization(2, false);
  CHECK(even2.claimed == std::vector<std::string>({"1", "q", "q^6"}));

  // The specialized matrix is the row-and-column reversed Hankel matrix of
  // the area-weighted Catalan numbers; check one instance directly.
  auto ring = Ring::create();
  YoungShape s = YoungShape::staircase(3);  // n = 2, even case
  auto cat = q_catalan_upto(ring, 4);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(region_genfun_uniform(ring, lambda_region(s, i, j), "q") ==
            cat[6 - i - j]);
}

TEST_CASE("region size guard") {
  YoungShape big = YoungShape::staircase(9);  // 45 cells
  auto ring = Ring::create();
  CHECK_THROWS_AS(region_genfun(ring, lambda_region(big, 1, 1)), PolyError);
  CHECK_THROWS_AS(
      region_genfun_uniform(ring, lambda_region(big, 1, 1), "q"), PolyError);
}
