// Oracle tests for the lattice Gram machinery: partition and noncrossing
// lattices against hand-computed joins and counts, Moebius inversion against
// pinned examples, the Z diag(g) Z^t factorization on pinned and random
// inputs, Kreweras duals, Beraha factors against their numeric roots,
// Dyck-path height counts against brute-force enumeration, determinant
// identities, and the conjecture probes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "snfmom/lattice.hpp"
#include "snfmom/qfun.hpp"

using namespace snfmom;

namespace {

int index_of_label(const RankedLattice& lat, const std::string& label) {
  for (int i = 0; i < lat.size(); ++i)
    if (lat.labels[i] == label) return i;
  REQUIRE(false);
  return -1;
}

// Every Dyck path of 2n steps, tallied by exact height.
std::vector<long long> brute_heights(int n) {
  std::vector<long long> h(std::max(n, 0), 0);
  std::vector<int> steps;
  auto rec = [&](auto&& self, int up, int down, int height, int maxh) -> void {
    if (up == n && down == n) {
      if (maxh >= 1) h[maxh - 1] += 1;
      return;
    }
    if (up < n) self(self, up + 1, down, height + 1, std::max(maxh, height + 1));
    if (down < up) self(self, up, down + 1, height - 1, maxh);
  };
  if (n > 0) rec(rec, 0, 0, 0, 0);
  return h;
}

long long catalan_ll(int n) {
  std::vector<long long> c{1};
  for (int i = 0; i < n; ++i) {
    long long next = 0;
    for (int k = 0; k <= i; ++k) next += c[k] * c[i - k];
    c.push_back(next);
  }
  return c[n];
}

}  // namespace

TEST_CASE("partition lattice structure") {
  RankedLattice p3 = partition_lattice(3);
  CHECK(p3.size() == 5);
  CHECK(p3.name == "partitions:3");
  CHECK(p3.labels[p3.bottom] == "1|2|3");
  CHECK(p3.labels[p3.top] == "1,2,3");
  CHECK(p3.rank[p3.bottom] == 0);
  CHECK(p3.rank[p3.top] == 2);
  CHECK(p3.lattice_rank() == 2);
  p3.validate();

  int x = index_of_label(p3, "1,2|3");
  int y = index_of_label(p3, "1|2,3");
  CHECK(p3.join(x, y) == p3.top);
  CHECK(p3.join(x, x) == x);
  CHECK(p3.join(p3.bottom, y) == y);
  CHECK(p3.leq(p3.bottom, x));
  CHECK_FALSE(p3.leq(x, y));

  CHECK(partition_lattice(4).size() == 15);
  partition_lattice(4).validate();
  CHECK_THROWS_AS(partition_lattice(8), BudgetExceeded);
}

TEST_CASE("moebius inversion on pinned chains") {
  RankedLattice p2 = partition_lattice(2);
  REQUIRE(p2.size() == 2);
  auto ring = Ring::create();
  Poly q = Poly::variable(ring, "q");

  std::vector<Poly> f{q, Poly::constant(1, ring)};  // f = q^(1 - rank)
  MoebiusData md = moebius_data(p2, f);
  CHECK(md.z.at(0, 0).is_one());
  CHECK(md.z.at(0, 1).is_one());
  CHECK(md.z.at(1, 0).is_zero());
  CHECK(md.z.at(1, 1).is_one());
  REQUIRE(md.g.size() == 2);
  CHECK(md.g[0] == Poly::parse(ring, "q - 1"));
  CHECK(md.g[1].is_one());

  std::vector<Poly> ones{Poly::constant(1, ring), Poly::constant(1, ring)};
  MoebiusData flat = moebius_data(p2, ones);
  CHECK(flat.g[0].is_zero());
  CHECK(flat.g[1].is_one());

  // An ordering that is not a linear extension must be rejected.
  RankedLattice bad;
  bad.name = "bad";
  bad.labels = {"top", "bottom"};
  bad.rank = {1, 0};
  bad.join_table = {{0, 0}, {0, 1}};
  bad.bottom = 1;
  bad.top = 0;
  CHECK_THROWS_AS(moebius_data(bad, ones), NotLinearExtension);
}

TEST_CASE("gram matrices from joins") {
  auto ring = Ring::create();
  Poly q = Poly::variable(ring, "q");

  RankedLattice p2 = partition_lattice(2);
  std::vector<Poly> f{q, Poly::constant(1, ring)};
  PolyMatrix g = gram_from_join(p2, f);
  CHECK(g.at(0, 0) == q);
  CHECK(g.at(0, 1).is_one());
  CHECK(g.at(1, 0).is_one());
  CHECK(g.at(1, 1).is_one());

  RankedLattice p3 = partition_lattice(3);
  std::vector<Poly> fq;
  for (int i = 0; i < p3.size(); ++i)
    fq.push_back(q.pow(static_cast<int>(p3.elements[i].size())));
  PolyMatrix g3 = gram_from_join(p3, fq);
  CHECK(g3.at(0, 0) == q.pow(3));
  CHECK(g3.at(1, 1) == q.pow(2));
  CHECK(g3.at(2, 2) == q.pow(2));
  CHECK(g3.at(3, 3) == q.pow(2));
  CHECK(g3.at(4, 4) == q);

  std::vector<Poly> ones(p3.size(), Poly::constant(1, ring));
  PolyMatrix allones = gram_from_join(p3, ones);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(allones.at(i, j).is_one());
}

TEST_CASE("factorization verifier on partition lattices") {
  auto ring = Ring::create();
  Poly q = Poly::variable(ring, "q");

  for (int n = 2; n <= 5; ++n) {
    RankedLattice lat = partition_lattice(n);
    std::vector<Poly> f;
    for (int i = 0; i < lat.size(); ++i)
      f.push_back(q.pow(lat.lattice_rank() - lat.rank[i]));
    VerificationReport rep =
        verify_lattice_factorization("rank-weights", lat, f);
    INFO(rep.case_id, ": ", rep.witness);
    CHECK(rep.match);
    bool has_det = false;
    for (auto& m : rep.methods)
      if (m == "determinant") has_det = true;
    CHECK(has_det == (lat.size() <= 16));
  }

  RankedLattice p3 = partition_lattice(3);
  std::vector<Poly> ones(p3.size(), Poly::constant(1, ring));
  CHECK(verify_lattice_factorization("flat", p3, ones).match);
}

TEST_CASE("factorization verifier on random join-closed sublattices") {
  RankedLattice ambient = partition_lattice(4);
  std::mt19937 rng(424242u);
  std::uniform_int_distribution<int> pickcount(2, 8);
  std::uniform_int_distribution<int> pickel(0, ambient.size() - 1);
  std::uniform_int_distribution<int> coef(-4, 4);
  auto ring = Ring::create();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> chosen;
    int c = pickcount(rng);
    for (int i = 0; i < c; ++i) chosen.push_back(pickel(rng));
    RankedLattice sub = join_closed_sublattice(ambient, chosen);
    REQUIRE(sub.size() >= 1);
    std::vector<Poly> f;
    for (int i = 0; i < sub.size(); ++i)
      f.push_back(Poly::constant(coef(rng), ring));
    VerificationReport rep =
        verify_lattice_factorization("random-sub", sub, f);
    INFO(rep.case_id, " size ", sub.size(), ": ", rep.witness);
    CHECK(rep.match);
  }
}

TEST_CASE("characteristic-polynomial diagonal over partition lattices") {
  VerificationReport r3 = verify_char_poly_snf(3);
  INFO(r3.witness);
  CHECK(r3.match);
  REQUIRE(r3.claimed.size() == 5);
  CHECK(r3.claimed[0] == "q");
  CHECK(r3.claimed[1] == "q^2 - q");
  CHECK(r3.claimed[3] == "q^2 - q");
  CHECK(r3.claimed[4] == "q^3 - 3*q^2 + 2*q");

  VerificationReport r4 = verify_char_poly_snf(4);
  INFO(r4.witness);
  CHECK(r4.match);
  int copies = 0;
  for (auto& s : r4.claimed)
    if (s == "q^2 - q") ++copies;
  CHECK(copies == stirling2(4, 2));

  CHECK(verify_char_poly_snf(1).match);
  CHECK(verify_char_poly_snf(5).match);
}

TEST_CASE("stirling numbers and the falling-factorial identity") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(3, 0) == 0);
  CHECK(stirling2(0, 0) == 1);

  auto ring = Ring::create();
  Poly q = Poly::variable(ring, "q");
  CHECK(falling_factorial(ring, "q", 2) == Poly::parse(ring, "q^2 - q"));
  CHECK(falling_factorial(ring, "q", 0).is_one());
  for (int n = 1; n <= 8; ++n) {
    Poly sum = Poly::zero(ring);
    for (int k = 0; k <= n; ++k)
      sum += falling_factorial(ring, "q", k) * Int(stirling2(n, k));
    CHECK(sum == q.pow(n));
  }
}

TEST_CASE("noncrossing partitions and lattice") {
  CHECK(noncrossing_partitions(3).size() == 5);
  CHECK(noncrossing_partitions(4).size() == 14);
  CHECK(noncrossing_partitions(8).size() == 1430);

  Blocks crossing{{1, 3}, {2, 4}};
  CHECK_FALSE(is_noncrossing(crossing));
  for (const Blocks& x : noncrossing_partitions(4)) CHECK(x != crossing);
  CHECK(is_noncrossing(Blocks{{1, 4}, {2, 3}}));

  RankedLattice nc4 = noncrossing_lattice(4);
  CHECK(nc4.size() == 14);
  nc4.validate();
  // The join of the two "interleaved" pair partitions must not cross.
  int a = index_of_label(nc4, "1,3|2|4");
  int b = index_of_label(nc4, "1|2,4|3");
  CHECK(nc4.join(a, b) == nc4.top);
}

TEST_CASE("kreweras duals") {
  CHECK(kreweras_dual(Blocks{{1}, {2}}, 2) == Blocks{{1, 2}});
  CHECK(kreweras_dual(Blocks{{1, 2}}, 2) == Blocks{{1}, {2}});
  CHECK(kreweras_dual(Blocks{{1, 2}, {3}}, 3) == Blocks{{1}, {2, 3}});

  for (int n = 1; n <= 6; ++n)
    for (const Blocks& x : noncrossing_partitions(n)) {
      Blocks d = kreweras_dual(x, n);
      CHECK(is_noncrossing(d));
      CHECK(static_cast<int>(x.size() + d.size()) == n + 1);
    }
}

TEST_CASE("join-count matrices over noncrossing partitions") {
  auto ring = Ring::create();
  PolyMatrix j2 = j_matrix(ring, 2, false);
  REQUIRE(j2.rows() == 2);
  CHECK(j2.at(0, 0) == Poly::parse(ring, "q^2"));
  CHECK(j2.at(0, 1) == Poly::parse(ring, "q"));
  CHECK(j2.at(1, 0) == Poly::parse(ring, "q"));
  CHECK(j2.at(1, 1) == Poly::parse(ring, "q"));
  CHECK(det_bareiss(j2) == Poly::parse(ring, "q^3 - q^2"));

  PolyMatrix j2d = j_matrix(ring, 2, true);
  CHECK(j2d.at(0, 0) == Poly::parse(ring, "q^2*delta"));
  CHECK(j2d.at(0, 1) == Poly::parse(ring, "q*delta"));
  CHECK(j2d.at(1, 1) == Poly::parse(ring, "q*delta^2"));

  CHECK(j_matrix(ring, 4, true).rows() == 14);
}

TEST_CASE("beraha factor table") {
  BerahaTable bt = beraha_factors(8);
  auto z = [&](const std::string& s) { return Poly::parse(bt.ring, s); };
  REQUIRE(bt.p.size() == 8);
  REQUIRE(bt.f.size() == 8);
  CHECK(bt.p[0] == z("z"));
  CHECK(bt.p[1] == z("z - 1"));
  CHECK(bt.p[2] == z("z^2 - 2*z"));
  CHECK(bt.p[3] == z("z^2 - 3*z + 1"));
  CHECK(bt.f[0] == z("z"));
  CHECK(bt.f[1] == z("z - 1"));
  CHECK(bt.f[2] == z("z - 2"));
  CHECK(bt.f[3] == z("z^2 - 3*z + 1"));
  CHECK(bt.f[4] == z("z - 3"));

  auto phi = [](int m) {
    int out = 0;
    for (int i = 1; i <= m; ++i) {
      int a = i, b = m;
      while (b) std::swap(a %= b, b);
      if (a == 1) ++out;
    }
    return out;
  };
  for (int k = 2; k <= 8; ++k)
    CHECK(bt.f[k - 1].degree_in("z") == phi(k + 1) / 2);

  for (int k = 1; k <= 8; ++k) {
    double root = 4 * std::pow(std::cos(M_PI / (k + 1)), 2);
    double val = bt.f[k - 1].eval_double({{"z", root}});
    CHECK(std::abs(val) < 1e-9);
  }
}

TEST_CASE("dyck path height counts") {
  DyckCounts d2 = dyck_height_counts(2);
  CHECK(d2.h == std::vector<long long>({1, 1}));
  CHECK(d2.m == std::vector<long long>({2, 1}));
  DyckCounts d3 = dyck_height_counts(3);
  CHECK(d3.h == std::vector<long long>({1, 3, 1}));
  CHECK(d3.m == std::vector<long long>({5, 4, 1}));

  for (int n = 1; n <= 8; ++n) {
    DyckCounts d = dyck_height_counts(n);
    CHECK(d.h == brute_heights(n));
    long long total = 0;
    for (int k = n; k >= 1; --k) {
      total += d.h[k - 1];
      CHECK(d.m[k - 1] == total);
    }
    CHECK(total == catalan_ll(n));
  }
  CHECK(dyck_height_counts(12).m[0] == catalan_ll(12));
}

TEST_CASE("determinant identities for the join-count matrices") {
  for (int n = 2; n <= 3; ++n) {
    VerificationReport rep = verify_dahab_determinants(n);
    INFO(rep.case_id, ": ", rep.witness);
    CHECK(rep.match);
  }

  // Pinned closed form q^5 (q-1)^4 (q-2) for the 5-by-5 case.
  auto ring = Ring::create();
  CHECK(det_bareiss(j_matrix(ring, 3, false)) ==
        Poly::parse(ring,
                    "q^10 - 6*q^9 + 14*q^8 - 16*q^7 + 9*q^6 - 2*q^5"));
}

TEST_CASE("noncrossing perfect matchings and the component form") {
  auto match2 = noncrossing_matchings(2);
  REQUIRE(match2.size() == 2);
  CHECK(match2[0] ==
        std::vector<std::pair<int, int>>({{1, 2}, {3, 4}}));
  CHECK(match2[1] ==
        std::vector<std::pair<int, int>>({{1, 4}, {2, 3}}));

  for (int n = 1; n <= 5; ++n) {
    auto ms = noncrossing_matchings(n);
    CHECK(ms.size() == static_cast<std::size_t>(catalan_ll(n)));
    for (auto& m : ms) {
      REQUIRE(m.size() == static_cast<std::size_t>(n));
      std::set<int> seen;
      for (auto [a, b] : m) {
        CHECK(a < b);
        seen.insert(a);
        seen.insert(b);
      }
      CHECK(seen.size() == static_cast<std::size_t>(2 * n));
      for (auto [a, b] : m)
        for (auto [c, d] : m) {
          bool crossing = a < c && c < b && b < d;
          CHECK_FALSE(crossing);
        }
    }
  }

  auto ring = Ring::create();
  PolyMatrix m2 = lickorish_matrix(ring, 2);
  CHECK(m2.at(0, 0) == Poly::parse(ring, "q^2"));
  CHECK(m2.at(0, 1) == Poly::parse(ring, "q"));
  CHECK(m2.at(1, 1) == Poly::parse(ring, "q^2"));

  for (int n = 1; n <= 3; ++n) {
    VerificationReport rep = verify_lickorish_bridge(n);
    INFO(rep.case_id, ": ", rep.witness);
    CHECK(rep.match);
  }

  for (int n = 1; n <= 4; ++n) {
    PolyMatrix m = lickorish_matrix(ring, n);
    for (std::size_t i = 0; i < m.rows(); ++i)
      CHECK(m.at(i, i) == Poly::variable(ring, "q").pow(n));
    // Component form equals the q-normalized two-variable matrix at
    // delta = q under the bijection-aligned ordering.
    PolyMatrix j = j_matrix(ring, n, true);
    Poly q = Poly::variable(ring, "q");
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < m.cols(); ++k) {
        Poly expected = j.at(i, k).substitute("delta", q).exact_div(q);
        CHECK(m.at(i, k) == expected);
      }
  }
}

TEST_CASE("conjecture probes") {
  for (ProbeMode mode : {ProbeMode::j_general, ProbeMode::j_q,
                         ProbeMode::j_qq, ProbeMode::lickorish}) {
    ProbeReport r1 = probe_conjecture(1, mode);
    INFO(probe_mode_name(mode), ": ", r1.to_text());
    CHECK(r1.verdict == "consistent");
    ProbeReport r2 = probe_conjecture(2, mode);
    CHECK(r2.verdict == "consistent");
    ProbeReport r3 = probe_conjecture(3, mode);
    CHECK(r3.verdict == "consistent");
  }

  ProbeReport rq = probe_conjecture(2, ProbeMode::j_q);
  bool has_det = false, has_minor = false;
  for (auto& c : rq.checked) {
    if (c.find("determinant") != std::string::npos) has_det = true;
    if (c.find("minor") != std::string::npos) has_minor = true;
  }
  CHECK(has_det);
  CHECK(has_minor);
}
