#include <doctest.h>

#include <algorithm>
#include <random>

#include "gs/spectrum.hpp"

using namespace gs::spectrum;

TEST_CASE("spectrum scaling") {
  SpectrumMultiset s{{"g2", 3}, {"g5", 1}};
  auto scaled = scale_spectrum(s, 5);
  CHECK(scaled == SpectrumMultiset{{"g2", 15}, {"g5", 5}});
  CHECK(scale_spectrum(s, 1) == s);
  CHECK(scale_spectrum({}, 7).empty());
  CHECK_THROWS_AS(scale_spectrum(s, 0), std::invalid_argument);
}

TEST_CASE("scaled comparison agrees with plain equality") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    SpectrumMultiset s1, s2;
    for (int label = 0; label < 6; ++label) {
      std::uint64_t m = rng() % 4;
      if (m > 0) s1.emplace("g" + std::to_string(label), m);
      m = rng() % 4;
      if (m > 0) s2.emplace("g" + std::to_string(label), m);
    }
    std::uint64_t ell = 3 + 2 * (rng() % 10);
    CHECK(isogenus_from_scaled(s1, s2, ell) == (s1 == s2));
    CHECK(isogenus_from_scaled(s1, s1, ell));
  }
}

TEST_CASE("exhaustive avoidance check at q = 3, ell = 5") {
  auto report = verify_fuchsian_pair(3, 5);
  CHECK(report.q_nu == 9);
  CHECK(report.divides_big);   // 5 | 360
  CHECK(report.avoids_small);  // 5 does not divide 12
  CHECK(report.avoids_borel);  // 5 does not divide 36
  // 36 cyclic subgroups of order 5, each contributing phi(5) = 4 elements.
  CHECK(report.order_ell_count == 144);
  CHECK(report.psl2_sub_violations == 0);
  CHECK(report.borel_violations == 0);
  CHECK(report.pass);
}

TEST_CASE("avoidance fails for ell dividing the small group") {
  auto report = verify_fuchsian_pair(3, 3);
  CHECK(report.divides_big);
  CHECK(!report.avoids_small);
  CHECK(!report.avoids_borel);
  CHECK(report.psl2_sub_violations > 0);
  CHECK(!report.pass);

  auto report7 = verify_fuchsian_pair(3, 7);
  CHECK(!report7.divides_big);  // 7 does not divide 360
  CHECK(report7.order_ell_count == 0);
  CHECK(!report7.pass);

  CHECK_THROWS_AS(verify_fuchsian_pair(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_fuchsian_pair(5, 3), std::invalid_argument);
}

TEST_CASE("trace witness for nonisometry") {
  auto f9 = gs::ff::make_field(3, 2);
  CHECK(!nonisometry_witness(gs::mat::identity(f9)));
  gs::mat::Mat2 unipotent{gs::ff::FFElem::one(f9), gs::ff::FFElem::one(f9),
                          gs::ff::FFElem::zero(f9), gs::ff::FFElem::one(f9)};
  CHECK(!nonisometry_witness(unipotent));
  CHECK(!nonisometry_witness(gs::mat::identity(f9).negated()));

  // Every element of exact order 5 has trace^2 != 4.
  int order5 = 0;
  for (const auto& g : gs::mat::enumerate_psl2(f9)) {
    if (gs::mat::element_order(g) == 5) {
      ++order5;
      CHECK(nonisometry_witness(g.rep));
    }
  }
  CHECK(order5 > 0);
}

TEST_CASE("splitting comparison separates quadratic fields") {
  gs::nt::QuadField gauss(-1), eisenstein(-3);
  auto diff = splitting_compare(gauss, eisenstein, 30);
  // p = 3: ramified in Q(sqrt(-3)) but inert in Q(i); p = 7: 7 = 3 mod 4
  // inert in Q(i), but 7 = 1 mod 3 splits in Q(sqrt(-3)).
  CHECK(!diff.empty());
  CHECK(diff[0] == 3);
  CHECK(std::find(diff.begin(), diff.end(), 7) != diff.end());
  CHECK(splitting_compare(gauss, gauss, 100).empty());
  CHECK_THROWS_AS(splitting_compare(gauss, eisenstein, 2),
                  std::invalid_argument);
}

TEST_CASE("commensurability class counts by residue") {
  auto c3 = picard_classes(3);
  CHECK(c3.count == 1);
  CHECK(!c3.index.has_value());
  CHECK(picard_classes(4).count == 1);

  auto c2 = picard_classes(2);
  CHECK(c2.count == 2);
  CHECK(c2.index == 2);
  auto c6 = picard_classes(6);
  CHECK(c6.count == 2);
  CHECK(c6.index == 6);

  auto c1 = picard_classes(1);
  CHECK(c1.count == 3);
  CHECK(c1.index == 3);
  CHECK(picard_classes(5).count == 3);

  CHECK_THROWS_AS(picard_classes(0), std::invalid_argument);
}
