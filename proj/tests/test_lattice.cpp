#include <doctest.h>

#include "divmon/lattice.hpp"
#include "test_helpers.hpp"

using namespace divmon;
using namespace divmon::test;

namespace {

// n distinct elements to label synthetic posets with.
std::vector<Element> labels(size_t n) {
  auto f = sample_free(1);
  return f.elements_up_to(n - 1);
}

std::vector<std::vector<bool>> reflexive(size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    leq[i][i] = true;
  }
  return leq;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("chain") {
    auto f = sample_free(1);
    auto L = divisor_lattice(f, f.element_of({0, 0, 0}));
    CHECK(L.size() == 4);
    CHECK(L.is_lattice);
    CHECK(lattice_is_distributive(L));
    CHECK(lattice_width(L) == 1);
  }

  TEST_CASE("two-cube") {
    auto m = sample_xy_yz();
    auto L = divisor_lattice(m, m.element_of({0, 1}));
    REQUIRE(L.size() == 4);  // 1, x, y, xy
    CHECK(L.is_lattice);
    CHECK(lattice_is_distributive(L));
    CHECK(lattice_width(L) == 2);
    CHECK(L.carrier[0].is_identity());
    CHECK(L.carrier[3] == m.element_of({0, 1}));
    // join of the two atoms is the top
    CHECK(L.join[1][2] == 3);
    CHECK(L.meet[1][2] == 0);
  }

  TEST_CASE("point") {
    auto m = sample_xy_yz();
    auto L = divisor_lattice(m, m.identity());
    CHECK(L.size() == 1);
    CHECK(L.is_lattice);
    CHECK(lattice_width(L) == 1);
  }

  TEST_CASE("diamond M3 is a non-distributive lattice") {
    // 0 < a, b, c < 1 with the three atoms pairwise incomparable
    auto leq = reflexive(5);
    for (size_t i : {1, 2, 3}) {
      leq[0][i] = true;
      leq[i][4] = true;
    }
    leq[0][4] = true;
    auto L = lattice_from_order(labels(5), leq);
    CHECK(L.is_lattice);
    CHECK(!lattice_is_distributive(L));
    CHECK(lattice_width(L) == 3);
  }

  TEST_CASE("pentagon N5 is a non-distributive lattice") {
    // 0 < a < b < 1 and 0 < c < 1 with c incomparable to a, b
    auto leq  = reflexive(5);
    leq[0][1] = leq[0][2] = leq[0][3] = leq[0][4] = true;
    leq[1][2] = true;
    leq[1][4] = leq[2][4] = leq[3][4] = true;
    auto L = lattice_from_order(labels(5), leq);
    CHECK(L.is_lattice);
    CHECK(!lattice_is_distributive(L));
    CHECK(lattice_width(L) == 2);
  }

  TEST_CASE("two minimal upper bounds is not a lattice") {
    // a, b below two incomparable tops
    auto leq  = reflexive(4);
    leq[0][2] = leq[0][3] = true;
    leq[1][2] = leq[1][3] = true;
    auto L = lattice_from_order(labels(4), leq);
    CHECK(!L.is_lattice);
    CHECK(L.join[0][1] == -1);
    CHECK_THROWS_AS(lattice_is_distributive(L), DomainError);
    CHECK(lattice_width(L) == 2);
  }

  TEST_CASE("widths of the power divisor lattices") {
    // width of the divisors of x^n in the cyclic-relation monoid follows
    // the partitions of n into at most three parts: 1, 2, 3, 4 for n <= 4
    auto cyc = sample_cyclic();
    for (size_t n : {1u, 2u, 3u, 4u}) {
      Word w(n, 0);
      auto L = divisor_lattice(cyc, cyc.element_of(w));
      CHECK(L.is_lattice);
      CHECK(lattice_width(L) == n);
    }
  }

  TEST_CASE("lcm and gcd agree with the lattice tables") {
    auto m = sample_xy_yz();
    auto L = divisor_lattice(m, m.element_of({0, 1, 2}));
    for (size_t i = 0; i < L.size(); ++i) {
      for (size_t j = 0; j < L.size(); ++j) {
        if (L.join[i][j] >= 0) {
          auto lcm = m.right_lcm({L.carrier[i], L.carrier[j]});
          REQUIRE(lcm.has_value());
          CHECK(*lcm == L.carrier[static_cast<size_t>(L.join[i][j])]);
        }
        if (L.meet[i][j] >= 0) {
          CHECK(m.left_gcd(L.carrier[i], L.carrier[j])
                == L.carrier[static_cast<size_t>(L.meet[i][j])]);
        }
      }
    }
  }
}
