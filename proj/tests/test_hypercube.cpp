#include <algorithm>
#include <doctest.h>

#include "divmon/hypercube.hpp"
#include "test_helpers.hpp"

using namespace divmon;
using namespace divmon::test;

TEST_SUITE("hypercube") {
  TEST_CASE("enumeration for the three sample monoids") {
    auto m1 = sample_xy_yz();
    auto t1 = enumerate_hypercubes(m1);
    REQUIRE(t1.size() == 5);  // 1, x, y, z, x v y
    CHECK(t1[0].is_trivial());
    CHECK(t1[1].atoms == std::vector<letter_type>{0});
    CHECK(t1[4].atoms == std::vector<letter_type>{0, 1});
    CHECK(t1[4].element == m1.element_of({0, 1}));
    CHECK(t1.max_cube_length() == 2);
    CHECK(!t1.full_cube().has_value());

    auto t2 = enumerate_hypercubes(sample_twisted());
    REQUIRE(t2.size() == 6);
    CHECK(t2[4].atoms == std::vector<letter_type>{0, 1});  // element x x
    CHECK(t2[5].atoms == std::vector<letter_type>{1, 2});  // element y x

    auto cyc = sample_cyclic();
    auto t3  = enumerate_hypercubes(cyc);
    REQUIRE(t3.size() == 8);
    CHECK(t3[7].atoms == std::vector<letter_type>{0, 1, 2});
    CHECK(t3[7].element == cyc.element_of({0, 0, 0}));
    CHECK(t3.full_cube() == cube_id{7});
    // the z^2 element is the {x, z} cube
    CHECK(t3.by_element(cyc.element_of({2, 2})) == cube_id{5});
    CHECK(t3[5].atoms == std::vector<letter_type>{0, 2});
  }

  TEST_CASE("free monoids have only the trivial and generator cubes") {
    auto f = sample_free(3);
    auto t = enumerate_hypercubes(f);
    CHECK(t.size() == 4);
  }

  TEST_CASE("table indexes are inverse") {
    auto m = sample_twisted();
    auto t = enumerate_hypercubes(m);
    for (auto const& c : t.cubes()) {
      CHECK(t.by_atoms(c.atoms) == c.id);
      CHECK(t.by_element(c.element) == c.id);
    }
    CHECK(!t.by_atoms({0, 2}).has_value());
  }

  TEST_CASE("maximal hypercube") {
    auto m = sample_xy_yz();
    auto t = enumerate_hypercubes(m);
    CHECK(max_hypercube(m, t, m.identity()).is_trivial());
    CHECK(max_hypercube(m, t, m.generator(0)).id == 1);
    // h(x y z) is the 2-cube w
    CHECK(max_hypercube(m, t, m.element_of({0, 1, 2})).id == 4);

    auto cyc = sample_cyclic();
    auto tc  = enumerate_hypercubes(cyc);
    // h(z z x) is the {y, z} cube
    CHECK(max_hypercube(cyc, tc, cyc.element_of({2, 2, 0})).atoms
          == std::vector<letter_type>{1, 2});
  }

  TEST_CASE("h is idempotent, right-divides, and is maximal") {
    for (auto m : {sample_xy_yz(), sample_twisted(), sample_cyclic()}) {
      auto t = enumerate_hypercubes(m);
      for (auto const& a : m.elements_up_to(4)) {
        auto h = max_hypercube(m, t, a);
        CHECK(m.is_right_divisor(h.element, a));
        CHECK(max_hypercube(m, t, h.element).id == h.id);
        for (auto const& c : t.cubes()) {
          if (m.is_right_divisor(c.element, a)) {
            CHECK(m.is_right_divisor(c.element, h.element));
          }
        }
      }
    }
  }

  TEST_CASE("divisors of hypercubes are hypercubes") {
    for (auto m : {sample_xy_yz(), sample_twisted(), sample_cyclic()}) {
      auto t = enumerate_hypercubes(m);
      for (auto const& c : t.cubes()) {
        for (auto const& d : m.left_divisors(c.element)) {
          CHECK(t.by_element(d).has_value());
        }
        for (auto const& d : m.right_divisors(c.element)) {
          CHECK(t.by_element(d).has_value());
        }
      }
    }
  }

  TEST_CASE("graph of a free monoid is complete with self-loops") {
    auto f = sample_free(2);
    auto t = enumerate_hypercubes(f);
    auto g = hypercube_graph(f, t);
    REQUIRE(g.vertices.size() == 2);
    for (auto const& row : g.adj) {
      for (bool e : row) {
        CHECK(e);
      }
    }
  }

  TEST_CASE("graph edges and reachability") {
    auto m = sample_xy_yz();
    auto t = enumerate_hypercubes(m);
    auto g = hypercube_graph(m, t);
    // edge w -> w via the product x y z
    CHECK(g.adj[g.index_of(4)][g.index_of(4)]);
    CHECK(reachable(g, 1, 1));

    auto cyc = sample_cyclic();
    auto tc  = enumerate_hypercubes(cyc);
    auto gc  = hypercube_graph(cyc, tc);
    // no edge and no path from the {x, z} cube (the z^2 element) to x
    CHECK(!gc.adj[gc.index_of(5)][gc.index_of(1)]);
    CHECK(!reachable(gc, 5, 1));
    CHECK(reachable(gc, 1, 5));
    CHECK_THROWS_AS(reachable(gc, 0, 1), DomainError);
  }

  TEST_CASE("strong connectivity of the outer cubes") {
    auto cyc = sample_cyclic();
    auto tc  = enumerate_hypercubes(cyc);
    auto gc  = hypercube_graph(cyc, tc);
    auto outer = default_scc_vertices(tc);
    REQUIRE(outer.size() == 6);  // three 1-cubes and three 2-cubes
    CHECK(!strongly_connected(gc, outer));
    CHECK(strongly_connected(gc, {1}));
    CHECK(strongly_connected(gc, {1, 2, 3}));  // generators reach each other

    auto m = sample_xy_yz();
    auto t = enumerate_hypercubes(m);
    auto g = hypercube_graph(m, t);
    CHECK(default_scc_vertices(t).size() == 4);
    CHECK(strongly_connected(g, default_scc_vertices(t)));
  }

  TEST_CASE("dot export is deterministic and labelled") {
    auto m = sample_xy_yz();
    auto t = enumerate_hypercubes(m);
    auto g = hypercube_graph(m, t);
    auto dot = export_dot(g, t, m.presentation());
    CHECK(dot == export_dot(g, t, m.presentation()));
    CHECK(dot.find("[x y] : x y") != std::string::npos);
    CHECK(dot.find("digraph") != std::string::npos);
  }
}
