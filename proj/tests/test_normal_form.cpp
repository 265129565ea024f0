#include <doctest.h>

#include <functional>
#include <map>

#include "divmon/normal_form.hpp"
#include "test_helpers.hpp"

using namespace divmon;
using namespace divmon::test;

TEST_SUITE("normal-form") {
  TEST_CASE("oracle normalization") {
    auto m = sample_xy_yz();
    auto t = enumerate_hypercubes(m);
    CHECK(normalize_oracle(m, t, m.identity()).factors.empty());
    // the 2-cube itself is a one-factor normal form
    CHECK(normalize_oracle(m, t, m.element_of({0, 1}))
          == NormalWord{{4}});

    auto tw = sample_twisted();
    auto tt = enumerate_hypercubes(tw);
    // y z y x x z normalizes to (x x).(y).(y).(y x)
    CHECK(normalize_oracle(tw, tt, tw.element_of({1, 2, 1, 0, 0, 2}))
          == NormalWord{{4, 2, 2, 5}});
  }

  TEST_CASE("normal form multiplies back to the element") {
    for (auto m : {sample_xy_yz(), sample_twisted(), sample_cyclic()}) {
      auto t = enumerate_hypercubes(m);
      for (auto const& e : m.elements_up_to(5)) {
        auto nf = normalize_oracle(m, t, e);
        CHECK(product_of(m, t, nf.factors) == e);
        CHECK(total_length(t, nf) == e.length());
        CHECK(is_normal_word(m, t, nf.factors));
      }
    }
  }

  TEST_CASE("normal pairs") {
    auto f  = sample_free(2);
    auto tf = enumerate_hypercubes(f);
    CHECK(is_normal_pair(f, tf, 1, 1));

    auto m = sample_xy_yz();
    auto t = enumerate_hypercubes(m);
    CHECK(is_normal_pair(m, t, 1, 4));  // x . w, h(x w) = w
    // h(w x) = x, so even w . x is normal here
    CHECK(is_normal_pair(m, t, 4, 1));

    auto cyc = sample_cyclic();
    auto tc  = enumerate_hypercubes(cyc);
    CHECK(!is_normal_pair(cyc, tc, 5, 1));  // no normal form (z z).(x)
    CHECK_THROWS_AS(is_normal_pair(cyc, tc, 0, 1), DomainError);
  }

  TEST_CASE("normal words") {
    auto tw = sample_twisted();
    auto tt = enumerate_hypercubes(tw);
    std::vector<cube_id> good{4, 2, 2, 5};
    CHECK(is_normal_word(tw, tt, good));
    std::vector<cube_id> single{3};
    CHECK(is_normal_word(tw, tt, single));
    // x . (x x) is not normal: h(x x x) is the 2-cube, not itself times x
    std::vector<cube_id> bad{1, 4};
    CHECK(is_normal_word(tw, tt, bad) == is_normal_pair(tw, tt, 1, 4));
  }

  TEST_CASE("uniqueness: exactly one factorization is normal") {
    auto m = sample_xy_yz();
    auto t = enumerate_hypercubes(m);
    std::map<Element, size_t> normal_count;
    std::vector<cube_id>      seq;
    size_t                    used = 0;
    std::function<void()>     rec  = [&]() {
      for (cube_id c = 1; c < t.size(); ++c) {
        if (used + t[c].length() > 4) {
          continue;
        }
        seq.push_back(c);
        used += t[c].length();
        if (is_normal_word(m, t, seq)) {
          normal_count[product_of(m, t, seq)] += 1;
        }
        rec();
        used -= t[c].length();
        seq.pop_back();
      }
    };
    rec();
    for (auto const& e : m.elements_up_to(4)) {
      if (!e.is_identity()) {
        CHECK(normal_count[e] == 1);
      }
    }
  }

  TEST_CASE("left multiplication update") {
    auto m = sample_xy_yz();
    auto t = enumerate_hypercubes(m);
    // y . (x) has normal form (y).(x)
    CHECK(left_mult_update(m, t, 2, NormalWord{{1}}) == NormalWord{{2, 1}});
    // multiplying by the trivial cube is the identity map
    auto nf = normalize_oracle(m, t, m.element_of({0, 1, 2}));
    CHECK(left_mult_update(m, t, 0, nf) == nf);
  }

  TEST_CASE("right multiplication update") {
    auto m = sample_xy_yz();
    auto t = enumerate_hypercubes(m);
    // (w) . z has normal form (x).(w)
    CHECK(right_mult_update(m, t, NormalWord{{4}}, 3) == NormalWord{{1, 4}});
    auto nf = normalize_oracle(m, t, m.element_of({0, 1, 2}));
    CHECK(right_mult_update(m, t, nf, 0) == nf);
  }

  TEST_CASE("updates agree with the oracle") {
    for (auto m : {sample_xy_yz(), sample_twisted(), sample_cyclic()}) {
      auto t = enumerate_hypercubes(m);
      for (auto const& a : m.elements_up_to(4)) {
        auto nf = normalize_oracle(m, t, a);
        for (auto const& c : t.cubes()) {
          CHECK(left_mult_update(m, t, c.id, nf)
                == normalize_oracle(m, t, m.product(c.element, a)));
          CHECK(right_mult_update(m, t, nf, c.id)
                == normalize_oracle(m, t, m.product(a, c.element)));
        }
      }
    }
  }

  TEST_CASE("bounded distances") {
    auto m = sample_xy_yz();
    auto t = enumerate_hypercubes(m);
    auto a = m.element_of({0, 1});
    CHECK(bounded_distance_left(m, t, a, a) == 0);
    CHECK(bounded_distance_right(m, t, a, a) == 0);
    // w z = x y z, one cube apart on the right
    CHECK(bounded_distance_right(m, t, a, m.element_of({0, 1, 2})) == 1);
    // x . y = the 2-cube element: one cube apart on the left
    CHECK(bounded_distance_left(m, t, m.generator(1), a) == 1);
    // y x is not any single left multiple of y
    CHECK(bounded_distance_left(m, t, m.generator(1),
                                m.element_of({1, 0}))
          == 2);
    // same length, different elements: no single cube can bridge
    CHECK(bounded_distance_left(m, t, m.generator(0), m.generator(1)) == 2);
    // length gap beyond the largest cube
    CHECK(bounded_distance_right(m, t, m.identity(),
                                 m.element_of({0, 0, 0})) == 2);
  }

  TEST_CASE("rendering") {
    auto tw = sample_twisted();
    auto tt = enumerate_hypercubes(tw);
    auto const& p = tw.presentation();
    CHECK(render(NormalWord{}, tt, p) == "1");
    CHECK(render(NormalWord{{2}}, tt, p) == "y");
    CHECK(render(NormalWord{{4, 2, 2, 5}}, tt, p) == "[x y].y.y.[y z]");
  }
}
