#include <doctest.h>

#include "divmon/presentation.hpp"

using namespace divmon;

TEST_SUITE("presentation") {
  TEST_CASE("parses generators and relations") {
    auto p = parse_presentation("generators: x y z\nrel: x y = y z\n");
    CHECK(p.alphabet_size() == 3);
    CHECK(p.name_of(0) == "x");
    CHECK(p.name_of(2) == "z");
    REQUIRE(p.relations().size() == 1);
    auto const& r = p.relations()[0];
    CHECK(r.first == std::array<letter_type, 2>{0, 1});
    CHECK(r.second == std::array<letter_type, 2>{1, 2});
  }

  TEST_CASE("no relations gives a free monoid presentation") {
    auto p = parse_presentation("generators: x\n");
    CHECK(p.alphabet_size() == 1);
    CHECK(p.relations().empty());
  }

  TEST_CASE("comments and blank lines are ignored") {
    auto p = parse_presentation(
        "# a comment\n\ngenerators: x y z # trailing\n\nrel: x y = y z\n");
    CHECK(p.alphabet_size() == 3);
    CHECK(p.relations().size() == 1);
  }

  TEST_CASE("relation sides must have length 2") {
    CHECK_THROWS_AS(
        parse_presentation("generators: x y z\nrel: x y z = x x\n"),
        ParseError);
    try {
      parse_presentation("generators: x\nrel: x x x = x x\n");
    } catch (ParseError const& e) {
      CHECK(e.line == 2);
    }
  }

  TEST_CASE("undeclared symbols and duplicates are rejected") {
    CHECK_THROWS_AS(parse_presentation("generators: x y\nrel: x y = y w\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_presentation("generators: x y x\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("rel: x y = y x\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("generators: x 1y\n"), ParseError);
  }

  TEST_CASE("relations are normalized") {
    // same relation twice, once flipped, plus a trivial pair
    auto p = parse_presentation(
        "generators: x y z\nrel: y z = x y\nrel: x y = y z\nrel: x y = x "
        "y\n");
    CHECK(p.relations().size() == 1);
    CHECK(p.relations()[0].first < p.relations()[0].second);
  }

  TEST_CASE("word round-trip") {
    auto p = parse_presentation("generators: x y z\n");
    CHECK(p.word_to_string({}) == "1");
    CHECK(p.word_to_string({0, 1, 2}) == "x y z");
    CHECK(p.parse_word("x y z") == Word{0, 1, 2});
    CHECK(p.parse_word("xyz") == Word{0, 1, 2});  // single-char fallback
    CHECK(p.parse_word("1") == Word{});
    CHECK(p.parse_word("") == Word{});
    CHECK_THROWS_AS(p.parse_word("x w"), DomainError);
  }
}
