// Decides whether a presentation presents a left divisibility monoid by
// scanning three conditions over small generator tuples; the fourth condition
// (the monoid is the quotient of the free monoid by the degree-2 congruence)
// holds by construction for the accepted input format.

#ifndef DIVMON_AXIOMS_HPP_
#define DIVMON_AXIOMS_HPP_

#include <string>
#include <vector>

#include "monoid.hpp"
#include "types.hpp"

namespace divmon {

enum class Condition { I, II, III };

char const* condition_name(Condition c);

struct Violation {
  Condition                condition;
  std::vector<letter_type> witness;  // the generator tuple, loop order
  std::string              detail;

  friend bool operator<(Violation const& a, Violation const& b) {
    if (a.condition != b.condition) {
      return a.condition < b.condition;
    }
    if (a.witness != b.witness) {
      return a.witness < b.witness;
    }
    return a.detail < b.detail;
  }
};

struct CheckReport {
  bool                   passed;
  std::vector<Violation> failures;  // sorted
  size_t                 scanned_i;
  size_t                 scanned_ii;
  size_t                 scanned_iii;
  // The fourth defining condition (the monoid is the quotient of the free
  // monoid by the congruence its degree-2 relations generate) is structural
  // for the accepted input format.
  std::string condition_iv = "holds by construction";
};

// Condition I: the divisor poset of every product of three generators is a
// distributive lattice. Witness tuple: (x, y, z).
std::vector<Violation> check_condition_i(Monoid const& m);

// Condition II: x y z = x y' z' or y z x = y' z' x implies y z = y' z'.
// Witness tuple: (x, y, z, y', z'); detail names the side that failed.
std::vector<Violation> check_condition_ii(Monoid const& m);

// Condition III: x y = x' y', x z = x' z' and y != z imply x = x'.
// Witness tuple: (x, y, z, x', y', z').
std::vector<Violation> check_condition_iii(Monoid const& m);

CheckReport check_all(Monoid const& m);

}  // namespace divmon

#endif  // DIVMON_AXIOMS_HPP_
