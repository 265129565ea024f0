// The right normal form: the unique factorization of an element into
// non-trivial hypercubes h_p ... h_1 (most significant first) in which each
// h_i is the maximal hypercube right-dividing the product of the prefix up
// to it. Includes the local normality test, the incremental one-cube
// multiplication updates, and small-radius directed distances over the
// hypercube alphabet.

#ifndef DIVMON_NORMAL_FORM_HPP_
#define DIVMON_NORMAL_FORM_HPP_

#include <span>
#include <string>
#include <vector>

#include "hypercube.hpp"
#include "monoid.hpp"

namespace divmon {

struct NormalWord {
  std::vector<cube_id> factors;  // most significant first; empty = N(1)

  friend bool operator==(NormalWord const& a, NormalWord const& b) {
    return a.factors == b.factors;
  }
  friend bool operator!=(NormalWord const& a, NormalWord const& b) {
    return !(a == b);
  }
};

// Reference computation, by greedy extraction of maximal right-dividing
// hypercubes. Every faster normalization path is checked against this.
NormalWord normalize_oracle(Monoid const& m, HypercubeTable const& table,
                            Element a);

// True iff the two-letter word a.b is right normal, i.e. h(a b) = b. Both
// cubes must be non-trivial.
bool is_normal_pair(Monoid const& m, HypercubeTable const& table, cube_id a,
                    cube_id b);

// True iff every adjacent pair of the sequence is normal.
bool is_normal_word(Monoid const& m, HypercubeTable const& table,
                    std::span<cube_id const> factors);

// Right normal form of y * a from the normal form of a, by the one-pass
// left-multiplication recurrence; trivial factors produced by the recurrence
// are dropped. Throws InvalidMonoidError if a computed factor fails to be a
// hypercube.
NormalWord left_mult_update(Monoid const& m, HypercubeTable const& table,
                            cube_id y, NormalWord const& f);

// Right normal form of a * z from the normal form of a.
NormalWord right_mult_update(Monoid const& m, HypercubeTable const& table,
                             NormalWord const& f, cube_id z);

// Directed distances over the hypercube alphabet, evaluated exactly on the
// radius {0, 1}: returns 0 if a = b, 1 if a and b differ by one non-trivial
// hypercube on the left (resp. right), and 2 meaning ">= 2" otherwise.
int bounded_distance_left(Monoid const& m, HypercubeTable const& table,
                          Element const& a, Element const& b);
int bounded_distance_right(Monoid const& m, HypercubeTable const& table,
                           Element const& a, Element const& b);

// Element represented by a factor sequence.
Element product_of(Monoid const& m, HypercubeTable const& table,
                   std::span<cube_id const> factors);

// Total element length of the factor sequence.
size_t total_length(HypercubeTable const& table, NormalWord const& f);

// Rendering grammar: factor := '[' name+ ']' | name ; word := factor
// ('.' factor)* | '1'. A factor prints its atom set; 1-cubes print as the
// bare generator.
std::string render(NormalWord const& f, HypercubeTable const& table,
                   Presentation const& p);

}  // namespace divmon

#endif  // DIVMON_NORMAL_FORM_HPP_
