// Property suites tying the fast constructions back to the brute-force
// oracle: the composition law of the h-map, the local characterization of
// normal words, the two-factor closure of cube products, the incremental
// multiplication updates, the fellow-traveller bound, transducer
// normalization and the word problem.

#ifndef DIVMON_VERIFY_HPP_
#define DIVMON_VERIFY_HPP_

#include <string>
#include <vector>

#include "hypercube.hpp"
#include "monoid.hpp"
#include "transducer.hpp"

namespace divmon {

struct SuiteResult {
  std::string name;
  bool        passed;
  size_t      checked;  // instances examined
  std::string detail;   // first failure witness, empty when passed
};

// h(a b) = h(h(a) b) for all element pairs with |a| + |b| <= max_len.
SuiteResult verify_h_map_composition(Monoid const& m,
                                     HypercubeTable const& table,
                                     size_t max_len);

// A factor sequence is pairwise normal iff it is the normal form of its
// product; all sequences of non-trivial cubes with total length <= max_len.
SuiteResult verify_local_normality(Monoid const& m,
                                   HypercubeTable const& table,
                                   size_t max_len);

// The normal form of a product of two hypercubes has at most two factors.
SuiteResult verify_two_factor_closure(Monoid const& m,
                                      HypercubeTable const& table);

// left_mult_update and right_mult_update agree with a full renormalization,
// for all (cube, element) pairs with combined length <= max_len.
SuiteResult verify_incremental_updates(Monoid const& m,
                                       HypercubeTable const& table,
                                       size_t max_len);

// Both directed fellow traveller properties hold with bound 2 over the
// hypercube alphabet, for all elements of length <= max_len.
SuiteResult verify_fellow_traveller(Monoid const& m,
                                    HypercubeTable const& table,
                                    size_t max_len);

// normalize_fast agrees with the greedy oracle on every word of length
// <= max_len.
SuiteResult verify_fast_normalization(Monoid const& m,
                                      HypercubeTable const& table,
                                      Transducer const& machine,
                                      size_t max_len);

// equal(u, v) iff v lies in the congruence class of u, over all pairs of
// words of equal length <= max_len.
SuiteResult verify_word_problem(Monoid const& m, size_t max_len);

// Every suite above, in order.
std::vector<SuiteResult> run_property_suites(Monoid const& m,
                                             HypercubeTable const& table,
                                             Transducer const& machine,
                                             size_t max_len);

}  // namespace divmon

#endif  // DIVMON_VERIFY_HPP_
