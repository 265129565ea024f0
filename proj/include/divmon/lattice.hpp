// Finite divisor lattices: the left divisors of an element ordered by left
// divisibility, with join/meet tables, a distributivity check and the width
// (maximal antichain size).

#ifndef DIVMON_LATTICE_HPP_
#define DIVMON_LATTICE_HPP_

#include <cstdint>
#include <vector>

#include "monoid.hpp"
#include "types.hpp"

namespace divmon {

struct DivisorLattice {
  Element                           top;
  std::vector<Element>              carrier;  // sorted by (length, lex)
  std::vector<std::vector<bool>>    leq;      // leq[i][j]: carrier[i] divides carrier[j]
  std::vector<std::vector<int32_t>> join;     // -1 where no least upper bound
  std::vector<std::vector<int32_t>> meet;     // -1 where no greatest lower bound
  bool                              is_lattice;

  size_t size() const noexcept { return carrier.size(); }
  size_t index_of(Element const& e) const;  // throws DomainError if absent
};

// Carrier = all left divisors of a; order by left divisibility; join/meet
// filled where least upper / greatest lower bounds exist.
DivisorLattice divisor_lattice(Monoid const& m, Element const& a);

// Assembles a DivisorLattice from a raw order table (used to build synthetic
// posets in tests); carrier[i] <= carrier[j] iff leq[i][j]. The top field is
// set to the unique maximal element if there is one, else to carrier.back().
DivisorLattice lattice_from_order(std::vector<Element>           carrier,
                                  std::vector<std::vector<bool>> leq);

// True iff a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) for all triples. Requires
// is_lattice (throws DomainError otherwise).
bool lattice_is_distributive(DivisorLattice const& L);

// Maximal antichain size, by Dilworth's theorem: the carrier minus a maximum
// matching on the strict-order bipartite graph is a minimum chain cover.
size_t lattice_width(DivisorLattice const& L);

}  // namespace divmon

#endif  // DIVMON_LATTICE_HPP_
