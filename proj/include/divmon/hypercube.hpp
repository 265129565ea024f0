// Hypercubes: elements that are right lcms of sets of generators. The finite
// set H of hypercubes is the state set of every machine in this library; the
// maximal-hypercube map h(.) drives the right normal form.

#ifndef DIVMON_HYPERCUBE_HPP_
#define DIVMON_HYPERCUBE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "monoid.hpp"
#include "types.hpp"

namespace divmon {

using cube_id = std::uint32_t;

struct Hypercube {
  cube_id                  id;
  std::vector<letter_type> atoms;  // sorted generator indices; empty for 1
  Element                  element;

  size_t length() const noexcept { return atoms.size(); }
  bool   is_trivial() const noexcept { return atoms.empty(); }
};

// All hypercubes of the monoid, indexed by atom set and by canonical word.
// Ids are assigned by (length, lexicographic atom set); id 0 is the trivial
// cube 1 and ids 1..|Sigma| are the generators.
class HypercubeTable {
 public:
  std::vector<Hypercube> const& cubes() const noexcept { return cubes_; }
  size_t                        size() const noexcept { return cubes_.size(); }
  Hypercube const& operator[](cube_id id) const { return cubes_.at(id); }

  static constexpr cube_id trivial = 0;

  std::optional<cube_id> by_atoms(std::vector<letter_type> const& atoms) const;
  std::optional<cube_id> by_element(Element const& e) const;

  // Length of the longest cube (the K of difference-bound arguments).
  size_t max_cube_length() const noexcept { return max_length_; }

  // Id of the cube on the full generator set, when it exists.
  std::optional<cube_id> full_cube() const;

  std::string render(cube_id id, Presentation const& p) const;

 private:
  friend HypercubeTable enumerate_hypercubes(Monoid const& m);

  std::vector<Hypercube>                              cubes_;
  std::map<std::vector<letter_type>, cube_id>         by_atoms_;
  std::unordered_map<Word, cube_id, WordHash>         by_element_;
  size_t                                              max_length_ = 0;
};

// Walks every subset S of the generators and records the right lcm of S when
// it exists with length |S|. Asserts the table is closed: distinct subsets
// give distinct elements, and the atom set of each cube is recoverable as
// its set of irreducible left divisors.
HypercubeTable enumerate_hypercubes(Monoid const& m);

// The unique maximal hypercube right-dividing a: if X is the set of
// generators right-dividing a and p = |X|, h(a) is the unique length-p right
// divisor of a that every member of X right-divides. Throws
// InvalidMonoidError when zero or several candidates survive.
Hypercube max_hypercube(Monoid const& m, HypercubeTable const& table,
                        Element const& a);

// Directed graph on the non-trivial cubes with an edge a -> b whenever
// h(a b) = b, i.e. whenever the word a.b is right normal.
struct HypercubeGraph {
  std::vector<cube_id>           vertices;  // non-trivial cube ids, ascending
  std::vector<std::vector<bool>> adj;       // indexed by position in vertices

  size_t index_of(cube_id v) const;  // throws DomainError on unknown id
};

HypercubeGraph hypercube_graph(Monoid const& m, HypercubeTable const& table);

bool reachable(HypercubeGraph const& g, cube_id from, cube_id to);

// True iff the subgraph induced by restrict_to is strongly connected.
bool strongly_connected(HypercubeGraph const&       g,
                        std::vector<cube_id> const& restrict_to);

// The default vertex set for strong-connectivity queries: every non-trivial
// cube except the cube on the full generator set (when present), mirroring
// the usual presentation of these graphs with the two central cubes omitted.
std::vector<cube_id> default_scc_vertices(HypercubeTable const& table);

std::string export_dot(HypercubeGraph const& g, HypercubeTable const& table,
                       Presentation const& p);

}  // namespace divmon

#endif  // DIVMON_HYPERCUBE_HPP_
