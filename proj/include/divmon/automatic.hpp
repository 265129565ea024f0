// The biautomatic structure over the hypercube alphabet: padded convolutions
// of word pairs, the automaton of the normal-form language, the equality
// recognizer and the left/right multiplier automata, plus the oracle sweeps
// and the fellow-traveller report that validate them.

#ifndef DIVMON_AUTOMATIC_HPP_
#define DIVMON_AUTOMATIC_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypercube.hpp"
#include "normal_form.hpp"

namespace divmon {

enum class Padding { right, left };
enum class MultSide { left, right };

// One column of a convolution; pad is the $ symbol.
struct PairLetter {
  static constexpr int32_t pad = -1;
  int32_t                  u;
  int32_t                  v;
};

// A padded convolution of two words over the hypercube alphabet. The padding
// symbols form a contiguous block at the end (right padding) or at the start
// (left padding) of exactly one component.
class PaddedPair {
 public:
  static PaddedPair convolve_right(std::span<cube_id const> u,
                                   std::span<cube_id const> v);
  // The mirror construction: pads at the start, aligning the word ends.
  static PaddedPair convolve_left(std::span<cube_id const> u,
                                  std::span<cube_id const> v);

  Padding                        direction() const noexcept { return dir_; }
  std::vector<PairLetter> const& letters() const noexcept { return letters_; }

 private:
  PaddedPair(Padding dir, std::vector<PairLetter> letters)
      : dir_(dir), letters_(std::move(letters)) {}
  Padding                 dir_;
  std::vector<PairLetter> letters_;
};

// Acceptor of the right-normal-form language over H: from the start state a
// transition to any non-trivial cube, then a -> b exactly when a.b is
// normal; every state accepts (the empty word encodes N(1)).
class NormalLanguageAutomaton {
 public:
  NormalLanguageAutomaton(Monoid const& m, HypercubeTable const& table);

  bool   accepts(std::span<cube_id const> factors) const;
  size_t state_count() const noexcept { return allowed_.size() + 1; }
  bool   transition_allowed(cube_id a, cube_id b) const {
    return allowed_.at(a).at(b);
  }

 private:
  std::vector<std::vector<bool>> allowed_;
};

// A deterministic, complete automaton over pair letters. States carry a
// printable descriptor; the dead state is explicit.
struct PairAutomaton {
  Padding                            padding;
  size_t                             cube_count;
  std::vector<std::string>           state_labels;
  uint32_t                           initial;
  uint32_t                           dead;
  std::vector<bool>                  accepting;
  std::vector<std::vector<uint32_t>> delta;  // [state][letter_index]
  // Builders only materialize machines after determinization and
  // completion; deserialized or hand-built machines may differ.
  bool deterministic = true;

  size_t state_count() const noexcept { return state_labels.size(); }
  size_t letter_index(PairLetter l) const;
  uint32_t step(uint32_t state, PairLetter l) const;
  bool     accepts(PaddedPair const& input) const;
};

// Right multiplier over left-padded convolutions: the state is the element d
// with (u so far) d = (v so far), kept inside the hypercube alphabet;
// accepting state is z. With z the trivial cube this is the equality
// recognizer. State count is |H| + 1 (the cubes and the dead state).
PairAutomaton right_multiplier_automaton(Monoid const& m,
                                         HypercubeTable const& table,
                                         cube_id z);

// Left multiplier over right-padded convolutions, built from the
// nondeterministic relation automaton with signed difference descriptors and
// determinized by the subset construction.
PairAutomaton left_multiplier_automaton(Monoid const& m,
                                        HypercubeTable const& table,
                                        cube_id y);

// The generic construction behind left_multiplier_automaton: recognizes
// convolutions (with the given padding) of pairs (u, v) with y u = v
// (MultSide::left) or u z = v (MultSide::right) as elements. Differences are
// tracked as signed elements of length at most twice the maximal cube
// length.
PairAutomaton relation_automaton(Monoid const& m, HypercubeTable const& table,
                                 MultSide side, cube_id multiplier,
                                 Padding padding);

std::string serialize(PairAutomaton const& a);
std::string export_dot(PairAutomaton const& a);

// Exhaustive validation of a multiplier automaton against the oracle: over
// all pairs of elements of length <= max_len, acceptance of the convolution
// of their normal forms must match the defining equation.
struct SweepResult {
  size_t      pairs      = 0;
  size_t      mismatches = 0;
  std::string first_mismatch;
};
SweepResult multiplier_oracle_sweep(Monoid const& m,
                                    HypercubeTable const& table,
                                    PairAutomaton const& machine,
                                    MultSide side, cube_id multiplier,
                                    size_t max_len);

// Sweeps every pair (element a, non-trivial cube) with |a| <= max_len and
// checks both directed fellow traveller properties with bound 2: all
// prefix/suffix distances between the normal forms of a and of (cube a,
// resp. a cube) stay below 2 over the hypercube alphabet. The normal forms
// are produced by `normalizer`, by default the oracle; tests substitute a
// corrupted normalizer as a negative control.
struct FellowTravellerReport {
  size_t                   pairs_checked = 0;
  int                      max_left      = 0;
  int                      max_right     = 0;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};
FellowTravellerReport fellow_traveller_report(
    Monoid const& m, HypercubeTable const& table, size_t max_len,
    std::function<NormalWord(Element const&)> normalizer = {});

}  // namespace divmon

#endif  // DIVMON_AUTOMATIC_HPP_
