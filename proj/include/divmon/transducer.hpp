// The finite transducer computing right normal forms: states are the
// hypercubes, all accepting; reading a letter x in state a moves to
// b = h(a x) and outputs a word u with a x = u b. Iterating runs normalizes
// any input word in at most |w| passes and |w|(|w|+1)/2 letter steps.
// The augmented variant reads the whole hypercube alphabet and outputs at
// most one hypercube per step.

#ifndef DIVMON_TRANSDUCER_HPP_
#define DIVMON_TRANSDUCER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hypercube.hpp"
#include "normal_form.hpp"

namespace divmon {

enum class MachineKind { base, augmented };

struct Transducer {
  MachineKind kind;
  // Generator names in declaration order; the input alphabet of a base
  // machine, and the labels of the 1-cube states.
  std::vector<std::string> generators;
  // Atom sets per state, indexed by cube id; state 0 is the trivial cube.
  std::vector<std::vector<letter_type>> state_atoms;
  uint32_t                              initial = 0;
  // delta[state][letter]: letter is a generator index (base) or a cube id
  // (augmented).
  std::vector<std::vector<uint32_t>> delta;
  // lambda[state][letter]: a word over the generators (base) or over the
  // cube ids, of length at most 1 (augmented).
  std::vector<std::vector<std::vector<uint32_t>>> lambda;

  size_t state_count() const noexcept { return state_atoms.size(); }
  size_t input_alphabet_size() const noexcept {
    return kind == MachineKind::base ? generators.size() : state_atoms.size();
  }
  size_t arrow_count() const noexcept {
    return state_count() * input_alphabet_size();
  }

  friend bool operator==(Transducer const& a, Transducer const& b) = default;
};

struct RunResult {
  uint32_t              state;
  std::vector<uint32_t> output;
  size_t                steps;  // letters consumed
};

struct NormalizeStats {
  size_t              runs  = 0;
  size_t              steps = 0;
  std::vector<size_t> run_lengths;  // input length of each run
};

// Builds the base machine. Every transition is checked for coherence at
// build time: a x and u b must be the same element.
Transducer synthesize(Monoid const& m, HypercubeTable const& table);

// Builds the machine over the full hypercube alphabet (including the
// trivial cube, whose column is the identity on states).
Transducer synthesize_augmented(Monoid const& m, HypercubeTable const& table);

RunResult run(Transducer const& t, std::vector<uint32_t> const& input,
              uint32_t state);

// Iterated runs from the initial state; the final state of each run is the
// next least significant factor of the normal form.
NormalWord normalize_fast(Transducer const& t, Word const& input,
                          NormalizeStats* stats = nullptr);

// States not reachable from the initial state (none for machines built by
// synthesize, but tolerated in deserialized input).
std::vector<uint32_t> unreachable_states(Transducer const& t);

std::string serialize(Transducer const& t);
Transducer  deserialize(std::string const& text);
Transducer  read_transducer_file(std::string const& path);
bool        looks_like_transducer_file(std::string const& text);

std::string export_dot(Transducer const& t);

}  // namespace divmon

#endif  // DIVMON_TRANSDUCER_HPP_
