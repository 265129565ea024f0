// Finite monoid presentations with homogeneous degree-2 relations, and the
// text format they are read from.

#ifndef DIVMON_PRESENTATION_HPP_
#define DIVMON_PRESENTATION_HPP_

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace divmon {

// A relation is an unordered pair of length-2 words, stored with the
// lexicographically smaller side first.
using Relation = std::pair<std::array<letter_type, 2>, std::array<letter_type, 2>>;

class Presentation {
 public:
  // Generator names must be distinct and match [A-Za-z][A-Za-z0-9_]*.
  // Relations are normalized on construction: sides ordered, duplicates and
  // trivial pairs dropped. Throws DomainError on invalid input.
  Presentation(std::vector<std::string> generators,
               std::vector<Relation>    relations);

  size_t alphabet_size() const noexcept { return generators_.size(); }

  std::string const& name_of(letter_type x) const { return generators_.at(x); }

  std::vector<std::string> const& generators() const noexcept {
    return generators_;
  }

  // Index of a generator name, or throws DomainError.
  letter_type letter_of(std::string const& name) const;
  bool        has_generator(std::string const& name) const noexcept;

  std::vector<Relation> const& relations() const noexcept { return relations_; }

  std::string word_to_string(Word const& w) const;

  // Inverse of word_to_string: whitespace-separated generator names. A single
  // token that is not itself a generator name is split per character when
  // every character is a 1-letter generator. "1" and "" denote the empty word.
  Word parse_word(std::string const& text) const;

 private:
  std::vector<std::string> generators_;
  std::vector<Relation>    relations_;
};

// Reads the presentation file format:
//
//   # comment
//   generators: x y z
//   rel: x y = y z
//
// Lines are independent; '#' starts a comment; blank lines are ignored; the
// generators line must precede every rel line. Throws ParseError with a
// 1-based line number on malformed input.
Presentation parse_presentation(std::string const& text);
Presentation read_presentation_file(std::string const& path);

}  // namespace divmon

#endif  // DIVMON_PRESENTATION_HPP_
