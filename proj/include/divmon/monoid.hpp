// The brute-force oracle for the presented monoid: congruence classes by
// breadth-first rewriting closure, canonical representatives, divisibility,
// quotients, right lcms and left gcds. Every faster construction in this
// library is validated against the operations defined here.

#ifndef DIVMON_MONOID_HPP_
#define DIVMON_MONOID_HPP_

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "presentation.hpp"
#include "types.hpp"

namespace divmon {

// An element of the presented monoid, identified by the lexicographically
// minimal word of its congruence class (under the declaration order of the
// generators). Two elements are equal iff their canonical words are equal;
// since all relations preserve length, the monoid is graded and length() is
// an invariant of the class.
class Element {
 public:
  Element() = default;  // the identity

  Word const& canonical() const noexcept { return word_; }
  size_t      length() const noexcept { return word_.size(); }
  bool        is_identity() const noexcept { return word_.empty(); }

  friend bool operator==(Element const& a, Element const& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(Element const& a, Element const& b) {
    return !(a == b);
  }
  // Deterministic order: by length, then lexicographic.
  friend bool operator<(Element const& a, Element const& b) {
    return a.word_.size() != b.word_.size() ? a.word_.size() < b.word_.size()
                                            : a.word_ < b.word_;
  }

 private:
  friend class Monoid;
  explicit Element(Word w) : word_(std::move(w)) {}
  Word word_;
};

struct ElementHash {
  size_t operator()(Element const& a) const noexcept {
    return WordHash()(a.canonical());
  }
};

// Caps making the exponential oracle fail loudly instead of silently.
struct OracleLimits {
  size_t max_class_size  = 1'000'000;
  size_t max_word_length = 16;
};

class Monoid {
 public:
  explicit Monoid(Presentation p, OracleLimits limits = {});

  Presentation const& presentation() const noexcept { return pres_; }
  OracleLimits const& limits() const noexcept { return limits_; }

  // The full congruence class of w, sorted lexicographically. Every member
  // has length |w|. Throws OracleLimitError past the configured caps.
  std::vector<Word> congruence_class(Word const& w) const;

  Element element_of(Word const& w) const;
  Element identity() const { return Element(); }
  Element generator(letter_type x) const;
  Element product(Element const& a, Element const& b) const;
  Element product(Element const& a, letter_type x) const;

  bool equal(Word const& u, Word const& v) const;

  // Left divisibility: b <= a iff a = b d for some d.
  bool is_left_divisor(Element const& b, Element const& a) const;
  bool is_right_divisor(Element const& b, Element const& a) const;

  // The unique d with b d = a; throws DomainError if b does not left-divide
  // a, InvalidMonoidError if the quotient is not unique (non-cancellative).
  Element left_quotient(Element const& a, Element const& b) const;
  // The unique e with e b = a.
  Element right_quotient(Element const& a, Element const& b) const;

  // All left divisors of a, sorted by (length, lex); includes 1 and a.
  std::vector<Element> left_divisors(Element const& a) const;
  std::vector<Element> right_divisors(Element const& a) const;

  // Irreducible (length-1) left divisors: the generators occurring as the
  // first letter of some class member; sorted. Right version symmetric.
  std::vector<letter_type> irreducible_left_divisors(Element const& a) const;
  std::vector<letter_type> irreducible_right_divisors(Element const& a) const;

  // Least common right multiple of a non-empty set, searching lengths upward
  // from max |s|. Returns nullopt when no common right multiple of length
  // <= max_length exists; throws InvalidMonoidError when two incomparable
  // minimal common multiples are found. The one-argument overload caps the
  // search at the sum of the lengths of S.
  std::optional<Element> right_lcm(std::vector<Element> const& S) const;
  std::optional<Element> right_lcm(std::vector<Element> const& S,
                                   size_t                      max_length) const;

  // Maximum-length common left divisor; unique in a divisibility monoid, and
  // uniqueness is asserted (InvalidMonoidError otherwise).
  Element left_gcd(Element const& a, Element const& b) const;

  // Every element of length <= max_length, sorted.
  std::vector<Element> elements_up_to(size_t max_length) const;

 private:
  using ClassPtr = std::shared_ptr<std::vector<Word> const>;

  // Memoized classes, shared between copies of the monoid and guarded by a
  // mutex so that const operations stay safe to call concurrently.
  struct Cache {
    std::mutex                                   mutex;
    std::unordered_map<Word, ClassPtr, WordHash> classes;
    std::unordered_map<Word, Word, WordHash>     canonical;
  };

  ClassPtr class_of(Word const& w) const;
  void     check_word(Word const& w) const;

  Presentation           pres_;
  OracleLimits           limits_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace divmon

#endif  // DIVMON_MONOID_HPP_
