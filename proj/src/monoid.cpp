#include "divmon/monoid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include <fmt/format.h>

namespace divmon {

Monoid::Monoid(Presentation p, OracleLimits limits)
    : pres_(std::move(p)), limits_(limits), cache_(std::make_shared<Cache>()) {}

void Monoid::check_word(Word const& w) const {
  if (w.size() > limits_.max_word_length) {
    throw OracleLimitError(
        fmt::format("word of length {} exceeds the oracle length cap {}",
                    w.size(), limits_.max_word_length));
  }
  for (auto x : w) {
    if (x >= pres_.alphabet_size()) {
      throw DomainError(fmt::format("letter {} out of range", x));
    }
  }
}

// Breadth-first closure under replacing a factor at adjacent positions that
// matches one side of a relation by the other side. Relations preserve
// length, so the closure is the whole congruence class.
Monoid::ClassPtr Monoid::class_of(Word const& w) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto                        it = cache_->classes.find(w);
    if (it != cache_->classes.end()) {
      return it->second;
    }
  }

  std::set<Word>   seen{w};
  std::deque<Word> queue{w};
  auto const&      rels = pres_.relations();
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      for (auto const& rel : rels) {
        auto const& lhs = rel.first;
        auto const& rhs = rel.second;
        std::array<letter_type, 2> const* repl = nullptr;
        if (cur[i] == lhs[0] && cur[i + 1] == lhs[1]) {
          repl = &rhs;
        } else if (cur[i] == rhs[0] && cur[i + 1] == rhs[1]) {
          repl = &lhs;
        }
        if (repl == nullptr) {
          continue;
        }
        Word next = cur;
        next[i]     = (*repl)[0];
        next[i + 1] = (*repl)[1];
        if (seen.insert(next).second) {
          if (seen.size() > limits_.max_class_size) {
            throw OracleLimitError(
                fmt::format("congruence class exceeds the size cap {}",
                            limits_.max_class_size));
          }
          queue.push_back(std::move(next));
        }
      }
    }
  }

  auto cls = std::make_shared<std::vector<Word> const>(seen.begin(),
                                                       seen.end());
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (auto const& member : *cls) {
      cache_->classes.emplace(member, cls);
      cache_->canonical.emplace(member, cls->front());
    }
  }
  return cls;
}

std::vector<Word> Monoid::congruence_class(Word const& w) const {
  check_word(w);
  return *class_of(w);
}

Element Monoid::element_of(Word const& w) const {
  check_word(w);
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto                        it = cache_->canonical.find(w);
    if (it != cache_->canonical.end()) {
      return Element(it->second);
    }
  }
  return Element(class_of(w)->front());
}

Element Monoid::generator(letter_type x) const {
  return element_of(Word{x});
}

Element Monoid::product(Element const& a, Element const& b) const {
  Word w = a.canonical();
  w.insert(w.end(), b.canonical().begin(), b.canonical().end());
  return element_of(w);
}

Element Monoid::product(Element const& a, letter_type x) const {
  Word w = a.canonical();
  w.push_back(x);
  return element_of(w);
}

bool Monoid::equal(Word const& u, Word const& v) const {
  if (u.size() != v.size()) {
    return false;
  }
  return element_of(u) == element_of(v);
}

bool Monoid::is_left_divisor(Element const& b, Element const& a) const {
  if (b.length() > a.length()) {
    return false;
  }
  if (b.length() == 0) {
    return true;
  }
  auto cls = class_of(a.canonical());
  for (auto const& w : *cls) {
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(b.length()));
    if (element_of(prefix) == b) {
      return true;
    }
  }
  return false;
}

bool Monoid::is_right_divisor(Element const& b, Element const& a) const {
  if (b.length() > a.length()) {
    return false;
  }
  if (b.length() == 0) {
    return true;
  }
  auto cls = class_of(a.canonical());
  for (auto const& w : *cls) {
    Word suffix(w.end() - static_cast<std::ptrdiff_t>(b.length()), w.end());
    if (element_of(suffix) == b) {
      return true;
    }
  }
  return false;
}

Element Monoid::left_quotient(Element const& a, Element const& b) const {
  if (b.length() > a.length()) {
    throw DomainError("left_quotient: divisor longer than dividend");
  }
  auto                             cls = class_of(a.canonical());
  std::set<Element>                quotients;
  auto const                       k = static_cast<std::ptrdiff_t>(b.length());
  for (auto const& w : *cls) {
    Word prefix(w.begin(), w.begin() + k);
    if (element_of(prefix) == b) {
      quotients.insert(element_of(Word(w.begin() + k, w.end())));
    }
  }
  if (quotients.empty()) {
    throw DomainError("left_quotient: not a left divisor");
  }
  if (quotients.size() > 1) {
    throw InvalidMonoidError(
        "left_quotient: quotient not unique (monoid is not left cancellative)");
  }
  return *quotients.begin();
}

Element Monoid::right_quotient(Element const& a, Element const& b) const {
  if (b.length() > a.length()) {
    throw DomainError("right_quotient: divisor longer than dividend");
  }
  auto              cls = class_of(a.canonical());
  std::set<Element> quotients;
  auto const        k = static_cast<std::ptrdiff_t>(b.length());
  for (auto const& w : *cls) {
    Word suffix(w.end() - k, w.end());
    if (element_of(suffix) == b) {
      quotients.insert(element_of(Word(w.begin(), w.end() - k)));
    }
  }
  if (quotients.empty()) {
    throw DomainError("right_quotient: not a right divisor");
  }
  if (quotients.size() > 1) {
    throw InvalidMonoidError(
        "right_quotient: quotient not unique (monoid is not right "
        "cancellative)");
  }
  return *quotients.begin();
}

std::vector<Element> Monoid::left_divisors(Element const& a) const {
  std::set<Element> out;
  auto              cls = class_of(a.canonical());
  for (auto const& w : *cls) {
    for (size_t t = 0; t <= w.size(); ++t) {
      out.insert(element_of(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t))));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Element> Monoid::right_divisors(Element const& a) const {
  std::set<Element> out;
  auto              cls = class_of(a.canonical());
  for (auto const& w : *cls) {
    for (size_t t = 0; t <= w.size(); ++t) {
      out.insert(element_of(Word(w.end() - static_cast<std::ptrdiff_t>(t), w.end())));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<letter_type> Monoid::irreducible_left_divisors(
    Element const& a) const {
  std::set<letter_type> out;
  auto                  cls = class_of(a.canonical());
  for (auto const& w : *cls) {
    if (!w.empty()) {
      out.insert(w.front());
    }
  }
  return {out.begin(), out.end()};
}

std::vector<letter_type> Monoid::irreducible_right_divisors(
    Element const& a) const {
  std::set<letter_type> out;
  auto                  cls = class_of(a.canonical());
  for (auto const& w : *cls) {
    if (!w.empty()) {
      out.insert(w.back());
    }
  }
  return {out.begin(), out.end()};
}

std::optional<Element> Monoid::right_lcm(std::vector<Element> const& S) const {
  size_t total = 0;
  for (auto const& s : S) {
    total += s.length();
  }
  return right_lcm(S, std::min(total, limits_.max_word_length));
}

std::optional<Element> Monoid::right_lcm(std::vector<Element> const& S,
                                         size_t max_length) const {
  if (S.empty()) {
    throw DomainError("right_lcm of an empty set");
  }
  size_t start = 0;
  for (auto const& s : S) {
    start = std::max(start, s.length());
  }
  auto const& base = S.front();
  auto const  k    = pres_.alphabet_size();
  for (size_t len = start; len <= max_length; ++len) {
    if (len < base.length()) {
      continue;
    }
    // Common right multiples of S at this length are among the right
    // multiples of the first element: base * d over all words d.
    std::set<Element> found;
    Word              d(len - base.length(), 0);
    bool              more = true;
    while (more) {
      Word w = base.canonical();
      w.insert(w.end(), d.begin(), d.end());
      Element cand = element_of(w);
      bool    ok   = true;
      for (auto const& s : S) {
        if (!is_left_divisor(s, cand)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        found.insert(cand);
      }
      more = false;
      for (size_t i = d.size(); i-- > 0;) {
        if (++d[i] < k) {
          more = true;
          break;
        }
        d[i] = 0;
      }
    }
    if (found.size() > 1) {
      throw InvalidMonoidError(fmt::format(
          "right_lcm: {} incomparable minimal common right multiples",
          found.size()));
    }
    if (found.size() == 1) {
      return *found.begin();
    }
  }
  return std::nullopt;
}

Element Monoid::left_gcd(Element const& a, Element const& b) const {
  auto da = left_divisors(a);
  auto db = left_divisors(b);
  std::vector<Element> common;
  std::set_intersection(da.begin(), da.end(), db.begin(), db.end(),
                        std::back_inserter(common));
  // common is sorted by (length, lex); the maximum-length ones are at the end
  auto const max_len = common.back().length();
  auto       first   = std::find_if(common.begin(), common.end(),
                                    [max_len](Element const& e) {
                                      return e.length() == max_len;
                                    });
  if (std::distance(first, common.end()) > 1) {
    throw InvalidMonoidError(
        "left_gcd: maximal common left divisor is not unique");
  }
  return common.back();
}

std::vector<Element> Monoid::elements_up_to(size_t max_length) const {
  std::set<Element> out{identity()};
  auto const        k = pres_.alphabet_size();
  std::vector<Word> level{Word{}};
  for (size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (auto const& w : level) {
      for (letter_type x = 0; x < k; ++x) {
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    }
    for (auto const& w : next) {
      out.insert(element_of(w));
    }
    level = std::move(next);
  }
  return {out.begin(), out.end()};
}

}  // namespace divmon
