#include "divmon/automatic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <fmt/format.h>

namespace divmon {

PaddedPair PaddedPair::convolve_right(std::span<cube_id const> u,
                                      std::span<cube_id const> v) {
  std::vector<PairLetter> letters;
  auto const              n = std::max(u.size(), v.size());
  for (size_t i = 0; i < n; ++i) {
    letters.push_back(
        {i < u.size() ? static_cast<int32_t>(u[i]) : PairLetter::pad,
         i < v.size() ? static_cast<int32_t>(v[i]) : PairLetter::pad});
  }
  return PaddedPair(Padding::right, std::move(letters));
}

PaddedPair PaddedPair::convolve_left(std::span<cube_id const> u,
                                     std::span<cube_id const> v) {
  std::vector<PairLetter> letters;
  auto const              n = std::max(u.size(), v.size());
  for (size_t i = 0; i < n; ++i) {
    // Align the ends: the i-th column holds the (i - pad)-th letter.
    auto const iu = i + u.size() >= n ? static_cast<int32_t>(i + u.size() - n)
                                      : PairLetter::pad;
    auto const iv = i + v.size() >= n ? static_cast<int32_t>(i + v.size() - n)
                                      : PairLetter::pad;
    letters.push_back({iu == PairLetter::pad
                           ? PairLetter::pad
                           : static_cast<int32_t>(u[static_cast<size_t>(iu)]),
                       iv == PairLetter::pad
                           ? PairLetter::pad
                           : static_cast<int32_t>(v[static_cast<size_t>(iv)])});
  }
  return PaddedPair(Padding::left, std::move(letters));
}

NormalLanguageAutomaton::NormalLanguageAutomaton(Monoid const& m,
                                                 HypercubeTable const& table) {
  auto const n = table.size();
  allowed_.assign(n, std::vector<bool>(n, false));
  for (cube_id a = 1; a < n; ++a) {
    for (cube_id b = 1; b < n; ++b) {
      allowed_[a][b] = is_normal_pair(m, table, a, b);
    }
  }
}

bool NormalLanguageAutomaton::accepts(std::span<cube_id const> factors) const {
  for (auto f : factors) {
    if (f == HypercubeTable::trivial || f >= allowed_.size()) {
      return false;
    }
  }
  for (size_t i = 0; i + 1 < factors.size(); ++i) {
    if (!allowed_[factors[i]][factors[i + 1]]) {
      return false;
    }
  }
  return true;
}

size_t PairAutomaton::letter_index(PairLetter l) const {
  auto const base = cube_count + 1;
  auto const iu   = static_cast<size_t>(l.u + 1);
  auto const iv   = static_cast<size_t>(l.v + 1);
  if (iu >= base || iv >= base || (l.u == PairLetter::pad && l.v == PairLetter::pad)) {
    throw DomainError("pair letter out of range");
  }
  return iu * base + iv;
}

uint32_t PairAutomaton::step(uint32_t state, PairLetter l) const {
  return delta.at(state).at(letter_index(l));
}

bool PairAutomaton::accepts(PaddedPair const& input) const {
  if (input.direction() != padding) {
    throw DomainError("convolution padding does not match the machine");
  }
  uint32_t s = initial;
  for (auto l : input.letters()) {
    s = step(s, l);
  }
  return accepting.at(s);
}

namespace {

// Every pair letter in a fixed deterministic order, $ first.
std::vector<PairLetter> all_letters(size_t cube_count) {
  std::vector<PairLetter> out;
  for (int32_t a = -1; a < static_cast<int32_t>(cube_count); ++a) {
    for (int32_t b = -1; b < static_cast<int32_t>(cube_count); ++b) {
      if (a == PairLetter::pad && b == PairLetter::pad) {
        continue;
      }
      out.push_back({a, b});
    }
  }
  return out;
}

Element letter_element(HypercubeTable const& table, int32_t l) {
  return l == PairLetter::pad ? Element()
                              : table[static_cast<cube_id>(l)].element;
}

// d' with b d' = a, or nullopt when b does not left-divide a.
std::optional<Element> try_left_quotient(Monoid const& m, Element const& a,
                                         Element const& b) {
  if (!m.is_left_divisor(b, a)) {
    return std::nullopt;
  }
  return m.left_quotient(a, b);
}

}  // namespace

PairAutomaton right_multiplier_automaton(Monoid const& m,
                                         HypercubeTable const& table,
                                         cube_id z) {
  auto const    n = table.size();
  PairAutomaton a;
  a.padding    = Padding::left;
  a.cube_count = n;
  a.initial    = HypercubeTable::trivial;
  a.dead       = static_cast<uint32_t>(n);
  for (auto const& c : table.cubes()) {
    a.state_labels.push_back(
        fmt::format("d={}", m.presentation().word_to_string(
                                c.element.canonical())));
  }
  a.state_labels.push_back("dead");
  a.accepting.assign(n + 1, false);
  a.accepting[z] = true;

  auto const letters = all_letters(n);
  auto const base    = n + 1;
  a.delta.assign(n + 1, std::vector<uint32_t>(base * base, a.dead));
  for (cube_id d = 0; d < n; ++d) {
    for (auto l : letters) {
      // difference update: h d' = d h', reading $ as the identity
      auto const h      = letter_element(table, l.u);
      auto const target = m.product(table[d].element, letter_element(table, l.v));
      auto const quot   = try_left_quotient(m, target, h);
      auto       next   = a.dead;
      if (quot.has_value()) {
        if (auto id = table.by_element(*quot); id.has_value()) {
          next = *id;
        }
      }
      a.delta[d][a.letter_index(l)] = next;
    }
  }
  return a;
}

namespace {

// Nondeterministic difference descriptor: sign + says y u = v d, sign -
// says y u d = v, for the prefixes u, v read so far ($ as identity).
struct Descriptor {
  bool    positive;
  Element d;

  friend bool operator<(Descriptor const& a, Descriptor const& b) {
    if (a.positive != b.positive) {
      return a.positive > b.positive;  // + before -
    }
    return a.d < b.d;
  }
  friend bool operator==(Descriptor const& a, Descriptor const& b) {
    return a.positive == b.positive && a.d == b.d;
  }
};

Descriptor canonical(Descriptor d) {
  if (d.d.is_identity()) {
    d.positive = true;  // the two signs coincide at difference 1
  }
  return d;
}

std::string label_of(std::set<Descriptor> const& states,
                     Presentation const&         p) {
  if (states.empty()) {
    return "dead";
  }
  std::string out;
  for (auto const& s : states) {
    if (!out.empty()) {
      out += ' ';
    }
    out += fmt::format("{}:{}", s.positive ? '+' : '-',
                       p.word_to_string(s.d.canonical()));
  }
  return out;
}

}  // namespace

PairAutomaton relation_automaton(Monoid const& m, HypercubeTable const& table,
                                 MultSide side, cube_id multiplier,
                                 Padding padding) {
  auto const max_diff = 2 * table.max_cube_length();
  auto const letters  = all_letters(table.size());

  auto successors = [&](Descriptor const& s, PairLetter l) {
    std::set<Descriptor> out;
    auto const h  = letter_element(table, l.u);
    auto const h2 = letter_element(table, l.v);
    if (s.positive) {
      // y u = v d: new positive d' with h' d' = d h; new negative d' with
      // d h d' = h'.
      if (auto d2 = try_left_quotient(m, m.product(s.d, h), h2)) {
        out.insert(canonical({true, *d2}));
      }
      if (auto d2 = try_left_quotient(m, h2, m.product(s.d, h))) {
        out.insert(canonical({false, *d2}));
      }
    } else {
      // y u d = v: new positive d' with h = d h' d'; new negative d' with
      // h d' = d h'.
      if (auto d2 = try_left_quotient(m, h, m.product(s.d, h2))) {
        out.insert(canonical({true, *d2}));
      }
      if (auto d2 = try_left_quotient(m, m.product(s.d, h2), h)) {
        out.insert(canonical({false, *d2}));
      }
    }
    std::set<Descriptor> bounded;
    for (auto const& cand : out) {
      if (cand.d.length() <= max_diff) {
        bounded.insert(cand);
      }
    }
    return bounded;
  };

  Descriptor const start =
      side == MultSide::left
          ? canonical({true, table[multiplier].element})
          : canonical({true, Element()});
  Descriptor const accept_state =
      side == MultSide::left
          ? canonical({true, Element()})
          : canonical({false, table[multiplier].element});

  // Subset construction over reachable descriptor sets.
  std::map<std::set<Descriptor>, uint32_t> ids;
  std::vector<std::set<Descriptor>>        subsets;
  auto intern = [&](std::set<Descriptor> const& s) {
    auto it = ids.find(s);
    if (it != ids.end()) {
      return it->second;
    }
    auto id = static_cast<uint32_t>(subsets.size());
    ids.emplace(s, id);
    subsets.push_back(s);
    return id;
  };

  auto const            n    = table.size();
  auto const            base = n + 1;
  PairAutomaton         a;
  a.padding    = padding;
  a.cube_count = n;

  auto const dead_id  = intern({});
  auto const start_id = intern({start});
  std::deque<uint32_t> queue{dead_id, start_id};
  std::set<uint32_t>   visited{dead_id, start_id};
  std::vector<std::vector<uint32_t>> delta;
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (delta.size() <= cur) {
      delta.resize(subsets.size());
    }
    delta[cur].assign(base * base, dead_id);
    for (auto l : letters) {
      std::set<Descriptor> next;
      for (auto const& s : subsets[cur]) {
        auto succ = successors(s, l);
        next.insert(succ.begin(), succ.end());
      }
      auto next_id = intern(next);
      if (delta.size() <= next_id) {
        delta.resize(subsets.size());
      }
      delta[cur][a.letter_index(l)] = next_id;
      if (visited.insert(next_id).second) {
        queue.push_back(next_id);
      }
    }
  }
  delta.resize(subsets.size());

  a.initial = start_id;
  a.dead    = dead_id;
  a.delta   = std::move(delta);
  for (auto const& s : subsets) {
    a.state_labels.push_back(label_of(s, m.presentation()));
    a.accepting.push_back(s.count(accept_state) > 0);
  }
  return a;
}

PairAutomaton left_multiplier_automaton(Monoid const& m,
                                        HypercubeTable const& table,
                                        cube_id y) {
  return relation_automaton(m, table, MultSide::left, y, Padding::right);
}

std::string serialize(PairAutomaton const& a) {
  std::string out = "divmon-pair-automaton v1\n";
  out += "pair-alphabet:";
  for (size_t i = 0; i < a.cube_count; ++i) {
    out += fmt::format(" {}", i);
  }
  out += " $\n";
  out += fmt::format("padding: {}\n",
                     a.padding == Padding::left ? "left" : "right");
  out += fmt::format("deterministic: {}\n", a.deterministic);
  out += fmt::format("states: {}\n", a.state_count());
  for (uint32_t s = 0; s < a.state_count(); ++s) {
    out += fmt::format("state {} label={}\n", s, a.state_labels[s]);
  }
  out += fmt::format("initial: {}\n", a.initial);
  out += "accepting:";
  for (uint32_t s = 0; s < a.state_count(); ++s) {
    if (a.accepting[s]) {
      out += fmt::format(" {}", s);
    }
  }
  out += '\n';
  auto letter_text = [](int32_t l) {
    return l == PairLetter::pad ? std::string("$") : fmt::format("{}", l);
  };
  for (uint32_t s = 0; s < a.state_count(); ++s) {
    for (auto l : all_letters(a.cube_count)) {
      out += fmt::format("{} {},{} -> {}\n", s, letter_text(l.u),
                         letter_text(l.v),
                         a.delta[s][a.letter_index(l)]);
    }
  }
  return out;
}

std::string export_dot(PairAutomaton const& a) {
  std::string out = "digraph pair_automaton {\n  rankdir=LR;\n";
  out += fmt::format("  init [shape=point];\n  init -> q{};\n", a.initial);
  for (uint32_t s = 0; s < a.state_count(); ++s) {
    out += fmt::format("  q{} [label=\"{}\" shape={}];\n", s,
                       a.state_labels[s],
                       a.accepting[s] ? "doublecircle" : "circle");
  }
  auto letter_text = [](int32_t l) {
    return l == PairLetter::pad ? std::string("$") : fmt::format("{}", l);
  };
  for (uint32_t s = 0; s < a.state_count(); ++s) {
    for (auto l : all_letters(a.cube_count)) {
      auto to = a.delta[s][a.letter_index(l)];
      if (to == a.dead && s != a.dead) {
        continue;  // arrows into the dead sink are left implicit
      }
      if (s == a.dead) {
        continue;
      }
      out += fmt::format("  q{} -> q{} [label=\"{},{}\"];\n", s, to,
                         letter_text(l.u), letter_text(l.v));
    }
  }
  out += "}\n";
  return out;
}

SweepResult multiplier_oracle_sweep(Monoid const& m,
                                    HypercubeTable const& table,
                                    PairAutomaton const& machine,
                                    MultSide side, cube_id multiplier,
                                    size_t max_len) {
  SweepResult res;
  auto const  elements = m.elements_up_to(max_len);
  auto const& mult     = table[multiplier].element;
  std::vector<NormalWord> forms;
  forms.reserve(elements.size());
  for (auto const& e : elements) {
    forms.push_back(normalize_oracle(m, table, e));
  }
  for (size_t i = 0; i < elements.size(); ++i) {
    for (size_t j = 0; j < elements.size(); ++j) {
      bool const expected =
          side == MultSide::right
              ? m.product(elements[i], mult) == elements[j]
              : m.product(mult, elements[i]) == elements[j];
      auto const conv =
          machine.padding == Padding::left
              ? PaddedPair::convolve_left(forms[i].factors, forms[j].factors)
              : PaddedPair::convolve_right(forms[i].factors,
                                           forms[j].factors);
      bool const got = machine.accepts(conv);
      ++res.pairs;
      if (got != expected) {
        ++res.mismatches;
        if (res.first_mismatch.empty()) {
          res.first_mismatch = fmt::format(
              "u={} v={} expected={} accepted={}",
              m.presentation().word_to_string(elements[i].canonical()),
              m.presentation().word_to_string(elements[j].canonical()),
              expected, got);
        }
      }
    }
  }
  return res;
}

FellowTravellerReport fellow_traveller_report(
    Monoid const& m, HypercubeTable const& table, size_t max_len,
    std::function<NormalWord(Element const&)> normalizer) {
  if (!normalizer) {
    normalizer = [&m, &table](Element const& e) {
      return normalize_oracle(m, table, e);
    };
  }
  FellowTravellerReport rep;
  auto const            elements = m.elements_up_to(max_len);
  auto suffix_product = [&](NormalWord const& w, size_t t) {
    auto const k = std::min(t, w.factors.size());
    return product_of(
        m, table,
        std::span<cube_id const>(w.factors.data() + (w.factors.size() - k),
                                 k));
  };
  auto prefix_product = [&](NormalWord const& w, size_t t) {
    auto const k = std::min(t, w.factors.size());
    return product_of(m, table,
                      std::span<cube_id const>(w.factors.data(), k));
  };
  for (auto const& a : elements) {
    auto const u = normalizer(a);
    for (auto const& c : table.cubes()) {
      if (c.is_trivial()) {
        continue;
      }
      ++rep.pairs_checked;
      // left multiplication: distances of suffix products
      auto const v = normalizer(m.product(c.element, a));
      auto const tmax_l = std::max(u.factors.size(), v.factors.size());
      for (size_t t = 1; t <= tmax_l; ++t) {
        auto const d = bounded_distance_left(m, table, suffix_product(u, t),
                                             suffix_product(v, t));
        rep.max_left = std::max(rep.max_left, d);
        if (d >= 2) {
          rep.violations.push_back(fmt::format(
              "left: a={} cube={} t={}",
              m.presentation().word_to_string(a.canonical()),
              m.presentation().word_to_string(c.element.canonical()), t));
        }
      }
      // right multiplication: distances of prefix products
      auto const w = normalizer(m.product(a, c.element));
      auto const tmax_r = std::max(u.factors.size(), w.factors.size());
      for (size_t t = 1; t <= tmax_r; ++t) {
        auto const d = bounded_distance_right(m, table, prefix_product(u, t),
                                              prefix_product(w, t));
        rep.max_right = std::max(rep.max_right, d);
        if (d >= 2) {
          rep.violations.push_back(fmt::format(
              "right: a={} cube={} t={}",
              m.presentation().word_to_string(a.canonical()),
              m.presentation().word_to_string(c.element.canonical()), t));
        }
      }
    }
  }
  return rep;
}

}  // namespace divmon
