#include "divmon/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include <fmt/format.h>

#include "divmon/automatic.hpp"
#include "divmon/normal_form.hpp"

namespace divmon {

namespace {

std::vector<Word> words_up_to(size_t alphabet, size_t max_len) {
  std::vector<Word> out{Word{}};
  size_t            first = 0;
  for (size_t len = 1; len <= max_len; ++len) {
    auto const last = out.size();
    for (size_t i = first; i < last; ++i) {
      for (letter_type x = 0; x < alphabet; ++x) {
        Word w = out[i];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    }
    first = last;
  }
  return out;
}

}  // namespace

SuiteResult verify_h_map_composition(Monoid const& m,
                                     HypercubeTable const& table,
                                     size_t max_len) {
  SuiteResult res{"h-map-composition", true, 0, ""};
  auto const  elements = m.elements_up_to(max_len);
  std::map<Element, cube_id> h_of;
  for (auto const& e : elements) {
    h_of.emplace(e, max_hypercube(m, table, e).id);
  }
  for (auto const& a : elements) {
    for (auto const& b : elements) {
      if (a.length() + b.length() > max_len) {
        continue;
      }
      ++res.checked;
      auto const lhs = h_of.at(m.product(a, b));
      auto const rhs = h_of.at(
          m.product(table[h_of.at(a)].element, b));
      if (lhs != rhs) {
        res.passed = false;
        if (res.detail.empty()) {
          res.detail = fmt::format(
              "h(a b) != h(h(a) b) for a={} b={}",
              m.presentation().word_to_string(a.canonical()),
              m.presentation().word_to_string(b.canonical()));
        }
      }
    }
  }
  return res;
}

SuiteResult verify_local_normality(Monoid const& m,
                                   HypercubeTable const& table,
                                   size_t max_len) {
  SuiteResult res{"local-normality", true, 0, ""};
  std::map<Element, NormalWord> oracle;
  auto normal_form = [&](Element const& e) -> NormalWord const& {
    auto it = oracle.find(e);
    if (it == oracle.end()) {
      it = oracle.emplace(e, normalize_oracle(m, table, e)).first;
    }
    return it->second;
  };

  // Depth-first enumeration of non-empty cube sequences of total length
  // <= max_len.
  std::vector<cube_id> seq;
  size_t               used = 0;
  auto check = [&]() {
    ++res.checked;
    auto const prod     = product_of(m, table, seq);
    bool const pairwise = is_normal_word(m, table, seq);
    bool const exact    = normal_form(prod).factors == seq;
    if (pairwise != exact) {
      res.passed = false;
      if (res.detail.empty()) {
        res.detail = fmt::format(
            "pairwise={} exact={} for a {}-factor sequence over product {}",
            pairwise, exact, seq.size(),
            m.presentation().word_to_string(prod.canonical()));
      }
    }
  };
  std::function<void()> rec = [&]() {
    for (cube_id c = 1; c < table.size(); ++c) {
      auto const len = table[c].length();
      if (used + len > max_len) {
        continue;
      }
      seq.push_back(c);
      used += len;
      check();
      rec();
      used -= len;
      seq.pop_back();
    }
  };
  rec();
  return res;
}

SuiteResult verify_two_factor_closure(Monoid const& m,
                                      HypercubeTable const& table) {
  SuiteResult res{"two-factor-closure", true, 0, ""};
  for (auto const& a : table.cubes()) {
    for (auto const& b : table.cubes()) {
      ++res.checked;
      auto const nf =
          normalize_oracle(m, table, m.product(a.element, b.element));
      if (nf.factors.size() > 2) {
        res.passed = false;
        if (res.detail.empty()) {
          res.detail = fmt::format("product of cubes {} and {} has {} factors",
                                   a.id, b.id, nf.factors.size());
        }
      }
    }
  }
  return res;
}

SuiteResult verify_incremental_updates(Monoid const& m,
                                       HypercubeTable const& table,
                                       size_t max_len) {
  SuiteResult res{"incremental-updates", true, 0, ""};
  auto const  elements = m.elements_up_to(max_len);
  for (auto const& a : elements) {
    auto const nf = normalize_oracle(m, table, a);
    for (auto const& c : table.cubes()) {
      if (a.length() + c.length() > max_len) {
        continue;
      }
      ++res.checked;
      auto const left_got  = left_mult_update(m, table, c.id, nf);
      auto const left_want = normalize_oracle(m, table,
                                              m.product(c.element, a));
      auto const right_got  = right_mult_update(m, table, nf, c.id);
      auto const right_want = normalize_oracle(m, table,
                                               m.product(a, c.element));
      if (left_got != left_want || right_got != right_want) {
        res.passed = false;
        if (res.detail.empty()) {
          res.detail = fmt::format(
              "update mismatch for a={} cube={}",
              m.presentation().word_to_string(a.canonical()), c.id);
        }
      }
    }
  }
  return res;
}

SuiteResult verify_fellow_traveller(Monoid const& m,
                                    HypercubeTable const& table,
                                    size_t max_len) {
  SuiteResult res{"fellow-traveller", true, 0, ""};
  auto const  rep = fellow_traveller_report(m, table, max_len);
  res.checked     = rep.pairs_checked;
  res.passed      = rep.ok() && rep.max_left < 2 && rep.max_right < 2;
  if (!rep.violations.empty()) {
    res.detail = rep.violations.front();
  }
  return res;
}

SuiteResult verify_fast_normalization(Monoid const& m,
                                      HypercubeTable const& table,
                                      Transducer const& machine,
                                      size_t max_len) {
  SuiteResult res{"fast-normalization", true, 0, ""};
  std::map<Element, NormalWord> oracle;
  for (auto const& w : words_up_to(m.presentation().alphabet_size(),
                                   max_len)) {
    ++res.checked;
    auto const e  = m.element_of(w);
    auto       it = oracle.find(e);
    if (it == oracle.end()) {
      it = oracle.emplace(e, normalize_oracle(m, table, e)).first;
    }
    if (normalize_fast(machine, w) != it->second) {
      res.passed = false;
      if (res.detail.empty()) {
        res.detail = fmt::format("normalize_fast mismatch on {}",
                                 m.presentation().word_to_string(w));
      }
    }
  }
  return res;
}

SuiteResult verify_word_problem(Monoid const& m, size_t max_len) {
  SuiteResult res{"word-problem", true, 0, ""};
  auto const  words = words_up_to(m.presentation().alphabet_size(), max_len);
  // Group by length so only comparable pairs are enumerated.
  std::map<size_t, std::vector<Word const*>> by_len;
  for (auto const& w : words) {
    by_len[w.size()].push_back(&w);
  }
  for (auto const& [len, group] : by_len) {
    (void) len;
    std::vector<Element> els;
    els.reserve(group.size());
    std::map<Word, std::unordered_set<Word, WordHash>> class_sets;
    for (auto const* u : group) {
      els.push_back(m.element_of(*u));
      if (class_sets.count(els.back().canonical()) == 0) {
        auto cls = m.congruence_class(*u);
        class_sets.emplace(
            els.back().canonical(),
            std::unordered_set<Word, WordHash>(cls.begin(), cls.end()));
      }
    }
    for (size_t i = 0; i < group.size(); ++i) {
      auto const& members = class_sets.at(els[i].canonical());
      for (size_t j = 0; j < group.size(); ++j) {
        ++res.checked;
        bool const eq     = els[i] == els[j];
        bool const member = members.count(*group[j]) > 0;
        if (eq != member) {
          res.passed = false;
          if (res.detail.empty()) {
            res.detail = fmt::format(
                "equal={} membership={} for u={} v={}", eq, member,
                m.presentation().word_to_string(*group[i]),
                m.presentation().word_to_string(*group[j]));
          }
        }
      }
    }
  }
  return res;
}

std::vector<SuiteResult> run_property_suites(Monoid const& m,
                                             HypercubeTable const& table,
                                             Transducer const& machine,
                                             size_t max_len) {
  return {
      verify_h_map_composition(m, table, max_len),
      verify_local_normality(m, table, max_len),
      verify_two_factor_closure(m, table),
      verify_incremental_updates(m, table, max_len),
      verify_fellow_traveller(m, table, max_len),
      verify_fast_normalization(m, table, machine, max_len),
      verify_word_problem(m, max_len),
  };
}

}  // namespace divmon
