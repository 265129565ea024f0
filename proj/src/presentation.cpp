#include "divmon/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace divmon {

namespace {

bool valid_symbol(std::string const& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::vector<std::string> tokenize(std::string const& line) {
  std::vector<std::string> out;
  std::istringstream       ss(line);
  std::string              tok;
  while (ss >> tok) {
    out.push_back(tok);
  }
  return out;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<Relation>    relations)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (auto const& g : generators_) {
    if (!valid_symbol(g)) {
      throw DomainError(fmt::format("invalid generator name \"{}\"", g));
    }
    if (!seen.insert(g).second) {
      throw DomainError(fmt::format("duplicate generator \"{}\"", g));
    }
  }
  auto const n = generators_.size();
  std::set<Relation> normalized;
  for (auto rel : relations) {
    for (auto x : {rel.first[0], rel.first[1], rel.second[0], rel.second[1]}) {
      if (x >= n) {
        throw DomainError(fmt::format("relation letter {} out of range", x));
      }
    }
    if (rel.second < rel.first) {
      std::swap(rel.first, rel.second);
    }
    if (rel.first == rel.second) {
      continue;  // trivial pair
    }
    normalized.insert(rel);
  }
  relations_.assign(normalized.begin(), normalized.end());
}

letter_type Presentation::letter_of(std::string const& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) {
    throw DomainError(fmt::format("unknown generator \"{}\"", name));
  }
  return static_cast<letter_type>(it - generators_.begin());
}

bool Presentation::has_generator(std::string const& name) const noexcept {
  return std::find(generators_.begin(), generators_.end(), name)
         != generators_.end();
}

std::string Presentation::word_to_string(Word const& w) const {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += name_of(w[i]);
  }
  return out;
}

Word Presentation::parse_word(std::string const& text) const {
  auto toks = tokenize(text);
  if (toks.empty() || (toks.size() == 1 && toks[0] == "1")) {
    return {};
  }
  Word w;
  if (toks.size() == 1 && !has_generator(toks[0])) {
    // Contiguous single-character spelling, e.g. "yzyxxz".
    for (char c : toks[0]) {
      w.push_back(letter_of(std::string(1, c)));
    }
    return w;
  }
  for (auto const& t : toks) {
    w.push_back(letter_of(t));
  }
  return w;
}

Presentation parse_presentation(std::string const& text) {
  std::istringstream in(text);
  std::string        line;
  size_t             lineno = 0;

  std::vector<std::string> gens;
  bool                     have_gens = false;
  std::vector<std::pair<std::array<std::string, 2>, std::array<std::string, 2>>>
      raw_rels;
  std::vector<size_t> rel_lines;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) {
      line.erase(pos);
    }
    auto toks = tokenize(line);
    if (toks.empty()) {
      continue;
    }
    if (toks[0] == "generators:") {
      if (have_gens) {
        throw ParseError("duplicate generators line", lineno);
      }
      if (toks.size() == 1) {
        throw ParseError("empty generator list", lineno);
      }
      gens.assign(toks.begin() + 1, toks.end());
      for (auto const& g : gens) {
        if (!valid_symbol(g)) {
          throw ParseError(fmt::format("invalid generator name \"{}\"", g),
                           lineno);
        }
      }
      std::set<std::string> dedup(gens.begin(), gens.end());
      if (dedup.size() != gens.size()) {
        throw ParseError("duplicate generator", lineno);
      }
      have_gens = true;
    } else if (toks[0] == "rel:") {
      if (!have_gens) {
        throw ParseError("rel line before generators line", lineno);
      }
      auto eq = std::find(toks.begin(), toks.end(), "=");
      if (eq == toks.end()) {
        throw ParseError("rel line without '='", lineno);
      }
      auto lhs_len = static_cast<size_t>(eq - toks.begin()) - 1;
      auto rhs_len = static_cast<size_t>(toks.end() - eq) - 1;
      if (lhs_len != 2 || rhs_len != 2) {
        throw ParseError(
            fmt::format("relation sides must have length 2 (got {} and {})",
                        lhs_len, rhs_len),
            lineno);
      }
      raw_rels.push_back({{toks[1], toks[2]}, {toks[4], toks[5]}});
      rel_lines.push_back(lineno);
    } else {
      throw ParseError(fmt::format("unrecognized line \"{}\"", toks[0]),
                       lineno);
    }
  }
  if (!have_gens) {
    throw ParseError("missing generators line", lineno == 0 ? 1 : lineno);
  }

  auto index_of = [&gens](std::string const& name) {
    return std::find(gens.begin(), gens.end(), name) - gens.begin();
  };
  std::vector<Relation> rels;
  for (size_t i = 0; i < raw_rels.size(); ++i) {
    Relation r;
    for (int side = 0; side < 2; ++side) {
      auto const& names = side == 0 ? raw_rels[i].first : raw_rels[i].second;
      for (int j = 0; j < 2; ++j) {
        auto idx = index_of(names[j]);
        if (idx == static_cast<std::ptrdiff_t>(gens.size())) {
          throw ParseError(fmt::format("undeclared symbol \"{}\"", names[j]),
                           rel_lines[i]);
        }
        (side == 0 ? r.first : r.second)[j] = static_cast<letter_type>(idx);
      }
    }
    rels.push_back(r);
  }
  return Presentation(std::move(gens), std::move(rels));
}

Presentation read_presentation_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError(fmt::format("cannot open \"{}\"", path));
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

}  // namespace divmon
