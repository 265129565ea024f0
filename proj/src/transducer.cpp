#include "divmon/transducer.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace divmon {

namespace {

std::vector<std::vector<letter_type>> atoms_of(HypercubeTable const& table) {
  std::vector<std::vector<letter_type>> out;
  out.reserve(table.size());
  for (auto const& c : table.cubes()) {
    out.push_back(c.atoms);
  }
  return out;
}

}  // namespace

Transducer synthesize(Monoid const& m, HypercubeTable const& table) {
  Transducer t;
  t.kind        = MachineKind::base;
  t.generators  = m.presentation().generators();
  t.state_atoms = atoms_of(table);
  t.initial     = HypercubeTable::trivial;
  auto const k  = t.generators.size();
  t.delta.assign(table.size(), std::vector<uint32_t>(k, 0));
  t.lambda.assign(table.size(), std::vector<std::vector<uint32_t>>(k));
  for (auto const& a : table.cubes()) {
    for (letter_type x = 0; x < k; ++x) {
      auto const prod = m.product(a.element, x);
      auto const b    = max_hypercube(m, table, prod);
      auto const u    = m.right_quotient(prod, b.element);
      // coherence: a x and u b are the same element
      if (m.product(u, b.element) != prod) {
        throw InvalidMonoidError("transducer arrow fails output coherence");
      }
      t.delta[a.id][x] = b.id;
      t.lambda[a.id][x].assign(u.canonical().begin(), u.canonical().end());
    }
  }
  return t;
}

Transducer synthesize_augmented(Monoid const& m, HypercubeTable const& table) {
  Transducer t;
  t.kind        = MachineKind::augmented;
  t.generators  = m.presentation().generators();
  t.state_atoms = atoms_of(table);
  t.initial     = HypercubeTable::trivial;
  auto const n  = table.size();
  t.delta.assign(n, std::vector<uint32_t>(n, 0));
  t.lambda.assign(n, std::vector<std::vector<uint32_t>>(n));
  for (auto const& a : table.cubes()) {
    for (auto const& h : table.cubes()) {
      auto const prod = m.product(a.element, h.element);
      auto const b    = max_hypercube(m, table, prod);
      auto const u    = m.right_quotient(prod, b.element);
      auto const kid  = table.by_element(u);
      if (!kid.has_value()) {
        throw InvalidMonoidError(
            "augmented transducer output is not a hypercube");
      }
      t.delta[a.id][h.id] = b.id;
      if (*kid != HypercubeTable::trivial) {
        t.lambda[a.id][h.id] = {*kid};
      }
    }
  }
  return t;
}

RunResult run(Transducer const& t, std::vector<uint32_t> const& input,
              uint32_t state) {
  if (state >= t.state_count()) {
    throw DomainError(fmt::format("unknown state {}", state));
  }
  RunResult r{state, {}, 0};
  for (auto letter : input) {
    if (letter >= t.input_alphabet_size()) {
      throw DomainError(fmt::format("letter {} not in the input alphabet",
                                    letter));
    }
    auto const& out = t.lambda[r.state][letter];
    r.output.insert(r.output.end(), out.begin(), out.end());
    r.state = t.delta[r.state][letter];
    ++r.steps;
  }
  return r;
}

NormalWord normalize_fast(Transducer const& t, Word const& input,
                          NormalizeStats* stats) {
  if (t.kind != MachineKind::base) {
    throw DomainError("normalize_fast expects a base-alphabet machine");
  }
  NormalizeStats        local;
  std::vector<uint32_t> work(input.begin(), input.end());
  std::vector<cube_id>  factors;
  while (!work.empty()) {
    auto r = run(t, work, t.initial);
    local.steps += r.steps;
    local.run_lengths.push_back(work.size());
    ++local.runs;
    if (r.output.size() >= work.size()) {
      throw DivmonError(
          "transducer run failed to shorten its input (corrupt machine?)");
    }
    factors.push_back(r.state);
    work = std::move(r.output);
  }
  if (stats != nullptr) {
    *stats = std::move(local);
  }
  NormalWord nw;
  nw.factors.assign(factors.rbegin(), factors.rend());
  return nw;
}

std::vector<uint32_t> unreachable_states(Transducer const& t) {
  std::vector<bool>    seen(t.state_count(), false);
  std::deque<uint32_t> queue{t.initial};
  seen[t.initial] = true;
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (size_t x = 0; x < t.input_alphabet_size(); ++x) {
      auto next = t.delta[cur][x];
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < t.state_count(); ++s) {
    if (!seen[s]) {
      out.push_back(s);
    }
  }
  return out;
}

namespace {

std::string atoms_csv(Transducer const& t, uint32_t state) {
  std::string out;
  for (size_t i = 0; i < t.state_atoms[state].size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += t.generators[t.state_atoms[state][i]];
  }
  return out;
}

std::string letter_name(Transducer const& t, size_t letter) {
  return t.kind == MachineKind::base ? t.generators[letter]
                                     : fmt::format("{}", letter);
}

std::string output_text(Transducer const& t,
                        std::vector<uint32_t> const& output) {
  std::string out;
  for (size_t i = 0; i < output.size(); ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += t.kind == MachineKind::base ? t.generators[output[i]]
                                       : fmt::format("{}", output[i]);
  }
  return out;
}

}  // namespace

std::string serialize(Transducer const& t) {
  std::string out = "divmon-transducer v1\n";
  out += fmt::format("alphabet: {}\n",
                     t.kind == MachineKind::base ? "base" : "augmented");
  out += fmt::format("states: {}\n", t.state_count());
  for (uint32_t s = 0; s < t.state_count(); ++s) {
    out += fmt::format("state {} atoms={}\n", s, atoms_csv(t, s));
  }
  out += fmt::format("initial: {}\n", t.initial);
  for (uint32_t s = 0; s < t.state_count(); ++s) {
    for (size_t x = 0; x < t.input_alphabet_size(); ++x) {
      out += fmt::format("{} {} -> {} | {}\n", s, letter_name(t, x),
                         t.delta[s][x], output_text(t, t.lambda[s][x]));
    }
  }
  return out;
}

namespace {

std::vector<std::string> split_ws(std::string const& s) {
  std::vector<std::string> out;
  std::istringstream       ss(s);
  std::string              tok;
  while (ss >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::vector<std::string> split_csv(std::string const& s) {
  std::vector<std::string> out;
  std::string              cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) {
    out.push_back(cur);
  }
  return out;
}

size_t parse_num(std::string const& tok, size_t lineno) {
  try {
    size_t pos = 0;
    auto   val = std::stoul(tok, &pos);
    if (pos != tok.size()) {
      throw std::invalid_argument(tok);
    }
    return val;
  } catch (std::exception const&) {
    throw ParseError(fmt::format("expected a number, got \"{}\"", tok),
                     lineno);
  }
}

}  // namespace

Transducer deserialize(std::string const& text) {
  std::istringstream in(text);
  std::string        line;
  size_t             lineno = 0;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++lineno;
      if (!split_ws(line).empty()) {
        return true;
      }
    }
    return false;
  };

  if (!next_line() || split_ws(line) != std::vector<std::string>{
          "divmon-transducer", "v1"}) {
    throw ParseError("expected header \"divmon-transducer v1\"", lineno);
  }
  if (!next_line()) {
    throw ParseError("missing alphabet line", lineno);
  }
  auto toks = split_ws(line);
  if (toks.size() != 2 || toks[0] != "alphabet:"
      || (toks[1] != "base" && toks[1] != "augmented")) {
    throw ParseError("expected \"alphabet: base|augmented\"", lineno);
  }
  Transducer t;
  t.kind = toks[1] == "base" ? MachineKind::base : MachineKind::augmented;

  if (!next_line() || (toks = split_ws(line)).size() != 2
      || toks[0] != "states:") {
    throw ParseError("expected \"states: <n>\"", lineno);
  }
  size_t const n = parse_num(toks[1], lineno);

  std::vector<std::vector<std::string>> atom_names(n);
  for (size_t i = 0; i < n; ++i) {
    if (!next_line() || (toks = split_ws(line)).size() < 2
        || toks[0] != "state") {
      throw ParseError("expected a state line", lineno);
    }
    auto id = parse_num(toks[1], lineno);
    if (id >= n) {
      throw ParseError("state id out of range", lineno);
    }
    std::string atoms;
    if (toks.size() == 3 && toks[2].rfind("atoms=", 0) == 0) {
      atoms = toks[2].substr(6);
    } else if (toks.size() == 2) {
      throw ParseError("state line without atoms=", lineno);
    }
    atom_names[id] = split_csv(atoms);
  }

  // Generator declaration order is recoverable from the 1-cube states, whose
  // ids ascend in declaration order.
  for (size_t i = 0; i < n; ++i) {
    if (atom_names[i].size() == 1) {
      t.generators.push_back(atom_names[i][0]);
    }
  }
  auto letter_of = [&t, &lineno](std::string const& name) {
    auto it = std::find(t.generators.begin(), t.generators.end(), name);
    if (it == t.generators.end()) {
      throw ParseError(fmt::format("unknown generator \"{}\"", name), lineno);
    }
    return static_cast<letter_type>(it - t.generators.begin());
  };
  t.state_atoms.resize(n);
  for (size_t i = 0; i < n; ++i) {
    for (auto const& name : atom_names[i]) {
      t.state_atoms[i].push_back(letter_of(name));
    }
    std::sort(t.state_atoms[i].begin(), t.state_atoms[i].end());
  }

  if (!next_line() || (toks = split_ws(line)).size() != 2
      || toks[0] != "initial:") {
    throw ParseError("expected \"initial: <id>\"", lineno);
  }
  t.initial = static_cast<uint32_t>(parse_num(toks[1], lineno));
  if (t.initial >= n) {
    throw ParseError("initial state out of range", lineno);
  }

  auto const alphabet =
      t.kind == MachineKind::base ? t.generators.size() : n;
  t.delta.assign(n, std::vector<uint32_t>(alphabet, UINT32_MAX));
  t.lambda.assign(n, std::vector<std::vector<uint32_t>>(alphabet));
  while (next_line()) {
    auto const bar = line.find('|');
    if (bar == std::string::npos) {
      throw ParseError("transition line without '|'", lineno);
    }
    auto left  = split_ws(line.substr(0, bar));
    auto right = split_ws(line.substr(bar + 1));
    if (left.size() != 4 || left[2] != "->") {
      throw ParseError("expected \"<from> <letter> -> <to> | <output>\"",
                       lineno);
    }
    auto from = parse_num(left[0], lineno);
    auto to   = parse_num(left[3], lineno);
    if (from >= n || to >= n) {
      throw ParseError("transition state out of range", lineno);
    }
    size_t letter = t.kind == MachineKind::base
                        ? letter_of(left[1])
                        : parse_num(left[1], lineno);
    if (letter >= alphabet) {
      throw ParseError("transition letter out of range", lineno);
    }
    if (t.delta[from][letter] != UINT32_MAX) {
      throw ParseError("duplicate transition", lineno);
    }
    t.delta[from][letter] = static_cast<uint32_t>(to);
    for (auto const& tok : right) {
      t.lambda[from][letter].push_back(
          t.kind == MachineKind::base
              ? letter_of(tok)
              : static_cast<uint32_t>(parse_num(tok, lineno)));
    }
  }
  for (size_t s = 0; s < n; ++s) {
    for (size_t x = 0; x < alphabet; ++x) {
      if (t.delta[s][x] == UINT32_MAX) {
        throw ParseError(
            fmt::format("partial transition function: state {} has no "
                        "transition on letter {}",
                        s, letter_name(t, x)),
            lineno);
      }
    }
  }
  return t;
}

Transducer read_transducer_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError(fmt::format("cannot open \"{}\"", path));
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

bool looks_like_transducer_file(std::string const& text) {
  auto const pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos
         && text.compare(pos, 17, "divmon-transducer") == 0;
}

std::string export_dot(Transducer const& t) {
  auto label = [&](uint32_t s) {
    auto const& atoms = t.state_atoms[s];
    if (atoms.empty()) {
      return std::string("1");
    }
    if (atoms.size() == 1) {
      return t.generators[atoms[0]];
    }
    std::string out = "[";
    for (size_t i = 0; i < atoms.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += t.generators[atoms[i]];
    }
    return out + "]";
  };
  std::string out = "digraph transducer {\n  rankdir=LR;\n";
  out += fmt::format("  init [shape=point];\n  init -> q{};\n", t.initial);
  for (uint32_t s = 0; s < t.state_count(); ++s) {
    out += fmt::format("  q{} [label=\"{}\" shape=doublecircle];\n", s,
                       label(s));
  }
  for (uint32_t s = 0; s < t.state_count(); ++s) {
    for (size_t x = 0; x < t.input_alphabet_size(); ++x) {
      auto const text = output_text(t, t.lambda[s][x]);
      out += fmt::format("  q{} -> q{} [label=\"{}|{}\"];\n", s,
                         t.delta[s][x], letter_name(t, x),
                         text.empty() ? "" : text);
    }
  }
  out += "}\n";
  return out;
}

}  // namespace divmon
