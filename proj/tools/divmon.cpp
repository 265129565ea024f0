// Command-line front end: check a presentation, list its hypercubes, build
// and run the normal-form transducer, query the hypercube graph, build the
// automatic-structure machines, run the property suites, and benchmark the
// iterated normalization.
//
// Output is a flat machine-readable document of `key = value` lines with
// `#` comment lines. Exit codes: 0 success, 1 domain failure (axiom check or
// property verification failed), 2 usage, parse or I/O errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "divmon/automatic.hpp"
#include "divmon/axioms.hpp"
#include "divmon/hypercube.hpp"
#include "divmon/lattice.hpp"
#include "divmon/monoid.hpp"
#include "divmon/normal_form.hpp"
#include "divmon/presentation.hpp"
#include "divmon/transducer.hpp"
#include "divmon/verify.hpp"

namespace {

using namespace divmon;

constexpr int kExitOk     = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage  = 2;

struct Document {
  std::ostringstream out;

  void comment(std::string const& text) { out << "# " << text << '\n'; }
  template <typename T>
  void put(std::string const& key, T const& value) {
    out << key << " = " << value << '\n';
  }
  void print() const { std::cout << out.str(); }
};

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError(fmt::format("cannot open \"{}\"", path));
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Shared pipeline state for commands that start from a presentation.
struct Pipeline {
  Monoid         monoid;
  HypercubeTable table;
};

Pipeline open_pipeline(std::string const& path, bool assume_checked,
                       Document& doc) {
  Monoid m(parse_presentation(read_file(path)));
  if (!assume_checked) {
    auto report = check_all(m);
    if (!report.passed) {
      doc.comment(fmt::format("axiom check failed for {}", path));
      for (auto const& v : report.failures) {
        doc.put(fmt::format("violation.{}", condition_name(v.condition)),
                v.detail);
      }
      doc.print();
      std::exit(kExitDomain);
    }
  }
  auto table = enumerate_hypercubes(m);
  return Pipeline{std::move(m), std::move(table)};
}

// Cube specifications on the command line: "1" for the trivial cube, a bare
// generator name, or a comma/space separated atom set like "x,z".
cube_id parse_cube(std::string const& text, Presentation const& p,
                   HypercubeTable const& table) {
  if (text == "1") {
    return HypercubeTable::trivial;
  }
  std::string cleaned;
  for (char c : text) {
    cleaned += (c == ',' || c == '[' || c == ']') ? ' ' : c;
  }
  std::istringstream       ss(cleaned);
  std::string              tok;
  std::vector<letter_type> atoms;
  while (ss >> tok) {
    atoms.push_back(p.letter_of(tok));
  }
  std::sort(atoms.begin(), atoms.end());
  auto id = table.by_atoms(atoms);
  if (!id.has_value()) {
    throw DomainError(fmt::format("no hypercube with atom set \"{}\"", text));
  }
  return *id;
}

// Normal-word rendering from a transducer alone, so that the presentation
// and machine paths of `normalize` produce identical output.
std::string render_from_machine(Transducer const& t, NormalWord const& nf) {
  if (nf.factors.empty()) {
    return "1";
  }
  std::string out;
  for (size_t i = 0; i < nf.factors.size(); ++i) {
    if (i != 0) {
      out += '.';
    }
    auto const& atoms = t.state_atoms.at(nf.factors[i]);
    if (atoms.size() == 1) {
      out += t.generators[atoms[0]];
    } else {
      out += '[';
      for (size_t j = 0; j < atoms.size(); ++j) {
        if (j != 0) {
          out += ' ';
        }
        out += t.generators[atoms[j]];
      }
      out += ']';
    }
  }
  return out;
}

int cmd_check(std::string const& file) {
  Document doc;
  Monoid   m(parse_presentation(read_file(file)));
  auto     report = check_all(m);
  doc.comment(fmt::format("axiom check for {}", file));
  doc.put("generators", m.presentation().alphabet_size());
  doc.put("relations", m.presentation().relations().size());
  doc.put("condition_i.scanned", report.scanned_i);
  doc.put("condition_ii.scanned", report.scanned_ii);
  doc.put("condition_iii.scanned", report.scanned_iii);
  size_t idx = 0;
  size_t per_condition[3] = {0, 0, 0};
  for (auto const& v : report.failures) {
    ++per_condition[static_cast<size_t>(v.condition)];
    std::string witness;
    for (auto x : v.witness) {
      if (!witness.empty()) {
        witness += ' ';
      }
      witness += m.presentation().name_of(x);
    }
    doc.put(fmt::format("violation.{}.condition", idx),
            condition_name(v.condition));
    doc.put(fmt::format("violation.{}.witness", idx), witness);
    doc.put(fmt::format("violation.{}.detail", idx), v.detail);
    ++idx;
  }
  doc.put("condition_i.violations", per_condition[0]);
  doc.put("condition_ii.violations", per_condition[1]);
  doc.put("condition_iii.violations", per_condition[2]);
  doc.put("condition_i", per_condition[0] == 0 ? "pass" : "fail");
  doc.put("condition_ii", per_condition[1] == 0 ? "pass" : "fail");
  doc.put("condition_iii", per_condition[2] == 0 ? "pass" : "fail");
  doc.put("condition_iv", report.condition_iv);
  doc.put("passed", report.passed ? "true" : "false");
  doc.print();
  return report.passed ? kExitOk : kExitDomain;
}

int cmd_hypercubes(std::string const& file, bool assume_checked) {
  Document doc;
  auto     pl = open_pipeline(file, assume_checked, doc);
  doc.comment(fmt::format("hypercubes of {}", file));
  doc.put("count", pl.table.size());
  doc.put("max_length", pl.table.max_cube_length());
  for (auto const& c : pl.table.cubes()) {
    doc.put(fmt::format("cube.{}", c.id),
            fmt::format("{} | {}",
                        pl.table.render(c.id, pl.monoid.presentation()),
                        pl.monoid.presentation().word_to_string(
                            c.element.canonical())));
  }
  doc.print();
  return kExitOk;
}

int cmd_synthesize(std::string const& file, bool augmented,
                   std::string const& out_path, bool assume_checked) {
  Document doc;
  auto     pl = open_pipeline(file, assume_checked, doc);
  auto     t  = augmented ? synthesize_augmented(pl.monoid, pl.table)
                          : synthesize(pl.monoid, pl.table);
  auto text = serialize(t);
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw DomainError(fmt::format("cannot write \"{}\"", out_path));
  }
  out << text;
  doc.comment(fmt::format("transducer for {}", file));
  doc.put("kind", augmented ? "augmented" : "base");
  doc.put("states", t.state_count());
  doc.put("arrows", t.arrow_count());
  doc.put("unreachable", unreachable_states(t).size());
  doc.put("output", out_path);
  doc.print();
  return kExitOk;
}

int cmd_normalize(std::string const& file, std::string const& word_text,
                  bool stats_flag, bool assume_checked) {
  Document    doc;
  auto const  content = read_file(file);
  Transducer  machine;
  if (looks_like_transducer_file(content)) {
    machine = deserialize(content);
  } else {
    auto pl = open_pipeline(file, assume_checked, doc);
    machine = synthesize(pl.monoid, pl.table);
  }
  Presentation words_only(machine.generators, {});
  auto const   w = words_only.parse_word(word_text);

  NormalizeStats stats;
  auto const     nf = normalize_fast(machine, w, &stats);
  doc.put("word", words_only.word_to_string(w));
  doc.put("normal_form", render_from_machine(machine, nf));
  doc.put("factors", nf.factors.size());
  doc.put("length", w.size());
  doc.put("runs", stats.runs);
  doc.put("steps", stats.steps);
  if (stats_flag) {
    for (size_t i = 0; i < stats.run_lengths.size(); ++i) {
      doc.put(fmt::format("run.{}.length", i), stats.run_lengths[i]);
    }
  }
  doc.print();
  return kExitOk;
}

int cmd_equal(std::string const& file, std::string const& w1,
              std::string const& w2, bool assume_checked) {
  Document doc;
  auto     pl = open_pipeline(file, assume_checked, doc);
  auto     machine = synthesize(pl.monoid, pl.table);
  auto const u = pl.monoid.presentation().parse_word(w1);
  auto const v = pl.monoid.presentation().parse_word(w2);
  auto const nu = normalize_fast(machine, u);
  auto const nv = normalize_fast(machine, v);
  doc.put("word1", pl.monoid.presentation().word_to_string(u));
  doc.put("word2", pl.monoid.presentation().word_to_string(v));
  doc.put("normal_form1", render_from_machine(machine, nu));
  doc.put("normal_form2", render_from_machine(machine, nv));
  doc.put("equal", nu == nv ? "true" : "false");
  doc.print();
  return kExitOk;
}

int cmd_graph(std::string const& file, bool dot, bool scc, bool scc_all,
              std::vector<std::string> const& reach,
              std::string const& out_path, bool assume_checked) {
  Document doc;
  auto     pl = open_pipeline(file, assume_checked, doc);
  auto     g  = hypercube_graph(pl.monoid, pl.table);
  if (dot) {
    auto text = export_dot(g, pl.table, pl.monoid.presentation());
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        throw DomainError(fmt::format("cannot write \"{}\"", out_path));
      }
      out << text;
    }
    return kExitOk;
  }
  doc.comment(fmt::format("hypercube graph of {}", file));
  doc.put("vertices", g.vertices.size());
  size_t edges = 0;
  for (auto const& row : g.adj) {
    for (bool e : row) {
      edges += e ? 1 : 0;
    }
  }
  doc.put("edges", edges);
  if (!reach.empty()) {
    auto from = parse_cube(reach[0], pl.monoid.presentation(), pl.table);
    auto to   = parse_cube(reach[1], pl.monoid.presentation(), pl.table);
    doc.put("reach.from", pl.table.render(from, pl.monoid.presentation()));
    doc.put("reach.to", pl.table.render(to, pl.monoid.presentation()));
    doc.put("reachable", reachable(g, from, to) ? "true" : "false");
  }
  if (scc || scc_all) {
    auto verts = scc_all ? g.vertices : default_scc_vertices(pl.table);
    doc.put("scc.vertices", verts.size());
    doc.put("strongly_connected",
            strongly_connected(g, verts) ? "true" : "false");
  }
  doc.print();
  return kExitOk;
}

int cmd_automatic(std::string const& file, std::string const& cube_arg,
                  bool dot, size_t max_len, bool assume_checked) {
  Document doc;
  auto     pl = open_pipeline(file, assume_checked, doc);
  doc.comment(fmt::format("automatic structure of {}", file));
  doc.put("cubes", pl.table.size());
  doc.put("max_len", max_len);

  NormalLanguageAutomaton nl(pl.monoid, pl.table);
  doc.put("normal_language.states", nl.state_count());

  bool ok = true;
  auto report = [&](std::string const& name, PairAutomaton const& machine,
                    MultSide side, cube_id c) {
    auto sweep =
        multiplier_oracle_sweep(pl.monoid, pl.table, machine, side, c,
                                max_len);
    doc.put(name + ".states", machine.state_count());
    doc.put(name + ".sweep_pairs", sweep.pairs);
    doc.put(name + ".mismatches", sweep.mismatches);
    if (sweep.mismatches > 0) {
      doc.put(name + ".first_mismatch", sweep.first_mismatch);
      ok = false;
    }
    if (dot) {
      std::cout << export_dot(machine);
    }
  };

  auto const trivial = HypercubeTable::trivial;
  report("right_equality",
         right_multiplier_automaton(pl.monoid, pl.table, trivial),
         MultSide::right, trivial);
  report("left_equality",
         left_multiplier_automaton(pl.monoid, pl.table, trivial),
         MultSide::left, trivial);
  if (!cube_arg.empty()) {
    auto c = parse_cube(cube_arg, pl.monoid.presentation(), pl.table);
    doc.put("multiplier", pl.table.render(c, pl.monoid.presentation()));
    auto rm = right_multiplier_automaton(pl.monoid, pl.table, c);
    if (rm.state_count() > pl.table.size() + 2) {
      ok = false;
      doc.put("right_multiplier.state_bound", "exceeded");
    }
    report("right_multiplier", rm, MultSide::right, c);
    report("left_multiplier",
           left_multiplier_automaton(pl.monoid, pl.table, c), MultSide::left,
           c);
  }
  doc.put("passed", ok ? "true" : "false");
  doc.print();
  return ok ? kExitOk : kExitDomain;
}

int cmd_verify(std::string const& file, size_t max_len) {
  Document doc;
  Monoid   m(parse_presentation(read_file(file)));
  auto     report = check_all(m);
  doc.comment(fmt::format("property suites for {} at length {}", file,
                          max_len));
  doc.put("axioms", report.passed ? "pass" : "fail");
  if (!report.passed) {
    doc.put("passed", "false");
    doc.print();
    return kExitDomain;
  }
  auto table   = enumerate_hypercubes(m);
  auto machine = synthesize(m, table);
  bool ok      = true;
  for (auto const& suite : run_property_suites(m, table, machine, max_len)) {
    doc.put(fmt::format("suite.{}", suite.name),
            suite.passed ? "pass" : "fail");
    doc.put(fmt::format("suite.{}.checked", suite.name), suite.checked);
    if (!suite.passed) {
      doc.put(fmt::format("suite.{}.detail", suite.name), suite.detail);
      ok = false;
    }
  }
  doc.put("passed", ok ? "true" : "false");
  doc.print();
  return ok ? kExitOk : kExitDomain;
}

int cmd_bench(std::string const& file, size_t max_n, bool assume_checked) {
  Document doc;
  auto     pl      = open_pipeline(file, assume_checked, doc);
  auto     machine = synthesize(pl.monoid, pl.table);
  doc.comment(fmt::format("normalization step counts for {}", file));
  bool ok = true;
  auto measure = [&](std::string const& name, Word const& w) {
    NormalizeStats stats;
    auto const     began = std::chrono::steady_clock::now();
    normalize_fast(machine, w, &stats);
    auto const ended = std::chrono::steady_clock::now();
    auto const n     = w.size();
    auto const bound = n * (n + 1) / 2;
    doc.put(fmt::format("{}.steps", name), stats.steps);
    doc.put(fmt::format("{}.bound", name), bound);
    doc.put(fmt::format("{}.runs", name), stats.runs);
    doc.put(fmt::format("{}.millis", name),
            std::chrono::duration<double, std::milli>(ended - began).count());
    if (stats.steps > bound) {
      ok = false;
    }
    return stats.steps;
  };

  auto const k = pl.monoid.presentation().alphabet_size();
  std::mt19937 rng(20240811);  // fixed seed: deterministic output
  size_t prev_power = 0;
  size_t prev_rand  = 0;
  for (size_t n = 64; n <= max_n; n *= 2) {
    Word power(n, 0);
    auto s1 = measure(fmt::format("power.{}", n), power);
    if (prev_power > 0) {
      doc.put(fmt::format("power.{}.ratio", n),
              static_cast<double>(s1) / static_cast<double>(prev_power));
    }
    prev_power = s1;

    Word rand_word(n);
    for (auto& x : rand_word) {
      x = static_cast<letter_type>(rng() % k);
    }
    auto s2 = measure(fmt::format("random.{}", n), rand_word);
    if (prev_rand > 0) {
      doc.put(fmt::format("random.{}.ratio", n),
              static_cast<double>(s2) / static_cast<double>(prev_rand));
    }
    prev_rand = s2;
  }
  doc.put("passed", ok ? "true" : "false");
  doc.print();
  return ok ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisibility-monoid transducers and automatic structures"};
  app.require_subcommand(1);

  std::string file, word, word2, out_path, cube_arg;
  bool        augmented = false, stats = false, assume_checked = false;
  bool        dot = false, scc = false, scc_all = false;
  size_t      max_len = 6, auto_len = 5, max_n = 512;
  std::vector<std::string> reach;

  auto* check = app.add_subcommand("check", "run the axiom checker");
  check->add_option("file", file)->required();

  auto* cubes = app.add_subcommand("hypercubes", "list the hypercubes");
  cubes->add_option("file", file)->required();
  cubes->add_flag("--assume-checked", assume_checked);

  auto* synth = app.add_subcommand("synthesize", "build the transducer");
  synth->add_option("file", file)->required();
  synth->add_flag("--augmented", augmented,
                  "read the whole hypercube alphabet");
  synth->add_option("-o,--output", out_path, "write the machine here");
  synth->add_flag("--assume-checked", assume_checked);

  auto* norm = app.add_subcommand(
      "normalize", "compute the right normal form of a word");
  norm->add_option("file", file, "presentation or serialized machine")
      ->required();
  norm->add_option("word", word)->required();
  norm->add_flag("--stats", stats, "per-run input lengths");
  norm->add_flag("--assume-checked", assume_checked);

  auto* eq = app.add_subcommand("equal", "decide the word problem");
  eq->add_option("file", file)->required();
  eq->add_option("word1", word)->required();
  eq->add_option("word2", word2)->required();
  eq->add_flag("--assume-checked", assume_checked);

  auto* graph = app.add_subcommand("graph", "hypercube graph queries");
  graph->add_option("file", file)->required();
  graph->add_flag("--dot", dot, "print the graph in dot format");
  graph->add_option("-o,--output", out_path, "write the dot file here");
  graph->add_option("--reach", reach, "FROM TO cube specs")->expected(2);
  graph->add_flag("--scc", scc,
                  "strong connectivity of the non-central cubes");
  graph->add_flag("--scc-all", scc_all,
                  "strong connectivity of every non-trivial cube");
  graph->add_flag("--assume-checked", assume_checked);

  auto* autom = app.add_subcommand(
      "automatic", "build and validate the multiplier automata");
  autom->add_option("file", file)->required();
  autom->add_option("--multiplier", cube_arg,
                    "cube spec: 1, a generator, or an atom set like x,z");
  autom->add_flag("--dot", dot, "print the machines in dot format");
  autom->add_option("--max-len", auto_len, "oracle sweep length bound");
  autom->add_flag("--assume-checked", assume_checked);

  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("file", file)->required();
  verify->add_option("--max-len", max_len, "exhaustive length bound");

  auto* bench = app.add_subcommand("bench", "step-count scaling");
  bench->add_option("file", file)->required();
  bench->add_option("--max-n", max_n, "largest input length");
  bench->add_flag("--assume-checked", assume_checked);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) {
      return cmd_check(file);
    }
    if (cubes->parsed()) {
      return cmd_hypercubes(file, assume_checked);
    }
    if (synth->parsed()) {
      return cmd_synthesize(file, augmented, out_path, assume_checked);
    }
    if (norm->parsed()) {
      return cmd_normalize(file, word, stats, assume_checked);
    }
    if (eq->parsed()) {
      return cmd_equal(file, word, word2, assume_checked);
    }
    if (graph->parsed()) {
      return cmd_graph(file, dot, scc, scc_all, reach, out_path,
                       assume_checked);
    }
    if (autom->parsed()) {
      return cmd_automatic(file, cube_arg, dot, auto_len, assume_checked);
    }
    if (verify->parsed()) {
      return cmd_verify(file, max_len);
    }
    if (bench->parsed()) {
      return cmd_bench(file, max_n, assume_checked);
    }
  } catch (ParseError const& e) {
    std::cerr << fmt::format("error: line {}: {}\n", e.line, e.what());
    return kExitUsage;
  } catch (InvalidMonoidError const& e) {
    std::cerr << fmt::format("error: {}\n", e.what());
    return kExitDomain;
  } catch (DivmonError const& e) {
    std::cerr << fmt::format("error: {}\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
