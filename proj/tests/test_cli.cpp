#include <doctest.h>

#include <array>
#include <cstdio>
#include <map>
#include <string>

#include <fmt/format.h>

namespace {

struct CliResult {
  int         exit_code;
  std::string output;
};

CliResult run_cli(std::string const& args) {
  auto cmd = fmt::format("{} {} 2>&1", DIVMON_CLI_PATH, args);
  std::array<char, 4096> buf{};
  std::string            output;
  FILE*                  pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) {
    output += buf.data();
  }
  auto status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string data(std::string const& name) {
  return std::string(DIVMON_DATA_DIR) + "/" + name;
}

// The machine document: `key = value` lines, '#' comments skipped.
std::map<std::string, std::string> parse_doc(std::string const& text) {
  std::map<std::string, std::string> out;
  size_t                             pos = 0;
  while (pos < text.size()) {
    auto end  = text.find('\n', pos);
    auto line = text.substr(pos, end - pos);
    pos       = end == std::string::npos ? text.size() : end + 1;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    auto eq = line.find(" = ");
    if (eq == std::string::npos) {
      continue;
    }
    out[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check passes and fails with the right exit codes") {
    auto good = run_cli("check " + data("divisibility.mon"));
    CHECK(good.exit_code == 0);
    auto doc = parse_doc(good.output);
    CHECK(doc.at("passed") == "true");
    CHECK(doc.at("condition_i.scanned") == "27");
    CHECK(doc.at("condition_i") == "pass");
    CHECK(doc.at("condition_iv") == "holds by construction");

    auto bad = run_cli("check " + data("bad.mon"));
    CHECK(bad.exit_code == 1);
    auto bad_doc = parse_doc(bad.output);
    CHECK(bad_doc.at("passed") == "false");
    CHECK(bad_doc.count("violation.0.condition") == 1);

    auto missing = run_cli("check /nonexistent.mon");
    CHECK(missing.exit_code == 2);
  }

  TEST_CASE("malformed file exits 2 with a line number") {
    auto tmp = std::string("/tmp/divmon_cli_bad.mon");
    {
      FILE* f = fopen(tmp.c_str(), "w");
      fputs("generators: x\nrel: x x x = x x\n", f);
      fclose(f);
    }
    auto r = run_cli("check " + tmp);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 2") != std::string::npos);
  }

  TEST_CASE("hypercubes") {
    auto r = run_cli("hypercubes " + data("divisibility.mon"));
    CHECK(r.exit_code == 0);
    auto doc = parse_doc(r.output);
    CHECK(doc.at("count") == "5");
    CHECK(doc.at("cube.4") == "[x y] | x y");

    CHECK(run_cli("hypercubes " + data("bad.mon")).exit_code == 1);
  }

  TEST_CASE("synthesize prints or saves the machine") {
    auto r = run_cli("synthesize " + data("divisibility.mon"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("divmon-transducer v1") == 0);

    auto saved = run_cli("synthesize " + data("divisibility.mon")
                         + " -o /tmp/divmon_m1.t");
    CHECK(saved.exit_code == 0);
    auto doc = parse_doc(saved.output);
    CHECK(doc.at("states") == "5");
    CHECK(doc.at("arrows") == "15");
    CHECK(doc.at("unreachable") == "0");

    auto aug = run_cli("synthesize " + data("divisibility.mon")
                       + " --augmented -o /tmp/divmon_m1aug.t");
    CHECK(aug.exit_code == 0);
    CHECK(parse_doc(aug.output).at("arrows") == "25");
  }

  TEST_CASE("normalize via presentation and via machine agree") {
    auto direct = run_cli(fmt::format("normalize {} yzyxxz --stats",
                                      data("twisted.mon")));
    CHECK(direct.exit_code == 0);
    auto doc = parse_doc(direct.output);
    CHECK(doc.at("normal_form") == "[x y].y.y.[y z]");
    CHECK(doc.at("runs") == "4");
    CHECK(doc.at("steps") == "15");
    CHECK(doc.at("run.0.length") == "6");

    REQUIRE(run_cli(fmt::format("synthesize {} -o /tmp/divmon_m2.t",
                                data("twisted.mon")))
                .exit_code
            == 0);
    auto via_machine = run_cli("normalize /tmp/divmon_m2.t yzyxxz --stats");
    CHECK(via_machine.exit_code == 0);
    CHECK(parse_doc(via_machine.output) == doc);
  }

  TEST_CASE("normalize the empty word") {
    auto r = run_cli(fmt::format("normalize {} 1", data("twisted.mon")));
    CHECK(r.exit_code == 0);
    auto doc = parse_doc(r.output);
    CHECK(doc.at("normal_form") == "1");
    CHECK(doc.at("runs") == "0");
    CHECK(doc.at("steps") == "0");
  }

  TEST_CASE("equal") {
    auto r = run_cli(fmt::format("equal {} yzyxxz xxyyzz",
                                 data("twisted.mon")));
    CHECK(r.exit_code == 0);
    CHECK(parse_doc(r.output).at("equal") == "true");

    auto neq = run_cli(fmt::format("equal {} xz zx",
                                   data("divisibility.mon")));
    CHECK(neq.exit_code == 0);
    CHECK(parse_doc(neq.output).at("equal") == "false");

    auto same = run_cli(fmt::format("equal {} zyx zyx",
                                    data("divisibility.mon")));
    CHECK(parse_doc(same.output).at("equal") == "true");
  }

  TEST_CASE("graph queries") {
    auto r = run_cli(fmt::format("graph {} --reach x,z x --scc",
                                 data("cyclic.mon")));
    CHECK(r.exit_code == 0);
    auto doc = parse_doc(r.output);
    CHECK(doc.at("reachable") == "false");
    CHECK(doc.at("strongly_connected") == "false");
    CHECK(doc.at("scc.vertices") == "6");

    auto self = run_cli(fmt::format("graph {} --reach x x",
                                    data("cyclic.mon")));
    CHECK(parse_doc(self.output).at("reachable") == "true");

    auto dot = run_cli(fmt::format("graph {} --dot",
                                   data("divisibility.mon")));
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("digraph") == 0);

    auto saved = run_cli(fmt::format("graph {} --dot -o /tmp/divmon_g.dot",
                                     data("divisibility.mon")));
    CHECK(saved.exit_code == 0);
    FILE* f = fopen("/tmp/divmon_g.dot", "r");
    REQUIRE(f != nullptr);
    fclose(f);
  }

  TEST_CASE("automatic") {
    auto r = run_cli(fmt::format("automatic {} --multiplier z --max-len 3",
                                 data("divisibility.mon")));
    CHECK(r.exit_code == 0);
    auto doc = parse_doc(r.output);
    CHECK(doc.at("passed") == "true");
    CHECK(doc.at("right_equality.mismatches") == "0");
    CHECK(doc.at("right_multiplier.mismatches") == "0");
    CHECK(doc.at("left_multiplier.mismatches") == "0");
  }

  TEST_CASE("normalize rejects an augmented machine file") {
    REQUIRE(run_cli(fmt::format("synthesize {} --augmented -o "
                                "/tmp/divmon_aug.t",
                                data("twisted.mon")))
                .exit_code
            == 0);
    CHECK(run_cli("normalize /tmp/divmon_aug.t yzyxxz").exit_code == 2);
  }

  TEST_CASE("automatic --dot emits machine drawings") {
    auto r = run_cli(fmt::format("automatic {} --dot --max-len 2",
                                 data("divisibility.mon")));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("digraph pair_automaton") != std::string::npos);
  }

  TEST_CASE("verify") {
    auto r = run_cli(fmt::format("verify {} --max-len 4",
                                 data("divisibility.mon")));
    CHECK(r.exit_code == 0);
    auto doc = parse_doc(r.output);
    CHECK(doc.at("passed") == "true");
    CHECK(doc.at("suite.h-map-composition") == "pass");
    CHECK(doc.at("suite.word-problem") == "pass");

    auto free_r = run_cli(fmt::format("verify {} --max-len 4",
                                      data("free.mon")));
    CHECK(free_r.exit_code == 0);

    auto tw = run_cli(fmt::format("verify {} --max-len 4",
                                  data("twisted.mon")));
    CHECK(tw.exit_code == 0);
    CHECK(parse_doc(tw.output).at("passed") == "true");

    auto bad = run_cli(fmt::format("verify {} --max-len 3", data("bad.mon")));
    CHECK(bad.exit_code == 1);
    CHECK(parse_doc(bad.output).at("axioms") == "fail");
  }

  TEST_CASE("bench") {
    auto r = run_cli(fmt::format("bench {} --max-n 128",
                                 data("divisibility.mon")));
    CHECK(r.exit_code == 0);
    auto doc = parse_doc(r.output);
    CHECK(doc.at("passed") == "true");
    CHECK(doc.count("power.64.steps") == 1);
    CHECK(doc.count("power.128.ratio") == 1);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate x").exit_code == 2);
    CHECK(run_cli("normalize").exit_code == 2);
  }
}
