// End-to-end checks of the clar-kit binary: exit codes, JSON output,
// byte stability and the documented grammar.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "clarkit/extremal.hpp"
#include "clarkit/json_io.hpp"

using nlohmann::json;

namespace {

int failures = 0;

#define EXPECT(cond)                                                          \
  do {                                                                        \
    if (!(cond)) {                                                            \
      ++failures;                                                             \
      std::cerr << "FAILED at line " << __LINE__ << ": " #cond "\n";          \
    }                                                                         \
  } while (0)

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CLAR_KIT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult result;
  if (!pipe) return result;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string write_temp_spec(const clarkit::BenzenoidSpec& spec, const std::string& name) {
  std::string path = "/tmp/clarkit_cli_" + name + ".json";
  clarkit::save_json_file(path, clarkit::spec_to_json(spec));
  return path;
}

}  // namespace

int main() {
  std::string b1 = write_temp_spec(
      clarkit::BenzenoidSpec{3, {{0, 1, 0}, {1, 2, 2}}}, "b1");
  std::string single = write_temp_spec(clarkit::single_hexagon_spec(), "single");

  // clar: value 2 for the bent 3-chain, exit 0, parseable JSON.
  auto clar = run("clar --in " + b1);
  EXPECT(clar.status == 0);
  auto cert = json::parse(clar.out);
  EXPECT(cert.at("value") == 2);
  EXPECT(cert.at("clar_set").size() == 2);

  // Byte-stable across runs.
  EXPECT(run("clar --in " + b1).out == clar.out);

  // bound on a single hexagon.
  auto bound = run("bound --in " + single);
  EXPECT(bound.status == 0);
  auto binfo = json::parse(bound.out);
  EXPECT(binfo.at("n") == 1);
  EXPECT(binfo.at("tree_alpha") == 1);
  EXPECT(binfo.at("formula_bound") == 1);
  EXPECT(binfo.at("bound") == 1);

  // build writes the graph, --out lands in a file.
  std::string out_path = "/tmp/clarkit_cli_graph.json";
  std::remove(out_path.c_str());
  auto build = run("build --in " + b1 + " --out " + out_path);
  EXPECT(build.status == 0);
  std::ifstream out_file(out_path);
  EXPECT(out_file.good());
  auto graph_doc = json::parse(out_file);
  EXPECT(graph_doc.at("format") == "clar-kit/1");
  EXPECT(graph_doc.at("vertices").size() == 14);
  EXPECT(graph_doc.at("edges").size() == 16);

  // --ascii renders a sketch with two circled hexagons.
  auto art = run("clar --in " + b1 + " --ascii");
  EXPECT(art.status == 0);
  EXPECT(art.out.find("()") != std::string::npos);

  // gen-tk emits tree JSON.
  auto tk = run("gen-tk --k 4");
  EXPECT(tk.status == 0);
  auto tree = json::parse(tk.out);
  EXPECT(tree.at("n") == 11);
  EXPECT(tree.at("edges").size() == 10);

  // gen-family-b and enumerate counts.
  auto fam = run("gen-family-b --n 3");
  EXPECT(fam.status == 0);
  EXPECT(json::parse(fam.out).at("count") == 1);
  auto enumeration = run("enumerate --n 4");
  EXPECT(enumeration.status == 0);
  EXPECT(json::parse(enumeration.out).at("count") == 5);

  // spectrum: single target and the full sweep.
  auto one = run("spectrum --n 5 --c 1");
  EXPECT(one.status == 0);
  EXPECT(json::parse(one.out).at("spec").at("hexagons") == 5);
  auto sweep = run("spectrum --n 5");
  EXPECT(sweep.status == 0);
  EXPECT(json::parse(sweep.out).at("entries").size() == 3);

  // verify exits 0 with empty counterexample lists; same seed, same bytes.
  auto verify = run("verify --n-max 5 --sample 5 --seed 3");
  EXPECT(verify.status == 0);
  auto vdoc = json::parse(verify.out);
  EXPECT(vdoc.at("reports").size() == 5);
  for (const auto& report : vdoc.at("reports"))
    EXPECT(report.at("counterexamples").empty());
  EXPECT(vdoc.at("sample").at("mismatches") == 0);
  EXPECT(run("verify --n-max 5 --sample 5 --seed 3").out == verify.out);

  // gen-tk rejects k < 2 as a domain error.
  EXPECT(run("gen-tk --k 1").status == 1);

  // Error paths: missing file -> 1, malformed JSON -> 1, usage errors -> 2.
  EXPECT(run("clar --in /tmp/clarkit_cli_missing.json").status == 1);
  std::ofstream("/tmp/clarkit_cli_junk.json") << "{ not json";
  EXPECT(run("clar --in /tmp/clarkit_cli_junk.json").status == 1);
  EXPECT(run("spectrum --n 5 --c 9").status == 1);  // infeasible Clar target
  EXPECT(run("frobnicate").status == 2);
  EXPECT(run("clar").status == 2);  // missing --in
  EXPECT(run("").status == 2);

  // CLAR_KIT_CAPS trims the enumeration reach.
  {
    std::string cmd = std::string("CLAR_KIT_CAPS=60:3 ") + CLAR_KIT_BIN +
                      " enumerate --n 4 2>/dev/null";
    int raw = std::system(cmd.c_str());
    EXPECT(WIFEXITED(raw) && WEXITSTATUS(raw) == 1);
  }

  if (failures == 0) std::cout << "cli_tests: all checks passed\n";
  return failures == 0 ? 0 : 1;
}
