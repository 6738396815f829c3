// clar-kit: build catacondensed benzenoids from dualist-tree specs, compute
// exact Clar numbers with certificates, and generate/verify the extremal
// structures around the floor((2n+1)/3) bound.

#include <functional>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "clarkit/caps.hpp"
#include "clarkit/clar.hpp"
#include "clarkit/errors.hpp"
#include "clarkit/extremal.hpp"
#include "clarkit/json_io.hpp"
#include "clarkit/render.hpp"
#include "clarkit/tk_family.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string in_path;
  std::string out_path;
  int k = 2;
  int n = 1;
  int c = -1;
  bool c_given = false;
  int n_max = 5;
  int sample = 0;
  unsigned seed = 0;
  bool ascii = false;
};

void emit(const Options& opt, const json& doc, const std::string& ascii_art) {
  if (!opt.out_path.empty()) clarkit::save_json_file(opt.out_path, doc);
  if (opt.ascii)
    std::cout << ascii_art;
  else if (opt.out_path.empty())
    std::cout << doc.dump(2) << "\n";
}

clarkit::BenzenoidGraph load_graph(const Options& opt) {
  auto spec = clarkit::spec_from_json(clarkit::load_json_file(opt.in_path));
  return clarkit::BenzenoidGraph::build(spec);
}

int run_build(const Options& opt) {
  auto graph = load_graph(opt);
  emit(opt, clarkit::graph_to_json(graph), clarkit::render_ascii(graph));
  return 0;
}

int run_clar(const Options& opt) {
  auto graph = load_graph(opt);
  auto cert = clarkit::clar_number(graph);
  emit(opt, clarkit::certificate_to_json(cert), clarkit::render_ascii(graph, &cert));
  return 0;
}

int run_bound(const Options& opt) {
  auto graph = load_graph(opt);
  emit(opt, clarkit::bound_info_to_json(clarkit::clar_bound_info(graph)), "");
  return 0;
}

int run_gen_tk(const Options& opt) {
  emit(opt, clarkit::tree_to_json(clarkit::make_tk(opt.k)), "");
  return 0;
}

int run_gen_family_b(const Options& opt) {
  auto members = clarkit::gen_family_b(opt.n);
  json specs = json::array();
  for (const auto& spec : members) specs.push_back(clarkit::spec_to_json(spec));
  emit(opt,
       json{{"hexagons", opt.n},
            {"count", members.size()},
            {"specs", specs}},
       "");
  return 0;
}

int run_enumerate(const Options& opt) {
  auto caps = clarkit::caps_from_env();
  auto specs = clarkit::enumerate_catacondensed(opt.n, caps.enumeration_hexagons);
  json out = json::array();
  for (const auto& spec : specs) out.push_back(clarkit::spec_to_json(spec));
  emit(opt, json{{"hexagons", opt.n}, {"count", specs.size()}, {"specs", out}}, "");
  return 0;
}

int run_spectrum(const Options& opt) {
  if (opt.c_given) {
    auto spec = clarkit::construct_with_clar(opt.n, opt.c);
    emit(opt, json{{"c", opt.c}, {"hexagons", opt.n}, {"spec", clarkit::spec_to_json(spec)}},
         "");
    return 0;
  }
  json entries = json::array();
  for (int c = 1; c <= clarkit::independence_bound(opt.n); ++c)
    entries.push_back(
        {{"c", c}, {"spec", clarkit::spec_to_json(clarkit::construct_with_clar(opt.n, c))}});
  emit(opt, json{{"entries", entries}, {"hexagons", opt.n}}, "");
  return 0;
}

int run_verify(const Options& opt) {
  auto caps = clarkit::caps_from_env();
  json reports = json::array();
  bool clean = true;
  for (int n = 1; n <= opt.n_max; ++n) {
    auto report = clarkit::verify_main_theorem(n, caps.enumeration_hexagons);
    clean = clean && report.counterexamples.empty();
    reports.push_back(clarkit::report_to_json(report));
  }
  json doc{{"reports", reports}};
  if (opt.sample > 0) {
    std::mt19937 rng(opt.seed);
    int mismatches = 0;
    for (int i = 0; i < opt.sample; ++i) {
      int hexes = 7 + static_cast<int>(rng() % 2);
      auto spec = clarkit::random_catacondensed_spec(hexes, rng);
      auto graph = clarkit::BenzenoidGraph::build(spec);
      auto fast = clarkit::clar_number(graph);
      auto brute = clarkit::clar_number_bruteforce(graph, caps.matching_vertices);
      if (fast.value != brute.value) ++mismatches;
    }
    clean = clean && mismatches == 0;
    doc["sample"] = json{{"count", opt.sample},
                         {"seed", opt.seed},
                         {"mismatches", mismatches}};
  }
  emit(opt, doc, "");
  return clean ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Clar numbers and extremal families for catacondensed benzenoids"};
  app.require_subcommand(1);
  Options opt;

  std::function<int()> action;
  auto add_io = [&](CLI::App* cmd, bool with_ascii) {
    cmd->add_option("--in", opt.in_path, "input spec JSON")->required();
    cmd->add_option("--out", opt.out_path, "write JSON here instead of stdout");
    if (with_ascii) cmd->add_flag("--ascii", opt.ascii, "print a hex-grid sketch");
  };

  auto* build = app.add_subcommand("build", "realize a spec as a benzenoid graph");
  add_io(build, true);
  build->callback([&] { action = [&] { return run_build(opt); }; });

  auto* clar = app.add_subcommand("clar", "Clar number with certificate");
  add_io(clar, true);
  clar->callback([&] { action = [&] { return run_clar(opt); }; });

  auto* bound = app.add_subcommand("bound", "dualist-tree Clar upper bound");
  add_io(bound, false);
  bound->callback([&] { action = [&] { return run_bound(opt); }; });

  auto* gen_tk = app.add_subcommand("gen-tk", "extremal subcubic tree T_k as tree JSON");
  gen_tk->add_option("--k", opt.k, "index k >= 2")->required();
  gen_tk->add_option("--out", opt.out_path, "write JSON here instead of stdout");
  gen_tk->callback([&] { action = [&] { return run_gen_tk(opt); }; });

  auto* gen_b = app.add_subcommand("gen-family-b",
                                   "all extremal family members with n hexagons");
  gen_b->add_option("--n", opt.n, "hexagon count")->required();
  gen_b->add_option("--out", opt.out_path, "write JSON here instead of stdout");
  gen_b->callback([&] { action = [&] { return run_gen_family_b(opt); }; });

  auto* enumerate = app.add_subcommand("enumerate",
                                       "all catacondensed specs with n hexagons");
  enumerate->add_option("--n", opt.n, "hexagon count")->required();
  enumerate->add_option("--out", opt.out_path, "write JSON here instead of stdout");
  enumerate->callback([&] { action = [&] { return run_enumerate(opt); }; });

  auto* spectrum = app.add_subcommand(
      "spectrum", "specs with n hexagons and prescribed Clar numbers");
  spectrum->add_option("--n", opt.n, "hexagon count")->required();
  auto* c_option =
      spectrum->add_option("--c", opt.c, "target Clar number (default: every feasible value)");
  spectrum->add_option("--out", opt.out_path, "write JSON here instead of stdout");
  spectrum->callback([&, c_option] {
    opt.c_given = c_option->count() > 0;
    action = [&] { return run_spectrum(opt); };
  });

  auto* verify = app.add_subcommand(
      "verify", "exhaustive bound/extremality check up to n-max hexagons");
  verify->add_option("--n-max", opt.n_max, "largest hexagon count to check");
  verify->add_option("--sample", opt.sample,
                     "additional random 7-8 hexagon solver-vs-oracle checks");
  verify->add_option("--seed", opt.seed, "seed for --sample");
  verify->add_option("--out", opt.out_path, "write JSON here instead of stdout");
  verify->callback([&] { action = [&] { return run_verify(opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const clarkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
