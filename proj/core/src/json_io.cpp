#include "clarkit/json_io.hpp"

#include <fstream>

#include "clarkit/errors.hpp"

namespace clarkit {

namespace {

using nlohmann::json;

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

std::vector<Edge> edges_from_json(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw InvalidArgumentError("edge entries must be [u, v] pairs");
    out.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
  }
  return out;
}

void check_format_tag(const json& j) {
  if (j.contains("format") && j.at("format") != kFormatTag)
    throw InvalidArgumentError("unsupported format tag: " +
                               j.at("format").get<std::string>());
}

}  // namespace

json tree_to_json(const SubcubicTree& tree) {
  return json{{"n", tree.node_count()}, {"edges", edges_to_json(tree.edges())}};
}

SubcubicTree tree_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw InvalidArgumentError("tree JSON needs \"n\" and \"edges\"");
  return SubcubicTree(j.at("n").get<int>(), edges_from_json(j.at("edges")));
}

json spec_to_json(const BenzenoidSpec& spec) {
  json attachments = json::array();
  for (const auto& a : spec.attachments)
    attachments.push_back({{"parent", a.parent}, {"child", a.child}, {"side", a.side}});
  return json{{"format", kFormatTag},
              {"hexagons", spec.hexagons},
              {"attachments", attachments}};
}

BenzenoidSpec spec_from_json(const json& j) {
  check_format_tag(j);
  if (!j.contains("hexagons") || !j.contains("attachments"))
    throw InvalidArgumentError("spec JSON needs \"hexagons\" and \"attachments\"");
  BenzenoidSpec spec;
  spec.hexagons = j.at("hexagons").get<int>();
  for (const auto& a : j.at("attachments"))
    spec.attachments.push_back({a.at("parent").get<int>(), a.at("child").get<int>(),
                                a.at("side").get<int>()});
  spec.validate();
  return spec;
}

json graph_to_json(const BenzenoidGraph& graph) {
  json vertices = json::array();
  for (int v = 0; v < graph.vertex_count(); ++v) vertices.push_back(v);
  json hexagons = json::array();
  for (const auto& hex : graph.hexagons()) hexagons.push_back(hex);
  json adjacency = json::array();
  for (const auto& [a, b] : graph.hexagon_adjacency()) adjacency.push_back({a, b});
  return json{{"format", kFormatTag},
              {"vertices", vertices},
              {"edges", edges_to_json(graph.edges())},
              {"hexagons", hexagons},
              {"hexagon_adjacency", adjacency}};
}

BenzenoidGraph graph_from_json(const json& j) {
  check_format_tag(j);
  if (!j.contains("vertices") || !j.contains("edges") || !j.contains("hexagons"))
    throw InvalidArgumentError(
        "graph JSON needs \"vertices\", \"edges\" and \"hexagons\"");
  std::vector<std::array<int, 6>> hexagons;
  for (const auto& hex : j.at("hexagons")) {
    if (!hex.is_array() || hex.size() != 6)
      throw InvalidArgumentError("hexagons must be 6-tuples of vertex ids");
    std::array<int, 6> tuple{};
    for (int c = 0; c < 6; ++c) tuple[c] = hex[c].get<int>();
    hexagons.push_back(tuple);
  }
  return BenzenoidGraph::from_parts(static_cast<int>(j.at("vertices").size()),
                                    edges_from_json(j.at("edges")), std::move(hexagons));
}

json matching_to_json(const PerfectMatching& m) {
  return json{{"edges", edges_to_json(m.edges)}};
}

PerfectMatching matching_from_json(const json& j) {
  if (!j.contains("edges")) throw InvalidArgumentError("matching JSON needs \"edges\"");
  return PerfectMatching{edges_from_json(j.at("edges"))};
}

json certificate_to_json(const ClarCertificate& cert) {
  return json{{"value", cert.value},
              {"clar_set", cert.clar_set},
              {"witness", matching_to_json(cert.witness)}};
}

ClarCertificate certificate_from_json(const json& j) {
  if (!j.contains("value") || !j.contains("clar_set") || !j.contains("witness"))
    throw InvalidArgumentError(
        "certificate JSON needs \"value\", \"clar_set\" and \"witness\"");
  ClarCertificate cert;
  cert.value = j.at("value").get<int>();
  cert.clar_set = j.at("clar_set").get<std::vector<int>>();
  cert.witness = matching_from_json(j.at("witness"));
  return cert;
}

json bound_info_to_json(const ClarBoundInfo& info) {
  return json{{"n", info.hexagon_count},
              {"tree_alpha", info.tree_alpha},
              {"formula_bound", info.formula_bound},
              {"bound", info.bound}};
}

json witness_to_json(const FamilyBWitness& witness) {
  switch (witness.kind) {
    case FamilyBWitness::Kind::BaseSmall:
      return json{{"kind", "base_small"}, {"hexagons", witness.base_hexagons}};
    case FamilyBWitness::Kind::BaseTk:
      return json{{"kind", "base_tk"},
                  {"k", witness.tk ? witness.tk->k : 0},
                  {"angular_hexagons",
                   {witness.angular_hexagons.first, witness.angular_hexagons.second}}};
    case FamilyBWitness::Kind::Glued:
      return json{{"kind", "glued"},
                  {"identified_edge",
                   {witness.identified_edge.first, witness.identified_edge.second}},
                  {"added_hexagons", witness.added_hexagons},
                  {"parent", witness.parent ? witness_to_json(*witness.parent) : json()}};
  }
  return {};
}

json report_to_json(const VerificationReport& report) {
  json counterexamples = json::array();
  for (const auto& cx : report.counterexamples)
    counterexamples.push_back({{"spec", spec_to_json(cx.spec)},
                               {"clar", cx.clar},
                               {"bound", cx.bound},
                               {"family_member", cx.family_member}});
  return json{{"n", report.n},
              {"total", report.total},
              {"extremal", report.extremal},
              {"counterexamples", counterexamples}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("malformed JSON in " + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace clarkit
