#include <doctest.h>

#include <algorithm>

#include "clarkit/caps.hpp"
#include "clarkit/errors.hpp"
#include "clarkit/extremal.hpp"
#include "clarkit/json_io.hpp"
#include "clarkit/render.hpp"
#include "clarkit/tk_family.hpp"

using namespace clarkit;
using nlohmann::json;

TEST_CASE("tree JSON round-trip") {
  auto tree = make_tk(3);
  auto j = tree_to_json(tree);
  auto back = tree_from_json(j);
  CHECK(back.node_count() == tree.node_count());
  CHECK(back.edges() == tree.edges());
  CHECK_THROWS_AS(tree_from_json(json{{"n", 2}}), InvalidArgumentError);
}

TEST_CASE("spec JSON round-trip and format tag") {
  auto spec = tk_benzenoid_spec(3);
  auto j = spec_to_json(spec);
  CHECK(j.at("format") == "clar-kit/1");
  CHECK(spec_from_json(j) == spec);

  auto bad = j;
  bad["format"] = "clar-kit/9";
  CHECK_THROWS_AS(spec_from_json(bad), InvalidArgumentError);

  auto untagged = j;
  untagged.erase("format");
  CHECK(spec_from_json(untagged) == spec);

  // Malformed spec content is rejected by validation.
  json broken{{"hexagons", 2}, {"attachments", json::array()}};
  CHECK_THROWS_AS(spec_from_json(broken), InvalidSpecError);
}

TEST_CASE("graph JSON export loads back as the same structure") {
  auto g = BenzenoidGraph::build(tk_benzenoid_spec(2));
  auto j = graph_to_json(g);
  CHECK(j.at("vertices").size() == static_cast<size_t>(g.vertex_count()));
  auto back = graph_from_json(j);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
  CHECK(back.hexagons() == g.hexagons());
  CHECK(back.hexagon_adjacency() == g.hexagon_adjacency());
}

TEST_CASE("certificate and matching JSON round-trip") {
  auto g = BenzenoidGraph::build(BenzenoidSpec{3, {{0, 1, 0}, {1, 2, 2}}});
  auto cert = clar_number(g);
  auto back = certificate_from_json(certificate_to_json(cert));
  CHECK(back.value == cert.value);
  CHECK(back.clar_set == cert.clar_set);
  CHECK(back.witness == cert.witness);
  CHECK_NOTHROW(check_certificate(g, back));
}

TEST_CASE("witness and report serialization shapes") {
  auto g = BenzenoidGraph::build(
      BenzenoidSpec{5, {{0, 1, 0}, {1, 2, 3}, {2, 3, 2}, {2, 4, 4}}});
  auto witness = is_in_family_b(g);
  REQUIRE(witness.has_value());
  auto j = witness_to_json(*witness);
  CHECK(j.at("kind") == "glued");
  CHECK(j.at("parent").at("kind") == "base_small");

  auto report = verify_main_theorem(3);
  auto rj = report_to_json(report);
  CHECK(rj.at("n") == 3);
  CHECK(rj.at("total") == 2);
  CHECK(rj.at("extremal") == 1);
  CHECK(rj.at("counterexamples").empty());
}

TEST_CASE("serialized keys are lexicographically ordered and byte-stable") {
  auto g = BenzenoidGraph::build(single_hexagon_spec());
  auto cert = clar_number(g);
  auto dump1 = certificate_to_json(cert).dump(2);
  auto dump2 = certificate_to_json(clar_number(g)).dump(2);
  CHECK(dump1 == dump2);
  CHECK(dump1.find("\"clar_set\"") < dump1.find("\"value\""));
  CHECK(dump1.find("\"value\"") < dump1.find("\"witness\""));
}

TEST_CASE("render_ascii draws circles and matched edges") {
  auto g = BenzenoidGraph::build(single_hexagon_spec());
  auto cert = clar_number(g);
  auto art = render_ascii(g, &cert);
  CHECK(std::count(art.begin(), art.end(), '(') == 1);
  CHECK(std::count(art.begin(), art.end(), ')') == 1);
  // Three matched edges: horizontals as '==', slants as '%'.
  CHECK(std::count(art.begin(), art.end(), '=') + std::count(art.begin(), art.end(), '%') >=
        3);

  auto plain = render_ascii(g);
  CHECK(plain.find('(') == std::string::npos);
  CHECK(plain.find('0') != std::string::npos);  // hexagon id label
}

TEST_CASE("render_ascii circles every Clar hexagon of the T_3 shape") {
  auto g = BenzenoidGraph::build(tk_benzenoid_spec(3));
  auto cert = clar_number(g);
  REQUIRE(cert.value == 5);
  auto art = render_ascii(g, &cert);
  CHECK(std::count(art.begin(), art.end(), '(') == 5);
}

TEST_CASE("render_ascii falls back to the dualist tree on helicenic overlap") {
  BenzenoidSpec helix{6, {}};
  helix.attachments.push_back({0, 1, 0});
  for (int h = 2; h < 6; ++h) helix.attachments.push_back({h - 1, h, 2});
  auto g = BenzenoidGraph::build(helix);
  REQUIRE(g.has_lattice_overlap());
  auto art = render_ascii(g);
  CHECK(art.find("dualist tree") != std::string::npos);
  CHECK(art.find("h5") != std::string::npos);
}

TEST_CASE("caps_from_env parses overrides") {
  unsetenv("CLAR_KIT_CAPS");
  auto caps = caps_from_env();
  CHECK(caps.matching_vertices == 60);
  CHECK(caps.enumeration_hexagons == 8);

  setenv("CLAR_KIT_CAPS", "40:6", 1);
  caps = caps_from_env();
  CHECK(caps.matching_vertices == 40);
  CHECK(caps.enumeration_hexagons == 6);

  setenv("CLAR_KIT_CAPS", "nonsense", 1);
  CHECK_THROWS_AS(caps_from_env(), InvalidArgumentError);
  unsetenv("CLAR_KIT_CAPS");
}

TEST_CASE("load_json_file error paths") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), Error);
}
