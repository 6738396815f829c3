#include "clarkit/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "clarkit/errors.hpp"
#include "clarkit/matching.hpp"

namespace clarkit {

std::optional<std::pair<TkDescriptor, std::pair<int, int>>> tk_extremal_check(
    const BenzenoidGraph& graph) {
  auto tree = dualist_tree(graph);
  auto tk = is_tk(tree);
  if (!tk) return std::nullopt;
  int h2 = tk->spine[1];
  int h2k = tk->spine[2 * tk->k - 1];
  if (hexagon_kind(graph, h2) != HexagonKind::Angular ||
      hexagon_kind(graph, h2k) != HexagonKind::Angular)
    return std::nullopt;
  return std::make_pair(*tk, std::make_pair(h2, h2k));
}

namespace {

// Smallest-id hexagon adjacent to at least two terminal hexagons, with the
// two smallest such neighbors; nullopt if none exists.
std::optional<std::array<int, 3>> double_leaf_configuration(const SubcubicTree& tree) {
  for (int v = 0; v < tree.node_count(); ++v) {
    std::vector<int> leaf_neighbors;
    for (int w : tree.neighbors(v))
      if (tree.is_leaf(w)) leaf_neighbors.push_back(w);
    if (leaf_neighbors.size() >= 2)
      return std::array<int, 3>{v, leaf_neighbors[0], leaf_neighbors[1]};
  }
  return std::nullopt;
}

}  // namespace

std::optional<FamilyBWitness> is_in_family_b(const BenzenoidGraph& graph) {
  if (!is_catacondensed(graph)) return std::nullopt;
  int n = graph.hexagon_count();

  if (n <= 2) {
    FamilyBWitness w;
    w.kind = FamilyBWitness::Kind::BaseSmall;
    w.base_hexagons = n;
    return w;
  }

  auto tree = dualist_tree(graph);
  if (n == 3) {
    int middle = -1;
    for (int v = 0; v < 3; ++v)
      if (tree.degree(v) == 2) middle = v;
    if (middle == -1 || hexagon_kind(graph, middle) != HexagonKind::Angular)
      return std::nullopt;
    FamilyBWitness w;
    w.kind = FamilyBWitness::Kind::BaseSmall;
    w.base_hexagons = 3;
    return w;
  }

  if (auto config = double_leaf_configuration(tree)) {
    auto [h1, h2, h3] = *config;
    if (tree.degree(h1) != 3) return std::nullopt;
    int h0 = -1;
    for (int w : tree.neighbors(h1))
      if (w != h2 && w != h3) h0 = w;

    // Inverse of the gluing step: drop the two terminal hexagons; the
    // connecting hexagon h1 loses four vertices and disappears, leaving
    // the fused edge inside h0's hexagon.
    std::optional<HexagonRemoval> removal;
    try {
      removal = remove_hexagons(graph, {h2, h3});
    } catch (const Error&) {
      return std::nullopt;  // removal does not leave a valid benzenoid
    }
    if (removal->graph.hexagon_count() != n - 3) return std::nullopt;
    if (!is_catacondensed(removal->graph)) return std::nullopt;

    auto parent_witness = is_in_family_b(removal->graph);
    if (!parent_witness) return std::nullopt;

    Edge fused_old = graph.common_edge(h1, h0);
    FamilyBWitness w;
    w.kind = FamilyBWitness::Kind::Glued;
    w.identified_edge = make_edge(removal->old_to_new_vertex[fused_old.first],
                                  removal->old_to_new_vertex[fused_old.second]);
    w.added_hexagons = {h1, h2, h3};
    w.parent = std::make_unique<FamilyBWitness>(std::move(*parent_witness));
    return w;
  }

  if (auto tk = tk_extremal_check(graph)) {
    FamilyBWitness w;
    w.kind = FamilyBWitness::Kind::BaseTk;
    w.tk = tk->first;
    w.angular_hexagons = tk->second;
    return w;
  }
  return std::nullopt;
}

namespace {

// Fuses the three-hexagon unit onto slot (h0, side) of the spec: a middle
// hexagon on the fused edge plus its two terminal hexagons at the sides
// two steps away on either hand.
BenzenoidSpec glue_b1_unit(const BenzenoidSpec& spec, int h0, int side) {
  BenzenoidSpec out = spec;
  int middle = out.hexagons;
  out.attachments.push_back({h0, middle, side});
  out.attachments.push_back({middle, middle + 1, 2});
  out.attachments.push_back({middle, middle + 2, 4});
  out.hexagons += 3;
  return out;
}

// All side assignments realizing a T_k dualist tree. Spine hexagons are
// ids 0..2k, extra leaves follow. The root fuses its child at side 0 (the
// frame rotation is quotiented out by canonicalization); a branching spine
// hexagon must use sides {0,2,4}, so only the spine/leaf swap is free.
void tk_geometry_variants(int k, std::vector<BenzenoidSpec>& out) {
  int spine_count = 2 * k + 1;
  std::vector<std::pair<int, int>> choices;  // (position, option count)
  for (int pos = 2; pos <= 2 * k; ++pos) {
    bool branching = pos % 2 == 0 && pos >= 4 && pos <= 2 * k - 2;
    bool flagged = pos == 2 || pos == 2 * k;
    choices.push_back({pos, branching ? 2 : (flagged ? 2 : 3)});
  }

  std::vector<int> pick(choices.size(), 0);
  while (true) {
    BenzenoidSpec spec{3 * k - 1, {}};
    spec.attachments.push_back({0, 1, 0});
    int next_leaf = spine_count;
    for (size_t i = 0; i < choices.size(); ++i) {
      auto [pos, options] = choices[i];
      int hex = pos - 1;
      bool branching = pos % 2 == 0 && pos >= 4 && pos <= 2 * k - 2;
      if (branching) {
        int spine_side = pick[i] == 0 ? 2 : 4;
        spec.attachments.push_back({hex, hex + 1, spine_side});
        spec.attachments.push_back({hex, next_leaf++, 6 - spine_side});
      } else if (pos == 2 || pos == 2 * k) {
        spec.attachments.push_back({hex, hex + 1, pick[i] == 0 ? 2 : 4});
      } else {
        spec.attachments.push_back({hex, hex + 1, 2 + pick[i]});
      }
    }
    out.push_back(std::move(spec));

    size_t carry = 0;
    while (carry < pick.size() && ++pick[carry] == choices[carry].second) {
      pick[carry] = 0;
      ++carry;
    }
    if (carry == pick.size()) break;
  }
}

std::vector<BenzenoidSpec> dedup_by_canonical_code(std::vector<BenzenoidSpec> specs) {
  std::map<std::string, BenzenoidSpec> by_code;
  for (auto& spec : specs) by_code.try_emplace(spec.canonical_code(), std::move(spec));
  std::vector<BenzenoidSpec> out;
  out.reserve(by_code.size());
  for (auto& [code, spec] : by_code) out.push_back(std::move(spec));
  return out;
}

}  // namespace

std::vector<BenzenoidSpec> gen_family_b(int n, int cap) {
  if (n < 1) throw InvalidArgumentError("hexagon count must be positive");
  if (n > cap)
    throw ResourceLimitError("gen_family_b: n = " + std::to_string(n) + ", cap is " +
                             std::to_string(cap));

  std::vector<BenzenoidSpec> raw;
  if (n == 1) raw.push_back(single_hexagon_spec());
  if (n == 2) raw.push_back(linear_chain_spec(2));
  if (n == 3) {
    BenzenoidSpec b1{3, {{0, 1, 0}, {1, 2, 2}}};
    raw.push_back(std::move(b1));
  }
  if (n >= 5 && (n + 1) % 3 == 0) tk_geometry_variants((n + 1) / 3, raw);
  if (n - 3 >= 1) {
    for (const auto& smaller : gen_family_b(n - 3, cap)) {
      auto graph = BenzenoidGraph::build(smaller);
      for (auto [h0, side] : free_side_slots(graph))
        raw.push_back(glue_b1_unit(smaller, h0, side));
    }
  }
  return dedup_by_canonical_code(std::move(raw));
}

BenzenoidGraph append_linear_chain(const BenzenoidGraph& graph, int h0, int k) {
  if (k < 1) throw InvalidArgumentError("append_linear_chain requires k >= 1");
  if (h0 < 0 || h0 >= graph.hexagon_count())
    throw InvalidArgumentError("hexagon id out of range");
  if (graph.hexagon_neighbors(h0).size() > 1)
    throw InvalidArgumentError(
        "append_linear_chain: hexagon is adjacent to more than one other hexagon");
  if (!graph.source_spec())
    throw InvalidArgumentError("append_linear_chain requires a spec-built graph");

  BenzenoidSpec spec = *graph.source_spec();
  auto used = spec.used_sides();
  int straight = 0;
  for (int s = 0; s < 6; ++s)
    if (used[h0][s]) straight = (s + 3) % 6;

  int prev = h0;
  int side = straight;
  for (int i = 0; i < k; ++i) {
    int fresh = spec.hexagons + i;
    spec.attachments.push_back({prev, fresh, side});
    prev = fresh;
    side = 3;
  }
  spec.hexagons += k;
  return BenzenoidGraph::build(spec);
}

BenzenoidSpec tk_benzenoid_spec(int k) {
  if (k < 2) throw InvalidArgumentError("tk_benzenoid_spec requires k >= 2");
  BenzenoidSpec spec{3 * k - 1, {}};
  spec.attachments.push_back({0, 1, 0});
  int next_leaf = 2 * k + 1;
  for (int pos = 2; pos <= 2 * k; ++pos) {
    int hex = pos - 1;
    bool branching = pos % 2 == 0 && pos >= 4 && pos <= 2 * k - 2;
    if (branching) {
      spec.attachments.push_back({hex, hex + 1, 2});
      spec.attachments.push_back({hex, next_leaf++, 4});
    } else if (pos == 2 || pos == 2 * k) {
      spec.attachments.push_back({hex, hex + 1, 2});  // angular
    } else {
      spec.attachments.push_back({hex, hex + 1, 3});  // linear
    }
  }
  return spec;
}

BenzenoidSpec canonical_family_b_member(int n) {
  if (n < 1) throw InvalidArgumentError("hexagon count must be positive");
  if (n == 1) return single_hexagon_spec();
  if (n == 2) return linear_chain_spec(2);
  if (n % 3 == 2) return tk_benzenoid_spec((n + 1) / 3);

  BenzenoidSpec spec =
      n % 3 == 1 ? single_hexagon_spec() : BenzenoidSpec{3, {{0, 1, 0}, {1, 2, 2}}};
  while (spec.hexagons < n) {
    auto graph = BenzenoidGraph::build(spec);
    auto slots = free_side_slots(graph);
    spec = glue_b1_unit(spec, slots.front().first, slots.front().second);
  }
  return spec;
}

BenzenoidSpec construct_with_clar(int n, int c) {
  if (n < 1) throw InvalidArgumentError("hexagon count must be positive");
  if (c < 1 || c > independence_bound(n))
    throw InvalidArgumentError("Clar number " + std::to_string(c) +
                               " is outside 1.." +
                               std::to_string(independence_bound(n)) + " for " +
                               std::to_string(n) + " hexagons");
  if (c == independence_bound(n)) return canonical_family_b_member(n);

  int core = (3 * c) / 2;  // ceil((3c - 1) / 2): smallest n' with bound(n') == c
  auto graph = BenzenoidGraph::build(canonical_family_b_member(core));
  int h0 = -1;
  for (int h = 0; h < graph.hexagon_count() && h0 == -1; ++h)
    if (graph.hexagon_neighbors(h).size() <= 1) h0 = h;
  auto extended = append_linear_chain(graph, h0, n - core);
  return *extended.source_spec();
}

std::vector<BenzenoidSpec> enumerate_catacondensed(int n, int cap) {
  if (n < 1) throw InvalidArgumentError("hexagon count must be positive");
  if (n > cap)
    throw ResourceLimitError("enumerate_catacondensed: n = " + std::to_string(n) +
                             ", cap is " + std::to_string(cap));

  std::vector<BenzenoidSpec> level{single_hexagon_spec()};
  for (int size = 2; size <= n; ++size) {
    std::vector<BenzenoidSpec> grown;
    for (const auto& spec : level) {
      auto graph = BenzenoidGraph::build(spec);
      for (auto [h, side] : free_side_slots(graph)) {
        BenzenoidSpec extended = spec;
        extended.attachments.push_back({h, extended.hexagons, side});
        ++extended.hexagons;
        grown.push_back(std::move(extended));
      }
    }
    level = dedup_by_canonical_code(std::move(grown));
  }
  return level;
}

BenzenoidSpec random_catacondensed_spec(int n, std::mt19937& rng) {
  if (n < 1) throw InvalidArgumentError("hexagon count must be positive");
  BenzenoidSpec spec = single_hexagon_spec();
  for (int size = 2; size <= n; ++size) {
    auto graph = BenzenoidGraph::build(spec);
    auto slots = free_side_slots(graph);
    std::uniform_int_distribution<size_t> pick(0, slots.size() - 1);
    auto [h, side] = slots[pick(rng)];
    spec.attachments.push_back({h, spec.hexagons, side});
    ++spec.hexagons;
  }
  return spec;
}

VerificationReport verify_main_theorem(int n, int cap) {
  VerificationReport report;
  report.n = n;
  int bound = independence_bound(n);
  auto specs = enumerate_catacondensed(n, cap);
  report.total = static_cast<int>(specs.size());
  for (const auto& spec : specs) {
    auto graph = BenzenoidGraph::build(spec);
    int clar = clar_number(graph).value;
    bool member = is_in_family_b(graph).has_value();
    bool attains = clar == bound;
    if (attains) ++report.extremal;
    if (clar > bound || attains != member)
      report.counterexamples.push_back({spec, clar, bound, member});
  }
  return report;
}

}  // namespace clarkit
