#include "clarkit/render.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace clarkit {

const char* hexagon_kind_name(HexagonKind kind) {
  switch (kind) {
    case HexagonKind::Terminal: return "terminal";
    case HexagonKind::Linear: return "linear";
    case HexagonKind::Angular: return "angular";
    case HexagonKind::Branching: return "branching";
  }
  return "?";
}

namespace {

std::string render_tree_fallback(const BenzenoidGraph& graph,
                                 const std::set<int>& clar_set) {
  std::vector<std::vector<int>> children(graph.hexagon_count());
  std::vector<int> order{0};
  std::vector<bool> seen(graph.hexagon_count(), false);
  seen[0] = true;
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : graph.hexagon_neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = true;
        children[order[i]].push_back(w);
        order.push_back(w);
      }

  auto label = [&](int h) {
    return "h" + std::to_string(h) + " [" +
           hexagon_kind_name(hexagon_kind(graph, h)) + "]" +
           (clar_set.count(h) ? " *" : "");
  };

  std::string out = "dualist tree (hex sketch unavailable)\n" + label(0) + "\n";
  auto print = [&](auto&& self, int h, const std::string& indent) -> void {
    for (size_t i = 0; i < children[h].size(); ++i) {
      int c = children[h][i];
      bool last = i + 1 == children[h].size();
      out += indent + (last ? "`- " : "|- ") + label(c) + "\n";
      self(self, c, indent + (last ? "   " : "|  "));
    }
  };
  print(print, 0, "");
  return out;
}

}  // namespace

std::string render_ascii(const BenzenoidGraph& graph, const ClarCertificate* cert) {
  std::set<int> clar_set;
  std::set<Edge> matched;
  if (cert) {
    clar_set.insert(cert->clar_set.begin(), cert->clar_set.end());
    matched.insert(cert->witness.edges.begin(), cert->witness.edges.end());
  }

  if (!graph.has_placements() || graph.has_lattice_overlap())
    return render_tree_fallback(graph, clar_set);

  // Brick-grid anchor of each hexagon; the glyph spans 3 rows x 4 columns
  // and shares border cells with its neighbors.
  int min_row = 0, max_row = 0, min_col = 0, max_col = 0;
  std::vector<std::pair<int, int>> anchor(graph.hexagon_count());
  for (int h = 0; h < graph.hexagon_count(); ++h) {
    const auto& pl = graph.placements()[h];
    anchor[h] = {pl.x, pl.x + 2 * pl.y};
    min_row = std::min(min_row, anchor[h].first);
    max_row = std::max(max_row, anchor[h].first);
    min_col = std::min(min_col, anchor[h].second);
    max_col = std::max(max_col, anchor[h].second);
  }

  int rows = max_row - min_row + 3;
  int cols = max_col - min_col + 4;
  std::vector<std::string> canvas(rows, std::string(cols, ' '));

  auto draw_side = [&](int h, int side, bool matched_edge) {
    auto [r, c] = anchor[h];
    r -= min_row;
    c -= min_col;
    int dir = (graph.placements()[h].orientation + side) % 6;
    char slant = matched_edge ? '%' : 0;
    switch (dir) {
      case 2:  // N
        canvas[r][c + 1] = matched_edge ? '=' : '_';
        canvas[r][c + 2] = matched_edge ? '=' : '_';
        break;
      case 5:  // S
        canvas[r + 2][c + 1] = matched_edge ? '=' : '_';
        canvas[r + 2][c + 2] = matched_edge ? '=' : '_';
        break;
      case 1:  // NE
        canvas[r + 1][c + 3] = slant ? slant : '\\';
        break;
      case 0:  // SE
        canvas[r + 2][c + 3] = slant ? slant : '/';
        break;
      case 3:  // NW
        canvas[r + 1][c] = slant ? slant : '/';
        break;
      case 4:  // SW
        canvas[r + 2][c] = slant ? slant : '\\';
        break;
    }
  };

  for (int pass = 0; pass < 2; ++pass)
    for (int h = 0; h < graph.hexagon_count(); ++h)
      for (int side = 0; side < 6; ++side) {
        bool is_matched = matched.count(graph.side_edge(h, side)) > 0;
        if ((pass == 1) == is_matched) draw_side(h, side, is_matched);
      }

  for (int h = 0; h < graph.hexagon_count(); ++h) {
    auto [r, c] = anchor[h];
    r -= min_row;
    c -= min_col;
    if (clar_set.count(h)) {
      canvas[r + 1][c + 1] = '(';
      canvas[r + 1][c + 2] = ')';
    } else if (h < 100) {
      std::string label = std::to_string(h);
      canvas[r + 1][c + 2] = label.back();
      if (label.size() == 2) canvas[r + 1][c + 1] = label.front();
    }
  }

  std::string out;
  for (auto& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += "\n";
  }
  return out;
}

}  // namespace clarkit
