#include "bifix/eggbox.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace bifix {

namespace {

std::string show_word(const Word& w) { return w.empty() ? "1" : w; }

std::vector<int> topological_blocks(const GreenData& g) {
  // Kahn over the condensation, ties by class id for determinism
  int nj = g.num_jclasses();
  std::vector<int> indeg(static_cast<size_t>(nj), 0);
  for (int j = 0; j < nj; ++j)
    for (int k : g.j_edges()[static_cast<size_t>(j)]) ++indeg[static_cast<size_t>(k)];
  std::vector<int> ready, order;
  for (int j = 0; j < nj; ++j)
    if (indeg[static_cast<size_t>(j)] == 0) ready.push_back(j);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(),
              [&](int a, int b) { return g.jclass_members(a).front() < g.jclass_members(b).front(); });
    int j = ready.front();
    ready.erase(ready.begin());
    order.push_back(j);
    for (int k : g.j_edges()[static_cast<size_t>(j)])
      if (--indeg[static_cast<size_t>(k)] == 0) ready.push_back(k);
  }
  return order;
}

}  // namespace

EggBoxDiagram egg_box_diagram(const TransitionMonoid& m, const GreenData& g) {
  EggBoxDiagram diagram;
  std::vector<int> order = topological_blocks(g);
  std::map<int, int> block_index;

  for (int j : order) {
    EggBoxBlock block;
    block.jclass = j;
    block.rank = g.jclass_rank(j);
    block.regular = g.regular(j);

    // rows/cols indexed by first-seen order of R-/L-classes over member ids
    std::vector<int> rows, cols;
    auto row_of = [&](int rc) {
      auto it = std::find(rows.begin(), rows.end(), rc);
      if (it == rows.end()) {
        rows.push_back(rc);
        return static_cast<int>(rows.size()) - 1;
      }
      return static_cast<int>(it - rows.begin());
    };
    auto col_of = [&](int lc) {
      auto it = std::find(cols.begin(), cols.end(), lc);
      if (it == cols.end()) {
        cols.push_back(lc);
        return static_cast<int>(cols.size()) - 1;
      }
      return static_cast<int>(it - cols.begin());
    };

    std::vector<int> members = g.jclass_members(j);
    std::sort(members.begin(), members.end());
    std::map<std::pair<int, int>, EggBoxCell> cells;
    for (int id : members) {
      int r = row_of(g.rclass(id));
      int c = col_of(g.lclass(id));
      EggBoxCell& cell = cells[{r, c}];
      cell.witnesses.push_back(m.witness(id));
      if (m.idempotent(id)) cell.idempotent = true;
    }
    block.grid.assign(rows.size(), std::vector<EggBoxCell>(cols.size()));
    for (auto& [rc, cell] : cells) block.grid[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = cell;

    block_index[j] = static_cast<int>(diagram.blocks.size());
    diagram.blocks.push_back(std::move(block));
  }

  for (int j = 0; j < g.num_jclasses(); ++j)
    for (int k : g.j_edges()[static_cast<size_t>(j)])
      diagram.order_pairs.emplace_back(block_index[k], block_index[j]);  // (lower, upper)
  std::sort(diagram.order_pairs.begin(), diagram.order_pairs.end());
  return diagram;
}

std::string egg_box_render(const TransitionMonoid& m, const GreenData& g, EggBoxFormat format) {
  EggBoxDiagram diagram = egg_box_diagram(m, g);

  if (format == EggBoxFormat::Json) {
    nlohmann::json out;
    out["jclasses"] = nlohmann::json::array();
    for (const EggBoxBlock& b : diagram.blocks) {
      nlohmann::json jb;
      jb["rank"] = b.rank;
      jb["regular"] = b.regular;
      nlohmann::json grid = nlohmann::json::array();
      nlohmann::json idem = nlohmann::json::array();
      for (size_t r = 0; r < b.grid.size(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t c = 0; c < b.grid[r].size(); ++c) {
          nlohmann::json cell = nlohmann::json::array();
          for (const Word& w : b.grid[r][c].witnesses) cell.push_back(show_word(w));
          row.push_back(cell);
          if (b.grid[r][c].idempotent) idem.push_back({r, c});
        }
        grid.push_back(row);
      }
      jb["grid"] = grid;
      jb["idempotent_cells"] = idem;
      out["jclasses"].push_back(jb);
    }
    out["jorder"] = nlohmann::json::array();
    for (auto [lo, hi] : diagram.order_pairs) out["jorder"].push_back({lo, hi});
    return out.dump(2);
  }

  if (format == EggBoxFormat::Dot) {
    std::ostringstream os;
    os << "digraph eggbox {\n  rankdir=TB;\n  node [shape=record];\n";
    for (size_t bi = 0; bi < diagram.blocks.size(); ++bi) {
      const EggBoxBlock& b = diagram.blocks[bi];
      os << "  j" << bi << " [label=\"";
      for (size_t r = 0; r < b.grid.size(); ++r) {
        if (r) os << "|";
        os << "{";
        for (size_t c = 0; c < b.grid[r].size(); ++c) {
          if (c) os << "|";
          const EggBoxCell& cell = b.grid[r][c];
          if (cell.idempotent) os << "*";
          for (size_t w = 0; w < cell.witnesses.size(); ++w) {
            if (w) os << "\\n";
            os << show_word(cell.witnesses[w]);
          }
        }
        os << "}";
      }
      os << "\"];\n";
    }
    for (auto [lo, hi] : diagram.order_pairs) os << "  j" << hi << " -> j" << lo << ";\n";
    os << "}\n";
    return os.str();
  }

  // text
  std::ostringstream os;
  for (size_t bi = 0; bi < diagram.blocks.size(); ++bi) {
    const EggBoxBlock& b = diagram.blocks[bi];
    os << "J-class " << bi << " (rank " << b.rank << (b.regular ? ", regular" : "") << ")\n";
    for (const auto& row : b.grid) {
      os << "  ";
      for (size_t c = 0; c < row.size(); ++c) {
        if (c) os << " | ";
        os << "[";
        if (row[c].idempotent) os << "*";
        for (size_t w = 0; w < row[c].witnesses.size(); ++w) {
          if (w) os << " ";
          os << show_word(row[c].witnesses[w]);
        }
        os << "]";
      }
      os << "\n";
    }
  }
  if (!diagram.order_pairs.empty()) {
    os << "order:";
    for (auto [lo, hi] : diagram.order_pairs) os << " " << hi << ">" << lo;
    os << "\n";
  }
  return os.str();
}

}  // namespace bifix
