#include "bifix/freegroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bifix {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<size_t>(x)] = y;
  }
};

}  // namespace

bool StallingsGraph::folded() const {
  std::set<std::pair<int, char>> outs, ins;
  for (auto [u, c, v] : edges) {
    if (!outs.insert({u, c}).second) return false;
    if (!ins.insert({v, c}).second) return false;
  }
  return true;
}

StallingsGraph fold(const std::vector<Word>& words, const Alphabet& alphabet) {
  // wedge of loops
  int next = 1;
  std::vector<std::tuple<int, char, int>> edges;
  for (const Word& w : words) {
    alphabet.check_word(w);
    if (w.empty()) continue;
    int cur = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      int tgt = (i + 1 == w.size()) ? 0 : next++;
      edges.emplace_back(cur, w[i], tgt);
      cur = tgt;
    }
  }

  UnionFind uf(next);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, char>, int> outs, ins;
    for (auto [u, c, v] : edges) {
      int fu = uf.find(u), fv = uf.find(v);
      auto oit = outs.find({fu, c});
      if (oit != outs.end() && uf.find(oit->second) != fv) {
        uf.unite(oit->second, fv);
        changed = true;
        break;
      }
      outs[{fu, c}] = fv;
      auto iit = ins.find({fv, c});
      if (iit != ins.end() && uf.find(iit->second) != fu) {
        uf.unite(iit->second, fu);
        changed = true;
        break;
      }
      ins[{fv, c}] = fu;
    }
  }

  // collapse to representatives, renumber with basepoint first
  std::set<std::tuple<int, char, int>> folded_edges;
  for (auto [u, c, v] : edges) folded_edges.insert({uf.find(u), c, uf.find(v)});
  std::map<int, int> renum;
  renum[uf.find(0)] = 0;
  for (auto [u, c, v] : folded_edges) {
    if (!renum.count(u)) renum[u] = static_cast<int>(renum.size());
    if (!renum.count(v)) renum[v] = static_cast<int>(renum.size());
  }
  StallingsGraph g;
  g.alphabet = alphabet;
  g.basepoint = 0;
  g.vertices = static_cast<int>(renum.size());
  for (auto [u, c, v] : folded_edges) g.edges.emplace_back(renum[u], c, renum[v]);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool generates_full_group(const StallingsGraph& g) {
  if (g.vertices != 1) return false;
  if (static_cast<int>(g.edges.size()) != g.alphabet.size()) return false;
  std::set<char> loops;
  for (auto [u, c, v] : g.edges) {
    if (u != g.basepoint || v != g.basepoint) return false;
    loops.insert(c);
  }
  return static_cast<int>(loops.size()) == g.alphabet.size();
}

std::optional<int> subgroup_index(const StallingsGraph& g) {
  std::set<std::pair<int, char>> outs;
  for (auto [u, c, v] : g.edges) outs.insert({u, c});
  for (int v = 0; v < g.vertices; ++v)
    for (int a = 0; a < g.alphabet.size(); ++a)
      if (!outs.count({v, g.alphabet.letter(a)})) return std::nullopt;
  return g.vertices;
}

}  // namespace bifix
