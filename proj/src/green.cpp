#include "bifix/green.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace bifix {

namespace {

// Iterative Tarjan SCC. neighbors(v, out) pushes successors of v.
template <typename Neighbors>
std::pair<std::vector<int>, int> tarjan_scc(size_t n, Neighbors neighbors) {
  std::vector<int> comp(n, -1), low(n), disc(n, -1), stack_mem;
  std::vector<bool> on_stack(n, false);
  int timer = 0, ncomp = 0;

  struct Frame {
    int v;
    size_t child;
  };
  std::vector<int> succ;
  std::vector<std::vector<int>> succs_of;  // lazily filled adjacency, index by node
  succs_of.resize(n);
  std::vector<bool> succ_ready(n, false);
  auto get_succ = [&](int v) -> const std::vector<int>& {
    if (!succ_ready[static_cast<size_t>(v)]) {
      neighbors(v, succs_of[static_cast<size_t>(v)]);
      succ_ready[static_cast<size_t>(v)] = true;
    }
    return succs_of[static_cast<size_t>(v)];
  };

  std::vector<Frame> frames;
  for (size_t root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    frames.push_back({static_cast<int>(root), 0});
    disc[root] = low[root] = timer++;
    stack_mem.push_back(static_cast<int>(root));
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& succ_list = get_succ(f.v);
      if (f.child < succ_list.size()) {
        int w = succ_list[f.child++];
        if (disc[static_cast<size_t>(w)] == -1) {
          disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
          stack_mem.push_back(w);
          on_stack[static_cast<size_t>(w)] = true;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<size_t>(w)]) {
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[static_cast<size_t>(frames.back().v)] =
              std::min(low[static_cast<size_t>(frames.back().v)], low[static_cast<size_t>(v)]);
        if (low[static_cast<size_t>(v)] == disc[static_cast<size_t>(v)]) {
          while (true) {
            int w = stack_mem.back();
            stack_mem.pop_back();
            on_stack[static_cast<size_t>(w)] = false;
            comp[static_cast<size_t>(w)] = ncomp;
            if (w == v) break;
          }
          ++ncomp;
        }
      }
    }
  }
  return {comp, ncomp};
}

}  // namespace

GreenData::GreenData(const TransitionMonoid& m) : m_(m) {
  size_t n = m.size();
  int na = m.automaton().alphabet().size();

  auto right_nb = [&](int v, std::vector<int>& out) {
    for (int a = 0; a < na; ++a) {
      int w = m.right_step(v, a);
      if (w != v) out.push_back(w);
    }
  };
  auto left_nb = [&](int v, std::vector<int>& out) {
    for (int a = 0; a < na; ++a) {
      int w = m.left_step(v, a);
      if (w != v) out.push_back(w);
    }
  };
  auto both_nb = [&](int v, std::vector<int>& out) {
    right_nb(v, out);
    left_nb(v, out);
  };

  std::tie(rclass_, num_r_) = tarjan_scc(n, right_nb);
  std::tie(lclass_, num_l_) = tarjan_scc(n, left_nb);
  std::tie(jclass_, num_j_) = tarjan_scc(n, both_nb);

  jmembers_.assign(static_cast<size_t>(num_j_), {});
  for (size_t id = 0; id < n; ++id)
    jmembers_[static_cast<size_t>(jclass_[id])].push_back(static_cast<int>(id));

  regular_.assign(static_cast<size_t>(num_j_), false);
  for (size_t id = 0; id < n; ++id)
    if (m.idempotent(static_cast<int>(id))) {
      idempotents_.push_back(static_cast<int>(id));
      regular_[static_cast<size_t>(jclass_[id])] = true;
    }

  // condensation edges (deduplicated)
  jedges_.assign(static_cast<size_t>(num_j_), {});
  {
    std::vector<std::pair<int, int>> pairs;
    for (size_t id = 0; id < n; ++id) {
      int cj = jclass_[id];
      for (int a = 0; a < na; ++a) {
        for (int w : {m.right_step(static_cast<int>(id), a), m.left_step(static_cast<int>(id), a)}) {
          int wj = jclass_[static_cast<size_t>(w)];
          if (wj != cj) pairs.emplace_back(cj, wj);
        }
      }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (auto [cj, wj] : pairs) jedges_[static_cast<size_t>(cj)].push_back(wj);
  }

  // the minimum ideal is the unique class with no outgoing condensation edge
  int sink = -1;
  for (int j = 0; j < num_j_; ++j)
    if (jedges_[static_cast<size_t>(j)].empty()) {
      if (sink != -1) throw std::logic_error("monoid condensation has two sinks");
      sink = j;
    }
  if (sink == -1) throw std::logic_error("monoid condensation has no sink");
  minimum_ideal_ = sink;
}

int GreenData::jclass_rank(JClassId j) const {
  return m_.rank_of(jmembers_[static_cast<size_t>(j)].front());
}

bool GreenData::j_below(JClassId lower, JClassId upper) const {
  if (lower == upper) return true;
  std::vector<bool> seen(static_cast<size_t>(num_j_), false);
  std::deque<int> todo{upper};
  seen[static_cast<size_t>(upper)] = true;
  while (!todo.empty()) {
    int j = todo.front();
    todo.pop_front();
    for (int k : jedges_[static_cast<size_t>(j)]) {
      if (k == lower) return true;
      if (!seen[static_cast<size_t>(k)]) {
        seen[static_cast<size_t>(k)] = true;
        todo.push_back(k);
      }
    }
  }
  return false;
}

std::vector<int> GreenData::hclass_of(int id) const {
  std::vector<int> out;
  for (int x : jmembers_[static_cast<size_t>(jclass_[static_cast<size_t>(id)])])
    if (rclass_[static_cast<size_t>(x)] == rclass_[static_cast<size_t>(id)] &&
        lclass_[static_cast<size_t>(x)] == lclass_[static_cast<size_t>(id)])
      out.push_back(x);
  return out;
}

PermutationGroupOnSet schutzenberger_group(const TransitionMonoid& m, const GreenData& g,
                                           JClassId j) {
  if (!g.regular(j)) throw std::invalid_argument("Schutzenberger group of a non-regular class");
  // shortlex-least idempotent: least element id, since ids follow shortlex
  int e = -1;
  for (int id : g.jclass_members(j))
    if (m.idempotent(id) && (e == -1 || id < e)) e = id;

  std::vector<int> domain = image_of(m.element(e));
  std::map<int, int> pos;
  for (size_t i = 0; i < domain.size(); ++i) pos[domain[i]] = static_cast<int>(i);

  std::vector<std::pair<Word, PermutationGroupOnSet::Perm>> gens;
  std::vector<PermutationGroupOnSet::Perm> seen;
  for (int h : g.hclass_of(e)) {
    Transformation t = m.element(h);
    PermutationGroupOnSet::Perm p(domain.size());
    for (size_t i = 0; i < domain.size(); ++i) {
      int16_t y = t[static_cast<size_t>(domain[i])];
      auto it = y == UNDEF ? pos.end() : pos.find(y);
      if (it == pos.end())
        throw std::logic_error("H-class member does not permute the idempotent image");
      p[i] = it->second;
    }
    if (std::find(seen.begin(), seen.end(), p) == seen.end()) {
      seen.push_back(p);
      gens.emplace_back(m.witness(h), p);
    }
  }
  PermutationGroupOnSet group(domain, gens);
  if (group.order() != seen.size())
    throw std::logic_error("Schutzenberger action is not faithful on the image");
  return group;
}

}  // namespace bifix
