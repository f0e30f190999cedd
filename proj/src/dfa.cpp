#include "bifix/dfa.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace bifix {

Dfa::Dfa(Alphabet alphabet, int num_states, int initial, std::vector<bool> finals,
         std::vector<int> delta)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      finals_(std::move(finals)),
      delta_(std::move(delta)) {
  if (num_states_ <= 0) throw std::invalid_argument("automaton needs at least one state");
  if (initial_ < 0 || initial_ >= num_states_) throw std::invalid_argument("bad initial state");
  if (static_cast<int>(finals_.size()) != num_states_) throw std::invalid_argument("finals size mismatch");
  if (delta_.size() != static_cast<size_t>(num_states_) * alphabet_.size())
    throw std::invalid_argument("delta size mismatch");
  for (int t : delta_)
    if (t < NO_STATE || t >= num_states_) throw std::invalid_argument("transition target out of range");
}

int Dfa::num_finals() const {
  int n = 0;
  for (bool f : finals_) n += f ? 1 : 0;
  return n;
}

int Dfa::run(int q, const Word& w) const {
  for (char c : w) {
    if (q == NO_STATE) return NO_STATE;
    q = step(q, c);
  }
  return q;
}

bool Dfa::accepts(const Word& w) const {
  int q = run(initial_, w);
  return q != NO_STATE && is_final(q);
}

int Dfa::out_degree(int q) const {
  int d = 0;
  for (int a = 0; a < alphabet_.size(); ++a)
    if (step_index(q, a) != NO_STATE) ++d;
  return d;
}

bool Dfa::operator==(const Dfa& o) const {
  return alphabet_ == o.alphabet_ && num_states_ == o.num_states_ && initial_ == o.initial_ &&
         finals_ == o.finals_ && delta_ == o.delta_;
}

namespace {

Dfa empty_language(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {false},
             std::vector<int>(static_cast<size_t>(alphabet.size()), Dfa::NO_STATE));
}

struct DfaBuilder {
  Alphabet alphabet;
  int initial = 0;
  std::vector<bool> finals;
  std::vector<int> delta;

  explicit DfaBuilder(const Alphabet& a) : alphabet(a) {}
  int add_state(bool fin = false) {
    finals.push_back(fin);
    delta.resize(delta.size() + alphabet.size(), Dfa::NO_STATE);
    return static_cast<int>(finals.size()) - 1;
  }
  void set(int q, int a, int r) { delta[static_cast<size_t>(q) * alphabet.size() + a] = r; }
  Dfa build() const { return Dfa(alphabet, static_cast<int>(finals.size()), initial, finals, delta); }
};

// Simple NFA with epsilon edges, used transiently inside determinizing
// constructions (star, concatenation, closures).
struct Nfa {
  Alphabet alphabet;
  int num_states = 0;
  std::vector<std::map<int, std::vector<int>>> edges;  // state -> letter index -> targets
  std::vector<std::vector<int>> eps;
  std::vector<int> initials;
  std::set<int> finals;

  explicit Nfa(const Alphabet& a) : alphabet(a) {}
  int add_state() {
    edges.emplace_back();
    eps.emplace_back();
    return num_states++;
  }
  void add_edge(int u, int a, int v) { edges[static_cast<size_t>(u)][a].push_back(v); }
  void add_eps(int u, int v) { eps[static_cast<size_t>(u)].push_back(v); }

  // copy all states/edges of a Dfa, returns the offset of its states
  int absorb(const Dfa& d) {
    int off = num_states;
    for (int q = 0; q < d.size(); ++q) add_state();
    for (int q = 0; q < d.size(); ++q)
      for (int a = 0; a < alphabet.size(); ++a) {
        int r = d.step_index(q, a);
        if (r != Dfa::NO_STATE) add_edge(off + q, a, off + r);
      }
    return off;
  }
};

std::vector<int> eps_closure(const Nfa& n, std::vector<int> states) {
  std::set<int> seen(states.begin(), states.end());
  std::deque<int> todo(states.begin(), states.end());
  while (!todo.empty()) {
    int q = todo.front();
    todo.pop_front();
    for (int r : n.eps[static_cast<size_t>(q)])
      if (seen.insert(r).second) todo.push_back(r);
  }
  return std::vector<int>(seen.begin(), seen.end());
}

Dfa determinize(const Nfa& n) {
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> order;
  DfaBuilder b(n.alphabet);

  auto intern = [&](std::vector<int> set) -> int {
    auto it = index.find(set);
    if (it != index.end()) return it->second;
    bool fin = false;
    for (int q : set)
      if (n.finals.count(q)) fin = true;
    int id = b.add_state(fin);
    index.emplace(set, id);
    order.push_back(std::move(set));
    return id;
  };

  std::vector<int> start = eps_closure(n, n.initials);
  intern(start);
  for (size_t i = 0; i < order.size(); ++i) {
    std::vector<int> cur = order[i];  // copy: order may grow
    for (int a = 0; a < n.alphabet.size(); ++a) {
      std::set<int> tgt;
      for (int q : cur) {
        auto it = n.edges[static_cast<size_t>(q)].find(a);
        if (it != n.edges[static_cast<size_t>(q)].end())
          tgt.insert(it->second.begin(), it->second.end());
      }
      if (tgt.empty()) continue;
      int id = intern(eps_closure(n, std::vector<int>(tgt.begin(), tgt.end())));
      b.set(static_cast<int>(i), a, id);
    }
  }
  return minimize(b.build());
}

}  // namespace

Dfa trim(const Dfa& d) {
  int n = d.size();
  // reachable from initial
  std::vector<bool> reach(static_cast<size_t>(n), false);
  std::deque<int> todo{d.initial()};
  reach[static_cast<size_t>(d.initial())] = true;
  while (!todo.empty()) {
    int q = todo.front();
    todo.pop_front();
    for (int a = 0; a < d.alphabet().size(); ++a) {
      int r = d.step_index(q, a);
      if (r != Dfa::NO_STATE && !reach[static_cast<size_t>(r)]) {
        reach[static_cast<size_t>(r)] = true;
        todo.push_back(r);
      }
    }
  }
  // co-reachable to a final state
  std::vector<std::vector<int>> rev(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q)
    for (int a = 0; a < d.alphabet().size(); ++a) {
      int r = d.step_index(q, a);
      if (r != Dfa::NO_STATE) rev[static_cast<size_t>(r)].push_back(q);
    }
  std::vector<bool> co(static_cast<size_t>(n), false);
  for (int q = 0; q < n; ++q)
    if (d.is_final(q) && reach[static_cast<size_t>(q)]) {
      co[static_cast<size_t>(q)] = true;
      todo.push_back(q);
    }
  while (!todo.empty()) {
    int q = todo.front();
    todo.pop_front();
    for (int p : rev[static_cast<size_t>(q)])
      if (reach[static_cast<size_t>(p)] && !co[static_cast<size_t>(p)]) {
        co[static_cast<size_t>(p)] = true;
        todo.push_back(p);
      }
  }
  if (!co[static_cast<size_t>(d.initial())]) return empty_language(d.alphabet());

  // BFS renumbering under alphabet order
  std::vector<int> id(static_cast<size_t>(n), -1);
  std::vector<int> order;
  id[static_cast<size_t>(d.initial())] = 0;
  order.push_back(d.initial());
  todo.push_back(d.initial());
  while (!todo.empty()) {
    int q = todo.front();
    todo.pop_front();
    for (int a = 0; a < d.alphabet().size(); ++a) {
      int r = d.step_index(q, a);
      if (r != Dfa::NO_STATE && co[static_cast<size_t>(r)] && id[static_cast<size_t>(r)] < 0) {
        id[static_cast<size_t>(r)] = static_cast<int>(order.size());
        order.push_back(r);
        todo.push_back(r);
      }
    }
  }
  DfaBuilder b(d.alphabet());
  for (int q : order) b.add_state(d.is_final(q));
  for (int q : order)
    for (int a = 0; a < d.alphabet().size(); ++a) {
      int r = d.step_index(q, a);
      if (r != Dfa::NO_STATE && co[static_cast<size_t>(r)])
        b.set(id[static_cast<size_t>(q)], a, id[static_cast<size_t>(r)]);
    }
  return b.build();
}

Dfa minimize(const Dfa& input) {
  Dfa d = trim(input);
  if (d.accepts_empty_language()) return d;
  int n = d.size();
  int na = d.alphabet().size();

  // Moore refinement; the undefined target acts as a permanent extra class.
  std::vector<int> part(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) part[static_cast<size_t>(q)] = d.is_final(q) ? 0 : 1;
  int classes = 2;
  {
    bool has0 = false, has1 = false;
    for (int c : part) (c == 0 ? has0 : has1) = true;
    if (!has0 || !has1) {
      classes = 1;
      for (auto& c : part) c = 0;
    }
  }
  while (true) {
    std::map<std::vector<int>, int> sig;
    std::vector<int> next(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
      std::vector<int> key;
      key.reserve(static_cast<size_t>(na) + 1);
      key.push_back(part[static_cast<size_t>(q)]);
      for (int a = 0; a < na; ++a) {
        int r = d.step_index(q, a);
        key.push_back(r == Dfa::NO_STATE ? -1 : part[static_cast<size_t>(r)]);
      }
      auto [it, inserted] = sig.emplace(std::move(key), static_cast<int>(sig.size()));
      next[static_cast<size_t>(q)] = it->second;
    }
    int next_classes = static_cast<int>(sig.size());
    if (next_classes == classes) break;
    part = std::move(next);
    classes = next_classes;
  }

  DfaBuilder b(d.alphabet());
  for (int c = 0; c < classes; ++c) b.add_state(false);
  b.initial = part[static_cast<size_t>(d.initial())];
  for (int q = 0; q < n; ++q) {
    if (d.is_final(q)) b.finals[static_cast<size_t>(part[static_cast<size_t>(q)])] = true;
    for (int a = 0; a < na; ++a) {
      int r = d.step_index(q, a);
      if (r != Dfa::NO_STATE) b.set(part[static_cast<size_t>(q)], a, part[static_cast<size_t>(r)]);
    }
  }
  return trim(b.build());
}

Dfa from_words(const Alphabet& alphabet, const std::vector<Word>& words) {
  DfaBuilder b(alphabet);
  b.add_state(false);
  for (const Word& w : words) {
    alphabet.check_word(w);
    int cur = 0;
    for (char c : w) {
      int a = alphabet.index(c);
      int nxt = b.delta[static_cast<size_t>(cur) * alphabet.size() + a];
      if (nxt == Dfa::NO_STATE) {
        nxt = b.add_state(false);
        b.set(cur, a, nxt);
      }
      cur = nxt;
    }
    b.finals[static_cast<size_t>(cur)] = true;
  }
  return minimize(b.build());
}

Dfa universal(const Alphabet& alphabet) {
  DfaBuilder b(alphabet);
  b.add_state(true);
  for (int a = 0; a < alphabet.size(); ++a) b.set(0, a, 0);
  return b.build();
}

Dfa universal_plus(const Alphabet& alphabet) {
  DfaBuilder b(alphabet);
  b.add_state(false);
  b.add_state(true);
  for (int a = 0; a < alphabet.size(); ++a) {
    b.set(0, a, 1);
    b.set(1, a, 1);
  }
  return b.build();
}

Dfa literal(const Alphabet& alphabet, const Word& w) { return from_words(alphabet, {w}); }

Dfa combine(BoolOp op, const Dfa& l, const Dfa& r) {
  if (l.alphabet() != r.alphabet()) throw std::invalid_argument("alphabet mismatch");
  auto keep = [op](bool fl, bool fr) {
    switch (op) {
      case BoolOp::Intersection: return fl && fr;
      case BoolOp::Union: return fl || fr;
      case BoolOp::Difference: return fl && !fr;
    }
    return false;
  };
  // product over the pair automaton, with NO_STATE as a transient sink side
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> order;
  DfaBuilder b(l.alphabet());
  auto intern = [&](std::pair<int, int> pq) {
    auto it = index.find(pq);
    if (it != index.end()) return it->second;
    bool fl = pq.first != Dfa::NO_STATE && l.is_final(pq.first);
    bool fr = pq.second != Dfa::NO_STATE && r.is_final(pq.second);
    int id = b.add_state(keep(fl, fr));
    index.emplace(pq, id);
    order.push_back(pq);
    return id;
  };
  intern({l.initial(), r.initial()});
  for (size_t i = 0; i < order.size(); ++i) {
    auto [p, q] = order[i];
    for (int a = 0; a < l.alphabet().size(); ++a) {
      int p2 = p == Dfa::NO_STATE ? Dfa::NO_STATE : l.step_index(p, a);
      int q2 = q == Dfa::NO_STATE ? Dfa::NO_STATE : r.step_index(q, a);
      if (p2 == Dfa::NO_STATE && q2 == Dfa::NO_STATE) continue;
      b.set(static_cast<int>(i), a, intern({p2, q2}));
    }
  }
  return minimize(b.build());
}

Dfa intersection(const Dfa& l, const Dfa& r) { return combine(BoolOp::Intersection, l, r); }
Dfa union_of(const Dfa& l, const Dfa& r) { return combine(BoolOp::Union, l, r); }
Dfa difference(const Dfa& l, const Dfa& r) { return combine(BoolOp::Difference, l, r); }

bool is_subset(const Dfa& l, const Dfa& r) { return difference(l, r).accepts_empty_language(); }

bool same_language(const Dfa& l, const Dfa& r) { return is_subset(l, r) && is_subset(r, l); }

Dfa concatenation(const std::vector<Dfa>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty concatenation");
  Nfa n(parts.front().alphabet());
  std::vector<int> offs;
  for (const Dfa& d : parts) {
    if (d.alphabet() != n.alphabet) throw std::invalid_argument("alphabet mismatch");
    offs.push_back(n.absorb(d));
  }
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    for (int q = 0; q < parts[i].size(); ++q)
      if (parts[i].is_final(q)) n.add_eps(offs[i] + q, offs[i + 1] + parts[i + 1].initial());
  n.initials = {offs.front() + parts.front().initial()};
  for (int q = 0; q < parts.back().size(); ++q)
    if (parts.back().is_final(q)) n.finals.insert(offs.back() + q);
  return determinize(n);
}

Dfa star_automaton(const Dfa& code) {
  if (code.accepts("")) throw std::invalid_argument("code contains the empty word");
  Nfa n(code.alphabet());
  int off = n.absorb(code);
  int hub = n.add_state();
  n.add_eps(hub, off + code.initial());
  for (int q = 0; q < code.size(); ++q)
    if (code.is_final(q)) n.add_eps(off + q, hub);
  n.initials = {hub};
  n.finals = {hub};
  return determinize(n);
}

Dfa prefix_closure(const Dfa& d) {
  Dfa t = trim(d);
  if (t.accepts_empty_language()) return t;
  std::vector<bool> allfinal(static_cast<size_t>(t.size()), true);
  DfaBuilder b(t.alphabet());
  for (int q = 0; q < t.size(); ++q) b.add_state(true);
  for (int q = 0; q < t.size(); ++q)
    for (int a = 0; a < t.alphabet().size(); ++a) {
      int r = t.step_index(q, a);
      if (r != Dfa::NO_STATE) b.set(q, a, r);
    }
  b.initial = t.initial();
  return minimize(b.build());
}

Dfa suffix_closure(const Dfa& d) {
  Dfa t = trim(d);
  if (t.accepts_empty_language()) return t;
  Nfa n(t.alphabet());
  int off = n.absorb(t);
  for (int q = 0; q < t.size(); ++q) {
    n.initials.push_back(off + q);
    if (t.is_final(q)) n.finals.insert(off + q);
  }
  return determinize(n);
}

Dfa reversal(const Dfa& d) {
  Dfa t = trim(d);
  if (t.accepts_empty_language()) return t;
  Nfa n(t.alphabet());
  for (int q = 0; q < t.size(); ++q) n.add_state();
  for (int q = 0; q < t.size(); ++q)
    for (int a = 0; a < t.alphabet().size(); ++a) {
      int r = t.step_index(q, a);
      if (r != Dfa::NO_STATE) n.add_edge(r, a, q);
    }
  for (int q = 0; q < t.size(); ++q)
    if (t.is_final(q)) n.initials.push_back(q);
  n.finals = {t.initial()};
  return determinize(n);
}

}  // namespace bifix
