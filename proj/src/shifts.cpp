#include "bifix/shifts.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace bifix {

// ---------------------------------------------------------------- Substitution

Substitution::Substitution(Alphabet alphabet, std::map<char, Word> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  for (int i = 0; i < alphabet_.size(); ++i) {
    auto it = rules_.find(alphabet_.letter(i));
    if (it == rules_.end()) throw std::invalid_argument("substitution misses a letter rule");
    if (it->second.empty()) throw std::invalid_argument("substitution image must be nonempty");
    alphabet_.check_word(it->second);
  }
  if (rules_.size() != static_cast<size_t>(alphabet_.size()))
    throw std::invalid_argument("substitution rule for a foreign letter");
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (char c : w) out += rules_.at(c);
  return out;
}

Word Substitution::iterate(char seed, int k) const {
  Word w(1, seed);
  for (int i = 0; i < k; ++i) w = apply(w);
  return w;
}

bool Substitution::is_primitive() const {
  int n = alphabet_.size();
  // boolean incidence: occurs[a][b] = letter b occurs in rule(a)
  std::vector<std::vector<bool>> cur(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (int a = 0; a < n; ++a)
    for (char c : rule(alphabet_.letter(a))) cur[static_cast<size_t>(a)][static_cast<size_t>(alphabet_.index(c))] = true;
  int bound = (n - 1) * (n - 1) + 1;
  std::vector<std::vector<bool>> pw = cur;
  for (int e = 1; e <= bound; ++e) {
    bool positive = true;
    for (int a = 0; a < n && positive; ++a)
      for (int b = 0; b < n && positive; ++b)
        if (!pw[static_cast<size_t>(a)][static_cast<size_t>(b)]) positive = false;
    if (positive) return true;
    // pw = pw * cur (boolean)
    std::vector<std::vector<bool>> nx(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int a = 0; a < n; ++a)
      for (int k2 = 0; k2 < n; ++k2)
        if (pw[static_cast<size_t>(a)][static_cast<size_t>(k2)])
          for (int b = 0; b < n; ++b)
            if (cur[static_cast<size_t>(k2)][static_cast<size_t>(b)]) nx[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
    pw = std::move(nx);
  }
  return false;
}

Substitution Substitution::power(int k) const {
  std::map<char, Word> out;
  for (int i = 0; i < alphabet_.size(); ++i) {
    char c = alphabet_.letter(i);
    out[c] = iterate(c, k);
  }
  return Substitution(alphabet_, out);
}

// ---------------------------------------------------------- SoficPresentation

SoficPresentation::SoficPresentation(Alphabet alphabet, int vertices,
                                     std::vector<std::tuple<int, char, int>> edges)
    : alphabet_(std::move(alphabet)), vertices_(vertices), edges_(std::move(edges)) {
  if (vertices_ <= 0) throw std::invalid_argument("sofic presentation needs vertices");
  for (auto [s, c, t] : edges_) {
    if (s < 0 || s >= vertices_ || t < 0 || t >= vertices_)
      throw std::invalid_argument("sofic edge out of range");
    if (!alphabet_.contains(c)) throw std::invalid_argument("sofic edge label outside alphabet");
  }
  // strong connectivity of the presentation graph (required for recurrence)
  auto reachable = [&](bool reverse) {
    std::vector<bool> seen(static_cast<size_t>(vertices_), false);
    std::deque<int> todo{0};
    seen[0] = true;
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop_front();
      for (auto [s, c, t] : edges_) {
        int from = reverse ? t : s, to = reverse ? s : t;
        if (from == v && !seen[static_cast<size_t>(to)]) {
          seen[static_cast<size_t>(to)] = true;
          todo.push_back(to);
        }
      }
    }
    return seen;
  };
  auto fwd = reachable(false), bwd = reachable(true);
  for (int v = 0; v < vertices_; ++v)
    if (!fwd[static_cast<size_t>(v)] || !bwd[static_cast<size_t>(v)])
      throw std::invalid_argument("sofic presentation graph is not strongly connected");

  // factor automaton: determinize with all vertices initial, all final
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> order;
  std::vector<int> start(static_cast<size_t>(vertices_));
  for (int v = 0; v < vertices_; ++v) start[static_cast<size_t>(v)] = v;
  index[start] = 0;
  order.push_back(start);
  std::vector<int> delta;
  int na = alphabet_.size();
  std::vector<std::vector<bool>> finals1;
  for (size_t i = 0; i < order.size(); ++i) {
    std::vector<int> cur = order[i];
    delta.resize((i + 1) * static_cast<size_t>(na), Dfa::NO_STATE);
    for (int a = 0; a < na; ++a) {
      std::set<int> tgt;
      for (auto [s, c, t] : edges_)
        if (alphabet_.index(c) == a &&
            std::binary_search(cur.begin(), cur.end(), s))
          tgt.insert(t);
      if (tgt.empty()) continue;
      std::vector<int> key(tgt.begin(), tgt.end());
      auto [it, inserted] = index.emplace(key, static_cast<int>(order.size()));
      if (inserted) order.push_back(key);
      delta[i * static_cast<size_t>(na) + static_cast<size_t>(a)] = it->second;
    }
  }
  delta.resize(order.size() * static_cast<size_t>(na), Dfa::NO_STATE);
  std::vector<bool> finals(order.size(), true);
  factor_dfa_ = minimize(Dfa(alphabet_, static_cast<int>(order.size()), 0, finals, delta));
}

// ----------------------------------------------------------------- RecurrentSet

RecurrentSet RecurrentSet::substitutive(Substitution s, char seed,
                                        std::map<char, char> projection) {
  if (!s.alphabet().contains(seed)) throw std::invalid_argument("seed outside alphabet");
  if (!s.is_primitive()) throw std::invalid_argument("substitution is not primitive");
  Alphabet out_alpha = s.alphabet();
  if (!projection.empty()) {
    std::string out_letters;
    for (int i = 0; i < s.alphabet().size(); ++i) {
      char c = s.alphabet().letter(i);
      char img = projection.count(c) ? projection.at(c) : c;
      if (out_letters.find(img) == std::string::npos) out_letters += img;
    }
    out_alpha = Alphabet(out_letters);
  }
  return RecurrentSet(Substitutive{std::move(s), seed, std::move(projection)}, std::move(out_alpha));
}

RecurrentSet RecurrentSet::sofic(SoficPresentation p) {
  Alphabet a = p.alphabet();
  return RecurrentSet(std::move(p), std::move(a));
}

namespace {

char project_letter(const std::map<char, char>& proj, char c) {
  auto it = proj.find(c);
  return it == proj.end() ? c : it->second;
}

Word project_word(const std::map<char, char>& proj, const Word& w) {
  if (proj.empty()) return w;
  Word out = w;
  for (char& c : out) c = project_letter(proj, c);
  return out;
}

void collect_factors(const Word& w, int n, std::set<Word>& out) {
  int len = static_cast<int>(w.size());
  for (int L = 0; L <= std::min(n, len); ++L)
    for (int i = 0; i + L <= len; ++i) out.insert(w.substr(static_cast<size_t>(i), static_cast<size_t>(L)));
}

}  // namespace

const Substitution& RecurrentSet::good_power() const {
  if (!good_power_) {
    const Substitution& s = substitutive_source().subst;
    for (int m = 1; m <= 64; ++m) {
      Substitution p = s.power(m);
      bool expanding = true, full = true;
      size_t total = 0;
      for (int i = 0; i < p.alphabet().size(); ++i) {
        const Word& r = p.rule(p.alphabet().letter(i));
        total += r.size();
        if (r.size() < 2) expanding = false;
        for (int j = 0; j < p.alphabet().size(); ++j)
          if (r.find(p.alphabet().letter(j)) == Word::npos) full = false;
      }
      if (total > 2000000) break;
      if (expanding && full) {
        good_power_ = std::move(p);
        break;
      }
    }
    if (!good_power_)
      throw StabilizationError("no expanding full power of the substitution within the cap");
  }
  return *good_power_;
}

void RecurrentSet::compute_factors_substitutive(int n) const {
  const Substitutive& src = substitutive_source();
  const Substitution& phi = good_power();
  int width = std::max(n + 2, 4);

  // width-W frontier fixpoint: S <- the length-W factors of phi(S), seeded
  // with one length-W factor. The power has letterwise expansion >= 2, so a
  // length-W factor of phi(u) spans at most W/2+2 <= W letters of u; the
  // first fixpoint is exactly the set of length-W factors of F, and the
  // shorter factors are their substrings (F is infinite and factorial).
  Word seed_word(1, src.seed);
  while (static_cast<int>(seed_word.size()) < width) seed_word = phi.apply(seed_word);
  std::set<Word> cur{seed_word.substr(0, static_cast<size_t>(width))};
  while (true) {
    std::set<Word> next;
    for (const Word& v : cur) {
      Word img = phi.apply(v);
      for (size_t i = 0; i + static_cast<size_t>(width) <= img.size(); ++i)
        next.insert(img.substr(i, static_cast<size_t>(width)));
    }
    if (next == cur) break;
    cur = std::move(next);
    if (cur.size() > 2000000) throw StabilizationError("factor set cap exceeded");
  }

  factor_cache_.clear();
  for (const Word& w : cur) {
    Word p = project_word(src.projection, w);
    collect_factors(p, n, factor_cache_);
  }
  factor_cache_len_ = n;
}

void RecurrentSet::compute_factors_sofic(int n) const {
  const Dfa& d = sofic_source().factor_dfa();
  factor_cache_.clear();
  // BFS over (word, state); the factor automaton is deterministic so each
  // word has one state
  std::deque<std::pair<Word, int>> todo{{Word(), d.initial()}};
  factor_cache_.insert(Word());
  while (!todo.empty()) {
    auto [w, q] = todo.front();
    todo.pop_front();
    if (static_cast<int>(w.size()) == n) continue;
    for (int a = 0; a < d.alphabet().size(); ++a) {
      int r = d.step_index(q, a);
      if (r == Dfa::NO_STATE) continue;
      Word w2 = w + d.alphabet().letter(a);
      factor_cache_.insert(w2);
      todo.emplace_back(std::move(w2), r);
    }
    if (factor_cache_.size() > 5000000) throw StabilizationError("factor set cap exceeded");
  }
  factor_cache_len_ = n;
}

const std::set<Word>& RecurrentSet::factors(int n) const {
  if (n <= factor_cache_len_) return factor_cache_;
  if (is_substitutive())
    compute_factors_substitutive(n);
  else
    compute_factors_sofic(n);
  return factor_cache_;
}

bool RecurrentSet::member(const Word& w) const {
  alphabet().check_word(w);
  if (is_sofic()) return sofic_source().factor_dfa().accepts(w);
  const std::set<Word>& fac = factors(static_cast<int>(w.size()));
  return fac.count(w) > 0;
}

Word RecurrentSet::some_factor(int length) const {
  for (const Word& w : factors(length))
    if (static_cast<int>(w.size()) == length) return w;
  throw std::logic_error("recurrent set has no factor of requested length");
}

ExtensionGraph RecurrentSet::extension_graph(const Word& w) const {
  if (!member(w)) throw std::invalid_argument("word is not a factor of the recurrent set");
  ExtensionGraph g;
  g.center = w;
  const Alphabet& a = alphabet();
  // one batched factor query covers all membership tests
  factors(static_cast<int>(w.size()) + 2);
  for (int i = 0; i < a.size(); ++i) {
    if (member(a.letter(i) + w)) g.left.push_back(a.letter(i));
    if (member(w + a.letter(i))) g.right.push_back(a.letter(i));
  }
  for (char l : g.left)
    for (char r : g.right)
      if (member(l + w + r)) g.edges.emplace_back(l, r);

  // bipartite component count and acyclicity
  int nl = static_cast<int>(g.left.size()), nr = static_cast<int>(g.right.size());
  int total = nl + nr;
  std::vector<int> comp(static_cast<size_t>(total), -1);
  auto lidx = [&](char c) {
    return static_cast<int>(std::find(g.left.begin(), g.left.end(), c) - g.left.begin());
  };
  auto ridx = [&](char c) {
    return nl + static_cast<int>(std::find(g.right.begin(), g.right.end(), c) - g.right.begin());
  };
  int ncomp = 0;
  for (int v = 0; v < total; ++v) {
    if (comp[static_cast<size_t>(v)] != -1) continue;
    std::deque<int> todo{v};
    comp[static_cast<size_t>(v)] = ncomp;
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      for (const auto& [l, r] : g.edges) {
        int u1 = lidx(l), u2 = ridx(r);
        int other = -1;
        if (u1 == x) other = u2;
        if (u2 == x) other = u1;
        if (other >= 0 && comp[static_cast<size_t>(other)] == -1) {
          comp[static_cast<size_t>(other)] = ncomp;
          todo.push_back(other);
        }
      }
    }
    ++ncomp;
  }
  g.components = ncomp;
  g.acyclic = static_cast<int>(g.edges.size()) == total - ncomp;
  g.connected = (ncomp <= 1);
  g.tree = g.connected && g.acyclic;
  return g;
}

SetClassification RecurrentSet::classify_set(int bound) const {
  SetClassification out;
  out.bound = bound;
  // shortlex scan so the recorded witnesses are the shortlex-least ones
  factors(bound + 2);
  for (int len = 0; len <= bound; ++len) {
    for (const Word& w : factors(bound)) {
      if (static_cast<int>(w.size()) != len) continue;
      ExtensionGraph g = extension_graph(w);
      if (!g.tree && !out.tree_witness) {
        out.tree = false;
        out.tree_witness = w;
      }
      if (!g.connected && !out.connected_witness) {
        out.connected = false;
        out.connected_witness = w;
      }
    }
    if (out.tree_witness && out.connected_witness) break;
  }
  return out;
}

// ------------------------------------------------------------------ returns

namespace {

std::vector<int> occurrences(const Word& text, const Word& pat) {
  std::vector<int> occ;
  if (pat.empty() || text.size() < pat.size()) return occ;
  for (size_t i = 0; i + pat.size() <= text.size(); ++i)
    if (text.compare(i, pat.size(), pat) == 0) occ.push_back(static_cast<int>(i));
  return occ;
}

// Matching automaton of u (KMP): state = length of the longest suffix of the
// input that is a prefix of u; step from the full-match state follows the
// border as usual.
struct Matcher {
  Word u;
  std::vector<int> fail;
  explicit Matcher(const Word& word) : u(word), fail(word.size() + 1, 0) {
    for (size_t i = 1; i < u.size(); ++i) {
      int k = fail[i];
      while (k > 0 && u[i] != u[static_cast<size_t>(k)]) k = fail[static_cast<size_t>(k)];
      fail[i + 1] = (u[i] == u[static_cast<size_t>(k)]) ? k + 1 : 0;
    }
  }
  int step(int s, char c) const {
    while (true) {
      if (s < static_cast<int>(u.size()) && u[static_cast<size_t>(s)] == c) return s + 1;
      if (s == 0) return 0;
      s = fail[static_cast<size_t>(s)];
    }
  }
  // state after a full match continues via the border
  int continue_state() const { return fail[u.size()]; }
};

}  // namespace

ReturnWordSet RecurrentSet::return_words(const Word& u, int cap) const {
  if (!member(u)) throw std::invalid_argument("base word is not a factor");
  if (u.empty()) throw std::invalid_argument("base word must be nonempty");
  ReturnWordSet out;
  out.base = u;

  if (is_substitutive()) {
    int lu = static_cast<int>(u.size());
    // escalate the search window geometrically; the completeness certificate
    // below decides each attempt exactly
    int window = std::max(2 * lu, 8);
    while (true) {
      const std::set<Word>& fac = factors(lu + window);
      std::set<Word> rets;
      // v is a first return iff uv is a factor, ends with u, and u occurs in
      // uv only as its prefix and suffix
      bool complete = true;
      for (const Word& f : fac) {
        if (f.size() <= u.size() || f.compare(0, u.size(), u) != 0) continue;
        if (static_cast<int>(f.size()) == lu + window && occurrences(f, u).size() < 2) {
          // a window-length factor starts with u and never returns: some
          // return word is longer than the window
          complete = false;
          break;
        }
        if (f.compare(f.size() - u.size(), u.size(), u) != 0) continue;
        std::vector<int> occ = occurrences(f, u);
        bool internal = false;
        for (int p : occ)
          if (p > 0 && p < static_cast<int>(f.size() - u.size())) internal = true;
        if (!internal) rets.insert(f.substr(u.size()));
      }
      if (complete) {
        out.words.assign(rets.begin(), rets.end());
        std::sort(out.words.begin(), out.words.end(), shortlex_less);
        out.complete = true;
        return out;
      }
      if (window > cap)
        throw StabilizationError("return words not complete within cap " + std::to_string(cap));
      window *= 2;
    }
  }

  // sofic: exact rational return set as a product of the left quotient
  // u^{-1}F with the occurrence-tracking automaton of u
  const Dfa& fd = sofic_source().factor_dfa();
  int q0 = fd.run(fd.initial(), u);
  if (q0 == Dfa::NO_STATE) throw std::logic_error("factor automaton rejects a factor");
  Matcher km(u);
  int lu = static_cast<int>(u.size());
  // states: (factor state, matcher state, flag mid-match seen) with the
  // matcher full-match state split: reaching |u| mid-word is an internal
  // occurrence and kills the run; reaching it on the last letter accepts.
  // Encode: matcher state in 0..|u|; full match maps to lu; runs may not
  // leave lu.
  struct Key {
    int fq, ms;
    bool operator<(const Key& o) const { return std::tie(fq, ms) < std::tie(o.fq, o.ms); }
  };
  std::map<Key, int> index;
  std::vector<Key> order;
  std::vector<int> delta;
  const Alphabet& a = alphabet();
  int na = a.size();
  Key start{q0, km.continue_state()};
  index[start] = 0;
  order.push_back(start);
  for (size_t i = 0; i < order.size(); ++i) {
    Key cur = order[i];
    delta.resize((i + 1) * static_cast<size_t>(na), Dfa::NO_STATE);
    if (cur.ms == lu) continue;  // accepting sink: a further letter would make the match internal
    for (int ai = 0; ai < na; ++ai) {
      int fq = fd.step_index(cur.fq, ai);
      if (fq == Dfa::NO_STATE) continue;
      int ms = km.step(cur.ms, a.letter(ai));
      Key nxt{fq, ms};
      auto [it, inserted] = index.emplace(nxt, static_cast<int>(order.size()));
      if (inserted) order.push_back(nxt);
      delta[i * static_cast<size_t>(na) + static_cast<size_t>(ai)] = it->second;
    }
  }
  delta.resize(order.size() * static_cast<size_t>(na), Dfa::NO_STATE);
  std::vector<bool> finals(order.size(), false);
  for (size_t i = 0; i < order.size(); ++i) finals[i] = order[i].ms == lu;
  out.language = minimize(Dfa(a, static_cast<int>(order.size()), 0, finals, delta));
  out.complete = true;
  return out;
}

// ------------------------------------------------------------------ eta image

namespace {

// Certified eta-image engine for substitutive sources.
//
// A homomorphism h: A* -> M is carried by its letter images (transformations).
// The engine iterates context triples (left letter, h-image, right letter,
// nonempty) of the factor sets Fact(phi^k(a)) using the block decomposition
// of factors of phi(w): every factor is s . phi(m) . p with m a factor of w,
// s a proper suffix and p a proper prefix of the neighbor letter images.
// The homomorphism per level walks the finite cycle h, h.phi, h.phi^2, ...
struct TripleEngine {
  static constexpr int BOT = -1;  // word-boundary context

  const Substitution& phi;
  const Alphabet& A;
  int n;  // automaton states

  // interned transformations
  std::vector<Transformation> pool;
  std::map<Transformation, int> pool_index;
  int intern(const Transformation& t) {
    auto [it, inserted] = pool_index.emplace(t, static_cast<int>(pool.size()));
    if (inserted) pool.push_back(t);
    return it->second;
  }

  struct Triple {
    int cl, mid, cr;
    bool ne;
    bool operator<(const Triple& o) const {
      return std::tie(cl, mid, cr, ne) < std::tie(o.cl, o.mid, o.cr, o.ne);
    }
    bool operator==(const Triple& o) const {
      return cl == o.cl && mid == o.mid && cr == o.cr && ne == o.ne;
    }
  };
  using TripleSet = std::set<Triple>;

  // hom = per-letter transformation ids
  using Hom = std::vector<int>;
  std::vector<Hom> homs;
  std::map<Hom, int> hom_index;
  std::vector<int> sigma;  // hom composed with phi

  TripleEngine(const Substitution& p, int states, const std::vector<Transformation>& letter_images)
      : phi(p), A(p.alphabet()), n(states) {
    Hom h0(static_cast<size_t>(A.size()));
    for (int a = 0; a < A.size(); ++a) h0[static_cast<size_t>(a)] = intern(letter_images[static_cast<size_t>(a)]);
    homs.push_back(h0);
    hom_index[h0] = 0;
    // close the hom family under composition with phi
    for (size_t j = 0; j < homs.size(); ++j) {
      Hom next(static_cast<size_t>(A.size()));
      for (int a = 0; a < A.size(); ++a)
        next[static_cast<size_t>(a)] = intern(apply_hom(homs[j], phi.rule(A.letter(a))));
      auto [it, inserted] = hom_index.emplace(next, static_cast<int>(homs.size()));
      if (inserted) homs.push_back(next);
      sigma.push_back(it->second);
      if (homs.size() > 4096) throw StabilizationError("homomorphism cycle cap exceeded");
    }
  }

  Transformation apply_hom(const Hom& h, const Word& w) {
    Transformation t = identity_transformation(n);
    for (char c : w) t = compose(t, pool[static_cast<size_t>(h[static_cast<size_t>(A.index(c))])]);
    return t;
  }

  TripleSet base_triples(int j) {
    TripleSet out;
    int idid = intern(identity_transformation(n));
    for (int a = 0; a < A.size(); ++a) {
      out.insert({BOT, homs[static_cast<size_t>(j)][static_cast<size_t>(a)], BOT, true});
      out.insert({BOT, idid, a, false});
      out.insert({a, idid, BOT, false});
    }
    return out;
  }

  // Phi_h on a triple set at hom sigma(j); mode_long restricts middles to
  // nonempty ones and skips the fresh in-block factors.
  TripleSet step(int j, const TripleSet& in, bool mode_long) {
    const Hom& h = homs[static_cast<size_t>(j)];
    TripleSet out;
    // memoized h-images of rule pieces
    std::map<Word, int> piece;
    auto himg = [&](const Word& w) {
      auto it = piece.find(w);
      if (it == piece.end()) it = piece.emplace(w, intern(apply_hom(h, w))).first;
      return it->second;
    };
    for (const Triple& tr : in) {
      if (mode_long && !tr.ne) continue;
      const Word u = tr.cl == BOT ? Word() : phi.rule(A.letter(tr.cl));
      const Word v = tr.cr == BOT ? Word() : phi.rule(A.letter(tr.cr));
      // s: proper suffixes of u including empty; p: proper prefixes of v
      for (size_t si = u.empty() ? 0 : 1; si <= u.size(); ++si) {
        Word s = u.empty() ? Word() : u.substr(si);
        int ncl = u.empty() ? BOT : A.index(u[si == 0 ? u.size() - 1 : si - 1]);
        for (size_t pi = 0; pi <= (v.empty() ? 0 : v.size() - 1); ++pi) {
          Word pword = v.substr(0, pi);
          int ncr = v.empty() ? BOT : A.index(v[pi]);
          Transformation mm =
              compose(compose(pool[static_cast<size_t>(himg(s))], pool[static_cast<size_t>(tr.mid)]),
                      pool[static_cast<size_t>(himg(pword))]);
          out.insert({ncl, intern(mm), ncr, tr.ne || !s.empty() || !pword.empty()});
          if (v.empty()) break;
        }
        if (u.empty()) break;
      }
    }
    if (!mode_long) {
      // factors strictly inside one letter image
      for (int a = 0; a < A.size(); ++a) {
        const Word& w = phi.rule(A.letter(a));
        for (size_t i = 1; i <= w.size(); ++i)
          for (size_t jx = i; jx < w.size(); ++jx)
            out.insert({A.index(w[i - 1]), himg(w.substr(i, jx - i)), A.index(w[jx]), jx > i});
      }
    }
    return out;
  }

  // run the full analysis; returns (all, longword) as transformation sets
  std::pair<std::vector<Transformation>, std::vector<Transformation>> run() {
    size_t H = homs.size();
    std::vector<TripleSet> T;
    for (size_t j = 0; j < H; ++j) T.push_back(base_triples(static_cast<int>(j)));

    std::set<int> all_ids;
    all_ids.insert(intern(identity_transformation(n)));

    std::map<std::vector<TripleSet>, int> states;
    int iter = 0;
    while (true) {
      ++iter;
      std::vector<TripleSet> next(H);
      for (size_t j = 0; j < H; ++j)
        next[j] = step(static_cast<int>(j), T[static_cast<size_t>(sigma[j])], false);
      for (const Triple& tr : next[0]) all_ids.insert(tr.mid);
      auto [it, inserted] = states.emplace(next, iter);
      T = std::move(next);
      if (!inserted) break;
      if (iter > 512) throw StabilizationError("triple engine iteration cap exceeded");
    }

    // union over one full cycle seeds the longword iteration
    std::vector<TripleSet> seed = T;
    {
      std::vector<TripleSet> cur = T;
      for (int extra = 0; extra < iter + 1; ++extra) {
        std::vector<TripleSet> next(H);
        for (size_t j = 0; j < H; ++j)
          next[j] = step(static_cast<int>(j), cur[static_cast<size_t>(sigma[j])], false);
        for (size_t j = 0; j < H; ++j) seed[j].insert(next[j].begin(), next[j].end());
        cur = std::move(next);
      }
    }

    std::vector<TripleSet> L = seed;
    std::map<std::vector<TripleSet>, int> lstates;
    while (true) {
      std::vector<TripleSet> next(H);
      for (size_t j = 0; j < H; ++j)
        next[j] = step(static_cast<int>(j), L[static_cast<size_t>(sigma[j])], true);
      auto [it, inserted] = lstates.emplace(next, 0);
      L = std::move(next);
      if (!inserted) break;
      if (lstates.size() > 512) throw StabilizationError("longword iteration cap exceeded");
    }

    std::vector<Transformation> all, longw;
    for (int id : all_ids) all.push_back(pool[static_cast<size_t>(id)]);
    std::set<int> long_ids;
    for (const Triple& tr : L[0])
      if (tr.ne) long_ids.insert(tr.mid);
    for (int id : long_ids) longw.push_back(pool[static_cast<size_t>(id)]);
    return {all, longw};
  }
};

}  // namespace

EtaImage RecurrentSet::eta_image(const Dfa& aut) const {
  if (aut.alphabet() != alphabet()) throw std::invalid_argument("alphabet mismatch");
  EtaImage out;

  if (is_substitutive()) {
    const Substitutive& src = substitutive_source();
    const Alphabet& inner = src.subst.alphabet();
    // initial hom: letter -> eta(projection(letter))
    std::vector<Transformation> letter_images;
    for (int a = 0; a < inner.size(); ++a) {
      char img = project_letter(src.projection, inner.letter(a));
      letter_images.push_back(letter_transformation(aut, aut.alphabet().index(img)));
    }
    TripleEngine engine(src.subst, aut.size(), letter_images);
    auto [all, longw] = engine.run();
    out.all = std::move(all);
    out.longword = std::move(longw);
    return out;
  }

  // sofic: BFS over (path relation, transformation); longword = elements of
  // nodes reachable from a cycle in this product graph
  const SoficPresentation& p = sofic_source();
  int V = p.vertices();
  using Rel = std::vector<std::pair<int, int>>;  // sorted vertex pairs
  // per-letter relation composition
  std::vector<Rel> letter_rel(static_cast<size_t>(alphabet().size()));
  for (auto [s, c, t] : p.edges())
    letter_rel[static_cast<size_t>(alphabet().index(c))].push_back({s, t});
  for (auto& r : letter_rel) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }

  struct Node {
    Rel rel;
    Transformation t;
    bool operator<(const Node& o) const { return std::tie(rel, t) < std::tie(o.rel, o.t); }
  };
  Rel full;
  for (int v = 0; v < V; ++v) full.push_back({v, v});
  Node start{full, identity_transformation(aut.size())};
  std::map<Node, int> index;
  std::vector<Node> order;
  index[start] = 0;
  order.push_back(start);
  std::vector<std::vector<int>> succ;
  for (size_t i = 0; i < order.size(); ++i) {
    Node cur = order[i];
    succ.emplace_back();
    for (int a = 0; a < alphabet().size(); ++a) {
      Rel nr;
      for (auto [x, y] : cur.rel)
        for (auto [s, t] : letter_rel[static_cast<size_t>(a)])
          if (y == s) nr.push_back({x, t});
      std::sort(nr.begin(), nr.end());
      nr.erase(std::unique(nr.begin(), nr.end()), nr.end());
      if (nr.empty()) continue;
      Node nxt{std::move(nr), compose(cur.t, letter_transformation(aut, a))};
      auto [it, inserted] = index.emplace(nxt, static_cast<int>(order.size()));
      if (inserted) order.push_back(nxt);
      succ[i].push_back(it->second);
      if (order.size() > 2000000) throw StabilizationError("sofic eta-image node cap exceeded");
    }
  }

  std::set<Transformation> all_set;
  for (const Node& nd : order) all_set.insert(nd.t);
  out.all.assign(all_set.begin(), all_set.end());

  // nodes on cycles: any node that reaches itself through >= 1 edge
  size_t N = order.size();
  std::vector<bool> cyclic(N, false);
  for (size_t v = 0; v < N; ++v) {
    std::vector<bool> seen(N, false);
    std::deque<int> todo(succ[v].begin(), succ[v].end());
    for (int x : succ[v]) seen[static_cast<size_t>(x)] = true;
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      if (x == static_cast<int>(v)) {
        cyclic[v] = true;
        break;
      }
      for (int y : succ[static_cast<size_t>(x)])
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = true;
          todo.push_back(y);
        }
    }
    if (!cyclic[v] && std::find(succ[v].begin(), succ[v].end(), static_cast<int>(v)) != succ[v].end())
      cyclic[v] = true;
  }
  std::vector<bool> after(N, false);
  std::deque<int> todo;
  for (size_t v = 0; v < N; ++v)
    if (cyclic[v]) {
      after[v] = true;
      todo.push_back(static_cast<int>(v));
    }
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (int y : succ[static_cast<size_t>(x)])
      if (!after[static_cast<size_t>(y)]) {
        after[static_cast<size_t>(y)] = true;
        todo.push_back(y);
      }
  }
  std::set<Transformation> long_set;
  for (size_t v = 0; v < N; ++v)
    if (after[v]) long_set.insert(order[v].t);
  out.longword.assign(long_set.begin(), long_set.end());
  return out;
}

}  // namespace bifix
