#include "bifix/fgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace bifix {

FPair::FPair(Dfa code, const RecurrentSet& f, AnalysisOptions opts)
    : code_(minimize(code)), star_(star_automaton(code_)), f_(f), opts_(opts) {
  if (code_.alphabet() != f.alphabet()) throw std::invalid_argument("alphabet mismatch");
  // every codeword must be a factor of F
  if (f.is_sofic()) {
    if (!is_subset(code_, f.sofic_source().factor_dfa()))
      throw std::invalid_argument("code is not contained in the recurrent set");
  } else {
    if (!is_finite_language(code_))
      throw std::invalid_argument("substitutive analysis requires a finite code");
    // enumerate codewords through the factor cache
    std::deque<std::pair<Word, int>> todo{{Word(), code_.initial()}};
    while (!todo.empty()) {
      auto [w, q] = todo.front();
      todo.pop_front();
      if (code_.is_final(q) && !f.member(w))
        throw std::invalid_argument("code is not contained in the recurrent set");
      for (int a = 0; a < code_.alphabet().size(); ++a) {
        int r = code_.step_index(q, a);
        if (r != Dfa::NO_STATE) todo.emplace_back(w + code_.alphabet().letter(a), r);
      }
    }
  }
}

const TransitionMonoid& FPair::monoid() const {
  if (!monoid_) monoid_ = std::make_unique<TransitionMonoid>(star_, opts_.monoid_cap);
  return *monoid_;
}

const GreenData& FPair::green() const {
  if (!green_) green_ = std::make_unique<GreenData>(monoid());
  return *green_;
}

namespace {

// Minimum J-class among the classes hit by the given elements; verified to be
// comparable with (below) every hit class.
JClassId minimum_hit_class(const TransitionMonoid& m, const GreenData& g,
                           const std::vector<Transformation>& elements) {
  std::set<JClassId> hits;
  for (const Transformation& t : elements) {
    auto id = m.find(t);
    if (!id) throw std::logic_error("eta image outside the transition monoid");
    hits.insert(g.jclass(*id));
  }
  if (hits.empty()) throw std::logic_error("empty eta image");
  // candidate: minimal rank, then pairwise minimum search
  JClassId cand = *hits.begin();
  for (JClassId j : hits)
    if (g.jclass_rank(j) < g.jclass_rank(cand)) cand = j;
  bool moved = true;
  while (moved) {
    moved = false;
    for (JClassId j : hits)
      if (j != cand && g.j_below(j, cand)) {
        cand = j;
        moved = true;
      }
  }
  for (JClassId j : hits)
    if (!g.j_below(cand, j))
      throw std::logic_error("hit classes have no minimum: J-order verification failed");
  return cand;
}

int max_codeword_length(const Dfa& code) {
  // longest accepted word of a finite language: longest path in the acyclic
  // trim automaton
  Dfa t = trim(code);
  if (!is_finite_language(t)) throw std::invalid_argument("code is infinite");
  std::vector<int> depth(static_cast<size_t>(t.size()), -1);
  // topological longest path via DFS with memo
  std::vector<int> order;
  std::vector<int> state(static_cast<size_t>(t.size()), 0);
  std::vector<int> stack{t.initial()};
  while (!stack.empty()) {
    int q = stack.back();
    if (state[static_cast<size_t>(q)] == 0) {
      state[static_cast<size_t>(q)] = 1;
      for (int a = 0; a < t.alphabet().size(); ++a) {
        int r = t.step_index(q, a);
        if (r != Dfa::NO_STATE && state[static_cast<size_t>(r)] == 0) stack.push_back(r);
      }
    } else {
      stack.pop_back();
      if (state[static_cast<size_t>(q)] == 1) {
        state[static_cast<size_t>(q)] = 2;
        order.push_back(q);
      }
    }
  }
  for (int q : order) {
    int best = t.is_final(q) ? 0 : -1;
    for (int a = 0; a < t.alphabet().size(); ++a) {
      int r = t.step_index(q, a);
      if (r != Dfa::NO_STATE && depth[static_cast<size_t>(r)] >= 0)
        best = std::max(best, depth[static_cast<size_t>(r)] + 1);
    }
    depth[static_cast<size_t>(q)] = best;
  }
  return depth[static_cast<size_t>(t.initial())];
}

}  // namespace

JClassId FPair::f_min_jclass() const {
  if (jmin_) return *jmin_;
  const TransitionMonoid& m = monoid();
  const GreenData& g = green();
  EtaImage img = f_.eta_image(star_);
  JClassId jmin = minimum_hit_class(m, g, img.all);

  if (f_.is_substitutive()) {
    // cross-check through the long-word route: a factor longer than every
    // codeword is not an internal factor, so its image lies in the F-minimum
    // class
    int len = std::max(1, max_codeword_length(code_) - 1);
    Word w0 = f_.some_factor(len);
    int id = m.eta(w0);
    if (g.jclass(id) != jmin)
      throw std::logic_error("eta-image route and long-word route disagree on the F-minimum class");
  }
  jmin_ = jmin;
  return jmin;
}

bool FPair::f_maximal() const {
  Dfa pref = prefix_closure(star_);
  Dfa suff = suffix_closure(star_);
  if (f_.is_sofic()) {
    const Dfa& fd = f_.sofic_source().factor_dfa();
    return is_subset(fd, pref) && is_subset(fd, suff);
  }
  for (const Word& w : f_.factors(opts_.max_factor_len))
    if (!pref.accepts(w) || !suff.accepts(w)) return false;
  return true;
}

int FPair::f_degree() const {
  if (fdeg_) return *fdeg_;
  if (!f_maximal())
    throw std::invalid_argument("code is not F-maximal (F-completeness check failed)");
  int by_rank = green().jclass_rank(f_min_jclass());

  // cross-validation: parse counts stabilize at d_F on non-internal factors
  ParseCounter delta(code_);
  bool validated = false;
  for (int len = 1; len <= opts_.max_factor_len && !validated; ++len) {
    for (const Word& w : f_.factors(len)) {
      if (static_cast<int>(w.size()) != len) continue;
      if (!internal_factor_test(code_, w)) {
        long long d = delta.count(w);
        if (d != by_rank)
          throw std::logic_error("parse-count cross-validation failed: delta=" +
                                 std::to_string(d) + " rank=" + std::to_string(by_rank));
        validated = true;
        break;
      }
    }
  }
  if (!validated)
    throw StabilizationError("no non-internal factor within the factor bound");
  fdeg_ = by_rank;
  return by_rank;
}

const PermutationGroupOnSet& FPair::f_group() const {
  if (!fgroup_)
    fgroup_ = std::make_unique<PermutationGroupOnSet>(
        schutzenberger_group(monoid(), green(), f_min_jclass()));
  return *fgroup_;
}

std::optional<Word> FPair::base_word(int length) const {
  const TransitionMonoid& m = monoid();
  const GreenData& g = green();
  JClassId jmin = f_min_jclass();
  for (const Word& w : f_.factors(length)) {
    if (static_cast<int>(w.size()) != length) continue;
    if (g.jclass(m.eta(w)) == jmin) return w;  // factors iterate in lex order
  }
  return std::nullopt;
}

namespace {

// Action group of the first return words of F to u on the image of eta(u) in
// the star automaton. Substitutive sources contribute the explicit return
// words; sofic sources contribute the finitely many eta-images of the
// rational return language, labeled by shortest witnesses.
PermutationGroupOnSet action_group(const Dfa& star, const RecurrentSet& f, const Word& u,
                                   int return_cap) {
  Transformation tu = identity_transformation(star.size());
  for (char c : u) tu = compose(tu, letter_transformation(star, star.alphabet().index(c)));
  std::vector<int> domain = image_of(tu);
  std::map<int, int> pos;
  for (size_t i = 0; i < domain.size(); ++i) pos[domain[i]] = static_cast<int>(i);

  auto perm_of = [&](const Transformation& tv, const Word& label) {
    PermutationGroupOnSet::Perm p(domain.size());
    for (size_t i = 0; i < domain.size(); ++i) {
      int16_t y = tv[static_cast<size_t>(domain[i])];
      auto it = y == UNDEF ? pos.end() : pos.find(y);
      if (it == pos.end())
        throw std::logic_error("return word '" + label + "' does not permute the base image");
      p[i] = it->second;
    }
    return p;
  };

  std::vector<std::pair<Word, PermutationGroupOnSet::Perm>> gens;
  std::set<PermutationGroupOnSet::Perm> seen;

  if (f.is_substitutive()) {
    ReturnWordSet rws = f.return_words(u, return_cap);
    for (const Word& v : rws.words) {
      Transformation tv = identity_transformation(star.size());
      for (char c : v) tv = compose(tv, letter_transformation(star, star.alphabet().index(c)));
      auto p = perm_of(tv, v);
      if (seen.insert(p).second) gens.emplace_back(v, p);
    }
  } else {
    ReturnWordSet rws = f.return_words(u, return_cap);
    const Dfa& rd = *rws.language;
    // BFS over (return-dfa state, transformation); shortest witness first
    struct Node {
      int q;
      Transformation t;
      bool operator<(const Node& o) const { return std::tie(q, t) < std::tie(o.q, o.t); }
    };
    std::map<Node, Word> seen_nodes;
    std::deque<Node> todo;
    Node start{rd.initial(), identity_transformation(star.size())};
    seen_nodes[start] = Word();
    todo.push_back(start);
    std::set<Transformation> final_images;
    while (!todo.empty()) {
      Node cur = todo.front();
      todo.pop_front();
      Word w = seen_nodes[cur];
      if (rd.is_final(cur.q) && final_images.insert(cur.t).second) {
        auto p = perm_of(cur.t, w);
        if (seen.insert(p).second) gens.emplace_back(w, p);
      }
      for (int a = 0; a < rd.alphabet().size(); ++a) {
        int q2 = rd.step_index(cur.q, a);
        if (q2 == Dfa::NO_STATE) continue;
        Node nxt{q2, compose(cur.t, letter_transformation(star, a))};
        if (seen_nodes.emplace(nxt, w + rd.alphabet().letter(a)).second) todo.push_back(nxt);
      }
      if (seen_nodes.size() > 2000000) throw StabilizationError("return image search cap exceeded");
    }
  }
  return PermutationGroupOnSet(domain, gens);
}

ChargedVerdict charged_verdict_over(const TransitionMonoid& m, const GreenData& g,
                                    JClassId target, std::size_t expected_order,
                                    const Dfa& star, const RecurrentSet& f,
                                    const AnalysisOptions& opts) {
  ChargedVerdict out;
  out.expected_order = expected_order;
  out.window = opts.window;
  out.jmin_is_minimum_ideal = (target == g.minimum_ideal());

  int run = 0;
  std::size_t run_order = 0;
  for (int len = 1; len <= opts.max_factor_len; ++len) {
    std::optional<Word> base;
    for (const Word& w : f.factors(len)) {
      if (static_cast<int>(w.size()) != len) continue;
      if (g.jclass(m.eta(w)) == target) {
        base = w;
        break;
      }
    }
    if (!base) {
      run = 0;
      continue;
    }
    PermutationGroupOnSet grp = action_group(star, f, *base, opts.return_cap);
    out.evidence.push_back({len, *base, grp.order()});
    if (run > 0 && grp.order() == run_order) {
      ++run;
    } else {
      run = 1;
      run_order = grp.order();
    }
    if (run >= opts.window) {
      out.charged = run_order == expected_order;
      return out;
    }
  }
  throw StabilizationError("base-word group order did not stabilize within the factor bound");
}

// Z-side bundle shared by the chargedness, consistency and equivalence paths.
struct ZSide {
  Dfa code;
  Dfa star;
  TransitionMonoid m;
  GreenData g;
  PermutationGroupOnSet gz;
  int dz;

  ZSide(const Dfa& z_code, const AnalysisOptions& opts)
      : code(minimize(z_code)),
        star(star_automaton(code)),
        m(star, opts.monoid_cap),
        g(m),
        gz(schutzenberger_group(m, g, g.minimum_ideal())),
        dz(g.jclass_rank(g.minimum_ideal())) {}
};

ChargedVerdict charged_with(const ZSide& zs, const RecurrentSet& f, const AnalysisOptions& opts) {
  // condition (i): the F-minimum class of M(Z*) is the minimum ideal
  EtaImage img = f.eta_image(zs.star);
  JClassId fmin = minimum_hit_class(zs.m, zs.g, img.all);
  if (fmin != zs.g.minimum_ideal()) {
    ChargedVerdict out;
    out.charged = false;
    out.expected_order = zs.gz.order();
    out.jmin_is_minimum_ideal = false;
    out.window = opts.window;
    return out;
  }
  return charged_verdict_over(zs.m, zs.g, zs.g.minimum_ideal(), zs.gz.order(), zs.star, f, opts);
}

EquivalenceWitness equivalence_with(const ZSide& zs, const FPair& xr, const RecurrentSet& f,
                                    const AnalysisOptions& opts) {
  int dz = zs.dz;
  int dfx = xr.f_degree();

  // base word qualifying on both sides
  std::optional<Word> base;
  for (int len = 1; len <= opts.max_factor_len && !base; ++len) {
    for (const Word& w : f.factors(len)) {
      if (static_cast<int>(w.size()) != len) continue;
      if (xr.green().jclass(xr.monoid().eta(w)) != xr.f_min_jclass()) continue;
      if (zs.g.jclass(zs.m.eta(w)) != zs.g.minimum_ideal()) continue;
      base = w;
      break;
    }
  }
  if (!base) throw StabilizationError("no qualifying base word within the factor bound");

  PermutationGroupOnSet xgrp = action_group(xr.star(), f, *base, opts.return_cap);

  // f(i_X . base v1...vk) = i_Z . base v1...vk over return-word products
  std::map<int, int> fmap, finv;
  int x0 = xr.star().run(xr.star().initial(), *base);
  int z0 = zs.star.run(zs.star.initial(), *base);
  if (x0 == Dfa::NO_STATE || z0 == Dfa::NO_STATE)
    throw std::logic_error("base word not readable from the initial states");
  fmap[x0] = z0;
  finv[z0] = x0;
  std::deque<std::pair<int, int>> todo{{x0, z0}};
  while (!todo.empty()) {
    auto [px, pz] = todo.front();
    todo.pop_front();
    for (const auto& [v, perm] : xgrp.generators()) {
      int qx = xr.star().run(px, v);
      int qz = zs.star.run(pz, v);
      if (qx == Dfa::NO_STATE || qz == Dfa::NO_STATE)
        throw std::logic_error("return word killed a state during equivalence construction");
      auto it = fmap.find(qx);
      auto jt = finv.find(qz);
      if (it != fmap.end()) {
        if (it->second != qz)
          throw std::logic_error("equivalence map is not well defined (charged hypothesis violated)");
      } else if (jt != finv.end()) {
        throw std::logic_error("equivalence map is not injective (charged hypothesis violated)");
      } else {
        fmap[qx] = qz;
        finv[qz] = qx;
        todo.push_back({qx, qz});
      }
    }
  }
  if (static_cast<int>(fmap.size()) != dz || dz != dfx)
    throw std::logic_error("equivalence domain size does not match the degree");

  // exhaustive verification f(x.g) = f(x).alpha(g)
  for (const auto& [px, pz] : fmap)
    for (const auto& [v, perm] : xgrp.generators()) {
      int qx = xr.star().run(px, v);
      int qz = zs.star.run(pz, v);
      if (fmap.at(qx) != qz) throw std::logic_error("equivalence verification failed");
    }

  EquivalenceWitness out;
  out.base = *base;
  out.degree = dz;
  for (const auto& [px, pz] : fmap) out.f.emplace_back(px, pz);
  std::sort(out.f.begin(), out.f.end());
  for (const auto& [v, perm] : xgrp.generators()) out.alpha.emplace_back(v, v);
  return out;
}

ConsistencyReport consistency_with(const ZSide& zs, const FPair& xr, const RecurrentSet& f,
                                   const ChargedVerdict& weakly, const ChargedVerdict& charged,
                                   const AnalysisOptions& opts) {
  ConsistencyReport out;
  out.dZ = zs.dz;
  out.gZ_order = zs.gz.order();
  out.nil_simple_hypothesis = nil_simple(zs.m, zs.g);
  out.dFX = xr.f_degree();
  out.gFX_order = xr.f_group().order();
  out.weakly_charged = weakly.charged;
  out.item1_charged = charged.charged;
  bool degrees = out.dFX == out.dZ;
  out.iso = degrees && group_iso(xr.f_group(), zs.gz, opts.iso_cap).has_value();
  out.item2 = degrees && out.iso && out.weakly_charged;
  out.item3 = degrees && out.gFX_order == out.gZ_order && out.weakly_charged;
  out.agree = (out.item1_charged == out.item2) && (out.item2 == out.item3);
  if (opts.classify_bound > 0) {
    SetClassification cls = f.classify_set(opts.classify_bound);
    out.connected_within_bound = cls.connected;
  }
  return out;
}

}  // namespace

PermutationGroupOnSet FPair::return_word_group(const Word& u) const {
  // the base image must lie in the F-minimum class
  if (green().jclass(monoid().eta(u)) != f_min_jclass())
    throw std::invalid_argument("base word image is not in the F-minimum J-class");
  return action_group(star_, f_, u, opts_.return_cap);
}

ChargedVerdict is_weakly_f_charged(const FPair& x) {
  return charged_verdict_over(x.monoid(), x.green(), x.f_min_jclass(), x.f_group().order(),
                              x.star(), x.shift(), x.options());
}

ChargedVerdict is_f_charged(const Dfa& z_code, const RecurrentSet& f, AnalysisOptions opts) {
  ZSide zs(z_code, opts);
  return charged_with(zs, f, opts);
}

Dfa intersect_code_with_shift(const Dfa& z_code, const RecurrentSet& f, AnalysisOptions opts) {
  if (f.is_sofic()) return minimize(intersection(z_code, f.sofic_source().factor_dfa()));

  Dfa z = trim(minimize(z_code));
  std::vector<Word> words;
  for (int len = 1; len <= 4 * opts.max_factor_len; ++len) {
    bool live = false;
    for (const Word& w : f.factors(len)) {
      if (static_cast<int>(w.size()) != len) continue;
      int q = z.run(z.initial(), w);
      if (q == Dfa::NO_STATE) continue;
      if (z.is_final(q)) words.push_back(w);
      if (z.out_degree(q) > 0) live = true;  // proper prefix of a longer codeword
    }
    if (!live) return from_words(f.alphabet(), words);
  }
  throw StabilizationError("code-shift intersection did not close within the factor bound");
}

bool nil_simple(const TransitionMonoid& m, const GreenData& g) {
  // subsemigroup generated by the letter images
  std::vector<bool> seen(m.size(), false);
  std::deque<int> todo;
  for (int a = 0; a < m.automaton().alphabet().size(); ++a) {
    int id = m.gen(a);
    if (!seen[static_cast<size_t>(id)]) {
      seen[static_cast<size_t>(id)] = true;
      todo.push_back(id);
    }
  }
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop_front();
    for (int a = 0; a < m.automaton().alphabet().size(); ++a) {
      int r = m.right_step(id, a);
      if (!seen[static_cast<size_t>(r)]) {
        seen[static_cast<size_t>(r)] = true;
        todo.push_back(r);
      }
    }
  }
  for (std::size_t id = 0; id < m.size(); ++id)
    if (seen[id] && m.idempotent(static_cast<int>(id)) &&
        g.jclass(static_cast<int>(id)) != g.minimum_ideal())
      return false;
  return true;
}

int f_degree_via_parses(const Dfa& code, const RecurrentSet& f, int bound) {
  ParseCounter delta(code);
  for (int len = 1; len <= bound; ++len) {
    for (const Word& w : f.factors(len)) {
      if (static_cast<int>(w.size()) != len) continue;
      if (!internal_factor_test(code, w)) return static_cast<int>(delta.count(w));
    }
  }
  throw StabilizationError("no non-internal factor within the factor bound");
}

ConsistencyReport theorem_consistency(const Dfa& z_code, const RecurrentSet& f,
                                      AnalysisOptions opts) {
  ZSide zs(z_code, opts);
  Dfa x = intersect_code_with_shift(zs.code, f, opts);
  FPair xr(x, f, opts);
  ChargedVerdict weakly = is_weakly_f_charged(xr);
  ChargedVerdict charged = charged_with(zs, f, opts);
  return consistency_with(zs, xr, f, weakly, charged, opts);
}

EquivalenceWitness permutation_equivalence(const Dfa& z_code, const RecurrentSet& f,
                                           AnalysisOptions opts) {
  ZSide zs(z_code, opts);
  Dfa x = intersect_code_with_shift(zs.code, f, opts);
  FPair xr(x, f, opts);
  return equivalence_with(zs, xr, f, opts);
}

bool transitivity_check(const PermutationGroupOnSet& g) { return g.transitive(); }

std::string group_name(const PermutationGroupOnSet& g) {
  std::size_t n = g.order();
  if (n == 1) return "C1";
  // cyclic: some element of full order
  for (const auto& p : g.elements())
    if (static_cast<std::size_t>(PermutationGroupOnSet::perm_order(p)) == n) return "C" + std::to_string(n);
  std::size_t fact = 1;
  for (int i = 2; i <= g.degree(); ++i) fact *= static_cast<std::size_t>(i);
  if (n == fact) return "S" + std::to_string(g.degree());
  if (n * 2 == fact) {
    bool all_even = true;
    for (const auto& p : g.elements()) {
      // parity via cycle count
      std::vector<bool> seen(p.size(), false);
      int transpositions = 0;
      for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t x = i;
        while (!seen[x]) {
          seen[x] = true;
          x = static_cast<size_t>(p[x]);
          ++len;
        }
        transpositions += len - 1;
      }
      if (transpositions % 2) all_even = false;
    }
    if (all_even) return "A" + std::to_string(g.degree());
  }
  return "G" + std::to_string(n);
}

AnalysisReport analyze(const Dfa& z_code, const RecurrentSet& f, AnalysisOptions opts) {
  AnalysisReport r;
  r.z = analyze_code(z_code, opts.monoid_cap);
  if (!r.z.kind.bifix) throw std::invalid_argument("input code is not bifix");
  if (!r.z.maximal_bifix) throw std::invalid_argument("input code is not a maximal bifix code");

  ZSide zs(r.z.code_dfa, opts);
  r.z_monoid_size = zs.m.size();
  r.dZ = *r.z.deg;
  r.gZ_order = zs.gz.order();
  r.gZ_name = group_name(zs.gz);

  Dfa x = intersect_code_with_shift(r.z.code_dfa, f, opts);
  FPair xr(x, f, opts);
  r.x_monoid_size = xr.monoid().size();
  r.dFX = xr.f_degree();
  r.gFX_order = xr.f_group().order();
  r.gFX_name = group_name(xr.f_group());

  r.weakly = is_weakly_f_charged(xr);
  r.charged = charged_with(zs, f, opts);
  r.consistency = consistency_with(zs, xr, f, r.weakly, r.charged, opts);

  if (opts.equivalence && r.charged.charged) r.equivalence = equivalence_with(zs, xr, f, opts);
  if (opts.classify_bound > 0) r.classification = f.classify_set(opts.classify_bound);
  return r;
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["dZ"] = r.dZ;
  j["dFX"] = r.dFX;
  j["GZ"] = {{"order", r.gZ_order}, {"name", r.gZ_name}};
  j["GFX"] = {{"order", r.gFX_order}, {"name", r.gFX_name}};
  j["charged"] = r.charged.charged;
  j["weakly_charged"] = r.weakly.charged;
  if (r.equivalence) {
    nlohmann::json e;
    e["degree"] = r.equivalence->degree;
    e["base"] = r.equivalence->base;
    e["f"] = nlohmann::json::array();
    for (auto [x, y] : r.equivalence->f) e["f"].push_back({x, y});
    e["alpha"] = nlohmann::json::array();
    for (const auto& [g, i] : r.equivalence->alpha) e["alpha"].push_back({g, i});
    j["equivalence"] = e;
  }
  nlohmann::json ev;
  ev["z_monoid_size"] = r.z_monoid_size;
  ev["x_monoid_size"] = r.x_monoid_size;
  ev["z_is_group_code"] = r.z.group_code;
  ev["nil_simple"] = r.consistency.nil_simple_hypothesis;
  ev["theorem_items"] = {r.consistency.item1_charged, r.consistency.item2, r.consistency.item3};
  ev["theorem_agree"] = r.consistency.agree;
  nlohmann::json cw = nlohmann::json::array();
  for (const auto& e : r.charged.evidence) cw.push_back({{"len", e.length}, {"base", e.base}, {"order", e.group_order}});
  ev["charged_evidence"] = cw;
  nlohmann::json ww = nlohmann::json::array();
  for (const auto& e : r.weakly.evidence) ww.push_back({{"len", e.length}, {"base", e.base}, {"order", e.group_order}});
  ev["weakly_evidence"] = ww;
  ev["window"] = r.charged.window;
  if (r.classification) {
    ev["classification"] = {{"tree", r.classification->tree},
                            {"connected", r.classification->connected},
                            {"bound", r.classification->bound}};
    if (r.classification->tree_witness) ev["classification"]["tree_witness"] = *r.classification->tree_witness;
    if (r.classification->connected_witness)
      ev["classification"]["connected_witness"] = *r.classification->connected_witness;
  }
  j["evidence"] = ev;
  return j;
}

}  // namespace bifix
