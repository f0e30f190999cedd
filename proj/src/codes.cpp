#include "bifix/codes.hpp"

#include <stdexcept>

#include "bifix/green.hpp"
#include "bifix/monoid.hpp"

namespace bifix {

CodeKind code_kind(const Dfa& code) {
  if (code.accepts("")) throw std::invalid_argument("code contains the empty word");
  const Alphabet& a = code.alphabet();
  Dfa aplus = universal_plus(a);
  CodeKind k;
  k.prefix = intersection(code, concatenation({code, aplus})).accepts_empty_language();
  k.suffix = intersection(code, concatenation({aplus, code})).accepts_empty_language();
  k.bifix = k.prefix && k.suffix;
  return k;
}

bool is_maximal_bifix(const Dfa& code) {
  CodeKind k = code_kind(code);
  if (!k.bifix) throw std::invalid_argument("not a bifix code");
  Dfa star = star_automaton(code);
  Dfa all = universal(code.alphabet());
  return is_subset(all, prefix_closure(star)) && is_subset(all, suffix_closure(star));
}

bool is_group_automaton(const Dfa& aut) {
  Dfa t = trim(aut);
  if (t.size() != aut.size()) return false;  // not trim
  if (t.num_finals() != 1 || !t.is_final(t.initial())) return false;
  for (int a = 0; a < t.alphabet().size(); ++a) {
    std::vector<bool> hit(static_cast<size_t>(t.size()), false);
    for (int q = 0; q < t.size(); ++q) {
      int r = t.step_index(q, a);
      if (r == Dfa::NO_STATE || hit[static_cast<size_t>(r)]) return false;
      hit[static_cast<size_t>(r)] = true;
    }
  }
  return true;
}

bool is_group_code_language(const Dfa& code) {
  if (code.accepts("")) return false;
  return is_group_automaton(star_automaton(code));
}

ParseCounter::ParseCounter(const Dfa& code) {
  const Alphabet& a = code.alphabet();
  Dfa all = universal(a);
  astar_x_ = concatenation({all, code});
  x_star_ = star_automaton(code);
  x_astar_ = concatenation({code, all});
}

long long ParseCounter::count(const Word& w) const {
  int n = static_cast<int>(w.size());
  // forward state tables for A*X (prefixes) and X* (middles from each cut)
  std::vector<int> ax(static_cast<size_t>(n) + 1);
  ax[0] = astar_x_.initial();
  for (int i = 0; i < n; ++i)
    ax[static_cast<size_t>(i) + 1] =
        ax[static_cast<size_t>(i)] == Dfa::NO_STATE ? Dfa::NO_STATE
                                                    : astar_x_.step(ax[static_cast<size_t>(i)], w[static_cast<size_t>(i)]);
  std::vector<bool> prefix_free(static_cast<size_t>(n) + 1);  // w[0..i) not in A*X
  for (int i = 0; i <= n; ++i) {
    int q = ax[static_cast<size_t>(i)];
    prefix_free[static_cast<size_t>(i)] = (q == Dfa::NO_STATE) || !astar_x_.is_final(q);
  }
  // suffix table for XA*: w[j..n) not in XA*
  std::vector<bool> suffix_free(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    int q = x_astar_.initial();
    for (int k = j; k < n && q != Dfa::NO_STATE; ++k) q = x_astar_.step(q, w[static_cast<size_t>(k)]);
    suffix_free[static_cast<size_t>(j)] = (q == Dfa::NO_STATE) || !x_astar_.is_final(q);
  }
  long long total = 0;
  for (int i = 0; i <= n; ++i) {
    if (!prefix_free[static_cast<size_t>(i)]) continue;
    int q = x_star_.initial();
    for (int j = i; j <= n; ++j) {
      if (q != Dfa::NO_STATE && x_star_.is_final(q) && suffix_free[static_cast<size_t>(j)]) ++total;
      if (j < n && q != Dfa::NO_STATE) q = x_star_.step(q, w[static_cast<size_t>(j)]);
      if (q == Dfa::NO_STATE) break;  // no further middle from this cut
    }
  }
  return total;
}

long long parse_count(const Dfa& code, const Word& w) { return ParseCounter(code).count(w); }

std::optional<int> degree(const Dfa& code, std::size_t monoid_cap) {
  if (!is_maximal_bifix(code)) return std::nullopt;
  Dfa star = star_automaton(code);
  TransitionMonoid m(star, monoid_cap);
  GreenData g(m);
  return g.jclass_rank(g.minimum_ideal());
}

bool internal_factor_test(const Dfa& code, const Word& w) {
  const Alphabet& a = code.alphabet();
  Dfa aplus = universal_plus(a);
  Dfa wdfa = literal(a, w);
  Dfa inner = concatenation({aplus, wdfa, aplus});
  return !intersection(inner, code).accepts_empty_language();
}

bool is_finite_language(const Dfa& d) {
  // finite iff the trim automaton has no cycle
  Dfa t = trim(d);
  if (t.accepts_empty_language()) return true;
  std::vector<int> color(static_cast<size_t>(t.size()), 0);
  std::vector<std::pair<int, int>> frames{{t.initial(), 0}};
  color[static_cast<size_t>(t.initial())] = 1;
  while (!frames.empty()) {
    auto& [q, a] = frames.back();
    if (a < t.alphabet().size()) {
      int r = t.step_index(q, a);
      ++a;
      if (r == Dfa::NO_STATE) continue;
      if (color[static_cast<size_t>(r)] == 1) return false;  // back edge
      if (color[static_cast<size_t>(r)] == 0) {
        color[static_cast<size_t>(r)] = 1;
        frames.push_back({r, 0});
      }
    } else {
      color[static_cast<size_t>(q)] = 2;
      frames.pop_back();
    }
  }
  return true;
}

CodeAnalysis analyze_code(const Dfa& code, std::size_t monoid_cap) {
  CodeAnalysis out;
  out.code_dfa = minimize(code);
  out.kind = code_kind(out.code_dfa);
  out.star_dfa = star_automaton(out.code_dfa);
  out.maximal_bifix = out.kind.bifix && is_maximal_bifix(out.code_dfa);
  out.group_code = is_group_automaton(out.star_dfa);
  if (out.maximal_bifix) {
    TransitionMonoid m(out.star_dfa, monoid_cap);
    GreenData g(m);
    out.deg = g.jclass_rank(g.minimum_ideal());
  }
  return out;
}

}  // namespace bifix
