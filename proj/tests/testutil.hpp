#ifndef BIFIX_TESTUTIL_HPP
#define BIFIX_TESTUTIL_HPP

#include <random>

#include "bifix/json_io.hpp"
#include "bifix/language.hpp"
#include "bifix/shifts.hpp"

namespace bifix::testutil {

inline RecurrentSet fibonacci_set() {
  return RecurrentSet::substitutive(Substitution(Alphabet("ab"), {{'a', "ab"}, {'b', "a"}}), 'a');
}

inline RecurrentSet tribonacci_set() {
  return RecurrentSet::substitutive(
      Substitution(Alphabet("abc"), {{'a', "ab"}, {'b', "ac"}, {'c', "a"}}), 'a');
}

inline RecurrentSet tribonacci_ac_set() {
  // letter-to-letter image over {a,c}
  return RecurrentSet::substitutive(
      Substitution(Alphabet("abc"), {{'a', "ab"}, {'b', "ac"}, {'c', "a"}}), 'a', {{'b', 'a'}});
}

inline RecurrentSet thue_morse_set() {
  return RecurrentSet::substitutive(Substitution(Alphabet("ab"), {{'a', "ab"}, {'b', "ba"}}), 'a');
}

inline RecurrentSet even_shift_set() {
  return RecurrentSet::sofic(
      SoficPresentation(Alphabet("ab"), 2, {{0, 'a', 0}, {0, 'b', 1}, {1, 'b', 0}}));
}

inline Dfa even_shift_code() {
  Alphabet ab("ab");
  Dfa tail = compile_language(LanguageSpec::from_regex(ab, "b b (a a* b)* b"));
  return union_of(from_words(ab, {"aa", "ab", "ba"}), tail);
}

inline Dfa thue_morse_group_star() {
  // a -> (123), b -> (345) acting on 5 points, stabilizer of the first
  std::vector<int> pa{1, 2, 0, 3, 4}, pb{0, 1, 3, 4, 2};
  std::vector<int> delta(10);
  for (int q = 0; q < 5; ++q) {
    delta[q * 2 + 0] = pa[q];
    delta[q * 2 + 1] = pb[q];
  }
  return Dfa(Alphabet("ab"), 5, 0, {true, false, false, false, false}, delta);
}

inline Dfa degree4_group_star() {
  std::vector<int> pa{1, 2, 3, 0}, pb{0, 1, 3, 2}, pc{0, 3, 1, 2}, pd{0, 2, 1, 3};
  std::vector<int> delta(16);
  for (int q = 0; q < 4; ++q) {
    delta[q * 4 + 0] = pa[q];
    delta[q * 4 + 1] = pb[q];
    delta[q * 4 + 2] = pc[q];
    delta[q * 4 + 3] = pd[q];
  }
  return Dfa(Alphabet("abcd"), 4, 0, {true, false, false, false}, delta);
}

/// Random group code: random letter permutations on up to max_states points,
/// restricted to the orbit of 0 (so the automaton is trim, hence minimal).
inline Dfa random_group_code(const Alphabet& a, int max_states, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick_states(1, max_states);
  int n = pick_states(rng);
  std::vector<std::vector<int>> perms;
  for (int i = 0; i < a.size(); ++i) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) p[static_cast<size_t>(q)] = q;
    std::shuffle(p.begin(), p.end(), rng);
    perms.push_back(p);
  }
  // orbit of 0
  std::vector<int> orbit{0};
  std::vector<bool> seen(static_cast<size_t>(n), false);
  seen[0] = true;
  for (size_t i = 0; i < orbit.size(); ++i)
    for (const auto& p : perms) {
      int r = p[static_cast<size_t>(orbit[i])];
      if (!seen[static_cast<size_t>(r)]) {
        seen[static_cast<size_t>(r)] = true;
        orbit.push_back(r);
      }
    }
  std::vector<int> index(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < orbit.size(); ++i) index[static_cast<size_t>(orbit[i])] = static_cast<int>(i);
  int m = static_cast<int>(orbit.size());
  std::vector<int> delta(static_cast<size_t>(m) * a.size());
  for (int q = 0; q < m; ++q)
    for (int i = 0; i < a.size(); ++i)
      delta[static_cast<size_t>(q) * a.size() + i] =
          index[static_cast<size_t>(perms[static_cast<size_t>(i)][static_cast<size_t>(orbit[static_cast<size_t>(q)])])];
  std::vector<bool> finals(static_cast<size_t>(m), false);
  finals[0] = true;
  Dfa star(a, m, 0, finals, delta);
  return code_of_star_automaton(star);
}

/// Random finite bifix code: take A^d for random small d, or a random
/// bifix-filtered word set.
inline Dfa random_bifix_code(const Alphabet& a, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(1, 3);
  int kind = pick(rng);
  if (kind == 1) {
    // uniform code A^d
    std::uniform_int_distribution<int> dd(1, 3);
    int d = dd(rng);
    std::vector<Word> words{""};
    for (int i = 0; i < d; ++i) {
      std::vector<Word> next;
      for (const Word& w : words)
        for (int c = 0; c < a.size(); ++c) next.push_back(w + a.letter(c));
      words = std::move(next);
    }
    return from_words(a, words);
  }
  // random antichain under both prefix and suffix order
  std::uniform_int_distribution<int> nwords(2, 6), len(1, 5), letter(0, a.size() - 1);
  std::vector<Word> words;
  int want = nwords(rng);
  int guard = 0;
  while (static_cast<int>(words.size()) < want && ++guard < 200) {
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w += a.letter(letter(rng));
    bool ok = true;
    for (const Word& v : words) {
      const Word &s = v.size() <= w.size() ? v : w, &l2 = v.size() <= w.size() ? w : v;
      if (l2.compare(0, s.size(), s) == 0 || l2.compare(l2.size() - s.size(), s.size(), s) == 0)
        ok = false;
    }
    if (ok) words.push_back(w);
  }
  return from_words(a, words);
}

}  // namespace bifix::testutil

#endif
