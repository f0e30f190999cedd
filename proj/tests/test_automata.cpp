#include <doctest.h>

#include "bifix/dfa.hpp"
#include "bifix/json_io.hpp"
#include "bifix/language.hpp"

using namespace bifix;

namespace {

const Alphabet AB("ab");

// brute-force membership over all words up to a length bound
std::vector<Word> all_words(const Alphabet& a, int maxlen) {
  std::vector<Word> out{""};
  size_t start = 0;
  for (int len = 1; len <= maxlen; ++len) {
    size_t end = out.size();
    for (size_t i = start; i < end; ++i)
      for (int c = 0; c < a.size(); ++c) out.push_back(out[i] + a.letter(c));
    start = end;
  }
  return out;
}

bool brute_star_member(const std::vector<Word>& code, const Word& w) {
  // DP factorization of w into code words
  std::vector<bool> ok(w.size() + 1, false);
  ok[0] = true;
  for (size_t i = 0; i <= w.size(); ++i) {
    if (!ok[i]) continue;
    for (const Word& x : code)
      if (w.compare(i, x.size(), x) == 0) ok[i + x.size()] = true;
  }
  return ok[w.size()];
}

}  // namespace

TEST_CASE("word list compiles to the minimal automaton") {
  Dfa d = compile_language(LanguageSpec::from_word_list(AB, {"aa", "ab", "ba"}));
  // initial, after-a, after-b, final: the two middle states have distinct futures
  CHECK(d.size() == 4);
  for (const Word& w : all_words(AB, 3)) {
    bool expect = (w == "aa" || w == "ab" || w == "ba");
    CHECK(d.accepts(w) == expect);
  }
}

TEST_CASE("empty word list gives the empty language") {
  Dfa d = compile_language(LanguageSpec::from_word_list(AB, {}));
  CHECK(d.accepts_empty_language());
  for (const Word& w : all_words(AB, 2)) CHECK(!d.accepts(w));
}

TEST_CASE("mini-regex of the even-shift tail code") {
  // b b (a a* b)* b  ==  b^2 (a^+ b)* b
  Dfa d = compile_language(LanguageSpec::from_regex(AB, "b b (a a* b)* b"));
  CHECK(d.accepts("bbb"));
  CHECK(d.accepts("bbabb"));
  CHECK(d.accepts("bbaababb"));
  CHECK(!d.accepts("bbab"));
  CHECK(!d.accepts("bb"));
  // derived enumeration up to length 6: w in L iff w = b b (a^+ b)^k b
  for (const Word& w : all_words(AB, 6)) {
    bool expect = false;
    if (w.size() >= 3 && w[0] == 'b' && w[1] == 'b' && w.back() == 'b') {
      // middle must parse as (a^+ b)*
      Word mid = w.substr(2, w.size() - 3);
      bool ok = true;
      size_t i = 0;
      while (i < mid.size()) {
        size_t j = i;
        while (j < mid.size() && mid[j] == 'a') ++j;
        if (j == i || j == mid.size() || mid[j] != 'b') {
          ok = false;
          break;
        }
        i = j + 1;
      }
      expect = ok;
    }
    CHECK(d.accepts(w) == expect);
  }
}

TEST_CASE("regex errors") {
  CHECK_THROWS_AS(compile_language(LanguageSpec::from_regex(AB, "a | | b")), std::invalid_argument);
  CHECK_THROWS_AS(compile_language(LanguageSpec::from_regex(AB, "(a b")), std::invalid_argument);
  CHECK_THROWS_AS(compile_language(LanguageSpec::from_regex(AB, "a c")), std::invalid_argument);
}

TEST_CASE("minimize is idempotent and canonical") {
  Dfa d = compile_language(LanguageSpec::from_regex(AB, "(a|b)(a|b)"));
  Dfa m1 = minimize(d);
  Dfa m2 = minimize(m1);
  CHECK(m1.size() == m2.size());
  CHECK(m1 == m2);
  // same language, different spec, identical canonical automaton
  Dfa e = compile_language(LanguageSpec::from_word_list(AB, {"aa", "ab", "ba", "bb"}));
  CHECK(minimize(e) == m1);
}

TEST_CASE("star automaton of the Fibonacci code has 3 states") {
  Dfa x = from_words(AB, {"aa", "ab", "ba"});
  Dfa s = star_automaton(x);
  CHECK(s.size() == 3);
  CHECK(s.initial() == 0);
  CHECK(s.num_finals() == 1);
  CHECK(s.is_final(0));
  // structure of the paper's figure, BFS-numbered: 0-a->1, 0-b->2, 1-a,b->0, 2-a->0
  CHECK(s.step(0, 'a') == 1);
  CHECK(s.step(0, 'b') == 2);
  CHECK(s.step(1, 'a') == 0);
  CHECK(s.step(1, 'b') == 0);
  CHECK(s.step(2, 'a') == 0);
  CHECK(s.step(2, 'b') == Dfa::NO_STATE);
}

TEST_CASE("star automaton accepts exactly the code factorizations") {
  std::vector<Word> code{"aa", "ab", "ba"};
  Dfa s = star_automaton(from_words(AB, code));
  for (const Word& w : all_words(AB, 12))
    CHECK(s.accepts(w) == brute_star_member(code, w));
  CHECK(s.accepts("abba"));
}

TEST_CASE("star of a single letter loops") {
  Dfa s = star_automaton(from_words(Alphabet("a"), {"a"}));
  CHECK(s.size() == 1);
  CHECK(s.accepts(""));
  CHECK(s.accepts("aaa"));
}

TEST_CASE("star automaton rejects codes with the empty word") {
  CHECK_THROWS_AS(star_automaton(from_words(AB, {"", "a"})), std::invalid_argument);
}

TEST_CASE("boolean combinations") {
  Dfa sq = compile_language(LanguageSpec::from_regex(AB, "(a|b)(a|b)"));
  Dfa fib2 = from_words(AB, {"aa", "ab", "ba"});
  // intersection of A^2 with the Fibonacci length-2 factors
  Dfa both = intersection(sq, fib2);
  CHECK(same_language(both, fib2));
  CHECK(difference(sq, sq).accepts_empty_language());
  // union assembling the even-shift code
  Dfa tail = compile_language(LanguageSpec::from_regex(AB, "b b a a* b b"));
  Dfa z = union_of(union_of(fib2, tail), from_words(AB, {"bbb"}));
  CHECK(z.accepts("aa"));
  CHECK(z.accepts("bbb"));
  CHECK(!z.accepts("bbaab"));
  CHECK(z.accepts("bbaabb"));
  CHECK_THROWS_AS(intersection(sq, from_words(Alphabet("ac"), {"a"})), std::invalid_argument);
}

TEST_CASE("subset checks") {
  Dfa sq = compile_language(LanguageSpec::from_regex(AB, "(a|b)(a|b)"));
  CHECK(is_subset(from_words(AB, {"aa"}), sq));
  CHECK(!is_subset(sq, from_words(AB, {"aa"})));
}

TEST_CASE("prefix and suffix closures") {
  Dfa x = from_words(AB, {"aab"});
  Dfa p = prefix_closure(x);
  CHECK(p.accepts(""));
  CHECK(p.accepts("a"));
  CHECK(p.accepts("aa"));
  CHECK(p.accepts("aab"));
  CHECK(!p.accepts("ab"));
  Dfa s = suffix_closure(x);
  CHECK(s.accepts("b"));
  CHECK(s.accepts("ab"));
  CHECK(!s.accepts("aa"));
}

TEST_CASE("json round trip") {
  Dfa d = star_automaton(from_words(AB, {"aa", "ab", "ba"}));
  Dfa back = dfa_from_json(dfa_to_json(d));
  CHECK(back == d);
}

TEST_CASE("code recovered from a star automaton") {
  // A^2 as the group code of the 2-state cyclic automaton
  Alphabet a = AB;
  Dfa star(a, 2, 0, {true, false}, {1, 1, 0, 0});
  Dfa code = code_of_star_automaton(star);
  CHECK(same_language(code, from_words(a, {"aa", "ab", "ba", "bb"})));
}
