#include <doctest.h>

#include <set>

#include "bifix/language.hpp"
#include "bifix/shifts.hpp"

using namespace bifix;

namespace {

const Alphabet AB("ab");
const Alphabet ABC("abc");

Substitution fibonacci() { return Substitution(AB, {{'a', "ab"}, {'b', "a"}}); }
Substitution tribonacci() { return Substitution(ABC, {{'a', "ab"}, {'b', "ac"}, {'c', "a"}}); }
Substitution thue_morse() { return Substitution(AB, {{'a', "ab"}, {'b', "ba"}}); }

RecurrentSet fib_set() { return RecurrentSet::substitutive(fibonacci(), 'a'); }
RecurrentSet tm_set() { return RecurrentSet::substitutive(thue_morse(), 'a'); }

RecurrentSet even_shift() {
  return RecurrentSet::sofic(SoficPresentation(AB, 2, {{0, 'a', 0}, {0, 'b', 1}, {1, 'b', 0}}));
}

// oracle: factors of a long explicit iterate
std::set<Word> iterate_factors(const Substitution& s, char seed, int iters, int maxlen) {
  Word w = s.iterate(seed, iters);
  std::set<Word> out;
  for (int len = 0; len <= maxlen; ++len)
    for (size_t i = 0; i + len <= w.size(); ++i) out.insert(w.substr(i, len));
  return out;
}

Word tau_k(const Word& w, int k) {
  Substitution t = thue_morse();
  Word cur = w;
  for (int i = 0; i < k; ++i) cur = t.apply(cur);
  return cur;
}

}  // namespace

TEST_CASE("primitivity") {
  CHECK(fibonacci().is_primitive());
  CHECK(tribonacci().is_primitive());
  CHECK(!Substitution(AB, {{'a', "a"}, {'b', "b"}}).is_primitive());
}

TEST_CASE("Fibonacci factors up to length 2") {
  RecurrentSet fib = fib_set();
  const std::set<Word>& f = fib.factors(2);
  std::set<Word> expect{"", "a", "b", "aa", "ab", "ba"};
  std::set<Word> got;
  for (const Word& w : f)
    if (w.size() <= 2) got.insert(w);
  CHECK(got == expect);
}

TEST_CASE("factor sets match long-iterate enumeration") {
  {
    std::set<Word> oracle = iterate_factors(fibonacci(), 'a', 20, 12);
    RecurrentSet fib = fib_set();
    const std::set<Word>& got = fib.factors(12);
    CHECK(std::set<Word>(got.begin(), got.end()) == oracle);
  }
  {
    std::set<Word> oracle = iterate_factors(thue_morse(), 'a', 14, 10);
    RecurrentSet tm = tm_set();
    const std::set<Word>& got = tm.factors(10);
    CHECK(std::set<Word>(got.begin(), got.end()) == oracle);
  }
  {
    std::set<Word> oracle = iterate_factors(tribonacci(), 'a', 18, 9);
    RecurrentSet f = RecurrentSet::substitutive(tribonacci(), 'a');
    const std::set<Word>& got = f.factors(9);
    CHECK(std::set<Word>(got.begin(), got.end()) == oracle);
  }
}

TEST_CASE("even shift factors and membership") {
  RecurrentSet e = even_shift();
  CHECK(e.member(""));
  CHECK(e.member("bb"));
  CHECK(!e.member("aba"));  // interior odd b-block
  CHECK(e.member("bab"));   // labels the path 2-b-1-a-1-b-2
  CHECK(e.member("abba"));
  CHECK(e.member("bbab"));
  const std::set<Word>& f3 = e.factors(3);
  std::set<Word> got;
  for (const Word& w : f3)
    if (w.size() <= 3) got.insert(w);
  // every word of length <= 3 except aba
  std::set<Word> expect{"",    "a",   "b",   "aa",  "ab",  "ba",  "bb",
                        "aaa", "aab", "abb", "baa", "bab", "bba", "bbb"};
  CHECK(got == expect);
}

TEST_CASE("membership vs iterate oracle (Thue-Morse)") {
  RecurrentSet f = tm_set();
  std::set<Word> oracle = iterate_factors(thue_morse(), 'a', 12, 8);
  // every word of length <= 8
  std::vector<Word> layer{""};
  for (int len = 1; len <= 8; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (char c : {'a', 'b'}) next.push_back(w + c);
    for (const Word& w : next) CHECK(f.member(w) == (oracle.count(w) > 0));
    layer = std::move(next);
  }
  CHECK(f.member("aabab"));
  CHECK(!fib_set().member("bb"));
}

TEST_CASE("extension graphs of the paper examples") {
  // Thue-Morse aba: two connected components
  RecurrentSet tm = tm_set();
  ExtensionGraph g = tm.extension_graph("aba");
  CHECK(g.components == 2);
  CHECK(!g.connected);
  // its edges come from A*abaA* cap F = {aabab, babaa}
  std::vector<std::pair<char, char>> expect{{'a', 'b'}, {'b', 'a'}};
  CHECK(g.edges == expect);

  // alpha(Tribonacci): a^3 extension graph is K_{2,2}
  RecurrentSet at = RecurrentSet::substitutive(tribonacci(), 'a', {{'b', 'a'}});
  ExtensionGraph k22 = at.extension_graph("aaa");
  CHECK(k22.left.size() == 2);
  CHECK(k22.right.size() == 2);
  CHECK(k22.edges.size() == 4);
  CHECK(k22.connected);
  CHECK(!k22.tree);
}

TEST_CASE("classification of the bundled sets") {
  RecurrentSet fset = fib_set();
  SetClassification fib = fset.classify_set(6);
  CHECK(fib.tree);
  CHECK(fib.connected);

  RecurrentSet tset = tm_set();
  SetClassification tm = tset.classify_set(4);
  CHECK(!tm.connected);
  CHECK(!tm.tree);
  CHECK(tm.connected_witness == Word("aba"));

  RecurrentSet at = RecurrentSet::substitutive(tribonacci(), 'a', {{'b', 'a'}});
  SetClassification a = at.classify_set(4);
  CHECK(a.connected);
  CHECK(!a.tree);
  CHECK(a.tree_witness == Word("aaa"));
}

TEST_CASE("Fibonacci return words to a") {
  RecurrentSet fib = fib_set();
  ReturnWordSet r = fib.return_words("a");
  CHECK(r.complete);
  CHECK(r.words == std::vector<Word>{"a", "ba"});
}

TEST_CASE("Thue-Morse return words to tau^4(b)") {
  Word u = tau_k("b", 4);
  CHECK(u == "baababbaabbabaab");
  RecurrentSet tm = tm_set();
  ReturnWordSet r = tm.return_words(u, 64);
  CHECK(r.complete);
  // from the first-return definition: gaps between consecutive occurrences
  Word t4b = u, t3a = tau_k("a", 3), t3b = tau_k("b", 3), t4a = tau_k("a", 4);
  std::vector<Word> expect{t4b, t3a + t4b, t3b + t4b, t4a + t4b};
  std::sort(expect.begin(), expect.end(), shortlex_less);
  CHECK(r.words == expect);
  // independent oracle: occurrence gaps in a long iterate
  Word big = tau_k("a", 15);
  std::set<Word> gaps;
  std::vector<size_t> occ;
  for (size_t i = 0; i + u.size() <= big.size(); ++i)
    if (big.compare(i, u.size(), u) == 0) occ.push_back(i);
  for (size_t k = 0; k + 1 < occ.size(); ++k)
    gaps.insert(big.substr(occ[k] + u.size(), occ[k + 1] - occ[k]));
  CHECK(std::set<Word>(r.words.begin(), r.words.end()) == gaps);
}

TEST_CASE("periodic set has a single return word") {
  // factors of a^*: the one-letter substitution a -> aa
  RecurrentSet p = RecurrentSet::substitutive(Substitution(Alphabet("a"), {{'a', "aa"}}), 'a');
  ReturnWordSet r = p.return_words("a");
  CHECK(r.words == std::vector<Word>{"a"});
}

TEST_CASE("return words form a prefix code") {
  RecurrentSet tm = tm_set();
  for (const Word& u : {Word("a"), Word("ab"), Word("aba")}) {
    ReturnWordSet r = tm.return_words(u, 64);
    for (const Word& v : r.words)
      for (const Word& w : r.words)
        if (v != w) CHECK(w.compare(0, v.size(), v) != 0);
  }
}

TEST_CASE("sofic return language of the even shift") {
  RecurrentSet e = even_shift();
  ReturnWordSet r = e.return_words("a");
  REQUIRE(r.language.has_value());
  const Dfa& d = *r.language;
  CHECK(d.accepts("a"));
  CHECK(d.accepts("bba"));
  CHECK(d.accepts("bbbba"));
  CHECK(!d.accepts("ba"));    // aba is not an even-shift factor
  CHECK(!d.accepts("aa"));    // internal occurrence of a
  CHECK(!d.accepts(""));
  // returns to bb, including the overlapping return b (bb.b = bbb)
  ReturnWordSet r2 = e.return_words("bb");
  CHECK(r2.language->accepts("b"));
  CHECK(!r2.language->accepts("bb"));       // bbbb has an internal occurrence at offset 1
  CHECK(r2.language->accepts("abb"));       // bb.abb = bbabb
  CHECK(r2.language->accepts("aabb"));
  CHECK(!r2.language->accepts("babb"));     // the return to bb in bb.babb happens at b already
}

TEST_CASE("recurrence: sampled factors co-occur") {
  RecurrentSet f = fib_set();
  const std::set<Word>& fac = f.factors(4);
  std::vector<Word> words(fac.begin(), fac.end());
  for (const Word& u : words) {
    if (u.size() != 3) continue;
    for (const Word& v : words) {
      if (v.size() != 3) continue;
      bool found = false;
      for (const Word& w : f.factors(16))
        if (w.size() >= u.size() + v.size() &&
            w.compare(0, u.size(), u) == 0 &&
            w.compare(w.size() - v.size(), v.size(), v) == 0) {
          found = true;
          break;
        }
      CHECK(found);
    }
  }
}

TEST_CASE("factoriality of cached factor sets") {
  RecurrentSet f = tm_set();
  for (const Word& w : f.factors(6)) {
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t len = 0; i + len <= w.size(); ++len) CHECK(f.member(w.substr(i, len)));
  }
}

TEST_CASE("eta image of the even shift in M(Z*)") {
  // the even-shift eta image engine against direct enumeration
  Dfa tail = compile_language(LanguageSpec::from_regex(AB, "b b (a a* b)* b"));
  Dfa z = union_of(from_words(AB, {"aa", "ab", "ba"}), tail);
  Dfa zs = star_automaton(z);
  RecurrentSet e = even_shift();
  EtaImage img = e.eta_image(zs);

  std::set<Transformation> direct;
  for (const Word& w : e.factors(12)) {
    Transformation t = identity_transformation(zs.size());
    for (char c : w) t = compose(t, letter_transformation(zs, zs.alphabet().index(c)));
    direct.insert(t);
  }
  std::set<Transformation> all(img.all.begin(), img.all.end());
  CHECK(all == direct);  // stabilizes by length 12 here
  // longword: no identity (no nonempty word acts as identity), all in all
  std::set<Transformation> lw(img.longword.begin(), img.longword.end());
  CHECK(lw.count(identity_transformation(zs.size())) == 0);
  for (const Transformation& t : lw) CHECK(all.count(t));
}

TEST_CASE("eta image of Fibonacci in M(X*)") {
  Dfa xs = star_automaton(from_words(AB, {"aa", "ab", "ba"}));
  RecurrentSet f = fib_set();
  EtaImage img = f.eta_image(xs);

  std::set<Transformation> direct;
  for (const Word& w : f.factors(14)) {
    Transformation t = identity_transformation(xs.size());
    for (char c : w) t = compose(t, letter_transformation(xs, xs.alphabet().index(c)));
    direct.insert(t);
  }
  std::set<Transformation> all(img.all.begin(), img.all.end());
  CHECK(all == direct);
  CHECK(all.size() == 9);
  CHECK(img.longword.size() == 8);
  // trivial monoid: both sets are the identity
  Dfa one = star_automaton(from_words(AB, {"a", "b"}));
  EtaImage triv = f.eta_image(one);
  CHECK(triv.all.size() == 1);
  CHECK(triv.longword.size() == 1);
}

TEST_CASE("sofic graph must be strongly connected") {
  CHECK_THROWS_AS(SoficPresentation(AB, 2, {{0, 'a', 0}, {0, 'b', 1}}), std::invalid_argument);
}

TEST_CASE("substitution must be primitive") {
  CHECK_THROWS_AS(RecurrentSet::substitutive(Substitution(AB, {{'a', "a"}, {'b', "b"}}), 'a'),
                  std::invalid_argument);
}
