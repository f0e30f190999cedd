#include <doctest.h>

#include <random>

#include "bifix/codes.hpp"
#include "bifix/fgroup.hpp"
#include "bifix/freegroup.hpp"
#include "testutil.hpp"

using namespace bifix;
using namespace bifix::testutil;

namespace {

Word random_word(const Alphabet& a, int maxlen, std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, maxlen), letter(0, a.size() - 1);
  Word w;
  int l = len(rng);
  for (int i = 0; i < l; ++i) w += a.letter(letter(rng));
  return w;
}

}  // namespace

TEST_CASE("parse monotonicity over random bifix codes") {
  // delta_X(v) <= delta_X(uvw) for bifix codes
  std::mt19937 rng(20240817);
  const Alphabet ab("ab");
  for (int trial = 0; trial < 100; ++trial) {
    Dfa code = random_bifix_code(ab, rng);
    if (code.accepts_empty_language()) continue;
    if (!code_kind(code).bifix) continue;
    ParseCounter pc(code);
    for (int i = 0; i < 5; ++i) {
      Word u = random_word(ab, 4, rng), v = random_word(ab, 6, rng), w = random_word(ab, 4, rng);
      CHECK(pc.count(v) <= pc.count(u + v + w));
    }
  }
}

TEST_CASE("group-code rank constancy") {
  // every word acts with rank d(Z) on a group automaton
  for (const Dfa& star : {thue_morse_group_star(), degree4_group_star()}) {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
      Word w = random_word(star.alphabet(), 9, rng);
      Transformation t = identity_transformation(star.size());
      for (char c : w) t = compose(t, letter_transformation(star, star.alphabet().index(c)));
      CHECK(rank(t) == star.size());
    }
  }
}

TEST_CASE("F-degree never exceeds the full degree, equality for finite codes") {
  std::mt19937 rng(99);
  const Alphabet ab("ab");
  const Alphabet abc("abc");
  struct Case {
    RecurrentSet f;
    Alphabet a;
  };
  std::vector<Case> cases;
  cases.push_back({fibonacci_set(), ab});
  cases.push_back({thue_morse_set(), ab});
  cases.push_back({even_shift_set(), ab});
  cases.push_back({tribonacci_set(), abc});
  for (auto& [f, a] : cases) {
    for (int trial = 0; trial < 8; ++trial) {
      Dfa z = random_group_code(a, 5, rng);
      CodeAnalysis za = analyze_code(z);
      REQUIRE(za.maximal_bifix);
      int dz = *za.deg;
      Dfa x = intersect_code_with_shift(z, f, {});
      int dfx = f_degree_via_parses(z, f, 24);
      CHECK(dfx <= dz);
      if (is_finite_language(z)) CHECK(dfx == dz);
      (void)x;
    }
  }
}

TEST_CASE("idempotent fixation on the cheap bundled pairs") {
  // idempotents in the long-word eta image fix the initial state of M(X*)
  {
    RecurrentSet f = fibonacci_set();
    Dfa x = intersect_code_with_shift(from_words(Alphabet("ab"), {"aa", "ab", "ba", "bb"}), f, {});
    Dfa xs = star_automaton(x);
    EtaImage img = f.eta_image(xs);
    int fixed = 0;
    for (const Transformation& t : img.longword)
      if (is_idempotent(t)) {
        ++fixed;
        CHECK(t[static_cast<size_t>(xs.initial())] == xs.initial());
      }
    CHECK(fixed > 0);
  }
  {
    RecurrentSet e = even_shift_set();
    Dfa x = intersect_code_with_shift(even_shift_code(), e, {});
    Dfa xs = star_automaton(x);
    EtaImage img = e.eta_image(xs);
    int fixed = 0;
    for (const Transformation& t : img.longword)
      if (is_idempotent(t)) {
        ++fixed;
        CHECK(t[static_cast<size_t>(xs.initial())] == xs.initial());
      }
    CHECK(fixed > 0);
  }
}

TEST_CASE("delta stabilizes to the F-degree past the internal-factor horizon") {
  // every Fibonacci factor long enough not to be internal has delta = d_F(X)
  RecurrentSet f = fibonacci_set();
  Dfa x = from_words(Alphabet("ab"), {"aa", "ab", "ba"});
  ParseCounter pc(x);
  std::vector<Word> factors(f.factors(8).begin(), f.factors(8).end());
  for (const Word& w : factors) {
    if (w.empty()) continue;
    if (!internal_factor_test(x, w)) CHECK(pc.count(w) == 2);
  }
}

TEST_CASE("sofic return sets are prefix codes") {
  RecurrentSet e = even_shift_set();
  for (const Word& u : {Word("a"), Word("bb"), Word("ab")}) {
    ReturnWordSet r = e.return_words(u);
    REQUIRE(r.language.has_value());
    CHECK(code_kind(*r.language).prefix);
  }
}

TEST_CASE("connected-set consequence for group codes over the two-letter image") {
  // over a connected uniformly recurrent set, group codes keep their degree
  // and group up to isomorphism
  std::mt19937 rng(4242);
  RecurrentSet f = tribonacci_ac_set();
  const Alphabet ac("ac");
  for (int trial = 0; trial < 5; ++trial) {
    Dfa z = random_group_code(ac, 4, rng);
    Dfa zstar = star_automaton(z);
    TransitionMonoid zm(zstar);
    GreenData zg(zm);
    PermutationGroupOnSet gz = schutzenberger_group(zm, zg, zg.minimum_ideal());
    int dz = zg.jclass_rank(zg.minimum_ideal());
    Dfa x = intersect_code_with_shift(z, f, {});
    FPair xr(x, f);
    CHECK(xr.f_degree() == dz);
    CHECK(xr.f_group().order() == gz.order());
    CHECK(group_iso(xr.f_group(), gz).has_value());
  }
}

TEST_CASE("equivalence soundness and transitivity agreement") {
  // whenever charged, the produced witness is verified and the transitivity
  // flags agree between G_F(X) and G(Z)
  struct P {
    Dfa z;
    RecurrentSet f;
  };
  std::vector<P> pairs;
  pairs.push_back({from_words(Alphabet("ab"), {"aa", "ab", "ba", "bb"}), fibonacci_set()});
  pairs.push_back({even_shift_code(), even_shift_set()});
  for (auto& [z, f] : pairs) {
    ChargedVerdict c = is_f_charged(z, f);
    REQUIRE(c.charged);
    EquivalenceWitness w = permutation_equivalence(z, f);
    Dfa zstar = star_automaton(minimize(z));
    TransitionMonoid zm(zstar);
    GreenData zg(zm);
    PermutationGroupOnSet gz = schutzenberger_group(zm, zg, zg.minimum_ideal());
    Dfa x = intersect_code_with_shift(z, f, {});
    FPair xr(x, f);
    CHECK(w.degree == zg.jclass_rank(zg.minimum_ideal()));
    CHECK(transitivity_check(xr.f_group()) == transitivity_check(gz));
  }
}
