#ifndef BIFIX_LANGUAGE_HPP
#define BIFIX_LANGUAGE_HPP

#include <variant>
#include <vector>

#include "bifix/dfa.hpp"

namespace bifix {

/// Input description of a rational language: an explicit word list, a
/// mini-regex, or an automaton taken as-is.
///
/// Mini-regex grammar (whitespace ignored):
///   union  := concat ('|' concat)*
///   concat := postfix+
///   postfix:= atom ('*' | '+')*
///   atom   := letter | '1' | '(' union ')'
/// '1' is the empty word. Precedence: star/plus > concatenation > union.
struct LanguageSpec {
  struct Words {
    std::vector<Word> words;
  };
  struct Regex {
    std::string pattern;
  };
  Alphabet alphabet;
  std::variant<Words, Regex, Dfa> body;

  static LanguageSpec from_word_list(Alphabet a, std::vector<Word> words) {
    return {std::move(a), Words{std::move(words)}};
  }
  static LanguageSpec from_regex(Alphabet a, std::string pattern) {
    return {std::move(a), Regex{std::move(pattern)}};
  }
  static LanguageSpec from_dfa(Dfa d) {
    Alphabet a = d.alphabet();
    return {std::move(a), std::move(d)};
  }
};

/// Minimal trim Dfa of the described language.
/// Throws std::invalid_argument on malformed regex or foreign symbols.
Dfa compile_language(const LanguageSpec& spec);

/// Kleene star / plus for arbitrary rational languages (the empty word is
/// stripped before starring, so these never throw).
Dfa star_of_language(const Dfa& d);
Dfa plus_of_language(const Dfa& d);

}  // namespace bifix

#endif
