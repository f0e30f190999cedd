#include "bifix/language.hpp"

#include <cctype>
#include <stdexcept>

namespace bifix {

namespace {

class RegexParser {
public:
  RegexParser(const Alphabet& alphabet, const std::string& pattern)
      : alphabet_(alphabet), s_(pattern) {}

  Dfa parse() {
    Dfa d = parse_union();
    if (pos_ != s_.size()) fail("trailing input");
    return d;
  }

private:
  const Alphabet& alphabet_;
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("malformed regex at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Dfa parse_union() {
    Dfa d = parse_concat();
    while (peek() == '|') {
      ++pos_;
      d = union_of(d, parse_concat());
    }
    return d;
  }

  bool at_atom() {
    char c = peek();
    return c == '(' || c == '1' || (c != '\0' && alphabet_.contains(c));
  }

  Dfa parse_concat() {
    if (!at_atom()) fail("expected symbol, '1' or '('");
    Dfa d = parse_postfix();
    while (at_atom()) d = concatenation({d, parse_postfix()});
    return d;
  }

  Dfa parse_postfix() {
    Dfa d = parse_atom();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        d = star_of_language(d);
      } else if (c == '+') {
        ++pos_;
        d = plus_of_language(d);
      } else {
        break;
      }
    }
    return d;
  }

  Dfa parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Dfa d = parse_union();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return d;
    }
    if (c == '1') {
      ++pos_;
      return literal(alphabet_, "");
    }
    if (c != '\0' && alphabet_.contains(c)) {
      ++pos_;
      return literal(alphabet_, std::string(1, c));
    }
    fail("expected symbol, '1' or '('");
  }
};

}  // namespace

Dfa star_of_language(const Dfa& d) {
  Dfa core = difference(d, literal(d.alphabet(), ""));
  if (core.accepts_empty_language()) return literal(d.alphabet(), "");
  return star_automaton(core);
}

Dfa plus_of_language(const Dfa& d) {
  Dfa s = star_of_language(d);
  if (d.accepts("")) return s;
  return concatenation({d, s});
}

Dfa compile_language(const LanguageSpec& spec) {
  if (const auto* words = std::get_if<LanguageSpec::Words>(&spec.body))
    return from_words(spec.alphabet, words->words);
  if (const auto* rx = std::get_if<LanguageSpec::Regex>(&spec.body))
    return RegexParser(spec.alphabet, rx->pattern).parse();
  const Dfa& d = std::get<Dfa>(spec.body);
  if (d.alphabet() != spec.alphabet) throw std::invalid_argument("alphabet mismatch in spec");
  return minimize(d);
}

}  // namespace bifix
