#ifndef BIFIX_WORD_HPP
#define BIFIX_WORD_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace bifix {

// Words are strings over a declared finite alphabet of single-character
// symbols; the empty string is the empty word.
using Word = std::string;

class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::string letters) : letters_(std::move(letters)) {
    std::sort(letters_.begin(), letters_.end());
    auto dup = std::unique(letters_.begin(), letters_.end());
    if (dup != letters_.end()) throw std::invalid_argument("duplicate letter in alphabet");
    if (letters_.empty()) throw std::invalid_argument("empty alphabet");
  }

  int size() const { return static_cast<int>(letters_.size()); }
  char letter(int i) const { return letters_[static_cast<size_t>(i)]; }
  const std::string& letters() const { return letters_; }

  int index(char c) const {
    auto it = std::find(letters_.begin(), letters_.end(), c);
    if (it == letters_.end()) throw std::invalid_argument(std::string("symbol outside alphabet: ") + c);
    return static_cast<int>(it - letters_.begin());
  }
  bool contains(char c) const {
    return std::find(letters_.begin(), letters_.end(), c) != letters_.end();
  }
  void check_word(const Word& w) const {
    for (char c : w)
      if (!contains(c)) throw std::invalid_argument(std::string("symbol outside alphabet: ") + c);
  }

  bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }
  bool operator!=(const Alphabet& o) const { return letters_ != o.letters_; }

private:
  std::string letters_;
};

// shortlex: by length, then lexicographic
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace bifix

#endif
