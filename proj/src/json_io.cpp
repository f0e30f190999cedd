#include "bifix/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace bifix {

nlohmann::json dfa_to_json(const Dfa& d) {
  nlohmann::json out;
  nlohmann::json alpha = nlohmann::json::array();
  for (char c : d.alphabet().letters()) alpha.push_back(std::string(1, c));
  out["alphabet"] = alpha;
  out["states"] = d.size();
  out["initial"] = d.initial();
  nlohmann::json finals = nlohmann::json::array();
  for (int q = 0; q < d.size(); ++q)
    if (d.is_final(q)) finals.push_back(q);
  out["finals"] = finals;
  nlohmann::json trans = nlohmann::json::array();
  for (int q = 0; q < d.size(); ++q)
    for (int a = 0; a < d.alphabet().size(); ++a) {
      int r = d.step_index(q, a);
      if (r != Dfa::NO_STATE)
        trans.push_back({q, std::string(1, d.alphabet().letter(a)), r});
    }
  out["transitions"] = trans;
  return out;
}

namespace {

Alphabet alphabet_from_json(const nlohmann::json& j) {
  std::string letters;
  for (const auto& s : j) {
    std::string v = s.get<std::string>();
    if (v.size() != 1) throw std::invalid_argument("alphabet symbols must be single characters");
    letters += v;
  }
  return Alphabet(letters);
}

}  // namespace

Dfa dfa_from_json(const nlohmann::json& j) {
  Alphabet a = alphabet_from_json(j.at("alphabet"));
  int n = j.at("states").get<int>();
  int initial = j.at("initial").get<int>();
  std::vector<bool> finals(static_cast<size_t>(n), false);
  for (const auto& f : j.at("finals")) {
    int q = f.get<int>();
    if (q < 0 || q >= n) throw std::invalid_argument("final state out of range");
    finals[static_cast<size_t>(q)] = true;
  }
  std::vector<int> delta(static_cast<size_t>(n) * a.size(), Dfa::NO_STATE);
  for (const auto& t : j.at("transitions")) {
    int src = t.at(0).get<int>();
    std::string lab = t.at(1).get<std::string>();
    int dst = t.at(2).get<int>();
    if (lab.size() != 1) throw std::invalid_argument("transition labels must be single characters");
    if (src < 0 || src >= n || dst < 0 || dst >= n)
      throw std::invalid_argument("transition state out of range");
    int ai = a.index(lab[0]);
    int& cell = delta[static_cast<size_t>(src) * a.size() + ai];
    if (cell != Dfa::NO_STATE && cell != dst)
      throw std::invalid_argument("automaton is not deterministic");
    cell = dst;
  }
  return Dfa(a, n, initial, finals, delta);
}

Dfa code_of_star_automaton(const Dfa& star) {
  Dfa t = trim(star);
  if (t.num_finals() != 1 || !t.is_final(t.initial()))
    throw std::invalid_argument("star automaton must have initial = unique final");
  int i = t.initial();
  int n = t.size();
  int na = t.alphabet().size();
  // i0 = fresh initial (i's outgoing edges); old i keeps incoming only
  std::vector<int> delta(static_cast<size_t>(n + 1) * na, Dfa::NO_STATE);
  int i0 = n;
  for (int q = 0; q < n; ++q)
    for (int a = 0; a < na; ++a) {
      int r = t.step_index(q, a);
      if (r == Dfa::NO_STATE) continue;
      if (q != i) delta[static_cast<size_t>(q) * na + a] = r;
      if (q == i) delta[static_cast<size_t>(i0) * na + a] = r;
    }
  std::vector<bool> finals(static_cast<size_t>(n + 1), false);
  finals[static_cast<size_t>(i)] = true;
  return minimize(Dfa(t.alphabet(), n + 1, i0, finals, delta));
}

Dfa code_from_json(const nlohmann::json& j) {
  if (j.contains("words")) {
    Alphabet a = alphabet_from_json(j.at("alphabet"));
    std::vector<Word> words;
    for (const auto& w : j.at("words")) words.push_back(w.get<std::string>());
    return compile_language(LanguageSpec::from_word_list(a, words));
  }
  if (j.contains("regex")) {
    Alphabet a = alphabet_from_json(j.at("alphabet"));
    return compile_language(LanguageSpec::from_regex(a, j.at("regex").get<std::string>()));
  }
  if (j.contains("automaton")) {
    Dfa d = dfa_from_json(j.at("automaton"));
    std::string of = j.value("of", "code");
    if (of == "code") return minimize(d);
    if (of == "star") return code_of_star_automaton(d);
    throw std::invalid_argument("\"of\" must be \"code\" or \"star\"");
  }
  throw std::invalid_argument("code file needs \"words\", \"regex\" or \"automaton\"");
}

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

Dfa load_code_file(const std::string& path) { return code_from_json(load_json(path)); }
Dfa load_dfa_file(const std::string& path) { return dfa_from_json(load_json(path)); }

}  // namespace bifix
