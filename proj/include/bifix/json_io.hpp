#ifndef BIFIX_JSON_IO_HPP
#define BIFIX_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "bifix/dfa.hpp"
#include "bifix/language.hpp"

namespace bifix {

/// Automaton format used by the CLI and golden fixtures:
/// {"alphabet":["a","b"],"states":n,"initial":0,"finals":[...],
///  "transitions":[[src,"a",dst],...]}
nlohmann::json dfa_to_json(const Dfa& d);
Dfa dfa_from_json(const nlohmann::json& j);

/// Code file: {"alphabet":[...]} plus one of
///   "words": ["aa","ab",...]
///   "regex": "b b (a a* b)* b"
///   "automaton": {...}, "of": "code" | "star"
/// With "of":"star" the automaton carries Z* and the code is recovered as
/// the words whose accepting path visits the final state only at the end.
Dfa code_from_json(const nlohmann::json& j);

Dfa load_code_file(const std::string& path);
Dfa load_dfa_file(const std::string& path);

/// Words whose accepting run returns to the initial/final state only at the
/// end; for a group automaton (or any X* automaton with initial = unique
/// final) this is the code generating the submonoid.
Dfa code_of_star_automaton(const Dfa& star);

}  // namespace bifix

#endif
