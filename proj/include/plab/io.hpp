#pragma once

#include <string>
#include <variant>

#include "plab/automata.hpp"
#include "plab/constructions.hpp"
#include "plab/promise.hpp"

namespace plab {

using AnyAutomaton = std::variant<UnaryDFA, UnaryPFA, UnaryMCQFA, LknQfa>;

/// Canonical JSON for each automaton kind. Fixed key order, two-space
/// indent, LF newline, rationals in reduced "num/den" form, so
/// save(load(x)) is byte-stable.
std::string automaton_to_json(const UnaryDFA& dfa);
std::string automaton_to_json(const UnaryPFA& pfa);
std::string automaton_to_json(const UnaryMCQFA& qfa);
std::string automaton_to_json(const LknQfa& qfa);
std::string automaton_to_json(const AnyAutomaton& automaton);

/// Parses any of the four kinds ("dfa", "pfa", "mcqfa", "lkn-qfa");
/// validation errors carry the offending field.
AnyAutomaton automaton_from_json(const std::string& text);

AnyAutomaton load_automaton_file(const std::string& path);
void save_automaton_file(const std::string& path, const AnyAutomaton& automaton);

/// Problem descriptors: {"family":"theta",...} / {"family":"lkn",...}.
using AnyProblem = std::variant<LThetaProblem, LknProblem>;
std::string problem_to_json(const AnyProblem& problem);
AnyProblem problem_from_json(const std::string& text);

}  // namespace plab
