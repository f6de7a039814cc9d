#include "plab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace plab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json names_json(const std::vector<std::string>& names) {
  return ordered_json(names);
}

ordered_json indices_json(const StateSet& s) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i : s) arr.push_back(i);
  return arr;
}

ordered_json vector_json(const RatVector& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}

ordered_json matrix_json(const RatMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> parse_names(const nlohmann::json& j) {
  return j.at("states").get<std::vector<std::string>>();
}

StateSet parse_indices(const nlohmann::json& j, const char* key) {
  StateSet out;
  if (!j.contains(key)) return out;
  for (const auto& v : j.at(key)) out.insert(v.get<std::size_t>());
  return out;
}

RatVector parse_vector(const nlohmann::json& j, const char* key) {
  RatVector out;
  for (const auto& v : j.at(key)) out.push_back(Rational::parse(v.get<std::string>()));
  return out;
}

RatMatrix parse_matrix(const nlohmann::json& j, const char* key) {
  const auto& rows = j.at(key);
  RatMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows.at(r);
    if (row.size() != rows.size())
      throw std::invalid_argument("automaton JSON: transition matrix is not square");
    for (std::size_t c = 0; c < row.size(); ++c)
      m.at(r, c) = Rational::parse(row.at(c).get<std::string>());
  }
  return m;
}

}  // namespace

std::string automaton_to_json(const UnaryDFA& dfa) {
  ordered_json j;
  j["kind"] = "dfa";
  j["states"] = names_json(dfa.states());
  j["start"] = dfa.start();
  j["next"] = ordered_json(dfa.next());
  j["accepting"] = indices_json(dfa.accepting());
  return dump(j);
}

std::string automaton_to_json(const UnaryPFA& pfa) {
  ordered_json j;
  j["kind"] = "pfa";
  j["states"] = names_json(pfa.states());
  j["initial"] = vector_json(pfa.initial());
  j["transition"] = matrix_json(pfa.transition().matrix());
  j["accepting"] = indices_json(pfa.accepting());
  if (!pfa.neutral().empty()) j["neutral"] = indices_json(pfa.neutral());
  return dump(j);
}

std::string automaton_to_json(const UnaryMCQFA& qfa) {
  ordered_json j;
  j["kind"] = "mcqfa";
  j["states"] = names_json(qfa.states());
  j["initial"] = vector_json(qfa.initial());
  j["transition"] = matrix_json(qfa.transition().matrix());
  j["accepting"] = indices_json(qfa.accepting());
  return dump(j);
}

std::string automaton_to_json(const LknQfa& qfa) {
  ordered_json j;
  j["kind"] = "lkn-qfa";
  j["states"] = names_json(qfa.states());
  j["k"] = qfa.k();
  j["n"] = qfa.n();
  j["primes"] = ordered_json(qfa.primes());
  j["accepting"] = indices_json(qfa.accepting());
  return dump(j);
}

std::string automaton_to_json(const AnyAutomaton& automaton) {
  return std::visit([](const auto& a) { return automaton_to_json(a); }, automaton);
}

AnyAutomaton automaton_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "dfa") {
    return UnaryDFA(parse_names(j), j.at("next").get<std::vector<std::size_t>>(),
                    j.at("start").get<std::size_t>(), parse_indices(j, "accepting"));
  }
  if (kind == "pfa") {
    return UnaryPFA(parse_names(j), StochasticMatrix(parse_matrix(j, "transition")),
                    parse_vector(j, "initial"), parse_indices(j, "accepting"),
                    parse_indices(j, "neutral"));
  }
  if (kind == "mcqfa") {
    return UnaryMCQFA(parse_names(j), OrthogonalMatrix(parse_matrix(j, "transition")),
                      parse_vector(j, "initial"), parse_indices(j, "accepting"));
  }
  if (kind == "lkn-qfa") {
    return LknQfa(j.at("k").get<std::uint64_t>(), j.at("n").get<std::uint64_t>());
  }
  throw std::invalid_argument("automaton JSON: unknown kind '" + kind + "'");
}

AnyAutomaton load_automaton_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open automaton file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return automaton_from_json(buffer.str());
}

void save_automaton_file(const std::string& path, const AnyAutomaton& automaton) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write automaton file: " + path);
  out << automaton_to_json(automaton);
}

std::string problem_to_json(const AnyProblem& problem) {
  ordered_json j;
  if (const auto* theta = std::get_if<LThetaProblem>(&problem)) {
    j["family"] = "theta";
    j["phi"] = {{"sin", theta->phi().sin().str()}, {"cos", theta->phi().cos().str()}};
    j["theta"] = {{"sin", theta->theta().sin().str()}, {"cos", theta->theta().cos().str()}};
  } else {
    const auto& lkn = std::get<LknProblem>(problem);
    j["family"] = "lkn";
    j["k"] = lkn.k();
    j["n"] = lkn.n();
  }
  return dump(j);
}

AnyProblem problem_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const std::string family = j.at("family").get<std::string>();
  if (family == "theta") {
    const auto angle = [&](const char* key) {
      const auto& a = j.at(key);
      if (a.contains("cos"))
        return PythagoreanAngle(Rational::parse(a.at("sin").get<std::string>()),
                                Rational::parse(a.at("cos").get<std::string>()));
      return PythagoreanAngle::from_sin(Rational::parse(a.at("sin").get<std::string>()));
    };
    return LThetaProblem(angle("phi"), angle("theta"));
  }
  if (family == "lkn") {
    return LknProblem(j.at("k").get<std::uint64_t>(), j.at("n").get<std::uint64_t>());
  }
  throw std::invalid_argument("problem JSON: unknown family '" + family + "'");
}

}  // namespace plab
