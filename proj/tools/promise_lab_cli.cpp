// promise-lab: build, simulate, classify, and verify the unary automata
// and promise problems provided by this library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plab/constructions.hpp"
#include "plab/io.hpp"
#include "plab/markov.hpp"
#include "plab/numtheory.hpp"
#include "plab/promise.hpp"
#include "plab/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;   // verification failure / search exhausted / runtime error
constexpr int kExitUsage = 2;     // bad flags or malformed input

struct CommonOpts {
  std::string family;        // "theta" | "lkn"
  std::string model = "qfa"; // for lkn builds: qfa | pfa | dfa
  std::uint64_t k = 1;
  std::uint64_t n = 1;
  std::string phi_sin = "3/5";
  std::string theta_sin = "5/13";
  std::string automaton_file;
  std::string format = "text";
  std::size_t bit_budget = plab::kDefaultBitBudget;
};

plab::PythagoreanAngle angle_from(const std::string& sin_text) {
  return plab::PythagoreanAngle::from_sin(plab::Rational::parse(sin_text));
}

plab::LThetaProblem theta_problem(const CommonOpts& o) {
  return plab::LThetaProblem(angle_from(o.phi_sin), angle_from(o.theta_sin));
}

plab::AnyAutomaton obtain_automaton(const CommonOpts& o) {
  if (!o.automaton_file.empty()) return plab::load_automaton_file(o.automaton_file);
  if (o.family == "theta") return plab::build_theta_qfa(angle_from(o.phi_sin));
  if (o.family == "lkn") {
    if (o.model == "qfa") return plab::build_lkn_qfa(o.k, o.n);
    if (o.model == "pfa") return plab::build_lkn_pfa(o.k, o.n);
    if (o.model == "dfa") return plab::build_lkn_dfa(o.k, o.n);
    throw std::invalid_argument("unknown model '" + o.model + "' (use qfa, pfa, or dfa)");
  }
  throw std::invalid_argument("specify --automaton FILE or --family {theta|lkn}");
}

std::unique_ptr<plab::AcceptanceEvaluator> make_evaluator(const plab::AnyAutomaton& a,
                                                          std::size_t bit_budget) {
  if (const auto* dfa = std::get_if<plab::UnaryDFA>(&a))
    return std::make_unique<plab::DfaEvaluator>(*dfa);
  if (const auto* pfa = std::get_if<plab::UnaryPFA>(&a))
    return std::make_unique<plab::PfaEvaluator>(*pfa, bit_budget);
  if (const auto* qfa = std::get_if<plab::UnaryMCQFA>(&a))
    return std::make_unique<plab::QfaEvaluator>(*qfa, bit_budget);
  return std::make_unique<plab::LknQfaEvaluator>(std::get<plab::LknQfa>(a));
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file);
  if (!out) throw std::runtime_error("cannot write " + out_file);
  out << text;
}

int run_build(const CommonOpts& o, const std::string& out_file) {
  emit(plab::automaton_to_json(obtain_automaton(o)), out_file);
  return kExitSuccess;
}

int run_classify(const CommonOpts& o, std::uint64_t m) {
  plab::PromiseLabel label;
  if (o.family == "theta")
    label = theta_problem(o).classify(m, o.bit_budget);
  else if (o.family == "lkn")
    label = plab::LknProblem(o.k, o.n).classify(m);
  else
    throw std::invalid_argument("classify: --family must be theta or lkn");
  if (o.format == "json") {
    ordered_json j;
    j["m"] = m;
    j["label"] = plab::to_string(label);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << plab::to_string(label) << "\n";
  }
  return kExitSuccess;
}

int run_simulate(const CommonOpts& o, std::uint64_t m) {
  const plab::AnyAutomaton automaton = obtain_automaton(o);
  ordered_json j;
  std::string text;
  if (const auto* dfa = std::get_if<plab::UnaryDFA>(&automaton)) {
    const bool acc = plab::dfa_accepts(*dfa, m);
    j["accept"] = acc;
    text = acc ? "accept" : "reject";
  } else if (const auto* pfa = std::get_if<plab::UnaryPFA>(&automaton)) {
    const plab::OutcomeDistribution d = plab::pfa_outcome(*pfa, m, o.bit_budget);
    j["accept"] = d.accept.str();
    j["reject"] = d.reject.str();
    if (!pfa->neutral().empty()) j["dont_know"] = d.dont_know.str();
    text = "accept " + d.accept.str() + ", reject " + d.reject.str() +
           (pfa->neutral().empty() ? "" : ", don't know " + d.dont_know.str());
  } else if (const auto* qfa = std::get_if<plab::UnaryMCQFA>(&automaton)) {
    const plab::Rational p = plab::qfa_accept_probability(*qfa, m, o.bit_budget);
    j["accept"] = p.str();
    text = "accept " + p.str();
  } else {
    const auto& lkn = std::get<plab::LknQfa>(automaton);
    const plab::AcceptanceValue v = lkn.accept_probability(m);
    if (plab::acceptance_is_exact(v)) {
      j["accept"] = std::get<plab::Rational>(v).str();
    } else {
      const auto& iv = std::get<plab::ProbInterval>(v);
      j["accept"] = {{"lo", iv.lo.to_double()}, {"hi", iv.hi.to_double()}};
    }
    text = "accept " + plab::acceptance_str(v);
  }
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
  return kExitSuccess;
}

int run_verify(const CommonOpts& o, std::uint64_t m_max, std::string yes_bound_text,
               std::string no_bound_text) {
  const plab::AnyAutomaton automaton = obtain_automaton(o);

  plab::ProblemView problem;
  if (o.family == "theta")
    problem = plab::problem_view(theta_problem(o), o.bit_budget);
  else if (o.family == "lkn")
    problem = plab::problem_view(plab::LknProblem(o.k, o.n));
  else
    throw std::invalid_argument("verify: --family must be theta or lkn");

  if (yes_bound_text.empty() || no_bound_text.empty()) {
    // Model-specific defaults: the bounds each construction is supposed to meet.
    std::string yes = "1", no = "0";
    if (std::holds_alternative<plab::UnaryMCQFA>(automaton)) {
      const auto th = angle_from(o.theta_sin);
      yes = th.cos().squared().str();
      no = th.sin().squared().str();
    } else if (std::holds_alternative<plab::UnaryPFA>(automaton)) {
      no = "1/3";
    } else if (std::holds_alternative<plab::LknQfa>(automaton)) {
      no = "2/3";
    }
    if (yes_bound_text.empty()) yes_bound_text = yes;
    if (no_bound_text.empty()) no_bound_text = no;
  }

  auto evaluator = make_evaluator(automaton, o.bit_budget);
  const plab::BoundReport report =
      plab::verify_bounds(*evaluator, problem, m_max,
                          plab::Rational::parse(yes_bound_text),
                          plab::Rational::parse(no_bound_text));
  std::cout << (o.format == "json" ? plab::report_to_json(report)
                                   : plab::report_to_text(report));
  return report.pass ? kExitSuccess : kExitFailure;
}

int run_analyze(const CommonOpts& o) {
  const plab::AnyAutomaton automaton = obtain_automaton(o);
  const plab::StochasticMatrix* matrix = nullptr;
  std::optional<plab::UnaryPFA> embedded;
  if (const auto* pfa = std::get_if<plab::UnaryPFA>(&automaton)) {
    matrix = &pfa->transition();
  } else if (const auto* dfa = std::get_if<plab::UnaryDFA>(&automaton)) {
    embedded = plab::embed_dfa_as_pfa(*dfa);
    matrix = &embedded->transition();
  } else {
    throw std::invalid_argument("analyze: requires a PFA or DFA (stochastic transitions)");
  }
  const plab::ChainStructure s = plab::analyze_chain(*matrix);
  ordered_json j;
  j["transient"] = s.transient;
  ordered_json erg = ordered_json::array();
  for (std::size_t i = 0; i < s.ergodic_sets.size(); ++i)
    erg.push_back({{"states", s.ergodic_sets[i]}, {"period", s.periods[i]}});
  j["ergodic"] = std::move(erg);
  j["D"] = s.D;
  std::cout << j.dump(2) << "\n";
  return kExitSuccess;
}

int run_progression(const CommonOpts& o, std::uint64_t n0, std::uint64_t step,
                    std::uint64_t search_limit) {
  const plab::LThetaProblem problem = theta_problem(o);
  const auto found =
      plab::find_no_instance_in_progression(problem, n0, step, search_limit, o.bit_budget);
  if (o.format == "json") {
    ordered_json j;
    j["n0"] = n0;
    j["D"] = step;
    j["found"] = found.has_value();
    if (found) {
      j["l"] = *found;
      j["m"] = n0 + *found * step;
    }
    std::cout << j.dump(2) << "\n";
  } else if (found) {
    std::cout << "no-instance at l = " << *found << " (m = " << n0 + *found * step
              << ")\n";
  } else {
    std::cout << "not found within search limit " << search_limit
              << " (soft outcome: the density argument gives no effective bound)\n";
  }
  return found ? kExitSuccess : kExitFailure;
}

// "3" or "1..4" (inclusive).
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::uint64_t v = std::stoull(text);
    return {v, v};
  }
  return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
}

int run_table(const std::string& k_range, const std::string& n_range,
              const std::string& format) {
  const auto [k_min, k_max] = parse_range(k_range);
  const auto [n_min, n_max] = parse_range(n_range);
  const auto rows = plab::emit_table(k_min, k_max, n_min, n_max);
  if (format == "json")
    std::cout << plab::table_to_json(rows);
  else
    std::cout << plab::table_to_csv(rows);  // csv and text coincide
  return kExitSuccess;
}

int run_crt(const std::vector<std::string>& pairs, const std::string& format) {
  std::vector<plab::ResidueConstraint> constraints;
  for (const auto& p : pairs) {
    const auto comma = p.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("crt: expected residue,modulus but got '" + p + "'");
    constraints.emplace_back(plab::Integer(p.substr(0, comma)),
                             plab::Integer(p.substr(comma + 1)));
  }
  const plab::Integer K = plab::crt_solve(constraints);
  if (format == "json") {
    plab::Integer modulus = 1;
    for (const auto& c : constraints) modulus *= c.modulus;
    ordered_json j;
    j["K"] = K.get_str();
    j["modulus"] = modulus.get_str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << K.get_str() << "\n";
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact simulation and verification of unary DFAs, PFAs, and QFAs "
               "on promise problems"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::uint64_t m = 0;
  std::uint64_t m_max = 10'000;
  std::uint64_t n0 = 0;
  std::uint64_t step = 1;
  std::uint64_t search_limit = 1'000'000;
  std::string yes_bound, no_bound;
  std::string out_file;
  std::string k_range = "1..4", n_range = "1..4";
  std::vector<std::string> crt_pairs;

  const auto add_common = [&](CLI::App* sub, bool with_automaton) {
    sub->add_option("--family", opts.family, "problem family: theta or lkn");
    sub->add_option("--model", opts.model, "lkn construction: qfa, pfa, or dfa");
    sub->add_option("-k", opts.k, "window size k of L^{k,n}");
    sub->add_option("-n", opts.n, "window start n of L^{k,n}");
    sub->add_option("--phi-sin", opts.phi_sin, "rational sin of the rotation angle phi");
    sub->add_option("--theta-sin", opts.theta_sin, "rational sin of the tolerance theta");
    sub->add_option("--format", opts.format, "output format: text, json, or csv");
    sub->add_option("--bit-budget", opts.bit_budget,
                    "max bits per exact entry before simulation refuses");
    if (with_automaton)
      sub->add_option("--automaton", opts.automaton_file, "automaton JSON file");
  };

  CLI::App* build = app.add_subcommand("build", "construct an automaton, emit JSON");
  add_common(build, false);
  build->add_option("-o,--output", out_file, "write to file instead of stdout");

  CLI::App* classify = app.add_subcommand("classify", "label one input length");
  add_common(classify, false);
  classify->add_option("-m", m, "input length")->required();

  CLI::App* simulate = app.add_subcommand("simulate", "acceptance at one input length");
  add_common(simulate, true);
  simulate->add_option("-m", m, "input length")->required();

  CLI::App* verify = app.add_subcommand("verify", "sweep promised lengths against bounds");
  add_common(verify, true);
  verify->add_option("--m-max", m_max, "sweep limit (default 10000)");
  verify->add_option("--yes-bound", yes_bound, "required min acceptance on yes-instances");
  verify->add_option("--no-bound", no_bound, "required max acceptance on no-instances");

  CLI::App* analyze = app.add_subcommand("analyze", "Markov chain structure of a PFA/DFA");
  add_common(analyze, true);

  CLI::App* progression = app.add_subcommand(
      "progression", "search a^{n0 + l*D} for a theta no-instance");
  add_common(progression, false);
  progression->add_option("--n0", n0, "yes-instance start length")->required();
  progression->add_option("-D,--step", step, "progression stride D");
  progression->add_option("--search-limit", search_limit, "max l to try (default 10^6)");

  CLI::App* table = app.add_subcommand("table", "state-count summary table");
  table->add_option("-k", k_range, "k range, e.g. 3 or 1..6");
  table->add_option("-n", n_range, "n range, e.g. 2 or 1..10");
  table->add_option("--format", opts.format, "output format: csv (default) or json");

  CLI::App* crt = app.add_subcommand("crt", "solve simultaneous congruences");
  crt->add_option("pairs", crt_pairs, "constraints as residue,modulus")->required();
  crt->add_option("--format", opts.format, "output format: text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (*build) return run_build(opts, out_file);
    if (*classify) return run_classify(opts, m);
    if (*simulate) return run_simulate(opts, m);
    if (*verify) return run_verify(opts, m_max, yes_bound, no_bound);
    if (*analyze) return run_analyze(opts);
    if (*progression) return run_progression(opts, n0, step, search_limit);
    if (*table) return run_table(k_range, n_range, opts.format);
    if (*crt) return run_crt(crt_pairs, opts.format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
