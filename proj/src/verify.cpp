#include "plab/verify.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace plab {

namespace {

Rational mass_on(const StateSet& s, const RatVector& v) {
  Rational acc;
  for (std::size_t i : s) acc += v[i];
  return acc;
}

void check_budget(const RatVector& v, std::size_t budget) {
  for (const auto& e : v)
    if (e.bit_size() > budget)
      throw BitBudgetError("sweep: state vector entry exceeds the bit budget");
}

}  // namespace

AcceptanceValue DfaEvaluator::at(std::uint64_t m) {
  if (m == pos_ + 1) {
    state_ = dfa_.next()[state_];
    pos_ = m;
  } else if (m != pos_) {
    return Rational(dfa_accepts(dfa_, m) ? 1 : 0);  // random access, stateless
  }
  return Rational(dfa_.accepting().count(state_) ? 1 : 0);
}

std::string DfaEvaluator::descriptor() const {
  return "dfa[" + std::to_string(dfa_.state_count()) + " states]";
}

AcceptanceValue PfaEvaluator::at(std::uint64_t m) {
  if (m == pos_ + 1) {
    v_ = pfa_.transition().matrix().apply(v_);
    check_budget(v_, bit_budget_);
    pos_ = m;
  } else if (m != pos_) {
    v_ = pfa_.powers().apply(pfa_.initial(), m, bit_budget_);
    pos_ = m;
  }
  return mass_on(pfa_.accepting(), v_);
}

std::string PfaEvaluator::descriptor() const {
  return "pfa[" + std::to_string(pfa_.state_count()) + " states]";
}

AcceptanceValue QfaEvaluator::at(std::uint64_t m) {
  if (m == pos_ + 1) {
    v_ = qfa_.transition().matrix().apply(v_);
    check_budget(v_, bit_budget_);
    pos_ = m;
  } else if (m != pos_) {
    v_ = qfa_.powers().apply(qfa_.initial(), m, bit_budget_);
    pos_ = m;
  }
  Rational acc;
  for (std::size_t i : qfa_.accepting()) acc += v_[i].squared();
  return acc;
}

std::string QfaEvaluator::descriptor() const {
  return "mcqfa[" + std::to_string(qfa_.state_count()) + " states]";
}

std::string LknQfaEvaluator::descriptor() const {
  return "lkn-qfa[k=" + std::to_string(qfa_.k()) + ",n=" + std::to_string(qfa_.n()) + "]";
}

ProblemView problem_view(const LknProblem& problem) {
  return ProblemView{
      "lkn[k=" + std::to_string(problem.k()) + ",n=" + std::to_string(problem.n()) + "]",
      [problem](std::uint64_t m) { return problem.classify(m); }};
}

ProblemView problem_view(const LThetaProblem& problem, std::size_t bit_budget) {
  auto orbit = std::make_shared<RotationOrbit>(problem.rotation_powers(), problem.phi(),
                                               bit_budget);
  auto classify = [problem, orbit](std::uint64_t m) {
    if (m == orbit->position() + 1)
      orbit->advance();
    else if (m != orbit->position())
      orbit->seek(m);
    return problem.classify_cos_sq(orbit->cos().squared());
  };
  return ProblemView{"theta[phi.sin=" + problem.phi().sin().str() +
                         ",theta.sin=" + problem.theta().sin().str() + "]",
                     std::move(classify)};
}

BoundReport verify_bounds(AcceptanceEvaluator& automaton, const ProblemView& problem,
                          std::uint64_t m_max, const Rational& yes_bound,
                          const Rational& no_bound) {
  BoundReport report;
  report.problem = problem.descriptor;
  report.automaton = automaton.descriptor();
  report.m_max = m_max;
  report.yes_bound = yes_bound;
  report.no_bound = no_bound;

  for (std::uint64_t m = 0; m <= m_max; ++m) {
    PromiseLabel label;
    try {
      label = problem.classify(m);
    } catch (const BitBudgetError&) {
      report.budget_exceeded.push_back(m);
      continue;
    }
    if (label == PromiseLabel::Unpromised) {
      ++report.unpromised_count;
      continue;
    }
    AcceptanceValue value;
    try {
      value = automaton.at(m);
    } catch (const BitBudgetError&) {
      report.budget_exceeded.push_back(m);
      continue;
    }
    if (label == PromiseLabel::Yes) {
      ++report.yes_count;
      if (!report.min_yes ||
          acceptance_lower(value) < acceptance_lower(*report.min_yes))
        report.min_yes = value;
      if (!(acceptance_lower(value) >= yes_bound))
        report.counterexamples.emplace_back(m, value);
    } else {
      ++report.no_count;
      if (!report.max_no ||
          acceptance_upper(value) > acceptance_upper(*report.max_no))
        report.max_no = value;
      if (!(acceptance_upper(value) <= no_bound))
        report.counterexamples.emplace_back(m, value);
    }
  }
  report.pass = report.counterexamples.empty();
  return report;
}

namespace {

// Exact values with huge numerators (rotation powers have denominators like
// 5^2000) are summarized by their shadow; short exact forms are kept verbatim.
constexpr std::size_t kInlineExactLimit = 64;

nlohmann::ordered_json acceptance_json(const AcceptanceValue& v) {
  nlohmann::ordered_json j;
  j["shadow"] = acceptance_shadow(v);
  if (acceptance_is_exact(v)) {
    const std::string exact = std::get<Rational>(v).str();
    if (exact.size() <= kInlineExactLimit)
      j["exact"] = exact;
    else
      j["exact_bits"] = std::get<Rational>(v).bit_size();
  } else {
    j["lo"] = std::get<ProbInterval>(v).lo.to_double();
    j["hi"] = std::get<ProbInterval>(v).hi.to_double();
  }
  return j;
}

std::string acceptance_display(const AcceptanceValue& v) {
  if (acceptance_is_exact(v)) {
    const Rational& r = std::get<Rational>(v);
    const std::string exact = r.str();
    if (exact.size() <= kInlineExactLimit) return exact;
    std::ostringstream os;
    os.precision(17);
    os << "~" << r.to_double() << " (exact value of " << r.bit_size() << " bits)";
    return os.str();
  }
  return acceptance_str(v);
}

}  // namespace

std::string report_to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["problem"] = report.problem;
  j["automaton"] = report.automaton;
  j["m_max"] = report.m_max;
  j["yes_bound"] = report.yes_bound.str();
  j["no_bound"] = report.no_bound.str();
  j["yes_count"] = report.yes_count;
  j["no_count"] = report.no_count;
  j["unpromised_count"] = report.unpromised_count;
  j["budget_exceeded_count"] = report.budget_exceeded.size();
  j["min_yes_acceptance"] =
      report.min_yes ? acceptance_json(*report.min_yes) : nlohmann::ordered_json();
  j["max_no_acceptance"] =
      report.max_no ? acceptance_json(*report.max_no) : nlohmann::ordered_json();
  nlohmann::ordered_json cex = nlohmann::ordered_json::array();
  for (const auto& [m, v] : report.counterexamples)
    cex.push_back({{"m", m}, {"acceptance", acceptance_json(v)}});
  j["counterexamples"] = std::move(cex);
  j["verdict"] = report.pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string report_to_text(const BoundReport& report) {
  std::ostringstream os;
  os << "problem:    " << report.problem << "\n"
     << "automaton:  " << report.automaton << "\n"
     << "swept:      m <= " << report.m_max << "  (yes " << report.yes_count << ", no "
     << report.no_count << ", unpromised " << report.unpromised_count
     << ", budget-skipped " << report.budget_exceeded.size() << ")\n"
     << "bounds:     yes >= " << report.yes_bound.str() << ", no <= "
     << report.no_bound.str() << "\n";
  if (report.min_yes)
    os << "min yes:    " << acceptance_display(*report.min_yes) << "\n";
  if (report.max_no)
    os << "max no:     " << acceptance_display(*report.max_no) << "\n";
  for (const auto& [m, v] : report.counterexamples)
    os << "violation:  m = " << m << ", acceptance = " << acceptance_display(v) << "\n";
  os << "verdict:    " << (report.pass ? "pass" : "fail") << "\n";
  return os.str();
}

std::optional<std::uint64_t> find_no_instance_in_progression(
    const LThetaProblem& problem, std::uint64_t n0, std::uint64_t D,
    std::uint64_t search_limit, std::size_t bit_budget) {
  if (D == 0) throw std::invalid_argument("find_no_instance_in_progression: D must be >= 1");
  if (problem.classify(n0, bit_budget) != PromiseLabel::Yes)
    throw std::invalid_argument(
        "find_no_instance_in_progression: n0 = " + std::to_string(n0) +
        " is not a yes-instance");
  RatVector v =
      problem.rotation_powers()->apply({Rational(1), Rational(0)}, n0, bit_budget);
  const RatMatrix step = problem.rotation_powers()->power(D, bit_budget);
  for (std::uint64_t l = 1; l <= search_limit; ++l) {
    v = step.apply(v);
    check_budget(v, bit_budget);
    if (problem.classify_cos_sq(v[0].squared()) == PromiseLabel::No) return l;
  }
  return std::nullopt;
}

std::vector<TableRow> emit_table(std::uint64_t k_min, std::uint64_t k_max,
                                 std::uint64_t n_min, std::uint64_t n_max) {
  if (k_min == 0 || n_min == 0 || k_min > k_max || n_min > n_max)
    throw std::invalid_argument("emit_table: invalid k/n range");
  std::vector<TableRow> rows;
  for (std::uint64_t k = k_min; k <= k_max; ++k) {
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
      TableRow row;
      row.k = k;
      row.n = n;
      row.qfa_states = 2 * Integer(static_cast<unsigned long>(k));
      row.pfa_states = 0;
      for (std::uint64_t p : prime_window(n, k))
        row.pfa_states += static_cast<unsigned long>(p);
      row.dfa_states = 1;
      for (std::uint64_t p : prime_window(n, k / 3 + 2))
        row.dfa_states *= static_cast<unsigned long>(p);
      const std::uint64_t lower_count = (k + 2) / 3 + 1;  // ceil(k/3) + 1 primes
      row.pfa_lower = 0;
      row.dfa_lower = 1;
      for (std::uint64_t p : prime_window(n, lower_count)) {
        row.pfa_lower += static_cast<unsigned long>(p);
        row.dfa_lower *= static_cast<unsigned long>(p);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "k,n,qfa,pfa,dfa,pfa_lower,dfa_lower\n";
  for (const auto& r : rows)
    os << r.k << "," << r.n << "," << r.qfa_states.get_str() << ","
       << r.pfa_states.get_str() << "," << r.dfa_states.get_str() << ","
       << r.pfa_lower.get_str() << "," << r.dfa_lower.get_str() << "\n";
  return os.str();
}

std::string table_to_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["qfa"] = r.qfa_states.get_str();
    j["pfa"] = r.pfa_states.get_str();
    j["dfa"] = r.dfa_states.get_str();
    j["pfa_lower"] = r.pfa_lower.get_str();
    j["dfa_lower"] = r.dfa_lower.get_str();
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace plab
