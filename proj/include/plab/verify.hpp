#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plab/acceptance.hpp"
#include "plab/automata.hpp"
#include "plab/constructions.hpp"
#include "plab/promise.hpp"

namespace plab {

/// Acceptance probability as a function of the input length. Implementations
/// are stateful: consecutive queries advance incrementally, arbitrary jumps
/// fall back to cached matrix powers. Semantics are identical either way.
class AcceptanceEvaluator {
 public:
  virtual ~AcceptanceEvaluator() = default;
  virtual AcceptanceValue at(std::uint64_t m) = 0;
  virtual std::string descriptor() const = 0;
};

class DfaEvaluator final : public AcceptanceEvaluator {
 public:
  explicit DfaEvaluator(const UnaryDFA& dfa) : dfa_(dfa), state_(dfa.start()) {}
  AcceptanceValue at(std::uint64_t m) override;
  std::string descriptor() const override;

 private:
  const UnaryDFA& dfa_;
  std::size_t state_;
  std::uint64_t pos_ = 0;
};

class PfaEvaluator final : public AcceptanceEvaluator {
 public:
  explicit PfaEvaluator(const UnaryPFA& pfa, std::size_t bit_budget = kDefaultBitBudget)
      : pfa_(pfa), bit_budget_(bit_budget), v_(pfa.initial()) {}
  AcceptanceValue at(std::uint64_t m) override;
  std::string descriptor() const override;

 private:
  const UnaryPFA& pfa_;
  std::size_t bit_budget_;
  RatVector v_;
  std::uint64_t pos_ = 0;
};

class QfaEvaluator final : public AcceptanceEvaluator {
 public:
  explicit QfaEvaluator(const UnaryMCQFA& qfa, std::size_t bit_budget = kDefaultBitBudget)
      : qfa_(qfa), bit_budget_(bit_budget), v_(qfa.initial()) {}
  AcceptanceValue at(std::uint64_t m) override;
  std::string descriptor() const override;

 private:
  const UnaryMCQFA& qfa_;
  std::size_t bit_budget_;
  RatVector v_;
  std::uint64_t pos_ = 0;
};

class LknQfaEvaluator final : public AcceptanceEvaluator {
 public:
  explicit LknQfaEvaluator(const LknQfa& qfa) : qfa_(qfa) {}
  AcceptanceValue at(std::uint64_t m) override { return qfa_.accept_probability(m); }
  std::string descriptor() const override;

 private:
  const LknQfa& qfa_;
};

/// A promise problem reduced to what sweeps need: a name and a classifier.
struct ProblemView {
  std::string descriptor;
  std::function<PromiseLabel(std::uint64_t)> classify;
};

ProblemView problem_view(const LknProblem& problem);
/// Stateful incremental classifier over the rotation orbit.
ProblemView problem_view(const LThetaProblem& problem,
                         std::size_t bit_budget = kDefaultBitBudget);

struct BoundReport {
  std::string problem;
  std::string automaton;
  std::uint64_t m_max = 0;
  Rational yes_bound;
  Rational no_bound;
  std::optional<AcceptanceValue> min_yes;  // by certified lower endpoint
  std::optional<AcceptanceValue> max_no;   // by certified upper endpoint
  std::uint64_t yes_count = 0;
  std::uint64_t no_count = 0;
  std::uint64_t unpromised_count = 0;
  std::vector<std::uint64_t> budget_exceeded;  // m values skipped, counted apart
  std::vector<std::pair<std::uint64_t, AcceptanceValue>> counterexamples;
  bool pass = false;
};

/// Sweeps every promised m <= m_max: yes-instances must have acceptance
/// certified >= yes_bound, no-instances certified <= no_bound. Unpromised
/// lengths are skipped but counted; bit-budget failures are recorded per m
/// and excluded from aggregation.
BoundReport verify_bounds(AcceptanceEvaluator& automaton, const ProblemView& problem,
                          std::uint64_t m_max, const Rational& yes_bound,
                          const Rational& no_bound);

std::string report_to_json(const BoundReport& report);
std::string report_to_text(const BoundReport& report);

/// Smallest l <= search_limit with classify(n0 + l*D) == No, scanning the
/// arithmetic progression by exact rotation steps. Requires n0 to be a
/// yes-instance. nullopt means "not found within the limit", a soft
/// outcome, not a refutation.
std::optional<std::uint64_t> find_no_instance_in_progression(
    const LThetaProblem& problem, std::uint64_t n0, std::uint64_t D,
    std::uint64_t search_limit, std::size_t bit_budget = kDefaultBitBudget);

/// One row of the state-count summary table, exact.
struct TableRow {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  Integer qfa_states;   // 2k
  Integer pfa_states;   // sum of prime_window(n, k)
  Integer dfa_states;   // product of prime_window(n, floor(k/3) + 2)
  Integer pfa_lower;    // sum of prime_window(n, ceil(k/3) + 1)
  Integer dfa_lower;    // product of prime_window(n, ceil(k/3) + 1)
};

std::vector<TableRow> emit_table(std::uint64_t k_min, std::uint64_t k_max,
                                 std::uint64_t n_min, std::uint64_t n_max);

std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json(const std::vector<TableRow>& rows);

}  // namespace plab
