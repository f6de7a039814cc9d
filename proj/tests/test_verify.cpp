#include <doctest.h>

#include "plab/verify.hpp"

using namespace plab;

namespace {

LThetaProblem canonical_theta() {
  return LThetaProblem(PythagoreanAngle::from_sin(Rational(3, 5)),
                       PythagoreanAngle::from_sin(Rational(5, 13)));
}

}  // namespace

TEST_CASE("verify_bounds passes the theta automaton at its stated bounds") {
  const LThetaProblem problem = canonical_theta();
  const UnaryMCQFA qfa = build_theta_qfa(problem.phi());
  QfaEvaluator eval(qfa);
  const BoundReport report = verify_bounds(eval, problem_view(problem), 2000,
                                           Rational(144, 169), Rational(25, 169));
  CHECK(report.pass);
  CHECK(report.counterexamples.empty());
  CHECK(report.yes_count > 0);
  CHECK(report.no_count > 0);
  CHECK(report.yes_count + report.no_count + report.unpromised_count == 2001);
  REQUIRE(report.min_yes.has_value());
  CHECK(acceptance_lower(*report.min_yes) >= Rational(144, 169));
  REQUIRE(report.max_no.has_value());
  CHECK(acceptance_upper(*report.max_no) <= Rational(25, 169));
}

TEST_CASE("verify_bounds reports violations with witnesses") {
  const LThetaProblem problem = canonical_theta();
  const UnaryMCQFA qfa = build_theta_qfa(problem.phi());
  QfaEvaluator eval(qfa);
  // impossible yes-bound: every yes-instance below 1 becomes a counterexample
  const BoundReport report =
      verify_bounds(eval, problem_view(problem), 100, Rational(1), Rational(25, 169));
  CHECK_FALSE(report.pass);
  CHECK(!report.counterexamples.empty());
  for (const auto& [m, v] : report.counterexamples)
    CHECK(acceptance_lower(v) < Rational(1));
}

TEST_CASE("verify_bounds counts bit-budget skips separately") {
  const LThetaProblem problem = canonical_theta();
  const UnaryMCQFA qfa = build_theta_qfa(problem.phi());
  QfaEvaluator eval(qfa, 400);  // tight budget: fails past ~170 letters
  ProblemView view = problem_view(problem, 400);
  const BoundReport report =
      verify_bounds(eval, view, 400, Rational(144, 169), Rational(25, 169));
  CHECK(report.pass);  // skipped lengths are excluded from aggregation
  CHECK(report.budget_exceeded.size() > 0);
  CHECK(report.yes_count + report.no_count + report.unpromised_count +
            report.budget_exceeded.size() ==
        401);
}

TEST_CASE("verify_bounds on the counter PFA with one-sided bounds") {
  const LknProblem problem(3, 2);
  const UnaryPFA pfa = build_lkn_pfa(3, 2);
  PfaEvaluator eval(pfa);
  const BoundReport report =
      verify_bounds(eval, problem_view(problem), 10'000, Rational(1), Rational(1, 3));
  CHECK(report.pass);
  REQUIRE(report.min_yes.has_value());
  CHECK(std::get<Rational>(*report.min_yes) == Rational(1));
}

TEST_CASE("verify_bounds accepts DFAs as the 0/1 special case") {
  const LknProblem problem(3, 2);
  const UnaryDFA dfa = build_lkn_dfa(3, 2);
  DfaEvaluator eval(dfa);
  const BoundReport report =
      verify_bounds(eval, problem_view(problem), 10'000, Rational(1), Rational(0));
  CHECK(report.pass);
}

TEST_CASE("report rendering includes the verdict") {
  const LknProblem problem(2, 1);
  const UnaryDFA dfa = build_lkn_dfa(2, 1);  // t = 6 = N
  DfaEvaluator eval(dfa);
  const BoundReport report =
      verify_bounds(eval, problem_view(problem), 100, Rational(1), Rational(0));
  const std::string json = report_to_json(report);
  CHECK(json.find("\"verdict\": \"pass\"") != std::string::npos);
  const std::string text = report_to_text(report);
  CHECK(text.find("verdict:    pass") != std::string::npos);
}

TEST_CASE("find_no_instance_in_progression worked examples") {
  const LThetaProblem problem = canonical_theta();
  CHECK(find_no_instance_in_progression(problem, 0, 1, 1000) == 2);
  CHECK(find_no_instance_in_progression(problem, 0, 2, 1000) == 1);
  CHECK_THROWS_AS(find_no_instance_in_progression(problem, 1, 1, 1000),
                  std::invalid_argument);  // m = 1 is not a yes-instance
}

TEST_CASE("find_no_instance results are genuine no-instances") {
  const LThetaProblem problem = canonical_theta();
  for (const std::uint64_t D : {1ull, 6ull, 105ull}) {
    const auto l = find_no_instance_in_progression(problem, 0, D, 100'000);
    REQUIRE(l.has_value());
    CHECK(problem.classify(0 + *l * D) == PromiseLabel::No);
  }
}

TEST_CASE("emit_table worked rows") {
  const auto rows = emit_table(3, 3, 2, 2);
  REQUIRE(rows.size() == 1);
  const TableRow& r = rows.front();
  CHECK(r.qfa_states == 6);
  CHECK(r.pfa_states == 15);
  CHECK(r.dfa_states == 105);
  CHECK(r.pfa_lower == 8);    // 3 + 5
  CHECK(r.dfa_lower == 15);   // 3 * 5

  const auto k1 = emit_table(1, 1, 1, 1);
  CHECK(k1.front().qfa_states == 2);
}

TEST_CASE("emit_table monotonicity in n") {
  const auto near = emit_table(3, 3, 2, 2).front();
  const auto far = emit_table(3, 3, 8, 8).front();
  CHECK(far.qfa_states == near.qfa_states);  // constant 2k
  CHECK(far.pfa_states > near.pfa_states);
  CHECK(far.dfa_states > near.dfa_states);
  CHECK(far.pfa_lower > near.pfa_lower);
  CHECK(far.dfa_lower > near.dfa_lower);
}

TEST_CASE("table invariants: qfa = 2k, dfa divisible by dfa_lower primes") {
  for (const auto& row : emit_table(1, 6, 1, 8)) {
    CHECK(row.qfa_states == 2 * Integer(static_cast<unsigned long>(row.k)));
    Integer rem;
    mpz_mod(rem.get_mpz_t(), row.dfa_states.get_mpz_t(), row.dfa_lower.get_mpz_t());
    CHECK(rem == 0);
  }
}

TEST_CASE("table CSV format") {
  const std::string csv = table_to_csv(emit_table(3, 3, 2, 2));
  CHECK(csv == "k,n,qfa,pfa,dfa,pfa_lower,dfa_lower\n3,2,6,15,105,8,15\n");
}

TEST_CASE("cross-model agreement at each model's decision rule") {
  // DFA decisions and PFA >= 1/2 rounding recover the label outright; the
  // QFA is one-sided (no-instances may exceed 1/2, never 2/3), so its rule
  // is acceptance exactly 1 versus certified <= 2/3.
  const Rational half(1, 2);
  const Rational two_thirds(2, 3);
  for (const auto& [k, n] : {std::pair<std::uint64_t, std::uint64_t>{2, 1},
                            {2, 2},
                            {3, 2},
                            {3, 3}}) {
    const LknProblem problem(k, n);
    const UnaryDFA dfa = build_lkn_dfa(k, n);
    const UnaryPFA pfa = build_lkn_pfa(k, n);
    const LknQfa qfa = build_lkn_qfa(k, n);
    DfaEvaluator dfa_eval(dfa);
    PfaEvaluator pfa_eval(pfa);
    for (std::uint64_t m = 0; m <= 10'000; ++m) {
      const PromiseLabel label = problem.classify(m);
      const bool dfa_accept = std::get<Rational>(dfa_eval.at(m)) == Rational(1);
      const bool pfa_accept = std::get<Rational>(pfa_eval.at(m)) >= half;
      if (label == PromiseLabel::Unpromised) continue;
      const bool yes = label == PromiseLabel::Yes;
      CHECK(dfa_accept == yes);
      CHECK(pfa_accept == yes);
      const AcceptanceValue qv = qfa.accept_probability(m);
      if (yes)
        CHECK(std::get<Rational>(qv) == Rational(1));
      else
        CHECK(acceptance_upper(qv) <= two_thirds);
    }
  }
}

TEST_CASE("stateful evaluators match point queries under any access pattern") {
  const UnaryPFA pfa = build_lkn_pfa(2, 2);
  const UnaryMCQFA qfa = build_theta_qfa(PythagoreanAngle::from_sin(Rational(5, 13)));
  PfaEvaluator pfa_eval(pfa);
  QfaEvaluator qfa_eval(qfa);
  const std::vector<std::uint64_t> pattern{0, 1, 2, 3, 50, 51, 7, 8, 9, 1000, 0, 2};
  for (const std::uint64_t m : pattern) {
    CHECK(std::get<Rational>(pfa_eval.at(m)) == pfa_outcome(pfa, m).accept);
    CHECK(std::get<Rational>(qfa_eval.at(m)) == qfa_accept_probability(qfa, m));
  }
}

TEST_CASE("converted DFA passes verify_bounds at (1, 0)") {
  const UnaryPFA pfa = build_lkn_pfa(2, 1);
  const LknProblem problem(2, 1);
  const auto conversion = pfa_to_cyclic_dfa(
      pfa, Rational(1, 3), [&](std::uint64_t m) { return problem.classify(m); }, 1024);
  DfaEvaluator eval(conversion.dfa);
  const BoundReport report =
      verify_bounds(eval, problem_view(problem), 10'000, Rational(1), Rational(0));
  CHECK(report.pass);
}
