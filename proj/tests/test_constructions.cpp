#include <doctest.h>

#include <cmath>

#include "plab/constructions.hpp"
#include "plab/numtheory.hpp"
#include "plab/verify.hpp"

using namespace plab;

TEST_CASE("build_theta_qfa: 2 states, acceptance cos^2(m phi)") {
  const UnaryMCQFA qfa = build_theta_qfa(PythagoreanAngle::from_sin(Rational(3, 5)));
  CHECK(qfa.state_count() == 2);
  CHECK(qfa.accepting() == StateSet{0});
  CHECK(qfa_accept_probability(qfa, 0) == Rational(1));
  CHECK(qfa_accept_probability(qfa, 1) == Rational(16, 25));

  // identity against the rotation orbit, symbolically, for m <= 500
  RotationOrbit orbit(PythagoreanAngle::from_sin(Rational(3, 5)));
  QfaEvaluator eval(qfa);
  for (std::uint64_t m = 0; m <= 500; ++m) {
    if (m > 0) orbit.advance();
    CHECK(std::get<Rational>(eval.at(m)) == orbit.cos().squared());
  }
}

TEST_CASE("theta qfa meets the bound on every yes-instance") {
  const LThetaProblem problem(PythagoreanAngle::from_sin(Rational(3, 5)),
                              PythagoreanAngle::from_sin(Rational(5, 13)));
  const UnaryMCQFA qfa = build_theta_qfa(problem.phi());
  for (const auto& [m, label] : enumerate_promised(problem, 500)) {
    const Rational p = qfa_accept_probability(qfa, m);
    if (label == PromiseLabel::Yes)
      CHECK(p >= Rational(144, 169));
    else
      CHECK(p <= Rational(25, 169));
  }
}

TEST_CASE("build_lkn_qfa shape") {
  const LknQfa q22 = build_lkn_qfa(2, 2);
  CHECK(q22.state_count() == 4);
  CHECK(q22.primes() == std::vector<std::uint64_t>{3, 5});
  CHECK(q22.accepting() == StateSet{0, 2});

  CHECK(build_lkn_qfa(1, 1).state_count() == 2);
}

TEST_CASE("lkn qfa: yes-instances accepted exactly, symbolically") {
  const LknQfa qfa = build_lkn_qfa(3, 2);
  for (std::uint64_t m : {0ull, 105ull, 210ull, 105'000ull}) {
    const AcceptanceValue v = qfa.accept_probability(m);
    REQUIRE(acceptance_is_exact(v));
    CHECK(std::get<Rational>(v) == Rational(1));
  }
  CHECK_FALSE(acceptance_is_exact(qfa.accept_probability(std::uint64_t{1})));
}

TEST_CASE("lkn qfa: certified interval width stays below 1e-30") {
  const LknQfa qfa = build_lkn_qfa(3, 2);
  const Rational bound(Integer(1), [] {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, 30);
    return t;
  }());
  for (std::uint64_t m = 1; m <= 300; ++m) {
    const AcceptanceValue v = qfa.accept_probability(m);
    if (acceptance_is_exact(v)) continue;
    const auto& iv = std::get<ProbInterval>(v);
    CHECK(iv.hi - iv.lo < bound);
    CHECK(iv.lo.sign() >= 0);
    CHECK(iv.hi <= Rational(1));
  }
}

TEST_CASE("lkn qfa: single-block rejection matches sin^2(2 pi / 5)") {
  const LknQfa qfa = build_lkn_qfa(1, 3);  // prime 5
  const AcceptanceValue v = qfa.accept_probability(std::uint64_t{1});
  REQUIRE_FALSE(acceptance_is_exact(v));
  const double rejection = 1.0 - acceptance_shadow(v);
  CHECK(rejection == doctest::Approx(std::pow(std::sin(2 * M_PI / 5), 2)).epsilon(1e-12));
  CHECK(rejection >= 1.0 / 3);
}

TEST_CASE("lkn qfa: no-instances rejected with probability at least 1/3") {
  const LknQfa qfa = build_lkn_qfa(3, 2);
  const LknProblem problem(3, 2);
  const Rational two_thirds(2, 3);
  for (std::uint64_t m = 0; m <= 2000; ++m) {
    if (problem.classify(m) != PromiseLabel::No) continue;
    const auto& iv = std::get<ProbInterval>(qfa.accept_probability(m));
    CHECK(iv.hi <= two_thirds);  // certified: rejection >= 1/3 exactly
  }
}

TEST_CASE("build_lkn_pfa: state count and exact acceptance") {
  const UnaryPFA pfa = build_lkn_pfa(3, 2);
  CHECK(pfa.state_count() == 15);  // 3 + 5 + 7
  CHECK(pfa_outcome(pfa, 105).accept == Rational(1));
  CHECK(pfa_outcome(pfa, 1).accept == Rational(0));

  // acceptance = (#dividing primes) / k at every length
  for (std::uint64_t m = 0; m <= 1000; ++m) {
    long dividing = 0;
    for (std::uint64_t p : {3, 5, 7})
      if (m % p == 0) ++dividing;
    CHECK(pfa_outcome(pfa, m).accept == Rational(dividing, 3));
  }
}

TEST_CASE("build_lkn_dfa: cyclic recognizer of multiples of t") {
  const UnaryDFA dfa = build_lkn_dfa(3, 2);
  CHECK(dfa.state_count() == 105);
  CHECK(dfa_accepts(dfa, 0));
  CHECK_FALSE(dfa_accepts(dfa, 61));

  const UnaryDFA d21 = build_lkn_dfa(2, 1);  // floor(2/3)+2 = 2 primes: 2*3
  CHECK(d21.state_count() == 6);

  const UnaryDFA d33 = build_lkn_dfa(3, 3);  // 5*7*11
  CHECK(d33.state_count() == 385);
}

TEST_CASE("dfa decisions never hit the no-set") {
  const LknProblem problem(3, 2);
  const UnaryDFA dfa = build_lkn_dfa(3, 2);
  for (std::uint64_t m = 0; m <= 100'000; ++m) {
    if (dfa_accepts(dfa, m)) CHECK(problem.classify(m) != PromiseLabel::No);
  }
}

TEST_CASE("state-count formulas match the table for small windows") {
  for (const auto& row : emit_table(1, 4, 1, 6)) {
    CHECK(row.qfa_states == 2 * Integer(static_cast<unsigned long>(row.k)));
    CHECK(Integer(std::to_string(build_lkn_qfa(row.k, row.n).state_count())) ==
          row.qfa_states);
    CHECK(Integer(std::to_string(build_lkn_pfa(row.k, row.n).state_count())) ==
          row.pfa_states);
    CHECK(Integer(std::to_string(build_lkn_dfa(row.k, row.n).state_count())) ==
          row.dfa_states);
  }
}

TEST_CASE("pfa_to_cyclic_dfa on the 6-periodic counter PFA") {
  const UnaryPFA pfa = build_lkn_pfa(2, 1);
  const LknProblem problem(2, 1);
  const auto conversion = pfa_to_cyclic_dfa(
      pfa, Rational(1, 3), [&](std::uint64_t m) { return problem.classify(m); }, 1024);
  CHECK(conversion.period == 6);

  // the cyclic DFA agrees with the PFA's >= 1/2 rounding everywhere
  for (std::uint64_t m = 0; m <= 10'000; ++m) {
    const bool pfa_rounded = pfa_outcome(pfa, m).accept >= Rational(1, 2);
    CHECK(pfa_rounded == dfa_accepts(conversion.dfa, m));
  }
}

TEST_CASE("pfa_to_cyclic_dfa of an embedded DFA reproduces its decisions") {
  const UnaryDFA source = build_lkn_dfa(2, 1);
  const UnaryPFA pfa = embed_dfa_as_pfa(source);
  const auto conversion = pfa_to_cyclic_dfa(pfa, Rational(1, 4), nullptr, 1024);
  for (std::uint64_t m = 0; m <= 10'000; ++m)
    CHECK(dfa_accepts(source, m) == dfa_accepts(conversion.dfa, m));
}

TEST_CASE("pfa_to_cyclic_dfa validates epsilon") {
  const UnaryPFA pfa = build_lkn_pfa(1, 1);
  CHECK_THROWS_AS(pfa_to_cyclic_dfa(pfa, Rational(1, 2), nullptr, 64),
                  std::invalid_argument);
}

TEST_CASE("pfa_to_cyclic_dfa on a converging aperiodic chain") {
  // irreducible, aperiodic: D = 1. Acceptance starts at 1, hits exactly 1/2
  // after one step (tie rounds to accept), then settles near 1/3.
  RatMatrix m(3);
  m.at(0, 0) = Rational(1, 2);
  m.at(1, 0) = Rational(1, 4);
  m.at(2, 0) = Rational(1, 4);
  m.at(0, 1) = Rational(1, 3);
  m.at(1, 1) = Rational(1, 3);
  m.at(2, 1) = Rational(1, 3);
  m.at(0, 2) = Rational(1, 5);
  m.at(1, 2) = Rational(2, 5);
  m.at(2, 2) = Rational(2, 5);
  const UnaryPFA pfa({"a", "b", "c"}, StochasticMatrix(std::move(m)),
                     {Rational(1), Rational(0), Rational(0)}, {0});

  const auto conversion = pfa_to_cyclic_dfa(pfa, Rational(1, 3), nullptr, 4096);
  CHECK(conversion.period == 1);
  CHECK(dfa_accepts(conversion.dfa, 0));       // tail copies acceptance 1
  CHECK(dfa_accepts(conversion.dfa, 1));       // exact tie 1/2 rounds to accept
  CHECK_FALSE(dfa_accepts(conversion.dfa, 2)); // 23/60 < 1/2
  PfaEvaluator eval(pfa);
  for (std::uint64_t len = 0; len <= 2000; ++len) {
    const bool rounded = std::get<Rational>(eval.at(len)) >= Rational(1, 2);
    CHECK(rounded == dfa_accepts(conversion.dfa, len));
  }
}

TEST_CASE("pfa_to_cyclic_dfa reports non-stabilization") {
  const UnaryPFA pfa = build_lkn_pfa(2, 1);
  ConversionOptions options;
  options.margin = Rational(0);  // nothing can beat a zero margin
  CHECK_THROWS_AS(pfa_to_cyclic_dfa(pfa, Rational(1, 3), nullptr, 256, options),
                  StabilizationError);
}

TEST_CASE("limit estimates are exposed per residue") {
  const UnaryPFA pfa = build_lkn_pfa(2, 1);
  const auto conversion = pfa_to_cyclic_dfa(pfa, Rational(1, 3), nullptr, 1024);
  REQUIRE(conversion.limit_estimate.size() == 6);
  CHECK(conversion.limit_estimate[0] == Rational(1));
  CHECK(conversion.limit_estimate[1] == Rational(0));
  CHECK(conversion.limit_estimate[2] == Rational(1, 2));
  CHECK(conversion.limit_estimate[3] == Rational(1, 2));
  CHECK(conversion.limit_estimate[4] == Rational(1, 2));
  CHECK(conversion.limit_estimate[5] == Rational(0));
}
