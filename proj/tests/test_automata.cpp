#include <doctest.h>

#include "plab/automata.hpp"
#include "plab/constructions.hpp"
#include "plab/pythagorean.hpp"

using namespace plab;

namespace {

UnaryPFA two_state_swap_pfa() {
  RatMatrix m(2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  return UnaryPFA({"a", "b"}, StochasticMatrix(std::move(m)),
                  {Rational(1), Rational(0)}, {0});
}

UnaryPFA one_state_pfa() {
  RatMatrix m(1);
  m.at(0, 0) = 1;
  return UnaryPFA({"only"}, StochasticMatrix(std::move(m)), {Rational(1)}, {0});
}

}  // namespace

TEST_CASE("pfa_state_at") {
  const UnaryPFA swap = two_state_swap_pfa();
  const RatVector v0 = pfa_state_at(swap, 0);
  CHECK(v0 == swap.initial());

  const RatVector v7 = pfa_state_at(swap, 7);
  CHECK(v7[0] == 0);
  CHECK(v7[1] == 1);

  const UnaryPFA single = one_state_pfa();
  CHECK(pfa_state_at(single, 1'000'000'000)[0] == 1);
}

TEST_CASE("pfa_state_at stays an exact distribution") {
  const UnaryPFA pfa = build_lkn_pfa(3, 2);
  for (std::uint64_t m : {0ull, 1ull, 17ull, 104ull, 105ull, 99999ull, (1ull << 40)}) {
    const RatVector v = pfa_state_at(pfa, m);
    Rational sum;
    for (const auto& e : v) {
      CHECK(e.sign() >= 0);
      sum += e;
    }
    CHECK(sum == Rational(1));
  }
}

TEST_CASE("pfa_outcome splits mass over accepting/neutral/rest") {
  const UnaryPFA pfa = build_lkn_pfa(3, 2);
  CHECK(pfa_outcome(pfa, 105).accept == Rational(1));
  CHECK(pfa_outcome(pfa, 1).accept == Rational(0));

  // all states accepting -> accept mass 1 at any length
  RatMatrix m(2);
  m.at(0, 0) = Rational(1, 2);
  m.at(1, 0) = Rational(1, 2);
  m.at(0, 1) = Rational(1, 3);
  m.at(1, 1) = Rational(2, 3);
  const UnaryPFA all({"x", "y"}, StochasticMatrix(std::move(m)),
                     {Rational(1, 4), Rational(3, 4)}, {0, 1});
  for (std::uint64_t len : {0ull, 5ull, 123ull}) {
    const OutcomeDistribution d = pfa_outcome(all, len);
    CHECK(d.accept == Rational(1));
    CHECK(d.reject == Rational(0));
    CHECK(d.dont_know == Rational(0));
  }
}

TEST_CASE("las vegas neutral states") {
  RatMatrix m(3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 2) = 1;
  const UnaryPFA lv({"acc", "idk", "rej"}, StochasticMatrix(std::move(m)),
                    {Rational(1, 2), Rational(1, 3), Rational(1, 6)}, {0}, {1});
  const OutcomeDistribution d = pfa_outcome(lv, 42);
  CHECK(d.accept == Rational(1, 2));
  CHECK(d.dont_know == Rational(1, 3));
  CHECK(d.reject == Rational(1, 6));
  CHECK(d.accept + d.reject + d.dont_know == Rational(1));
}

TEST_CASE("accepting/neutral sets must be disjoint") {
  RatMatrix m(2);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  CHECK_THROWS_AS(UnaryPFA({"a", "b"}, StochasticMatrix(std::move(m)),
                           {Rational(1), Rational(0)}, {0}, {0}),
                  std::invalid_argument);
}

TEST_CASE("qfa_state_at and acceptance for the rotation automaton") {
  const UnaryMCQFA qfa = build_theta_qfa(PythagoreanAngle::from_sin(Rational(3, 5)));

  CHECK(qfa_state_at(qfa, 0) == qfa.initial());

  const RatVector v1 = qfa_state_at(qfa, 1);
  CHECK(v1[0] == Rational(4, 5));
  CHECK(v1[1] == Rational(3, 5));  // sign fixed by the [[cos,-sin],[sin,cos]] convention

  CHECK(qfa_state_at(qfa, 2)[0] == Rational(7, 25));

  CHECK(qfa_accept_probability(qfa, 0) == Rational(1));
  CHECK(qfa_accept_probability(qfa, 1) == Rational(16, 25));
  CHECK(qfa_accept_probability(qfa, 2) == Rational(49, 625));
}

TEST_CASE("qfa squared norm is exactly 1 along the orbit") {
  const UnaryMCQFA qfa = build_theta_qfa(PythagoreanAngle::from_sin(Rational(5, 13)));
  for (std::uint64_t m : {0ull, 1ull, 2ull, 64ull, 1000ull, 4097ull}) {
    const RatVector v = qfa_state_at(qfa, m);
    CHECK(v[0].squared() + v[1].squared() == Rational(1));
    const Rational p = qfa_accept_probability(qfa, m);
    CHECK(p.sign() >= 0);
    CHECK(p <= Rational(1));
  }
}

TEST_CASE("dfa_accepts with cycle detection") {
  const UnaryDFA dfa = build_lkn_dfa(3, 2);
  CHECK(dfa.state_count() == 105);
  CHECK(dfa_accepts(dfa, 0));
  CHECK(dfa_accepts(dfa, 105));
  CHECK_FALSE(dfa_accepts(dfa, 104));
  CHECK(dfa_accepts(dfa, 105ull * 1'000'000'007ull));

  // start state accepting at m = 0 regardless of shape
  const UnaryDFA loop({"s"}, {0}, 0, {0});
  CHECK(dfa_accepts(loop, 0));
}

TEST_CASE("dfa_accepts on a rho-shaped automaton (tail + cycle)") {
  // 0 -> 1 -> 2 -> 3 -> 1 : tail of one state, cycle of three.
  const UnaryDFA rho({"t0", "c0", "c1", "c2"}, {1, 2, 3, 1}, 0, {2});
  CHECK_FALSE(dfa_accepts(rho, 0));
  CHECK_FALSE(dfa_accepts(rho, 1));
  CHECK(dfa_accepts(rho, 2));
  CHECK_FALSE(dfa_accepts(rho, 3));
  CHECK_FALSE(dfa_accepts(rho, 4));
  CHECK(dfa_accepts(rho, 5));
  CHECK(dfa_accepts(rho, 2 + 3ull * 1'000'000'000ull));
}

TEST_CASE("a DFA is exactly a PFA with 0/1 entries") {
  const UnaryDFA dfa = build_lkn_dfa(2, 1);  // 6-state cycle
  const UnaryPFA pfa = embed_dfa_as_pfa(dfa);
  for (std::uint64_t m = 0; m <= 10'000; ++m) {
    const bool dfa_decision = dfa_accepts(dfa, m);
    const bool pfa_decision = pfa_outcome(pfa, m).accept == Rational(1);
    CHECK(dfa_decision == pfa_decision);
  }
}
