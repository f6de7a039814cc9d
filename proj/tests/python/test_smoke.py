"""Smoke tests for the pybind11 surface: frozen values from the C++ suite."""

import json
import math

import promise_lab as pl


def test_primes():
    assert pl.nth_prime(1) == 2
    assert pl.nth_prime(5) == 11
    assert pl.nth_prime(10) == 29
    assert pl.prime_window(2, 3) == [3, 5, 7]


def test_crt_and_lcm():
    assert pl.crt_solve([(1, 5), (4, 7)]) == 11
    assert pl.crt_solve([(2, 3), (3, 5), (2, 7)]) == 23
    assert pl.lcm_list([2, 3, 5, 7]) == 210


def test_rational():
    r = pl.Rational("3/5")
    assert str(r * r) == "9/25"
    assert str(pl.Rational("1/2") + pl.Rational("1/3")) == "5/6"
    assert float(pl.Rational("1/2")) == 0.5
    assert pl.Rational("6/4") == pl.Rational(3, 2)


def test_classify_theta():
    assert pl.classify_theta("3/5", "5/13", 0) == "Yes"
    assert pl.classify_theta("3/5", "5/13", 1) == "Unpromised"
    assert pl.classify_theta("3/5", "5/13", 2) == "No"


def test_classify_lkn():
    assert pl.classify_lkn(3, 2, 105) == "Yes"
    assert pl.classify_lkn(3, 2, 1) == "No"
    assert pl.classify_lkn(3, 2, 3) == "Unpromised"
    assert pl.classify_lkn(3, 2, 61) == "No"


def test_generate_no_instance():
    base = pl.generate_no_instance(3, 2, 0)
    assert base == 1
    for offset in range(20):
        assert pl.classify_lkn(3, 2, pl.generate_no_instance(3, 2, offset)) == "No"


def test_acceptances():
    assert pl.theta_qfa_acceptance("3/5", 1) == "16/25"
    assert pl.theta_qfa_acceptance("3/5", 2) == "49/625"
    assert pl.lkn_pfa_acceptance(3, 2, 105) == "1"
    assert pl.lkn_pfa_acceptance(3, 2, 1) == "0"
    assert pl.lkn_dfa_accepts(3, 2, 105)
    assert not pl.lkn_dfa_accepts(3, 2, 61)

    assert pl.lkn_qfa_acceptance(3, 2, 105) == "1"
    lo, hi = pl.lkn_qfa_acceptance(1, 3, 1)
    assert hi - lo < 1e-12
    # double-rounded reference lands within a few ulps of the certified value
    expected = math.cos(2 * math.pi / 5) ** 2
    assert abs((lo + hi) / 2 - expected) < 1e-12


def test_markov_analysis():
    chain = pl.analyze_lkn_pfa(2, 1)
    assert chain["D"] == 6
    assert sorted(e["period"] for e in chain["ergodic"]) == [2, 3]
    assert chain["transient"] == []


def test_state_table():
    rows = pl.state_table(3, 3, 2, 2)
    assert rows == [
        {"k": 3, "n": 2, "qfa": 6, "pfa": 15, "dfa": 105, "pfa_lower": 8, "dfa_lower": 15}
    ]


def test_progression():
    assert pl.find_no_instance_in_progression("3/5", "5/13", 0, 1) == 2
    assert pl.find_no_instance_in_progression("3/5", "5/13", 0, 2) == 1


def test_automaton_json_round_trip():
    doc = pl.build_automaton_json("theta", phi_sin="3/5")
    parsed = json.loads(doc)
    assert parsed["kind"] == "mcqfa"
    assert parsed["transition"][0][0] == "4/5"
    assert pl.simulate_automaton_json(doc, 2) == "49/625"

    dfa_doc = pl.build_automaton_json("lkn", model="dfa", k=2, n=1)
    assert pl.simulate_automaton_json(dfa_doc, 6) is True
    assert pl.simulate_automaton_json(dfa_doc, 7) is False
