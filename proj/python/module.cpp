#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "plab/constructions.hpp"
#include "plab/io.hpp"
#include "plab/markov.hpp"
#include "plab/numtheory.hpp"
#include "plab/promise.hpp"
#include "plab/verify.hpp"

namespace py = pybind11;

namespace {

py::int_ big_int(const plab::Integer& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

plab::LThetaProblem theta_problem(const std::string& phi_sin, const std::string& theta_sin) {
  return plab::LThetaProblem(
      plab::PythagoreanAngle::from_sin(plab::Rational::parse(phi_sin)),
      plab::PythagoreanAngle::from_sin(plab::Rational::parse(theta_sin)));
}

py::object acceptance_object(const plab::AcceptanceValue& v) {
  if (plab::acceptance_is_exact(v)) return py::str(std::get<plab::Rational>(v).str());
  const auto& iv = std::get<plab::ProbInterval>(v);
  return py::make_tuple(iv.lo.to_double(), iv.hi.to_double());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact simulation and verification of unary DFAs, PFAs, and QFAs on "
            "promise problems.";

  py::class_<plab::Rational>(m, "Rational")
      .def(py::init([](const std::string& s) { return plab::Rational::parse(s); }))
      .def(py::init([](long n) { return plab::Rational(n); }))
      .def(py::init([](long num, long den) { return plab::Rational(num, den); }))
      .def("__str__", &plab::Rational::str)
      .def("__repr__",
           [](const plab::Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__float__", &plab::Rational::to_double)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self);

  m.def("nth_prime", &plab::nth_prime, py::arg("n"),
        "The n-th prime, 1-indexed (nth_prime(1) == 2).");
  m.def("prime_window", &plab::prime_window, py::arg("n"), py::arg("k"),
        "The k consecutive primes starting from the n-th.");
  m.def(
      "crt_solve",
      [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
        std::vector<plab::ResidueConstraint> cs;
        for (const auto& [r, mod] : pairs)
          cs.emplace_back(plab::Integer(std::to_string(r)),
                          plab::Integer(std::to_string(mod)));
        return big_int(plab::crt_solve(cs));
      },
      py::arg("constraints"),
      "Smallest nonnegative K satisfying the (residue, modulus) congruences.");
  m.def(
      "lcm_list",
      [](const std::vector<std::uint64_t>& values) {
        std::vector<plab::Integer> big;
        for (auto v : values) big.emplace_back(std::to_string(v));
        return big_int(plab::lcm_list(big));
      },
      py::arg("values"));

  m.def(
      "classify_theta",
      [](const std::string& phi_sin, const std::string& theta_sin, std::uint64_t m) {
        return std::string(plab::to_string(theta_problem(phi_sin, theta_sin).classify(m)));
      },
      py::arg("phi_sin"), py::arg("theta_sin"), py::arg("m"));
  m.def(
      "classify_lkn",
      [](std::uint64_t k, std::uint64_t n, std::uint64_t m) {
        return std::string(plab::to_string(plab::LknProblem(k, n).classify(m)));
      },
      py::arg("k"), py::arg("n"), py::arg("m"));
  m.def(
      "generate_no_instance",
      [](std::uint64_t k, std::uint64_t n, std::uint64_t offset) {
        plab::LknProblem problem(k, n);
        std::set<std::size_t> satisfied;
        for (std::size_t i = 0; i < k; ++i)
          if (problem.primes()[i] != 2) satisfied.insert(i);
        return big_int(plab::generate_no_instance_lkn(problem, satisfied, offset));
      },
      py::arg("k"), py::arg("n"), py::arg("offset") = 0,
      "CRT witness of the no-set (all odd window primes satisfied).");

  m.def(
      "theta_qfa_acceptance",
      [](const std::string& phi_sin, std::uint64_t m) {
        const auto qfa = plab::build_theta_qfa(
            plab::PythagoreanAngle::from_sin(plab::Rational::parse(phi_sin)));
        return plab::qfa_accept_probability(qfa, m).str();
      },
      py::arg("phi_sin"), py::arg("m"),
      "Exact acceptance cos^2(m*phi) of the 2-state rotation QFA, as 'num/den'.");
  m.def(
      "lkn_pfa_acceptance",
      [](std::uint64_t k, std::uint64_t n, std::uint64_t m) {
        return plab::pfa_outcome(plab::build_lkn_pfa(k, n), m).accept.str();
      },
      py::arg("k"), py::arg("n"), py::arg("m"));
  m.def(
      "lkn_qfa_acceptance",
      [](std::uint64_t k, std::uint64_t n, std::uint64_t m) {
        return acceptance_object(plab::build_lkn_qfa(k, n).accept_probability(m));
      },
      py::arg("k"), py::arg("n"), py::arg("m"),
      "Exact '1' on yes-instances, otherwise a certified (lo, hi) float pair.");
  m.def(
      "lkn_dfa_accepts",
      [](std::uint64_t k, std::uint64_t n, std::uint64_t m) {
        return plab::dfa_accepts(plab::build_lkn_dfa(k, n), m);
      },
      py::arg("k"), py::arg("n"), py::arg("m"));

  m.def(
      "analyze_lkn_pfa",
      [](std::uint64_t k, std::uint64_t n) {
        const auto pfa = plab::build_lkn_pfa(k, n);
        const auto s = plab::analyze_chain(pfa.transition());
        py::list ergodic;
        for (std::size_t i = 0; i < s.ergodic_sets.size(); ++i) {
          py::dict e;
          e["states"] = s.ergodic_sets[i];
          e["period"] = s.periods[i];
          ergodic.append(std::move(e));
        }
        py::dict out;
        out["transient"] = s.transient;
        out["ergodic"] = std::move(ergodic);
        out["D"] = s.D;
        return out;
      },
      py::arg("k"), py::arg("n"));

  m.def(
      "state_table",
      [](std::uint64_t k_min, std::uint64_t k_max, std::uint64_t n_min,
         std::uint64_t n_max) {
        py::list rows;
        for (const auto& r : plab::emit_table(k_min, k_max, n_min, n_max)) {
          py::dict row;
          row["k"] = r.k;
          row["n"] = r.n;
          row["qfa"] = big_int(r.qfa_states);
          row["pfa"] = big_int(r.pfa_states);
          row["dfa"] = big_int(r.dfa_states);
          row["pfa_lower"] = big_int(r.pfa_lower);
          row["dfa_lower"] = big_int(r.dfa_lower);
          rows.append(std::move(row));
        }
        return rows;
      },
      py::arg("k_min"), py::arg("k_max"), py::arg("n_min"), py::arg("n_max"));

  m.def(
      "find_no_instance_in_progression",
      [](const std::string& phi_sin, const std::string& theta_sin, std::uint64_t n0,
         std::uint64_t D, std::uint64_t search_limit) -> py::object {
        const auto found = plab::find_no_instance_in_progression(
            theta_problem(phi_sin, theta_sin), n0, D, search_limit);
        if (!found) return py::none();
        return py::int_(*found);
      },
      py::arg("phi_sin"), py::arg("theta_sin"), py::arg("n0"), py::arg("D"),
      py::arg("search_limit") = 1'000'000);

  m.def(
      "simulate_automaton_json",
      [](const std::string& json_text, std::uint64_t m) -> py::object {
        const plab::AnyAutomaton a = plab::automaton_from_json(json_text);
        if (const auto* dfa = std::get_if<plab::UnaryDFA>(&a))
          return py::bool_(plab::dfa_accepts(*dfa, m));
        if (const auto* pfa = std::get_if<plab::UnaryPFA>(&a))
          return py::str(plab::pfa_outcome(*pfa, m).accept.str());
        if (const auto* qfa = std::get_if<plab::UnaryMCQFA>(&a))
          return py::str(plab::qfa_accept_probability(*qfa, m).str());
        return acceptance_object(std::get<plab::LknQfa>(a).accept_probability(m));
      },
      py::arg("automaton_json"), py::arg("m"),
      "Acceptance of a JSON-encoded automaton at length m.");
  m.def(
      "build_automaton_json",
      [](const std::string& family, const std::string& model, std::uint64_t k,
         std::uint64_t n, const std::string& phi_sin) {
        if (family == "theta")
          return plab::automaton_to_json(plab::build_theta_qfa(
              plab::PythagoreanAngle::from_sin(plab::Rational::parse(phi_sin))));
        if (model == "qfa") return plab::automaton_to_json(plab::build_lkn_qfa(k, n));
        if (model == "pfa") return plab::automaton_to_json(plab::build_lkn_pfa(k, n));
        return plab::automaton_to_json(plab::build_lkn_dfa(k, n));
      },
      py::arg("family"), py::arg("model") = "qfa", py::arg("k") = 1, py::arg("n") = 1,
      py::arg("phi_sin") = "3/5");
}
