#pragma once

#include <string>
#include <variant>

#include "plab/rational.hpp"

namespace plab {

/// Certified enclosure of a probability; endpoints are exact dyadic
/// rationals produced by outward-rounded 256-bit arithmetic.
struct ProbInterval {
  Rational lo;
  Rational hi;
};

/// An acceptance probability: exact when the simulation path is rational,
/// a certified enclosure when it is not.
using AcceptanceValue = std::variant<Rational, ProbInterval>;

inline const Rational& acceptance_lower(const AcceptanceValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return *r;
  return std::get<ProbInterval>(v).lo;
}

inline const Rational& acceptance_upper(const AcceptanceValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return *r;
  return std::get<ProbInterval>(v).hi;
}

inline bool acceptance_is_exact(const AcceptanceValue& v) {
  return std::holds_alternative<Rational>(v);
}

/// Reporting-only double (midpoint for intervals).
double acceptance_shadow(const AcceptanceValue& v);

/// "49/625" for exact values, "[lo, hi]" shadows for intervals.
std::string acceptance_str(const AcceptanceValue& v);

}  // namespace plab
