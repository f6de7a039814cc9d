#include "plab/acceptance.hpp"

#include <sstream>

namespace plab {

double acceptance_shadow(const AcceptanceValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->to_double();
  const auto& iv = std::get<ProbInterval>(v);
  return ((iv.lo + iv.hi) / Rational(2)).to_double();
}

std::string acceptance_str(const AcceptanceValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->str();
  const auto& iv = std::get<ProbInterval>(v);
  std::ostringstream os;
  os.precision(17);
  os << "[" << iv.lo.to_double() << ", " << iv.hi.to_double() << "]";
  return os.str();
}

}  // namespace plab
