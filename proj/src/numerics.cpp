#include "lqca/numerics.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lqca {

namespace {
constexpr double kDefaultMembership = 1e-8;
constexpr double kDefaultZero = 1e-9;
constexpr double kDefaultStarGap = 1e-9;
}  // namespace

Tolerance Tolerance::from_membership(double membership) {
  Tolerance t;
  t.membership_rel = membership;
  t.zero_abs = membership * (kDefaultZero / kDefaultMembership);
  t.star_gap = membership * (kDefaultStarGap / kDefaultMembership);
  return t;
}

bool Tolerance::valid() const {
  auto in_range = [](double x) { return x > 0.0 && x < 1.0; };
  return in_range(zero_abs) && in_range(star_gap) && in_range(membership_rel);
}

ExtReal::ExtReal(double value) {
  if (std::isnan(value) || value < 0.0) {
    throw std::domain_error("ExtReal: value must be nonnegative");
  }
  if (std::isinf(value)) {
    infinite_ = true;
  } else {
    value_ = value;
  }
}

double ExtReal::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

ExtReal ext_add(ExtReal a, ExtReal b) {
  if (a.is_infinite() || b.is_infinite()) return ExtReal::infinity();
  return ExtReal(a.value() + b.value());
}

ExtReal ext_mul(ExtReal a, ExtReal b, const Tolerance& tol) {
  const bool a_zero = !a.is_infinite() && a.value() <= tol.zero_abs;
  const bool b_zero = !b.is_infinite() && b.value() <= tol.zero_abs;
  if (a.is_infinite() || b.is_infinite()) {
    if (a_zero || b_zero) return ExtReal(0.0);
    return ExtReal::infinity();
  }
  double p = a.value() * b.value();
  // overflow of two huge finite weights is still a divergent weight
  if (std::isinf(p)) return ExtReal::infinity();
  return ExtReal(p);
}

ExtReal ext_star(ExtReal c, const Tolerance& tol) {
  if (c.is_infinite() || c.value() >= 1.0 - tol.star_gap) return ExtReal::infinity();
  return ExtReal(1.0 / (1.0 - c.value()));
}

std::string to_string(ExtReal e) {
  if (e.is_infinite()) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << e.value();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, ExtReal e) { return os << to_string(e); }

}  // namespace lqca
