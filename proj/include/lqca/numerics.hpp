#pragma once

#include <complex>
#include <iosfwd>
#include <string>

namespace lqca {

using Complex = std::complex<double>;

/// Thresholds used wherever a floating-point quantity is compared against
/// zero or one. All three must lie in (0, 1).
struct Tolerance {
  double zero_abs = 1e-9;        ///< absolute "is zero" threshold
  double star_gap = 1e-9;        ///< c >= 1 - star_gap makes c* diverge
  double membership_rel = 1e-8;  ///< relative threshold for subspace membership

  /// Sets membership_rel to `membership` and scales the other two
  /// proportionally to the defaults.
  static Tolerance from_membership(double membership);

  bool valid() const;
};

/// Element of the nonnegative reals extended with a distinguished infinity.
///
/// Infinity is a separate state, never an IEEE inf, so that inf * 0 = 0
/// is enforced instead of producing NaN.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  /// Throws std::domain_error for negative or NaN input; IEEE +inf maps to
  /// the distinguished infinity.
  explicit ExtReal(double value);

  static constexpr ExtReal infinity() {
    ExtReal e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Finite value; meaningless when is_infinite().
  constexpr double value() const { return value_; }
  /// Value as a double, with IEEE inf for infinity.
  double to_double() const;

  bool operator==(const ExtReal&) const = default;

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

ExtReal ext_add(ExtReal a, ExtReal b);

/// Product with inf * c = inf for c > 0 and inf * 0 = 0 * inf = 0; a finite
/// operand at or below tol.zero_abs counts as zero.
ExtReal ext_mul(ExtReal a, ExtReal b, const Tolerance& tol = {});

/// Kleene star: sum of c^e over e >= 0, i.e. 1/(1-c) when c < 1 - star_gap
/// and infinity otherwise.
ExtReal ext_star(ExtReal c, const Tolerance& tol = {});

std::string to_string(ExtReal e);
std::ostream& operator<<(std::ostream& os, ExtReal e);

inline bool is_zero(double x, const Tolerance& tol) { return std::abs(x) <= tol.zero_abs; }

}  // namespace lqca
