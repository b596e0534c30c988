#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cherfd/rat.hpp"
#include "cherfd/repdata.hpp"

namespace cherfd {

/// C(d - 1 + k, d - 1): the number of degree-k monomials in d variables.
BigInt poly_coeff(const BigInt& dim_v, unsigned long k);

/// A truncated graded character. Exponents are h-eigenvalues, so the
/// lowest exponent of M(tau) is h_c(tau). Coefficients are certified on
/// [lo, hi) and nothing outside that window is ever stored.
class GradedSeries {
 public:
  /// Throws EmptyWindow unless lo < hi.
  GradedSeries(Rat lo, Rat hi);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  bool in_window(const Rat& e) const { return lo_ <= e && e < hi_; }

  /// Nonzero coefficients, ascending by exponent.
  const std::map<Rat, BigInt>& terms() const { return coeffs_; }

  /// Throws OutsideWindow for exponents outside [lo, hi).
  BigInt coeff_at(const Rat& e) const;

  /// Adds to the coefficient at e. Throws OutsideWindow.
  void add(const Rat& e, const BigInt& value);

  /// Same coefficients on the smaller window [lo, hi) which must lie inside
  /// the current one. Throws EmptyWindow or OutsideWindow.
  GradedSeries restrict_to(const Rat& lo, const Rat& hi) const;

  /// "c * t^(p/q)" terms joined by " + ", ascending; "0" when empty.
  std::string str() const;

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  Rat lo_;
  Rat hi_;
  std::map<Rat, BigInt> coeffs_;
};

/// Free-function spelling of GradedSeries::coeff_at.
BigInt coeff_at(const GradedSeries& series, const Rat& e);

/// Graded character of M(tau) on [h_c(tau), hi): dim tau * poly_coeff(dim V, k)
/// at h_c(tau) + k. Throws UnknownLabel, MissingWeight, EmptyWindow.
GradedSeries verma_series(const GroupData& group, const Rat& c, std::string_view tau,
                          const Rat& hi);

/// As above on [lo, hi) with lo <= h_c(tau); a Verma module has nothing
/// below its lowest weight so the extra range is certified zero.
GradedSeries verma_series(const GroupData& group, const Rat& c, std::string_view tau,
                          const Rat& lo, const Rat& hi);

/// Integer combination on the intersection of the windows.
/// Throws EmptyWindow on an empty list or an empty intersection.
GradedSeries combine(const std::vector<std::pair<BigInt, GradedSeries>>& terms);

}  // namespace cherfd
