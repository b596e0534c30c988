#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cherfd {

using BigInt = mpz_class;

std::string to_string(const BigInt& n);

/// Parses a decimal integer with optional leading '-'. Throws ParseError.
BigInt parse_bigint(std::string_view text);

/// Exact rational, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const BigInt& n) : q_(n) {}
  Rat(const BigInt& num, const BigInt& den);
  explicit Rat(mpq_class q);

  /// Accepts "p/q", "-p/q" and plain integers. Throws ParseError.
  static Rat parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  const mpq_class& raw() const { return q_; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// A rational extended by -inf and +inf; used for open-ended bounds.
class Bound {
 public:
  enum class Kind { neg_inf, finite, pos_inf };

  Bound(const Rat& r) : kind_(Kind::finite), value_(r) {}  // NOLINT(google-explicit-constructor)
  static Bound neg_inf() { return Bound(Kind::neg_inf); }
  static Bound pos_inf() { return Bound(Kind::pos_inf); }

  /// Like Rat::parse, plus "inf", "+inf" and "-inf".
  static Bound parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  /// Only valid when finite.
  const Rat& value() const;

  std::string str() const;

  friend bool operator==(const Bound& a, const Bound& b) = default;
  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b);

 private:
  explicit Bound(Kind k) : kind_(k) {}
  Kind kind_;
  Rat value_;
};

std::ostream& operator<<(std::ostream& os, const Bound& b);

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace cherfd
