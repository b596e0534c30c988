#include "cherfd/rat.hpp"

#include <cctype>
#include <ostream>

#include "cherfd/error.hpp"

namespace cherfd {

std::string to_string(const BigInt& n) { return n.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw Error(Errc::parse_error, "empty integer '" + std::string(text) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(Errc::parse_error, "not an integer: '" + std::string(text) + "'");
    }
  }
  BigInt out;
  out.set_str(std::string(text), 10);
  return out;
}

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::parse_error, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(text));
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && den.front() == '-') {
    throw Error(Errc::parse_error, "negative denominator in '" + std::string(text) + "'");
  }
  return Rat(parse_bigint(text.substr(0, slash)), parse_bigint(den));
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.q_ == 0) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Bound Bound::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return Bound(Rat::parse(text));
}

const Rat& Bound::value() const {
  if (kind_ != Kind::finite) throw std::logic_error("value() of an infinite bound");
  return value_;
}

std::string Bound::str() const {
  switch (kind_) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "inf";
    case Kind::finite: break;
  }
  return value_.str();
}

std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_ || a.kind_ != Bound::Kind::finite) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const Bound& b) { return os << b.str(); }

}  // namespace cherfd
