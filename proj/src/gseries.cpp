#include "cherfd/gseries.hpp"

#include "cherfd/error.hpp"
#include "cherfd/weights.hpp"

namespace cherfd {

BigInt poly_coeff(const BigInt& dim_v, unsigned long k) {
  if (dim_v < 1) throw std::invalid_argument("poly_coeff: dim_v must be positive");
  BigInt out;
  const BigInt top = dim_v - 1 + k;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
  return out;
}

GradedSeries::GradedSeries(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) {
    throw Error(Errc::empty_window, "window [" + lo_.str() + ", " + hi_.str() + ") is empty");
  }
}

BigInt GradedSeries::coeff_at(const Rat& e) const {
  if (!in_window(e)) {
    throw Error(Errc::outside_window,
                "exponent " + e.str() + " outside [" + lo_.str() + ", " + hi_.str() + ")");
  }
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void GradedSeries::add(const Rat& e, const BigInt& value) {
  if (!in_window(e)) {
    throw Error(Errc::outside_window,
                "exponent " + e.str() + " outside [" + lo_.str() + ", " + hi_.str() + ")");
  }
  if (value == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

GradedSeries GradedSeries::restrict_to(const Rat& lo, const Rat& hi) const {
  GradedSeries out(lo, hi);
  if (lo < lo_ || hi_ < hi) {
    throw Error(Errc::outside_window, "[" + lo.str() + ", " + hi.str() +
                                          ") is not inside [" + lo_.str() + ", " + hi_.str() + ")");
  }
  for (auto it = coeffs_.lower_bound(lo); it != coeffs_.end() && it->first < hi; ++it) {
    out.coeffs_.emplace(*it);
  }
  return out;
}

std::string GradedSeries::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + " * t^(" + e.str() + ")";
  }
  return out;
}

BigInt coeff_at(const GradedSeries& series, const Rat& e) { return series.coeff_at(e); }

GradedSeries verma_series(const GroupData& group, const Rat& c, std::string_view tau,
                          const Rat& hi) {
  return verma_series(group, c, tau, h_weight(group, c, tau), hi);
}

GradedSeries verma_series(const GroupData& group, const Rat& c, std::string_view tau,
                          const Rat& lo, const Rat& hi) {
  const Rat h = h_weight(group, c, tau);
  if (hi <= h) {
    throw Error(Errc::empty_window, "truncation " + hi.str() + " is not above h_c(" +
                                        std::string(tau) + ") = " + h.str());
  }
  if (h < lo) {
    throw Error(Errc::outside_window, "window start " + lo.str() + " is above h_c(" +
                                          std::string(tau) + ") = " + h.str());
  }
  GradedSeries out(lo, hi);
  const BigInt& dim = group.irrep(tau).dim;
  Rat e = h;
  for (unsigned long k = 0; e < hi; ++k, e += Rat(1)) {
    out.add(e, dim * poly_coeff(group.dim_v(), k));
  }
  return out;
}

GradedSeries combine(const std::vector<std::pair<BigInt, GradedSeries>>& terms) {
  if (terms.empty()) throw Error(Errc::empty_window, "combine of an empty list");
  Rat lo = terms.front().second.lo();
  Rat hi = terms.front().second.hi();
  for (const auto& [coeff, s] : terms) {
    lo = max(lo, s.lo());
    hi = min(hi, s.hi());
  }
  GradedSeries out(lo, hi);
  for (const auto& [coeff, s] : terms) {
    for (auto it = s.terms().lower_bound(lo); it != s.terms().end() && it->first < hi; ++it) {
      out.add(it->first, coeff * it->second);
    }
  }
  return out;
}

}  // namespace cherfd
