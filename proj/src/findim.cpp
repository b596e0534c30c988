#include "cherfd/findim.hpp"

#include <set>

#include "cherfd/error.hpp"
#include "cherfd/weights.hpp"

namespace cherfd {

Rat default_truncation(const Rat& h) { return h + Rat(16); }

GradedSeries simple_character(const GroupData& group, const Rat& c, const GrothExpansion& exp,
                              const std::optional<Rat>& truncation_hi) {
  const Rat lo = h_weight(group, c, exp.target);
  const Rat hi = exp.valid_below.is_finite() ? exp.valid_below.value()
                                             : truncation_hi.value_or(default_truncation(lo));
  std::vector<std::pair<BigInt, GradedSeries>> terms;
  for (const ExpansionTerm& t : exp.terms) {
    if (hi <= t.h) continue;  // only reachable with a caller-supplied truncation
    terms.emplace_back(t.coeff, verma_series(group, c, t.label, lo, hi));
  }
  return combine(terms);
}

GradedSeries simple_character(const GroupData& group, const Rat& c, const DecompMatrix& matrix,
                              const std::string& tau, const std::optional<Rat>& truncation_hi) {
  return simple_character(group, c, expansion(matrix, tau, group, c), truncation_hi);
}

Verdict sl2_symmetry_test(const GradedSeries& series) {
  Verdict v;
  v.window_lo = series.lo();
  v.window_hi = series.hi();

  std::set<Rat> exponents;
  for (const auto& [e, coeff] : series.terms()) {
    if (e.sign() > 0) exponents.insert(e);
    if (e.sign() < 0) exponents.insert(-e);
  }
  for (const Rat& e : exponents) {
    if (!series.in_window(e) || !series.in_window(-e)) continue;
    BigInt neg = series.coeff_at(-e);
    BigInt pos = series.coeff_at(e);
    if (neg != pos) {
      v.kind = Verdict::Kind::infinite_dimensional;
      v.witness_exponent = e;
      v.dim_neg = std::move(neg);
      v.dim_pos = std::move(pos);
      break;
    }
  }
  return v;
}

std::string Verdict::str(const std::string& label) const {
  if (!infinite()) {
    return label + ": INCONCLUSIVE (window [" + window_lo.str() + "," + window_hi.str() + "))";
  }
  const char* rel = *dim_neg < *dim_pos ? " < " : " > ";
  return label + ": INFINITE-DIMENSIONAL (i=" + witness_exponent->str() + ": " +
         to_string(*dim_neg) + rel + to_string(*dim_pos) + ")";
}

std::vector<std::string> classify(const std::vector<std::string>& candidates,
                                  std::size_t expected_count,
                                  const std::map<std::string, Verdict>& verdicts) {
  std::vector<std::string> remainder;
  for (const std::string& label : candidates) {
    auto it = verdicts.find(label);
    if (it != verdicts.end() && it->second.infinite()) continue;
    remainder.push_back(label);
  }
  if (remainder.size() != expected_count) throw CountMismatch(std::move(remainder), expected_count);
  return remainder;
}

}  // namespace cherfd
