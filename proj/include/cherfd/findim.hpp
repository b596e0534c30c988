#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherfd/decomp.hpp"
#include "cherfd/gseries.hpp"
#include "cherfd/rat.hpp"
#include "cherfd/repdata.hpp"

namespace cherfd {

/// Truncation used when an expansion is exact everywhere.
Rat default_truncation(const Rat& h);

/// Truncated graded character of L(tau) on [h_c(tau), valid_below), built
/// from `expansion`. When the expansion is exact everywhere the window ends
/// at `truncation_hi` (default: h_c(tau) + 16).
GradedSeries simple_character(const GroupData& group, const Rat& c, const GrothExpansion& exp,
                              const std::optional<Rat>& truncation_hi = std::nullopt);

GradedSeries simple_character(const GroupData& group, const Rat& c, const DecompMatrix& matrix,
                              const std::string& tau,
                              const std::optional<Rat>& truncation_hi = std::nullopt);

/// Outcome of the sl2 obstruction. INCONCLUSIVE never means finite.
struct Verdict {
  enum class Kind { infinite_dimensional, inconclusive };

  Kind kind = Kind::inconclusive;
  std::optional<Rat> witness_exponent;
  std::optional<BigInt> dim_neg;  // coefficient at -witness
  std::optional<BigInt> dim_pos;  // coefficient at +witness
  Rat window_lo;
  Rat window_hi;

  bool infinite() const { return kind == Kind::infinite_dimensional; }

  /// "label: INFINITE-DIMENSIONAL (i=1: 1591200 < 3870400)" or
  /// "label: INCONCLUSIVE (window [a,b))".
  std::string str(const std::string& label) const;
};

/// A finite-dimensional module has dim L[-e] = dim L[e]. Compares every
/// positive e with both +e and -e in the window, smallest first, and reports
/// the first mismatch.
Verdict sl2_symmetry_test(const GradedSeries& series);

/// Drops candidates proven infinite-dimensional; candidates missing from
/// `verdicts` are untested and kept. Throws CountMismatch unless exactly
/// `expected_count` remain.
std::vector<std::string> classify(const std::vector<std::string>& candidates,
                                  std::size_t expected_count,
                                  const std::map<std::string, Verdict>& verdicts);

}  // namespace cherfd
