#pragma once

#include <string>
#include <vector>

#include "cherfd/rat.hpp"
#include "cherfd/repdata.hpp"

namespace cherfd {

/// The stored column `col` with every label rewritten through the sign twist
/// when the matrix uses twisted labels (a Hecke label kappa is read as the
/// category O label kappa (x) sign); unchanged otherwise.
/// Throws UnknownLabel, MissingTwist.
DecompColumn resolve_labels(const DecompMatrix& matrix, const std::string& col,
                            const GroupData& group);

/// Result of scanning a column for the first Verma module mapping into M(col).
struct HomReport {
  std::string source;
  Rat source_h;
  std::string witness;
  Rat witness_h;
  BigInt witness_mult;
  /// Hom spaces vanish for every lowest weight strictly inside this interval.
  OpenInterval vanishing_range;

  std::string str() const;
};

/// Scans the column for `col` in ascending (h_c, label) order and reports the
/// first off-diagonal nonzero row. Rows absent below the column's
/// rows_complete_below count as certified zeros.
///
/// Throws IncompleteInventory (no certification bound above h_c(col), or a
/// nonzero row without weight data), NoWitness, AmbiguousLevel (a second
/// nonzero row at the witness level), InvariantViolation (a nonzero row at or
/// below h_c(col)).
HomReport hom_report(const DecompMatrix& matrix, const std::string& col, const GroupData& group,
                     const Rat& c);

struct ExpansionTerm {
  BigInt coeff;
  std::string label;
  Rat h;

  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

/// [L(target)] in the Verma basis, exact for every Verma with lowest weight
/// below `valid_below`; unknown terms all sit at h >= valid_below.
struct GrothExpansion {
  std::string target;
  std::vector<ExpansionTerm> terms;
  Bound valid_below = Bound::pos_inf();

  std::string str() const;
};

/// Single-correction expansion: [L(col)] = [M(col)] - [M(witness)] below the
/// next lowest weight above the witness, or just [M(col)] when the column has
/// no certified off-diagonal entry.
///
/// Throws UnsupportedExpansion (witness multiplicity > 1, or another nonzero
/// row below valid_below), IncompleteInventory.
GrothExpansion expansion(const DecompMatrix& matrix, const std::string& col,
                         const GroupData& group, const Rat& c);

}  // namespace cherfd
