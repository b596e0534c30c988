#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cherfd/rat.hpp"

namespace cherfd {

/// One irreducible W-representation. At most one of `refl_char_sum` and
/// `h_override` is set; an irrep with neither carries no weight data and
/// can only be named, not placed on the h-line.
struct IrrepData {
  std::string label;
  BigInt dim;
  std::optional<BigInt> refl_char_sum;  // sum over all reflections s of tau(s)
  std::optional<Rat> h_override;        // h at the group's reference parameter

  friend bool operator==(const IrrepData&, const IrrepData&) = default;
};

/// Open interval (lo, hi) of h-values.
struct OpenInterval {
  Bound lo;
  Bound hi;

  bool contains(const Rat& x) const { return lo < Bound(x) && Bound(x) < hi; }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Representation data of a finite Coxeter group. Immutable once built;
/// the constructor checks every invariant and throws on violation.
class GroupData {
 public:
  struct Fields {
    std::string name;
    BigInt dim_v;
    BigInt num_reflections;
    std::optional<Rat> c_ref;
    std::vector<IrrepData> irreps;
    std::map<std::string, std::string> sign_twist;
    /// Every irrep whose h (at any c) lies in this interval is listed with
    /// weight data. (-inf, inf) means the irrep list is complete.
    std::optional<OpenInterval> inventory_complete_on;
  };

  explicit GroupData(Fields fields);

  const std::string& name() const { return f_.name; }
  const BigInt& dim_v() const { return f_.dim_v; }
  const BigInt& num_reflections() const { return f_.num_reflections; }
  const std::optional<Rat>& c_ref() const { return f_.c_ref; }
  const std::vector<IrrepData>& irreps() const { return f_.irreps; }
  const std::map<std::string, std::string>& sign_twist() const { return f_.sign_twist; }
  const std::optional<OpenInterval>& inventory_complete_on() const {
    return f_.inventory_complete_on;
  }
  const Fields& fields() const { return f_; }

  bool contains(std::string_view label) const;
  /// Throws UnknownLabel.
  const IrrepData& irrep(std::string_view label) const;

  /// The aggregate reflection character A(tau), either as supplied or
  /// back-solved from an h override. Empty when the irrep has no weight data.
  /// Throws UnknownLabel.
  std::optional<BigInt> reflection_sum(std::string_view label) const;

  /// tau -> tau (x) sign, when recorded.
  std::optional<std::string> twist(std::string_view label) const;

  /// True when (lo, hi), or (lo, hi] if `include_hi`, lies inside the
  /// asserted inventory-completeness range. Empty intervals are covered.
  bool inventory_covers(const Bound& lo, const Bound& hi, bool include_hi) const;

  friend bool operator==(const GroupData& a, const GroupData& b) {
    return a.f_.name == b.f_.name && a.f_.dim_v == b.f_.dim_v &&
           a.f_.num_reflections == b.f_.num_reflections && a.f_.c_ref == b.f_.c_ref &&
           a.f_.irreps == b.f_.irreps && a.f_.sign_twist == b.f_.sign_twist &&
           a.f_.inventory_complete_on == b.f_.inventory_complete_on;
  }

 private:
  Fields f_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<std::string, BigInt, std::less<>> sums_;
};

/// One column of a decomposition matrix. Rows absent from `entries` are zero
/// strictly below `rows_complete_below` and unknown at or above it.
struct DecompColumn {
  std::string label;
  std::map<std::string, BigInt> entries;
  std::optional<Bound> rows_complete_below;

  /// Stored entry, or 0 when the row is absent.
  BigInt entry(const std::string& row) const;

  friend bool operator==(const DecompColumn&, const DecompColumn&) = default;
};

/// A (partial) decomposition matrix. When `twisted_labels` is set the labels
/// are those of a Hecke-algebra table: the column for kappa is the category O
/// column for kappa (x) sign, with rows twisted the same way.
struct DecompMatrix {
  std::string group;
  bool twisted_labels = false;
  std::map<std::string, DecompColumn> columns;

  /// Throws UnknownLabel.
  const DecompColumn& column(const std::string& label) const;

  friend bool operator==(const DecompMatrix&, const DecompMatrix&) = default;
};

GroupData parse_group(std::string_view json_text);
GroupData load_group(const std::string& path);
std::string serialize_group(const GroupData& group);

DecompMatrix parse_decomp(std::string_view json_text, const GroupData& group);
DecompMatrix load_decomp(const std::string& path, const GroupData& group);
std::string serialize_decomp(const DecompMatrix& matrix);

}  // namespace cherfd
