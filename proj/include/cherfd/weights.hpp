#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cherfd/rat.hpp"
#include "cherfd/repdata.hpp"

namespace cherfd {

/// Scalar by which the grading element acts on the lowest-weight space of
/// M(tau): dim V / 2 - c * A(tau) / dim tau, with A(tau) the sum of the
/// character over all reflections. Exact.
///
/// Throws UnknownLabel, or MissingWeight when tau has no weight data.
Rat h_weight(const GroupData& group, const Rat& c, std::string_view tau);

struct WeightedLabel {
  std::string label;
  Rat h;

  friend bool operator==(const WeightedLabel&, const WeightedLabel&) = default;
};

struct WindowQuery {
  std::vector<WeightedLabel> labels;  // ascending by (h, label)
  /// The group asserts nothing else lives in the window.
  bool exhaustive = false;
};

/// Listed labels with weight data and lo < h_c <= hi.
WindowQuery labels_in_window(const GroupData& group, const Rat& c, const Bound& lo,
                             const Bound& hi);

/// Every listed label with weight data, ascending by (h, label).
std::vector<WeightedLabel> weighted_labels(const GroupData& group, const Rat& c);

}  // namespace cherfd
