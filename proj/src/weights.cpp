#include "cherfd/weights.hpp"

#include <algorithm>

#include "cherfd/error.hpp"

namespace cherfd {

Rat h_weight(const GroupData& group, const Rat& c, std::string_view tau) {
  const IrrepData& ir = group.irrep(tau);
  if (ir.h_override && group.c_ref() && c == *group.c_ref()) return *ir.h_override;
  const auto sum = group.reflection_sum(tau);
  if (!sum) {
    throw Error(Errc::missing_weight, "no reflection character data for '" + ir.label + "'");
  }
  return Rat(group.dim_v(), 2) - c * Rat(*sum, ir.dim);
}

std::vector<WeightedLabel> weighted_labels(const GroupData& group, const Rat& c) {
  std::vector<WeightedLabel> out;
  for (const IrrepData& ir : group.irreps()) {
    if (!group.reflection_sum(ir.label)) continue;
    out.push_back({ir.label, h_weight(group, c, ir.label)});
  }
  std::sort(out.begin(), out.end(), [](const WeightedLabel& a, const WeightedLabel& b) {
    if (a.h != b.h) return a.h < b.h;
    return a.label < b.label;
  });
  return out;
}

WindowQuery labels_in_window(const GroupData& group, const Rat& c, const Bound& lo,
                             const Bound& hi) {
  WindowQuery q;
  for (WeightedLabel& wl : weighted_labels(group, c)) {
    const Bound h(wl.h);
    if (lo < h && h <= hi) q.labels.push_back(std::move(wl));
  }
  q.exhaustive = group.inventory_covers(lo, hi, /*include_hi=*/true);
  return q;
}

}  // namespace cherfd
