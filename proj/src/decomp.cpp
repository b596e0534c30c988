#include "cherfd/decomp.hpp"

#include <algorithm>
#include <optional>

#include "cherfd/error.hpp"
#include "cherfd/weights.hpp"

namespace cherfd {

namespace {

std::string twisted(const GroupData& group, const std::string& label) {
  auto t = group.twist(label);
  if (!t) throw Error(Errc::missing_twist, "no sign twist recorded for '" + label + "'");
  return *t;
}

// The column for `col` read as Hom data into M(col): row rho nonzero means
// M(rho) maps into M(col). A Hecke table gives the O column for col (x) sign;
// the Hom duality between twisted and untwisted Vermas undoes the twist.
DecompColumn hom_column(const DecompMatrix& matrix, const std::string& col,
                        const GroupData& group) {
  if (!matrix.twisted_labels) return matrix.column(col);
  DecompColumn o_column = resolve_labels(matrix, col, group);
  DecompColumn back;
  back.label = twisted(group, o_column.label);
  back.rows_complete_below = o_column.rows_complete_below;
  for (const auto& [row, mult] : o_column.entries) back.entries.emplace(twisted(group, row), mult);
  return back;
}

struct Row {
  Rat h;
  std::string label;
  BigInt mult;
};

struct Scan {
  DecompColumn column;
  Rat h_col;
  Bound certified_below = Bound::neg_inf();
  std::vector<Row> nonzero;  // off-diagonal, ascending by (h, label)

  std::vector<Row> certified() const {
    std::vector<Row> out;
    for (const Row& r : nonzero) {
      if (Bound(r.h) < certified_below) out.push_back(r);
    }
    return out;
  }
};

Scan scan_column(const DecompMatrix& matrix, const std::string& col, const GroupData& group,
                 const Rat& c) {
  Scan s{hom_column(matrix, col, group), h_weight(group, c, col), Bound::neg_inf(), {}};
  if (!s.column.rows_complete_below || *s.column.rows_complete_below <= Bound(s.h_col)) {
    throw Error(Errc::incomplete_inventory,
                "column '" + col + "' certifies no rows above h_c = " + s.h_col.str());
  }
  s.certified_below = *s.column.rows_complete_below;

  for (const auto& [row, mult] : s.column.entries) {
    if (row == col) continue;
    if (!group.reflection_sum(row)) {
      throw Error(Errc::incomplete_inventory,
                  "row '" + row + "' of column '" + col + "' is nonzero but has no weight data");
    }
    Rat h = h_weight(group, c, row);
    if (h <= s.h_col) {
      throw Error(Errc::invariant_violation, "column '" + col + "' has nonzero row '" + row +
                                                 "' at h = " + h.str() + " <= h_c(" + col +
                                                 ") = " + s.h_col.str());
    }
    s.nonzero.push_back({std::move(h), row, mult});
  }
  std::sort(s.nonzero.begin(), s.nonzero.end(), [](const Row& a, const Row& b) {
    if (a.h != b.h) return a.h < b.h;
    return a.label < b.label;
  });
  return s;
}

// Smallest lowest weight strictly above `from`, capped by the end of the
// asserted inventory range.
Bound next_weight_above(const GroupData& group, const Rat& c, const Rat& from) {
  const auto& inv = group.inventory_complete_on();
  if (!inv || !(inv->lo <= Bound(from) && Bound(from) < inv->hi)) {
    throw Error(Errc::incomplete_inventory,
                "irrep inventory of " + group.name() + " is not asserted complete above h = " +
                    from.str());
  }
  Bound next = inv->hi;
  for (const WeightedLabel& wl : weighted_labels(group, c)) {
    if (from < wl.h) {
      next = std::min(next, Bound(wl.h));
      break;
    }
  }
  return next;
}

}  // namespace

DecompColumn resolve_labels(const DecompMatrix& matrix, const std::string& col,
                            const GroupData& group) {
  const DecompColumn& stored = matrix.column(col);
  if (!matrix.twisted_labels) return stored;
  DecompColumn out;
  out.label = twisted(group, stored.label);
  out.rows_complete_below = stored.rows_complete_below;
  for (const auto& [row, mult] : stored.entries) out.entries.emplace(twisted(group, row), mult);
  return out;
}

HomReport hom_report(const DecompMatrix& matrix, const std::string& col, const GroupData& group,
                     const Rat& c) {
  const Scan s = scan_column(matrix, col, group, c);
  const std::vector<Row> rows = s.certified();
  if (rows.empty()) {
    throw Error(Errc::no_witness, "column '" + col + "' has no off-diagonal entry below h = " +
                                      s.certified_below.str());
  }
  const Row& w = rows.front();
  if (rows.size() > 1 && rows[1].h == w.h) {
    throw Error(Errc::ambiguous_level, "rows '" + w.label + "' and '" + rows[1].label +
                                           "' are both nonzero at h = " + w.h.str());
  }
  return HomReport{col, s.h_col, w.label, w.h, w.mult, OpenInterval{s.h_col, w.h}};
}

GrothExpansion expansion(const DecompMatrix& matrix, const std::string& col,
                         const GroupData& group, const Rat& c) {
  const Scan s = scan_column(matrix, col, group, c);
  const std::vector<Row> rows = s.certified();

  GrothExpansion out;
  out.target = col;
  out.terms.push_back({BigInt(1), col, s.h_col});
  if (rows.empty()) {
    out.valid_below = std::min(s.certified_below, next_weight_above(group, c, s.h_col));
    return out;
  }

  const Row& w = rows.front();
  if (w.mult != 1) {
    throw Error(Errc::unsupported_expansion, "witness '" + w.label + "' of column '" + col +
                                                 "' has multiplicity " + to_string(w.mult));
  }
  out.valid_below = std::min(s.certified_below, next_weight_above(group, c, w.h));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (Bound(rows[i].h) < out.valid_below) {
      throw Error(Errc::unsupported_expansion,
                  "column '" + col + "' has a second nonzero row '" + rows[i].label +
                      "' at h = " + rows[i].h.str() + " below " + out.valid_below.str());
    }
  }
  out.terms.push_back({BigInt(-1), w.label, w.h});
  return out;
}

std::string HomReport::str() const {
  return "Hom into M(" + source + ") [h=" + source_h.str() + "]: witness " + witness +
         " [h=" + witness_h.str() + ", mult=" + to_string(witness_mult) + "], zero on (" +
         vanishing_range.lo.str() + ", " + vanishing_range.hi.str() + ")";
}

std::string GrothExpansion::str() const {
  std::string out = "L(" + target + ") =";
  bool first = true;
  for (const ExpansionTerm& t : terms) {
    const bool neg = t.coeff < 0;
    const BigInt mag = neg ? BigInt(-t.coeff) : t.coeff;
    if (first) {
      out += neg ? " -" : " ";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += "M(" + t.label + ")";
  }
  if (valid_below.is_finite()) out += " + (terms with h >= " + valid_below.str() + ")";
  return out;
}

}  // namespace cherfd
