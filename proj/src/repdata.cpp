#include "cherfd/repdata.hpp"


#include "cherfd/error.hpp"
#include "json_io.hpp"

namespace cherfd {

using detail::json;

namespace {

[[noreturn]] void violation(const std::string& what) {
  throw Error(Errc::invariant_violation, what);
}

BigInt abs(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

}  // namespace

GroupData::GroupData(Fields fields) : f_(std::move(fields)) {
  if (f_.name.empty()) violation("group name is empty");
  if (f_.dim_v < 1) violation("dim_v must be positive");
  if (f_.num_reflections < 1) violation("num_reflections must be positive");

  const Rat half_dim_v = Rat(f_.dim_v, 2);
  for (std::size_t i = 0; i < f_.irreps.size(); ++i) {
    const IrrepData& ir = f_.irreps[i];
    if (ir.label.empty()) violation("empty irrep label");
    if (!index_.emplace(ir.label, i).second) {
      throw Error(Errc::duplicate_label, "label '" + ir.label + "' listed twice");
    }
    if (ir.dim < 1) violation("dim of '" + ir.label + "' must be positive");
    if (ir.refl_char_sum && ir.h_override) {
      violation("'" + ir.label + "' has both refl_char_sum and h_override");
    }

    std::optional<BigInt> sum = ir.refl_char_sum;
    if (ir.h_override) {
      if (!f_.c_ref || f_.c_ref->sign() == 0) {
        violation("'" + ir.label + "' has h_override but the group has no nonzero c_ref");
      }
      // h = dim V/2 - c_ref * A / dim  =>  A = (dim V/2 - h) * dim / c_ref
      const Rat solved = (half_dim_v - *ir.h_override) * Rat(ir.dim) / *f_.c_ref;
      if (!solved.is_integer()) {
        violation("h_override of '" + ir.label + "' gives non-integral reflection sum " +
                  solved.str());
      }
      sum = solved.num();
    }
    if (sum) {
      if (abs(*sum) > f_.num_reflections * ir.dim) {
        violation("reflection sum " + to_string(*sum) + " of '" + ir.label +
                  "' exceeds num_reflections * dim");
      }
      sums_.emplace(ir.label, *sum);
    }
  }

  for (const auto& [from, to] : f_.sign_twist) {
    if (from.empty() || to.empty()) violation("empty label in sign_twist");
    auto back = f_.sign_twist.find(to);
    if (back == f_.sign_twist.end() || back->second != from) {
      violation("sign_twist is not an involution at '" + from + "' -> '" + to + "'");
    }
    const bool has_from = contains(from);
    const bool has_to = contains(to);
    if (!has_from && !has_to) {
      throw Error(Errc::unknown_label,
                  "sign_twist pair '" + from + "' <-> '" + to + "' names no listed irrep");
    }
    if (has_from && has_to) {
      if (irrep(from).dim != irrep(to).dim) {
        violation("dim('" + from + "') != dim('" + to + "') under sign twist");
      }
      auto a = sums_.find(from);
      auto b = sums_.find(to);
      if (a != sums_.end() && b != sums_.end() && a->second + b->second != 0) {
        violation("reflection sums of '" + from + "' and '" + to +
                  "' are not negatives of each other");
      }
    }
  }

  if (f_.inventory_complete_on && !(f_.inventory_complete_on->lo < f_.inventory_complete_on->hi)) {
    violation("inventory_complete_on must satisfy lo < hi");
  }
}

bool GroupData::contains(std::string_view label) const { return index_.find(label) != index_.end(); }

const IrrepData& GroupData::irrep(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw Error(Errc::unknown_label, "'" + std::string(label) + "' is not an irrep of " + f_.name);
  }
  return f_.irreps[it->second];
}

std::optional<BigInt> GroupData::reflection_sum(std::string_view label) const {
  irrep(label);
  auto it = sums_.find(label);
  if (it == sums_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> GroupData::twist(std::string_view label) const {
  auto it = f_.sign_twist.find(std::string(label));
  if (it == f_.sign_twist.end()) return std::nullopt;
  return it->second;
}

bool GroupData::inventory_covers(const Bound& lo, const Bound& hi, bool include_hi) const {
  if (!(lo < hi)) return true;
  if (!f_.inventory_complete_on) return false;
  const OpenInterval& inv = *f_.inventory_complete_on;
  return inv.lo <= lo && (include_hi ? hi < inv.hi : hi <= inv.hi);
}

BigInt DecompColumn::entry(const std::string& row) const {
  auto it = entries.find(row);
  return it == entries.end() ? BigInt(0) : it->second;
}

const DecompColumn& DecompMatrix::column(const std::string& label) const {
  auto it = columns.find(label);
  if (it == columns.end()) {
    throw Error(Errc::unknown_label, "no column '" + label + "' in decomposition data");
  }
  return it->second;
}

GroupData parse_group(std::string_view json_text) {
  const json doc = detail::parse_json_exact(json_text);
  if (!doc.is_object()) throw Error(Errc::parse_error, "group file: expected an object");

  GroupData::Fields f;
  f.name = detail::as_string(detail::require(doc, "name", "group"), "name");
  f.dim_v = detail::as_bigint(detail::require(doc, "dim_v", "group"), "dim_v");
  f.num_reflections =
      detail::as_bigint(detail::require(doc, "num_reflections", "group"), "num_reflections");
  if (auto it = doc.find("c_ref"); it != doc.end()) f.c_ref = detail::as_rat(*it, "c_ref");

  const json& irreps = detail::require(doc, "irreps", "group");
  if (!irreps.is_array()) throw Error(Errc::parse_error, "irreps: expected an array");
  for (const json& item : irreps) {
    IrrepData ir;
    ir.label = detail::as_string(detail::require(item, "label", "irrep"), "irrep label");
    const std::string ctx = "irrep '" + ir.label + "'";
    ir.dim = detail::as_bigint(detail::require(item, "dim", ctx), ctx + " dim");
    if (auto it = item.find("refl_char_sum"); it != item.end()) {
      ir.refl_char_sum = detail::as_bigint(*it, ctx + " refl_char_sum");
    }
    if (auto it = item.find("h_override"); it != item.end()) {
      ir.h_override = detail::as_rat(*it, ctx + " h_override");
    }
    f.irreps.push_back(std::move(ir));
  }

  if (auto it = doc.find("sign_twist"); it != doc.end()) {
    if (!it->is_object()) throw Error(Errc::parse_error, "sign_twist: expected an object");
    for (const auto& [from, to] : it->items()) {
      f.sign_twist.emplace(from, detail::as_string(to, "sign_twist['" + from + "']"));
    }
  }

  if (auto it = doc.find("inventory_complete_on"); it != doc.end()) {
    if (!it->is_array() || it->size() != 2) {
      throw Error(Errc::parse_error, "inventory_complete_on: expected [lo, hi]");
    }
    f.inventory_complete_on = OpenInterval{detail::as_bound((*it)[0], "inventory_complete_on"),
                                           detail::as_bound((*it)[1], "inventory_complete_on")};
  }

  return GroupData(std::move(f));
}

GroupData load_group(const std::string& path) { return parse_group(detail::read_file(path)); }

std::string serialize_group(const GroupData& group) {
  json doc;
  doc["name"] = group.name();
  doc["dim_v"] = detail::bigint_to_json(group.dim_v());
  doc["num_reflections"] = detail::bigint_to_json(group.num_reflections());
  if (group.c_ref()) doc["c_ref"] = group.c_ref()->str();
  json irreps = json::array();
  for (const IrrepData& ir : group.irreps()) {
    json item;
    item["label"] = ir.label;
    item["dim"] = detail::bigint_to_json(ir.dim);
    if (ir.refl_char_sum) item["refl_char_sum"] = detail::bigint_to_json(*ir.refl_char_sum);
    if (ir.h_override) item["h_override"] = ir.h_override->str();
    irreps.push_back(std::move(item));
  }
  doc["irreps"] = std::move(irreps);
  doc["sign_twist"] = group.sign_twist();
  if (const auto& inv = group.inventory_complete_on()) {
    doc["inventory_complete_on"] = json::array({inv->lo.str(), inv->hi.str()});
  }
  return doc.dump(2);
}

DecompMatrix parse_decomp(std::string_view json_text, const GroupData& group) {
  const json doc = detail::parse_json_exact(json_text);
  if (!doc.is_object()) throw Error(Errc::parse_error, "decomposition file: expected an object");

  DecompMatrix m;
  m.group = detail::as_string(detail::require(doc, "group", "decomposition"), "group");
  if (m.group != group.name()) {
    violation("decomposition data is for group '" + m.group + "', not '" + group.name() + "'");
  }
  m.twisted_labels =
      detail::as_bool(detail::require(doc, "twisted_labels", "decomposition"), "twisted_labels");

  const json& columns = detail::require(doc, "columns", "decomposition");
  if (!columns.is_object()) throw Error(Errc::parse_error, "columns: expected an object");
  for (const auto& [label, body] : columns.items()) {
    const std::string ctx = "column '" + label + "'";
    if (!group.contains(label)) {
      throw Error(Errc::unknown_label, ctx + " is not an irrep of " + group.name());
    }
    DecompColumn col;
    col.label = label;
    const json& entries = detail::require(body, "entries", ctx);
    if (!entries.is_object()) throw Error(Errc::parse_error, ctx + ": entries must be an object");
    for (const auto& [row, value] : entries.items()) {
      if (!group.contains(row)) {
        throw Error(Errc::unknown_label, ctx + ": row '" + row + "' is not an irrep");
      }
      BigInt mult = detail::as_bigint(value, ctx + " row '" + row + "'");
      if (mult < 0) violation(ctx + ": negative entry at row '" + row + "'");
      if (mult != 0) col.entries.emplace(row, std::move(mult));
    }
    if (auto it = body.find("rows_complete_below"); it != body.end()) {
      col.rows_complete_below = detail::as_bound(*it, ctx + " rows_complete_below");
    }
    if (col.entry(label) != 1) {
      throw Error(Errc::bad_diagonal, ctx + ": diagonal entry is " + to_string(col.entry(label)) +
                                          ", expected 1");
    }
    m.columns.emplace(label, std::move(col));
  }
  return m;
}

DecompMatrix load_decomp(const std::string& path, const GroupData& group) {
  return parse_decomp(detail::read_file(path), group);
}

std::string serialize_decomp(const DecompMatrix& matrix) {
  json doc;
  doc["group"] = matrix.group;
  doc["twisted_labels"] = matrix.twisted_labels;
  json columns = json::object();
  for (const auto& [label, col] : matrix.columns) {
    json entries = json::object();
    for (const auto& [row, mult] : col.entries) entries[row] = detail::bigint_to_json(mult);
    json body;
    body["entries"] = std::move(entries);
    if (col.rows_complete_below) body["rows_complete_below"] = col.rows_complete_below->str();
    columns[label] = std::move(body);
  }
  doc["columns"] = std::move(columns);
  return doc.dump(2);
}

}  // namespace cherfd
