#include "json_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "cherfd/error.hpp"

namespace cherfd::detail {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

class ExactDomBuilder {
 public:
  using number_integer_t = json::number_integer_t;
  using number_unsigned_t = json::number_unsigned_t;
  using number_float_t = json::number_float_t;
  using string_t = json::string_t;
  using binary_t = json::binary_t;

  bool null() { put(nullptr); return true; }
  bool boolean(bool v) { put(v); return true; }
  bool number_integer(number_integer_t v) { put(v); return true; }
  bool number_unsigned(number_unsigned_t v) { put(v); return true; }
  bool number_float(number_float_t v, const string_t& raw) {
    if (is_integer_literal(raw)) {
      put(raw);
    } else {
      put(v);
    }
    return true;
  }
  bool string(string_t& v) { put(v); return true; }
  bool binary(binary_t&) { throw Error(Errc::parse_error, "binary values not supported"); }

  bool start_object(std::size_t) { stack_.push_back(put(json::object())); return true; }
  bool end_object() { stack_.pop_back(); return true; }
  bool start_array(std::size_t) { stack_.push_back(put(json::array())); return true; }
  bool end_array() { stack_.pop_back(); return true; }

  bool key(string_t& k) {
    json& obj = *stack_.back();
    if (obj.contains(k)) throw Error(Errc::parse_error, "duplicate key '" + k + "'");
    slot_ = &obj[k];
    return true;
  }

  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
    throw Error(Errc::parse_error, ex.what());
  }

  json take() { return std::move(root_); }

 private:
  template <typename V>
  json* put(V&& v) {
    if (stack_.empty()) {
      root_ = json(std::forward<V>(v));
      return &root_;
    }
    json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(json(std::forward<V>(v)));
      return &top.back();
    }
    *slot_ = json(std::forward<V>(v));
    return slot_;
  }

  json root_;
  std::vector<json*> stack_;
  json* slot_ = nullptr;
};

std::string where(std::string_view context) { return std::string(context); }

}  // namespace

json parse_json_exact(std::string_view text) {
  ExactDomBuilder builder;
  json::sax_parse(text.begin(), text.end(), &builder);
  return builder.take();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const json& require(const json& obj, const char* key, std::string_view context) {
  if (!obj.is_object()) throw Error(Errc::parse_error, where(context) + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(Errc::parse_error, where(context) + ": missing field '" + key + "'");
  }
  return *it;
}

std::string as_string(const json& v, std::string_view context) {
  if (!v.is_string()) throw Error(Errc::parse_error, where(context) + ": expected a string");
  return v.get<std::string>();
}

bool as_bool(const json& v, std::string_view context) {
  if (!v.is_boolean()) throw Error(Errc::parse_error, where(context) + ": expected a boolean");
  return v.get<bool>();
}

BigInt as_bigint(const json& v, std::string_view context) {
  if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return parse_bigint(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(Errc::parse_error, where(context) + ": " + e.what());
    }
  }
  throw Error(Errc::parse_error, where(context) + ": expected an integer");
}

Rat as_rat(const json& v, std::string_view context) {
  if (v.is_number_integer() || v.is_number_unsigned()) return Rat(as_bigint(v, context));
  if (!v.is_string()) {
    throw Error(Errc::parse_error, where(context) + ": expected a rational string \"p/q\"");
  }
  try {
    return Rat::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw Error(Errc::parse_error, where(context) + ": " + e.what());
  }
}

Bound as_bound(const json& v, std::string_view context) {
  if (v.is_string()) {
    try {
      return Bound::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(Errc::parse_error, where(context) + ": " + e.what());
    }
  }
  return as_rat(v, context);
}

json bigint_to_json(const BigInt& n) {
  if (n.fits_slong_p()) return json(static_cast<std::int64_t>(n.get_si()));
  return json(n.get_str(10));
}

}  // namespace cherfd::detail
