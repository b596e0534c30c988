#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cherfd/decomp.hpp"
#include "cherfd/error.hpp"
#include "cherfd/findim.hpp"
#include "cherfd/gseries.hpp"
#include "cherfd/repdata.hpp"
#include "cherfd/weights.hpp"

#ifndef CHERFD_DEFAULT_DATA_DIR
#define CHERFD_DEFAULT_DATA_DIR "data"
#endif

namespace cherfd::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Options {
  std::string group = "e8_c13_paper.json";
  std::string decomp = "e8_c13_decomp.json";
  std::string c;
  std::string hi;
  std::string output = "text";
  std::vector<std::string> labels;
  std::string candidates;
  std::size_t expect = 0;
};

class Session {
 public:
  Session(const Options& opts, std::ostream& out, std::ostream& err)
      : opts_(opts), out_(out), err_(err), machine_(opts.output != "text") {}

  int hweight();
  int verma_char();
  int simple_char();
  int findim();
  int classify_cmd();
  int verify_e8();

 private:
  // Loads the group (and decomposition data when asked); false on failure
  // after reporting.
  bool load(bool with_decomp);
  bool resolve_c();
  std::optional<Rat> parse_hi();

  int fail(int code, const std::string& message);
  int fail(const Error& e);
  void emit(const json& doc) { out_ << doc.dump(2) << '\n'; }

  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
  bool machine_;
  std::optional<GroupData> group_;
  std::optional<DecompMatrix> matrix_;
  Rat c_;
};

std::string resolve_path(const std::string& path) {
  if (fs::exists(path)) return path;
  const fs::path bundled = fs::path(data_dir()) / path;
  if (fs::exists(bundled)) return bundled.string();
  return path;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::unknown_label: return unknown_label;
    case Errc::unsupported_expansion:
    case Errc::incomplete_inventory:
    case Errc::ambiguous_level:
    case Errc::no_witness:
    case Errc::invariant_violation: return unsupported;
    case Errc::count_mismatch: return inconclusive;
    default: return dataset_error;
  }
}

json series_json(const GradedSeries& s) {
  json terms = json::array();
  for (const auto& [e, coeff] : s.terms()) terms.push_back({e.str(), to_string(coeff)});
  return {{"window", {s.lo().str(), s.hi().str()}}, {"terms", terms}};
}

json expansion_json(const GrothExpansion& exp) {
  json terms = json::array();
  for (const ExpansionTerm& t : exp.terms) {
    terms.push_back({{"coeff", to_string(t.coeff)}, {"label", t.label}, {"h", t.h.str()}});
  }
  return {{"target", exp.target}, {"terms", terms}, {"valid_below", exp.valid_below.str()}};
}

json verdict_json(const Verdict& v) {
  json doc = {{"kind", v.infinite() ? "INFINITE_DIMENSIONAL" : "INCONCLUSIVE"},
              {"window", {v.window_lo.str(), v.window_hi.str()}}};
  if (v.infinite()) {
    doc["witness_exponent"] = v.witness_exponent->str();
    doc["dim_neg"] = to_string(*v.dim_neg);
    doc["dim_pos"] = to_string(*v.dim_pos);
  }
  return doc;
}

std::string joined(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : " ") + l;
  return out;
}

struct CandidateResult {
  std::optional<Verdict> verdict;
  std::string note;  // why a candidate stayed untested
};

std::map<std::string, CandidateResult> test_candidates(const GroupData& group,
                                                       const DecompMatrix& matrix, const Rat& c,
                                                       const std::vector<std::string>& candidates) {
  std::map<std::string, CandidateResult> out;
  for (const std::string& label : candidates) {
    CandidateResult& r = out[label];
    if (matrix.columns.count(label) == 0) {
      r.note = "no decomposition column";
      continue;
    }
    try {
      r.verdict = sl2_symmetry_test(simple_character(group, c, matrix, label));
    } catch (const Error& e) {
      r.note = e.what();
    }
  }
  return out;
}

int Session::fail(int code, const std::string& message) {
  err_ << "error: " << message << '\n';
  if (machine_) emit({{"error", message}, {"exit", code}});
  return code;
}

int Session::fail(const Error& e) { return fail(exit_code_for(e.code()), e.what()); }

bool Session::load(bool with_decomp) {
  try {
    group_.emplace(load_group(resolve_path(opts_.group)));
    if (with_decomp) matrix_.emplace(load_decomp(resolve_path(opts_.decomp), *group_));
  } catch (const Error& e) {
    fail(dataset_error, e.what());
    return false;
  }
  return resolve_c();
}

bool Session::resolve_c() {
  try {
    if (!opts_.c.empty()) {
      c_ = Rat::parse(opts_.c);
    } else if (group_->c_ref()) {
      c_ = *group_->c_ref();
    } else {
      fail(dataset_error, "no --c given and the group records no c_ref");
      return false;
    }
  } catch (const Error& e) {
    fail(dataset_error, std::string("--c: ") + e.what());
    return false;
  }
  return true;
}

std::optional<Rat> Session::parse_hi() {
  if (opts_.hi.empty()) return std::nullopt;
  return Rat::parse(opts_.hi);
}

int Session::hweight() {
  if (!load(false)) return dataset_error;
  json weights = json::object();
  std::ostringstream text;
  for (const std::string& label : opts_.labels) {
    try {
      const Rat h = h_weight(*group_, c_, label);
      weights[label] = h.str();
      text << label << ": " << h << '\n';
    } catch (const Error& e) {
      return fail(e);
    }
  }
  if (machine_) {
    emit({{"command", "hweight"}, {"group", group_->name()}, {"c", c_.str()}, {"weights", weights}});
  } else {
    out_ << text.str();
  }
  return ok;
}

int Session::verma_char() {
  if (!load(false)) return dataset_error;
  const std::string& label = opts_.labels.front();
  try {
    const Rat h = h_weight(*group_, c_, label);
    const Rat hi = parse_hi().value_or(default_truncation(h));
    const GradedSeries s = verma_series(*group_, c_, label, hi);
    if (machine_) {
      emit({{"command", "verma-char"}, {"label", label}, {"c", c_.str()}, {"h", h.str()},
            {"character", series_json(s)}});
    } else {
      out_ << "ch M(" << label << ") on [" << s.lo() << ", " << s.hi() << "): " << s.str() << '\n';
    }
  } catch (const Error& e) {
    return fail(e);
  }
  return ok;
}

int Session::simple_char() {
  if (!load(true)) return dataset_error;
  const std::string& label = opts_.labels.front();
  try {
    const GrothExpansion exp = expansion(*matrix_, label, *group_, c_);
    const GradedSeries s = simple_character(*group_, c_, exp, parse_hi());
    if (machine_) {
      emit({{"command", "simple-char"}, {"label", label}, {"c", c_.str()},
            {"expansion", expansion_json(exp)}, {"character", series_json(s)}});
    } else {
      out_ << "expansion: " << exp.str() << '\n';
      out_ << "ch L(" << label << ") on [" << s.lo() << ", " << s.hi() << "): " << s.str() << '\n';
    }
  } catch (const Error& e) {
    return fail(e);
  }
  return ok;
}

int Session::findim() {
  if (!load(true)) return dataset_error;
  const std::string& label = opts_.labels.front();
  try {
    const GrothExpansion exp = expansion(*matrix_, label, *group_, c_);
    const GradedSeries s = simple_character(*group_, c_, exp, parse_hi());
    const Verdict v = sl2_symmetry_test(s);
    if (machine_) {
      emit({{"command", "findim"}, {"label", label}, {"c", c_.str()},
            {"h", h_weight(*group_, c_, label).str()}, {"expansion", expansion_json(exp)},
            {"character", series_json(s)}, {"verdict", verdict_json(v)}});
    } else {
      out_ << "h_c(" << label << ") = " << h_weight(*group_, c_, label) << '\n';
      out_ << "expansion: " << exp.str() << '\n';
      out_ << "ch L(" << label << ") on [" << s.lo() << ", " << s.hi() << "): " << s.str() << '\n';
      out_ << v.str(label) << '\n';
    }
    return v.infinite() ? ok : inconclusive;
  } catch (const Error& e) {
    return fail(e);
  }
}

std::vector<std::string> read_candidates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open candidates file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream words(line);
    for (std::string w; words >> w;) out.push_back(w);
  }
  if (out.empty()) throw Error(Errc::parse_error, "candidates file '" + path + "' is empty");
  return out;
}

int Session::classify_cmd() {
  if (!load(true)) return dataset_error;
  std::vector<std::string> candidates;
  try {
    candidates = read_candidates(resolve_path(opts_.candidates));
  } catch (const Error& e) {
    return fail(dataset_error, e.what());
  }
  const auto results = test_candidates(*group_, *matrix_, c_, candidates);
  std::map<std::string, Verdict> verdicts;
  json per = json::object();
  std::ostringstream text;
  for (const std::string& label : candidates) {
    const CandidateResult& r = results.at(label);
    if (r.verdict) {
      verdicts.emplace(label, *r.verdict);
      per[label] = verdict_json(*r.verdict);
      text << r.verdict->str(label) << '\n';
    } else {
      per[label] = {{"kind", "UNTESTED"}, {"note", r.note}};
      text << label << ": UNTESTED (" << r.note << ")\n";
    }
  }
  try {
    const auto kept = classify(candidates, opts_.expect, verdicts);
    if (machine_) {
      emit({{"command", "classify"}, {"verdicts", per}, {"classification", kept}});
    } else {
      out_ << text.str() << "classification: " << joined(kept) << '\n';
    }
    return ok;
  } catch (const CountMismatch& e) {
    if (machine_) {
      emit({{"command", "classify"}, {"verdicts", per}, {"remainder", e.remainder()},
            {"error", e.what()}});
    } else {
      out_ << text.str();
      err_ << "error: " << e.what() << '\n';
    }
    return inconclusive;
  }
}

int Session::verify_e8() {
  json manifest;
  try {
    std::ifstream in(fs::path(data_dir()) / "e8_c13_expected.json");
    if (!in) throw Error(Errc::parse_error, "cannot open e8_c13_expected.json in " + data_dir());
    try {
      manifest = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(Errc::parse_error, std::string("expected-results manifest: ") + e.what());
    }
    group_.emplace(load_group((fs::path(data_dir()) / manifest.at("group_file").get<std::string>()).string()));
    matrix_.emplace(load_decomp(
        (fs::path(data_dir()) / manifest.at("decomp_file").get<std::string>()).string(), *group_));
    c_ = Rat::parse(manifest.at("c").get<std::string>());
  } catch (const Error& e) {
    return fail(dataset_error, e.what());
  } catch (const json::exception& e) {
    return fail(dataset_error, std::string("expected-results manifest: ") + e.what());
  }

  std::vector<std::string> mismatches;
  std::ostringstream text;
  json record = {{"command", "verify-e8"}, {"group", group_->name()}, {"c", c_.str()}};
  auto check = [&](const std::string& what, const std::string& got, const std::string& want) {
    if (got != want) mismatches.push_back(what + ": got " + got + ", expected " + want);
  };

  try {
    const std::string target = manifest.at("target").get<std::string>();
    text << "group: " << group_->name() << " (dim V = " << to_string(group_->dim_v()) << ", "
         << to_string(group_->num_reflections()) << " reflections), c = " << c_ << '\n';

    json hs = json::object();
    for (const auto& [label, want] : manifest.at("h").items()) {
      const Rat h = h_weight(*group_, c_, label);
      hs[label] = h.str();
      text << "h_c(" << label << ") = " << h << '\n';
      check("h_c(" + label + ")", h.str(), want.get<std::string>());
    }
    record["h"] = hs;

    const HomReport hom = hom_report(*matrix_, target, *group_, c_);
    text << hom.str() << '\n';
    const json& w = manifest.at("witness");
    check("witness", hom.witness, w.at("label").get<std::string>());
    check("witness h", hom.witness_h.str(), w.at("h").get<std::string>());
    check("witness multiplicity", to_string(hom.witness_mult), w.at("mult").get<std::string>());
    record["hom"] = {{"witness", hom.witness}, {"witness_h", hom.witness_h.str()},
                     {"witness_mult", to_string(hom.witness_mult)}};

    const GrothExpansion exp = expansion(*matrix_, target, *group_, c_);
    text << "expansion: " << exp.str() << '\n';
    json got_terms = json::array();
    for (const ExpansionTerm& t : exp.terms) got_terms.push_back({to_string(t.coeff), t.label});
    check("expansion terms", got_terms.dump(), manifest.at("expansion").dump());
    check("valid_below", exp.valid_below.str(), manifest.at("valid_below").get<std::string>());
    record["expansion"] = expansion_json(exp);

    const GradedSeries s = simple_character(*group_, c_, exp);
    json dims = json::object();
    for (const auto& [e, want] : manifest.at("graded_dims").items()) {
      const BigInt got = s.coeff_at(Rat::parse(e));
      dims[e] = to_string(got);
      text << "dim L(" << target << ")[" << e << "] = " << to_string(got) << '\n';
      check("dim L[" + e + "]", to_string(got), want.get<std::string>());
    }
    record["graded_dims"] = dims;

    const Verdict v = sl2_symmetry_test(s);
    text << v.str(target) << '\n';
    check("verdict", v.infinite() ? "INFINITE_DIMENSIONAL" : "INCONCLUSIVE",
          "INFINITE_DIMENSIONAL");
    if (v.infinite()) {
      check("witness exponent", v.witness_exponent->str(),
            manifest.at("witness_exponent").get<std::string>());
    }
    record["verdict"] = verdict_json(v);

    const auto candidates = manifest.at("candidates").get<std::vector<std::string>>();
    std::map<std::string, Verdict> verdicts;
    for (const auto& [label, r] : test_candidates(*group_, *matrix_, c_, candidates)) {
      if (r.verdict) verdicts.emplace(label, *r.verdict);
    }
    std::vector<std::string> kept;
    try {
      kept = classify(candidates, manifest.at("expected_count").get<std::size_t>(), verdicts);
    } catch (const CountMismatch& e) {
      mismatches.push_back(e.what());
      kept = e.remainder();
    }
    text << "classification: " << joined(kept) << '\n';
    check("classification", joined(kept),
          joined(manifest.at("classification").get<std::vector<std::string>>()));
    record["classification"] = kept;
  } catch (const Error& e) {
    mismatches.push_back(std::string("pipeline failed: ") + e.what());
  } catch (const json::exception& e) {
    return fail(dataset_error, std::string("expected-results manifest: ") + e.what());
  }

  record["mismatches"] = mismatches;
  record["ok"] = mismatches.empty();
  if (machine_) {
    emit(record);
  } else {
    out_ << text.str();
    for (const auto& m : mismatches) out_ << "MISMATCH: " << m << '\n';
  }
  return mismatches.empty() ? ok : self_test_failed;
}

void add_common(CLI::App* sub, Options& opts, bool decomp) {
  sub->add_option("--group", opts.group, "group dataset (JSON)");
  if (decomp) sub->add_option("--decomp", opts.decomp, "decomposition dataset (JSON)");
  sub->add_option("--c", opts.c, "parameter c as p/q (default: the group's c_ref)");
  sub->add_option("--output", opts.output, "text or machine-readable")
      ->check(CLI::IsMember({"text", "machine-readable", "json"}));
}

}  // namespace

std::string data_dir() {
  if (const char* env = std::getenv("CHERFD_DATA"); env != nullptr && *env != '\0') return env;
  return CHERFD_DEFAULT_DATA_DIR;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lowest weights, graded characters and the sl2 finiteness obstruction "
               "for rational Cherednik algebras"};
  app.require_subcommand(1);
  Options opts;

  auto* hw = app.add_subcommand("hweight", "print h_c(tau) for each label");
  add_common(hw, opts, false);
  hw->add_option("labels", opts.labels)->required();

  auto* vc = app.add_subcommand("verma-char", "truncated graded character of M(tau)");
  add_common(vc, opts, false);
  vc->add_option("--hi", opts.hi, "truncation bound (default h_c + 16)");
  vc->add_option("label", opts.labels)->required()->expected(1);

  auto* sc = app.add_subcommand("simple-char", "truncated graded character of L(tau)");
  add_common(sc, opts, true);
  sc->add_option("--hi", opts.hi, "truncation when the expansion is exact everywhere");
  sc->add_option("label", opts.labels)->required()->expected(1);

  auto* fd = app.add_subcommand("findim", "sl2 obstruction for L(tau)");
  add_common(fd, opts, true);
  fd->add_option("--hi", opts.hi, "truncation when the expansion is exact everywhere");
  fd->add_option("label", opts.labels)->required()->expected(1);

  auto* cl = app.add_subcommand("classify", "drop candidates proven infinite-dimensional");
  add_common(cl, opts, true);
  cl->add_option("--candidates", opts.candidates, "file of whitespace-separated labels")
      ->required();
  cl->add_option("--expect", opts.expect, "known number of finite-dimensional simples")
      ->required();

  auto* ve = app.add_subcommand("verify-e8", "reproduce the E8, c = 1/3 result from bundled data");
  ve->add_option("--output", opts.output, "text or machine-readable")
      ->check(CLI::IsMember({"text", "machine-readable", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  Session session(opts, out, err);
  if (hw->parsed()) return session.hweight();
  if (vc->parsed()) return session.verma_char();
  if (sc->parsed()) return session.simple_char();
  if (fd->parsed()) return session.findim();
  if (cl->parsed()) return session.classify_cmd();
  return session.verify_e8();
}

}  // namespace cherfd::cli
