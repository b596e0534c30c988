#include "cherfd/error.hpp"

namespace cherfd {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::bad_diagonal: return "BadDiagonal";
    case Errc::missing_twist: return "MissingTwist";
    case Errc::missing_weight: return "MissingWeight";
    case Errc::empty_window: return "EmptyWindow";
    case Errc::outside_window: return "OutsideWindow";
    case Errc::incomplete_inventory: return "IncompleteInventory";
    case Errc::ambiguous_level: return "AmbiguousLevel";
    case Errc::no_witness: return "NoWitness";
    case Errc::unsupported_expansion: return "UnsupportedExpansion";
    case Errc::count_mismatch: return "CountMismatch";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

namespace {
std::string join(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}
}  // namespace

CountMismatch::CountMismatch(std::vector<std::string> remainder, std::size_t expected)
    : Error(Errc::count_mismatch,
            std::to_string(remainder.size()) + " candidates remain (" + join(remainder) +
                "), expected " + std::to_string(expected)),
      remainder_(std::move(remainder)),
      expected_(expected) {}

}  // namespace cherfd
