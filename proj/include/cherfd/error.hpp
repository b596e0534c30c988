#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cherfd {

enum class Errc {
  parse_error,
  invariant_violation,
  duplicate_label,
  unknown_label,
  bad_diagonal,
  missing_twist,
  missing_weight,
  empty_window,
  outside_window,
  incomplete_inventory,
  ambiguous_level,
  no_witness,
  unsupported_expansion,
  count_mismatch,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by `classify` when the surviving candidates do not match the
/// externally known count. The survivors are kept for reporting.
class CountMismatch : public Error {
 public:
  CountMismatch(std::vector<std::string> remainder, std::size_t expected);

  const std::vector<std::string>& remainder() const noexcept { return remainder_; }
  std::size_t expected() const noexcept { return expected_; }

 private:
  std::vector<std::string> remainder_;
  std::size_t expected_;
};

}  // namespace cherfd
