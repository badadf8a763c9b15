#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace betadix {

/// Machine-readable failure categories. The string form (see `error_code_name`)
/// is stable and is what the CLI prints and documents.
enum class ErrorCode {
  invalid_argument,
  not_monic,
  reducible,
  ring_mismatch,
  division_by_zero,
  zero_divisor,
  norm_too_small,
  not_representative,
  state_budget_exceeded,
  not_terminating,
  closure_budget_exceeded,
  ramified_prime,
  not_degree_one,
  precision_exhausted,
  out_of_domain,
  not_coprime,
  root_of_unity,
  hypothesis_violated,
  unsupported,
  internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// True for the codes that signal a rejected mathematical hypothesis on
/// (alpha, beta) rather than a bug or bad input. These map to exit status 2.
bool is_hypothesis_rejection(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace betadix
