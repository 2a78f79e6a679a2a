#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfold {

/// Failure with a machine-readable code and an optional integer witness
/// (vertex indices, group element indices, ...). Codes are stable strings
/// such as "not_automorphism" or "orbit_not_cycle_free" and are what the
/// HTTP service reports in its error payloads.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail, std::vector<long long> witness = {})
      : std::runtime_error(detail), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const std::vector<long long>& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  std::vector<long long> witness_;
};

/// Raised when a result that a theorem guarantees turns out false. Always a bug.
class InternalError : public Error {
 public:
  InternalError(std::string code, const std::string& detail, std::vector<long long> witness = {})
      : Error(std::move(code), detail, std::move(witness)) {}
};

}  // namespace qfold
