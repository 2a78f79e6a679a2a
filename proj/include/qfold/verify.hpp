#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Self-checks behind `qfold verify`. Each suite is a list of named checks over the
// corpus and over generated instances; nothing here reads files.
namespace qfold::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// theorems, diag3, diag4, markov, corpus
const std::vector<std::string>& suite_names();

/// "all" runs every suite. Unknown names throw Error("unknown_suite").
std::vector<CheckResult> run_suite(const std::string& suite, std::uint32_t seed = 1);

}  // namespace qfold::verify
