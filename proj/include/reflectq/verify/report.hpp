#pragma once

#include <string>
#include <utility>
#include <vector>

namespace reflectq::verify {

/// Largest number of failures recorded in one report; the count in `checked`
/// still covers every element.
inline constexpr std::size_t kMaxRecordedFailures = 50;

struct Failure {
  std::string index;       // human-readable index tuple
  std::string difference;  // canonical form of lhs - rhs (or a description)
};

/// Outcome of one equation check. Passing means no failures.
struct VerifyReport {
  std::string equation;
  std::vector<std::pair<std::string, std::string>> params;
  std::size_t checked = 0;
  std::vector<Failure> failures;

  bool pass() const { return failures.empty(); }
  void merge(const VerifyReport& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

}  // namespace reflectq::verify
