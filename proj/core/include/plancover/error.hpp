#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plancover {

// Error taxonomy shared by the library and the CLI exit-code contract:
// malformed input -> 2, budget exhaustion -> 3, everything else -> 1.
enum class ErrorCode {
  kMalformed,     // bad ids, inconsistent structure, unparsable input
  kPrecondition,  // operation called outside its contract
  kBudget,        // enumeration would exceed the configured budget
  kInternal,      // invariant the theory guarantees failed; a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string message, std::uint64_t estimate)
      : Error(ErrorCode::kBudget, std::move(message)), estimate_(estimate) {}
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

// Hard cap on enumeration sizes.  Exceeding a budget always raises
// BudgetExceeded with the offending estimate; nothing is silently truncated.
struct Budget {
  std::uint64_t max_items = 4'000'000;

  void charge(std::uint64_t items, const char* what) const {
    if (items > max_items) {
      throw BudgetExceeded(std::string(what) + ": " + std::to_string(items) +
                               " items exceeds budget " + std::to_string(max_items),
                           items);
    }
  }
};

}  // namespace plancover
