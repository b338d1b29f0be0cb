#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace parcoh {

// CLI exit codes: 2 = parse, 3 = validation, 4 = budget.
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_validation_error = 3;
inline constexpr int exit_budget_error = 4;

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Carries a short machine-readable code ("NotAssociative", "ZeroIdeal", ...)
// in addition to the human-readable message.
struct validation_error : std::runtime_error {
  std::string code;
  validation_error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace parcoh
