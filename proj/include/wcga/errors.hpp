#pragma once

#include <stdexcept>
#include <string>

namespace wcga {

// Norming functionals are undefined at the origin.
struct ZeroVectorError : std::invalid_argument {
  ZeroVectorError() : std::invalid_argument("norming functional requested for the zero vector") {}
};

struct ParamMismatchError : std::invalid_argument {
  explicit ParamMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct ParamError : std::invalid_argument {
  explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

// Exact cell integration refuses to enumerate more than the cell budget.
struct GridBudgetExceededError : std::runtime_error {
  explicit GridBudgetExceededError(std::size_t cells)
      : std::runtime_error("refinement grid exceeds cell budget (" + std::to_string(cells) + " cells)") {}
};

// Combinatorial best-N-term search is capped.
struct SupportTooLargeError : std::runtime_error {
  explicit SupportTooLargeError(std::size_t support)
      : std::runtime_error("support too large for exhaustive search (" + std::to_string(support) + " entries)") {}
};

}  // namespace wcga
