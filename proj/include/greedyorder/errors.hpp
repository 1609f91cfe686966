#pragma once

#include <stdexcept>
#include <string>

namespace greedyorder {

// Thrown when an exhaustive-search operation is asked to exceed its size cap.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when rejection sampling runs out of attempts.
class SamplingError : public std::runtime_error {
 public:
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace greedyorder
