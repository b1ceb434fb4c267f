#pragma once

#include <stdexcept>
#include <string>

namespace dimerwind {

// Thrown when a computation cannot meet its accuracy contract at the
// configured precision. Callers may retry with more digits.
class PrecisionFailure : public std::runtime_error {
 public:
  explicit PrecisionFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dimerwind
