#pragma once

#include <stdexcept>
#include <string>

namespace gonality {

// Domain failure with a short machine-readable kind, e.g. "rh-violation".
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace gonality
