// Error type shared by all linkinv modules.
//
// Every failure carries a stable machine-readable code (e.g. "loops-forbidden",
// "singular-intersection-form") that the CLI maps onto its exit-code contract
// and that tests assert on.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace linkinv {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace linkinv
