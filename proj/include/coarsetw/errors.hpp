#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace coarsetw {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A validator or claim check failed. Carries a JSON locus describing which
// check failed and on which witnesses. The CLI maps this to exit code 1.
class CheckFailure : public std::runtime_error {
public:
  CheckFailure(std::string locus_json, const std::string& message)
      : std::runtime_error(message), locus_(std::move(locus_json)) {}

  const std::string& locus() const { return locus_; }

private:
  std::string locus_;
};

}  // namespace coarsetw
