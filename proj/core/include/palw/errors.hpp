#pragma once

#include <stdexcept>
#include <string>

namespace palw {

// A documented precondition of an operation does not hold for the input
// (nonzero total sum, grid sums, non-palindromic element, ...).
class HypothesisError : public std::domain_error {
 public:
  explicit HypothesisError(const std::string& what) : std::domain_error(what) {}
};

// A constructed object failed its own re-verification, or a certificate did
// not reproduce.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace palw
