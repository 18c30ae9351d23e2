#pragma once

#include <stdexcept>
#include <string>

namespace plab {

/// Domain-level failure: bad input, unmet precondition, malformed data.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A face labeling produced subsets of two different sizes.
struct SizeMismatchError : DomainError {
  int size_a, size_b;
  SizeMismatchError(int a, int b)
      : DomainError("face labels of unequal size: " + std::to_string(a) + " vs " +
                    std::to_string(b)),
        size_a(a), size_b(b) {}
};

/// A check ran and found a counterexample.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace plab
