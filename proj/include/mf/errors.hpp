#pragma once

#include <stdexcept>
#include <string>

namespace mf {

/// Raised when a weight matrix fails to pick a unique lowest-weight term of a
/// Plucker determinant.  Must never fire for the block diagonal weights; if it
/// does, the weight construction is broken.
struct NonUniqueMinimum : std::runtime_error {
  explicit NonUniqueMinimum(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the brute-force kernels when an instance exceeds the supported
/// desk-scale bounds.
struct InstanceTooLarge : std::runtime_error {
  explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a monomial claimed to be standard is divisible by an initial
/// monomial of the generator set.
struct NotStandard : std::invalid_argument {
  explicit NotStandard(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace mf
