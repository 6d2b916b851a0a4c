/**
 * @file errors.hpp
 * @brief Exception types shared by every module.
 *
 * The CLI maps each family onto a distinct exit code, so library code
 * throws the most specific type that applies.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace langdual {

/// Shape mismatch between operands (ranks, matrix dimensions, indices).
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact division left a nonzero remainder.
class NotDivisibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input data violates the axioms of the object it claims to describe.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);
    ValidationError(const std::string& what, std::vector<std::string> violations);

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// A configured safety cap (Weyl order, coweight height, tree depth) was hit.
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation at a pole or outside the region where a value is defined.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace langdual
