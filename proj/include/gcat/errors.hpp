#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gcat {

/// Matrix or morphism dimensions do not line up.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input data violates the axioms of the structure being built. Carries every
/// issue found, not just the first one.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::invalid_argument(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "validation failed";
    for (const auto& s : issues) {
      out += "; ";
      out += s;
    }
    return out;
  }

  std::vector<std::string> issues_;
};

/// Operands live in different category instances.
class InstanceError : public std::invalid_argument {
 public:
  explicit InstanceError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed JSON spec or CLI input.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A computed result contradicts a theorem that holds unconditionally in the
/// graded model. Always an implementation bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gcat
