#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace csnorm {

// Malformed or unsupported user input: bad slope text, unknown model names,
// out-of-range family parameters. The CLI maps this to exit status 1.
class InputError : public std::runtime_error {
 public:
  InputError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Data that parses fine but contradicts a model invariant or a verified
// identity. The CLI maps this to exit status 2.
class ModelError : public std::runtime_error {
 public:
  ModelError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Carries every failed invariant of a model, not just the first.
class ValidationError : public ModelError {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : ModelError("validation", join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& violations) {
    std::string out = "invalid model:";
    for (const auto& v : violations) {
      out += "\n  - " + v;
    }
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace csnorm
