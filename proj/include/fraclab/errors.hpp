#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

// Errors carry a short machine-readable code next to the human message.
// Validation errors map to CLI exit code 1, numerical failures to 2.
class Error : public std::runtime_error {
 public:
  enum class Kind { validation, numerical };

  Error(Kind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  Kind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  Kind kind_;
  std::string code_;
};

[[noreturn]] inline void throw_validation(const std::string& code, const std::string& msg) {
  throw Error(Error::Kind::validation, code, msg);
}

[[noreturn]] inline void throw_numerical(const std::string& code, const std::string& msg) {
  throw Error(Error::Kind::numerical, code, msg);
}

inline void require(bool ok, const std::string& code, const std::string& msg) {
  if (!ok) throw_validation(code, msg);
}

}  // namespace fraclab
