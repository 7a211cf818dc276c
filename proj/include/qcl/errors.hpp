#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qcl {

// Input errors are caller mistakes (bad index, malformed data). Refusals are
// mathematically meaningful "no" answers: a formula outside its proven range,
// an element with no unique extremal exponent, and so on.
enum class ErrorKind { input, refusal };

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

  private:
    ErrorKind kind_;
    std::string code_;
};

[[noreturn]] inline void fail_input(const std::string& code, const std::string& detail) {
    throw Error(ErrorKind::input, code, detail);
}

[[noreturn]] inline void refuse(const std::string& code, const std::string& detail) {
    throw Error(ErrorKind::refusal, code, detail);
}

} // namespace qcl
