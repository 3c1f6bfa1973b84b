#ifndef VALGCD_ERRORS_HPP
#define VALGCD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace valgcd {

// Exit codes used by the CLI. Library code throws the exception types
// below; the CLI maps them to these codes.
enum exit_code : int {
    exit_ok = 0,
    exit_parse = 64,
    exit_precondition = 65,
    exit_budget = 69,
    exit_verification = 70,
};

/// Input text could not be parsed.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit parse_error(const std::string& msg)
        : std::runtime_error(msg), position_(0) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// A documented precondition of an operation does not hold.
class precondition_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A configured search or enumeration budget was exhausted. Carries enough
/// context to report what was exceeded; never stands in for a wrong answer.
class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An internal self-check failed. Certificates re-verify themselves by
/// construction, so this always indicates an implementation bug.
class verification_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace valgcd

#endif
