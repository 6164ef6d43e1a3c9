#pragma once

#include <stdexcept>
#include <string>

namespace benchrank {

// Exit-code contract: 0 success, 2 I/O, 3 format/validation, 4 statistical
// degeneracy. Statistical conclusions (significant / not significant) are
// report content and never encoded in exit codes.
enum class ErrorKind {
    Io = 2,
    Format = 3,
    Degenerate = 4,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

  private:
    ErrorKind kind_;
};

} // namespace benchrank
