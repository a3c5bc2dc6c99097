#ifndef HYSPEC_ERRORS_HPP
#define HYSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyspec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadSpec : Error { using Error::Error; };
struct AxiomViolation : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct RingMismatch : Error { using Error::Error; };
struct NotSemiprime : Error { using Error::Error; };
struct NotASubring : Error { using Error::Error; };
struct SNotSubsetY : Error { using Error::Error; };
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};
struct UnknownCheckId : Error { using Error::Error; };
struct CorpusError : Error { using Error::Error; };

}  // namespace hyspec

#endif
