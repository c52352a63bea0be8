#ifndef G1RANK_ERRORS_HPP
#define G1RANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g1rank {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : Error {
  using Error::Error;
};
struct EmptyGenerators : Error {
  using Error::Error;
};
struct NotAMember : Error {
  using Error::Error;
};
struct BadSpec : Error {
  using Error::Error;
};
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};
struct DuplicateName : Error {
  using Error::Error;
};
struct LevelMismatch : Error {
  using Error::Error;
};
struct NotAUnit : Error {
  using Error::Error;
};
struct NonIntegerOmega : Error {
  using Error::Error;
};
struct OddComplexDegree : Error {
  using Error::Error;
};
struct LiftOutOfRange : Error {
  using Error::Error;
};
struct NotMonic : Error {
  using Error::Error;
};
struct NegativeMargin : Error {
  using Error::Error;
};

// Signals a broken internal invariant, i.e. a bug, not a data condition.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace g1rank

#endif
