#ifndef FAIRVOTE_ERRORS_HPP
#define FAIRVOTE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fairvote {

// Raised when the requested object provably does not exist (for example an
// unbiased rule on a power-of-two electorate). The CLI maps this to exit 2.
class NonexistenceError : public std::runtime_error {
 public:
  explicit NonexistenceError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the ".vr" loader; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

// Internal consistency check that stays on in release builds.
inline void internal_check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(msg);
}

}  // namespace detail
}  // namespace fairvote

#endif  // FAIRVOTE_ERRORS_HPP
