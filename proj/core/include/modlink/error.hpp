#ifndef MODLINK_ERROR_HPP
#define MODLINK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace modlink {

// Thrown for structural misuse (ring mismatch, bad arity, parse failures)
// and for domain errors named in the operation contracts.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace modlink

#endif
