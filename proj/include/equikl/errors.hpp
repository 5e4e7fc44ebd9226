#pragma once
/* Error hierarchy shared by the whole library.
 *
 * parse_error        -- malformed textual/JSON input           (CLI exit code 1)
 * precondition_error -- mathematically invalid request         (CLI exit code 2)
 * internal_error     -- a library invariant failed to hold     (CLI exit code 3)
 */

#include <stdexcept>
#include <string>

namespace equikl {

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw precondition_error(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw internal_error(what);
}

}  // namespace equikl
