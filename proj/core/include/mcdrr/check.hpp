/*
 * Copyright 2026 The mcdrr-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MCDRR_CHECK_HPP
#define MCDRR_CHECK_HPP

#include <sstream>
#include <stdexcept>
#include <string>

namespace mcdrr {

/// Thrown when an internal invariant is violated. Always indicates a logic
/// bug in the simulator, never a user error; callers are expected to abort.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

[[noreturn]] inline void check_failed(const char* expr, const char* file,
                                      int line, const std::string& msg) {
  std::ostringstream os;
  os << "internal invariant violated: " << expr << " at " << file << ":"
     << line;
  if (!msg.empty()) {
    os << " (" << msg << ")";
  }
  throw InternalError(os.str());
}

}  // namespace detail
}  // namespace mcdrr

// Always-on invariant check, independent of NDEBUG.
#define MCDRR_CHECK(cond)                                              \
  do {                                                                 \
    if (!(cond)) {                                                     \
      ::mcdrr::detail::check_failed(#cond, __FILE__, __LINE__, "");    \
    }                                                                  \
  } while (0)

#define MCDRR_CHECK_MSG(cond, msg)                                     \
  do {                                                                 \
    if (!(cond)) {                                                     \
      std::ostringstream os_;                                          \
      os_ << msg;                                                      \
      ::mcdrr::detail::check_failed(#cond, __FILE__, __LINE__,         \
                                    os_.str());                        \
    }                                                                  \
  } while (0)

#endif  // MCDRR_CHECK_HPP
