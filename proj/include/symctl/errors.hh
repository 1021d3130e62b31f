/*
 * errors.hh
 *
 * Exception hierarchy. Each class maps to one CLI exit code.
 */

#ifndef SYMCTL_ERRORS_HH_
#define SYMCTL_ERRORS_HH_

#include <stdexcept>
#include <string>

namespace symctl {

/* malformed input: files, configs, runs, out-of-range indices (exit code 1) */
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* non-finite state during integration */
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* an invariant that a correct implementation never violates (exit code 2) */
class SoundnessAlarm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* memory or split budget exhausted (exit code 3) */
class ResourceAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symctl

#endif  // SYMCTL_ERRORS_HH_
