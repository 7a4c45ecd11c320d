#pragma once

#include <string>
#include <utility>

#include "osc/errors.hpp"

namespace testsupport {

// Runs f and reports the code of the osc::Error it throws, or a marker when
// nothing is thrown. Keeps error-contract checks to a single CHECK line.
template <class F>
std::string errorCode(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const osc::Error& e) {
    return e.code();
  }
  return "(no error)";
}

}  // namespace testsupport
