#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "polyadj/enumeration.hpp"

namespace polyadj::cli {

/// Test seams. Production callers leave these empty.
struct Hooks {
  ExtraCheck extra_check;  // appended to every polygon checked by `verify`
};

/// Exit codes: 0 success, 1 verification violations, 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace polyadj::cli
