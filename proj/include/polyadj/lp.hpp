#pragma once

// Small dense exact simplex: minimize c.x subject to A x = b, x >= 0, with
// b >= 0. Two phases, Bland's rule, rational arithmetic.

#include <stdexcept>
#include <vector>

#include "polyadj/integer.hpp"

namespace polyadj::lp {

struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Solution {
  Rational value;
  std::vector<Rational> x;
};

/// a is row-major with a.size() == b.size() rows of c.size() entries.
Solution minimize(const std::vector<Rational>& c, const std::vector<std::vector<Rational>>& a,
                  const std::vector<Rational>& b);

}  // namespace polyadj::lp
