#pragma once

#include <stdexcept>
#include <string>

#include "geopoly/exact_core.hpp"

namespace geopoly {

/// Parameter triple (alpha, beta, r) of the three-parameter Stirling family.
struct HsuShiueParams {
  Rational alpha;
  Rational beta;
  Rational r;

  bool valid() const { return !(alpha == 0 && beta == 0 && r == 0); }

  void validate() const {
    if (!valid()) throw std::invalid_argument("(alpha, beta, r) = (0, 0, 0) is not a valid parameter triple");
  }

  std::string describe() const {
    return "(" + to_string(alpha) + ", " + to_string(beta) + ", " + to_string(r) + ")";
  }

  friend bool operator==(const HsuShiueParams&, const HsuShiueParams&) = default;
};

}  // namespace geopoly
