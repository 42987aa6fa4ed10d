#pragma once

#include <stdexcept>
#include <string>

namespace steinweiss {

// Failure of an adaptive numerical rule: non-convergence, a divergent
// integral detected at runtime, or kernel mass leaking past a log-grid
// boundary.  Distinct from the std::domain_error / std::range_error
// thrown on bad parameters so callers can map them to different exit
// codes.
class quadrature_error : public std::runtime_error {
 public:
  explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace steinweiss
