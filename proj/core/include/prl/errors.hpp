#pragma once

#include <stdexcept>
#include <string>

namespace prl {

/// Bad configuration input: unknown keys, invalid values, malformed files.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The gap function became non-positive somewhere on the grid. The radial
/// dynamics must resolve this through the asperity-contact load, never
/// through the geometry itself.
class ContactPenetration : public std::runtime_error {
 public:
  ContactPenetration(const std::string& msg, double min_gap)
      : std::runtime_error(msg), min_gap(min_gap) {}
  double min_gap;
};

/// A fixed-point loop exhausted max_iters without the change dropping
/// below tol. In a coupled run this is the blow-by failure mode.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& msg, long iterations, double last_change)
      : std::runtime_error(msg), iterations(iterations), last_change(last_change) {}
  long iterations;
  double last_change;
};

/// The sub-unity saturation component fed from the combustion-chamber side
/// reached the opposite boundary while p_cc > 0: the model is undefined and
/// gas can channel under the ring.
class BlowByChannel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// e00 vanished at a cell that required the saturation branch of the sweep.
class DegenerateCell : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace prl
