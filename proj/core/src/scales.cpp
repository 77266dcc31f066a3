#include "prl/scales.hpp"

#include "prl/errors.hpp"

namespace prl {

const char* to_string(Quantity kind) {
  switch (kind) {
    case Quantity::LengthPlane: return "length_plane";
    case Quantity::LengthGap: return "length_gap";
    case Quantity::Time: return "time";
    case Quantity::Speed: return "speed";
    case Quantity::Pressure: return "pressure";
    case Quantity::ForcePerWidth: return "force_per_width";
    case Quantity::MassPerWidth: return "mass_per_width";
  }
  return "unknown";
}

void FundamentalScales::validate() const {
  if (!(H > 0.0 && L > 0.0 && mu > 0.0 && U > 0.0)) {
    throw ConfigError("fundamental scales must all be strictly positive");
  }
}

double FundamentalScales::scale_for(Quantity kind) const {
  switch (kind) {
    case Quantity::LengthPlane: return L;
    case Quantity::LengthGap: return H;
    case Quantity::Time: return time_scale();
    case Quantity::Speed: return U;
    case Quantity::Pressure: return pressure_scale();
    case Quantity::ForcePerWidth: return force_per_width_scale();
    case Quantity::MassPerWidth: return mass_per_width_scale();
  }
  throw ConfigError("unknown quantity kind");
}

}  // namespace prl
