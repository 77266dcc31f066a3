#pragma once

#include <string>

namespace prl {

/// 1 atm in Pa. All pressures in this code are gauge: dimensionless 0
/// corresponds to ambient.
inline constexpr double kAtmPa = 101325.0;

enum class Quantity {
  LengthPlane,    // x1, x2                      scale L
  LengthGap,      // h, h_feed, Z, delta         scale H
  Time,           //                             scale L/U
  Speed,          // u                           scale U
  Pressure,       // p, p_cc, p_con              scale 6 mu U L / H^2
  ForcePerWidth,  // W^h, W^a, W^con, W^cc       scale 6 mu U L^2 / H^2
  MassPerWidth,   // m                           scale 6 mu L^4 / (H^3 U)
};

const char* to_string(Quantity kind);

/// The four fundamental scales; everything else in the model is expressed
/// in the dimensionless units they induce.
struct FundamentalScales {
  double H = 1e-6;   // gap thickness, m
  double L = 1e-3;   // in-plane length, m
  double mu = 4e-3;  // lubricant dynamic viscosity, Pa s
  double U = 10.0;   // reference sliding speed, m/s

  double time_scale() const { return L / U; }
  double pressure_scale() const { return 6.0 * mu * U * L / (H * H); }
  double force_per_width_scale() const { return 6.0 * mu * U * L * L / (H * H); }
  double mass_per_width_scale() const { return 6.0 * mu * L * L * L * L / (H * H * H * U); }

  /// Throws ConfigError if any of the four scales is not strictly positive.
  void validate() const;

  /// SI scale for a quantity kind; throws ConfigError on an unknown kind.
  double scale_for(Quantity kind) const;

  double to_dimensionless(double value_si, Quantity kind) const {
    return value_si / scale_for(kind);
  }
  double from_dimensionless(double value, Quantity kind) const {
    return value * scale_for(kind);
  }

  /// Gauge pressure in atm -> dimensionless.
  double atm_to_dimensionless(double atm) const {
    return atm * kAtmPa / pressure_scale();
  }
  double dimensionless_to_atm(double p) const {
    return p * pressure_scale() / kAtmPa;
  }
};

}  // namespace prl
