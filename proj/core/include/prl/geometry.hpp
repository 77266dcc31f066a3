#pragma once

#include <optional>
#include <vector>

#include "prl/grid.hpp"

namespace prl {

/// Parabolic crown profile along x1, zero at the face midpoint x1 = 0.5.
/// aspect is the L/H ratio that turns the in-plane parabola into gap units.
struct RingProfile {
  double R = 64.0;        // crown radius parameter (in-plane units)
  double aspect = 1000.0; // L/H

  /// Profile height at the face edge, Delta_h = ring_height(1).
  double edge_height() const { return aspect * 0.25 / (2.0 * R); }
};

double ring_height(double x1, const RingProfile& ring);
/// d h_ring / d x1 (dimensionless), analytic.
double ring_slope(double x1, const RingProfile& ring);

/// Gaussian wear bump along the circumference, peak `delta` at `center`.
/// Evaluated against the nearest periodic image when period > 0.
struct WearProfile {
  double delta = 0.0;   // amplitude, gap units
  double c = 20.5;      // Gaussian width, in-plane units
  double center = 0.0;  // circumferential position of the peak
};

double wear_height(double x2, const WearProfile& wear, double period);

/// Elliptic dimples with a paraboloid cross-section, repeating along x2
/// with the given pitch (centers at (k + 1/2) * pitch_x2) and placed at
/// fixed x1 row positions. The depression is added to the gap.
struct DimpleTexture {
  double depth = 1.0;     // gap units
  double len_x1 = 0.08;   // footprint along x1
  double len_x2 = 0.06;   // footprint along x2
  double pitch_x2 = 0.1;  // center spacing along x2
  std::vector<double> centers_x1 = {0.2, 0.8};
};

double texture_depression(double x1, double x2, const DimpleTexture& tex);

/// Full gap composition h(x1,x2,t) = Z(t) + ring + wear - texture.
struct GapModel {
  RingProfile ring;
  WearProfile wear;
  std::optional<DimpleTexture> texture;
  double h_feed = 1.5;  // film thickness fed at the x1 boundaries, gap units

  /// Static part of the gap (everything but Z) at a point. x2_period is the
  /// domain circumference used to wrap the wear profile.
  double static_height(double x1, double x2, double x2_period) const;
};

/// Static gap sampled at cell centers, ghost columns evaluated at the
/// physical boundary coordinates x1 = 0 and x1 = length_x1.
Field2D static_gap_field(const Grid& grid, const GapModel& model);

/// h = Z + static part; throws ContactPenetration if the gap is not
/// strictly positive everywhere (ghosts included).
Field2D gap_field(const Grid& grid, const GapModel& model, double Z);

/// In-place variant used by the coupled stepper: writes Z + static into
/// `out` and returns the minimum value without throwing.
double shift_gap_field(const Field2D& static_part, double Z, Field2D& out);

}  // namespace prl
