#include "prl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "prl/errors.hpp"

namespace prl {

double ring_height(double x1, const RingProfile& ring) {
  double d = x1 - 0.5;
  return ring.aspect * d * d / (2.0 * ring.R);
}

double ring_slope(double x1, const RingProfile& ring) {
  return ring.aspect * (x1 - 0.5) / ring.R;
}

double wear_height(double x2, const WearProfile& wear, double period) {
  if (wear.delta == 0.0) return 0.0;
  double d = x2 - wear.center;
  if (period > 0.0) d -= period * std::round(d / period);
  return wear.delta * std::exp(-d * d / (wear.c * wear.c));
}

double texture_depression(double x1, double x2, const DimpleTexture& tex) {
  if (tex.depth <= 0.0 || tex.centers_x1.empty()) return 0.0;
  // Nearest row along x1; rows are far enough apart that dimples from
  // different rows never overlap.
  double cx = tex.centers_x1.front();
  double best = std::abs(x1 - cx);
  for (double c : tex.centers_x1) {
    double d = std::abs(x1 - c);
    if (d < best) {
      best = d;
      cx = c;
    }
  }
  double cy = (std::round(x2 / tex.pitch_x2 - 0.5) + 0.5) * tex.pitch_x2;
  double rx = 2.0 * (x1 - cx) / tex.len_x1;
  double ry = 2.0 * (x2 - cy) / tex.len_x2;
  double r2 = rx * rx + ry * ry;
  return r2 < 1.0 ? tex.depth * (1.0 - r2) : 0.0;
}

double GapModel::static_height(double x1, double x2, double x2_period) const {
  double h = ring_height(x1, ring) + wear_height(x2, wear, x2_period);
  if (texture) h -= texture_depression(x1, x2, *texture);
  return h;
}

Field2D static_gap_field(const Grid& grid, const GapModel& model) {
  Field2D out(grid.nx1, grid.nx2);
  double period = grid.periodic_x2 ? grid.length_x2 : 0.0;
  for (int i = -1; i <= grid.nx1; ++i) {
    double x1 = i < 0 ? 0.0 : (i >= grid.nx1 ? grid.length_x1 : grid.x1_center(i));
    double* r = out.row(i);
    for (int j = 0; j < grid.nx2; ++j) {
      r[j] = model.static_height(x1, grid.x2_center(j), period);
    }
  }
  return out;
}

Field2D gap_field(const Grid& grid, const GapModel& model, double Z) {
  Field2D statics = static_gap_field(grid, model);
  Field2D h(grid.nx1, grid.nx2);
  double min_gap = shift_gap_field(statics, Z, h);
  if (!(min_gap > 0.0)) {
    throw ContactPenetration("gap function is not strictly positive", min_gap);
  }
  return h;
}

double shift_gap_field(const Field2D& static_part, double Z, Field2D& out) {
  const double* s = static_part.data();
  double* o = out.data();
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < static_part.size(); ++k) {
    o[k] = Z + s[k];
    min_gap = std::min(min_gap, o[k]);
  }
  return min_gap;
}

}  // namespace prl
