#pragma once

#include <limits>
#include <vector>

#include "prl/cavitation.hpp"
#include "prl/grid.hpp"

namespace prl {

/// Per-step output row of a coupled simulation.
struct TimeSeriesRecord {
  double t = 0.0;
  double Z = 0.0;
  double V = 0.0;
  double W_h = 0.0;
  double W_con = 0.0;
  double W_cc = 0.0;
  double friction_si = 0.0;  // N/m
  double mft = 0.0;
  double blow_by_distance = std::numeric_limits<double>::infinity();
  long iterations = 0;
  bool converged = true;
};

struct BlowByConfig {
  double epsilon_b = 0.02;  // relative threshold on the x1 extent
  int N_b = 4;              // cell-count threshold
};

/// Grid minimum of the gap.
double minimum_film_thickness(const Field2D& h);

/// Relative defect of the global discrete mass balance of one step:
/// |influx - outflux - storage| over the largest of the three, with the
/// boundary fluxes evaluated by the same face formulas the solver uses.
double mass_balance_residual(const FieldPair& prev, const FieldPair& curr,
                             const Field2D& h_prev, const Field2D& h_now, double u,
                             double dt, const Grid& grid, double eps = 1e-14);

/// Minimum Euclidean distance between cell centers of the combustion-side
/// cavity component and the region where p < p_cc - tol_p, honoring the x2
/// periodicity. Returns +infinity when either set is empty.
double blow_by_distance(const RegionLabel& labels, const Field2D& p, double p_cc,
                        const Grid& grid, double tol_p);

/// Blow-by inception: fires iff p_cc > 0 and the separating full-film band
/// is thinner than max(epsilon_b * L, N_b * dx1).
bool blow_by_criterion(double d, const BlowByConfig& cfg, const Grid& grid, double p_cc);

/// Sampled scalar series with strictly increasing times.
struct TimeSeries {
  std::vector<double> t;
  std::vector<double> v;

  void push(double time, double value) {
    t.push_back(time);
    v.push_back(value);
  }
  bool empty() const { return t.empty(); }

  /// Piecewise-linear evaluation, clamped to the end values outside range.
  double interpolate(double time) const;
};

/// ||a - ref||_1 / ||ref||_1 with the L1 norm taken as the time integral of
/// absolute values over the reference series' span; `a` is resampled onto
/// the reference grid by linear interpolation. Throws on a zero-norm
/// reference.
double friction_relative_difference(const TimeSeries& a, const TimeSeries& ref);

/// Trapezoid time average of the series over [t_start, t_end].
double time_average(const TimeSeries& s, double t_start, double t_end);

/// Optional 1D diagnostic of the analytic inception conditions at the edge
/// of the combustion-side cavity: concavity of p at a rupture point,
/// non-negative slope at a reformation point. Index is the first cavity
/// cell of the 1D profile.
struct EdgeGradients1D {
  double slope = 0.0;      // dp/dx1 one cell inside the film
  double curvature = 0.0;  // d2p/dx1^2 one cell inside the film
};
EdgeGradients1D edge_gradients_1d(const Field2D& p, int cavity_edge_i, const Grid& grid);

}  // namespace prl
