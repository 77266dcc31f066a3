#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "prl/grid.hpp"

namespace prl {

/// Discrete pressure/saturation pair. Both carry the x1 ghost columns that
/// hold the Dirichlet boundary data.
struct FieldPair {
  Field2D p;
  Field2D theta;

  FieldPair() = default;
  FieldPair(int nx1, int nx2, double p0 = 0.0, double theta0 = 1.0)
      : p(nx1, nx2, p0), theta(nx1, nx2, theta0) {}
};

struct SolverSettings {
  double tol = 1e-8;             // L1 change threshold of the fixed point
  long max_iters = 100000;       // iteration cap; hitting it means failure
  bool epsilon_extension = true; // extend T one cell into the full film
  double theta_full_threshold = 1.0;  // theta < this  <=>  cavitated cell
};

enum class CellRegion : std::uint8_t { FullFilm = 0, CavityPlain = 1, CavityRight = 2 };

/// Partition of the cells into full film, plain cavity pockets, and the
/// cavity component connected to the combustion-chamber boundary.
struct RegionLabel {
  int nx1 = 0, nx2 = 0;
  std::vector<CellRegion> mask;  // nx1*nx2, i-major
  bool touches_left = false;

  CellRegion at(int i, int j) const { return mask[std::size_t(i) * nx2 + j]; }
};

/// Per-cell stencil data of the discrete system
///   a00 p + e00 theta = C(p, theta).
/// Face factors s are the mean cubed gaps; only the gap cubes are stored
/// and faces are assembled on the fly. The Couette part is upwinded:
/// upstream_offset is -1 when u >= 0 (transport from i-1 into i) and +1
/// otherwise.
struct StencilCoefficients {
  int nx1 = 0, nx2 = 0;
  double dx1 = 0, dx2 = 0, dt = 0, u = 0, q2 = 0;
  int upstream_offset = -1;

  std::vector<double> sx;    // (nx1+1)*nx2: face between cells (i-1,j),(i,j)
  std::vector<double> sy;    // nx1*nx2: face between cells (i,j-1),(i,j), periodic
  std::vector<double> e00;   // nx1*nx2
  std::vector<double> e_up;  // nx1*nx2, coefficient of the upstream theta (<= 0)
  std::vector<double> f;     // nx1*nx2, storage term from the previous step

  std::size_t cell(int i, int j) const { return std::size_t(i) * nx2 + j; }

  double s_x1_minus(int i, int j) const { return sx[std::size_t(i) * nx2 + j]; }
  double s_x1_plus(int i, int j) const { return sx[std::size_t(i + 1) * nx2 + j]; }
  double s_x2_minus(int i, int j) const { return sy[cell(i, j)]; }
  double s_x2_plus(int i, int j) const {
    int jp = j + 1 == nx2 ? 0 : j + 1;
    return sy[cell(i, jp)];
  }

  double a00(int i, int j) const {
    return s_x1_minus(i, j) + s_x1_plus(i, j) +
           q2 * (s_x2_minus(i, j) + s_x2_plus(i, j));
  }
  double a_plus0(int i, int j) const { return -s_x1_plus(i, j); }
  double a_minus0(int i, int j) const { return -s_x1_minus(i, j); }
  double a_0plus(int i, int j) const { return -q2 * s_x2_plus(i, j); }
  double a_0minus(int i, int j) const { return -q2 * s_x2_minus(i, j); }
};

/// Assemble the stencil for one implicit step: h_now/h_prev are the gap at
/// the new and old time levels (ghosts included), theta_prev the converged
/// previous saturation. Throws on non-positive gap or dt <= 0.
StencilCoefficients assemble_coefficients(const Field2D& h_now, const Field2D& h_prev,
                                          const Field2D& theta_prev, double u, double dt,
                                          const Grid& grid);

/// Split variants used by the steppers: the storage part f only changes
/// once per time step while the gap-dependent part changes with every ring
/// position update.
void assemble_storage_term(const Field2D& h_prev, const Field2D& theta_prev, double dt,
                           const Grid& grid, std::vector<double>& f);
void assemble_gap_terms(const Field2D& h_now, double u, double dt, const Grid& grid,
                        StencilCoefficients& coeffs);

/// Set the ghost columns: p = 0 at x1 = 0, p = p_cc at x1 = length_x1, and
/// theta = min(1, h_feed/h) on both sides.
void apply_boundary_conditions(FieldPair& fields, const Field2D& h_now, double h_feed,
                               double p_cc);

/// Flood fill from the combustion-chamber boundary over the cavitated mask
/// (4-neighbor, periodic in x2). Scratch buffer variant avoids allocation.
RegionLabel flood_rightmost_component(const Field2D& theta, const SolverSettings& settings,
                                      const Grid& grid);
void flood_rightmost_component(const Field2D& theta, const SolverSettings& settings,
                               const Grid& grid, RegionLabel& out, std::vector<std::int32_t>& queue);

/// Discrete operator T: p_cc on the combustion-side cavity component and,
/// with the one-cell extension on, on full-film cells adjacent to it; the
/// extension realizes the zero normal pressure derivative at rupture.
std::vector<double> discrete_T(const RegionLabel& labels, double p_cc,
                               const SolverSettings& settings);
void discrete_T(const RegionLabel& labels, double p_cc, const SolverSettings& settings,
                std::vector<double>& T);

struct SweepStats {
  double change_p = 0.0;
  double change_theta = 0.0;
  double sum_p = 0.0;  // interior sum of p after the sweep
  double min_cavity_theta_preclamp = std::numeric_limits<double>::infinity();
  bool cavity_mask_changed = false;
};

/// One in-place lexicographic Gauss-Seidel pass of the fixed-point operator.
/// labels, when given, feed the pre-clamp saturation instrumentation.
SweepStats gauss_seidel_sweep(FieldPair& fields, const StencilCoefficients& coeffs,
                              const std::vector<double>& T,
                              const RegionLabel* labels = nullptr,
                              double theta_full_threshold = 1.0);

struct TimestepResult {
  long iterations = 0;
  RegionLabel labels;  // consistent with the returned theta
  double final_change = 0.0;
  double min_cavity_theta_preclamp = std::numeric_limits<double>::infinity();
};

/// Solve one implicit step of the extended model at fixed gap: iterate
/// {flood, T, sweep} until the combined L1 change drops below tol. The
/// ghost columns of `fields` must already hold the boundary data. Throws
/// NonConvergence and BlowByChannel.
TimestepResult solve_timestep_inplace(FieldPair& fields, const Field2D& h_now,
                                      const Field2D& h_prev, double u, double p_cc,
                                      double dt, const SolverSettings& settings,
                                      const Grid& grid);

/// Value-returning convenience wrapper around solve_timestep_inplace; applies
/// the boundary conditions itself from h_feed.
std::pair<FieldPair, long> solve_timestep(const FieldPair& prev, const Field2D& h_now,
                                          const Field2D& h_prev, double u, double p_cc,
                                          double dt, double h_feed,
                                          const SolverSettings& settings, const Grid& grid);

/// Stationary Reynolds equation with the non-negativity projection applied
/// each sweep (no mass conservation in the cavity). Dirichlet p = 0 at
/// x1 = 0 and p = p_cc at x1 = length_x1. Returns the converged pressure.
Field2D solve_reynolds_cavitation(const Field2D& h_now, double u, double p_cc,
                                  const Grid& grid, const SolverSettings& settings);

/// Single projected Gauss-Seidel pass for the Reynolds model; returns the
/// L1 change (used by the coupled Reynolds stepper).
double reynolds_sweep(Field2D& p, const StencilCoefficients& coeffs, const Field2D& h_now);

/// Max complementarity residual |(p - T)(1 - theta)| over the cells.
double complementarity_residual(const FieldPair& fields, const std::vector<double>& T,
                                int nx1, int nx2);

}  // namespace prl
