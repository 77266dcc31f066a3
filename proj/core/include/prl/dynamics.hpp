#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "prl/cavitation.hpp"
#include "prl/diagnostics.hpp"
#include "prl/geometry.hpp"
#include "prl/grid.hpp"
#include "prl/scales.hpp"

namespace prl {

/// Radial position and velocity of the ring (gap units / gap units per
/// dimensionless time).
struct RingState {
  double Z = 1.0;
  double V = 0.0;
};

struct DynamicsConfig {
  double m = 1.25e-5;          // ring mass per unit width, dimensionless
  double W_applied = -1.666e-4;  // applied load per unit width, signed
  double gamma = 0.9;          // back-pressure factor
  double L_ring = 1.0;         // ring length along x1
  double B_r = 41.0;           // bore radius
};

/// Greenwood-Tripp asperity contact with the F_{5/2} integral replaced by
/// the usual A (B - lambda)^C curve fit.
struct ContactModel {
  double eta_beta_sigma = 0.04;  // composite roughness product
  double sigma_over_beta = 1e-3;
  double E_prime = 2e11;  // composite elastic modulus, Pa
  double sigma = 0.2;     // asperity-height std, gap units
  double mu_c = 0.11;     // boundary friction coefficient
  double theta_s = 0.95;  // minimum oil fraction transmitting shear
  double fit_A = 4.4086e-5;
  double fit_B = 4.0;
  double fit_C = 6.804;

  /// pi (16 sqrt(2)/15) (eta beta sigma)^2 sqrt(sigma/beta) E', in Pa.
  double prefactor_si() const;
  /// F_{5/2}(lambda) curve fit; identically zero for lambda >= fit_B.
  double f52(double lambda) const;
};

/// Asperity contact pressure at gap h, dimensionless.
double contact_pressure(double h, const ContactModel& contact,
                        const FundamentalScales& scales);
/// Same, in Pa (used by the friction integrand).
double contact_pressure_si(double h, const ContactModel& contact);

/// Midpoint quadrature (1/B_r) dx1 dx2 sum p over the interior cells.
double hydrodynamic_load(const Field2D& p, const Grid& grid, double B_r);
double contact_load(const Field2D& h, const ContactModel& contact, const Grid& grid,
                    double B_r, const FundamentalScales& scales);
/// W_cc = -gamma p_cc L_ring: the chamber pressure pressing the ring on.
double back_pressure_load(double p_cc, const DynamicsConfig& cfg);

/// Position predictor Z <- Z + dt V + dt^2/(2m) W of the coupled loop.
RingState advance_ring(const RingState& state, double W_total, double dt,
                       const DynamicsConfig& cfg);
/// Velocity update V <- V + (dt/m) W applied once the loop has converged.
RingState finalize_velocity(const RingState& state, double W_total, double dt,
                            const DynamicsConfig& cfg);

enum class CouetteFrictionMode {
  SaturationWeighted,  // mu u theta / h where theta > theta_s (mass-conserving models)
  FullFilmOnly,        // mu u / h where p > 0 (Reynolds comparison model)
};

/// Friction force per unit width on the ring, in N/m. Fields are
/// redimensionalized first; dp/dx1 uses central differences (one-sided at
/// the x1 ends) and the ring-profile slope is analytic.
double friction_force(const FieldPair& fields, const Field2D& h, double u,
                      const ContactModel& contact, const RingProfile& ring,
                      const Grid& grid, double B_r, const FundamentalScales& scales,
                      CouetteFrictionMode mode = CouetteFrictionMode::SaturationWeighted);

/// A_cc exp(-(t-t0)^2/width^2).
double ccp_gaussian_pulse(double t, double A_cc, double t0, double width);

/// Liner speed and chamber pressure over one cycle.
struct CycleProfile {
  std::function<double(double)> u_of_t;
  std::function<double(double)> pcc_of_t;
  double duration = 600.0;
};

/// u = sin(2 pi t / (duration/2)), CCP = Gaussian pulse at the firing
/// top-dead-center t0 = duration/2.
struct FourStrokeParams {
  double duration = 600.0;
  double A_cc = 0.0;  // dimensionless pulse amplitude
  double pulse_width = 50.0;
};
std::pair<double, double> four_stroke_profile(double t, const FourStrokeParams& params);
CycleProfile make_four_stroke_profile(const FourStrokeParams& params);
CycleProfile make_constant_speed_profile(double u, double A_cc, double t0, double width,
                                         double duration);

enum class CavitationModelKind { Extended, ElrodAdams, Reynolds };

struct SimulationSetup {
  Grid grid;
  GapModel gap;
  DynamicsConfig dynamics;
  ContactModel contact;
  SolverSettings solver;
  FundamentalScales scales;
  CavitationModelKind model = CavitationModelKind::Extended;
  double Z0 = 1.5;
  double V0 = 0.0;
  bool audit = false;  // track invariant residuals every step
};

/// Running extrema of the solution invariants, accumulated over a run when
/// auditing is on.
struct StepAudit {
  double mass_residual_max = 0.0;
  double complementarity_max = 0.0;
  double theta_min = 1.0;
  double theta_max = 0.0;
  double p_minus_T_min = 0.0;
  double preclamp_theta_min = std::numeric_limits<double>::infinity();
  long steps = 0;
};

/// One coupled hydrodynamics + ring-dynamics simulation: each step iterates
/// {loads -> Z predictor -> gap rebuild -> flooding/T -> Gauss-Seidel sweep}
/// to a combined fixed point, then finalizes the ring velocity. Instances
/// are single-threaded and independent.
class CoupledStepper {
 public:
  explicit CoupledStepper(const SimulationSetup& setup);

  /// Advance to t_new over dt with the (implicit) inputs evaluated at t_new.
  /// p_cc_hydro enters the cavitation boundary condition and operator T;
  /// p_cc_back enters the back-pressure load. The two differ only for the
  /// Elrod-Adams comparison model, which zeroes the hydrodynamic one.
  /// Throws NonConvergence, BlowByChannel, ContactPenetration.
  TimeSeriesRecord step(double t_new, double dt, double u, double p_cc_hydro,
                        double p_cc_back);

  const FieldPair& fields() const { return fields_; }
  const Field2D& gap_now() const { return h_now_; }
  const RegionLabel& labels() const { return labels_; }
  RingState state() const { return state_; }
  const StepAudit& audit() const { return audit_; }
  const Grid& grid() const { return setup_.grid; }
  const SimulationSetup& setup() const { return setup_; }
  /// Periodic replication factor (2 pi B_r / length_x2) applied to the load
  /// and friction quadratures when the domain is a texture unit strip.
  double replication() const { return replication_; }

  /// Replace the initial fields (tests and restarts).
  void set_fields(const FieldPair& fields);

 private:
  TimeSeriesRecord step_mass_conserving(double t_new, double dt, double u,
                                        double p_cc_hydro, double p_cc_back);
  TimeSeriesRecord step_reynolds(double t_new, double dt, double u, double p_cc_hydro,
                                 double p_cc_back);
  double contact_load_at_current_gap();
  void rebuild_gap(double Z, double u, double dt, double p_cc_hydro);

  SimulationSetup setup_;
  double replication_ = 1.0;
  double load_quad_ = 0.0;  // (1/B_r) dx1 dx2 * replication
  RingState state_;
  FieldPair fields_;
  Field2D static_gap_, h_now_, h_prev_;
  FieldPair prev_fields_;  // previous step, for the mass-balance audit
  StencilCoefficients coeffs_;
  RegionLabel labels_;
  std::vector<double> T_;
  std::vector<std::int32_t> flood_queue_;
  double sum_p_ = 0.0;
  double Z_built_ = std::numeric_limits<double>::quiet_NaN();
  double W_con_cached_ = 0.0;
  bool W_con_valid_ = false;
  StepAudit audit_;
};

}  // namespace prl
