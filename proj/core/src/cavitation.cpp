#include "prl/cavitation.hpp"

#include <algorithm>
#include <cmath>

#include "prl/errors.hpp"

namespace prl {

namespace {

inline double cube(double x) { return x * x * x; }

}  // namespace

void assemble_storage_term(const Field2D& h_prev, const Field2D& theta_prev, double dt,
                           const Grid& grid, std::vector<double>& f) {
  const double c = 2.0 * grid.dx1() * grid.dx1() / dt;
  f.resize(grid.cell_count());
  for (int i = 0; i < grid.nx1; ++i) {
    const double* h = h_prev.row(i);
    const double* th = theta_prev.row(i);
    double* fr = f.data() + std::size_t(i) * grid.nx2;
    for (int j = 0; j < grid.nx2; ++j) fr[j] = c * h[j] * th[j];
  }
}

void assemble_gap_terms(const Field2D& h_now, double u, double dt, const Grid& grid,
                        StencilCoefficients& coeffs) {
  const int nx1 = grid.nx1, nx2 = grid.nx2;
  const double dx1 = grid.dx1();

  coeffs.nx1 = nx1;
  coeffs.nx2 = nx2;
  coeffs.dx1 = dx1;
  coeffs.dx2 = grid.dx2();
  coeffs.dt = dt;
  coeffs.u = u;
  coeffs.q2 = grid.q2();
  coeffs.upstream_offset = u >= 0.0 ? -1 : +1;

  coeffs.sx.resize(std::size_t(nx1 + 1) * nx2);
  coeffs.sy.resize(grid.cell_count());
  coeffs.e00.resize(grid.cell_count());
  coeffs.e_up.resize(grid.cell_count());

  const double au = std::abs(u);
  const double e_diag = au * dx1 + 2.0 * dx1 * dx1 / dt;
  const int off = coeffs.upstream_offset;

  for (int i = 0; i <= nx1; ++i) {
    const double* hm = h_now.row(i - 1);
    const double* hc = h_now.row(i);
    double* sxr = coeffs.sx.data() + std::size_t(i) * nx2;
    for (int j = 0; j < nx2; ++j) sxr[j] = 0.5 * (cube(hm[j]) + cube(hc[j]));
  }
  for (int i = 0; i < nx1; ++i) {
    const double* hc = h_now.row(i);
    const double* hu = h_now.row(i + off);
    double* syr = coeffs.sy.data() + std::size_t(i) * nx2;
    double* e0r = coeffs.e00.data() + std::size_t(i) * nx2;
    double* eur = coeffs.e_up.data() + std::size_t(i) * nx2;
    for (int j = 0; j < nx2; ++j) {
      int jm = j == 0 ? nx2 - 1 : j - 1;
      syr[j] = 0.5 * (cube(hc[jm]) + cube(hc[j]));
      e0r[j] = e_diag * hc[j];
      eur[j] = -au * dx1 * hu[j];
    }
  }
}

StencilCoefficients assemble_coefficients(const Field2D& h_now, const Field2D& h_prev,
                                          const Field2D& theta_prev, double u, double dt,
                                          const Grid& grid) {
  if (!(dt > 0.0)) throw ConfigError("time step must be > 0");
  {
    const double* h = h_now.data();
    for (std::size_t k = 0; k < h_now.size(); ++k) {
      if (!(h[k] > 0.0)) {
        throw ContactPenetration("non-positive gap in stencil assembly", h[k]);
      }
    }
  }
  StencilCoefficients coeffs;
  assemble_gap_terms(h_now, u, dt, grid, coeffs);
  assemble_storage_term(h_prev, theta_prev, dt, grid, coeffs.f);
  return coeffs;
}

void apply_boundary_conditions(FieldPair& fields, const Field2D& h_now, double h_feed,
                               double p_cc) {
  const int nx1 = fields.p.nx1(), nx2 = fields.p.nx2();
  double* pl = fields.p.row(-1);
  double* pr = fields.p.row(nx1);
  double* tl = fields.theta.row(-1);
  double* tr = fields.theta.row(nx1);
  const double* hl = h_now.row(-1);
  const double* hr = h_now.row(nx1);
  for (int j = 0; j < nx2; ++j) {
    pl[j] = 0.0;
    pr[j] = p_cc;
    tl[j] = std::min(1.0, h_feed / hl[j]);
    tr[j] = std::min(1.0, h_feed / hr[j]);
  }
}

void flood_rightmost_component(const Field2D& theta, const SolverSettings& settings,
                               const Grid& grid, RegionLabel& out,
                               std::vector<std::int32_t>& queue) {
  const int nx1 = grid.nx1, nx2 = grid.nx2;
  const double thr = settings.theta_full_threshold;

  out.nx1 = nx1;
  out.nx2 = nx2;
  out.mask.assign(grid.cell_count(), CellRegion::FullFilm);
  out.touches_left = false;
  queue.clear();

  CellRegion* mask = out.mask.data();
  for (int i = 0; i < nx1; ++i) {
    const double* th = theta.row(i);
    CellRegion* mr = mask + std::size_t(i) * nx2;
    for (int j = 0; j < nx2; ++j) {
      if (th[j] < thr) mr[j] = CellRegion::CavityPlain;
    }
  }

  // Seed with every cavitated cell of the combustion-chamber column.
  for (int j = 0; j < nx2; ++j) {
    std::size_t c = std::size_t(nx1 - 1) * nx2 + j;
    if (mask[c] == CellRegion::CavityPlain) {
      mask[c] = CellRegion::CavityRight;
      queue.push_back(std::int32_t(c));
    }
  }

  std::size_t head = 0;
  while (head < queue.size()) {
    std::int32_t c = queue[head++];
    int i = c / nx2, j = c % nx2;
    if (i == 0) out.touches_left = true;
    auto visit = [&](std::size_t n) {
      if (mask[n] == CellRegion::CavityPlain) {
        mask[n] = CellRegion::CavityRight;
        queue.push_back(std::int32_t(n));
      }
    };
    if (i > 0) visit(c - nx2);
    if (i < nx1 - 1) visit(c + nx2);
    if (nx2 > 1) {
      visit(j == 0 ? c + nx2 - 1 : c - 1);
      visit(j == nx2 - 1 ? c - nx2 + 1 : c + 1);
    }
  }
}

RegionLabel flood_rightmost_component(const Field2D& theta, const SolverSettings& settings,
                                      const Grid& grid) {
  RegionLabel out;
  std::vector<std::int32_t> queue;
  flood_rightmost_component(theta, settings, grid, out, queue);
  return out;
}

void discrete_T(const RegionLabel& labels, double p_cc, const SolverSettings& settings,
                std::vector<double>& T) {
  const int nx1 = labels.nx1, nx2 = labels.nx2;
  const std::size_t n = std::size_t(nx1) * nx2;
  T.assign(n, 0.0);
  const CellRegion* mask = labels.mask.data();
  for (int i = 0; i < nx1; ++i) {
    for (int j = 0; j < nx2; ++j) {
      std::size_t c = std::size_t(i) * nx2 + j;
      if (mask[c] == CellRegion::CavityRight) {
        T[c] = p_cc;
      } else if (settings.epsilon_extension && mask[c] == CellRegion::FullFilm) {
        bool adj = (i > 0 && mask[c - nx2] == CellRegion::CavityRight) ||
                   (i < nx1 - 1 && mask[c + nx2] == CellRegion::CavityRight);
        if (!adj && nx2 > 1) {
          std::size_t cl = j == 0 ? c + nx2 - 1 : c - 1;
          std::size_t cr = j == nx2 - 1 ? c - nx2 + 1 : c + 1;
          adj = mask[cl] == CellRegion::CavityRight || mask[cr] == CellRegion::CavityRight;
        }
        if (adj) T[c] = p_cc;
      }
    }
  }
}

std::vector<double> discrete_T(const RegionLabel& labels, double p_cc,
                               const SolverSettings& settings) {
  std::vector<double> T;
  discrete_T(labels, p_cc, settings, T);
  return T;
}

SweepStats gauss_seidel_sweep(FieldPair& fields, const StencilCoefficients& coeffs,
                              const std::vector<double>& T, const RegionLabel* labels,
                              double theta_full_threshold) {
  const int nx1 = coeffs.nx1, nx2 = coeffs.nx2;
  const double q2 = coeffs.q2;
  const int off = coeffs.upstream_offset;
  const double thr = theta_full_threshold;

  SweepStats stats;
  const int i_begin = off < 0 ? 0 : nx1 - 1;
  const int i_end = off < 0 ? nx1 : -1;
  const int i_step = off < 0 ? 1 : -1;

  for (int i = i_begin; i != i_end; i += i_step) {
    double* pc = fields.p.row(i);
    const double* pm = fields.p.row(i - 1);
    const double* pp = fields.p.row(i + 1);
    double* thc = fields.theta.row(i);
    const double* th_up_row = fields.theta.row(i + off);
    const std::size_t base = std::size_t(i) * nx2;
    const double* sxm = coeffs.sx.data() + base;
    const double* sxp = coeffs.sx.data() + base + nx2;
    const double* syr = coeffs.sy.data() + base;
    const double* e0r = coeffs.e00.data() + base;
    const double* eur = coeffs.e_up.data() + base;
    const double* fr = coeffs.f.data() + base;
    const double* Tr = T.data() + base;
    const CellRegion* mr = labels ? labels->mask.data() + base : nullptr;

    for (int j = 0; j < nx2; ++j) {
      const int jm = j == 0 ? nx2 - 1 : j - 1;
      const int jp = j + 1 == nx2 ? 0 : j + 1;
      const double sym = syr[j];
      const double syp = syr[jp];
      double C = sxm[j] * pm[j] + sxp[j] * pp[j] + q2 * (sym * pc[jm] + syp * pc[jp]) +
                 fr[j] - eur[j] * th_up_row[j];
      const double a = sxm[j] + sxp[j] + q2 * (sym + syp);
      const double Tc = Tr[j];
      const double pf = (C - e0r[j]) / a;

      double p_new, th_new;
      if (pf >= Tc) {
        p_new = pf;
        th_new = 1.0;
      } else {
        const double e = e0r[j];
        if (!(e > 0.0)) {
          throw DegenerateCell("e00 vanished at a cell requiring the saturation branch");
        }
        th_new = (C - a * Tc) / e;
        if (mr && mr[j] == CellRegion::CavityRight &&
            th_new < stats.min_cavity_theta_preclamp) {
          stats.min_cavity_theta_preclamp = th_new;
        }
        th_new = std::clamp(th_new, 0.0, 1.0);
        p_new = Tc;
      }

      stats.change_p += std::abs(p_new - pc[j]);
      stats.change_theta += std::abs(th_new - thc[j]);
      stats.cavity_mask_changed |= (thc[j] < thr) != (th_new < thr);
      stats.sum_p += p_new;
      pc[j] = p_new;
      thc[j] = th_new;
    }
  }
  return stats;
}

TimestepResult solve_timestep_inplace(FieldPair& fields, const Field2D& h_now,
                                      const Field2D& h_prev, double u, double p_cc,
                                      double dt, const SolverSettings& settings,
                                      const Grid& grid) {
  StencilCoefficients coeffs =
      assemble_coefficients(h_now, h_prev, fields.theta, u, dt, grid);

  TimestepResult result;
  std::vector<std::int32_t> queue;
  std::vector<double> T;
  flood_rightmost_component(fields.theta, settings, grid, result.labels, queue);
  discrete_T(result.labels, p_cc, settings, T);

  double change = 0.0;
  for (long iter = 1; iter <= settings.max_iters; ++iter) {
    if (result.labels.touches_left && p_cc > 0.0) {
      throw BlowByChannel("cavity channel spans the ring face with p_cc > 0");
    }
    SweepStats stats =
        gauss_seidel_sweep(fields, coeffs, T, &result.labels, settings.theta_full_threshold);
    change = stats.change_p + stats.change_theta;
    result.min_cavity_theta_preclamp =
        std::min(result.min_cavity_theta_preclamp, stats.min_cavity_theta_preclamp);
    if (stats.cavity_mask_changed) {
      flood_rightmost_component(fields.theta, settings, grid, result.labels, queue);
      discrete_T(result.labels, p_cc, settings, T);
    }
    if (change < settings.tol) {
      result.iterations = iter;
      result.final_change = change;
      if (result.labels.touches_left && p_cc > 0.0) {
        throw BlowByChannel("cavity channel spans the ring face with p_cc > 0");
      }
      return result;
    }
  }
  throw NonConvergence("fixed point did not converge within max_iters",
                       settings.max_iters, change);
}

std::pair<FieldPair, long> solve_timestep(const FieldPair& prev, const Field2D& h_now,
                                          const Field2D& h_prev, double u, double p_cc,
                                          double dt, double h_feed,
                                          const SolverSettings& settings, const Grid& grid) {
  FieldPair fields = prev;
  apply_boundary_conditions(fields, h_now, h_feed, p_cc);
  TimestepResult r =
      solve_timestep_inplace(fields, h_now, h_prev, u, p_cc, dt, settings, grid);
  return {std::move(fields), r.iterations};
}

double reynolds_sweep(Field2D& p, const StencilCoefficients& coeffs, const Field2D& h_now) {
  const int nx1 = coeffs.nx1, nx2 = coeffs.nx2;
  const double q2 = coeffs.q2;
  const int off = coeffs.upstream_offset;
  const double audx = std::abs(coeffs.u) * coeffs.dx1;

  double change = 0.0;
  const int i_begin = off < 0 ? 0 : nx1 - 1;
  const int i_end = off < 0 ? nx1 : -1;
  const int i_step = off < 0 ? 1 : -1;

  for (int i = i_begin; i != i_end; i += i_step) {
    double* pc = p.row(i);
    const double* pm = p.row(i - 1);
    const double* pp = p.row(i + 1);
    const double* hc = h_now.row(i);
    const double* hu = h_now.row(i + off);
    const std::size_t base = std::size_t(i) * nx2;
    const double* sxm = coeffs.sx.data() + base;
    const double* sxp = coeffs.sx.data() + base + nx2;
    const double* syr = coeffs.sy.data() + base;

    for (int j = 0; j < nx2; ++j) {
      const int jm = j == 0 ? nx2 - 1 : j - 1;
      const int jp = j + 1 == nx2 ? 0 : j + 1;
      const double sym = syr[j];
      const double syp = syr[jp];
      const double rhs = sxm[j] * pm[j] + sxp[j] * pp[j] + q2 * (sym * pc[jm] + syp * pc[jp]) -
                         audx * (hc[j] - hu[j]);
      const double a = sxm[j] + sxp[j] + q2 * (sym + syp);
      double p_new = rhs / a;
      if (p_new < 0.0) p_new = 0.0;  // half-Sommerfeld projection
      change += std::abs(p_new - pc[j]);
      pc[j] = p_new;
    }
  }
  return change;
}

Field2D solve_reynolds_cavitation(const Field2D& h_now, double u, double p_cc,
                                  const Grid& grid, const SolverSettings& settings) {
  Field2D p(grid.nx1, grid.nx2, 0.0);
  for (int j = 0; j < grid.nx2; ++j) {
    p.row(-1)[j] = 0.0;
    p.row(grid.nx1)[j] = p_cc;
  }
  StencilCoefficients coeffs;
  assemble_gap_terms(h_now, u, 1.0, grid, coeffs);  // dt unused by the Reynolds sweep
  for (long iter = 1; iter <= settings.max_iters; ++iter) {
    double change = reynolds_sweep(p, coeffs, h_now);
    if (change < settings.tol) return p;
  }
  throw NonConvergence("Reynolds solve did not converge within max_iters",
                       settings.max_iters, settings.tol);
}

double complementarity_residual(const FieldPair& fields, const std::vector<double>& T,
                                int nx1, int nx2) {
  double worst = 0.0;
  for (int i = 0; i < nx1; ++i) {
    const double* p = fields.p.row(i);
    const double* th = fields.theta.row(i);
    const double* Tr = T.data() + std::size_t(i) * nx2;
    for (int j = 0; j < nx2; ++j) {
      worst = std::max(worst, std::abs((p[j] - Tr[j]) * (1.0 - th[j])));
    }
  }
  return worst;
}

}  // namespace prl
