#include "prl/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "prl/errors.hpp"

namespace prl {

namespace {

inline double cube(double x) { return x * x * x; }

// Boundary cells of a set: members with at least one in-domain non-member
// 4-neighbor. The minimum distance between two disjoint sets is always
// attained on such cells.
std::vector<std::int32_t> boundary_cells(const std::vector<char>& member, int nx1, int nx2,
                                         bool periodic_x2) {
  std::vector<std::int32_t> out;
  for (int i = 0; i < nx1; ++i) {
    for (int j = 0; j < nx2; ++j) {
      std::size_t c = std::size_t(i) * nx2 + j;
      if (!member[c]) continue;
      bool edge = (i > 0 && !member[c - nx2]) || (i < nx1 - 1 && !member[c + nx2]);
      if (!edge && nx2 > 1) {
        std::size_t cl = j == 0 ? (periodic_x2 ? c + nx2 - 1 : c) : c - 1;
        std::size_t cr = j == nx2 - 1 ? (periodic_x2 ? c - nx2 + 1 : c) : c + 1;
        edge = !member[cl] || !member[cr];
      }
      if (edge) out.push_back(std::int32_t(c));
    }
  }
  return out;
}

}  // namespace

double minimum_film_thickness(const Field2D& h) {
  return h.min_interior();
}

double mass_balance_residual(const FieldPair& prev, const FieldPair& curr,
                             const Field2D& h_prev, const Field2D& h_now, double u,
                             double dt, const Grid& grid, double eps) {
  const int nx1 = grid.nx1, nx2 = grid.nx2;
  const double dx1 = grid.dx1(), dx2 = grid.dx2();

  double flux_left = 0.0, flux_right = 0.0;
  {
    const double* pg = curr.p.row(-1);
    const double* p0 = curr.p.row(0);
    const double* hg = h_now.row(-1);
    const double* h0 = h_now.row(0);
    const double* tg = curr.theta.row(-1);
    const double* t0 = curr.theta.row(0);
    for (int j = 0; j < nx2; ++j) {
      double s = 0.5 * (cube(hg[j]) + cube(h0[j]));
      double couette = u >= 0.0 ? hg[j] * tg[j] : h0[j] * t0[j];
      flux_left += -0.5 * s * (p0[j] - pg[j]) / dx1 + 0.5 * u * couette;
    }
    flux_left *= dx2;
  }
  {
    const double* pn = curr.p.row(nx1 - 1);
    const double* pg = curr.p.row(nx1);
    const double* hn = h_now.row(nx1 - 1);
    const double* hg = h_now.row(nx1);
    const double* tn = curr.theta.row(nx1 - 1);
    const double* tg = curr.theta.row(nx1);
    for (int j = 0; j < nx2; ++j) {
      double s = 0.5 * (cube(hn[j]) + cube(hg[j]));
      double couette = u >= 0.0 ? hn[j] * tn[j] : hg[j] * tg[j];
      flux_right += -0.5 * s * (pg[j] - pn[j]) / dx1 + 0.5 * u * couette;
    }
    flux_right *= dx2;
  }

  double storage = 0.0;
  for (int i = 0; i < nx1; ++i) {
    const double* hn = h_now.row(i);
    const double* tn = curr.theta.row(i);
    const double* hp = h_prev.row(i);
    const double* tp = prev.theta.row(i);
    for (int j = 0; j < nx2; ++j) storage += hn[j] * tn[j] - hp[j] * tp[j];
  }
  storage *= dx1 * dx2 / dt;

  double num = std::abs(flux_left - flux_right - storage);
  double den = std::max({std::abs(flux_left), std::abs(flux_right), std::abs(storage), eps});
  return num / den;
}

double blow_by_distance(const RegionLabel& labels, const Field2D& p, double p_cc,
                        const Grid& grid, double tol_p) {
  const int nx1 = grid.nx1, nx2 = grid.nx2;
  const double inf = std::numeric_limits<double>::infinity();
  if (labels.mask.empty()) return inf;

  std::vector<char> gas(grid.cell_count(), 0), low(grid.cell_count(), 0);
  bool any_gas = false, any_low = false;
  const double p_low = p_cc - tol_p;
  for (int i = 0; i < nx1; ++i) {
    const double* pr = p.row(i);
    for (int j = 0; j < nx2; ++j) {
      std::size_t c = std::size_t(i) * nx2 + j;
      if (labels.mask[c] == CellRegion::CavityRight) {
        gas[c] = 1;
        any_gas = true;
      } else if (pr[j] < p_low) {
        low[c] = 1;
        any_low = true;
      }
    }
  }
  if (!any_gas || !any_low) return inf;

  auto ga = boundary_cells(gas, nx1, nx2, grid.periodic_x2);
  auto lo = boundary_cells(low, nx1, nx2, grid.periodic_x2);
  const double dx1 = grid.dx1(), dx2 = grid.dx2();
  const double floor2 = std::min(dx1, nx2 > 1 ? dx2 : dx1);
  double best2 = inf;
  for (std::int32_t a : ga) {
    int ia = a / nx2, ja = a % nx2;
    for (std::int32_t b : lo) {
      int ib = b / nx2, jb = b % nx2;
      double dx = (ia - ib) * dx1;
      int dj = std::abs(ja - jb);
      if (grid.periodic_x2 && nx2 - dj < dj) dj = nx2 - dj;
      double dy = dj * dx2;
      double d2 = dx * dx + dy * dy;
      if (d2 < best2) {
        best2 = d2;
        if (best2 <= floor2 * floor2) return std::sqrt(best2);
      }
    }
  }
  return std::sqrt(best2);
}

bool blow_by_criterion(double d, const BlowByConfig& cfg, const Grid& grid, double p_cc) {
  if (!(p_cc > 0.0)) return false;
  double threshold = std::max(cfg.epsilon_b * grid.length_x1, cfg.N_b * grid.dx1());
  return d <= threshold;
}

double TimeSeries::interpolate(double time) const {
  if (t.empty()) throw ConfigError("cannot interpolate an empty series");
  if (time <= t.front()) return v.front();
  if (time >= t.back()) return v.back();
  auto it = std::upper_bound(t.begin(), t.end(), time);
  std::size_t k = std::size_t(it - t.begin());
  double w = (time - t[k - 1]) / (t[k] - t[k - 1]);
  return v[k - 1] + w * (v[k] - v[k - 1]);
}

double friction_relative_difference(const TimeSeries& a, const TimeSeries& ref) {
  if (ref.t.size() < 2) throw ConfigError("reference series too short");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 1; k < ref.t.size(); ++k) {
    double dt = ref.t[k] - ref.t[k - 1];
    double d0 = std::abs(a.interpolate(ref.t[k - 1]) - ref.v[k - 1]);
    double d1 = std::abs(a.interpolate(ref.t[k]) - ref.v[k]);
    num += 0.5 * (d0 + d1) * dt;
    den += 0.5 * (std::abs(ref.v[k - 1]) + std::abs(ref.v[k])) * dt;
  }
  if (den == 0.0) throw ConfigError("reference series has zero L1 norm");
  return num / den;
}

double time_average(const TimeSeries& s, double t_start, double t_end) {
  if (!(t_start < t_end)) throw ConfigError("time_average: empty window");
  if (s.t.size() < 2 || t_start < s.t.front() - 1e-12 || t_end > s.t.back() + 1e-12) {
    throw ConfigError("time_average: window outside series range");
  }
  double integral = 0.0;
  for (std::size_t k = 1; k < s.t.size(); ++k) {
    double a = std::max(s.t[k - 1], t_start);
    double b = std::min(s.t[k], t_end);
    if (b <= a) continue;
    integral += 0.5 * (s.interpolate(a) + s.interpolate(b)) * (b - a);
  }
  return integral / (t_end - t_start);
}

EdgeGradients1D edge_gradients_1d(const Field2D& p, int cavity_edge_i, const Grid& grid) {
  EdgeGradients1D out;
  int i = std::clamp(cavity_edge_i - 1, 1, grid.nx1 - 2);
  const double dx1 = grid.dx1();
  out.slope = (p.at(i + 1, 0) - p.at(i - 1, 0)) / (2.0 * dx1);
  out.curvature = (p.at(i + 1, 0) - 2.0 * p.at(i, 0) + p.at(i - 1, 0)) / (dx1 * dx1);
  return out;
}

}  // namespace prl
