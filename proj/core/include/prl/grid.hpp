#pragma once

#include <cstddef>
#include <vector>

namespace prl {

/// Uniform cell-centered grid. Cell centers sit at ((i+1/2)dx1, (j+1/2)dx2)
/// with i in [0, nx1), j in [0, nx2). x1 spans the ring face (sump side at
/// x1=0, combustion-chamber side at x1=length_x1); x2 runs along the
/// circumference and is periodic.
struct Grid {
  int nx1 = 0;
  int nx2 = 1;
  double length_x1 = 1.0;
  double length_x2 = 1.0;
  bool periodic_x2 = true;

  double dx1() const { return length_x1 / nx1; }
  double dx2() const { return length_x2 / nx2; }
  double x1_center(int i) const { return (i + 0.5) * dx1(); }
  double x2_center(int j) const { return (j + 0.5) * dx2(); }
  std::size_t cell_count() const { return std::size_t(nx1) * nx2; }
  std::size_t cell_index(int i, int j) const { return std::size_t(i) * nx2 + j; }

  /// x1/x2 anisotropy factor (dx1/dx2)^2 of the stencil; 0 in 1D, where the
  /// transverse coupling is disabled.
  double q2() const {
    if (nx2 == 1) return 0.0;
    double q = dx1() / dx2();
    return q * q;
  }

  int wrap_j(int j) const {
    if (j < 0) return j + nx2;
    if (j >= nx2) return j - nx2;
    return j;
  }

  /// Throws ConfigError when the cell counts or extents are unusable.
  void validate() const;
};

/// Scalar field on a Grid with one ghost column on each x1 side: i = -1
/// holds the sump-side boundary value and i = nx1 the combustion-chamber
/// one. Storage is i-major so a fixed-i row is contiguous in j.
class Field2D {
 public:
  Field2D() = default;
  Field2D(int nx1, int nx2, double init = 0.0)
      : nx1_(nx1), nx2_(nx2), v_(std::size_t(nx1 + 2) * nx2, init) {}

  int nx1() const { return nx1_; }
  int nx2() const { return nx2_; }

  /// i in [-1, nx1]; j wrapped periodically into [0, nx2).
  double& at(int i, int j) { return v_[index(i, j)]; }
  double at(int i, int j) const { return v_[index(i, j)]; }

  /// Contiguous row at fixed i (ghost rows included), length nx2.
  double* row(int i) { return v_.data() + std::size_t(i + 1) * nx2_; }
  const double* row(int i) const { return v_.data() + std::size_t(i + 1) * nx2_; }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  std::size_t size() const { return v_.size(); }

  void fill(double value) { v_.assign(v_.size(), value); }

  double min_interior() const;
  double max_interior() const;
  double sum_interior() const;

  bool same_shape(const Field2D& other) const {
    return nx1_ == other.nx1_ && nx2_ == other.nx2_;
  }

 private:
  std::size_t index(int i, int j) const {
    int jw = j;
    if (jw < 0) jw += nx2_;
    else if (jw >= nx2_) jw -= nx2_;
    return std::size_t(i + 1) * nx2_ + jw;
  }

  int nx1_ = 0;
  int nx2_ = 0;
  std::vector<double> v_;
};

}  // namespace prl
