#include "prl/grid.hpp"

#include <algorithm>

#include "prl/errors.hpp"

namespace prl {

void Grid::validate() const {
  if (nx1 < 3) throw ConfigError("grid.nx1 must be >= 3");
  if (nx2 < 1) throw ConfigError("grid.nx2 must be >= 1");
  if (!(length_x1 > 0.0)) throw ConfigError("grid.length_x1 must be > 0");
  if (!(length_x2 > 0.0)) throw ConfigError("grid.length_x2 must be > 0");
}

double Field2D::min_interior() const {
  double m = v_[nx2_];
  for (std::size_t k = nx2_; k < v_.size() - nx2_; ++k) m = std::min(m, v_[k]);
  return m;
}

double Field2D::max_interior() const {
  double m = v_[nx2_];
  for (std::size_t k = nx2_; k < v_.size() - nx2_; ++k) m = std::max(m, v_[k]);
  return m;
}

double Field2D::sum_interior() const {
  double s = 0.0;
  for (std::size_t k = nx2_; k < v_.size() - nx2_; ++k) s += v_[k];
  return s;
}

}  // namespace prl
