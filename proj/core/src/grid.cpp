#include "quartic/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quartic {

std::size_t floor_index(std::int64_t n, double t) {
  const double x = static_cast<double>(n) * t;
  return static_cast<std::size_t>(std::floor(x + 1e-9 * std::max(1.0, std::abs(x))));
}

Grid::Grid(std::int64_t steps_per_unit, double horizon) : n_(steps_per_unit), horizon_(horizon) {
  if (n_ <= 0) throw std::invalid_argument("grid: n must be a positive integer");
  if (!(horizon_ > 0.0) || !std::isfinite(horizon_))
    throw std::invalid_argument("grid: horizon must be a positive finite time");
  steps_ = floor_index(n_, horizon_);
  if (steps_ < 2)
    throw std::invalid_argument("grid: floor(n*T) = " + std::to_string(steps_) +
                                " but at least one midpoint pair (2 steps) is required");
}

std::size_t Grid::index_at(double t) const {
  if (t < 0.0) throw std::domain_error("grid: negative time");
  const std::size_t k = floor_index(n_, t);
  if (k > steps_)
    throw std::domain_error("grid: time " + std::to_string(t) + " lies beyond the horizon " +
                            std::to_string(horizon_));
  return k;
}

}  // namespace quartic
