#pragma once

#include <cstddef>
#include <cstdint>

namespace quartic {

/// Uniform time grid t_j = j/n on [0, horizon].
///
/// The grid always holds at least one midpoint pair, i.e. floor(n * horizon) >= 2.
class Grid {
 public:
  Grid(std::int64_t steps_per_unit, double horizon);

  std::int64_t n() const { return n_; }
  double horizon() const { return horizon_; }
  double dt() const { return 1.0 / static_cast<double>(n_); }

  /// Number of increments, floor(n * horizon). Grid points are 0..steps().
  std::size_t steps() const { return steps_; }
  std::size_t points() const { return steps_ + 1; }

  double time(std::size_t j) const { return static_cast<double>(j) / static_cast<double>(n_); }

  /// floor(n t), the index of the last grid time not after t. Throws if t is
  /// negative or beyond the horizon.
  std::size_t index_at(double t) const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n_ == b.n_ && a.horizon_ == b.horizon_;
  }

 private:
  std::int64_t n_;
  double horizon_;
  std::size_t steps_;
};

/// floor(n t) with a small guard against products like 0.29 * 100 = 28.999...
std::size_t floor_index(std::int64_t n, double t);

}  // namespace quartic
