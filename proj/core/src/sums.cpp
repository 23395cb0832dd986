#include "quartic/sums.hpp"

#include <stdexcept>

#include "quartic/analytic.hpp"
#include "quartic/parallel.hpp"

namespace quartic {
namespace {

void check_path(const PathView& path) {
  if (path.values.size() != path.grid.points())
    throw std::invalid_argument("path length does not match its grid");
}

StepSeries empty_series(const PathView& path) {
  check_path(path);
  return {path.grid, std::vector<double>(path.grid.points(), 0.0)};
}

// prefix[k] = sum_{j=1}^{k} dX_j^2 (-1)^j
std::vector<double> alternating_prefix(const PathView& path) {
  const std::size_t steps = path.grid.steps();
  std::vector<double> prefix(steps + 1, 0.0);
  for (std::size_t j = 1; j <= steps; ++j) {
    const double d = path.increment(j);
    prefix[j] = prefix[j - 1] + ((j % 2 == 0) ? d * d : -d * d);
  }
  return prefix;
}

}  // namespace

StepSeries midpoint_sum(PathView path, const TestFunction& g, int deriv_order) {
  StepSeries out = empty_series(path);
  const std::size_t steps = path.grid.steps();
  double acc = 0.0;
  for (std::size_t k = 2; k <= steps; ++k) {
    if (k % 2 == 0) {
      const std::size_t mid = k - 1;
      acc += g.dx(deriv_order, path[mid], path.grid.time(mid)) * (path[k] - path[k - 2]);
    }
    out.values[k] = acc;
  }
  return out;
}

StepSeries offset_midpoint_sum(PathView path, const TestFunction& g, int deriv_order) {
  StepSeries out = empty_series(path);
  const std::size_t steps = path.grid.steps();
  double acc = 0.0;
  for (std::size_t k = 2; k <= steps; ++k) {
    if (k % 2 == 0 && k + 1 <= steps)
      acc += g.dx(deriv_order, path[k], path.grid.time(k)) * (path[k + 1] - path[k - 1]);
    out.values[k] = acc;
  }
  return out;
}

StepSeries trapezoid_sum(PathView path, const TestFunction& g, int deriv_order) {
  StepSeries out = empty_series(path);
  const std::size_t steps = path.grid.steps();
  double left = g.dx(deriv_order, path[0], 0.0);
  double acc = 0.0;
  for (std::size_t j = 1; j <= steps; ++j) {
    const double right = g.dx(deriv_order, path[j], path.grid.time(j));
    acc += 0.5 * (left + right) * path.increment(j);
    out.values[j] = acc;
    left = right;
  }
  return out;
}

StepSeries alt_qv_weighted(PathView path, const TestFunction& g, int deriv_order) {
  StepSeries out = empty_series(path);
  const std::size_t steps = path.grid.steps();
  double acc = 0.0;
  for (std::size_t k = 2; k <= steps; ++k) {
    if (k % 2 == 0) {
      for (std::size_t j = k - 1; j <= k; ++j) {
        const double d = path.increment(j);
        const double w = g.dx(deriv_order, path[j - 1], path.grid.time(j - 1)) * d * d;
        acc += (j % 2 == 0) ? w : -w;
      }
    }
    out.values[k] = acc;
  }
  return out;
}

StepSeries bn_process(PathView path) {
  StepSeries out = empty_series(path);
  const auto prefix = alternating_prefix(path);
  const double inv_kappa = 1.0 / kappa_value();
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = inv_kappa * prefix[2 * (k / 2)];
  return out;
}

StepSeries qn_process(PathView path) {
  StepSeries out = empty_series(path);
  const std::size_t steps = path.grid.steps();
  double acc = 0.0;
  for (std::size_t k = 2; k <= steps; ++k) {
    if (k % 2 == 0) {
      const double even = path.increment(k);
      const double odd = path.increment(k - 1);
      acc += even * even - odd * odd;
    }
    out.values[k] = acc;
  }
  return out;
}

std::int64_t smoothing_resolution(std::int64_t n) {
  if (n < 1) throw std::domain_error("smoothing_resolution: n must be positive");
  std::int64_t m = 1;
  while ((m + 1) * (m + 1) * (m + 1) * (m + 1) <= n) ++m;
  return m;
}

StepSeries bn_smoothed(PathView path) {
  const std::int64_t n = path.grid.n();
  if (n < 16) throw std::domain_error("bn_smoothed: n must be at least 16 so that m >= 2");
  StepSeries out = empty_series(path);
  const auto prefix = alternating_prefix(path);
  const auto m = static_cast<std::size_t>(smoothing_resolution(n));
  const auto nn = static_cast<std::size_t>(n);
  const double inv_kappa = 1.0 / kappa_value();
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    // floor(m t / 2) at t = k / n
    const std::size_t blocks = (m * k) / (2 * nn);
    out.values[k] = inv_kappa * prefix[2 * m * m * m * blocks];
  }
  return out;
}

StepSeries power_sum(PathView path, const TestFunction& g, int deriv_order, int power, Parity parity,
                     EvalPoint eval_point) {
  if (power != 3 && power != 4) throw std::domain_error("power_sum: power must be 3 or 4");
  StepSeries out = empty_series(path);
  const std::size_t steps = path.grid.steps();
  double acc = 0.0;
  for (std::size_t j = 1; j <= steps; ++j) {
    const bool keep = parity == Parity::All || (parity == Parity::Odd) == (j % 2 == 1);
    if (keep) {
      const std::size_t at = eval_point == EvalPoint::Left ? j - 1 : j;
      const double d = path.increment(j);
      const double dp = power == 3 ? d * d * d : (d * d) * (d * d);
      acc += g.dx(deriv_order, path[at], path.grid.time(at)) * dp;
    }
    out.values[j] = acc;
  }
  return out;
}

Functional functional_from_string(const std::string& name) {
  if (name == "midpoint") return Functional::Midpoint;
  if (name == "offset") return Functional::Offset;
  if (name == "trapezoid") return Functional::Trapezoid;
  if (name == "jn") return Functional::Jn;
  if (name == "bn") return Functional::Bn;
  if (name == "qn") return Functional::Qn;
  if (name == "bnbar") return Functional::BnBar;
  if (name == "power") return Functional::Power;
  throw std::invalid_argument("unknown functional '" + name +
                              "' (expected midpoint, offset, trapezoid, jn, bn, qn, bnbar, power)");
}

const char* to_string(Functional f) {
  switch (f) {
    case Functional::Midpoint: return "midpoint";
    case Functional::Offset: return "offset";
    case Functional::Trapezoid: return "trapezoid";
    case Functional::Jn: return "jn";
    case Functional::Bn: return "bn";
    case Functional::Qn: return "qn";
    case Functional::BnBar: return "bnbar";
    case Functional::Power: return "power";
  }
  return "?";
}

Parity parity_from_string(const std::string& name) {
  if (name == "odd") return Parity::Odd;
  if (name == "even") return Parity::Even;
  if (name == "all") return Parity::All;
  throw std::invalid_argument("unknown parity '" + name + "' (expected odd, even, all)");
}

EvalPoint eval_point_from_string(const std::string& name) {
  if (name == "left") return EvalPoint::Left;
  if (name == "right") return EvalPoint::Right;
  throw std::invalid_argument("unknown evaluation point '" + name + "' (expected left, right)");
}

StepSeries evaluate(const FunctionalSpec& spec, PathView path) {
  auto need_g = [&]() -> const TestFunction& {
    if (!spec.g) throw std::invalid_argument(std::string("functional '") + to_string(spec.kind) + "' needs g");
    return *spec.g;
  };
  switch (spec.kind) {
    case Functional::Midpoint: return midpoint_sum(path, need_g(), spec.deriv_order);
    case Functional::Offset: return offset_midpoint_sum(path, need_g(), spec.deriv_order);
    case Functional::Trapezoid: return trapezoid_sum(path, need_g(), spec.deriv_order);
    case Functional::Jn: return alt_qv_weighted(path, need_g(), spec.deriv_order);
    case Functional::Bn: return bn_process(path);
    case Functional::Qn: return qn_process(path);
    case Functional::BnBar: return bn_smoothed(path);
    case Functional::Power:
      return power_sum(path, need_g(), spec.deriv_order, spec.power, spec.parity, spec.eval_point);
  }
  throw std::logic_error("evaluate: unhandled functional");
}

std::vector<double> evaluate_at(const FunctionalSpec& spec, const PathEnsemble& ensemble,
                                std::span<const double> probes, std::size_t workers) {
  std::vector<std::size_t> index(probes.size());
  for (std::size_t p = 0; p < probes.size(); ++p) index[p] = ensemble.grid().index_at(probes[p]);
  std::vector<double> out(ensemble.replicates() * probes.size());
  parallel_for(ensemble.replicates(), workers, [&](std::size_t m) {
    const StepSeries s = evaluate(spec, ensemble.path(m));
    for (std::size_t p = 0; p < index.size(); ++p) out[m * index.size() + p] = s.values[index[p]];
  });
  return out;
}

}  // namespace quartic
