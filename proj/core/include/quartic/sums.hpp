#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "quartic/functions.hpp"
#include "quartic/simulate.hpp"

namespace quartic {

/// Right-continuous step series sampled at the grid times; values[k] is the
/// functional at any t with floor(nt) = k.
struct StepSeries {
  Grid grid;
  std::vector<double> values;

  double at(double t) const { return values[grid.index_at(t)]; }
  double at_index(std::size_t k) const { return values.at(k); }
};

enum class Parity { Odd, Even, All };
enum class EvalPoint { Left, Right };

/// I_n(g, t) = sum_{j <= floor(nt/2)} g(X(t_{2j-1})) (X(t_{2j}) - X(t_{2j-2})), using the
/// deriv_order-th spatial derivative of g as integrand.
StepSeries midpoint_sum(PathView path, const TestFunction& g, int deriv_order = 0);

/// sum_{j <= floor(nt/2)} g(X(t_{2j})) (X(t_{2j+1}) - X(t_{2j-1})). Terms whose
/// right endpoint t_{2j+1} lies past the horizon are left out.
StepSeries offset_midpoint_sum(PathView path, const TestFunction& g, int deriv_order = 0);

/// T_n(g, t) = sum_{j <= floor(nt)} (g(X(t_{j-1})) + g(X(t_j))) / 2 * dX_j.
StepSeries trapezoid_sum(PathView path, const TestFunction& g, int deriv_order = 0);

/// J_n(g, t) = sum_{j <= 2 floor(nt/2)} g(X(t_{j-1})) dX_j^2 (-1)^j.
StepSeries alt_qv_weighted(PathView path, const TestFunction& g, int deriv_order = 0);

/// B_n(t) = kappa^{-1} sum_{j <= 2 floor(nt/2)} dX_j^2 (-1)^j.
StepSeries bn_process(PathView path);

/// Q_n(t) = sum_{j <= floor(nt/2)} (dX_{2j}^2 - dX_{2j-1}^2).
StepSeries qn_process(PathView path);

/// Bbar_n(t) = kappa^{-1} sum_{j <= 2 m^3 floor(mt/2)} dX_j^2 (-1)^j, m = floor(n^{1/4}).
/// Requires n >= 16.
StepSeries bn_smoothed(PathView path);

/// floor(n^{1/4}) in exact integer arithmetic.
std::int64_t smoothing_resolution(std::int64_t n);

/// sum_{j <= floor(nt), parity} g(X(t_{j-1 or j})) dX_j^p for p in {3, 4}.
StepSeries power_sum(PathView path, const TestFunction& g, int deriv_order, int power, Parity parity,
                     EvalPoint eval_point);

enum class Functional { Midpoint, Offset, Trapezoid, Jn, Bn, Qn, BnBar, Power };

Functional functional_from_string(const std::string& name);
const char* to_string(Functional f);
Parity parity_from_string(const std::string& name);
EvalPoint eval_point_from_string(const std::string& name);

struct FunctionalSpec {
  Functional kind = Functional::Midpoint;
  TestFunctionPtr g;  ///< unused by Bn, Qn, BnBar
  int deriv_order = 0;
  int power = 4;
  Parity parity = Parity::All;
  EvalPoint eval_point = EvalPoint::Left;
};

StepSeries evaluate(const FunctionalSpec& spec, PathView path);

/// Functional values at each probe time for every replicate, row-major M x P.
std::vector<double> evaluate_at(const FunctionalSpec& spec, const PathEnsemble& ensemble,
                                std::span<const double> probes, std::size_t workers = 1);

}  // namespace quartic
