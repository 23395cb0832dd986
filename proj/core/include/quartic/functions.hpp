#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace quartic {

/// Certified smoothness class C^{k,1}_r: k spatial derivatives and
/// continuous d_t d_x^j g for j <= r.
struct Smoothness {
  int k = 0;
  int r = 0;

  bool certifies(int need_k, int need_r) const { return k >= need_k && r >= need_r; }
};

/// Integrand g(x, t) with closed-form derivatives d_x^j g (j <= 9) and
/// d_t d_x^j g (j <= 4).
class TestFunction {
 public:
  static constexpr int kMaxSpatial = 9;
  static constexpr int kMaxMixed = 4;

  virtual ~TestFunction() = default;

  virtual const std::string& id() const = 0;
  virtual Smoothness smoothness() const = 0;

  /// d_x^j g(x, t); throws std::out_of_range for j outside [0, 9].
  double dx(int j, double x, double t) const;
  /// d_t d_x^j g(x, t); throws std::out_of_range for j outside [0, 4].
  double dtdx(int j, double x, double t) const;

  double eval(double x, double t) const { return dx(0, x, t); }
  double dt(double x, double t) const { return dtdx(0, x, t); }

 protected:
  virtual double spatial(int j, double x, double t) const = 0;
  virtual double mixed(int j, double x, double t) const = 0;
};

using TestFunctionPtr = std::shared_ptr<const TestFunction>;

/// Built-in integrands (all C^infinity):
///   const      g = params[0] (default 1)
///   linear     g = x
///   square     g = x^2
///   cube       g = x^3
///   poly_k     g = sum_i params[i] x^i, at most 10 coefficients
///   sine       g = sin x
///   gauss_bump g = exp(-x^2 / 2)
///   poly_xt    g = x^3 (1 + t)
TestFunctionPtr builtin(const std::string& name, std::span<const double> params = {});

std::vector<std::string> builtin_names();

}  // namespace quartic
