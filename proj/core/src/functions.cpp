#include "quartic/functions.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "quartic/hermite.hpp"

namespace quartic {

double TestFunction::dx(int j, double x, double t) const {
  if (j < 0 || j > kMaxSpatial) throw std::out_of_range("TestFunction::dx: order outside [0, 9]");
  return spatial(j, x, t);
}

double TestFunction::dtdx(int j, double x, double t) const {
  if (j < 0 || j > kMaxMixed) throw std::out_of_range("TestFunction::dtdx: order outside [0, 4]");
  return mixed(j, x, t);
}

namespace {

constexpr Smoothness kSmooth{TestFunction::kMaxSpatial, TestFunction::kMaxMixed};

// g(x, t) = p(x) with p a polynomial; d_t g = 0.
class PolynomialInX final : public TestFunction {
 public:
  PolynomialInX(std::string id, std::vector<double> coeffs) : id_(std::move(id)), coeffs_(std::move(coeffs)) {}

  const std::string& id() const override { return id_; }
  Smoothness smoothness() const override { return kSmooth; }

 protected:
  double spatial(int j, double x, double) const override {
    double acc = 0.0;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= j; --i) {
      double falling = 1.0;
      for (int k = 0; k < j; ++k) falling *= i - k;
      acc = acc * x + coeffs_[static_cast<std::size_t>(i)] * falling;
    }
    return acc;
  }
  double mixed(int, double, double) const override { return 0.0; }

 private:
  std::string id_;
  std::vector<double> coeffs_;
};

class Sine final : public TestFunction {
 public:
  const std::string& id() const override { return id_; }
  Smoothness smoothness() const override { return kSmooth; }

 protected:
  double spatial(int j, double x, double) const override {
    switch (j % 4) {
      case 0: return std::sin(x);
      case 1: return std::cos(x);
      case 2: return -std::sin(x);
      default: return -std::cos(x);
    }
  }
  double mixed(int, double, double) const override { return 0.0; }

 private:
  std::string id_ = "sine";
};

// d^j/dx^j e^{-x^2/2} = (-1)^j h_j(x) e^{-x^2/2}
class GaussBump final : public TestFunction {
 public:
  const std::string& id() const override { return id_; }
  Smoothness smoothness() const override { return kSmooth; }

 protected:
  double spatial(int j, double x, double) const override {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return sign * hermite_eval(j, x) * std::exp(-0.5 * x * x);
  }
  double mixed(int, double, double) const override { return 0.0; }

 private:
  std::string id_ = "gauss_bump";
};

// g(x, t) = x^3 (1 + t)
class CubeTimesLinearTime final : public TestFunction {
 public:
  const std::string& id() const override { return id_; }
  Smoothness smoothness() const override { return kSmooth; }

 protected:
  double spatial(int j, double x, double t) const override { return cube_derivative(j, x) * (1.0 + t); }
  double mixed(int j, double x, double) const override { return cube_derivative(j, x); }

 private:
  static double cube_derivative(int j, double x) {
    switch (j) {
      case 0: return x * x * x;
      case 1: return 3.0 * x * x;
      case 2: return 6.0 * x;
      case 3: return 6.0;
      default: return 0.0;
    }
  }
  std::string id_ = "poly_xt";
};

void expect_no_params(const std::string& name, std::span<const double> params) {
  if (!params.empty()) throw std::invalid_argument("builtin '" + name + "' takes no parameters");
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"const", "linear", "square", "cube", "poly_k", "sine", "gauss_bump", "poly_xt"};
}

TestFunctionPtr builtin(const std::string& name, std::span<const double> params) {
  if (name == "const") {
    if (params.size() > 1) throw std::invalid_argument("builtin 'const' takes at most one parameter");
    return std::make_shared<PolynomialInX>("const", std::vector<double>{params.empty() ? 1.0 : params[0]});
  }
  if (name == "linear") {
    expect_no_params(name, params);
    return std::make_shared<PolynomialInX>("linear", std::vector<double>{0.0, 1.0});
  }
  if (name == "square") {
    expect_no_params(name, params);
    return std::make_shared<PolynomialInX>("square", std::vector<double>{0.0, 0.0, 1.0});
  }
  if (name == "cube") {
    expect_no_params(name, params);
    return std::make_shared<PolynomialInX>("cube", std::vector<double>{0.0, 0.0, 0.0, 1.0});
  }
  if (name == "poly_k") {
    if (params.empty() || params.size() > 10)
      throw std::invalid_argument("builtin 'poly_k' needs 1 to 10 coefficients (degree <= 9)");
    return std::make_shared<PolynomialInX>("poly_k", std::vector<double>(params.begin(), params.end()));
  }
  if (name == "sine") {
    expect_no_params(name, params);
    return std::make_shared<Sine>();
  }
  if (name == "gauss_bump") {
    expect_no_params(name, params);
    return std::make_shared<GaussBump>();
  }
  if (name == "poly_xt") {
    expect_no_params(name, params);
    return std::make_shared<CubeTimesLinearTime>();
  }
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown test function '" + name + "'; available: " + known);
}

}  // namespace quartic
