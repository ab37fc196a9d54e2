#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qt3 {

/// Thrown when a field or jet primitive is evaluated outside its domain.
/// Carries the offending value (the operand of the primitive, or the state y
/// once rethrown by ScalarField::eval).
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double at)
      : std::runtime_error(what), at_(at) {}

  double at() const noexcept { return at_; }

 private:
  double at_;
};

/// Degree-2 truncated Taylor jet: value, first derivative, and raw second
/// derivative (not divided by 2).
struct Jet2 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Seed jet of the identity function at y.
inline Jet2 jet_lift(double y) { return {y, 1.0, 0.0}; }

/// Jet of a constant.
inline Jet2 jet_const(double c) { return {c, 0.0, 0.0}; }

inline Jet2 operator+(const Jet2& x, const Jet2& y) {
  return {x.v + y.v, x.d1 + y.d1, x.d2 + y.d2};
}

inline Jet2 operator-(const Jet2& x, const Jet2& y) {
  return {x.v - y.v, x.d1 - y.d1, x.d2 - y.d2};
}

inline Jet2 operator-(const Jet2& x) { return {-x.v, -x.d1, -x.d2}; }

// Leibniz: (fg)'' = f g'' + 2 f' g' + f'' g. The d2 grouping is symmetric
// in x and y so that swapping operands is bit-for-bit identical.
inline Jet2 operator*(const Jet2& x, const Jet2& y) {
  return {x.v * y.v, x.v * y.d1 + x.d1 * y.v,
          (x.v * y.d2 + x.d2 * y.v) + 2.0 * x.d1 * y.d1};
}

inline Jet2 operator/(const Jet2& x, const Jet2& y) {
  if (y.v == 0.0) {
    throw EvaluationError("jet division by zero value", y.v);
  }
  const double v = x.v / y.v;
  const double d1 = (x.d1 - v * y.d1) / y.v;
  const double d2 = (x.d2 - v * y.d2 - 2.0 * d1 * y.d1) / y.v;
  return {v, d1, d2};
}

// Scaling by a constant.
inline Jet2 operator*(double s, const Jet2& x) {
  return {s * x.v, s * x.d1, s * x.d2};
}
inline Jet2 operator*(const Jet2& x, double s) { return s * x; }
inline Jet2 operator/(const Jet2& x, double s) { return (1.0 / s) * x; }
inline Jet2 operator+(const Jet2& x, double c) { return {x.v + c, x.d1, x.d2}; }
inline Jet2 operator+(double c, const Jet2& x) { return x + c; }
inline Jet2 operator-(const Jet2& x, double c) { return {x.v - c, x.d1, x.d2}; }
inline Jet2 operator-(double c, const Jet2& x) {
  return {c - x.v, -x.d1, -x.d2};
}
inline Jet2 operator/(double c, const Jet2& x) { return jet_const(c) / x; }

// Unary chain rule: g(x) -> (g(v), g'(v) d1, g''(v) d1^2 + g'(v) d2).
inline Jet2 jet_unary(const Jet2& x, double g, double gp, double gpp) {
  return {g, gp * x.d1, gpp * x.d1 * x.d1 + gp * x.d2};
}

inline Jet2 exp(const Jet2& x) {
  const double e = std::exp(x.v);
  return jet_unary(x, e, e, e);
}

inline Jet2 log(const Jet2& x) {
  if (!(x.v > 0.0)) {
    throw EvaluationError("jet log of non-positive value", x.v);
  }
  const double inv = 1.0 / x.v;
  return jet_unary(x, std::log(x.v), inv, -inv * inv);
}

inline Jet2 sin(const Jet2& x) {
  const double s = std::sin(x.v);
  const double c = std::cos(x.v);
  return jet_unary(x, s, c, -s);
}

inline Jet2 cos(const Jet2& x) {
  const double s = std::sin(x.v);
  const double c = std::cos(x.v);
  return jet_unary(x, c, -s, -c);
}

/// Integer power, n >= 0.
inline Jet2 pow(const Jet2& x, int n) {
  if (n < 0) {
    throw EvaluationError("jet pow requires a non-negative exponent",
                          static_cast<double>(n));
  }
  if (n == 0) return jet_const(1.0);
  const double pm2 = (n >= 2) ? std::pow(x.v, n - 2) : 0.0;
  const double pm1 = (n >= 2) ? pm2 * x.v : std::pow(x.v, n - 1);
  const double p = pm1 * x.v;
  return jet_unary(x, p, n * pm1, n * (n - 1) * pm2);
}

/// A scalar field f with second-order derivative information obtained by
/// propagating a degree-2 jet through its defining expression. An optional
/// hand-coded derivative triple may be attached for cross-checking in tests.
class ScalarField {
 public:
  using JetFn = std::function<Jet2(const Jet2&)>;
  using TripleFn = std::function<std::array<double, 3>(double)>;

  ScalarField(std::string name, JetFn fn, TripleFn hand = nullptr)
      : name_(std::move(name)), fn_(std::move(fn)), hand_(std::move(hand)) {}

  /// The jet of f at y: (f(y), f'(y), f''(y)).
  Jet2 eval(double y) const {
    try {
      return fn_(jet_lift(y));
    } catch (const EvaluationError& e) {
      throw EvaluationError(std::string(e.what()) + " [field '" + name_ +
                                "' at y=" + std::to_string(y) + "]",
                            y);
    }
  }

  double value(double y) const { return eval(y).v; }
  double operator()(double y) const { return value(y); }

  const std::string& name() const noexcept { return name_; }

  bool has_hand_triple() const noexcept { return static_cast<bool>(hand_); }

  std::array<double, 3> hand_triple(double y) const {
    if (!hand_) {
      throw std::logic_error("field '" + name_ + "' has no hand-coded triple");
    }
    return hand_(y);
  }

 private:
  std::string name_;
  JetFn fn_;
  TripleFn hand_;
};

/// (f(y), f'(y), f''(y)) of a field, exact up to floating-point rounding.
inline std::array<double, 3> derivatives_of(const ScalarField& field,
                                            double y) {
  const Jet2 j = field.eval(y);
  return {j.v, j.d1, j.d2};
}

}  // namespace qt3
