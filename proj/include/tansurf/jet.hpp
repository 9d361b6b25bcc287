#pragma once

#include <vector>

#include "tansurf/errors.hpp"

namespace tansurf {

/// Truncated Taylor polynomial of a scalar function at a base parameter.
///
/// Coefficient j stores f^(j)(t0)/j!, so the jet of f at t0 of order K is
/// (f(t0), f'(t0), f''(t0)/2, ..., f^(K)(t0)/K!). Arithmetic is exact
/// truncated-polynomial arithmetic; elementary functions use the standard
/// series recurrences.
class Jet {
public:
    Jet() : base_(0.0), c_(1, 0.0) {}
    Jet(double base, std::vector<double> coeffs);

    static Jet constant(int order, double base, double value);
    /// The identity function t at the base point: (base, 1, 0, ..., 0).
    static Jet variable(int order, double base);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double base() const { return base_; }
    double value() const { return c_[0]; }
    double coeff(int j) const { return c_[static_cast<std::size_t>(j)]; }
    double& coeff(int j) { return c_[static_cast<std::size_t>(j)]; }
    const std::vector<double>& coeffs() const { return c_; }

    /// j-th derivative value, i.e. j! * coeff(j).
    double derivative(int j) const;

    Jet operator-() const;

private:
    double base_;
    std::vector<double> c_;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);

Jet operator+(const Jet& a, double b);
Jet operator+(double a, const Jet& b);
Jet operator-(const Jet& a, double b);
Jet operator-(double a, const Jet& b);
Jet operator*(const Jet& a, double b);
Jet operator*(double a, const Jet& b);
Jet operator/(const Jet& a, double b);
Jet operator/(double a, const Jet& b);

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet tan(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet tanh(const Jet& a);
Jet abs(const Jet& a);
/// Integer power by repeated multiplication; valid for any base jet.
Jet powi(const Jet& a, long long n);
Jet pow(const Jet& a, const Jet& b);

/// Jet of f' from the jet of f: c_j <- (j+1) c_{j+1}. Order drops by one.
Jet derivative_jet(const Jet& a);
/// Drop coefficients beyond the given order.
Jet truncated(const Jet& a, int order);

/// max |c_j|, used for adaptive step-size control over jet states.
double jet_norm(const Jet& a);
inline double jet_norm(double a) { return a < 0 ? -a : a; }

using JetVec = std::vector<Jet>;

JetVec derivative_jet(const JetVec& v);
JetVec truncated(const JetVec& v, int order);
/// Constant terms of every component.
std::vector<double> values(const JetVec& v);

} // namespace tansurf
