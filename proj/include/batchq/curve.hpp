#pragma once

#include <string>
#include <vector>

namespace batchq {

// Deterministic time curve used for arrival rates and for time-varying
// distribution parameters. Constants are degenerate curves, so every
// parameter shares one evaluation path.
class Curve {
public:
    enum class Kind { constant, piecewise_constant, piecewise_linear, sinusoidal };

    static Curve constant(double value);
    // value[i] holds on [breakpoints[i], breakpoints[i+1]); the last value
    // extends to the right. breakpoints[0] must be 0.
    static Curve piecewise_constant(std::vector<double> breakpoints, std::vector<double> values);
    // Linear interpolation between (breakpoints[i], values[i]); constant
    // continuation after the last breakpoint.
    static Curve piecewise_linear(std::vector<double> breakpoints, std::vector<double> values);
    // base + amplitude * sin(omega * t + phase)
    static Curve sinusoidal(double base, double amplitude, double omega, double phase);

    double value(double t) const;
    double integral(double a, double b) const; // closed form, no quadrature
    double min_on(double a, double b) const;
    double max_on(double a, double b) const;

    Kind kind() const noexcept { return kind_; }
    bool is_constant() const noexcept { return kind_ == Kind::constant; }

    // Interior knots where the curve is non-smooth (empty for constant and
    // sinusoidal kinds).
    const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double base() const noexcept { return base_; }
    double amplitude() const noexcept { return amplitude_; }
    double omega() const noexcept { return omega_; }
    double phase() const noexcept { return phase_; }

private:
    Curve() = default;

    Kind kind_ = Kind::constant;
    std::vector<double> breakpoints_;
    std::vector<double> values_;
    double base_ = 0.0;
    double amplitude_ = 0.0;
    double omega_ = 0.0;
    double phase_ = 0.0;
};

// Arrival rate with its domain horizon.
struct RateFunction {
    Curve curve;
    double t_max = 0.0;

    double value(double t) const { return curve.value(t); }
    // Violations as human-readable strings; empty when valid.
    std::vector<double> breakpoints() const { return curve.breakpoints(); }
    std::vector<std::string> check() const;
};

} // namespace batchq
