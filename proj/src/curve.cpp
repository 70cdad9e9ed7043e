#include "batchq/curve.hpp"

#include "batchq/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace batchq {

namespace {

void require_grid(const std::vector<double>& breaks, const std::vector<double>& values) {
    if (breaks.empty() || breaks.size() != values.size())
        throw DomainError("piecewise curve needs matching, nonempty breakpoints and values");
    if (breaks.front() != 0.0)
        throw DomainError("first breakpoint must be 0");
    for (std::size_t i = 1; i < breaks.size(); ++i)
        if (!(breaks[i] > breaks[i - 1]))
            throw DomainError("breakpoints must be strictly increasing");
}

// Index of the piece containing t (clamped to the last piece).
std::size_t piece_index(const std::vector<double>& breaks, double t) {
    auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
    if (it == breaks.begin())
        return 0;
    return static_cast<std::size_t>(it - breaks.begin()) - 1;
}

} // namespace

Curve Curve::constant(double value) {
    Curve c;
    c.kind_ = Kind::constant;
    c.base_ = value;
    return c;
}

Curve Curve::piecewise_constant(std::vector<double> breakpoints, std::vector<double> values) {
    require_grid(breakpoints, values);
    Curve c;
    c.kind_ = Kind::piecewise_constant;
    c.breakpoints_ = std::move(breakpoints);
    c.values_ = std::move(values);
    return c;
}

Curve Curve::piecewise_linear(std::vector<double> breakpoints, std::vector<double> values) {
    require_grid(breakpoints, values);
    Curve c;
    c.kind_ = Kind::piecewise_linear;
    c.breakpoints_ = std::move(breakpoints);
    c.values_ = std::move(values);
    return c;
}

Curve Curve::sinusoidal(double base, double amplitude, double omega, double phase) {
    Curve c;
    c.kind_ = Kind::sinusoidal;
    c.base_ = base;
    c.amplitude_ = amplitude;
    c.omega_ = omega;
    c.phase_ = phase;
    return c;
}

double Curve::value(double t) const {
    switch (kind_) {
    case Kind::constant:
        return base_;
    case Kind::piecewise_constant: {
        if (t < 0.0)
            return values_.front();
        return values_[piece_index(breakpoints_, t)];
    }
    case Kind::piecewise_linear: {
        if (t <= breakpoints_.front())
            return values_.front();
        if (t >= breakpoints_.back())
            return values_.back();
        std::size_t i = piece_index(breakpoints_, t);
        double x0 = breakpoints_[i], x1 = breakpoints_[i + 1];
        double y0 = values_[i], y1 = values_[i + 1];
        return y0 + (y1 - y0) * (t - x0) / (x1 - x0);
    }
    case Kind::sinusoidal:
        return base_ + amplitude_ * std::sin(omega_ * t + phase_);
    }
    return 0.0;
}

double Curve::integral(double a, double b) const {
    if (b < a)
        return -integral(b, a);
    switch (kind_) {
    case Kind::constant:
        return base_ * (b - a);
    case Kind::piecewise_constant: {
        double total = 0.0;
        std::size_t n = breakpoints_.size();
        for (std::size_t i = 0; i < n; ++i) {
            double lo = std::max(a, breakpoints_[i]);
            double hi = (i + 1 < n) ? std::min(b, breakpoints_[i + 1]) : b;
            if (hi > lo)
                total += values_[i] * (hi - lo);
        }
        if (a < breakpoints_.front())
            total += values_.front() * (std::min(b, breakpoints_.front()) - a);
        return total;
    }
    case Kind::piecewise_linear: {
        // Trapezoid on each overlapped sub-interval; value() is exact there.
        double total = 0.0;
        std::vector<double> cuts;
        cuts.push_back(a);
        for (double x : breakpoints_)
            if (x > a && x < b)
                cuts.push_back(x);
        cuts.push_back(b);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            double lo = cuts[i], hi = cuts[i + 1];
            total += 0.5 * (value(lo) + value(hi)) * (hi - lo);
        }
        return total;
    }
    case Kind::sinusoidal: {
        if (omega_ == 0.0)
            return (base_ + amplitude_ * std::sin(phase_)) * (b - a);
        return base_ * (b - a) +
               amplitude_ / omega_ * (std::cos(omega_ * a + phase_) - std::cos(omega_ * b + phase_));
    }
    }
    return 0.0;
}

double Curve::min_on(double a, double b) const {
    switch (kind_) {
    case Kind::constant:
        return base_;
    case Kind::piecewise_constant: {
        double m = std::numeric_limits<double>::infinity();
        std::size_t n = breakpoints_.size();
        for (std::size_t i = 0; i < n; ++i) {
            double lo = breakpoints_[i];
            double hi = (i + 1 < n) ? breakpoints_[i + 1] : std::numeric_limits<double>::infinity();
            if (hi > a && lo <= b)
                m = std::min(m, values_[i]);
        }
        if (a < breakpoints_.front())
            m = std::min(m, values_.front());
        return m;
    }
    case Kind::piecewise_linear: {
        double m = std::min(value(a), value(b));
        for (double x : breakpoints_)
            if (x > a && x < b)
                m = std::min(m, value(x));
        return m;
    }
    case Kind::sinusoidal: {
        double m = std::min(value(a), value(b));
        if (omega_ != 0.0) {
            // Interior critical points: omega*t + phase = pi/2 + k*pi.
            const double pi = 3.14159265358979323846;
            double k0 = std::ceil((omega_ * std::min(a, b) + phase_ - pi / 2) / pi);
            for (double k = k0;; k += 1.0) {
                double t = (pi / 2 + k * pi - phase_) / omega_;
                if (t > std::max(a, b))
                    break;
                if (t >= std::min(a, b))
                    m = std::min(m, value(t));
            }
        }
        return m;
    }
    }
    return 0.0;
}

double Curve::max_on(double a, double b) const {
    switch (kind_) {
    case Kind::constant:
        return base_;
    case Kind::piecewise_constant: {
        double m = -std::numeric_limits<double>::infinity();
        std::size_t n = breakpoints_.size();
        for (std::size_t i = 0; i < n; ++i) {
            double lo = breakpoints_[i];
            double hi = (i + 1 < n) ? breakpoints_[i + 1] : std::numeric_limits<double>::infinity();
            if (hi > a && lo <= b)
                m = std::max(m, values_[i]);
        }
        if (a < breakpoints_.front())
            m = std::max(m, values_.front());
        return m;
    }
    case Kind::piecewise_linear: {
        double m = std::max(value(a), value(b));
        for (double x : breakpoints_)
            if (x > a && x < b)
                m = std::max(m, value(x));
        return m;
    }
    case Kind::sinusoidal:
        // base + |amplitude| is always a valid majorant.
        return base_ + std::fabs(amplitude_);
    }
    return 0.0;
}

std::vector<std::string> RateFunction::check() const {
    std::vector<std::string> issues;
    if (!(t_max > 0.0))
        issues.push_back("rate: horizon must be positive");
    if (curve.kind() == Curve::Kind::sinusoidal) {
        if (!(curve.base() >= curve.amplitude()) || !(curve.amplitude() >= 0.0))
            issues.push_back("rate: sinusoidal curve needs base >= amplitude >= 0");
    }
    // Exact min over the horizon for the piecewise kinds, dense grid besides.
    double lo = curve.min_on(0.0, t_max);
    if (lo < 0.0)
        issues.push_back("rate: negative value on [0, horizon]");
    const int grid = 512;
    for (int i = 0; i <= grid; ++i) {
        double t = t_max * static_cast<double>(i) / grid;
        if (curve.value(t) < 0.0) {
            issues.push_back("rate: negative value on dense grid");
            break;
        }
    }
    return issues;
}

} // namespace batchq
