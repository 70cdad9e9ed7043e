#include "batchq/quadrature.hpp"

#include "batchq/error.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace batchq {

double LatticePmf::total_mass() const {
    double s = 0.0;
    for (double m : masses)
        s += m;
    return s;
}

double LatticePmf::mean() const {
    double s = 0.0;
    for (std::size_t i = 0; i < masses.size(); ++i)
        s += masses[i] * static_cast<double>(offset + static_cast<long long>(i));
    return s;
}

double LatticePmf::variance() const {
    double mu = mean();
    double s = 0.0;
    for (std::size_t i = 0; i < masses.size(); ++i) {
        double x = static_cast<double>(offset + static_cast<long long>(i)) - mu;
        s += masses[i] * x * x;
    }
    return s;
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
constexpr double kK15Nodes[15] = {
    0.0,
    0.2077849550078984676006894, -0.2077849550078984676006894,
    0.4058451513773971669066064, -0.4058451513773971669066064,
    0.5860872354676911302941448, -0.5860872354676911302941448,
    0.7415311855993944398638648, -0.7415311855993944398638648,
    0.8648644233597690727897128, -0.8648644233597690727897128,
    0.9491079123427585245261897, -0.9491079123427585245261897,
    0.9914553711208126392068547, -0.9914553711208126392068547};

constexpr double kK15Weights[15] = {
    0.2094821410847278280129992,
    0.2044329400752988924141620, 0.2044329400752988924141620,
    0.1903505780647854099132564, 0.1903505780647854099132564,
    0.1690047266392679028265834, 0.1690047266392679028265834,
    0.1406532597155259187451896, 0.1406532597155259187451896,
    0.1047900103222501838398763, 0.1047900103222501838398763,
    0.0630920926299785532907007, 0.0630920926299785532907007,
    0.0229353220105292249637320, 0.0229353220105292249637320};

// Gauss weights apply to the node subset {0, 3, 4, 7, 8, 11, 12}.
constexpr double kG7Weights[7] = {
    0.4179591836734693877551020,
    0.3818300505051189449503698, 0.3818300505051189449503698,
    0.2797053914892766679014678, 0.2797053914892766679014678,
    0.1294849661688696932706114, 0.1294849661688696932706114};

constexpr int kG7Index[7] = {0, 3, 4, 7, 8, 11, 12};

struct Panel {
    double a, b;
    double value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 15; ++i)
        fv[i] = f(mid + half * kK15Nodes[i]);
    double k15 = 0.0;
    for (int i = 0; i < 15; ++i)
        k15 += kK15Weights[i] * fv[i];
    double g7 = 0.0;
    for (int i = 0; i < 7; ++i)
        g7 += kG7Weights[i] * fv[kG7Index[i]];
    k15 *= half;
    g7 *= half;
    double diff = std::fabs(k15 - g7);
    // Standard QUADPACK-style sharpening of the raw G-K difference.
    double err = diff;
    if (diff > 0.0)
        err = std::pow(200.0 * diff, 1.5);
    if (err > diff)
        err = diff;
    if (err < 1e-300)
        err = diff;
    return Panel{a, b, k15, std::max(err, 1e-18 * std::fabs(k15))};
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 std::span<const double> breakpoints, std::size_t max_panels) {
    if (!(a <= b))
        throw DomainError("integrate: requires a <= b");
    if (a == b)
        return 0.0;

    std::vector<double> cuts;
    cuts.push_back(a);
    for (double x : breakpoints)
        if (x > a && x < b)
            cuts.push_back(x);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::priority_queue<Panel> panels;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = evaluate_panel(f, cuts[i], cuts[i + 1]);
        total += p.value;
        total_err += p.err;
        panels.push(p);
    }

    while (total_err > tol * std::max(1.0, std::fabs(total))) {
        if (panels.size() >= max_panels)
            throw ConvergenceError("integrate: panel limit reached", total, total_err);
        Panel worst = panels.top();
        panels.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval is at floating-point resolution; accept what we have.
            panels.push(worst);
            break;
        }
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        panels.push(left);
        panels.push(right);
    }
    return total;
}

LatticePmf poisson_pmf(double mean, double eps) {
    if (mean < 0.0 || !std::isfinite(mean))
        throw DomainError("poisson_pmf: mean must be finite and nonnegative");
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainError("poisson_pmf: eps must be in (0, 1)");

    LatticePmf out;
    if (mean == 0.0) {
        out.offset = 0;
        out.masses = {1.0};
        out.truncation_error = 0.0;
        return out;
    }

    const long long mode = static_cast<long long>(std::floor(mean));
    const double log_pmode =
        static_cast<double>(mode) * std::log(mean) - mean - std::lgamma(static_cast<double>(mode) + 1.0);
    const double pmode = std::exp(log_pmode);

    // Grow the window around the mode, always taking the heavier frontier,
    // until the retained mass certifies the tail.
    std::vector<double> down; // mode-1, mode-2, ...
    std::vector<double> up;   // mode+1, mode+2, ...
    double down_next = (mode >= 1) ? pmode * static_cast<double>(mode) / mean : 0.0;
    double up_next = pmode * mean / static_cast<double>(mode + 1);
    double kept = pmode;
    long long lo = mode, hi = mode;
    while (1.0 - kept > eps) {
        bool take_down = (lo > 0) && (down_next >= up_next);
        if (take_down) {
            down.push_back(down_next);
            kept += down_next;
            --lo;
            down_next = (lo >= 1) ? down_next * static_cast<double>(lo) / mean : 0.0;
        } else {
            up.push_back(up_next);
            kept += up_next;
            ++hi;
            up_next = up_next * mean / static_cast<double>(hi + 1);
        }
        if (hi - lo > 100000000LL)
            throw ResourceError("poisson_pmf: window growth runaway");
    }

    out.offset = lo;
    out.masses.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < down.size(); ++i)
        out.masses[down.size() - 1 - i] = down[i];
    out.masses[down.size()] = pmode;
    for (std::size_t i = 0; i < up.size(); ++i)
        out.masses[down.size() + 1 + i] = up[i];
    out.truncation_error = std::max(0.0, 1.0 - kept);
    return out;
}

LatticePmf convolve_scaled(std::span<const std::pair<long long, double>> terms, double eps,
                           std::size_t support_cap) {
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainError("convolve_scaled: eps must be in (0, 1)");
    LatticePmf acc;
    acc.offset = 0;
    acc.masses = {1.0};
    acc.truncation_error = 0.0;
    if (terms.empty())
        return acc;

    const double per_term = eps / static_cast<double>(terms.size());
    for (const auto& [scale, mean] : terms) {
        if (scale < 1)
            throw DomainError("convolve_scaled: scales must be >= 1");
        if (mean < 0.0)
            throw DomainError("convolve_scaled: means must be >= 0");
        LatticePmf part = poisson_pmf(mean, per_term);

        // Spread the Poisson support onto the scale-strided lattice.
        std::size_t spread = (part.masses.size() - 1) * static_cast<std::size_t>(scale) + 1;
        std::size_t out_len = acc.masses.size() + spread - 1;
        if (out_len > support_cap)
            throw ResourceError("convolve_scaled: support exceeds cap");
        std::vector<double> next(out_len, 0.0);
        for (std::size_t i = 0; i < part.masses.size(); ++i) {
            double pm = part.masses[i];
            if (pm == 0.0)
                continue;
            std::size_t shift = i * static_cast<std::size_t>(scale);
            for (std::size_t jdx = 0; jdx < acc.masses.size(); ++jdx)
                next[jdx + shift] += acc.masses[jdx] * pm;
        }
        acc.offset += part.offset * scale;
        acc.masses = std::move(next);
    }
    acc.truncation_error = std::max(0.0, 1.0 - acc.total_mass());
    return acc;
}

} // namespace batchq
