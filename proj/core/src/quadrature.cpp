#include "histoq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace histoq {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

template <typename T>
struct PanelEstimate {
    T kronrod;
    double error;
};

template <typename T, typename F>
PanelEstimate<T> gk15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const T fc = f(center);
    T kronrod = kWgk[7] * fc;
    T gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const T f1 = f(center - dx);
        const T f2 = f(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

template <typename T, typename F>
QuadResult<T> adaptive(const F& f, double a, double b, const QuadratureSpec& spec,
                       std::span<const double> breakpoints) {
    struct Panel {
        double a, b, error;
        T value;
        bool operator<(const Panel& o) const { return error < o.error; }
    };

    std::vector<double> edges;
    edges.push_back(a);
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    if (static_cast<int>(edges.size()) - 1 > spec.max_panels)
        throw NumericalFailure("integrate: more initial breakpoints than the panel budget");

    std::priority_queue<Panel> queue;
    T total{};
    double total_error = 0.0;
    int panels = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const auto est = gk15<T>(f, edges[i], edges[i + 1]);
        queue.push({edges[i], edges[i + 1], est.error, est.kronrod});
        total += est.kronrod;
        total_error += est.error;
        ++panels;
    }

    auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

    while (total_error > tolerance() && panels < spec.max_panels) {
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // panel is at rounding width; keep its estimate and stop splitting it
            queue.push({worst.a, worst.b, 0.0, worst.value});
            continue;
        }
        const auto left = gk15<T>(f, worst.a, mid);
        const auto right = gk15<T>(f, mid, worst.b);
        total += left.kronrod + right.kronrod - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push({worst.a, mid, left.error, left.kronrod});
        queue.push({mid, worst.b, right.error, right.kronrod});
        ++panels;
    }

    return {total, total_error, total_error <= tolerance(), panels};
}

}  // namespace

QuadResult<double> integrate(const std::function<double(double)>& f, double a, double b,
                             const QuadratureSpec& spec, std::span<const double> breakpoints) {
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0, true, 0};
        throw InvalidInput("integrate: interval ends out of order");
    }
    return adaptive<double>(f, a, b, spec, breakpoints);
}

QuadResult<std::complex<double>> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureSpec& spec, std::span<const double> breakpoints) {
    if (!(a < b)) {
        if (a == b) return {{0.0, 0.0}, 0.0, true, 0};
        throw InvalidInput("integrate_complex: interval ends out of order");
    }
    return adaptive<std::complex<double>>(f, a, b, spec, breakpoints);
}

std::vector<double> equal_phase_breakpoints(double a, double b, double stationary_point,
                                            double phase_coefficient, int max_edges) {
    std::vector<double> edges;
    if (phase_coefficient <= 0.0) return edges;
    // |w| (x - x0)^2 advances by pi between consecutive edges
    const double w = phase_coefficient;
    auto emit_side = [&](double sign) {
        const double reach = sign > 0 ? b - stationary_point : stationary_point - a;
        if (reach <= 0.0) return;
        for (int k = 1; static_cast<int>(edges.size()) < max_edges; ++k) {
            const double r = std::sqrt(M_PI * k / w);
            if (r >= reach) break;
            edges.push_back(stationary_point + sign * r);
        }
    };
    emit_side(+1.0);
    emit_side(-1.0);
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace histoq
