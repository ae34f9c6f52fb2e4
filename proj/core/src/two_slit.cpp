#include "histoq/two_slit.hpp"

#include <cmath>

#include "histoq/errors.hpp"

namespace histoq {

namespace {

void check_geometry(const TwoSlitGeometry& g) {
    if (!(g.d > 0.0) || !(g.big_d > 0.0) || !(g.k > 0.0))
        throw InvalidInput("TwoSlitGeometry: d, D, k must be positive");
}

double path_upper(double y, const TwoSlitGeometry& g) {
    const double dy = 0.5 * g.d - y;
    return std::sqrt(dy * dy + g.big_d * g.big_d);
}

double path_lower(double y, const TwoSlitGeometry& g) {
    const double dy = 0.5 * g.d + y;
    return std::sqrt(dy * dy + g.big_d * g.big_d);
}

}  // namespace

TwoSlitDensities two_slit_densities(double y, const TwoSlitGeometry& g) {
    check_geometry(g);
    const double su = path_upper(y, g);
    const double sl = path_lower(y, g);
    const double a2 = std::norm(g.a);
    const double cross = std::cos(g.k * (sl - su));
    TwoSlitDensities out;
    out.upper = (a2 / su) * (1.0 / su + cross / sl);
    out.lower = (a2 / sl) * (1.0 / sl + cross / su);
    out.total = a2 * (1.0 / (su * su) + 1.0 / (sl * sl) + 2.0 * cross / (su * sl));
    return out;
}

double two_slit_bin_probability(double y_lo, double y_hi, Slit which, const TwoSlitGeometry& g,
                                const QuadratureSpec& spec) {
    check_geometry(g);
    if (!(y_lo < y_hi)) throw InvalidInput("two_slit_bin_probability: empty interval");
    auto density = [&](double y) {
        const TwoSlitDensities w = two_slit_densities(y, g);
        return which == Slit::Upper ? w.upper : w.lower;
    };
    // Half-fringe panel seeds keep whole oscillations visible to the estimator.
    const double fringe = 2.0 * M_PI * g.big_d / (g.k * g.d);
    std::vector<double> edges;
    for (double y = std::floor(y_lo / (0.5 * fringe)) * 0.5 * fringe; y < y_hi; y += 0.5 * fringe)
        if (y > y_lo) edges.push_back(y);
    const auto result = integrate(density, y_lo, y_hi, spec, edges);
    if (!result.converged) throw NumericalFailure("two_slit_bin_probability: quadrature did not converge");
    return result.value;
}

BinWidthScan min_lp_binwidth(const TwoSlitGeometry& g, double y_lo, double y_hi,
                             std::span<const double> widths_descending,
                             const QuadratureSpec& spec) {
    check_geometry(g);
    if (widths_descending.empty()) throw InvalidInput("min_lp_binwidth: empty width list");
    for (std::size_t i = 1; i < widths_descending.size(); ++i)
        if (widths_descending[i] >= widths_descending[i - 1])
            throw InvalidInput("min_lp_binwidth: widths must be strictly descending");

    BinWidthScan scan;
    scan.fringe_spacing = 2.0 * M_PI * g.big_d / (g.k * g.d);
    const double range = y_hi - y_lo;
    for (double requested : widths_descending) {
        if (!(requested > 0.0)) throw InvalidInput("min_lp_binwidth: widths must be positive");
        // exactly uniform bins: snap the width so the range divides evenly,
        // otherwise the clipped last bin is an arbitrarily thin sliver
        const long bins = std::max<long>(1, std::lround(range / requested));
        const double width = range / static_cast<double>(bins);
        bool pass = true;
        for (long i = 0; i < bins && pass; ++i) {
            const double lo = y_lo + width * static_cast<double>(i);
            const double hi = y_lo + width * static_cast<double>(i + 1);
            for (Slit s : {Slit::Upper, Slit::Lower}) {
                if (two_slit_bin_probability(lo, hi, s, g, spec) < -spec.abs_tol) {
                    pass = false;
                    break;
                }
            }
        }
        scan.tested_widths.push_back(width);
        scan.width_passes.push_back(pass);
        if (pass && (!scan.passing_width || width < *scan.passing_width))
            scan.passing_width = width;
    }
    return scan;
}

}  // namespace histoq
