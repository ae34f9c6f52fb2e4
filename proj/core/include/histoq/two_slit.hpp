#pragma once

#include <optional>

#include "histoq/quadrature.hpp"

namespace histoq {

/// Plane-wave two-slit setup: slits at y = +/- d/2, detecting screen at
/// distance D, wave number k, constant source amplitude a.
struct TwoSlitGeometry {
    double d;          // slit separation
    double big_d;      // screen distance
    double k;          // wave number
    cdouble a = 1.0;   // source amplitude (arbitrary scale)
};

struct TwoSlitDensities {
    double upper;  // candidate density through the upper slit; can be negative
    double lower;
    double total;  // = |Psi_U + Psi_L|^2, always nonnegative
};

/// Candidate probability densities at screen position y.
TwoSlitDensities two_slit_densities(double y, const TwoSlitGeometry& g);

enum class Slit { Upper, Lower };

/// Candidate probability for the history "through `which`, detected in
/// [y_lo, y_hi]": the integral of the corresponding density.
double two_slit_bin_probability(double y_lo, double y_hi, Slit which, const TwoSlitGeometry& g,
                                const QuadratureSpec& spec = {});

struct BinWidthScan {
    std::optional<double> passing_width;  // smallest tested width with all bins nonnegative
    double fringe_spacing;                // 2 pi D / (k d), the small-angle spacing near the axis
    std::vector<double> tested_widths;    // effective widths after snapping
    std::vector<bool> width_passes;
};

/// Scans uniform bin widths (descending) over [y_lo, y_hi]; each requested
/// width is snapped so the range divides into exactly equal bins, and a width
/// passes when every bin of both slits integrates to >= -(abs quadrature
/// tolerance). Over the central fringes, positivity holds for widths well
/// below the fringe spacing — far less coarse graining than washing out the
/// interference pattern takes. Away from the axis the local fringes stretch
/// and the negative lobes deepen, so wide ranges need wider bins.
BinWidthScan min_lp_binwidth(const TwoSlitGeometry& g, double y_lo, double y_hi,
                             std::span<const double> widths_descending,
                             const QuadratureSpec& spec = {});

}  // namespace histoq
