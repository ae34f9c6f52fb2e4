#pragma once

#include <fftw3.h>

#include <complex>
#include <vector>

#include "histoq/free_particle.hpp"

namespace histoq::testing {

/// Dense-grid unitary evolution of a packet truncated to x > 0, with a hard
/// wall at the origin imposed by odd reflection onto [-L, L). The kinetic
/// step is spectral, so free evolution is exact up to grid resolution and
/// periodic wrap-around.
class HardWallGridOracle {
public:
    HardWallGridOracle(const GaussianPacket& packet, double half_width, int points)
        : half_width_(half_width), n_(points), dx_(2.0 * half_width / points) {
        psi_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            const double x = -half_width_ + dx_ * i;
            if (x > 0.0)
                psi_[static_cast<std::size_t>(i)] = evolved_packet(x, 0.0, packet);
            else if (x < 0.0)
                psi_[static_cast<std::size_t>(i)] = -evolved_packet(-x, 0.0, packet);
            else
                psi_[static_cast<std::size_t>(i)] = 0.0;
        }
        mass_ = packet.mass;
    }

    void evolve(double t) {
        const std::size_t n = psi_.size();
        std::vector<std::complex<double>> freq(n);
        fftw_plan forward = fftw_plan_dft_1d(
            n_, reinterpret_cast<fftw_complex*>(psi_.data()),
            reinterpret_cast<fftw_complex*>(freq.data()), FFTW_FORWARD, FFTW_ESTIMATE);
        fftw_execute(forward);
        fftw_destroy_plan(forward);

        const double dk = M_PI / half_width_;
        for (int i = 0; i < n_; ++i) {
            const int m = i <= n_ / 2 ? i : i - n_;
            const double k = dk * m;
            freq[static_cast<std::size_t>(i)] *=
                std::exp(std::complex<double>(0.0, -k * k * t / (2.0 * mass_)));
        }

        fftw_plan backward = fftw_plan_dft_1d(
            n_, reinterpret_cast<fftw_complex*>(freq.data()),
            reinterpret_cast<fftw_complex*>(psi_.data()), FFTW_BACKWARD, FFTW_ESTIMATE);
        fftw_execute(backward);
        fftw_destroy_plan(backward);
        for (auto& v : psi_) v /= static_cast<double>(n_);
    }

    /// Wavefunction at x > 0 by linear interpolation between grid points.
    std::complex<double> at(double x) const {
        const double pos = (x + half_width_) / dx_;
        const int i = static_cast<int>(pos);
        const double frac = pos - i;
        if (i < 0 || i + 1 >= n_) return 0.0;
        return (1.0 - frac) * psi_[static_cast<std::size_t>(i)] +
               frac * psi_[static_cast<std::size_t>(i) + 1];
    }

private:
    double half_width_;
    int n_;
    double dx_;
    double mass_;
    std::vector<std::complex<double>> psi_;
};

}  // namespace histoq::testing
