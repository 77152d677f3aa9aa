#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace salpeter {

/// Uniform periodic grid on [-L, L) together with its exact discrete momentum
/// dual.  The point count must be a power of two (>= 8) so the transform pair
/// stays a plain radix-2 FFT and the momentum lattice p_k = pi k / L is
/// symmetric about zero.
class Grid1D {
public:
    Grid1D(double half_length, Eigen::Index n_points)
        : half_length_(half_length), n_(n_points) {
        if (!(half_length > 0.0))
            throw std::invalid_argument("Grid1D: half_length must be positive, got " +
                                        std::to_string(half_length));
        if (n_points < 8 || (n_points & (n_points - 1)) != 0)
            throw std::invalid_argument("Grid1D: n_points must be a power of two >= 8, got " +
                                        std::to_string(n_points));
    }

    double half_length() const noexcept { return half_length_; }
    Eigen::Index size() const noexcept { return n_; }

    /// Mesh spacing h = 2L/n.
    double spacing() const noexcept { return 2.0 * half_length_ / static_cast<double>(n_); }

    /// Spacing of the dual lattice, pi/L.
    double momentum_spacing() const noexcept {
        return EIGEN_PI / half_length_;
    }

    /// Largest momentum magnitude on the lattice (the Nyquist mode pi/h).
    double nyquist() const noexcept {
        return momentum_spacing() * static_cast<double>(n_ / 2);
    }

    /// x_j = -L + j h.
    double point(Eigen::Index j) const noexcept {
        return -half_length_ + spacing() * static_cast<double>(j);
    }

    Eigen::ArrayXd points() const {
        return Eigen::ArrayXd::LinSpaced(n_, 0.0, static_cast<double>(n_ - 1)) * spacing() -
               half_length_;
    }

    /// Momenta in transform storage order: index m holds p = pi k / L with
    /// k = m for m < n/2 and k = m - n otherwise.
    Eigen::ArrayXd momenta() const {
        Eigen::ArrayXd p(n_);
        const double dp = momentum_spacing();
        for (Eigen::Index m = 0; m < n_; ++m) {
            const Eigen::Index k = (m < n_ / 2) ? m : m - n_;
            p[m] = dp * static_cast<double>(k);
        }
        return p;
    }

    friend bool operator==(const Grid1D& a, const Grid1D& b) noexcept {
        return a.half_length_ == b.half_length_ && a.n_ == b.n_;
    }

private:
    double half_length_;
    Eigen::Index n_;
};

} // namespace salpeter
