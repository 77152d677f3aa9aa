#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace salpeter {

/// Smooth compactly supported initial datum: the classical C-infinity bump
///
///     phi(x) = A exp(-1 / (1 - u^2)),  u = (x - c)/R,  |u| < 1,
///
/// and exactly zero outside [c-R, c+R].  All derivatives vanish at the
/// support edges, so the Fourier transform decays faster than any power.
class Profile {
public:
    Profile(double center, double radius, double amplitude)
        : center_(center), radius_(radius), amplitude_(amplitude) {
        if (!(radius > 0.0))
            throw std::invalid_argument("Profile: radius must be positive, got " +
                                        std::to_string(radius));
        if (!(amplitude > 0.0))
            throw std::invalid_argument("Profile: amplitude must be positive, got " +
                                        std::to_string(amplitude));
    }

    double operator()(double x) const noexcept {
        const double u = (x - center_) / radius_;
        const double s = 1.0 - u * u;
        if (s <= 0.0) return 0.0;
        return amplitude_ * std::exp(-1.0 / s);
    }

    /// Analytic first derivative (compactly supported like the profile itself).
    double derivative(double x) const noexcept {
        const double u = (x - center_) / radius_;
        const double s = 1.0 - u * u;
        if (s <= 0.0) return 0.0;
        return (*this)(x) * (-2.0 * u / (radius_ * s * s));
    }

    double center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }
    double amplitude() const noexcept { return amplitude_; }

    double support_left() const noexcept { return center_ - radius_; }
    double support_right() const noexcept { return center_ + radius_; }

    /// Peak value A/e, attained at the center.
    double max_value() const noexcept { return amplitude_ * std::exp(-1.0); }

    /// Mirror image about the origin; useful for reducing left-exterior
    /// questions to right-exterior ones.
    Profile reflected() const { return Profile(-center_, radius_, amplitude_); }

private:
    double center_;
    double radius_;
    double amplitude_;
};

inline Profile make_bump(double center, double radius, double amplitude) {
    return Profile(center, radius, amplitude);
}

} // namespace salpeter
