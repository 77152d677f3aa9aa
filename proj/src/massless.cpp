#include "salpeter/massless.hpp"

#include "salpeter/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace salpeter {

namespace {

using namespace std::complex_literals;

void require_initial(const Field& field, const char* where) {
    if (field.time != 0.0)
        throw std::invalid_argument(std::string(where) + ": expected an initial field (time 0), got time " +
                                    std::to_string(field.time));
}

void require_forward_time(double t, const char* where) {
    if (!(t >= 0.0))
        throw std::invalid_argument(std::string(where) + ": time must be >= 0, got " +
                                    std::to_string(t));
}

} // namespace

Field evolve_massless(const Field& field0, double t) {
    require_initial(field0, "evolve_massless");
    require_forward_time(t, "evolve_massless");

    Spectrum spectrum = forward_transform(field0);
    const Eigen::ArrayXd p = field0.grid.momenta();
    for (Eigen::Index m = 0; m < p.size(); ++m) {
        const double phase = -std::abs(p[m]) * t;
        spectrum.coefficients[m] *= std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return inverse_transform(spectrum, t);
}

MoverPair split_movers(const Field& field0) {
    require_initial(field0, "split_movers");

    Spectrum spectrum = forward_transform(field0);
    const Eigen::ArrayXd p = field0.grid.momenta();

    Spectrum right{field0.grid, Eigen::ArrayXcd::Zero(p.size())};
    Spectrum left{field0.grid, Eigen::ArrayXcd::Zero(p.size())};
    for (Eigen::Index m = 0; m < p.size(); ++m) {
        if (p[m] > 0.0)
            right.coefficients[m] = spectrum.coefficients[m];
        else if (p[m] < 0.0)
            left.coefficients[m] = spectrum.coefficients[m];
        else {
            right.coefficients[m] = 0.5 * spectrum.coefficients[m];
            left.coefficients[m] = 0.5 * spectrum.coefficients[m];
        }
    }
    return MoverPair{inverse_transform(right), inverse_transform(left)};
}

double hilbert_principal_value(const Profile& profile, double u, QuadratureOptions opt) {
    const double zmax = profile.radius() + std::abs(u - profile.center());
    // The integrand tends to -2 phi0'(u) as z -> 0; quadrature nodes are
    // strictly interior, so no special handling is needed at the origin.
    return integrate(
        [&](double z) { return (profile(u - z) - profile(u + z)) / z; }, 0.0, zmax, opt);
}

std::complex<double> cauchy_kernel_evolve(const Profile& profile, double x, double t,
                                          QuadratureOptions opt) {
    require_forward_time(t, "cauchy_kernel_evolve");
    const double bulk = 0.5 * (profile(x - t) + profile(x + t));
    const double tails =
        hilbert_principal_value(profile, x - t, opt) - hilbert_principal_value(profile, x + t, opt);
    return bulk + (0.5i / std::numbers::pi) * tails;
}

std::complex<double> time_derivative_at_zero(const Profile& profile, double x,
                                             QuadratureOptions opt) {
    const double zmax = profile.radius() + std::abs(x - profile.center());
    const double here = profile(x);
    // Second symmetric difference under the kernel 1/z^2; subtracting the
    // local value twice renders the origin removable, at the cost of the
    // explicit boundary term -2 phi0(x)/zmax.
    const double core = integrate(
        [&](double z) { return (profile(x + z) + profile(x - z) - 2.0 * here) / (z * z); }, 0.0,
        zmax, opt);
    return std::complex<double>(0.0, (core - 2.0 * here / zmax) / std::numbers::pi);
}

std::vector<std::pair<double, double>> exterior_derivative_positivity_scan(
    const Profile& profile, const std::vector<double>& points, QuadratureOptions opt) {
    std::vector<std::pair<double, double>> scan;
    scan.reserve(points.size());
    for (double x : points) {
        if (std::abs(x - profile.center()) <= profile.radius())
            throw std::invalid_argument(
                "exterior_derivative_positivity_scan: point " + std::to_string(x) +
                " lies inside the profile support [" + std::to_string(profile.support_left()) +
                ", " + std::to_string(profile.support_right()) + "]");
        scan.emplace_back(x, time_derivative_at_zero(profile, x, opt).imag());
    }
    return scan;
}

} // namespace salpeter
