#include "salpeter/wave.hpp"

#include "salpeter/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace salpeter {

Interval causal_shadow(Interval support, double t) {
    if (!(support.left <= support.right))
        throw std::invalid_argument("causal_shadow: malformed interval");
    if (!(t >= 0.0))
        throw std::invalid_argument("causal_shadow: time must be >= 0, got " + std::to_string(t));
    return Interval{support.left - t, support.right + t};
}

CauchyData make_cauchy_data(std::function<std::complex<double>(double)> displacement,
                            Interval displacement_support,
                            std::function<std::complex<double>(double)> velocity,
                            std::optional<Interval> velocity_support) {
    if (!(displacement_support.left <= displacement_support.right))
        throw std::invalid_argument("make_cauchy_data: malformed displacement support");

    if (velocity_support) {
        const Interval s = *velocity_support;
        if (!(s.left <= s.right))
            throw std::invalid_argument("make_cauchy_data: malformed velocity support");
        // Spot-check the compactness claim: the velocity must vanish (to
        // rounding) on a few widths either side of the declared interval.
        const double width = std::max(s.right - s.left, 1.0);
        double inside_scale = 0.0;
        for (int k = 0; k <= 32; ++k)
            inside_scale = std::max(
                inside_scale, std::abs(velocity(s.left + (s.right - s.left) * k / 32.0)));
        const double tol = 1e-12 * std::max(inside_scale, 1e-300);
        for (int k = 1; k <= 16; ++k) {
            const double offset = width * k / 4.0;
            if (std::abs(velocity(s.right + offset)) > tol ||
                std::abs(velocity(s.left - offset)) > tol)
                throw std::invalid_argument(
                    "make_cauchy_data: velocity flagged compact but does not vanish outside "
                    "the declared support");
        }
    }

    return CauchyData{std::move(displacement), std::move(velocity), displacement_support,
                      velocity_support};
}

CauchyData salpeter_as_wave(const Profile& profile) {
    CauchyData data;
    data.displacement = [profile](double x) { return std::complex<double>(profile(x), 0.0); };
    data.velocity = [profile](double x) { return time_derivative_at_zero(profile, x); };
    data.displacement_support = Interval{profile.support_left(), profile.support_right()};
    data.velocity_support = std::nullopt; // algebraic 1/x^2 tails: nothing to clip
    return data;
}

std::complex<double> dalembert_evolve(const CauchyData& data, double x, double t,
                                      QuadratureOptions opt) {
    if (!(t >= 0.0))
        throw std::invalid_argument("dalembert_evolve: time must be >= 0, got " +
                                    std::to_string(t));

    const std::complex<double> ripple =
        0.5 * (data.displacement(x - t) + data.displacement(x + t));

    double lo = x - t, hi = x + t;
    if (data.velocity_support) {
        lo = std::max(lo, data.velocity_support->left);
        hi = std::min(hi, data.velocity_support->right);
        if (lo >= hi) return ripple; // window misses the support: exactly no drift term
    }
    if (lo == hi) return ripple;

    const std::complex<double> drift = integrate(data.velocity, lo, hi, opt);
    return ripple + 0.5 * drift;
}

double wave_residual(const std::vector<Field>& history, double tau, double mass) {
    if (history.size() < 3)
        throw std::invalid_argument("wave_residual: need at least three time slices, got " +
                                    std::to_string(history.size()));
    if (!(tau > 0.0))
        throw std::invalid_argument("wave_residual: step must be positive, got " +
                                    std::to_string(tau));

    const Grid1D& grid = history.front().grid;
    for (std::size_t i = 1; i < history.size(); ++i) {
        if (!(history[i].grid == grid))
            throw std::invalid_argument("wave_residual: slices live on different grids");
        const double dt = history[i].time - history[i - 1].time;
        if (std::abs(dt - tau) > 1e-9 * std::max(1.0, std::abs(tau)))
            throw std::invalid_argument("wave_residual: slices are not equally spaced by tau");
    }

    const Eigen::Index n = grid.size();
    const double h = grid.spacing();
    const double scale = history.front().samples.abs().maxCoeff();
    const double m2 = mass * mass;

    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < history.size(); ++i) {
        const Eigen::ArrayXcd& prev = history[i - 1].samples;
        const Eigen::ArrayXcd& here = history[i].samples;
        const Eigen::ArrayXcd& next = history[i + 1].samples;
        for (Eigen::Index j = 0; j < n; ++j) {
            const Eigen::Index jl = (j == 0) ? n - 1 : j - 1;
            const Eigen::Index jr = (j == n - 1) ? 0 : j + 1;
            const std::complex<double> d2t = (next[j] - 2.0 * here[j] + prev[j]) / (tau * tau);
            const std::complex<double> d2x = (here[jr] - 2.0 * here[j] + here[jl]) / (h * h);
            worst = std::max(worst, std::abs(d2t - d2x + m2 * here[j]));
        }
    }
    return worst / (scale > 0.0 ? scale : 1.0);
}

} // namespace salpeter
