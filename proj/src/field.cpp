#include "salpeter/field.hpp"

#include "salpeter/errors.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <string>

namespace salpeter {

namespace {

Eigen::FFT<double>& fft_engine() {
    thread_local Eigen::FFT<double> fft;
    return fft;
}

// (-1)^m twist that converts between FFT indexing (origin at the first
// sample) and the symmetric box [-L, L) (origin at the centre):
// exp(-i p_m x_j) = (-1)^k exp(-2 pi i k j / n) with k = k_m, and since n is
// even, (-1)^k = (-1)^m in storage order.
void apply_alternating_sign(Eigen::ArrayXcd& v) {
    for (Eigen::Index m = 1; m < v.size(); m += 2) v[m] = -v[m];
}

constexpr double sqrt_two_pi = 2.5066282746310005024;

} // namespace

Field sample(const Profile& profile, const Grid1D& grid) {
    const double margin = 4.0 * grid.spacing();
    if (profile.support_left() < -grid.half_length() + margin ||
        profile.support_right() > grid.half_length() - margin)
        throw domain_too_small(
            "sample: support [" + std::to_string(profile.support_left()) + ", " +
            std::to_string(profile.support_right()) + "] does not fit inside [" +
            std::to_string(-grid.half_length()) + ", " + std::to_string(grid.half_length()) +
            ") with a four-cell margin");

    Field field{grid, Eigen::ArrayXcd(grid.size()), 0.0};
    for (Eigen::Index j = 0; j < grid.size(); ++j)
        field.samples[j] = profile(grid.point(j));
    return field;
}

Spectrum forward_transform(const Field& field) {
    const Eigen::Index n = field.grid.size();
    Eigen::VectorXcd in = field.samples.matrix();
    Eigen::VectorXcd out(n);
    fft_engine().fwd(out, in);

    Spectrum spectrum{field.grid, out.array()};
    apply_alternating_sign(spectrum.coefficients);
    spectrum.coefficients *= field.grid.spacing() / sqrt_two_pi;
    return spectrum;
}

Field inverse_transform(const Spectrum& spectrum, double time) {
    const Eigen::Index n = spectrum.grid.size();
    Eigen::ArrayXcd twisted = spectrum.coefficients;
    apply_alternating_sign(twisted);

    Eigen::VectorXcd in = twisted.matrix();
    Eigen::VectorXcd out(n);
    fft_engine().inv(out, in);

    Field field{spectrum.grid, out.array(), time};
    field.samples *= sqrt_two_pi / spectrum.grid.spacing();
    return field;
}

double l2_norm(const Field& field) {
    return std::sqrt(field.grid.spacing()) * field.samples.matrix().norm();
}

double l2_norm(const Spectrum& spectrum) {
    return std::sqrt(spectrum.grid.momentum_spacing()) * spectrum.coefficients.matrix().norm();
}

std::complex<double> value_at(const Spectrum& spectrum, double x) {
    const Eigen::Index n = spectrum.grid.size();
    const double dp = spectrum.grid.momentum_spacing();
    const std::complex<double> step(std::cos(dp * x), std::sin(dp * x));

    // Walk each contiguous momentum run with a phase recurrence, refreshing
    // the rotor from sin/cos every 256 steps so the accumulated drift stays
    // far below the coefficients' own rounding floor.
    const auto run_sum = [&](Eigen::Index begin, Eigen::Index end, Eigen::Index k0) {
        std::complex<double> acc = 0.0, phase = 1.0;
        for (Eigen::Index m = begin; m < end; ++m) {
            if ((m - begin) % 256 == 0) {
                const double p = dp * static_cast<double>(k0 + (m - begin));
                phase = {std::cos(p * x), std::sin(p * x)};
            }
            acc += spectrum.coefficients[m] * phase;
            phase *= step;
        }
        return acc;
    };

    const std::complex<double> acc =
        run_sum(0, n / 2, 0) + run_sum(n / 2, n, -(n / 2));
    return acc * (dp / sqrt_two_pi);
}

} // namespace salpeter
