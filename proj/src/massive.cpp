#include "salpeter/massive.hpp"

#include "salpeter/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace salpeter {

namespace {

constexpr double sqrt_two_pi = 2.5066282746310005024;

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

// log of (1/sqrt(2 pi)) Integral f exp(p xi) d xi over [a, b] for a
// non-negative f, computed with the exponential re-anchored at xi = b so the
// integrand stays in [0, max f].
double log_growing_transform(const std::function<double(double)>& f, double a, double b,
                             double p, QuadratureOptions opt) {
    const double shifted = integrate(
        [&](double xi) { return f(xi) * std::exp(p * (xi - b)); }, a, b, opt);
    return p * b + std::log(shifted / sqrt_two_pi);
}

} // namespace

MassParams::MassParams(double m) : m_(m) {
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("MassParams: mass must be positive and finite, got " +
                                    std::to_string(m));
}

Field evolve_massive(const Field& field0, double t, MassParams mass) {
    require_initial(field0, "evolve_massive");
    require_forward_time(t, "evolve_massive");

    Spectrum spectrum = forward_transform(field0);
    const Eigen::ArrayXd p = field0.grid.momenta();
    const double m2 = mass.value() * mass.value();
    for (Eigen::Index m = 0; m < p.size(); ++m) {
        const double phase = -std::sqrt(p[m] * p[m] + m2) * t;
        spectrum.coefficients[m] *= std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return inverse_transform(spectrum, t);
}

double log_entire_transform_imag_axis(const Profile& profile, double p, QuadratureOptions opt) {
    if (!(p >= 0.0))
        throw std::invalid_argument("entire_transform_imag_axis: p must be >= 0, got " +
                                    std::to_string(p));
    return log_growing_transform([&](double xi) { return profile(xi); }, profile.support_left(),
                                 profile.support_right(), p, opt);
}

double entire_transform_imag_axis(const Profile& profile, double p, QuadratureOptions opt) {
    return std::exp(log_entire_transform_imag_axis(profile, p, opt));
}

namespace {

PaleyWienerReport paley_wiener_scan(const std::function<double(double)>& f, double a, double b,
                                    int order, double p_max, QuadratureOptions opt) {
    if (order < 0 || order > 8)
        throw std::invalid_argument("paley_wiener_check: order must lie in [0, 8], got " +
                                    std::to_string(order));
    if (!(p_max > 0.0))
        throw std::invalid_argument("paley_wiener_check: p_max must be positive, got " +
                                    std::to_string(p_max));
    if (!(a < b))
        throw std::invalid_argument("paley_wiener_check: empty support interval");

    // Oscillation scale of the transform is pi / (b - a); sample densely
    // enough to see every lobe.
    const int n_samples = std::max(1024, static_cast<int>(std::ceil(8.0 * p_max / EIGEN_PI)));

    QuadratureOptions sweep = opt;
    sweep.abs_tol = std::max(opt.abs_tol, 1e-12);
    sweep.rel_tol = std::max(opt.rel_tol, 1e-9);

    const auto weighted = [&](double p) {
        const std::complex<double> F =
            integrate(
                [&](double xi) {
                    return f(xi) * std::complex<double>(std::cos(p * xi), -std::sin(p * xi));
                },
                a, b, sweep) /
            sqrt_two_pi;
        return std::pow(1.0 + p, order) * std::abs(F);
    };

    std::vector<double> values(n_samples + 1);
    double best = -1.0;
    int best_index = 0;
    for (int k = 0; k <= n_samples; ++k) {
        values[k] = weighted(p_max * k / n_samples);
        if (values[k] > best) {
            best = values[k];
            best_index = k;
        }
    }

    double sup_location = p_max * best_index / n_samples;
    // One parabolic refinement around the best sample sharpens the reported
    // supremum without a full search.
    if (best_index > 0 && best_index < n_samples) {
        const double dp = p_max / n_samples;
        const double y0 = values[best_index - 1], y1 = values[best_index],
                     y2 = values[best_index + 1];
        const double denom = y0 - 2.0 * y1 + y2;
        if (denom < 0.0) {
            const double shift = 0.5 * (y0 - y2) / denom;
            if (std::abs(shift) < 1.0) {
                const double p_star = sup_location + shift * dp;
                const double refined = weighted(p_star);
                if (refined > best) {
                    best = refined;
                    sup_location = p_star;
                }
            }
        }
    }

    if (sup_location >= 0.9 * p_max)
        throw bound_not_verified(
            "paley_wiener_check: (1 + p)^" + std::to_string(order) +
            " |transform| is still climbing at p = " + std::to_string(sup_location) +
            " (window [0, " + std::to_string(p_max) +
            "]); the constant " + std::to_string(best) + " is only a lower bound");

    return PaleyWienerReport{order, p_max, best, sup_location};
}

} // namespace

PaleyWienerReport paley_wiener_check(const Profile& profile, int order, double p_max,
                                     QuadratureOptions opt) {
    return paley_wiener_scan([&](double xi) { return profile(xi); }, profile.support_left(),
                             profile.support_right(), order, p_max, opt);
}

PaleyWienerReport paley_wiener_check(const std::function<double(double)>& f, double support_left,
                                     double support_right, int order, double p_max,
                                     QuadratureOptions opt) {
    return paley_wiener_scan(f, support_left, support_right, order, p_max, opt);
}

std::complex<double> tail_amplitude(const Profile& profile, double x, double t, MassParams mass,
                                    QuadratureOptions opt) {
    require_forward_time(t, "tail_amplitude");
    const double edge = profile.support_right() + t;
    if (!(x > edge))
        throw std::invalid_argument("tail_amplitude: point " + std::to_string(x) +
                                    " is not strictly beyond the causal shadow edge " +
                                    std::to_string(edge));
    if (t == 0.0) return 0.0;

    const double m = mass.value();
    const double margin = x - edge;

    // Integrand over u = p - m >= 0.  Everything is assembled in the log
    // domain: F(p) grows like exp(p b) while exp(-p x) decays faster, so the
    // combined exponent log F - p x + kappa t is bounded above by
    // log(2 R A / sqrt(2 pi)) - m * margin and decays like exp(-u * margin).
    const auto integrand = [&](double u) {
        const double p = m + u;
        const double kappa = std::sqrt(u * (2.0 * m + u));
        const double g = log_entire_transform_imag_axis(profile, p, opt) - p * x;
        if (kappa * t <= 1.0) return std::exp(g) * std::sinh(kappa * t);
        return 0.5 * (std::exp(g + kappa * t) - std::exp(g - kappa * t));
    };

    const double width = std::clamp(10.0 / margin, 1.0, 100.0);
    const int max_panels = 256;

    double total = 0.0;
    for (int panel = 0; panel < max_panels; ++panel) {
        QuadratureOptions panel_opt = opt;
        panel_opt.abs_tol = std::max(1e-4 * opt.abs_tol, 1e-16 * std::abs(total));
        const double part =
            integrate(integrand, panel * width, (panel + 1) * width, panel_opt);
        total += part;
        if (panel >= 1 && std::abs(part) <= 1e-16 * std::abs(total)) break;
    }

    return std::complex<double>(0.0, std::sqrt(2.0 / std::numbers::pi) * total);
}

std::complex<double> tail_amplitude_left(const Profile& profile, double x, double t,
                                         MassParams mass, QuadratureOptions opt) {
    // The multiplier sqrt(p^2 + m^2) is even in p, so evolution commutes
    // with reflection: phi(x, t) for the profile equals the mirrored
    // evolution of the mirrored profile at -x.
    return tail_amplitude(profile.reflected(), -x, t, mass, opt);
}

TailSurvey tail_survey(const Profile& profile, const Grid1D& grid, double t, MassParams mass,
                       const std::vector<double>& points, QuadratureOptions opt) {
    require_forward_time(t, "tail_survey");
    const double edge = profile.support_right() + t;
    for (double x : points)
        if (!(x > edge))
            throw std::invalid_argument("tail_survey: point " + std::to_string(x) +
                                        " lies inside the causal shadow (edge " +
                                        std::to_string(edge) + ")");

    const Field field0 = sample(profile, grid);
    const Spectrum evolved = forward_transform(evolve_massive(field0, t, mass));

    TailSurvey survey;
    survey.entries.reserve(points.size());
    for (double x : points) {
        TailReport report;
        report.point = x;
        report.time = t;
        report.spectral_value = value_at(evolved, x);
        report.tail_value = tail_amplitude(profile, x, t, mass, opt);
        report.exterior_margin = x - edge;
        const double scale = std::max(std::abs(report.spectral_value), std::abs(report.tail_value));
        report.relative_discrepancy =
            scale == 0.0 ? 0.0 : std::abs(report.spectral_value - report.tail_value) / scale;
        survey.max_relative_discrepancy =
            std::max(survey.max_relative_discrepancy, report.relative_discrepancy);
        survey.entries.push_back(report);
    }
    return survey;
}

} // namespace salpeter
