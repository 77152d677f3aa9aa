#pragma once

#include "salpeter/field.hpp"
#include "salpeter/quadrature.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace salpeter {

/// Validated positive rest mass.
class MassParams {
public:
    explicit MassParams(double m);
    double value() const noexcept { return m_; }

private:
    double m_;
};

/// Spectral propagator for i d/dt phi = sqrt(p^2 + m^2) phi: multiply each
/// coefficient by exp(-i sqrt(p^2 + m^2) t).  Requires field.time == 0 and
/// t >= 0.  As m -> 0 this approaches evolve_massless uniformly.
Field evolve_massive(const Field& field0, double t, MassParams mass);

/// The transform of a compactly supported profile extends to an entire
/// function; on the positive imaginary axis it is the real integral
///
///     F(p) = (1/sqrt(2 pi)) Integral phi0(xi) exp(p xi) d xi,   p >= 0,
///
/// which grows like exp(p * support_right).  The log variant stays finite
/// where the plain value would overflow.
double entire_transform_imag_axis(const Profile& profile, double p,
                                  QuadratureOptions opt = {});
double log_entire_transform_imag_axis(const Profile& profile, double p,
                                      QuadratureOptions opt = {});

struct PaleyWienerReport {
    int order;           // polynomial order N of the tested bound
    double p_max;        // upper end of the scanned momentum window
    double constant;     // sampled sup of (1 + p)^N |F(p)| over [0, p_max]
    double sup_location; // momentum where the sup was attained
};

/// Scan (1 + p)^N |transform(p)| over [0, p_max] and report the supremum.
/// A smooth compactly supported profile admits such a bound for every N;
/// the scan throws bound_not_verified when the supremum lands in the top
/// decile of the window, since then the reported constant is only a lower
/// bound (the signature of a non-smooth profile, e.g. a truncated one).
PaleyWienerReport paley_wiener_check(const Profile& profile, int order, double p_max,
                                     QuadratureOptions opt = {});

/// Same scan for an arbitrary real function supported in [support_left,
/// support_right]; used as a negative control with discontinuous data.
PaleyWienerReport paley_wiener_check(const std::function<double(double)>& f,
                                     double support_left, double support_right, int order,
                                     double p_max, QuadratureOptions opt = {});

/// Amplitude of the massive field strictly outside the light cone, obtained
/// by closing the spectral integral around the branch cut of
/// sqrt(p^2 + m^2) on the imaginary axis:
///
///     phi(x, t) = i sqrt(2/pi) Integral_m^inf F(p) exp(-p x)
///                 sinh(sqrt(p^2 - m^2) t) dp,    x > c + R + t.
///
/// Evaluated in the log domain so the exp(p * support_right) growth of F
/// and the exp(-p x) decay never meet at an overflowing intermediate.
/// Requires x strictly beyond the causal shadow edge c + R + t.
std::complex<double> tail_amplitude(const Profile& profile, double x, double t,
                                    MassParams mass, QuadratureOptions opt = {});

/// Left-exterior counterpart via mirror symmetry (the dispersion relation is
/// even): requires x < c - R - t.
std::complex<double> tail_amplitude_left(const Profile& profile, double x, double t,
                                         MassParams mass, QuadratureOptions opt = {});

struct TailReport {
    double point;
    double time;
    std::complex<double> spectral_value; // grid propagator, band-limited readout
    std::complex<double> tail_value;     // branch-cut integral
    double relative_discrepancy;         // |s - t| / max(|s|, |t|), 0 if both vanish
    double exterior_margin;              // distance beyond the shadow edge
};

struct TailSurvey {
    std::vector<TailReport> entries;
    double max_relative_discrepancy = 0.0;
};

/// Cross-validate the spectral propagator against the branch-cut tail
/// formula at a list of right-exterior points.  Every point must satisfy
/// x > c + R + t; violations raise invalid_argument naming the point.
TailSurvey tail_survey(const Profile& profile, const Grid1D& grid, double t, MassParams mass,
                       const std::vector<double>& points, QuadratureOptions opt = {});

} // namespace salpeter
