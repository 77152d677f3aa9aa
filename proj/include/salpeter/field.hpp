#pragma once

#include "salpeter/grid.hpp"
#include "salpeter/profile.hpp"

#include <Eigen/Core>

#include <complex>

namespace salpeter {

/// Complex field sampled on a periodic grid at a fixed instant.
struct Field {
    Grid1D grid;
    Eigen::ArrayXcd samples;
    double time = 0.0;
};

/// Fourier coefficients on the discrete momentum lattice, normalised so that
/// coefficient m approximates the continuum transform
///
///     (1/sqrt(2 pi)) Integral phi(x) exp(-i p_m x) dx
///
/// at p_m = pi k / L (transform storage order, see Grid1D::momenta).
struct Spectrum {
    Grid1D grid;
    Eigen::ArrayXcd coefficients;
};

/// Evaluate a profile on every grid point.  Throws domain_too_small unless
/// the support sits at least four mesh cells away from the box edges, since
/// a support touching the boundary would silently alias around the torus.
Field sample(const Profile& profile, const Grid1D& grid);

/// Discrete realisation of the symmetric-convention Fourier transform.
/// The grid starts at -L rather than 0, which shows up as an alternating
/// sign twist relative to the raw FFT; round-tripping is exact to
/// accumulation error.
Spectrum forward_transform(const Field& field);

/// Inverse of forward_transform; the result is stamped with `time`.
Field inverse_transform(const Spectrum& spectrum, double time = 0.0);

/// Continuum L2 norms: sqrt(h sum |phi_j|^2) and sqrt(dp sum |c_m|^2).
/// The two agree identically (discrete Parseval).
double l2_norm(const Field& field);
double l2_norm(const Spectrum& spectrum);

/// Band-limited evaluation of the field a spectrum represents at an
/// arbitrary point (not necessarily on the grid): a direct mode sum
/// (dp / sqrt(2 pi)) sum_m c_m exp(i p_m x).
std::complex<double> value_at(const Spectrum& spectrum, double x);

} // namespace salpeter
