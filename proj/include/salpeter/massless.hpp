#pragma once

#include "salpeter/field.hpp"
#include "salpeter/quadrature.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace salpeter {

/// Spectral propagator for the massless half-wave equation
/// i d/dt phi = |p| phi: multiply each coefficient by exp(-i |p| t).
/// Requires field.time == 0 and t >= 0.
Field evolve_massless(const Field& field0, double t);

/// Decompose a field into its right-moving (p > 0) and left-moving (p < 0)
/// spectral halves; the zero mode is split equally.  Each mover translates
/// rigidly under evolve_massless, and right + left reproduces the input.
struct MoverPair {
    Field right;
    Field left;
};
MoverPair split_movers(const Field& field0);

/// Finite-part (principal value) convolution with the Cauchy kernel,
///
///     H(u) = PV Integral phi0(y) / (u - y) dy
///          = Integral_0^zmax [phi0(u - z) - phi0(u + z)] / z dz,
///
/// where zmax = R + |u - c| covers the whole support.  The symmetrised form
/// has a removable singularity at z = 0, so ordinary quadrature applies.
double hilbert_principal_value(const Profile& profile, double u,
                               QuadratureOptions opt = {});

/// Closed-form massless evolution of a profile at a single point,
/// independent of any grid:
///
///     phi(x,t) = (1/2)[phi0(x-t) + phi0(x+t)]
///              + (i/2 pi)[H(x-t) - H(x+t)].
///
/// Requires t >= 0.
std::complex<double> cauchy_kernel_evolve(const Profile& profile, double x, double t,
                                          QuadratureOptions opt = {});

/// Instantaneous time derivative of the massless evolution at t = 0:
///
///     d/dt phi(x,0) = (i/pi) [ Integral_0^zmax
///                      (phi0(x+z) + phi0(x-z) - 2 phi0(x)) / z^2 dz
///                      - 2 phi0(x) / zmax ].
///
/// For x outside the support this is purely imaginary with the sign of the
/// profile mass, which is the local signature of the acausal tails.
std::complex<double> time_derivative_at_zero(const Profile& profile, double x,
                                             QuadratureOptions opt = {});

/// Evaluate the imaginary part of the t = 0 derivative at a list of points,
/// all of which must lie strictly outside the profile support.
std::vector<std::pair<double, double>> exterior_derivative_positivity_scan(
    const Profile& profile, const std::vector<double>& points, QuadratureOptions opt = {});

} // namespace salpeter
