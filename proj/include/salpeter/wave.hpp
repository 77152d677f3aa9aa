#pragma once

#include "salpeter/field.hpp"
#include "salpeter/massless.hpp"
#include "salpeter/quadrature.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace salpeter {

/// Closed interval [left, right], left <= right.
struct Interval {
    double left;
    double right;
};

/// Where a genuinely hyperbolic signal can reach by time t: the support
/// fattened by the (unit) propagation speed on both sides.
Interval causal_shadow(Interval support, double t);

/// Cauchy data (displacement f, velocity g) for the second-order wave
/// equation.  The displacement is always compactly supported; the velocity
/// may or may not be, and the flag decides whether d'Alembert's velocity
/// integral can be clipped to a finite window.
struct CauchyData {
    std::function<std::complex<double>(double)> displacement;
    std::function<std::complex<double>(double)> velocity;
    Interval displacement_support;
    std::optional<Interval> velocity_support; // engaged iff the velocity is compact
};

/// Assemble Cauchy data, spot-checking a compactness claim on the velocity
/// by sampling outside the declared interval.
CauchyData make_cauchy_data(std::function<std::complex<double>(double)> displacement,
                            Interval displacement_support,
                            std::function<std::complex<double>(double)> velocity,
                            std::optional<Interval> velocity_support);

/// Repackage a profile as wave Cauchy data for the square of the massless
/// generator: displacement phi0 and velocity d/dt phi(x, 0).  The velocity
/// has acausal algebraic tails, so it is deliberately flagged non-compact --
/// this is the precise sense in which the first-order evolution fails to be
/// hyperbolic.
CauchyData salpeter_as_wave(const Profile& profile);

/// d'Alembert's formula
///
///     phi(x, t) = (1/2)[f(x-t) + f(x+t)] + (1/2) Integral_{x-t}^{x+t} g ,
///
/// with the integral clipped to the declared velocity support when there is
/// one (and returned as exactly zero when the window misses it entirely).
/// Requires t >= 0.
std::complex<double> dalembert_evolve(const CauchyData& data, double x, double t,
                                      QuadratureOptions opt = {});

/// Largest grid residual of the second-order equation
///     d^2/dt^2 phi = d^2/dx^2 phi - m^2 phi
/// over the interior slices of an equally spaced history, using centred
/// second differences in both variables, normalised by the sup of the first
/// slice.  Vanishes at rate tau^2 + h^2 for true wave solutions.
double wave_residual(const std::vector<Field>& history, double tau, double mass = 0.0);

} // namespace salpeter
