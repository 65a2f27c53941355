// Fourier transforms between grid and spectral data, weighted norms, and the
// pointwise algebra helpers used on reflection data.
//
// Conventions (used throughout the library):
//   forward:  g_hat(k) = dx * sum_j g(x_j) e^{+i k x_j}
//   inverse:  g(x)     = (dk/2pi) * sum_p g_hat(k_p) e^{-i k_p x}
// With n = 2m+1 samples and dk*dx = 2pi/n these are an exact inverse pair.
//
// The smoothness norm of spectral data g is computed through its preimage P
// (inverse transform on the conjugate window of width 2pi/dk):
//   hs_norm(g, s)^2 = 2pi * int (1+|x|)^{2s} |P(x)|^2 dx,
// which for s = 0 equals the plain L2 norm of g by the Plancherel identity.
// The preimage must be confined to the conjugate window; a mass check at the
// window edges throws if it is not.
#pragma once

#include <limits>
#include <vector>

#include "riscat/grid_function.hpp"
#include "riscat/spectral_function.hpp"

namespace riscat {

// n must be odd so the conjugate grid k_p = (p-m)*dk, dk = 2pi/(n*dx), is
// symmetric about zero.
SpectralFunction forward_transform(const GridFunction& g);

// x_start = NaN places the window symmetrically: x_0 = -m * dx with
// dx = 2pi/(n*dk). Passing the x_start of the original grid makes
// inverse_transform(forward_transform(g)) reproduce g exactly.
GridFunction inverse_transform(const SpectralFunction& s,
                               double x_start = std::numeric_limits<double>::quiet_NaN());

double l1_norm(const GridFunction& g);
double l2_norm(const GridFunction& g);
// ( int (1+|x|)^{2s} |g|^2 dx )^{1/2}
double weighted_l2s_norm(const GridFunction& g, double s);

double spectral_l2_norm(const SpectralFunction& g);
double spectral_sup_norm(const SpectralFunction& g);

// Smoothness norm via the weighted preimage (see header comment).
double hs_norm(const SpectralFunction& g, double s);
// hs_norm of the difference; grids must match.
double hs_distance(const SpectralFunction& a, const SpectralFunction& b, double s);
// L1 + L2 norm of the preimage.
double xhat_norm(const SpectralFunction& g);

// Pointwise 1/g; throws if |g| < eps anywhere on the grid.
SpectralFunction algebra_reciprocal(const SpectralFunction& g, double eps = 1e-12);

// sum_n coeffs[n] * g^n evaluated pointwise (Horner); throws if
// max |g| > radius.
SpectralFunction compose_analytic(const SpectralFunction& g, const std::vector<double>& coeffs,
                                  double radius);

}  // namespace riscat
