// Inverse scattering: reflection data back to the Riccati triple.
//
// Kernel: F(x) = (1/pi) int r(k) e^{2ikx} dk. The grid version subtracts a
// fitted one-pole model rho(k) = c/(2ik - d) (transformed in closed form)
// before quadrature, so the slow 1/k reflection tail of point-mass data does
// not truncate into ringing.
//
// Reconstruction at x solves the system
//   (I - T_x^2) gamma = K_x,   K_x(z) = F(x+z),
//   (T_x psi)(z) = int_0^inf F(x + z + t) psi(t) dt,
// and reads off u(x) = gamma(0) — the representative decaying at +inf. The
// u_minus-side representative is obtained by running the same machinery on
// the kernel built from r_minus and reflecting: u_left(x) = -w(-x).
// The involution supplies the right-side reflection from r_minus, and
// v0 = u_left(0) - u_right(0).
#pragma once

#include <vector>

#include "riscat/grid_function.hpp"
#include "riscat/spectral_function.hpp"

namespace riscat {

struct KernelBuildResult {
    GridFunction F;        // real kernel on [-2X, 2X], step dx = 2X/n_intervals
    double imag_residue = 0.0;    // max | Im | discarded by the quadrature
    double symmetry_defect = 0.0; // conjugate-reflection defect of the input
    bool tail_subtracted = false;
    double tail_c = 0.0, tail_d = 0.0;  // fitted pole parameters when used
};

KernelBuildResult build_reflection_kernel(const SpectralFunction& r, double X,
                                          std::size_t n_intervals);

struct GlmOptions {
    std::size_t zeta_decimation = 4;  // dzeta = decimation * dx
    std::size_t x_decimation = 8;     // output grid step, multiple of 2*zeta_decimation
    double cond_limit = 1e12;
    bool neumann_diagnostic = true;
    double symmetry_tol = 1e-6;       // accepted conjugate-symmetry defect of r
};

struct GlmDiagnostics {
    double max_residual = 0.0;     // linear-system residual, inf norm
    double max_lambda = 0.0;       // largest kernel spectral radius over x
    double max_cond = 0.0;         // (1+lambda^2)/(1-lambda^2) estimate
    double max_route_gap = 0.0;    // |gamma(0) - (F + <K, T gamma>)|
    double max_neumann_gap = 0.0;  // series route, where ||T|| < 0.9
};

// Solve the system on the decimated x grid over [0, X] (the half line where
// the one-sided kernel stays summable); Richardson-combines the dzeta and
// 2*dzeta solves. F must cover [-2X, 2X] with step dx.
GridFunction glm_reconstruct(const GridFunction& F, double X, std::size_t n_intervals,
                             const GlmOptions& opt = {}, GlmDiagnostics* diag = nullptr);

// Correction terms G_n(x) = <F(x+.), T^{2n-1} F(x+.)>, n = 1..n_max, at the
// given x values (rounded to the F lattice).
std::vector<std::vector<double>> glm_correction_terms(const GridFunction& F,
                                                      const std::vector<double>& xs,
                                                      std::size_t zeta_decimation, int n_max);

struct ReconstructionResult {
    GridFunction u_right;  // representative decaying at +inf (u_plus on [0, X])
    GridFunction u_left;   // representative decaying at -inf (u_minus on [-X, 0])
    double v0_rec = 0.0;
    GlmDiagnostics glm_right, glm_left;
    double imag_residue = 0.0;     // worst of the two kernel builds
    double symmetry_defect = 0.0;  // removed from r_minus before inversion
    bool tail_subtracted = false;
};

ReconstructionResult inverse_scattering(const SpectralFunction& r_minus,
                                        const SpectralFunction& r_tilde, bool generic, double X,
                                        std::size_t n_intervals, const GlmOptions& opt = {});

}  // namespace riscat
