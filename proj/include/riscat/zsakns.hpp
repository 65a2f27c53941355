// Normalized wave solutions of the frequency-k system
//   N'(x) = u(x) [[0, e^{-2ixk}], [e^{2ixk}, 0]] N(x)
// whose physical solution is f(x,k) = e^{ixk} n11 + e^{-ixk} n21 with
// quasi-derivative f' - u f = ik (e^{ixk} n11 - e^{-ixk} n21).
//
// Two constructions of the first column are provided: an adaptive
// Runge-Kutta integration (production path) and a truncated multilinear
// expansion with factorially decaying kernels (oracle path).
#pragma once

#include <array>

#include "riscat/potentials.hpp"
#include "riscat/spectral_function.hpp"

namespace riscat {

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
};

struct JostColumn {
    cplx n11{1.0, 0.0};
    cplx n21{0.0, 0.0};
};

// Column normalized by N -> I as x -> +inf, evaluated at x_eval >= 0. Only
// u(y) for y >= 0 is read.
JostColumn jost_plus(const Potential1D& u_plus, double x_eval, double k,
                     const OdeOptions& opt = {});

// Column normalized by N -> I as x -> -inf, evaluated at x_eval <= 0. Only
// u(y) for y <= 0 is read.
JostColumn jost_minus(const Potential1D& u_minus, double x_eval, double k,
                      const OdeOptions& opt = {});

// |n11|^2 - |n21|^2 - 1; conserved (= 0) by the exact flow for real u.
double det_defect(const JostColumn& c);

cplx wave_value(const JostColumn& c, double x, double k);
cplx wave_quasi_derivative(const JostColumn& c, double x, double k);

// Propagate (y, y^{[1]}) of  -y'' + (u' + u^2) y = k^2 y  written as
//   y' = u y + y^{[1]},   y^{[1]'} = -k^2 y - u y^{[1]}
// from x_from to x_to (either direction).
std::array<cplx, 2> propagate_schrodinger(const Potential1D& u, std::array<cplx, 2> y,
                                          double x_from, double x_to, double k,
                                          const OdeOptions& opt = {});

// ---------------------------------------------------------------- expansion
//
// For u supported in [0, (n-1)h] and x >= 0:
//   n11(x,k) - 1 = int_0^inf A(x,z) e^{2izk} dz,
//   n21(x,k)     = int_0^inf C(x,z) e^{2izk} dz,
// with A = sum_m A_m, C = sum_m C_m generated by
//   C_1(x,z)     = -u(z) 1_{z >= x},
//   A_m(x,z)     = -int_x^inf u(y) C_m(y, z+y) dy,
//   C_{m+1}(x,z) = -int_x^z   u(y) A_m(y, z-y) dy,
// and obeying, for any s >= 0 and weights over z >= 0,
//   ||A_m(x,.)||_{L^{2,s}} <= L1(x)^{2m-1}/(2m-1)! * L2s(x),
//   ||C_m(x,.)||_{L^{2,s}} <= L1(x)^{2m-2}/(2m-2)! * L2s(x),
// where L1(x) = ||u||_{L1(x,inf)} and L2s(x) = ||(1+|.|)^s u||_{L2(x,inf)}.

struct SeriesExpansion {
    double h = 0.0;
    std::size_t n = 0;  // z_j = j h and x_i = i h, i, j = 0..n-1
    std::vector<double> A_total, C_total;  // accumulated kernels, [i*n + j]
    int orders = 0;
    // Per-order weighted row norms ||K_m(x_p, .)||_{L^{2,s}} at the probe
    // indices requested at build time: [order-1][probe] -> {A, C}.
    std::vector<std::size_t> probes;
    double s_weight = 0.0;
    std::vector<std::vector<std::array<double, 2>>> order_row_norms;
};

SeriesExpansion compute_series_expansion(const std::vector<double>& u_samples, double h,
                                         int max_order,
                                         const std::vector<std::size_t>& probe_indices = {},
                                         double s_weight = 0.0);

// Truncated-expansion value at x = x_index * h: returns {n11 - 1, n21}.
std::array<cplx, 2> series_evaluate(const SeriesExpansion& se, std::size_t x_index, double k);

}  // namespace riscat
