// Forward scattering map: from a Riccati triple to reflection data on a
// symmetric frequency grid.
//
// With plus/minus columns evaluated at x = 0 and v0 the point mass, define
//   det_a(k) = n11p(k) conj(n11m(k)) - n21p(k) conj(n21m(k)),
//   det_b(k) = n21p(k) n11m(k)       - n11p(k) n21m(k),
//   fp(k)    = n11p(k) + n21p(k)                (plus wave at 0)
//   fm(k)    = conj(n11m(k)) + conj(n21m(k))    (minus wave at 0)
// and the transition coefficients
//   a(k) = det_a(k) - v0 fp(k) fm(k) / (2ik),
//   b(k) = det_b(k) + v0 fp(k) conj(fm(-k)) / (2ik)        (k != 0),
// regularized to
//   at(k) = [k det_a(k) - v0 fp fm / (2i)] / (k+i)          ( = k a /(k+i) )
//   bt(k) = [k det_b(k) + v0 fp fm(-k)^* ... / (2i)] / (k+i)
// which are continuous through k = 0. The stored data are
//   r_minus = bt/at (left reflection), r_plus(k) = (i-k)/(i+k) bt(-k)/at(k)
//   r_tilde = 1 / ((k^2+1) |at|^2)  ( = (1-|r|^2)/k^2 on the nose ).
// v0 > 0 is the generic class (r_minus(0) = -1, r_tilde(0) finite); v0 = 0 is
// the exceptional class (|r(0)| < 1, r_tilde(0) = +inf).
#pragma once

#include <string>
#include <vector>

#include "riscat/potentials.hpp"
#include "riscat/spectral_function.hpp"
#include "riscat/zsakns.hpp"

namespace riscat {

struct SpectralGridSpec {
    double k_target = 40.0;  // grid reaches at least this frequency

    // Refinement of the frequency step below pi/(2X).  A trapezoid sum over a
    // grid with step dk reproduces the reflection kernel up to translates by
    // pi/dk; oversample >= 2 pushes those images outside the [-2X, 2X] window
    // the layer-solve reads, which it needs to converge to the true kernel.
    std::size_t oversample = 2;
};

struct ScatteringDiagnostics {
    double max_det_defect = 0.0;      // wave-column determinant drift
    double unitarity_defect = 0.0;    // max | |a|^2 - |b|^2 - 1 | / |a|^2, k != 0
    double rtilde_discrepancy = 0.0;  // max | r_tilde - (1-|r_minus|^2)/k^2 |, k != 0
    double b_tail_value = 0.0;        // Re 2ik b(k) at the top of the grid
    double b_tail_expected = 0.0;     // v0 + u_plus(0) - u_minus(0)
};

struct ScatteringData {
    SpectralFunction r_minus, r_plus, a_tilde, b_tilde, r_tilde;
    double v0 = 0.0;
    bool generic = false;
    ScatteringDiagnostics diag;
};

ScatteringData direct_scattering(const RiccatiTriple& t, const SpectralGridSpec& spec = {},
                                 const OdeOptions& ode = {});

// Single-frequency transition coefficients (k != 0), for cross-checks.
struct PointScattering {
    cplx det_a, det_b, f_plus, f_minus, a, b;
};
PointScattering scattering_point(const RiccatiTriple& t, double k, const OdeOptions& ode = {});

// Class-membership checks with the measured quantity behind each flag.
struct MembershipFlag {
    std::string name;
    bool pass = false;
    double value = 0.0;
};
std::vector<MembershipFlag> membership_report(const ScatteringData& sd, double s = 1.0,
                                              double tol = 1e-6);

}  // namespace riscat
