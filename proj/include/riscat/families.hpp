// Constructors for the built-in potential families used by the CLI and the
// verification battery. All return triples on the symmetric grid
// x = -X .. X with n_intervals steps (n_intervals even).
#pragma once

#include <string>

#include "riscat/potentials.hpp"

namespace riscat {

RiccatiTriple make_zero_triple(double X, std::size_t n_intervals);

// Pure point mass of weight gamma at the origin: u_minus = u_plus = 0,
// v0 = gamma.
RiccatiTriple make_delta_triple(double gamma, double X, std::size_t n_intervals);

// Even Gaussian bump used as a full-line representative on both sides
// (v0 = 0): u(x) = A exp(-x^2 / (2 sigma^2)) with A chosen so the L1 norm
// equals l1_target.
RiccatiTriple make_gaussian_triple(double l1_target, double sigma, double X,
                                   std::size_t n_intervals);

// Smoothed plateau of height c on [x1, x2] with erf edges of width tau,
// v0 = 0.
RiccatiTriple make_smooth_box_triple(double c, double x1, double x2, double tau, double X,
                                     std::size_t n_intervals);

// Discontinuous plateau c * 1_{[x1, x2]}, v0 = 0. Suitable for
// frequency-space identities only; its reflection data decays too slowly for
// grid-truncated reconstruction.
RiccatiTriple make_sharp_box_triple(double c, double x1, double x2, double X,
                                    std::size_t n_intervals);

// Asymmetric pair of Gaussian bumps with a genuine point mass: distinct
// u_minus / u_plus and v0 = 0.8.
RiccatiTriple make_two_bump_triple(double X, std::size_t n_intervals);

// Build by family name with a JSON parameter object (see README for the
// accepted keys). Throws std::invalid_argument for unknown names or missing
// parameters.
RiccatiTriple make_family(const std::string& name, const std::string& params_json, double X,
                          std::size_t n_intervals);

}  // namespace riscat
