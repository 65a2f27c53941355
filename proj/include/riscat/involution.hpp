// Reconstruction of the transmission coefficient from reflection data, and
// the side-swapping involution on reflection coefficients.
//
// The transmission coefficient is the outer function determined by its
// boundary modulus: with H the Hilbert transform
//   H[f](k) = (1/pi) PV int f(s)/(k-s) ds
// (the convention under which Im F = H[Re F] for F analytic and decaying in
// the upper half plane),
//   generic (v0 > 0):   tau(k) = sqrt((k^2+1) r_tilde(k)) e^{i theta},
//                       theta  = H[ log((.^2+1) r_tilde) ] / 2,
//                       t(k)   = k/(k+i) tau(k);
//   exceptional:        t(k)   = exp( w + i H[w] ),  w = log(1-|r|^2)/2,
//                       tau = t.
// The involution swapping the two reflection coefficients is
//   generic:      r#(k) = (i-k)/(i+k) * tau(k)/tau(-k) * r(-k),
//   exceptional:  r#(k) = - t(k)/t(-k) * r(-k),
// and applying it twice returns r.
#pragma once

#include <vector>

#include "riscat/spectral_function.hpp"

namespace riscat {

// Discrete Hilbert transform of uniformly spaced samples of a decaying
// function: cosine-taper the outer 5% at each end, zero-pad into a power-of-
// two buffer at least 16x the sample count, apply the +/-i multiplier, and
// return the samples at the original nodes.
std::vector<double> hilbert_transform(const std::vector<double>& g);

struct TransmissionData {
    SpectralFunction t;          // transmission coefficient
    SpectralFunction tau;        // regularized factor, t = k/(k+i) tau (generic)
    std::vector<double> theta;   // arg tau on the grid
    double taper_tail = 0.0;     // max |input| over the tapered edge samples
};

TransmissionData transmission_from_reflection(const SpectralFunction& r,
                                              const SpectralFunction& r_tilde, bool generic);

SpectralFunction involute_reflection(const SpectralFunction& r, const SpectralFunction& r_tilde,
                                     bool generic);

}  // namespace riscat
