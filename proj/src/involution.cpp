#include "riscat/involution.hpp"

#include <cmath>
#include <stdexcept>

#include <fftw3.h>

namespace riscat {

std::vector<double> hilbert_transform(const std::vector<double>& g) {
    const std::size_t L = g.size();
    if (L < 16) throw std::invalid_argument("hilbert_transform: too few samples");
    std::size_t P = 1;
    while (P < 16 * L) P <<= 1;
    const std::size_t off = (P - L) / 2;

    std::vector<cplx> buf(P, cplx{});
    const std::size_t edge = std::max<std::size_t>(2, L / 20);
    for (std::size_t j = 0; j < L; ++j) {
        double w = 1.0;
        if (j < edge) w = 0.5 * (1.0 - std::cos(pi * double(j) / double(edge)));
        if (L - 1 - j < edge) w = 0.5 * (1.0 - std::cos(pi * double(L - 1 - j) / double(edge)));
        buf[off + j] = w * g[j];
    }

    std::vector<cplx> spec(P);
    fftw_plan fwd = fftw_plan_dft_1d(int(P), reinterpret_cast<fftw_complex*>(buf.data()),
                                     reinterpret_cast<fftw_complex*>(spec.data()), FFTW_FORWARD,
                                     FFTW_ESTIMATE);
    if (!fwd) throw std::runtime_error("fftw plan creation failed");
    fftw_execute(fwd);
    fftw_destroy_plan(fwd);

    // Positive frequencies (p < P/2) are multiplied by -i, negative by +i;
    // the p = 0 and p = P/2 bins carry no signed frequency and are zeroed.
    spec[0] = 0.0;
    spec[P / 2] = 0.0;
    for (std::size_t p = 1; p < P / 2; ++p) spec[p] *= cplx(0.0, -1.0);
    for (std::size_t p = P / 2 + 1; p < P; ++p) spec[p] *= cplx(0.0, 1.0);

    fftw_plan bwd = fftw_plan_dft_1d(int(P), reinterpret_cast<fftw_complex*>(spec.data()),
                                     reinterpret_cast<fftw_complex*>(buf.data()), FFTW_BACKWARD,
                                     FFTW_ESTIMATE);
    if (!bwd) throw std::runtime_error("fftw plan creation failed");
    fftw_execute(bwd);
    fftw_destroy_plan(bwd);

    std::vector<double> out(L);
    for (std::size_t j = 0; j < L; ++j) out[j] = buf[off + j].real() / double(P);
    return out;
}

static double edge_magnitude(const std::vector<double>& g) {
    const std::size_t edge = std::max<std::size_t>(2, g.size() / 20);
    double m = 0.0;
    for (std::size_t j = 0; j < edge; ++j) {
        m = std::max(m, std::abs(g[j]));
        m = std::max(m, std::abs(g[g.size() - 1 - j]));
    }
    return m;
}

TransmissionData transmission_from_reflection(const SpectralFunction& r,
                                              const SpectralFunction& r_tilde, bool generic) {
    const std::size_t n = r.size();
    TransmissionData td;
    td.t = SpectralFunction(r.dk, r.m);
    td.tau = SpectralFunction(r.dk, r.m);
    td.theta.assign(n, 0.0);
    const cplx I(0.0, 1.0);

    if (generic) {
        if (r_tilde.size() != n || std::abs(r_tilde.dk - r.dk) > 1e-12 * r.dk)
            throw std::invalid_argument("transmission_from_reflection: grid mismatch");
        std::vector<double> g(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double k = r.k(j);
            const double rt = r_tilde.values[j].real();
            if (!(rt > 0.0) || !std::isfinite(rt))
                throw std::runtime_error(
                    "transmission_from_reflection: r_tilde must be positive and finite "
                    "(generic class) — offending k = " +
                    std::to_string(k));
            g[j] = std::log((k * k + 1.0) * rt);
        }
        td.taper_tail = edge_magnitude(g);
        td.theta = hilbert_transform(g);
        for (std::size_t j = 0; j < n; ++j) {
            const double k = r.k(j);
            td.theta[j] *= 0.5;
            const double mod = std::sqrt((k * k + 1.0) * r_tilde.values[j].real());
            td.tau.values[j] = mod * std::exp(I * td.theta[j]);
            td.t.values[j] = k / (k + I) * td.tau.values[j];
        }
    } else {
        std::vector<double> w(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double m2 = std::norm(r.values[j]);
            if (m2 >= 1.0 - 1e-12)
                throw std::runtime_error(
                    "transmission_from_reflection: |r| reaches 1 (not exceptional class) at k = " +
                    std::to_string(r.k(j)));
            w[j] = 0.5 * std::log1p(-m2);
        }
        td.taper_tail = edge_magnitude(w);
        td.theta = hilbert_transform(w);
        for (std::size_t j = 0; j < n; ++j) {
            td.t.values[j] = std::exp(cplx(w[j], td.theta[j]));
            td.tau.values[j] = td.t.values[j];
        }
    }
    return td;
}

SpectralFunction involute_reflection(const SpectralFunction& r, const SpectralFunction& r_tilde,
                                     bool generic) {
    TransmissionData td = transmission_from_reflection(r, r_tilde, generic);
    SpectralFunction out(r.dk, r.m);
    const cplx I(0.0, 1.0);
    for (std::size_t j = 0; j < r.size(); ++j) {
        const double k = r.k(j);
        const std::size_t jr = r.reflect(j);
        if (generic) {
            out.values[j] =
                (I - k) / (I + k) * td.tau.values[j] / td.tau.values[jr] * r.values[jr];
        } else {
            out.values[j] = -td.t.values[j] / td.t.values[jr] * r.values[jr];
        }
    }
    return out;
}

}  // namespace riscat
