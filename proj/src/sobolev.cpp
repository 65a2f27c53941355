#include "riscat/sobolev.hpp"

#include <cmath>
#include <stdexcept>

#include <fftw3.h>

namespace riscat {

// Unnormalized DFT, sign = FFTW_FORWARD (-) or FFTW_BACKWARD (+).
static std::vector<cplx> dft(const std::vector<cplx>& in, int sign) {
    std::vector<cplx> out(in.size());
    std::vector<cplx> buf(in);  // planner may touch the input array
    fftw_plan plan = fftw_plan_dft_1d(int(in.size()),
                                      reinterpret_cast<fftw_complex*>(buf.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()),
                                      sign, FFTW_ESTIMATE);
    if (!plan) throw std::runtime_error("fftw plan creation failed");
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    return out;
}

SpectralFunction forward_transform(const GridFunction& g) {
    const std::size_t n = g.size();
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("forward_transform: need an odd sample count >= 3");
    const std::size_t m = (n - 1) / 2;
    SpectralFunction s(2.0 * pi / (double(n) * g.dx), m);
    std::vector<cplx> B = dft(g.values, FFTW_BACKWARD);
    for (std::size_t p = 0; p < n; ++p) {
        long q = long(p) - long(m);
        std::size_t qf = std::size_t((q + long(n)) % long(n));
        double k = double(q) * s.dk;
        s.values[p] = g.dx * std::exp(cplx(0.0, k * g.x_start)) * B[qf];
    }
    return s;
}

GridFunction inverse_transform(const SpectralFunction& s, double x_start) {
    const std::size_t n = s.size();
    const std::size_t m = s.m;
    const double dx = 2.0 * pi / (double(n) * s.dk);
    if (std::isnan(x_start)) x_start = -double(m) * dx;
    std::vector<cplx> c(n);
    for (std::size_t p = 0; p < n; ++p) {
        long q = long(p) - long(m);
        std::size_t qf = std::size_t((q + long(n)) % long(n));
        c[qf] = s.values[p] * std::exp(cplx(0.0, -double(q) * s.dk * x_start));
    }
    std::vector<cplx> F = dft(c, FFTW_FORWARD);
    GridFunction g(x_start, dx, n, ValueKind::complex);
    const double scale = s.dk / (2.0 * pi);
    for (std::size_t j = 0; j < n; ++j) g.values[j] = scale * F[j];
    return g;
}

double l1_norm(const GridFunction& g) {
    std::vector<double> a(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) a[j] = std::abs(g.values[j]);
    return trapz(a, g.dx);
}

double l2_norm(const GridFunction& g) { return weighted_l2s_norm(g, 0.0); }

double weighted_l2s_norm(const GridFunction& g, double s) {
    std::vector<double> a(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        double w = std::pow(1.0 + std::abs(g.x(j)), 2.0 * s);
        a[j] = w * std::norm(g.values[j]);
    }
    return std::sqrt(trapz(a, g.dx));
}

double spectral_l2_norm(const SpectralFunction& g) {
    std::vector<double> a(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) a[j] = std::norm(g.values[j]);
    return std::sqrt(trapz(a, g.dk));
}

double spectral_sup_norm(const SpectralFunction& g) {
    double m = 0.0;
    for (const auto& v : g.values) m = std::max(m, std::abs(v));
    return m;
}

// Fraction of |P|^2 mass in the outer 2.5% of the window at each end; large
// values mean the preimage wraps around (aliasing) and the norm is unusable.
static void check_window_confinement(const GridFunction& P) {
    const std::size_t n = P.size();
    std::size_t edge = std::max<std::size_t>(2, n / 40);
    double outer = 0.0, total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double a = std::norm(P.values[j]);
        total += a;
        if (j < edge || j + edge >= n) outer += a;
    }
    if (total > 0.0 && outer / total > 1e-4)
        throw std::runtime_error("hs_norm: preimage mass at window edge (fraction " +
                                 std::to_string(outer / total) +
                                 "); data is not confined to the conjugate window");
}

double hs_norm(const SpectralFunction& g, double s) {
    GridFunction P = inverse_transform(g);
    check_window_confinement(P);
    return std::sqrt(2.0 * pi) * weighted_l2s_norm(P, s);
}

double hs_distance(const SpectralFunction& a, const SpectralFunction& b, double s) {
    if (a.m != b.m || std::abs(a.dk - b.dk) > 1e-12 * a.dk)
        throw std::invalid_argument("hs_distance: spectral grids differ");
    SpectralFunction d(a.dk, a.m);
    for (std::size_t j = 0; j < d.size(); ++j) d.values[j] = a.values[j] - b.values[j];
    return hs_norm(d, s);
}

double xhat_norm(const SpectralFunction& g) {
    GridFunction P = inverse_transform(g);
    check_window_confinement(P);
    return l1_norm(P) + l2_norm(P);
}

SpectralFunction algebra_reciprocal(const SpectralFunction& g, double eps) {
    SpectralFunction out(g.dk, g.m);
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (std::abs(g.values[j]) < eps)
            throw std::runtime_error("algebra_reciprocal: value within " + std::to_string(eps) +
                                     " of zero at k = " + std::to_string(g.k(j)));
        out.values[j] = 1.0 / g.values[j];
    }
    return out;
}

SpectralFunction compose_analytic(const SpectralFunction& g, const std::vector<double>& coeffs,
                                  double radius) {
    double mx = spectral_sup_norm(g);
    if (mx > radius)
        throw std::runtime_error("compose_analytic: |g| reaches " + std::to_string(mx) +
                                 ", outside the series radius " + std::to_string(radius));
    SpectralFunction out(g.dk, g.m);
    for (std::size_t j = 0; j < g.size(); ++j) {
        cplx acc = 0.0;
        for (std::size_t c = coeffs.size(); c-- > 0;) acc = acc * g.values[j] + coeffs[c];
        out.values[j] = acc;
    }
    return out;
}

}  // namespace riscat
