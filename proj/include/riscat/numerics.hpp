// Shared low-level numerics: quadrature, finite differences, cubic spline
// interpolation, an adaptive Dormand-Prince integrator for small complex
// systems, and a chunked parallel_for.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace riscat {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// ---------------------------------------------------------------- quadrature

// Trapezoid rule on a uniform grid.
template <class T>
T trapz(const std::vector<T>& f, double h) {
    if (f.size() < 2) return T{};
    T s = T{};
    for (std::size_t j = 1; j + 1 < f.size(); ++j) s += f[j];
    s += 0.5 * (f.front() + f.back());
    return s * h;
}

// Trapezoid weights for n samples spaced h.
inline std::vector<double> trapz_weights(std::size_t n, double h) {
    std::vector<double> w(n, h);
    if (n >= 1) w.front() = 0.5 * h;
    if (n >= 2) w.back() = 0.5 * h;
    return w;
}

// Derivative estimates on a uniform grid, 4th order in the interior and
// one-sided at the ends. Used for Euler-Maclaurin endpoint corrections.
template <class T>
std::vector<T> fd_derivative(const std::vector<T>& f, double h) {
    const std::size_t n = f.size();
    std::vector<T> d(n, T{});
    if (n < 2) return d;
    if (n < 5) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == 0)
                d[j] = (f[1] - f[0]) / h;
            else if (j + 1 == n)
                d[j] = (f[n - 1] - f[n - 2]) / h;
            else
                d[j] = (f[j + 1] - f[j - 1]) / (2.0 * h);
        }
        return d;
    }
    for (std::size_t j = 2; j + 2 < n; ++j)
        d[j] = (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]) / (12.0 * h);
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) / (12.0 * h);
    d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) / (12.0 * h);
    return d;
}

// Reverse cumulative integral S[m] = int_{x_m}^{x_hi} f dx on f[lo..hi] with
// Euler-Maclaurin endpoint correction: trapz - h^2/12 (f'(hi) - f'(m)), which
// is 4th-order accurate for f smooth on [x_lo, x_hi]. Entries outside
// [lo, hi] are zero. Result has the same length as f.
template <class T>
std::vector<T> cumint_reverse_em(const std::vector<T>& f, double h,
                                 std::size_t lo, std::size_t hi) {
    const std::size_t n = f.size();
    std::vector<T> S(n, T{});
    if (hi >= n || lo > hi || hi - lo < 1) return S;
    std::vector<T> seg(f.begin() + lo, f.begin() + hi + 1);
    std::vector<T> dseg = fd_derivative(seg, h);
    T acc = T{};
    S[hi] = T{};
    for (std::size_t m = hi; m-- > lo;) {
        acc += 0.5 * h * (f[m] + f[m + 1]);
        S[m] = acc - (h * h / 12.0) * (dseg[hi - lo] - dseg[m - lo]);
    }
    return S;
}

// Definite integral with the same Euler-Maclaurin correction.
template <class T>
T integrate_em(const std::vector<T>& f, double h) {
    if (f.size() < 2) return T{};
    std::vector<T> d = fd_derivative(f, h);
    return trapz(f, h) - (h * h / 12.0) * (d.back() - d.front());
}

// ---------------------------------------------------------------- spline

// Natural cubic spline through uniformly spaced samples; evaluates to zero
// outside the sampled window (all potentials are compactly supported by
// construction).
class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(double x0, double h, std::vector<double> y)
        : x0_(x0), h_(h), y_(std::move(y)) {
        const std::size_t n = y_.size();
        m_.assign(n, 0.0);
        if (n < 3) return;
        // Tridiagonal system (1,4,1) for the interior second derivatives,
        // natural end conditions m_0 = m_{n-1} = 0. Thomas algorithm.
        const std::size_t k = n - 2;
        std::vector<double> b(k, 4.0), r(k);
        for (std::size_t i = 0; i < k; ++i)
            r[i] = 6.0 * (y_[i + 2] - 2.0 * y_[i + 1] + y_[i]) / (h_ * h_);
        for (std::size_t i = 1; i < k; ++i) {
            double w = 1.0 / b[i - 1];
            b[i] -= w;
            r[i] -= w * r[i - 1];
        }
        m_[k] = r[k - 1] / b[k - 1];
        for (std::size_t i = k - 1; i-- > 0;) m_[i + 1] = (r[i] - m_[i + 2]) / b[i];
    }

    double operator()(double x) const {
        const std::size_t n = y_.size();
        if (n == 0) return 0.0;
        if (n == 1) return 0.0;
        double t = (x - x0_) / h_;
        if (t < 0.0 || t > double(n - 1)) return 0.0;
        std::size_t i = std::min<std::size_t>(std::size_t(t), n - 2);
        double a = x - (x0_ + double(i) * h_);
        double b = h_ - a;
        // Standard cubic-spline segment formula with second derivatives m_.
        return (m_[i] * b * b * b + m_[i + 1] * a * a * a) / (6.0 * h_) +
               (y_[i] / h_ - m_[i] * h_ / 6.0) * b + (y_[i + 1] / h_ - m_[i + 1] * h_ / 6.0) * a;
    }

  private:
    double x0_ = 0.0, h_ = 1.0;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives at nodes
};

// ---------------------------------------------------------------- ODE

// Adaptive Dormand-Prince 5(4) integrator for a fixed-size complex system.
// Steps from x0 to x1 (either direction), returns the terminal state.
template <std::size_t N>
struct OdeResult {
    std::array<cplx, N> y;
    std::size_t steps = 0;
    std::size_t rejected = 0;
};

template <std::size_t N, class Rhs>
OdeResult<N> integrate_rkdp(Rhs&& rhs, std::array<cplx, N> y, double x0, double x1,
                            double rtol, double atol, std::size_t max_steps = 2000000) {
    OdeResult<N> out;
    if (x0 == x1) {
        out.y = y;
        return out;
    }
    const double dir = (x1 > x0) ? 1.0 : -1.0;
    double x = x0;
    double h = dir * std::min(0.1, std::abs(x1 - x0));
    using V = std::array<cplx, N>;
    V k1, k2, k3, k4, k5, k6, k7, yt, y5, y4;
    rhs(x, y, k1);
    std::size_t steps = 0;
    while (dir * (x1 - x) > 0.0) {
        if (++steps > max_steps) throw std::runtime_error("rkdp: step limit exceeded");
        if (dir * (x + h - x1) > 0.0) h = x1 - x;
        auto stage = [&](const std::array<double, 6>& c, V& k, double frac) {
            for (std::size_t i = 0; i < N; ++i) {
                cplx s = c[0] * k1[i] + c[1] * k2[i] + c[2] * k3[i] + c[3] * k4[i] + c[4] * k5[i] + c[5] * k6[i];
                yt[i] = y[i] + h * s;
            }
            rhs(x + frac * h, yt, k);
        };
        stage({1.0 / 5, 0, 0, 0, 0, 0}, k2, 1.0 / 5);
        stage({3.0 / 40, 9.0 / 40, 0, 0, 0, 0}, k3, 3.0 / 10);
        stage({44.0 / 45, -56.0 / 15, 32.0 / 9, 0, 0, 0}, k4, 4.0 / 5);
        stage({19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729, 0, 0}, k5, 8.0 / 9);
        stage({9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656, 0}, k6, 1.0);
        for (std::size_t i = 0; i < N; ++i) {
            cplx s = (35.0 / 384) * k1[i] + (500.0 / 1113) * k3[i] + (125.0 / 192) * k4[i] +
                     (-2187.0 / 6784) * k5[i] + (11.0 / 84) * k6[i];
            y5[i] = y[i] + h * s;
        }
        rhs(x + h, y5, k7);
        for (std::size_t i = 0; i < N; ++i) {
            cplx s = (5179.0 / 57600) * k1[i] + (7571.0 / 16695) * k3[i] + (393.0 / 640) * k4[i] +
                     (-92097.0 / 339200) * k5[i] + (187.0 / 2100) * k6[i] + (1.0 / 40) * k7[i];
            y4[i] = y[i] + h * s;
        }
        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            double e = std::abs(y5[i] - y4[i]) / sc;
            err = std::max(err, e);
        }
        if (!std::isfinite(err)) throw std::runtime_error("rkdp: non-finite state");
        if (err <= 1.0) {
            x += h;
            y = y5;
            k1 = k7;  // FSAL
            ++out.steps;
        } else {
            ++out.rejected;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        fac = std::min(5.0, std::max(0.2, fac));
        h *= fac;
        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(x)))
            throw std::runtime_error("rkdp: step size underflow (tolerance not met)");
    }
    out.y = y;
    return out;
}

// ---------------------------------------------------------------- parallel

// Chunked parallel loop. Thread count from RISCAT_THREADS (default: hardware).
// Each index writes only its own slot, so results are deterministic.
inline unsigned thread_count() {
    if (const char* e = std::getenv("RISCAT_THREADS")) {
        long v = std::strtol(e, nullptr, 10);
        if (v >= 1) return unsigned(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    unsigned nt = std::min<std::size_t>(thread_count(), n ? n : 1);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
        std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace riscat
