#include "riscat/zsakns.hpp"

#include <cmath>
#include <stdexcept>

namespace riscat {

namespace {

template <class U>
OdeResult<2> run_column(const U& u, double x_from, double x_to, double k,
                        const OdeOptions& opt) {
    auto rhs = [&u, k](double x, const std::array<cplx, 2>& y, std::array<cplx, 2>& dy) {
        const double c = u(x);
        dy[0] = c * std::exp(cplx(0.0, -2.0 * x * k)) * y[1];
        dy[1] = c * std::exp(cplx(0.0, 2.0 * x * k)) * y[0];
    };
    return integrate_rkdp<2>(rhs, {cplx(1.0, 0.0), cplx(0.0, 0.0)}, x_from, x_to, opt.rtol,
                             opt.atol);
}

}  // namespace

JostColumn jost_plus(const Potential1D& u_plus, double x_eval, double k, const OdeOptions& opt) {
    if (x_eval < 0.0) throw std::invalid_argument("jost_plus: x_eval must be >= 0");
    JostColumn out;
    if (u_plus.is_zero()) return out;
    const double start = u_plus.support_hi();
    const double stop = std::max(x_eval, u_plus.support_lo());
    if (stop >= start) return out;
    auto res = run_column(u_plus, start, stop, k, opt);
    out.n11 = res.y[0];
    out.n21 = res.y[1];
    return out;
}

JostColumn jost_minus(const Potential1D& u_minus, double x_eval, double k,
                      const OdeOptions& opt) {
    if (x_eval > 0.0) throw std::invalid_argument("jost_minus: x_eval must be <= 0");
    JostColumn out;
    if (u_minus.is_zero()) return out;
    const double start = u_minus.support_lo();
    const double stop = std::min(x_eval, u_minus.support_hi());
    if (stop <= start) return out;
    auto res = run_column(u_minus, start, stop, k, opt);
    out.n11 = res.y[0];
    out.n21 = res.y[1];
    return out;
}

double det_defect(const JostColumn& c) {
    return std::norm(c.n11) - std::norm(c.n21) - 1.0;
}

cplx wave_value(const JostColumn& c, double x, double k) {
    return std::exp(cplx(0.0, x * k)) * c.n11 + std::exp(cplx(0.0, -x * k)) * c.n21;
}

cplx wave_quasi_derivative(const JostColumn& c, double x, double k) {
    return cplx(0.0, k) *
           (std::exp(cplx(0.0, x * k)) * c.n11 - std::exp(cplx(0.0, -x * k)) * c.n21);
}

std::array<cplx, 2> propagate_schrodinger(const Potential1D& u, std::array<cplx, 2> y,
                                          double x_from, double x_to, double k,
                                          const OdeOptions& opt) {
    auto rhs = [&u, k](double x, const std::array<cplx, 2>& s, std::array<cplx, 2>& ds) {
        const double c = u(x);
        ds[0] = c * s[0] + s[1];
        ds[1] = -k * k * s[0] - c * s[1];
    };
    auto res = integrate_rkdp<2>(rhs, y, x_from, x_to, opt.rtol, opt.atol);
    return res.y;
}

// ---------------------------------------------------------------- expansion

namespace {

double row_weighted_norm(const std::vector<double>& flat, std::size_t n, double h,
                         std::size_t i, double s, bool half_support) {
    // ||K(x_i, .)||_{L^{2,s}} over z >= (half_support ? x_i : 0).
    std::size_t j0 = half_support ? i : 0;
    if (j0 >= n) return 0.0;
    std::vector<double> a(n - j0);
    for (std::size_t j = j0; j < n; ++j) {
        double w = std::pow(1.0 + double(j) * h, 2.0 * s);
        double v = flat[i * n + j];
        a[j - j0] = w * v * v;
    }
    return std::sqrt(trapz(a, h));
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

SeriesExpansion compute_series_expansion(const std::vector<double>& u, double h, int max_order,
                                         const std::vector<std::size_t>& probe_indices,
                                         double s_weight) {
    const std::size_t n = u.size();
    if (n < 8) throw std::invalid_argument("compute_series_expansion: grid too small");
    if (max_order < 1) throw std::invalid_argument("compute_series_expansion: max_order >= 1");
    SeriesExpansion se;
    se.h = h;
    se.n = n;
    se.probes = probe_indices;
    se.s_weight = s_weight;
    se.A_total.assign(n * n, 0.0);
    se.C_total.assign(n * n, 0.0);

    std::vector<double> C(n * n, 0.0), A(n * n, 0.0), Cnext;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) C[i * n + j] = -u[j];

    std::vector<double> g(n);
    for (int order = 1; order <= max_order; ++order) {
        for (std::size_t idx = 0; idx < C.size(); ++idx) se.C_total[idx] += C[idx];

        // A_order(x_i, z_j) = -int_{x_i}^{inf} u(y) C(y, z_j + y) dy
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i)
                g[i] = (i + j < n) ? u[i] * C[i * n + (i + j)] : 0.0;
            std::vector<double> S = cumint_reverse_em(g, h, 0, n - 1);
            for (std::size_t i = 0; i < n; ++i) A[i * n + j] = -S[i];
        }
        for (std::size_t idx = 0; idx < A.size(); ++idx) se.A_total[idx] += A[idx];

        se.order_row_norms.emplace_back();
        for (std::size_t p : se.probes)
            se.order_row_norms.back().push_back(
                {row_weighted_norm(A, n, h, p, s_weight, false),
                 row_weighted_norm(C, n, h, p, s_weight, true)});
        se.orders = order;

        if (order == max_order) break;

        // C_{order+1}(x_i, z_j) = -int_{x_i}^{z_j} u(y) A(y, z_j - y) dy
        Cnext.assign(n * n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t m = 0; m <= j; ++m) g[m] = u[m] * A[m * n + (j - m)];
            std::vector<double> S = cumint_reverse_em(g, h, 0, j);
            for (std::size_t i = 0; i <= j; ++i) Cnext[i * n + j] = -S[i];
        }
        C.swap(Cnext);
        if (max_abs(A) < 1e-17 && max_abs(C) < 1e-17) break;
    }
    return se;
}

std::array<cplx, 2> series_evaluate(const SeriesExpansion& se, std::size_t x_index, double k) {
    const std::size_t n = se.n;
    if (x_index >= n) throw std::invalid_argument("series_evaluate: x_index out of range");
    std::vector<cplx> rowA(n), rowC(n - x_index);
    for (std::size_t j = 0; j < n; ++j) {
        double z = double(j) * se.h;
        rowA[j] = se.A_total[x_index * n + j] * std::exp(cplx(0.0, 2.0 * z * k));
    }
    for (std::size_t j = x_index; j < n; ++j) {
        double z = double(j) * se.h;
        rowC[j - x_index] = se.C_total[x_index * n + j] * std::exp(cplx(0.0, 2.0 * z * k));
    }
    cplx a = integrate_em(rowA, se.h);
    cplx c = rowC.size() >= 2 ? integrate_em(rowC, se.h) : cplx{};
    return {a, c};
}

}  // namespace riscat
