#include "riscat/potentials.hpp"

#include <cmath>
#include <stdexcept>

namespace riscat {

Potential1D Potential1D::from_samples(GridFunction samples) {
    Potential1D p;
    p.samples_ = std::move(samples);
    p.finish_init();
    return p;
}

Potential1D Potential1D::from_callable(double x_start, double dx, std::size_t n,
                                       std::function<double(double)> f) {
    Potential1D p;
    p.samples_ = sample_grid(x_start, dx, n, f);
    p.analytic_ = std::move(f);
    p.finish_init();
    return p;
}

void Potential1D::finish_init() {
    samples_.require_real(0.0, "Potential1D");
    double mx = 0.0;
    for (const auto& v : samples_.values) {
        if (!std::isfinite(v.real()))
            throw std::invalid_argument("Potential1D: non-finite sample");
        mx = std::max(mx, std::abs(v.real()));
    }
    const double thresh = 1e-13 * mx;
    std::size_t lo = samples_.size(), hi = 0;
    for (std::size_t j = 0; j < samples_.size(); ++j) {
        if (std::abs(samples_.values[j].real()) > thresh) {
            lo = std::min(lo, j);
            hi = std::max(hi, j);
        }
    }
    if (mx == 0.0 || lo > hi) {
        supp_lo_ = 1.0;
        supp_hi_ = -1.0;
    } else {
        supp_lo_ = samples_.x(lo) - samples_.dx;
        supp_hi_ = samples_.x(hi) + samples_.dx;
        supp_lo_ = std::max(supp_lo_, samples_.x_start);
        supp_hi_ = std::min(supp_hi_, samples_.x_end());
    }
    if (!analytic_) spline_ = CubicSpline(samples_.x_start, samples_.dx, samples_.real_values());
}

double Potential1D::operator()(double x) const {
    if (is_zero()) return 0.0;
    if (x < samples_.x_start || x > samples_.x_end()) return 0.0;
    if (analytic_) return analytic_(x);
    return spline_(x);
}

double Potential1D::l1() const {
    std::vector<double> a(samples_.size());
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = std::abs(samples_.values[j].real());
    return trapz(a, samples_.dx);
}

double Potential1D::l2() const {
    std::vector<double> a(samples_.size());
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = std::norm(samples_.values[j]);
    return std::sqrt(trapz(a, samples_.dx));
}

static void check_grid(const GridFunction& g, const char* who) {
    if (g.size() < 5 || g.size() % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": need an odd sample count >= 5");
    double X = g.x_end();
    if (std::abs(g.x_start + X) > 1e-12 * std::max(1.0, X))
        throw std::invalid_argument(std::string(who) + ": grid must be symmetric about 0");
}

void validate_triple(const RiccatiTriple& t) {
    check_grid(t.samples_minus(), "validate_triple(u_minus)");
    check_grid(t.samples_plus(), "validate_triple(u_plus)");
    const GridFunction& gm = t.samples_minus();
    const GridFunction& gp = t.samples_plus();
    if (gm.size() != gp.size() || std::abs(gm.dx - gp.dx) > 1e-15 ||
        std::abs(gm.x_start - gp.x_start) > 1e-12)
        throw std::invalid_argument("validate_triple: u_minus and u_plus grids differ");
    if (!(t.v0 >= 0.0)) throw std::invalid_argument("validate_triple: v0 must be >= 0");
    auto tail_ok = [](const Potential1D& u) {
        const GridFunction& g = u.samples();
        double mx = 0.0;
        for (const auto& v : g.values) mx = std::max(mx, std::abs(v.real()));
        double edge = std::max(std::abs(g.values.front().real()), std::abs(g.values.back().real()));
        return edge <= 1e-6 * (1.0 + mx);
    };
    if (!tail_ok(t.u_minus) || !tail_ok(t.u_plus))
        throw std::runtime_error("validate_triple: samples do not decay at the window ends");
}

GridFunction miura_potential(const RiccatiTriple& t) {
    validate_triple(t);
    const GridFunction& gm = t.samples_minus();
    const GridFunction& gp = t.samples_plus();
    const std::size_t n = gp.size();
    const std::size_t mid = (n - 1) / 2;
    GridFunction q(gp.x_start, gp.dx, n, ValueKind::real);
    // Left half from u_minus samples, right half (including x = 0) from u_plus.
    std::vector<double> left(gm.real_values().begin(), gm.real_values().begin() + mid + 1);
    std::vector<double> right(gp.real_values().begin() + mid, gp.real_values().end());
    std::vector<double> dl = fd_derivative(left, gm.dx);
    std::vector<double> dr = fd_derivative(right, gp.dx);
    for (std::size_t j = 0; j < mid; ++j) q.values[j] = dl[j] + left[j] * left[j];
    for (std::size_t j = mid; j < n; ++j) {
        double u = right[j - mid];
        q.values[j] = dr[j - mid] + u * u;
    }
    return q;
}

double quadratic_form_value(const RiccatiTriple& t, const GridFunction& phi) {
    validate_triple(t);
    const GridFunction& gp = t.samples_plus();
    if (phi.size() != gp.size() || std::abs(phi.dx - gp.dx) > 1e-15 ||
        std::abs(phi.x_start - gp.x_start) > 1e-12)
        throw std::invalid_argument("quadratic_form_value: phi grid differs from triple grid");
    phi.require_real(1e-12, "quadratic_form_value");
    const std::size_t n = phi.size();
    const std::size_t mid = (n - 1) / 2;
    std::vector<double> ph = phi.real_values();
    std::vector<double> dph = fd_derivative(ph, phi.dx);
    std::vector<double> left(mid + 1), right(n - mid);
    for (std::size_t j = 0; j <= mid; ++j) {
        double d = dph[j] - t.samples_minus().real_at(j) * ph[j];
        left[j] = d * d;
    }
    for (std::size_t j = mid; j < n; ++j) {
        double d = dph[j] - t.samples_plus().real_at(j) * ph[j];
        right[j - mid] = d * d;
    }
    return trapz(left, phi.dx) + trapz(right, phi.dx) + t.v0 * ph[mid] * ph[mid];
}

}  // namespace riscat
