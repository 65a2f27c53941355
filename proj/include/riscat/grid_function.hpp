// Uniformly sampled function on an interval of the real line.
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "riscat/numerics.hpp"

namespace riscat {

enum class ValueKind { real, complex };

// Samples f(x_start + j*dx), j = 0..n-1. Values are stored as complex;
// kind == real promises vanishing imaginary parts (enforced on demand).
struct GridFunction {
    double x_start = 0.0;
    double dx = 1.0;
    std::vector<cplx> values;
    ValueKind kind = ValueKind::real;

    GridFunction() = default;
    GridFunction(double x0, double step, std::size_t n, ValueKind k = ValueKind::real)
        : x_start(x0), dx(step), values(n, cplx{}), kind(k) {
        if (!(step > 0.0)) throw std::invalid_argument("GridFunction: dx must be positive");
    }

    std::size_t size() const { return values.size(); }
    double x(std::size_t j) const { return x_start + double(j) * dx; }
    double x_end() const { return values.empty() ? x_start : x(values.size() - 1); }

    double real_at(std::size_t j) const { return values[j].real(); }

    // Largest imaginary magnitude; a realness defect for kind==real data.
    double imag_defect() const {
        double d = 0.0;
        for (const auto& v : values) d = std::max(d, std::abs(v.imag()));
        return d;
    }

    void require_real(double tol, const char* who) const {
        if (imag_defect() > tol)
            throw std::runtime_error(std::string(who) + ": imaginary residue " +
                                     std::to_string(imag_defect()) + " exceeds tolerance");
    }

    std::vector<double> real_values() const {
        std::vector<double> r(values.size());
        for (std::size_t j = 0; j < values.size(); ++j) r[j] = values[j].real();
        return r;
    }
};

// Sample an analytic function on [x0, x0 + (n-1) dx].
template <class F>
GridFunction sample_grid(double x0, double dx, std::size_t n, F&& f,
                         ValueKind kind = ValueKind::real) {
    GridFunction g(x0, dx, n, kind);
    for (std::size_t j = 0; j < n; ++j) g.values[j] = cplx(f(g.x(j)));
    return g;
}

}  // namespace riscat
