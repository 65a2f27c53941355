// Function sampled on a symmetric frequency grid k_j = (j - m) * dk.
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "riscat/numerics.hpp"

namespace riscat {

// 2m+1 samples at k = -m*dk .. m*dk. Index m is k = 0; the index of -k_j is
// 2m - j, which is what the reflection helpers use.
struct SpectralFunction {
    double dk = 1.0;
    std::size_t m = 0;
    std::vector<cplx> values;

    SpectralFunction() = default;
    SpectralFunction(double step, std::size_t half_count)
        : dk(step), m(half_count), values(2 * half_count + 1, cplx{}) {
        if (!(step > 0.0)) throw std::invalid_argument("SpectralFunction: dk must be positive");
    }

    std::size_t size() const { return values.size(); }
    double k(std::size_t j) const { return (double(j) - double(m)) * dk; }
    double k_max() const { return double(m) * dk; }
    std::size_t index_of_zero() const { return m; }
    std::size_t reflect(std::size_t j) const { return 2 * m - j; }

    cplx at_zero() const { return values[m]; }

    // Value at -k_j.
    cplx at_reflected(std::size_t j) const { return values[2 * m - j]; }

    // Hermitian symmetry defect max_j |f(k_j) - conj(f(-k_j))|; zero for the
    // transform of real data.
    double conj_symmetry_defect() const {
        double d = 0.0;
        for (std::size_t j = 0; j < values.size(); ++j)
            d = std::max(d, std::abs(values[j] - std::conj(values[2 * m - j])));
        return d;
    }

    // Replace f by the average of f(k) and conj(f(-k)); returns the defect
    // that was removed.
    double symmetrize() {
        double d = conj_symmetry_defect();
        std::vector<cplx> s(values.size());
        for (std::size_t j = 0; j < values.size(); ++j)
            s[j] = 0.5 * (values[j] + std::conj(values[2 * m - j]));
        values = std::move(s);
        return d;
    }
};

template <class F>
SpectralFunction sample_spectral(double dk, std::size_t m, F&& f) {
    SpectralFunction s(dk, m);
    for (std::size_t j = 0; j < s.size(); ++j) s.values[j] = cplx(f(s.k(j)));
    return s;
}

}  // namespace riscat
