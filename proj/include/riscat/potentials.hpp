// Riccati-form potential data: a pair of half-line derivative representatives
// u_minus / u_plus on a common symmetric grid plus a nonnegative point-mass
// weight v0 at the origin. The represented Schrodinger potential is
// q = u' + u^2 on each half line together with a quasi-derivative jump of
// size v0 at x = 0.
#pragma once

#include <functional>
#include <optional>

#include "riscat/grid_function.hpp"

namespace riscat {

// Real function sampled on a uniform grid, evaluable off-grid through an
// optional analytic callable (preferred) or a cubic spline of the samples.
// Evaluates to zero outside the sampled window.
class Potential1D {
  public:
    Potential1D() = default;

    static Potential1D from_samples(GridFunction samples);
    static Potential1D from_callable(double x_start, double dx, std::size_t n,
                                     std::function<double(double)> f);

    const GridFunction& samples() const { return samples_; }
    bool has_analytic() const { return bool(analytic_); }

    double operator()(double x) const;

    // Smallest interval outside which all samples are negligible
    // (|u| <= 1e-13 * max|u|). Empty support reports lo > hi.
    double support_lo() const { return supp_lo_; }
    double support_hi() const { return supp_hi_; }
    bool is_zero() const { return supp_lo_ > supp_hi_; }

    double l1() const;  // integral of |u| over the window
    double l2() const;

  private:
    void finish_init();

    GridFunction samples_;
    std::function<double(double)> analytic_;
    CubicSpline spline_;
    double supp_lo_ = 1.0, supp_hi_ = -1.0;
};

struct RiccatiTriple {
    Potential1D u_minus;  // used on [-X, 0]
    Potential1D u_plus;   // used on [0, X]
    double v0 = 0.0;      // point-mass weight at the origin, >= 0

    double X() const { return samples_plus().x_end(); }
    const GridFunction& samples_minus() const { return u_minus.samples(); }
    const GridFunction& samples_plus() const { return u_plus.samples(); }
    bool exceptional() const { return v0 == 0.0; }
};

// Structural checks: matching symmetric grids with an odd sample count and a
// node at x = 0, finite real samples, v0 >= 0 (std::invalid_argument), and
// sample decay at the window ends (std::runtime_error when the support
// touches the boundary).
void validate_triple(const RiccatiTriple& t);

// q = u' + u^2 assembled from the two representatives; the x = 0 node takes
// the right-hand value. Meaningful only where u is smooth.
GridFunction miura_potential(const RiccatiTriple& t);

// Quadratic form of the represented operator at a real test function phi on
// the same grid:
//   Q[phi] = int_{-X}^{0} |phi' - u_minus phi|^2
//          + int_{0}^{X}  |phi' - u_plus  phi|^2  + v0 |phi(0)|^2,
// nonnegative for every valid triple.
double quadratic_form_value(const RiccatiTriple& t, const GridFunction& phi);

}  // namespace riscat
