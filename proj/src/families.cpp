#include "riscat/families.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace riscat {

static void check_intervals(double X, std::size_t n) {
    if (!(X > 0.0)) throw std::invalid_argument("potential family: X must be positive");
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("potential family: n_intervals must be even and >= 4");
}

static RiccatiTriple symmetric_triple(double X, std::size_t n,
                                      std::function<double(double)> f, double v0) {
    const double dx = 2.0 * X / double(n);
    RiccatiTriple t;
    t.u_minus = Potential1D::from_callable(-X, dx, n + 1, f);
    t.u_plus = t.u_minus;
    t.v0 = v0;
    return t;
}

RiccatiTriple make_zero_triple(double X, std::size_t n_intervals) {
    check_intervals(X, n_intervals);
    return symmetric_triple(X, n_intervals, [](double) { return 0.0; }, 0.0);
}

RiccatiTriple make_delta_triple(double gamma, double X, std::size_t n_intervals) {
    check_intervals(X, n_intervals);
    if (!(gamma >= 0.0)) throw std::invalid_argument("make_delta_triple: gamma must be >= 0");
    return symmetric_triple(X, n_intervals, [](double) { return 0.0; }, gamma);
}

RiccatiTriple make_gaussian_triple(double l1_target, double sigma, double X,
                                   std::size_t n_intervals) {
    check_intervals(X, n_intervals);
    if (!(l1_target > 0.0) || !(sigma > 0.0))
        throw std::invalid_argument("make_gaussian_triple: l1_target and sigma must be positive");
    const double A = l1_target / (sigma * std::sqrt(2.0 * pi));
    return symmetric_triple(
        X, n_intervals, [A, sigma](double x) { return A * std::exp(-x * x / (2.0 * sigma * sigma)); },
        0.0);
}

RiccatiTriple make_smooth_box_triple(double c, double x1, double x2, double tau, double X,
                                     std::size_t n_intervals) {
    check_intervals(X, n_intervals);
    if (!(x1 < x2) || !(tau > 0.0))
        throw std::invalid_argument("make_smooth_box_triple: need x1 < x2 and tau > 0");
    return symmetric_triple(
        X, n_intervals,
        [c, x1, x2, tau](double x) {
            return 0.5 * c * (std::erf((x - x1) / tau) - std::erf((x - x2) / tau));
        },
        0.0);
}

RiccatiTriple make_sharp_box_triple(double c, double x1, double x2, double X,
                                    std::size_t n_intervals) {
    check_intervals(X, n_intervals);
    if (!(x1 < x2)) throw std::invalid_argument("make_sharp_box_triple: need x1 < x2");
    return symmetric_triple(
        X, n_intervals,
        [c, x1, x2](double x) { return (x >= x1 && x <= x2) ? c : 0.0; }, 0.0);
}

RiccatiTriple make_two_bump_triple(double X, std::size_t n_intervals) {
    check_intervals(X, n_intervals);
    const double dx = 2.0 * X / double(n_intervals);
    RiccatiTriple t;
    t.u_minus = Potential1D::from_callable(-X, dx, n_intervals + 1, [](double x) {
        double d = x + 2.0;
        return 0.5 * std::exp(-0.5 * d * d);
    });
    t.u_plus = Potential1D::from_callable(-X, dx, n_intervals + 1, [](double x) {
        double d = (x - 1.5) / 0.8;
        return 0.4 * std::exp(-0.5 * d * d);
    });
    t.v0 = 0.8;
    return t;
}

RiccatiTriple make_family(const std::string& name, const std::string& params_json, double X,
                          std::size_t n_intervals) {
    nlohmann::json p = params_json.empty() ? nlohmann::json::object()
                                           : nlohmann::json::parse(params_json);
    auto num = [&](const char* key, double dflt) { return p.value(key, dflt); };
    if (name == "zero") return make_zero_triple(X, n_intervals);
    if (name == "delta") return make_delta_triple(num("gamma", 2.0), X, n_intervals);
    if (name == "gaussian")
        return make_gaussian_triple(num("l1", 0.5), num("sigma", 1.0), X, n_intervals);
    if (name == "smooth_box")
        return make_smooth_box_triple(num("c", 0.75), num("x1", -1.5), num("x2", 1.5),
                                      num("tau", 0.35), X, n_intervals);
    if (name == "sharp_box")
        return make_sharp_box_triple(num("c", 0.75), num("x1", -1.5), num("x2", 1.5), X,
                                     n_intervals);
    if (name == "two_bump") return make_two_bump_triple(X, n_intervals);
    throw std::invalid_argument("make_family: unknown family '" + name + "'");
}

}  // namespace riscat
