#include "riscat/inverse_map.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "riscat/involution.hpp"
#include "riscat/numerics.hpp"

namespace riscat {

namespace {

struct PoleFit {
    bool used = false;
    double c = 0.0, d = 0.0;
};

// Fit rho(k) = c/(2ik - d) on the outer band |k| >= 0.75 k_max by linear
// least squares on 1/r: Im(1/r) ~ (2/c) k, Re(1/r) ~ -d/c.
PoleFit fit_tail_pole(const SpectralFunction& r) {
    PoleFit fit;
    const double band = 0.75 * r.k_max();
    double skk = 0.0, ski = 0.0, sre = 0.0, mean_abs = 0.0;
    std::size_t cnt = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        const double k = r.k(j);
        if (std::abs(k) < band) continue;
        const double ar = std::abs(r.values[j]);
        mean_abs += ar;
        ++cnt;
        if (ar < 1e-12) return fit;  // reflection vanishes: nothing to subtract
        const cplx inv = 1.0 / r.values[j];
        skk += k * k;
        ski += k * inv.imag();
        sre += inv.real();
    }
    if (cnt < 8) return fit;
    mean_abs /= double(cnt);
    if (mean_abs < 1e-8) return fit;  // fast-decaying data: subtraction pointless
    const double slope = ski / skk;   // ~ 2/c
    if (std::abs(slope) < 1e-9) return fit;
    double c = 2.0 / slope;
    double d = -c * (sre / double(cnt));
    if (std::abs(c) < 1e-6) return fit;
    // Relative residual of the model over the band.
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        const double k = r.k(j);
        if (std::abs(k) < band) continue;
        const cplx model = c / (cplx(0.0, 2.0 * k) - d);
        num += std::norm(r.values[j] - model);
        den += std::norm(r.values[j]);
    }
    if (den <= 0.0 || std::sqrt(num / den) > 0.2) return fit;
    if (std::abs(d) < 0.05) d = (d < 0.0) ? -0.05 : 0.05;
    fit.used = true;
    fit.c = c;
    fit.d = d;
    return fit;
}

// Closed-form kernel of the pole model: (1/pi) int c e^{2ikx}/(2ik-d) dk,
// with the midpoint value at the jump node x = 0.
double pole_kernel(double c, double d, double x) {
    if (d > 0.0) {
        if (x < 0.0) return -c * std::exp(d * x);
        if (x == 0.0) return -0.5 * c;
        return 0.0;
    }
    if (x > 0.0) return c * std::exp(d * x);
    if (x == 0.0) return 0.5 * c;
    return 0.0;
}

}  // namespace

KernelBuildResult build_reflection_kernel(const SpectralFunction& r, double X,
                                          std::size_t n_intervals) {
    if (!(X > 0.0) || n_intervals < 4 || n_intervals % 2 != 0)
        throw std::invalid_argument("build_reflection_kernel: bad output grid");
    // The trapezoid sum below reproduces the kernel up to translates by
    // pi/dk.  Those images must fall outside the [-2X, 2X] window, or the
    // layer solves silently pick up mass from the opposite tail.
    if (pi / r.dk < 4.0 * X * (1.0 - 1e-12))
        throw std::invalid_argument(
            "build_reflection_kernel: frequency step too coarse for the window "
            "(need dk <= pi/(4X))");
    KernelBuildResult out;
    out.symmetry_defect = r.conj_symmetry_defect();

    const double dx = 2.0 * X / double(n_intervals);
    const std::size_t nF = 2 * n_intervals + 1;  // covers [-2X, 2X]
    out.F = GridFunction(-2.0 * X, dx, nF, ValueKind::real);

    PoleFit fit = fit_tail_pole(r);
    out.tail_subtracted = fit.used;
    out.tail_c = fit.c;
    out.tail_d = fit.d;

    // Quadrature part: (dk/pi) sum_j w_j (r - rho)(k_j) e^{2 i k_j x}.
    std::vector<cplx> acc(nF, cplx{});
    const double x0 = out.F.x_start;
    for (std::size_t j = 0; j < r.size(); ++j) {
        const double k = r.k(j);
        cplx g = r.values[j];
        if (fit.used) g -= fit.c / (cplx(0.0, 2.0 * k) - fit.d);
        double w = (j == 0 || j + 1 == r.size()) ? 0.5 : 1.0;
        const cplx coeff = (r.dk / pi) * w * g;
        cplx z = std::exp(cplx(0.0, 2.0 * k * x0));
        const cplx step = std::exp(cplx(0.0, 2.0 * k * dx));
        for (std::size_t i = 0; i < nF; ++i) {
            acc[i] += coeff * z;
            z *= step;
        }
    }
    double imag_res = 0.0;
    for (std::size_t i = 0; i < nF; ++i) {
        double v = acc[i].real();
        if (fit.used) v += pole_kernel(fit.c, fit.d, out.F.x(i));
        out.F.values[i] = v;
        imag_res = std::max(imag_res, std::abs(acc[i].imag()));
    }
    out.imag_residue = imag_res;
    return out;
}

namespace {

// One reconstruction solve at a fixed x with step dzeta = stride * dx.
struct PointSolve {
    double u = 0.0;
    double residual = 0.0;
    double lambda = 0.0;
    double route_gap = 0.0;
    double neumann_gap = -1.0;  // < 0: not evaluated
};

PointSolve glm_point(const GridFunction& F, std::size_t x_index, std::size_t stride,
                     std::size_t NZ, const GlmOptions& opt, bool diagnostics) {
    const double dz = double(stride) * F.dx;
    std::vector<double> K(2 * NZ - 1, 0.0);
    for (std::size_t i = 0; i < K.size(); ++i) {
        const std::size_t idx = x_index + i * stride;
        K[i] = (idx < F.size()) ? F.values[idx].real() : 0.0;
    }
    std::vector<double> w = trapz_weights(NZ, dz);

    Eigen::MatrixXd T(NZ, NZ);
    for (std::size_t i = 0; i < NZ; ++i)
        for (std::size_t j = 0; j < NZ; ++j) T(i, j) = K[i + j] * w[j];
    Eigen::VectorXd rhs(NZ);
    for (std::size_t i = 0; i < NZ; ++i) rhs(i) = K[i];

    const Eigen::MatrixXd Id = Eigen::MatrixXd::Identity(NZ, NZ);
    Eigen::VectorXd z = (Id - T).partialPivLu().solve(rhs);
    Eigen::VectorXd gamma = (Id + T).partialPivLu().solve(z);

    PointSolve ps;
    ps.u = gamma(0);
    ps.residual = ((Id - T) * ((Id + T) * gamma) - rhs).lpNorm<Eigen::Infinity>();

    if (!diagnostics) return ps;

    // Spectral radius of the symmetrized kernel D^{1/2} T D^{-1/2}.
    Eigen::MatrixXd S(NZ, NZ);
    for (std::size_t i = 0; i < NZ; ++i)
        for (std::size_t j = 0; j < NZ; ++j) S(i, j) = K[i + j] * std::sqrt(w[i] * w[j]);
    Eigen::VectorXd v(NZ);
    for (std::size_t i = 0; i < NZ; ++i) v(i) = 1.0 / double(1 + i);
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < 60; ++it) {
        Eigen::VectorXd nv = S * v;
        double nn = nv.norm();
        if (nn == 0.0) break;
        nv /= nn;
        double rq = nv.dot(S * nv);
        if (it > 4 && std::abs(std::abs(rq) - std::abs(lambda)) < 1e-12) {
            lambda = rq;
            break;
        }
        lambda = rq;
        v = nv;
    }
    ps.lambda = std::abs(lambda);

    // Second route: u = F(x) + <K, T gamma>.
    Eigen::VectorXd tg = T * gamma;
    double G = 0.0;
    for (std::size_t i = 0; i < NZ; ++i) G += w[i] * K[i] * tg(i);
    ps.route_gap = std::abs(ps.u - (K[0] + G));

    // Series route where the kernel is a strong contraction.
    double row_norm = 0.0;
    for (std::size_t i = 0; i < NZ; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < NZ; ++j) s += std::abs(T(i, j));
        row_norm = std::max(row_norm, s);
    }
    if (opt.neumann_diagnostic && row_norm < 0.9) {
        Eigen::VectorXd term = rhs, sum = rhs;
        for (int it = 0; it < 300; ++it) {
            term = T * (T * term);
            sum += term;
            if (term.lpNorm<Eigen::Infinity>() < 1e-13) break;
        }
        ps.neumann_gap = std::abs(sum(0) - ps.u);
    }
    return ps;
}

}  // namespace

GridFunction glm_reconstruct(const GridFunction& F, double X, std::size_t n_intervals,
                             const GlmOptions& opt, GlmDiagnostics* diag) {
    const std::size_t zd = opt.zeta_decimation, xd = opt.x_decimation;
    if (zd == 0 || xd == 0 || n_intervals % (2 * xd) != 0 || n_intervals % (2 * zd) != 0 ||
        xd % (2 * zd) != 0)
        throw std::invalid_argument(
            "glm_reconstruct: x_decimation must be a multiple of 2*zeta_decimation with "
            "2*x_decimation dividing n_intervals");
    const double dx = 2.0 * X / double(n_intervals);
    if (std::abs(F.dx - dx) > 1e-12 * dx || std::abs(F.x_start + 2.0 * X) > 1e-9)
        throw std::invalid_argument("glm_reconstruct: F must cover [-2X, 2X] with step dx");

    // The one-sided layer equation is solved only on [0, X]: that is the
    // half line where its kernel mass stays summable and the solve is well
    // conditioned; the opposite half belongs to the reflected problem.
    const std::size_t NR = n_intervals / (2 * xd) + 1;
    const std::size_t NZ = n_intervals / zd + 1;      // zeta nodes on [0, 2X]
    const std::size_t NZ2 = n_intervals / (2 * zd) + 1;
    GridFunction u(0.0, double(xd) * dx, NR, ValueKind::real);

    GlmDiagnostics local;
    for (std::size_t j = 0; j < NR; ++j) {
        // Index of x_j = j*xd*dx inside the F grid (which starts at -2X).
        const std::size_t xi = n_intervals + j * xd;
        PointSolve fine = glm_point(F, xi, zd, NZ, opt, true);
        PointSolve coarse = glm_point(F, xi, 2 * zd, NZ2, opt, false);
        u.values[j] = (4.0 * fine.u - coarse.u) / 3.0;

        local.max_residual = std::max(local.max_residual, fine.residual);
        local.max_lambda = std::max(local.max_lambda, fine.lambda);
        local.max_route_gap = std::max(local.max_route_gap, fine.route_gap);
        if (fine.neumann_gap >= 0.0)
            local.max_neumann_gap = std::max(local.max_neumann_gap, fine.neumann_gap);
        if (fine.lambda >= 1.0 - 1e-12)
            throw std::runtime_error("glm_reconstruct: kernel is not a contraction at x = " +
                                     std::to_string(u.x(j)));
    }
    local.max_cond = (1.0 + local.max_lambda * local.max_lambda) /
                     (1.0 - local.max_lambda * local.max_lambda);
    if (local.max_cond > opt.cond_limit)
        throw std::runtime_error("glm_reconstruct: estimated condition number " +
                                 std::to_string(local.max_cond) + " exceeds the limit");
    if (diag) *diag = local;
    return u;
}

std::vector<std::vector<double>> glm_correction_terms(const GridFunction& F,
                                                      const std::vector<double>& xs,
                                                      std::size_t zeta_decimation, int n_max) {
    if (n_max < 1) throw std::invalid_argument("glm_correction_terms: n_max >= 1");
    const std::size_t stride = zeta_decimation;
    const double dz = double(stride) * F.dx;
    // zeta range [0, half the F window].
    const std::size_t NZ = (F.size() - 1) / (2 * stride) + 1;
    std::vector<double> w = trapz_weights(NZ, dz);
    std::vector<std::vector<double>> out;
    for (double x : xs) {
        const long xi = std::lround((x - F.x_start) / F.dx);
        if (xi < 0 || std::size_t(xi) >= F.size())
            throw std::invalid_argument("glm_correction_terms: x outside the kernel window");
        std::vector<double> K(2 * NZ - 1, 0.0);
        for (std::size_t i = 0; i < K.size(); ++i) {
            const std::size_t idx = std::size_t(xi) + i * stride;
            K[i] = (idx < F.size()) ? F.values[idx].real() : 0.0;
        }
        auto apply_T = [&](const std::vector<double>& v) {
            std::vector<double> r(NZ, 0.0);
            for (std::size_t i = 0; i < NZ; ++i) {
                double s = 0.0;
                for (std::size_t t = 0; t < NZ; ++t) s += K[i + t] * w[t] * v[t];
                r[i] = s;
            }
            return r;
        };
        std::vector<double> base(K.begin(), K.begin() + NZ);
        std::vector<double> cur = apply_T(base);  // T^1 K
        std::vector<double> gs;
        for (int n = 1; n <= n_max; ++n) {
            double g = 0.0;
            for (std::size_t i = 0; i < NZ; ++i) g += w[i] * base[i] * cur[i];
            gs.push_back(g);
            if (n < n_max) cur = apply_T(apply_T(cur));  // advance T^{2n-1} -> T^{2n+1}
        }
        out.push_back(std::move(gs));
    }
    return out;
}

ReconstructionResult inverse_scattering(const SpectralFunction& r_minus,
                                        const SpectralFunction& r_tilde, bool generic, double X,
                                        std::size_t n_intervals, const GlmOptions& opt) {
    SpectralFunction rm = r_minus;
    const double defect = rm.symmetrize();
    if (defect > opt.symmetry_tol)
        throw std::runtime_error("inverse_scattering: reflection data breaks conjugate symmetry (defect " +
                                 std::to_string(defect) + ")");
    SpectralFunction r_sharp = involute_reflection(rm, r_tilde, generic);

    KernelBuildResult right = build_reflection_kernel(r_sharp, X, n_intervals);
    KernelBuildResult left = build_reflection_kernel(rm, X, n_intervals);

    ReconstructionResult res;
    res.symmetry_defect = defect;
    res.imag_residue = std::max(right.imag_residue, left.imag_residue);
    res.tail_subtracted = right.tail_subtracted || left.tail_subtracted;

    res.u_right = glm_reconstruct(right.F, X, n_intervals, opt, &res.glm_right);
    GridFunction wgrid = glm_reconstruct(left.F, X, n_intervals, opt, &res.glm_left);

    // u_left(x) = -w(-x): the reflected solve covers [-X, 0].
    const std::size_t NR = wgrid.size();
    res.u_left = GridFunction(-X, wgrid.dx, NR, ValueKind::real);
    for (std::size_t j = 0; j < NR; ++j) res.u_left.values[j] = -wgrid.values[NR - 1 - j];

    res.v0_rec = res.u_left.values[NR - 1].real() - res.u_right.values[0].real();
    return res;
}

}  // namespace riscat
