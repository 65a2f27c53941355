#include "riscat/direct_map.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "riscat/sobolev.hpp"

namespace riscat {

namespace {

struct ColumnData {
    std::vector<cplx> n11p, n21p, n11m, n21m;
};

// Plus and minus columns at x = 0 on the full grid; k < 0 filled by the
// real-potential symmetry n(-k) = conj(n(k)).
ColumnData columns_at_zero(const RiccatiTriple& t, const SpectralFunction& grid,
                           const OdeOptions& ode) {
    const std::size_t M = grid.m;
    ColumnData cd;
    cd.n11p.resize(grid.size());
    cd.n21p.resize(grid.size());
    cd.n11m.resize(grid.size());
    cd.n21m.resize(grid.size());
    parallel_for(M + 1, [&](std::size_t j) {
        const double k = double(j) * grid.dk;
        JostColumn p = jost_plus(t.u_plus, 0.0, k, ode);
        JostColumn m = jost_minus(t.u_minus, 0.0, k, ode);
        cd.n11p[M + j] = p.n11;
        cd.n21p[M + j] = p.n21;
        cd.n11m[M + j] = m.n11;
        cd.n21m[M + j] = m.n21;
    });
    for (std::size_t j = 1; j <= M; ++j) {
        cd.n11p[M - j] = std::conj(cd.n11p[M + j]);
        cd.n21p[M - j] = std::conj(cd.n21p[M + j]);
        cd.n11m[M - j] = std::conj(cd.n11m[M + j]);
        cd.n21m[M - j] = std::conj(cd.n21m[M + j]);
    }
    return cd;
}

}  // namespace

ScatteringData direct_scattering(const RiccatiTriple& t, const SpectralGridSpec& spec,
                                 const OdeOptions& ode) {
    validate_triple(t);
    if (!(spec.k_target > 0.0))
        throw std::invalid_argument("direct_scattering: k_target must be positive");
    if (spec.oversample == 0)
        throw std::invalid_argument("direct_scattering: oversample must be positive");
    const double X = t.X();
    const double dk = pi / (2.0 * X * double(spec.oversample));
    const std::size_t M = std::size_t(std::ceil(spec.k_target / dk - 1e-12));

    ScatteringData sd;
    sd.v0 = t.v0;
    sd.generic = t.v0 > 0.0;
    sd.r_minus = SpectralFunction(dk, M);
    sd.r_plus = SpectralFunction(dk, M);
    sd.a_tilde = SpectralFunction(dk, M);
    sd.b_tilde = SpectralFunction(dk, M);
    sd.r_tilde = SpectralFunction(dk, M);

    ColumnData cd = columns_at_zero(t, sd.r_minus, ode);

    const std::size_t n = sd.r_minus.size();
    std::vector<cplx> det_a(n), det_b(n);
    const cplx I(0.0, 1.0);
    double max_det_defect = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double k = sd.r_minus.k(j);
        const cplx fp = cd.n11p[j] + cd.n21p[j];
        const cplx fm = std::conj(cd.n11m[j]) + std::conj(cd.n21m[j]);
        // fm at -k equals n11m(k) + n21m(k) by the same symmetry.
        const cplx fm_neg = cd.n11m[j] + cd.n21m[j];
        det_a[j] = cd.n11p[j] * std::conj(cd.n11m[j]) - cd.n21p[j] * std::conj(cd.n21m[j]);
        det_b[j] = cd.n21p[j] * cd.n11m[j] - cd.n11p[j] * cd.n21m[j];
        sd.a_tilde.values[j] = (k * det_a[j] - t.v0 * fp * fm / (2.0 * I)) / (k + I);
        sd.b_tilde.values[j] = (k * det_b[j] + t.v0 * fp * fm_neg / (2.0 * I)) / (k + I);
        max_det_defect = std::max(
            max_det_defect,
            std::abs(std::norm(cd.n11p[j]) - std::norm(cd.n21p[j]) - 1.0));
        max_det_defect = std::max(
            max_det_defect,
            std::abs(std::norm(cd.n11m[j]) - std::norm(cd.n21m[j]) - 1.0));
    }

    for (std::size_t j = 0; j < n; ++j) {
        const double k = sd.r_minus.k(j);
        const cplx at = sd.a_tilde.values[j];
        const cplx bt_ref = sd.b_tilde.values[sd.b_tilde.reflect(j)];
        if (j == sd.r_minus.index_of_zero() && !sd.generic) {
            // Exceptional class: at(0) = bt(0) = 0; take the k -> 0 limits
            // r_minus(0) = det_b/det_a, r_plus(0) = -det_b/det_a.
            const cplx lim = det_b[j] / det_a[j];
            sd.r_minus.values[j] = lim;
            sd.r_plus.values[j] = -lim;
            sd.r_tilde.values[j] = cplx(std::numeric_limits<double>::infinity(), 0.0);
            continue;
        }
        if (std::abs(at) < 1e-13)
            throw std::runtime_error("direct_scattering: regularized coefficient vanishes at k = " +
                                     std::to_string(k));
        sd.r_minus.values[j] = sd.b_tilde.values[j] / at;
        sd.r_plus.values[j] = (I - k) / (I + k) * bt_ref / at;
        sd.r_tilde.values[j] = 1.0 / ((k * k + 1.0) * std::norm(at));
    }

    // Diagnostics away from k = 0.
    ScatteringDiagnostics& dg = sd.diag;
    dg.max_det_defect = max_det_defect;
    for (std::size_t j = 0; j < n; ++j) {
        const double k = sd.r_minus.k(j);
        if (j == sd.r_minus.index_of_zero()) continue;
        const cplx fp = cd.n11p[j] + cd.n21p[j];
        const cplx fm = std::conj(cd.n11m[j]) + std::conj(cd.n21m[j]);
        const cplx fm_neg = cd.n11m[j] + cd.n21m[j];
        const cplx a = det_a[j] - t.v0 * fp * fm / (2.0 * I * k);
        const cplx b = det_b[j] + t.v0 * fp * fm_neg / (2.0 * I * k);
        dg.unitarity_defect = std::max(
            dg.unitarity_defect, std::abs(std::norm(a) - std::norm(b) - 1.0) / std::norm(a));
        const double rt = sd.r_tilde.values[j].real();
        const double rt_id = (1.0 - std::norm(sd.r_minus.values[j])) / (k * k);
        dg.rtilde_discrepancy = std::max(dg.rtilde_discrepancy, std::abs(rt - rt_id));
        if (j + 1 == n) dg.b_tail_value = (2.0 * I * k * b).real();
    }
    dg.b_tail_expected = t.v0 + t.u_plus(0.0) - t.u_minus(0.0);
    return sd;
}

PointScattering scattering_point(const RiccatiTriple& t, double k, const OdeOptions& ode) {
    if (k == 0.0) throw std::invalid_argument("scattering_point: k must be nonzero");
    JostColumn p = jost_plus(t.u_plus, 0.0, k, ode);
    JostColumn m = jost_minus(t.u_minus, 0.0, k, ode);
    const cplx I(0.0, 1.0);
    PointScattering ps;
    ps.f_plus = p.n11 + p.n21;
    ps.f_minus = std::conj(m.n11) + std::conj(m.n21);
    const cplx fm_neg = m.n11 + m.n21;
    ps.det_a = p.n11 * std::conj(m.n11) - p.n21 * std::conj(m.n21);
    ps.det_b = p.n21 * m.n11 - p.n11 * m.n21;
    ps.a = ps.det_a - t.v0 * ps.f_plus * ps.f_minus / (2.0 * I * k);
    ps.b = ps.det_b + t.v0 * ps.f_plus * fm_neg / (2.0 * I * k);
    return ps;
}

std::vector<MembershipFlag> membership_report(const ScatteringData& sd, double s, double tol) {
    std::vector<MembershipFlag> out;
    auto add = [&](const std::string& name, bool pass, double value) {
        out.push_back({name, pass, value});
    };
    const std::size_t z = sd.r_minus.index_of_zero();

    add("conj_symmetry", sd.r_minus.conj_symmetry_defect() <= tol,
        sd.r_minus.conj_symmetry_defect());
    add("unitarity", sd.diag.unitarity_defect <= tol, sd.diag.unitarity_defect);

    double sup_r_offzero = 0.0;
    for (std::size_t j = 0; j < sd.r_minus.size(); ++j)
        if (j != z) sup_r_offzero = std::max(sup_r_offzero, std::abs(sd.r_minus.values[j]));
    add("r_below_one_off_zero", sup_r_offzero < 1.0, sup_r_offzero);

    double hs = std::numeric_limits<double>::infinity();
    bool hs_ok = false;
    try {
        hs = hs_norm(sd.r_minus, s);
        hs_ok = std::isfinite(hs);
    } catch (const std::exception&) {
        hs_ok = false;
    }
    add("r_hs_norm_finite", hs_ok, hs);

    if (sd.generic) {
        const double gap = std::abs(sd.r_minus.values[z] + 1.0);
        add("r_at_zero_is_minus_one", gap <= tol, gap);
        double min_rt = std::numeric_limits<double>::infinity();
        bool finite = true;
        for (const auto& v : sd.r_tilde.values) {
            if (!std::isfinite(v.real())) finite = false;
            min_rt = std::min(min_rt, v.real());
        }
        add("rtilde_finite", finite, sd.r_tilde.values[z].real());
        add("rtilde_positive", min_rt > 0.0, min_rt);
    } else {
        add("r_below_one_at_zero", std::abs(sd.r_minus.values[z]) < 1.0,
            std::abs(sd.r_minus.values[z]));
        add("rtilde_inf_at_zero", std::isinf(sd.r_tilde.values[z].real()),
            sd.r_tilde.values[z].real());
    }
    return out;
}

}  // namespace riscat
