// Verification battery: nine numbered checks covering the library's frozen
// numerical claims — closed-form spectral data for the point-mass family,
// unitarity of the transition coefficients, agreement of the two wave-column
// constructions, weighted-norm bounds on the wave kernels, involutivity of
// the reflection swap, bounds on the layer-solve correction terms, full
// transform round trips, stability of the forward map under small potential
// perturbations, and the class-membership flags of reflection data.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace riscat {

struct CriterionResult {
    int id = 0;           // 1..9
    std::string name;     // short role-based label
    bool pass = false;
    double measured = 0;  // worst observed value for the headline comparison
    double limit = 0;     // pinned tolerance the value is held against
    double seconds = 0;   // wall time of the criterion
    std::string detail;   // one-line specifics (worst case, budgets, ...)
};

struct VerifyOptions {
    // Working grid for the full-size checks.
    double X = 20.0;
    std::size_t n_intervals = 2048;
    // Reduced grid for the perturbation-stability sweep.
    double X_small = 10.0;
    std::size_t n_small = 512;
    double k_small = 20.0;
    std::uint64_t seed = 20240112;  // perturbation-sweep RNG seed
};

// Run one criterion (id in 1..9) or, with id = 0, the whole battery in
// order. Each result carries its own pass flag; the function itself throws
// only on programming errors (bad id).
std::vector<CriterionResult> run_verification(int id = 0, const VerifyOptions& opt = {});

// "[PASS] 7 transform_roundtrip   measured 1.64e-05  limit 1.00e-03  (38.4s) ..."
std::string format_criterion_line(const CriterionResult& r);

}  // namespace riscat
