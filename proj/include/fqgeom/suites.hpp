#pragma once

#include <string>
#include <vector>

#include "fqgeom/constructions.hpp"
#include "fqgeom/group.hpp"
#include "fqgeom/simplex.hpp"
#include "fqgeom/spectral.hpp"

namespace fqgeom {

/// Result of one verification suite: recorded lines (summaries plus every
/// failure) and counters.
struct CheckList {
    std::string name;
    std::vector<std::string> lines;
    uint64_t checks = 0;
    uint64_t failures = 0;

    explicit CheckList(std::string n) : name(std::move(n)) {}

    bool pass() const { return failures == 0; }
    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            lines.push_back("FAIL " + what);
        }
    }
    void note(const std::string& what) { lines.push_back(what); }
};

struct SuiteParams {
    std::vector<uint32_t> q_list = {3, 5, 7};
    std::vector<uint32_t> d_list = {2};
    std::vector<uint32_t> k_list = {1, 2};
    uint32_t trials = 50;
    uint64_t seed = 20260809;
    uint64_t budget = kDefaultGroupBudget;
};

/// Representatives of both isomorphism classes per dimension, plus one
/// non-diagonal Gram to exercise the generic paths.
std::vector<QuadraticForm> form_representatives(PrimeField f, uint32_t d);

CheckList suite_spheres(const SuiteParams& p);        // counts vs closed formula
CheckList suite_groups(const SuiteParams& p);         // explicit order vs recursion, ratio bands
CheckList suite_identity2(const SuiteParams& p);      // sum s mu^2 = sum nu^{k+1}
CheckList suite_fourier(const SuiteParams& p);        // product identity + Plancherel
CheckList suite_mlem(const SuiteParams& p);           // spherical-energy bounds + power-sum bound
CheckList suite_srt(const SuiteParams& p);            // S + T + R decomposition on spheres
CheckList suite_witt(const SuiteParams& p);           // fast vs exact-orbit class counts
CheckList suite_constructions(const SuiteParams& p);  // extremal sets vs their bounds
CheckList suite_scan_sanity(const SuiteParams& p);    // full-grid floor + monotone means

std::vector<std::string> suite_names();
CheckList run_suite(const std::string& name, const SuiteParams& p);

}  // namespace fqgeom
