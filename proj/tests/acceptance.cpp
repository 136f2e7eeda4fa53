// Acceptance gate: runs every top-level criterion at its pinned parameters
// and prints one PASS/FAIL line per criterion. Exit code = number of
// failures.

#include <chrono>
#include <cstdio>
#include <string>

#include "fqgeom/scan.hpp"
#include "fqgeom/suites.hpp"

using namespace fqgeom;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what, double secs, const CheckList* cl = nullptr) {
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", id, what.c_str(), secs);
    if (!pass) {
        ++failures;
        if (cl) {
            int shown = 0;
            for (const auto& line : cl->lines) {
                if (line.rfind("FAIL ", 0) == 0 && shown < 5) {
                    std::printf("    %s\n", line.c_str());
                    ++shown;
                }
            }
        }
    }
}

template <class F>
void criterion(int id, const std::string& what, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    CheckList cl("");
    try {
        cl = body();
        pass = cl.pass();
    } catch (const std::exception& e) {
        cl.note(std::string("exception: ") + e.what());
        cl.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(id, pass, what + " [" + std::to_string(cl.checks) + " checks]", secs, &cl);
}

}  // namespace

int main() {
    criterion(1, "sphere counts equal the closed formula, d in {2,3,4}, q up to 13", [] {
        SuiteParams p;
        p.q_list = {3, 5, 7, 11, 13};
        p.d_list = {2, 3, 4};
        return suite_spheres(p);
    });

    criterion(2, "group orders: explicit = sphere-product recursion, ratio bands", [] {
        SuiteParams p;
        p.q_list = {3, 5, 7, 11, 13};
        p.d_list = {2};
        CheckList a = suite_groups(p);
        p.q_list = {3, 5, 7};
        p.d_list = {3};
        CheckList b = suite_groups(p);
        a.checks += b.checks;
        a.failures += b.failures;
        for (const auto& l : b.lines) a.lines.push_back(l);
        return a;
    });

    criterion(3, "rigid-motion counting identity, 50 seeded sets per (q, k), 40 = 40 example", [] {
        SuiteParams p;
        p.q_list = {3, 5};
        p.k_list = {1, 2};
        p.trials = 50;
        return suite_identity2(p);
    });

    criterion(4, "transform product identity and Plancherel, 100 seeded pairs per q", [] {
        SuiteParams p;
        p.q_list = {3, 5, 7};
        p.d_list = {2};
        p.trials = 100;
        return suite_fourier(p);
    });

    criterion(5, "spherical-energy bounds, 1000 sets per q; power-sum bound, 1000 functions", [] {
        SuiteParams p;
        p.q_list = {5, 7, 11, 13};
        p.trials = 1000;
        return suite_mlem(p);
    });

    criterion(6, "sphere decomposition S+T+R exact, 50 subsets per sphere, 128 = 64+32+32", [] {
        SuiteParams p;
        p.q_list = {3, 5, 7};
        p.trials = 50;
        return suite_srt(p);
    });

    criterion(7, "fast and exact-orbit class counts agree off degeneracy, 50 sets per (q, k)", [] {
        SuiteParams p;
        p.q_list = {3, 5};
        p.k_list = {1, 2};
        p.trials = 50;
        return suite_witt(p);
    });

    criterion(8, "extremal constructions meet their exact bounds (100 product pairs per q)", [] {
        SuiteParams p;
        p.q_list = {5, 7, 11, 13, 17};
        p.trials = 100;
        return suite_constructions(p);
    });

    criterion(9, "full-grid triangle classes >= q^3/2 and nondecreasing seeded means", [] {
        SuiteParams p;
        p.q_list = {7, 11, 13};
        p.trials = 5;
        return suite_scan_sanity(p);
    });

    criterion(10, "byte-identical reruns; worker count changes no integer output", [] {
        CheckList cl("determinism");
        SuiteParams p;
        p.q_list = {3, 5};
        p.trials = 10;
        CheckList first = suite_identity2(p);
        CheckList second = suite_identity2(p);
        cl.check(first.lines == second.lines && first.checks == second.checks,
                 "identity suite rerun differs");
        RunConfig cfg;
        cfg.q_list = {5, 7};
        cfg.d = 2;
        cfg.k = 2;
        cfg.trials = 3;
        cfg.seed = 7;
        cfg.sizes = {6, 12, 24};
        cfg.workers = 1;
        std::string w1 = render_scan_csv(run_scan(cfg));
        std::string w1b = render_scan_csv(run_scan(cfg));
        cfg.workers = 4;
        std::string w4 = render_scan_csv(run_scan(cfg));
        cl.check(w1 == w1b, "scan rerun differs at fixed worker count");
        cl.check(w1 == w4, "worker count changed an integer output");
        cl.note("scan rows byte-identical across reruns and worker counts 1 vs 4");
        return cl;
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "RESULT", failures);
    return failures;
}
