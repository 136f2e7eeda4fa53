#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqgeom/simplex.hpp"

namespace fqgeom {

enum class OutputFormat { Csv, Json };

/// Configuration of a batch run. The seed fully determines every sample:
/// identical configs produce identical outputs, and the worker count never
/// changes an integer result (cells derive independent sub-seeds).
struct RunConfig {
    std::vector<uint32_t> q_list = {3, 5, 7};
    uint32_t d = 2;
    uint32_t k = 2;
    bool exact_mode = false;
    uint32_t trials = 1;
    uint64_t seed = 1;
    std::vector<uint64_t> sizes;
    OutputFormat format = OutputFormat::Csv;
    uint32_t workers = 0;  // 0 = env FQGEOM_WORKERS or 1
    bool timing = false;   // elapsed_ms column stays 0 unless enabled
    uint64_t budget = kDefaultGroupBudget;
};

struct ScanRow {
    uint32_t q = 0, d = 0, k = 0;
    uint64_t set_size = 0;
    uint32_t trial = 0;
    uint64_t t_count = 0;
    uint64_t s_count = 0;
    uint64_t elapsed_ms = 0;
};

/// Seeded random-set scan over (q, size, trial) cells; rows come back sorted
/// by (q, size, trial). Cell c uses the sub-seed mix(seed XOR c).
std::vector<ScanRow> run_scan(const RunConfig& cfg);

std::string render_scan_csv(const std::vector<ScanRow>& rows);
std::string render_scan_json(const std::vector<ScanRow>& rows);
/// min / mean per (q, size) plus the ratio mean / q^{k+1 choose 2}.
std::string scan_summary(const std::vector<ScanRow>& rows, uint32_t k);

struct CountRow {
    uint32_t q = 0, d = 0, k = 0;
    uint64_t set_size = 0;
    uint64_t t_fast = 0;
    std::optional<uint64_t> t_exact;
    uint64_t s_count = 0;
    uint64_t deg_classes = 0;
    uint64_t nondeg_classes = 0;
    bool exact_downgraded = false;  // exact requested but over budget
};

/// Count classes for a point-set file (text or .json).
CountRow run_count(const RunConfig& cfg, const std::string& path);

std::string render_count_csv(const CountRow& row);
std::string render_count_json(const CountRow& row);

uint32_t resolve_workers(uint32_t configured);

}  // namespace fqgeom
