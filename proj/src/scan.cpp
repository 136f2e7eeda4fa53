#include "fqgeom/scan.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fqgeom/sampling.hpp"

namespace fqgeom {

uint32_t resolve_workers(uint32_t configured) {
    if (configured > 0) return std::min<uint32_t>(configured, 64);
    if (const char* env = std::getenv("FQGEOM_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::min<uint32_t>(static_cast<uint32_t>(v), 64);
    }
    return 1;
}

std::vector<ScanRow> run_scan(const RunConfig& cfg) {
    if (cfg.sizes.empty()) throw ConfigError("scan needs a nonempty size schedule");
    if (cfg.trials == 0) throw ConfigError("scan needs at least one trial");
    struct Cell {
        uint32_t q;
        uint64_t size;
        uint32_t trial;
        uint64_t index;
    };
    std::vector<Cell> cells;
    uint64_t index = 0;
    for (uint32_t q : cfg.q_list) {
        PrimeField f(q);  // validates q up front (config error, not worker crash)
        uint64_t universe = 1;
        for (uint32_t i = 0; i < cfg.d; ++i) universe *= q;
        for (uint64_t size : cfg.sizes) {
            if (size > universe)
                throw ConfigError("size " + std::to_string(size) + " exceeds q^d for q=" +
                                  std::to_string(q));
            for (uint32_t t = 0; t < cfg.trials; ++t) cells.push_back({q, size, t, index++});
        }
    }
    std::vector<ScanRow> rows(cells.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const Cell& c = cells[i];
            auto start = std::chrono::steady_clock::now();
            PrimeField f(c.q);
            QuadraticForm dot = QuadraticForm::dot(f, cfg.d);
            SplitMix64 rng(SplitMix64::derive(cfg.seed, c.index));
            PointSet e = random_subset(f, cfg.d, c.size, rng);
            ScanRow row;
            row.q = c.q;
            row.d = cfg.d;
            row.k = cfg.k;
            row.set_size = c.size;
            row.trial = c.trial;
            row.t_count =
                count_congruence_classes(e, cfg.k, dot, CongruenceMode::DistanceMatrixFast).total;
            row.s_count = count_similarity_classes(e, cfg.k, dot);
            if (cfg.timing) {
                auto end = std::chrono::steady_clock::now();
                row.elapsed_ms = static_cast<uint64_t>(
                    std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count());
            }
            rows[c.index] = row;
        }
    };
    uint32_t nworkers = std::min<uint32_t>(resolve_workers(cfg.workers),
                                           std::max<size_t>(cells.size(), 1));
    if (nworkers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (uint32_t w = 0; w < nworkers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return rows;  // cell order is already (q, size, trial)
}

std::string render_scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "# schema: fqgeom.scan.v1\n";
    os << "q,d,k,set_size,trial,T_count,S_count,elapsed_ms\n";
    for (const ScanRow& r : rows) {
        os << r.q << ',' << r.d << ',' << r.k << ',' << r.set_size << ',' << r.trial << ','
           << r.t_count << ',' << r.s_count << ',' << r.elapsed_ms << '\n';
    }
    return os.str();
}

std::string render_scan_json(const std::vector<ScanRow>& rows) {
    auto arr = nlohmann::json::array();
    for (const ScanRow& r : rows) {
        arr.push_back({{"q", r.q},
                       {"d", r.d},
                       {"k", r.k},
                       {"set_size", r.set_size},
                       {"trial", r.trial},
                       {"T_count", r.t_count},
                       {"S_count", r.s_count},
                       {"elapsed_ms", r.elapsed_ms}});
    }
    return arr.dump(2) + "\n";
}

std::string scan_summary(const std::vector<ScanRow>& rows, uint32_t k) {
    std::ostringstream os;
    for (size_t i = 0; i < rows.size();) {
        size_t j = i;
        uint64_t mn = UINT64_MAX, total = 0;
        while (j < rows.size() && rows[j].q == rows[i].q && rows[j].set_size == rows[i].set_size) {
            mn = std::min(mn, rows[j].t_count);
            total += rows[j].t_count;
            ++j;
        }
        double mean = static_cast<double>(total) / static_cast<double>(j - i);
        double denom = 1.0;
        for (uint32_t e = 0; e < k * (k + 1) / 2; ++e) denom *= rows[i].q;
        os << "q=" << rows[i].q << " size=" << rows[i].set_size << " min_T=" << mn
           << " mean_T=" << mean << " mean_T/q^(k+1 choose 2)=" << mean / denom << '\n';
        i = j;
    }
    return os.str();
}

CountRow run_count(const RunConfig& cfg, const std::string& path) {
    PointSet e = PointSet::load(path);
    if (cfg.k > e.dim()) throw ConfigError("k exceeds the dimension of the point-set file");
    QuadraticForm dot = QuadraticForm::dot(e.field(), e.dim());
    CountRow row;
    row.q = e.field().q();
    row.d = e.dim();
    row.k = cfg.k;
    row.set_size = e.size();
    ClassCount fast = count_congruence_classes(e, cfg.k, dot, CongruenceMode::DistanceMatrixFast);
    row.t_fast = fast.total;
    row.deg_classes = fast.degenerate_classes;
    row.nondeg_classes = fast.nondegenerate_classes;
    row.s_count = count_similarity_classes(e, cfg.k, dot);
    if (cfg.exact_mode) {
        try {
            row.t_exact = count_congruence_classes(e, cfg.k, dot, CongruenceMode::ExactOrbit, false,
                                                   GroupVariant::Full, cfg.budget)
                              .total;
        } catch (const BudgetExceededError&) {
            row.exact_downgraded = true;
        }
    }
    return row;
}

std::string render_count_csv(const CountRow& r) {
    std::ostringstream os;
    os << "# schema: fqgeom.count.v1\n";
    os << "q,d,k,set_size,T_fast,T_exact,S_count,degenerate_classes,nondegenerate_classes\n";
    os << r.q << ',' << r.d << ',' << r.k << ',' << r.set_size << ',' << r.t_fast << ',';
    if (r.t_exact) os << *r.t_exact;
    os << ',' << r.s_count << ',' << r.deg_classes << ',' << r.nondeg_classes << '\n';
    return os.str();
}

std::string render_count_json(const CountRow& r) {
    nlohmann::json j = {{"q", r.q},
                        {"d", r.d},
                        {"k", r.k},
                        {"set_size", r.set_size},
                        {"T_fast", r.t_fast},
                        {"T_exact", r.t_exact ? nlohmann::json(*r.t_exact) : nlohmann::json()},
                        {"S_count", r.s_count},
                        {"degenerate_classes", r.deg_classes},
                        {"nondegenerate_classes", r.nondeg_classes},
                        {"exact_downgraded", r.exact_downgraded}};
    return j.dump(2) + "\n";
}

}  // namespace fqgeom
