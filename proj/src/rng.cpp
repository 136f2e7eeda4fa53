#include "fqgeom/rng.hpp"

#include <numeric>

#include "fqgeom/errors.hpp"
#include "fqgeom/sampling.hpp"

namespace fqgeom {

uint64_t SplitMix64::next_below(uint64_t n) {
    if (n == 0) throw Error("next_below: empty range");
    if ((n & (n - 1)) == 0) return next() & (n - 1);
    // rejection threshold: discard the tail so every residue is equally likely
    const uint64_t threshold = -n % n;  // = 2^64 mod n
    for (;;) {
        uint64_t x = next();
        if (x >= threshold) return x % n;
    }
}

std::vector<uint64_t> sample_without_replacement(uint64_t n, uint64_t m, SplitMix64& rng) {
    if (m > n) throw Error("sample_without_replacement: m > n");
    std::vector<uint64_t> pool(n);
    std::iota(pool.begin(), pool.end(), uint64_t{0});
    for (uint64_t i = 0; i < m; ++i) {
        uint64_t j = i + rng.next_below(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    return pool;
}

PointSet random_subset(PrimeField f, uint32_t dim, uint64_t size, SplitMix64& rng) {
    PointSet e(f, dim);
    for (uint64_t idx : sample_without_replacement(e.universe_size(), size, rng)) e.insert(idx);
    return e;
}

PointSet random_subset_of(const PointSet& host, uint64_t size, SplitMix64& rng) {
    auto idxs = host.indices();
    PointSet e(host.field(), host.dim());
    for (uint64_t pick : sample_without_replacement(idxs.size(), size, rng)) e.insert(idxs[pick]);
    return e;
}

}  // namespace fqgeom
