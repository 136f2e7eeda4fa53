#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqgeom/quadform.hpp"

namespace fqgeom {

/// One extremal construction together with the exact measurements of the
/// quantities it is designed to pin down. Every measured count is
/// reproducible from `set` with the counting modules.
struct ConstructionReport {
    std::string name;
    nlohmann::json params;
    std::optional<PointSet> set;
    std::map<std::string, int64_t> measured;
    std::string bound_desc;
    int64_t bound_value = 0;
    bool bound_holds = false;
    nlohmann::json extra;

    nlohmann::json to_json() const;
};

/// Odd d = 2k+1 >= 3: E lives in the span of k mutually orthogonal null
/// vectors plus one anisotropic vector w orthogonal to them, with the last
/// coordinate confined to the interval I = {0..interval_len-1}. On that
/// subspace the norm collapses to Q(w) * (last coordinate)^2, so the distance
/// count is at most 2|I| - 1. w is searched with Q(w) = 1 first; when no unit
/// vector exists in the orthocomplement the first anisotropic one is used and
/// its norm reported (the count bound is scale-invariant).
ConstructionReport sharpness_odd(PrimeField f, uint32_t d, uint32_t interval_len);

/// Even d: for d = 2 the integer grid [1..ceil(sqrt(Cq))] x [1..floor(sqrt(Cq))]
/// reduced mod q; for d = 2k >= 4 the plane spanned by n_1 and a completion
/// vector e (<e,e> = 1, <e,n_1> = 1) with both coordinates in an interval.
ConstructionReport sharpness_even(PrimeField f, uint32_t d, double big_c);

/// E = F_q^{d-1} x {0..floor(q^{1/d-eps})-1}; reports |E| and (when cheap)
/// the congruence-class count for k-simplices against q^{k+1 choose 2}.
ConstructionReport sharpness_simplex(PrimeField f, uint32_t d, uint32_t k, double eps);

/// q = 1 mod 4: E = X x Y in the null product frame {n+, n-/2}; the distance
/// set equals kappa (X-X)(Y-Y) with the exact cross constant kappa, and the
/// sign variants (X+-X)(Y+-Y) are measured alongside.
ConstructionReport null_product_set(PrimeField f, const std::vector<uint32_t>& xs,
                                    const std::vector<uint32_t>& ys);

/// q = 3 mod 4: distance set of X x Y under the form x1 x2 (Gram
/// [[0,1/2],[1/2,0]]), plus the hyperbola level-set sizes.
ConstructionReport minkowski_distance_set(PrimeField f, const std::vector<uint32_t>& xs,
                                          const std::vector<uint32_t>& ys);

/// q = 1 mod 4: quotient-set census for an interval I of the default length
/// floor(sqrt(q/2 - 1) / 2): |(I-I)/(I-I)| (zero excluded from numerator and
/// denominator), the feasibility inequality (2|I|)^2 <= q/2 - 1, and the
/// number of attainable values of f(a,b) = (1 - b/a) d12 + (1 - a/b) d23 for
/// seeded sample pairs (d12, d23).
ConstructionReport ratio_map_census(PrimeField f, std::optional<uint32_t> interval_len = std::nullopt,
                                    uint64_t seed = 1, uint32_t samples = 16);

}  // namespace fqgeom
