#pragma once

#include "fqgeom/pointset.hpp"
#include "fqgeom/rng.hpp"

namespace fqgeom {

/// Uniform subset of F_q^d of the given size (without replacement).
PointSet random_subset(PrimeField f, uint32_t dim, uint64_t size, SplitMix64& rng);

/// Uniform subset of an existing set (e.g. a sphere).
PointSet random_subset_of(const PointSet& host, uint64_t size, SplitMix64& rng);

}  // namespace fqgeom
