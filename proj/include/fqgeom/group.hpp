#pragma once

#include <cstdint>
#include <vector>

#include "fqgeom/quadform.hpp"

namespace fqgeom {

inline constexpr uint64_t kDefaultGroupBudget = 10'000'000;

/// An isometry is just its matrix; validity (theta^T B theta = B) is checked
/// where elements are produced.
using Isometry = Mat;

bool is_isometry(const QuadraticForm& q, const Mat& m);

/// x -> rotation * x + translation.
struct RigidMotion {
    Mat rotation;
    Vec translation;

    Vec apply(const PrimeField& f, const Vec& x) const {
        return vec_add(f, mat_vec(f, rotation, x), translation);
    }
};

RigidMotion compose(const PrimeField& f, const RigidMotion& a, const RigidMotion& b);

enum class GroupVariant { Full, SpecialOrthogonal };

/// Explicit element list of O(Q) or SO(Q), deduplicated and ordered
/// lexicographically on row-major entries so that all downstream counts are
/// deterministic.
class IsometryGroup {
public:
    IsometryGroup(QuadraticForm form, GroupVariant variant, std::vector<Mat> elems);

    const QuadraticForm& form() const { return form_; }
    GroupVariant variant() const { return variant_; }
    const std::vector<Mat>& elements() const { return elems_; }
    uint64_t order() const { return elems_.size(); }
    bool contains(const Mat& m) const;

private:
    QuadraticForm form_;
    GroupVariant variant_;
    std::vector<Mat> elems_;
};

/// Complete element list: brute force over all matrices for d <= 2, closure
/// of reflections in anisotropic vectors otherwise. Throws BudgetExceeded
/// before allocating more than `budget` elements.
IsometryGroup orthogonal_group(const QuadraticForm& q,
                               GroupVariant variant = GroupVariant::Full,
                               uint64_t budget = kDefaultGroupBudget);

/// |O(Q)| via the unit-sphere fibration: |O_d| = |S_1| * |O(Q restricted to
/// x_perp)| for a unit vector x, with |O_1| = 2.
uint64_t group_order_recursion(const QuadraticForm& q);

/// Subgroup fixing every vector of the tuple pointwise.
IsometryGroup stabilizer(const IsometryGroup& g, const std::vector<Vec>& tuple);

/// { (m x_1, ..., m x_t) : m in G }, deduplicated, sorted.
std::vector<std::vector<Vec>> orbit(const IsometryGroup& g, const std::vector<Vec>& tuple);

}  // namespace fqgeom
