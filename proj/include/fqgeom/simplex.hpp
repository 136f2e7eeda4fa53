#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "fqgeom/group.hpp"

namespace fqgeom {

/// Symmetric (k+1)x(k+1) matrix of pairwise norms with zero diagonal, stored
/// as the upper triangle in row-major (i<j) order.
struct DistanceMatrix {
    uint32_t arity = 0;  // k+1
    std::vector<uint32_t> upper;

    explicit DistanceMatrix(uint32_t k1) : arity(k1), upper(k1 * (k1 - 1) / 2, 0) {}

    static uint32_t pos(uint32_t i, uint32_t j, uint32_t k1) {
        if (i > j) std::swap(i, j);
        return i * k1 - i * (i + 1) / 2 + (j - i - 1);
    }
    uint32_t at(uint32_t i, uint32_t j) const { return i == j ? 0 : upper[pos(i, j, arity)]; }
    void set(uint32_t i, uint32_t j, uint32_t v) { upper[pos(i, j, arity)] = v; }

    bool operator==(const DistanceMatrix& o) const { return arity == o.arity && upper == o.upper; }
    bool operator<(const DistanceMatrix& o) const { return upper < o.upper; }
};

/// Ordered tuple of vertices.
using SimplexTuple = std::vector<Vec>;

DistanceMatrix distance_matrix(const QuadraticForm& q, const SimplexTuple& t);

bool tuple_degenerate(const PrimeField& f, const SimplexTuple& t);

/// Number of ordered (k+1)-tuples from E realizing the given distance matrix,
/// by backtracking on partial distance constraints.
uint64_t mu_count(const PointSet& e, const QuadraticForm& q, const DistanceMatrix& d);

/// nu(theta, z) table over all translations z (indexed by point index):
/// #{(u,v) in E x E : u - r theta v = z}. r defaults to 1.
std::vector<uint64_t> nu_table(const PointSet& e, const Mat& theta, uint32_t r = 1);

uint64_t nu_count(const PointSet& e, const Mat& theta, const Vec& z, uint32_t r = 1);

enum class CongruenceMode { DistanceMatrixFast, ExactOrbit };

struct ClassCount {
    CongruenceMode mode = CongruenceMode::DistanceMatrixFast;
    uint64_t total = 0;
    uint64_t degenerate_classes = 0;     // classes with no non-degenerate realization
    uint64_t nondegenerate_classes = 0;  // classes realized by some non-degenerate tuple
};

/// Congruence classes of k-simplices spanned by E.
///  - DistanceMatrixFast: distinct distance matrices over E^{k+1}.
///  - ExactOrbit: orbits of E^{k+1} under translations + the chosen isometry
///    group (or under the isometry group alone when pinned), labeled by the
///    lexicographically minimal tuple of point indices in each orbit.
ClassCount count_congruence_classes(const PointSet& e, uint32_t k, const QuadraticForm& q,
                                    CongruenceMode mode, bool pinned = false,
                                    GroupVariant variant = GroupVariant::Full,
                                    uint64_t budget = kDefaultGroupBudget);

/// Distance-matrix classes modulo vertex reordering (simultaneous row and
/// column permutation, canonical = lexicographic minimum over all
/// reorderings): the unordered-simplex count, derived from the ordered one.
uint64_t count_unordered_classes(const PointSet& e, uint32_t k, const QuadraticForm& q);

enum class ScalingMode { SquaresOnly, AllScalars };

/// Distance-matrix classes modulo the scaling action induced by dilations.
/// A dilation by r multiplies every norm by r^2, hence the default orbit is
/// under nonzero squares; AllScalars is available for comparison.
uint64_t count_similarity_classes(const PointSet& e, uint32_t k, const QuadraticForm& q,
                                  ScalingMode mode = ScalingMode::SquaresOnly);

/// Size of the rigid-motion stabilizer of the tuple = size of the isometry
/// stabilizer of its pinned differences.
uint64_t class_stabilizer_size(const IsometryGroup& g, const SimplexTuple& t);

/// Both sides of the exact count  sum_D s(D) mu(D)^2 = sum_{theta,z} nu^{k+1}:
/// left over exact orbit classes with exact stabilizer sizes, right by a full
/// (theta, z) sweep. They must agree exactly.
std::pair<uint64_t, uint64_t> verify_counting_identity(const PointSet& e, uint32_t k,
                                                       const QuadraticForm& q,
                                                       GroupVariant variant = GroupVariant::Full,
                                                       uint64_t budget = kDefaultGroupBudget);

/// Decomposition of sum_g f(g)^2 over the isometry group for a subset E of a
/// sphere of nonzero radius, where f(g) = #{z in E : g z in E}:
///   T (pairs x = z)  = (|O| / |sphere|) |E|^2
///   R (pairs x = -z) = (|O| / |sphere|) |E cap -E|^2
///   S (x != +-z)     counted directly; contract sum_g f(g)^2 = S + T + R.
/// Also the level-set table nu(t) = #{(x,y) in E^2 : <x,y> = t}.
struct SphereDecomposition {
    uint32_t radius = 0;
    uint64_t group_order = 0;
    uint64_t sphere_size = 0;
    uint64_t point_stabilizer = 0;  // |O| / |sphere|
    uint64_t set_size = 0;
    uint64_t sym_overlap = 0;  // |E cap -E|
    std::vector<uint64_t> nu;  // indexed by t
    uint64_t sum_nu_sq = 0;
    uint64_t f_l1 = 0;
    uint64_t f_linf = 0;
    uint64_t sum_f_sq = 0;
    uint64_t S = 0, T = 0, R = 0;
};

SphereDecomposition dot_level_decomposition(const PointSet& e, const QuadraticForm& q,
                                            uint64_t budget = kDefaultGroupBudget);

/// One exact-orbit congruence class of E^{k+1}.
struct ClassRow {
    uint64_t id;
    DistanceMatrix rep;
    uint64_t mu;
    uint64_t stabilizer_size;
    bool degenerate;
};

std::vector<ClassRow> class_inventory(const PointSet& e, uint32_t k, const QuadraticForm& q,
                                      GroupVariant variant = GroupVariant::Full,
                                      uint64_t budget = kDefaultGroupBudget);

void write_inventory_csv(std::ostream& out, const std::vector<ClassRow>& rows);

/// Report-only diagnostic for the similarity analogue of the counting
/// identity in the plane: left side sums mu_S^2 over scaling classes of
/// distance matrices, right side sums nu^3(r, theta, z) over dilations r,
/// rotations theta in SO_2 and translations z, where the theta-sum collapses
/// for nonzero null z (any (u, v, z) with u - r theta v = z then leaves theta
/// undetermined). Equality is not asserted.
struct SimilarityDiagnostic {
    uint64_t lhs = 0;
    uint64_t rhs = 0;
};

SimilarityDiagnostic similarity_identity_diagnostic(const PointSet& e, const QuadraticForm& q,
                                                    uint64_t budget = kDefaultGroupBudget);

}  // namespace fqgeom
