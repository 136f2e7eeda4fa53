#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "fqgeom/simplex.hpp"

namespace fqgeom {

/// Numeric tolerances for the floating-point identity checks. The identities
/// are algebraic, so a miss beyond these indicates a bug, not noise.
namespace tol {
inline constexpr double identity = 1e-9;    // scaled by |E| where sums grow
inline constexpr double plancherel = 1e-9;  // relative
inline constexpr double energy_slack = 1e-9;
}  // namespace tol

/// Normalized transform of an indicator set over the standard additive
/// characters: hat(E)(xi) = q^{-d} sum_{x in E} chi(-xi . x) with
/// chi(t) = exp(2 pi i t / q) and the standard dot pairing.
struct SpectralTable {
    PrimeField f;
    uint32_t dim;
    std::vector<std::complex<double>> v;  // indexed by frequency point index

    const std::complex<double>& at(uint64_t xi_index) const { return v[xi_index]; }
};

SpectralTable fourier_transform(const PointSet& e);

/// Max over xi of |nu_hat(xi) - q^d hat(E)(-xi) hat(E)(theta^T xi)|, where
/// nu_hat is the transform of z -> nu(theta, z) read in the expansion
/// convention nu(z) = sum_xi nu_hat(xi) chi(-z . xi). With one consistent
/// transform for both sides the identity is exact up to rounding.
double nu_hat_identity_check(const PointSet& e, const Mat& theta);

/// sigma(t) = sum over frequencies of norm t of |hat(E)|^2, and
/// M = sum over nonzero t of sigma(t)^2.
struct SphericalEnergy {
    std::vector<double> sigma;  // indexed by t
    double M = 0.0;
};

SphericalEnergy spherical_energy(const PointSet& e, const QuadraticForm& q);

/// Mixed energy sigma_{E1,E2}(t) = sum_{norm(xi)=t} hat(E1)(xi) conj(hat(E2)(xi)).
std::vector<std::complex<double>> mixed_spherical_energy(const PointSet& e1, const PointSet& e2,
                                                         const QuadraticForm& q);

/// Second-order upper bound for sum f^n over a finite index set:
/// lhs = sum f^n, rhs = |F| mean^n + n(n-1)/2 * max^{n-2} * sum (f - mean)^2.
/// Returns (lhs, rhs); lhs <= rhs holds for f >= 0, n >= 2.
std::pair<double, double> taylor_bound_check(const std::vector<double>& f, uint32_t n);

enum class PruneCase { AllPoor, RichPoor };
enum class NullAxis { Plus, Minus };

/// Null-coordinate pruning of a planar set when q = 1 mod 4. Coordinates are
/// taken in the {n+, n-} basis; a coordinate VALUE is wealthy when its fiber
/// has at least sqrt(2|E|) points (w.r.t. the input set) and rich when it has
/// at least 2 sqrt(|E'|) points (w.r.t. the pruned set). Points wealthy in
/// both coordinates are discarded; at most half the points go. If a rich
/// value survives, the set splits into two balanced halves with disjoint
/// projections along the split axis (whole fibers stay together).
struct PruneReport {
    PointSet pruned;
    uint64_t discarded = 0;
    uint64_t wealthy_plus = 0, wealthy_minus = 0;  // counts of wealthy values
    // thresholds, exposed as exact squared integer comparisons
    uint64_t wealthy_threshold_sq = 0;  // fiber^2 >= 2|E|
    uint64_t rich_threshold_sq = 0;     // 4 * |E'|; fiber^2 >= this
    PruneCase kind = PruneCase::AllPoor;
    NullAxis rich_axis = NullAxis::Plus;   // valid when kind == RichPoor
    NullAxis split_axis = NullAxis::Plus;  // axis whose projections are disjoint
    bool splittable = false;
    PointSet part1, part2;
};

PruneReport null_coordinate_prune(const PointSet& e);

/// #{(u,v) in E^2 : u - v is isotropic}, the exact pair count behind the
/// null-energy estimates.
uint64_t null_difference_pairs(const PointSet& e, const QuadraticForm& q);

/// CSV dump: xi_index, re, im.
void write_spectral_csv(std::ostream& out, const SpectralTable& t);

}  // namespace fqgeom
