#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fqgeom/linalg.hpp"
#include "fqgeom/pointset.hpp"

namespace fqgeom {

/// Quadratic form Q(x) = x^T B x with symmetric Gram matrix B. The associated
/// bilinear form is <x,y> = x^T B y, so Q(x) = <x,x> and
/// 2<x,y> = Q(x+y) - Q(x) - Q(y).
class QuadraticForm {
public:
    QuadraticForm(PrimeField f, Mat gram);

    static QuadraticForm dot(PrimeField f, uint32_t d) { return diagonal(f, Vec(d, 1)); }
    static QuadraticForm diagonal(PrimeField f, const Vec& entries);
    /// Gram [[0,1],[1,0]]: the split binary form, Q((x,y)) = 2xy.
    static QuadraticForm hyperbolic_plane(PrimeField f);
    /// Gram [[0,1/2],[1/2,0]]: Q((x,y)) = xy.
    static QuadraticForm xy_form(PrimeField f);

    const PrimeField& field() const { return f_; }
    uint32_t dim() const { return d_; }
    const Mat& gram() const { return gram_; }

    uint32_t eval(const Vec& x) const;
    uint32_t bilinear(const Vec& x, const Vec& y) const;
    uint32_t norm_of_difference(const Vec& x, const Vec& y) const;

    uint32_t disc() const;  // det of the Gram matrix
    bool non_degenerate() const { return disc() != 0; }

private:
    PrimeField f_;
    uint32_t d_;
    Mat gram_;
};

enum class FormKind { SplitEven, NonSplitEven, Odd };

/// Isomorphism class of a non-degenerate form: n hyperbolic planes, plus the
/// norm form of the quadratic extension (NonSplitEven) or a rank-one part
/// c x^2 (Odd). c is reduced to its square class and stored canonically as 1
/// or the smallest non-residue.
struct FormClass {
    FormKind kind;
    uint32_t n;
    bool disc_is_square;
    uint32_t odd_coeff;  // 0 unless kind == Odd

    bool operator==(const FormClass&) const = default;
};

FormClass classify_form(const QuadraticForm& q);

/// { x : Q(x) = r } by full enumeration.
PointSet sphere_points(const QuadraticForm& q, uint32_t r);

/// Sphere sizes bucketed by radius, one enumeration pass (index = radius).
std::vector<uint64_t> sphere_histogram(const QuadraticForm& q);

/// Closed-form sphere count from the classification:
///   split even:      q^{d-1} - q^{(d-2)/2}          (r != 0)
///                    q^{d-1} + q^{d/2} - q^{(d-2)/2} (r = 0)
///   non-split even:  q^{d-1} + q^{(d-2)/2}          (r != 0)
///                    q^{d-1} - q^{d/2} + q^{(d-2)/2} (r = 0)
///   odd (nH + cx^2): q^{d-1} + q^{(d-1)/2} legendre(r/c) (r != 0), q^{d-1} (r = 0)
uint64_t sphere_size_formula(const QuadraticForm& q, uint32_t r);

/// Mutually orthogonal isotropic vectors, plus an optional vector e with
/// <e,e>=1, <e,n_1>=1, <e,n_i>=0 for i >= 2.
struct NullStructure {
    std::vector<Vec> null_vectors;
    std::optional<Vec> completion;
};

/// Finds m mutually orthogonal, linearly independent null vectors by
/// incremental exhaustive search over projective representatives (first
/// nonzero coordinate 1) in point-index order. With want_completion, m must
/// equal dim/2; the completion vector is solved from the Gram system of an
/// augmented basis and then normalized to norm one by a shift along n_1
/// (Q(e + t n_1) = Q(e) + 2t since <e,n_1> = 1).
NullStructure find_null_structure(const QuadraticForm& q, uint32_t m, bool want_completion = false);

/// Decomposes Q restricted to span(basis) as (null part) + (non-degenerate
/// part): returns the radical dimension and a diagonal form representing the
/// non-degenerate complement.
std::pair<uint32_t, QuadraticForm> radical_split(const QuadraticForm& q,
                                                 const std::vector<Vec>& basis);

/// Null-coordinate frame for the planar dot form when q = 1 mod 4:
/// n_plus = (1, i), n_minus = (1, -i) with i^2 = -1. Both the {n+, n-}
/// coordinates and the {n+, n-/2} product frame are exposed; kappa is the
/// exact cross constant with Q(x b1 + y b2) = kappa * x * y.
struct NullBasis {
    PrimeField f;
    uint32_t iota;
    Vec n_plus, n_minus;
    Vec b2;          // n_minus / 2
    uint32_t kappa;  // 2 <n_plus, b2>

    /// Coordinates (x_plus, x_minus) of p in the {n+, n-} basis.
    std::pair<uint32_t, uint32_t> npm_coords(const Vec& p) const;
    /// Point x * n_plus + y * b2 of the product frame.
    Vec product_point(uint32_t x, uint32_t y) const;
};

NullBasis make_null_basis(PrimeField f);  // WrongResidueClass unless q = 1 mod 4

}  // namespace fqgeom
