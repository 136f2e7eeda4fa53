#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fqgeom/gf.hpp"

namespace fqgeom {

/// Coordinate vector over F_q, canonical residues.
using Vec = std::vector<uint32_t>;

/// Dense row-major matrix over F_q.
struct Mat {
    uint32_t rows = 0;
    uint32_t cols = 0;
    std::vector<uint32_t> a;

    Mat() = default;
    Mat(uint32_t r, uint32_t c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint32_t& at(uint32_t r, uint32_t c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint32_t at(uint32_t r, uint32_t c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(uint32_t n) {
        Mat m(n, n);
        for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    // Row-major lexicographic order; used for canonical element ordering.
    bool operator<(const Mat& o) const { return a < o.a; }
};

Mat mat_mul(const PrimeField& f, const Mat& x, const Mat& y);
Vec mat_vec(const PrimeField& f, const Mat& m, const Vec& v);
Mat transpose(const Mat& m);
Mat mat_from_rows(const std::vector<Vec>& rows);

uint32_t det(const PrimeField& f, Mat m);
uint32_t rank(const PrimeField& f, Mat m);

/// Solve the square system m x = b; nullopt when m is singular.
std::optional<Vec> solve(const PrimeField& f, Mat m, Vec b);

/// Deterministic basis of { x : m x = 0 } (free variables set to 1 in
/// ascending column order).
std::vector<Vec> nullspace(const PrimeField& f, Mat m);

Vec vec_add(const PrimeField& f, const Vec& x, const Vec& y);
Vec vec_sub(const PrimeField& f, const Vec& x, const Vec& y);
Vec vec_scale(const PrimeField& f, uint32_t c, const Vec& x);
Vec vec_neg(const PrimeField& f, const Vec& x);

}  // namespace fqgeom
