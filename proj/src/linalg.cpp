#include "fqgeom/linalg.hpp"

namespace fqgeom {

Mat mat_mul(const PrimeField& f, const Mat& x, const Mat& y) {
    Mat r(x.rows, y.cols);
    for (uint32_t i = 0; i < x.rows; ++i) {
        for (uint32_t k = 0; k < x.cols; ++k) {
            uint32_t xv = x.at(i, k);
            if (xv == 0) continue;
            for (uint32_t j = 0; j < y.cols; ++j) {
                r.at(i, j) = f.add(r.at(i, j), f.mul(xv, y.at(k, j)));
            }
        }
    }
    return r;
}

Vec mat_vec(const PrimeField& f, const Mat& m, const Vec& v) {
    Vec r(m.rows, 0);
    for (uint32_t i = 0; i < m.rows; ++i) {
        uint64_t acc = 0;
        for (uint32_t j = 0; j < m.cols; ++j) acc += static_cast<uint64_t>(m.at(i, j)) * v[j];
        r[i] = static_cast<uint32_t>(acc % f.q());
    }
    return r;
}

Mat transpose(const Mat& m) {
    Mat r(m.cols, m.rows);
    for (uint32_t i = 0; i < m.rows; ++i)
        for (uint32_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

Mat mat_from_rows(const std::vector<Vec>& rows) {
    Mat m(static_cast<uint32_t>(rows.size()), rows.empty() ? 0 : static_cast<uint32_t>(rows[0].size()));
    for (uint32_t i = 0; i < m.rows; ++i)
        for (uint32_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

namespace {

// Forward elimination to row echelon form. Returns (rank, det_factor).
// det_factor accumulates pivots and row-swap signs for square inputs.
std::pair<uint32_t, uint32_t> echelon(const PrimeField& f, Mat& m) {
    uint32_t r = 0;
    uint32_t detf = 1;
    for (uint32_t c = 0; c < m.cols && r < m.rows; ++c) {
        uint32_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r) {
            for (uint32_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
            detf = f.neg(detf);
        }
        detf = f.mul(detf, m.at(r, c));
        uint32_t pinv = f.inv(m.at(r, c));
        for (uint32_t i = r + 1; i < m.rows; ++i) {
            uint32_t fac = f.mul(m.at(i, c), pinv);
            if (fac == 0) continue;
            for (uint32_t j = c; j < m.cols; ++j) {
                m.at(i, j) = f.sub(m.at(i, j), f.mul(fac, m.at(r, j)));
            }
        }
        ++r;
    }
    return {r, detf};
}

}  // namespace

uint32_t det(const PrimeField& f, Mat m) {
    if (m.rows != m.cols) throw Error("det: matrix not square");
    if (m.rows == 0) return 1;
    auto [r, detf] = echelon(f, m);
    return r == m.rows ? detf : 0;
}

uint32_t rank(const PrimeField& f, Mat m) {
    return echelon(f, m).first;
}

std::optional<Vec> solve(const PrimeField& f, Mat m, Vec b) {
    if (m.rows != m.cols || b.size() != m.rows) throw Error("solve: shape mismatch");
    const uint32_t n = m.rows;
    // Gauss-Jordan on [m | b]
    for (uint32_t c = 0; c < n; ++c) {
        uint32_t piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c) {
            for (uint32_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            std::swap(b[piv], b[c]);
        }
        uint32_t pinv = f.inv(m.at(c, c));
        for (uint32_t j = 0; j < n; ++j) m.at(c, j) = f.mul(m.at(c, j), pinv);
        b[c] = f.mul(b[c], pinv);
        for (uint32_t i = 0; i < n; ++i) {
            if (i == c || m.at(i, c) == 0) continue;
            uint32_t fac = m.at(i, c);
            for (uint32_t j = 0; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(fac, m.at(c, j)));
            b[i] = f.sub(b[i], f.mul(fac, b[c]));
        }
    }
    return b;
}

std::vector<Vec> nullspace(const PrimeField& f, Mat m) {
    const uint32_t n = m.cols;
    // reduced row echelon form
    uint32_t r = 0;
    std::vector<uint32_t> pivot_col;
    for (uint32_t c = 0; c < n && r < m.rows; ++c) {
        uint32_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (uint32_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(r, j));
        uint32_t pinv = f.inv(m.at(r, c));
        for (uint32_t j = 0; j < n; ++j) m.at(r, j) = f.mul(m.at(r, j), pinv);
        for (uint32_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            uint32_t fac = m.at(i, c);
            for (uint32_t j = 0; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(fac, m.at(r, j)));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (uint32_t c : pivot_col) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (uint32_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec v(n, 0);
        v[c] = 1;
        for (uint32_t i = 0; i < pivot_col.size(); ++i) {
            v[pivot_col[i]] = f.neg(m.at(i, c));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec vec_add(const PrimeField& f, const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = f.add(x[i], y[i]);
    return r;
}

Vec vec_sub(const PrimeField& f, const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = f.sub(x[i], y[i]);
    return r;
}

Vec vec_scale(const PrimeField& f, uint32_t c, const Vec& x) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = f.mul(c, x[i]);
    return r;
}

Vec vec_neg(const PrimeField& f, const Vec& x) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = f.neg(x[i]);
    return r;
}

}  // namespace fqgeom
