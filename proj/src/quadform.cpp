#include "fqgeom/quadform.hpp"

namespace fqgeom {

QuadraticForm::QuadraticForm(PrimeField f, Mat gram) : f_(f), d_(gram.rows), gram_(std::move(gram)) {
    if (gram_.rows != gram_.cols) throw NotSymmetricError("Gram matrix must be square");
    for (uint32_t i = 0; i < d_; ++i)
        for (uint32_t j = i + 1; j < d_; ++j)
            if (gram_.at(i, j) != gram_.at(j, i))
                throw NotSymmetricError("Gram matrix must be symmetric");
    for (uint32_t& v : gram_.a) v %= f_.q();
}

QuadraticForm QuadraticForm::diagonal(PrimeField f, const Vec& entries) {
    Mat g(static_cast<uint32_t>(entries.size()), static_cast<uint32_t>(entries.size()));
    for (uint32_t i = 0; i < g.rows; ++i) g.at(i, i) = entries[i] % f.q();
    return QuadraticForm(f, std::move(g));
}

QuadraticForm QuadraticForm::hyperbolic_plane(PrimeField f) {
    Mat g(2, 2);
    g.at(0, 1) = g.at(1, 0) = 1;
    return QuadraticForm(f, std::move(g));
}

QuadraticForm QuadraticForm::xy_form(PrimeField f) {
    Mat g(2, 2);
    g.at(0, 1) = g.at(1, 0) = f.half();
    return QuadraticForm(f, std::move(g));
}

uint32_t QuadraticForm::eval(const Vec& x) const { return bilinear(x, x); }

uint32_t QuadraticForm::bilinear(const Vec& x, const Vec& y) const {
    uint64_t acc = 0;
    for (uint32_t i = 0; i < d_; ++i) {
        if (x[i] == 0) continue;
        uint64_t row = 0;
        for (uint32_t j = 0; j < d_; ++j) row += static_cast<uint64_t>(gram_.at(i, j)) * y[j];
        acc += x[i] * (row % f_.q());
        acc %= static_cast<uint64_t>(f_.q()) * f_.q();
    }
    return static_cast<uint32_t>(acc % f_.q());
}

uint32_t QuadraticForm::norm_of_difference(const Vec& x, const Vec& y) const {
    return eval(vec_sub(f_, x, y));
}

uint32_t QuadraticForm::disc() const { return det(f_, gram_); }

FormClass classify_form(const QuadraticForm& q) {
    const PrimeField& f = q.field();
    uint32_t disc = q.disc();
    if (q.dim() > 0 && disc == 0) throw DegenerateFormError("classify_form: singular Gram matrix");
    FormClass c{};
    c.disc_is_square = (q.dim() == 0) || f.legendre(disc) == 1;
    if (q.dim() % 2 == 0) {
        c.n = q.dim() / 2;
        // sign of (-1)^n * disc decides split vs non-split
        uint32_t s = disc;
        if (c.n % 2 == 1) s = f.neg(s);
        c.kind = f.legendre(s) == 1 || q.dim() == 0 ? FormKind::SplitEven : FormKind::NonSplitEven;
        c.odd_coeff = 0;
    } else {
        c.n = (q.dim() - 1) / 2;
        uint32_t s = disc;
        if (c.n % 2 == 1) s = f.neg(s);
        c.kind = FormKind::Odd;
        c.odd_coeff = f.legendre(s) == 1 ? 1 : f.nonsquare();
    }
    return c;
}

PointSet sphere_points(const QuadraticForm& q, uint32_t r) {
    PointSet s(q.field(), q.dim());
    const uint64_t n = s.universe_size();
    for (uint64_t idx = 0; idx < n; ++idx) {
        if (q.eval(s.decode(idx)) == r % q.field().q()) s.insert(idx);
    }
    return s;
}

std::vector<uint64_t> sphere_histogram(const QuadraticForm& q) {
    PointSet probe(q.field(), q.dim());
    std::vector<uint64_t> h(q.field().q(), 0);
    const uint64_t n = probe.universe_size();
    for (uint64_t idx = 0; idx < n; ++idx) ++h[q.eval(probe.decode(idx))];
    return h;
}

uint64_t sphere_size_formula(const QuadraticForm& q, uint32_t r) {
    const PrimeField& f = q.field();
    r %= f.q();
    FormClass c = classify_form(q);
    const uint32_t d = q.dim();
    auto qpow = [&](uint32_t e) {
        uint64_t v = 1;
        for (uint32_t i = 0; i < e; ++i) v *= f.q();
        return v;
    };
    switch (c.kind) {
        case FormKind::SplitEven:
            if (r != 0) return qpow(d - 1) - qpow((d - 2) / 2);
            return qpow(d - 1) + qpow(d / 2) - qpow((d - 2) / 2);
        case FormKind::NonSplitEven:
            if (r != 0) return qpow(d - 1) + qpow((d - 2) / 2);
            return qpow(d - 1) - qpow(d / 2) + qpow((d - 2) / 2);
        case FormKind::Odd: {
            if (r == 0) return qpow(d - 1);
            int sgn = f.legendre(f.div(r, c.odd_coeff));
            return sgn > 0 ? qpow(d - 1) + qpow((d - 1) / 2) : qpow(d - 1) - qpow((d - 1) / 2);
        }
    }
    throw Error("unreachable");
}

namespace {

// Position of the first nonzero coordinate, or dim if zero vector.
uint32_t leading(const Vec& v) {
    for (uint32_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return static_cast<uint32_t>(v.size());
}

bool independent_with(const PrimeField& f, const std::vector<Vec>& have, const Vec& cand) {
    std::vector<Vec> rows = have;
    rows.push_back(cand);
    return rank(f, mat_from_rows(rows)) == rows.size();
}

}  // namespace

NullStructure find_null_structure(const QuadraticForm& q, uint32_t m, bool want_completion) {
    if (!q.non_degenerate()) throw DegenerateFormError("find_null_structure: degenerate form");
    const PrimeField& f = q.field();
    PointSet space(f, q.dim());
    NullStructure ns;
    for (uint32_t step = 0; step < m; ++step) {
        bool found = false;
        for (uint64_t idx = 1; idx < space.universe_size(); ++idx) {
            Vec v = space.decode(idx);
            uint32_t lead = leading(v);
            if (lead == q.dim() || v[lead] != 1) continue;  // projective representative
            if (q.eval(v) != 0) continue;
            bool orth = true;
            for (const Vec& n : ns.null_vectors) {
                if (q.bilinear(v, n) != 0) {
                    orth = false;
                    break;
                }
            }
            if (!orth) continue;
            if (!independent_with(f, ns.null_vectors, v)) continue;
            ns.null_vectors.push_back(std::move(v));
            found = true;
            break;
        }
        if (!found) {
            if (step == 0) throw NoNullVectorError("no isotropic vector exists for this form");
            throw InfeasibleCountError("only " + std::to_string(step) +
                                       " mutually orthogonal null vectors exist");
        }
    }
    if (want_completion) {
        if (q.dim() % 2 != 0 || m != q.dim() / 2)
            throw InfeasibleCountError("completion needs a maximal null set (m = d/2, d even)");
        // Augment to a basis with standard basis vectors, greedily.
        std::vector<Vec> aug;
        for (uint32_t j = 0; j < q.dim() && ns.null_vectors.size() + aug.size() < q.dim(); ++j) {
            Vec e(q.dim(), 0);
            e[j] = 1;
            std::vector<Vec> all = ns.null_vectors;
            all.insert(all.end(), aug.begin(), aug.end());
            if (independent_with(f, all, e)) aug.push_back(std::move(e));
        }
        const uint32_t k = m;
        Mat g(k, k);  // g[i][j] = <v_i, n_j>
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = 0; j < k; ++j) g.at(i, j) = q.bilinear(aug[i], ns.null_vectors[j]);
        Vec rhs(k, 0);
        rhs[0] = 1;
        auto x = solve(f, transpose(g), rhs);
        if (!x) throw SingularGramError("Gram system of the augmented basis is singular");
        Vec e(q.dim(), 0);
        for (uint32_t i = 0; i < k; ++i) e = vec_add(f, e, vec_scale(f, (*x)[i], aug[i]));
        // normalize Q(e) to 1: <e,n_1> = 1, so Q(e + t n_1) = Q(e) + 2t
        uint32_t t = f.mul(f.sub(1, q.eval(e)), f.half());
        e = vec_add(f, e, vec_scale(f, t, ns.null_vectors[0]));
        if (q.eval(e) != 1 || q.bilinear(e, ns.null_vectors[0]) != 1)
            throw Error("completion constraints failed");
        for (uint32_t i = 1; i < k; ++i)
            if (q.bilinear(e, ns.null_vectors[i]) != 0) throw Error("completion constraints failed");
        ns.completion = std::move(e);
    }
    return ns;
}

std::pair<uint32_t, QuadraticForm> radical_split(const QuadraticForm& q,
                                                 const std::vector<Vec>& basis) {
    const PrimeField& f = q.field();
    const uint32_t m = static_cast<uint32_t>(basis.size());
    if (m == 0) return {0, QuadraticForm::diagonal(f, {})};
    if (rank(f, mat_from_rows(basis)) != m)
        throw DependentBasisError("radical_split: basis vectors are dependent");
    Mat g(m, m);
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = 0; j < m; ++j) g.at(i, j) = q.bilinear(basis[i], basis[j]);
    // Symmetric diagonalization by congruence. A zero diagonal with a nonzero
    // off-diagonal entry is repaired by adding the partner row and column
    // (char != 2 makes the new diagonal entry 2*g_ij != 0).
    for (uint32_t p = 0; p < m; ++p) {
        if (g.at(p, p) == 0) {
            uint32_t pick = m;
            for (uint32_t j = p + 1; j < m && pick == m; ++j)
                if (g.at(j, j) != 0) pick = j;
            if (pick < m) {
                for (uint32_t j = 0; j < m; ++j) std::swap(g.at(p, j), g.at(pick, j));
                for (uint32_t i = 0; i < m; ++i) std::swap(g.at(i, p), g.at(i, pick));
            } else {
                uint32_t bi = m, bj = m;
                for (uint32_t i = p; i < m && bi == m; ++i)
                    for (uint32_t j = i + 1; j < m; ++j)
                        if (g.at(i, j) != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi == m) break;  // rest of the block is identically zero
                for (uint32_t c = 0; c < m; ++c) g.at(bi, c) = f.add(g.at(bi, c), g.at(bj, c));
                for (uint32_t r = 0; r < m; ++r) g.at(r, bi) = f.add(g.at(r, bi), g.at(r, bj));
                if (bi != p) {
                    for (uint32_t j = 0; j < m; ++j) std::swap(g.at(p, j), g.at(bi, j));
                    for (uint32_t i = 0; i < m; ++i) std::swap(g.at(i, p), g.at(i, bi));
                }
            }
        }
        if (g.at(p, p) == 0) break;
        uint32_t pinv = f.inv(g.at(p, p));
        for (uint32_t r = p + 1; r < m; ++r) {
            uint32_t fac = f.mul(g.at(r, p), pinv);
            if (fac == 0) continue;
            for (uint32_t c = 0; c < m; ++c) g.at(r, c) = f.sub(g.at(r, c), f.mul(fac, g.at(p, c)));
            for (uint32_t rr = 0; rr < m; ++rr) g.at(rr, r) = f.sub(g.at(rr, r), f.mul(fac, g.at(rr, p)));
        }
    }
    Vec nonzero;
    for (uint32_t i = 0; i < m; ++i)
        if (g.at(i, i) != 0) nonzero.push_back(g.at(i, i));
    uint32_t null_rank = m - static_cast<uint32_t>(nonzero.size());
    return {null_rank, QuadraticForm::diagonal(f, nonzero)};
}

std::pair<uint32_t, uint32_t> NullBasis::npm_coords(const Vec& p) const {
    // p = x+ n_plus + x- n_minus  =>  x+- = (p0 -+ iota p1) / 2
    uint32_t xp = f.mul(f.sub(p[0], f.mul(iota, p[1])), f.half());
    uint32_t xm = f.mul(f.add(p[0], f.mul(iota, p[1])), f.half());
    return {xp, xm};
}

Vec NullBasis::product_point(uint32_t x, uint32_t y) const {
    return vec_add(f, vec_scale(f, x, n_plus), vec_scale(f, y, b2));
}

NullBasis make_null_basis(PrimeField f) {
    auto iota = f.sqrt_minus_one();
    if (!iota) throw WrongResidueClassError("q = " + std::to_string(f.q()) + " is not 1 mod 4");
    NullBasis nb{f, *iota, {1, *iota}, {1, f.neg(*iota)}, {}, 0};
    nb.b2 = vec_scale(f, f.half(), nb.n_minus);
    QuadraticForm dot = QuadraticForm::dot(f, 2);
    nb.kappa = f.mul(2, dot.bilinear(nb.n_plus, nb.b2));
    return nb;
}

}  // namespace fqgeom
