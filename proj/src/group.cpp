#include "fqgeom/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fqgeom {

bool is_isometry(const QuadraticForm& q, const Mat& m) {
    const PrimeField& f = q.field();
    return mat_mul(f, mat_mul(f, transpose(m), q.gram()), m) == q.gram();
}

RigidMotion compose(const PrimeField& f, const RigidMotion& a, const RigidMotion& b) {
    return {mat_mul(f, a.rotation, b.rotation),
            vec_add(f, mat_vec(f, a.rotation, b.translation), a.translation)};
}

IsometryGroup::IsometryGroup(QuadraticForm form, GroupVariant variant, std::vector<Mat> elems)
    : form_(std::move(form)), variant_(variant), elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    for (const Mat& m : elems_) {
        if (!is_isometry(form_, m)) throw Error("IsometryGroup: element fails theta^T B theta = B");
    }
}

bool IsometryGroup::contains(const Mat& m) const {
    return std::binary_search(elems_.begin(), elems_.end(), m);
}

namespace {

uint64_t estimated_order(const PrimeField& f, uint32_t d, uint64_t cap) {
    // 2 q^{d(d-1)/2}, saturating at cap
    uint64_t est = 2;
    for (uint32_t i = 0; i < d * (d - 1) / 2; ++i) {
        if (est > cap / f.q()) return cap + 1;
        est *= f.q();
    }
    return est;
}

std::vector<Mat> brute_force_isometries(const QuadraticForm& q) {
    const PrimeField& f = q.field();
    const uint32_t d = q.dim();
    const uint64_t cells = static_cast<uint64_t>(d) * d;
    uint64_t total = 1;
    for (uint64_t i = 0; i < cells; ++i) total *= f.q();
    std::vector<Mat> out;
    Mat m(d, d);
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        for (uint64_t i = 0; i < cells; ++i) {
            m.a[i] = static_cast<uint32_t>(c % f.q());
            c /= f.q();
        }
        if (is_isometry(q, m)) out.push_back(m);
    }
    return out;
}

// Reflection in the anisotropic vector v: x -> x - (2<x,v>/Q(v)) v,
// as a matrix I - (2/Q(v)) v (Bv)^T.
Mat reflection(const QuadraticForm& q, const Vec& v) {
    const PrimeField& f = q.field();
    const uint32_t d = q.dim();
    Vec bv = mat_vec(f, q.gram(), v);
    uint32_t c = f.mul(2, f.inv(q.eval(v)));
    Mat r = Mat::identity(d);
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j)
            r.at(i, j) = f.sub(r.at(i, j), f.mul(c, f.mul(v[i], bv[j])));
    return r;
}

std::vector<Mat> reflection_closure(const QuadraticForm& q, uint64_t budget) {
    const PrimeField& f = q.field();
    PointSet space(f, q.dim());
    std::vector<Mat> gens;
    for (uint64_t idx = 1; idx < space.universe_size(); ++idx) {
        Vec v = space.decode(idx);
        uint32_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        if (v[lead] != 1) continue;  // one representative per line
        if (q.eval(v) == 0) continue;
        gens.push_back(reflection(q, v));
    }
    std::set<Mat> known;
    std::deque<Mat> frontier;
    known.insert(Mat::identity(q.dim()));
    frontier.push_back(Mat::identity(q.dim()));
    while (!frontier.empty()) {
        Mat g = frontier.front();
        frontier.pop_front();
        for (const Mat& r : gens) {
            Mat h = mat_mul(f, g, r);
            if (known.insert(h).second) {
                if (known.size() > budget)
                    throw BudgetExceededError("orthogonal group closure exceeded budget");
                frontier.push_back(std::move(h));
            }
        }
    }
    return {known.begin(), known.end()};
}

}  // namespace

IsometryGroup orthogonal_group(const QuadraticForm& q, GroupVariant variant, uint64_t budget) {
    if (!q.non_degenerate()) throw DegenerateFormError("orthogonal_group: degenerate form");
    const PrimeField& f = q.field();
    if (estimated_order(f, q.dim(), budget) > budget)
        throw BudgetExceededError("estimated group order exceeds budget");
    std::vector<Mat> elems =
        q.dim() <= 2 ? brute_force_isometries(q) : reflection_closure(q, budget);
    if (variant == GroupVariant::SpecialOrthogonal) {
        std::vector<Mat> so;
        for (const Mat& m : elems)
            if (det(f, m) == 1) so.push_back(m);
        elems = std::move(so);
    }
    return IsometryGroup(q, variant, std::move(elems));
}

uint64_t group_order_recursion(const QuadraticForm& q) {
    if (!q.non_degenerate()) throw DegenerateFormError("group_order_recursion: degenerate form");
    const PrimeField& f = q.field();
    if (q.dim() == 1) return 2;  // {+1, -1}
    PointSet space(f, q.dim());
    Vec unit;
    uint64_t unit_count = 0;
    for (uint64_t idx = 1; idx < space.universe_size(); ++idx) {
        Vec v = space.decode(idx);
        if (q.eval(v) == 1) {
            if (unit.empty()) unit = v;
            ++unit_count;
        }
    }
    if (unit.empty()) throw EmptyUnitSphereError("no vector of norm 1");
    // Restrict to the orthogonal complement of the unit vector.
    Mat row(1, q.dim());
    Vec bu = mat_vec(f, q.gram(), unit);
    for (uint32_t j = 0; j < q.dim(); ++j) row.at(0, j) = bu[j];
    std::vector<Vec> basis = nullspace(f, row);
    Mat g(static_cast<uint32_t>(basis.size()), static_cast<uint32_t>(basis.size()));
    for (uint32_t i = 0; i < g.rows; ++i)
        for (uint32_t j = 0; j < g.cols; ++j) g.at(i, j) = q.bilinear(basis[i], basis[j]);
    QuadraticForm perp(f, std::move(g));
    return unit_count * group_order_recursion(perp);
}

IsometryGroup stabilizer(const IsometryGroup& g, const std::vector<Vec>& tuple) {
    const PrimeField& f = g.form().field();
    std::vector<Mat> fixed;
    for (const Mat& m : g.elements()) {
        bool ok = true;
        for (const Vec& v : tuple) {
            if (mat_vec(f, m, v) != v) {
                ok = false;
                break;
            }
        }
        if (ok) fixed.push_back(m);
    }
    return IsometryGroup(g.form(), g.variant(), std::move(fixed));
}

std::vector<std::vector<Vec>> orbit(const IsometryGroup& g, const std::vector<Vec>& tuple) {
    const PrimeField& f = g.form().field();
    std::set<std::vector<Vec>> images;
    for (const Mat& m : g.elements()) {
        std::vector<Vec> img;
        img.reserve(tuple.size());
        for (const Vec& v : tuple) img.push_back(mat_vec(f, m, v));
        images.insert(std::move(img));
    }
    return {images.begin(), images.end()};
}

}  // namespace fqgeom
