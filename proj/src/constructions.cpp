#include "fqgeom/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fqgeom/rng.hpp"
#include "fqgeom/simplex.hpp"

namespace fqgeom {

namespace {

// Distinct values of Q(u - v) over ordered pairs of E.
std::set<uint32_t> distance_set(const QuadraticForm& q, const std::vector<Vec>& pts) {
    std::set<uint32_t> out;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) out.insert(q.norm_of_difference(pts[i], pts[j]));
    return out;
}

std::set<uint32_t> pair_set(const PrimeField& f, const std::vector<uint32_t>& a,
                            const std::vector<uint32_t>& b, bool a_minus, bool b_minus) {
    std::set<uint32_t> da, db, out;
    for (uint32_t x : a)
        for (uint32_t y : a) da.insert(a_minus ? f.sub(x, y) : f.add(x, y));
    for (uint32_t x : b)
        for (uint32_t y : b) db.insert(b_minus ? f.sub(x, y) : f.add(x, y));
    for (uint32_t x : da)
        for (uint32_t y : db) out.insert(f.mul(x, y));
    return out;
}

nlohmann::json set_to_json(const std::set<uint32_t>& s) {
    auto arr = nlohmann::json::array();
    for (uint32_t v : s) arr.push_back(v);
    return arr;
}

}  // namespace

nlohmann::json ConstructionReport::to_json() const {
    nlohmann::json j;
    j["construction"] = name;
    j["params"] = params;
    if (set) {
        j["set_size"] = set->size();
        j["q"] = set->field().q();
        j["d"] = set->dim();
    }
    j["measured"] = measured;
    j["bound"] = {{"description", bound_desc}, {"value", bound_value}, {"holds", bound_holds}};
    if (!extra.is_null()) j["extra"] = extra;
    return j;
}

ConstructionReport sharpness_odd(PrimeField f, uint32_t d, uint32_t interval_len) {
    if (d < 3 || d % 2 == 0) throw Error("sharpness_odd needs odd d >= 3");
    if (interval_len == 0 || interval_len > f.q()) throw Error("interval length out of range");
    const uint32_t k = (d - 1) / 2;
    QuadraticForm q = QuadraticForm::dot(f, d);
    NullStructure ns = find_null_structure(q, k);

    // w: orthogonal to every null vector, norm 1 preferred, else the first
    // anisotropic candidate in index order.
    PointSet space(f, d);
    Vec w;
    uint32_t w_norm = 0;
    for (int pass = 0; pass < 2 && w.empty(); ++pass) {
        for (uint64_t idx = 1; idx < space.universe_size(); ++idx) {
            Vec v = space.decode(idx);
            uint32_t nv = q.eval(v);
            if (pass == 0 ? nv != 1 : nv == 0) continue;
            bool orth = true;
            for (const Vec& n : ns.null_vectors)
                if (q.bilinear(v, n) != 0) {
                    orth = false;
                    break;
                }
            if (!orth) continue;
            w = v;
            w_norm = nv;
            break;
        }
    }
    if (w.empty()) throw NoNullVectorError("no anisotropic vector orthogonal to the null set");

    // E = { sum a_i n_i + b w : a free, b in I }
    std::vector<Vec> pts;
    std::vector<uint32_t> digits(k, 0);
    for (;;) {
        Vec base(d, 0);
        for (uint32_t i = 0; i < k; ++i)
            base = vec_add(f, base, vec_scale(f, digits[i], ns.null_vectors[i]));
        for (uint32_t b = 0; b < interval_len; ++b)
            pts.push_back(vec_add(f, base, vec_scale(f, b, w)));
        uint32_t pos = 0;
        while (pos < k && ++digits[pos] == f.q()) digits[pos++] = 0;
        if (pos == k) break;
        if (k == 0) break;
    }
    PointSet e = PointSet::of_points(f, d, pts);

    // membership predicate: Q == w_norm * (w-coordinate)^2 on the whole span
    uint64_t span_checked = 0;
    std::set<uint32_t> span_distances;
    {
        std::vector<uint32_t> dg(k + 1, 0);
        for (;;) {
            Vec x(d, 0);
            for (uint32_t i = 0; i < k; ++i)
                x = vec_add(f, x, vec_scale(f, dg[i], ns.null_vectors[i]));
            x = vec_add(f, x, vec_scale(f, dg[k], w));
            uint32_t expect = f.mul(w_norm, f.mul(dg[k], dg[k]));
            if (q.eval(x) != expect) throw Error("degenerate-subspace predicate failed");
            span_distances.insert(expect);
            ++span_checked;
            uint32_t pos = 0;
            while (pos <= k && ++dg[pos] == f.q()) dg[pos++] = 0;
            if (pos == k + 1) break;
        }
    }

    auto dset = distance_set(q, pts);
    ConstructionReport rep;
    rep.name = "sharpness_odd";
    rep.params = {{"q", f.q()}, {"d", d}, {"interval_len", interval_len}};
    rep.set = e;
    rep.measured["set_size"] = static_cast<int64_t>(e.size());
    rep.measured["T_1"] = static_cast<int64_t>(dset.size());
    rep.measured["w_norm"] = w_norm;
    rep.measured["span_points_checked"] = static_cast<int64_t>(span_checked);
    rep.measured["T_1_full_span"] = static_cast<int64_t>(span_distances.size());
    rep.bound_desc = "|T_1(E)| <= 2|I| - 1";
    rep.bound_value = 2 * static_cast<int64_t>(interval_len) - 1;
    rep.bound_holds = static_cast<int64_t>(dset.size()) <= rep.bound_value;
    rep.extra = {{"distance_set", set_to_json(dset)},
                 {"nulls", ns.null_vectors},
                 {"w", w},
                 {"distance_set_full_span", set_to_json(span_distances)}};
    return rep;
}

ConstructionReport sharpness_even(PrimeField f, uint32_t d, double big_c) {
    if (d < 2 || d % 2 != 0) throw Error("sharpness_even needs even d >= 2");
    if (big_c <= 0) throw Error("C must be positive");
    double root = std::sqrt(big_c * f.q());
    if (std::abs(root - std::round(root)) < 1e-9) root = std::round(root);  // snap exact squares
    uint32_t l_hi = std::min<uint32_t>(f.q(), static_cast<uint32_t>(std::ceil(root)));
    uint32_t l_lo = std::min<uint32_t>(f.q(), std::max<uint32_t>(1, static_cast<uint32_t>(std::floor(root))));

    ConstructionReport rep;
    rep.params = {{"q", f.q()}, {"d", d}, {"C", big_c}};

    if (d == 2) {
        QuadraticForm q = QuadraticForm::dot(f, 2);
        std::vector<Vec> pts;
        for (uint32_t a = 1; a <= l_hi; ++a)
            for (uint32_t b = 1; b <= l_lo; ++b) pts.push_back({a % f.q(), b % f.q()});
        PointSet e = PointSet::of_points(f, 2, pts);
        auto dset = distance_set(q, pts);
        // integer-grid oracle: {a^2 + b^2 mod q : 0 <= a < l_hi, 0 <= b < l_lo}
        std::set<uint32_t> oracle;
        for (uint64_t a = 0; a < l_hi; ++a)
            for (uint64_t b = 0; b < l_lo; ++b)
                oracle.insert(static_cast<uint32_t>((a * a + b * b) % f.q()));
        rep.name = "sharpness_even_grid";
        rep.set = e;
        rep.measured["set_size"] = static_cast<int64_t>(e.size());
        rep.measured["T_1"] = static_cast<int64_t>(dset.size());
        rep.measured["grid_cols"] = l_hi;
        rep.measured["grid_rows"] = l_lo;
        rep.measured["integer_grid_oracle"] = static_cast<int64_t>(oracle.size());
        rep.measured["below_q"] = dset.size() < f.q() ? 1 : 0;
        rep.bound_desc = "distance set equals the integer-grid oracle";
        rep.bound_value = static_cast<int64_t>(oracle.size());
        rep.bound_holds = dset == oracle;
        rep.extra = {{"distance_set", set_to_json(dset)}};
        return rep;
    }

    const uint32_t k = d / 2;
    QuadraticForm q = QuadraticForm::dot(f, d);
    NullStructure ns = find_null_structure(q, k, /*want_completion=*/true);
    const Vec& n1 = ns.null_vectors[0];
    const Vec& e_vec = *ns.completion;
    // Q(x e + y n1) = x^2 + 2xy exactly
    std::vector<Vec> pts;
    for (uint32_t x = 0; x < l_hi && x < f.q(); ++x)
        for (uint32_t y = 0; y < l_hi && y < f.q(); ++y)
            pts.push_back(vec_add(f, vec_scale(f, x, e_vec), vec_scale(f, y, n1)));
    PointSet eset = PointSet::of_points(f, d, pts);
    auto dset = distance_set(q, pts);
    // independent route: on span{e, n1} the norm is x(x + 2y), so the
    // distance set must be that product form over the interval differences
    std::set<uint32_t> oracle;
    for (uint32_t x1 = 0; x1 < l_hi; ++x1)
        for (uint32_t x2 = 0; x2 < l_hi; ++x2)
            for (uint32_t y1 = 0; y1 < l_hi; ++y1)
                for (uint32_t y2 = 0; y2 < l_hi; ++y2) {
                    uint32_t dx = f.sub(x1, x2), dy = f.sub(y1, y2);
                    oracle.insert(f.mul(dx, f.add(dx, f.mul(2, dy))));
                }
    rep.name = "sharpness_even_null_plane";
    rep.set = eset;
    rep.measured["set_size"] = static_cast<int64_t>(eset.size());
    rep.measured["T_1"] = static_cast<int64_t>(dset.size());
    rep.measured["completion_norm"] = q.eval(e_vec);                    // 1 by construction
    rep.measured["completion_pairing"] = q.bilinear(e_vec, n1);        // 1 by construction
    rep.measured["interval_len"] = l_hi;
    rep.measured["below_q"] = dset.size() < f.q() ? 1 : 0;
    rep.bound_desc = "distance set equals the x(x+2y) product form over I - I";
    rep.bound_value = static_cast<int64_t>(oracle.size());
    rep.bound_holds = dset == oracle;
    rep.extra = {{"distance_set", set_to_json(dset)}, {"e", e_vec}, {"n1", n1}};
    return rep;
}

ConstructionReport sharpness_simplex(PrimeField f, uint32_t d, uint32_t k, double eps) {
    if (d < 2) throw Error("sharpness_simplex needs d >= 2");
    if (k == 0 || k > d) throw Error("need 1 <= k <= d");
    if (eps <= 0 || eps >= 1.0 / d) throw BadEpsilonError("need 0 < eps < 1/d");
    uint32_t strip = std::max<uint32_t>(
        1, static_cast<uint32_t>(std::floor(std::pow(f.q(), 1.0 / d - eps))));
    strip = std::min(strip, f.q());
    PointSet e(f, d);
    std::vector<uint32_t> digits(d, 0);
    for (;;) {
        if (digits[d - 1] < strip) e.insert(digits);
        uint32_t pos = 0;
        while (pos < d && ++digits[pos] == f.q()) digits[pos++] = 0;
        if (pos == d) break;
    }
    ConstructionReport rep;
    rep.name = "sharpness_simplex";
    rep.params = {{"q", f.q()}, {"d", d}, {"k", k}, {"eps", eps}};
    rep.set = e;
    rep.measured["set_size"] = static_cast<int64_t>(e.size());
    rep.measured["strip_width"] = strip;
    // exact congruence count when the sweep is cheap
    double sweep = std::pow(static_cast<double>(e.size()), k + 1);
    if (sweep <= 2e7) {
        QuadraticForm q = QuadraticForm::dot(f, d);
        ClassCount cc = count_congruence_classes(e, k, q, CongruenceMode::DistanceMatrixFast);
        rep.measured["T_k_fast"] = static_cast<int64_t>(cc.total);
        int64_t full = 1;
        for (uint32_t i = 0; i < k * (k + 1) / 2; ++i) full *= f.q();
        rep.bound_desc = "T_k against q^{k+1 choose 2}";
        rep.bound_value = full;
        rep.bound_holds = static_cast<int64_t>(cc.total) <= full;
    } else {
        rep.bound_desc = "count skipped (sweep too large)";
        rep.bound_value = 0;
        rep.bound_holds = true;
    }
    return rep;
}

ConstructionReport null_product_set(PrimeField f, const std::vector<uint32_t>& xs,
                                    const std::vector<uint32_t>& ys) {
    NullBasis nb = make_null_basis(f);  // WrongResidueClass unless q = 1 mod 4
    QuadraticForm q = QuadraticForm::dot(f, 2);
    std::vector<Vec> pts;
    for (uint32_t x : xs)
        for (uint32_t y : ys) pts.push_back(nb.product_point(x, y));
    PointSet e = PointSet::of_points(f, 2, pts);
    auto dset = distance_set(q, pts);
    auto mm = pair_set(f, xs, ys, true, true);
    std::set<uint32_t> scaled;
    for (uint32_t v : mm) scaled.insert(f.mul(nb.kappa, v));
    auto pp = pair_set(f, xs, ys, false, false);
    auto pm = pair_set(f, xs, ys, false, true);
    auto mp = pair_set(f, xs, ys, true, false);

    ConstructionReport rep;
    rep.name = "null_product_set";
    rep.params = {{"q", f.q()}, {"X", xs}, {"Y", ys}};
    rep.set = e;
    rep.measured["set_size"] = static_cast<int64_t>(e.size());
    rep.measured["distance_set"] = static_cast<int64_t>(dset.size());
    rep.measured["kappa"] = nb.kappa;
    rep.measured["prod_mm"] = static_cast<int64_t>(mm.size());  // (X-X)(Y-Y)
    rep.measured["prod_pp"] = static_cast<int64_t>(pp.size());
    rep.measured["prod_pm"] = static_cast<int64_t>(pm.size());
    rep.measured["prod_mp"] = static_cast<int64_t>(mp.size());
    rep.bound_desc = "distance set = kappa (X-X)(Y-Y)";
    rep.bound_value = static_cast<int64_t>(mm.size());
    rep.bound_holds = dset == scaled && dset.size() == mm.size();
    rep.extra = {{"distance_set", set_to_json(dset)}, {"product_set", set_to_json(mm)}};
    return rep;
}

ConstructionReport minkowski_distance_set(PrimeField f, const std::vector<uint32_t>& xs,
                                          const std::vector<uint32_t>& ys) {
    if (f.q() % 4 != 3)
        throw WrongResidueClassError("q = " + std::to_string(f.q()) + " is not 3 mod 4");
    QuadraticForm q = QuadraticForm::xy_form(f);
    std::vector<Vec> pts;
    for (uint32_t x : xs)
        for (uint32_t y : ys) pts.push_back({x % f.q(), y % f.q()});
    PointSet e = PointSet::of_points(f, 2, pts);
    auto dset = distance_set(q, pts);
    auto mm = pair_set(f, xs, ys, true, true);
    std::vector<uint64_t> level = sphere_histogram(q);

    ConstructionReport rep;
    rep.name = "minkowski_distance_set";
    rep.params = {{"q", f.q()}, {"X", xs}, {"Y", ys}};
    rep.set = e;
    rep.measured["set_size"] = static_cast<int64_t>(e.size());
    rep.measured["distance_set"] = static_cast<int64_t>(dset.size());
    rep.measured["level_set_zero"] = static_cast<int64_t>(level[0]);
    rep.measured["level_set_nonzero"] = static_cast<int64_t>(f.q() > 1 ? level[1] : 0);
    rep.bound_desc = "distance set = (X-X)(Y-Y)";
    rep.bound_value = static_cast<int64_t>(mm.size());
    rep.bound_holds = dset == mm;
    rep.extra = {{"distance_set", set_to_json(dset)},
                 {"hyperbola_levels", level}};
    return rep;
}

ConstructionReport ratio_map_census(PrimeField f, std::optional<uint32_t> interval_len,
                                    uint64_t seed, uint32_t samples) {
    if (f.q() % 4 != 1)
        throw WrongResidueClassError("q = " + std::to_string(f.q()) + " is not 1 mod 4");
    uint32_t ilen = interval_len
                        ? *interval_len
                        : static_cast<uint32_t>(std::floor(0.5 * std::sqrt(f.q() / 2.0 - 1.0)));
    ilen = std::max<uint32_t>(1, std::min(ilen, f.q()));
    std::set<uint32_t> diffs_nz;
    for (uint32_t a = 0; a < ilen; ++a)
        for (uint32_t b = 0; b < ilen; ++b)
            if (a != b) diffs_nz.insert(f.sub(a, b));
    std::set<uint32_t> ratios;
    for (uint32_t u : diffs_nz)
        for (uint32_t v : diffs_nz) ratios.insert(f.div(u, v));

    // census of f(a,b) = (1 - b/a) d12 + (1 - a/b) d23 over a != b
    SplitMix64 rng(seed);
    uint64_t max_census = 0, min_census = UINT64_MAX;
    for (uint32_t s = 0; s < samples; ++s) {
        uint32_t d12 = 1 + static_cast<uint32_t>(rng.next_below(f.q() - 1));
        uint32_t d23 = 1 + static_cast<uint32_t>(rng.next_below(f.q() - 1));
        std::set<uint32_t> vals;
        for (uint32_t a : diffs_nz)
            for (uint32_t b : diffs_nz) {
                if (a == b) continue;
                uint32_t t1 = f.mul(f.sub(1, f.div(b, a)), d12);
                uint32_t t2 = f.mul(f.sub(1, f.div(a, b)), d23);
                vals.insert(f.add(t1, t2));
            }
        max_census = std::max<uint64_t>(max_census, vals.size());
        min_census = std::min<uint64_t>(min_census, vals.size());
    }
    if (min_census == UINT64_MAX) min_census = 0;

    PointSet iset(f, 1);
    for (uint32_t a = 0; a < ilen; ++a) iset.insert(Vec{a});

    ConstructionReport rep;
    rep.name = "ratio_map_census";
    rep.params = {{"q", f.q()}, {"interval_len", ilen}, {"seed", seed}, {"samples", samples}};
    rep.set = iset;
    rep.measured["interval_len"] = ilen;
    rep.measured["quotient_set"] = static_cast<int64_t>(ratios.size());
    rep.measured["max_census"] = static_cast<int64_t>(max_census);
    rep.measured["min_census"] = static_cast<int64_t>(min_census);
    rep.bound_desc = "(2|I|)^2 <= q/2 - 1 and |(I-I)/(I-I)| <= (2|I|)^2";
    rep.bound_value = 4 * static_cast<int64_t>(ilen) * ilen;
    // integer-exact feasibility: (2|I|)^2 <= q/2 - 1  <=>  8|I|^2 + 2 <= q
    bool feasible = 8 * static_cast<uint64_t>(ilen) * ilen + 2 <= f.q();
    rep.bound_holds = ratios.size() <= static_cast<uint64_t>(rep.bound_value);
    rep.extra = {{"feasible", feasible}};
    return rep;
}

}  // namespace fqgeom
