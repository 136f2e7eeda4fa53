#include "fqgeom/simplex.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <unordered_map>

namespace fqgeom {

namespace {

constexpr uint64_t kTupleBudget = 50'000'000;
constexpr uint64_t kDenseKeyCap = uint64_t{1} << 24;

using u128 = unsigned __int128;

struct U128Hash {
    size_t operator()(u128 v) const {
        uint64_t lo = static_cast<uint64_t>(v);
        uint64_t hi = static_cast<uint64_t>(v >> 64);
        return (lo ^ (hi * 0x9E3779B97F4A7C15ULL)) * 0xBF58476D1CE4E5B9ULL;
    }
};

// Rank of the difference vectors x_i - x_0 (i >= 1), done on a small stack
// matrix; a tuple is degenerate iff this rank drops below k.
struct RankScratch {
    std::array<std::array<uint32_t, 8>, 8> m{};

    bool degenerate(const PrimeField& f, const std::vector<Vec>& pts,
                    const uint32_t* sel, uint32_t k1, uint32_t d) {
        const uint32_t k = k1 - 1;
        if (k == 0) return false;
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = 0; j < d; ++j)
                m[i][j] = f.sub(pts[sel[i + 1]][j], pts[sel[0]][j]);
        uint32_t r = 0;
        for (uint32_t c = 0; c < d && r < k; ++c) {
            uint32_t piv = r;
            while (piv < k && m[piv][c] == 0) ++piv;
            if (piv == k) continue;
            if (piv != r) std::swap(m[piv], m[r]);
            uint32_t pinv = f.inv(m[r][c]);
            for (uint32_t i = r + 1; i < k; ++i) {
                uint32_t fac = f.mul(m[i][c], pinv);
                if (fac == 0) continue;
                for (uint32_t j = c; j < d; ++j) m[i][j] = f.sub(m[i][j], f.mul(fac, m[r][j]));
            }
            ++r;
        }
        return r < k;
    }
};

// Pairwise norm table over the listed points.
std::vector<uint32_t> pair_norm_lut(const QuadraticForm& q, const std::vector<Vec>& pts) {
    const size_t m = pts.size();
    std::vector<uint32_t> lut(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) lut[i * m + j] = q.norm_of_difference(pts[i], pts[j]);
    return lut;
}

uint64_t checked_tuple_count(uint64_t m, uint32_t k1) {
    if (k1 > 8) throw BudgetExceededError("tuple arity above 8 is unsupported");
    uint64_t total = 1;
    for (uint32_t i = 0; i < k1; ++i) {
        if (m != 0 && total > kTupleBudget / m) throw BudgetExceededError("|E|^(k+1) exceeds the sweep budget");
        total *= m;
    }
    return total;
}

// Odometer over {0..m-1}^k1; f receives a pointer to the k1 selected slots.
template <class F>
void for_each_tuple(uint64_t m, uint32_t k1, F&& fn) {
    if (m == 0) return;
    std::vector<uint32_t> sel(k1, 0);
    for (;;) {
        fn(sel.data());
        uint32_t pos = 0;
        while (pos < k1) {
            if (++sel[pos] < m) break;
            sel[pos] = 0;
            ++pos;
        }
        if (pos == k1) return;
    }
}

// Shared machinery for the orbit sweeps: point-index action tables per group
// element, index-level differences and negation.
struct OrbitContext {
    const PointSet& e;
    PointSet space;
    std::vector<uint32_t> eidx;
    std::vector<Vec> epts;
    std::vector<std::vector<uint32_t>> act;  // act[gi][pt]
    std::vector<uint32_t> negidx;
    std::vector<uint32_t> diff_lut;  // empty when the space is too big
    uint64_t n;

    OrbitContext(const PointSet& e_, const IsometryGroup& g)
        : e(e_), space(e_.field(), e_.dim()), n(space.universe_size()) {
        if (n > 0xFFFF) throw BudgetExceededError("exact-orbit mode needs q^d <= 65536");
        const PrimeField& f = e.field();
        for (uint64_t idx : e.indices()) eidx.push_back(static_cast<uint32_t>(idx));
        epts = e.points();
        act.resize(g.order());
        std::vector<Vec> all(n);
        for (uint64_t i = 0; i < n; ++i) all[i] = space.decode(i);
        for (size_t gi = 0; gi < g.order(); ++gi) {
            act[gi].resize(n);
            for (uint64_t i = 0; i < n; ++i)
                act[gi][i] = static_cast<uint32_t>(space.encode(mat_vec(f, g.elements()[gi], all[i])));
        }
        negidx.resize(n);
        for (uint64_t i = 0; i < n; ++i)
            negidx[i] = static_cast<uint32_t>(space.encode(vec_neg(f, all[i])));
        if (n * n <= kDenseKeyCap) {
            diff_lut.resize(n * n);
            for (uint64_t a = 0; a < n; ++a)
                for (uint64_t b = 0; b < n; ++b)
                    diff_lut[a * n + b] =
                        static_cast<uint32_t>(space.encode(vec_sub(f, all[a], all[b])));
        }
    }

    uint32_t diff(uint32_t a, uint32_t b) const {
        if (!diff_lut.empty()) return diff_lut[static_cast<uint64_t>(a) * n + b];
        return static_cast<uint32_t>(space.encode(vec_sub(e.field(), space.decode(a), space.decode(b))));
    }
};

// Lexicographically minimal image of the pinned differences over the group:
// the canonical label of the rigid-motion orbit. Slots pack as 16-bit digits.
u128 motion_canonical(const OrbitContext& c, const uint32_t* sel, uint32_t k1, size_t order) {
    std::array<uint32_t, 8> v{};
    const uint32_t k = k1 - 1;
    for (uint32_t i = 0; i < k; ++i) v[i] = c.diff(c.eidx[sel[i + 1]], c.eidx[sel[0]]);
    u128 best = ~u128{0};
    for (size_t gi = 0; gi < order; ++gi) {
        u128 key = 0;
        const auto& a = c.act[gi];
        for (uint32_t i = 0; i < k; ++i) key = (key << 16) | a[v[i]];
        if (key < best) best = key;
    }
    return best;
}

u128 pinned_canonical(const OrbitContext& c, const uint32_t* sel, uint32_t k1, size_t order) {
    u128 best = ~u128{0};
    for (size_t gi = 0; gi < order; ++gi) {
        u128 key = 0;
        const auto& a = c.act[gi];
        for (uint32_t i = 0; i < k1; ++i) key = (key << 16) | a[c.eidx[sel[i]]];
        if (key < best) best = key;
    }
    return best;
}

// Distance-matrix key as base-q digits in (i<j) row-major order.
struct DKey {
    uint32_t q;
    uint32_t digits;
    uint64_t space;   // q^digits, 0 on overflow
    bool dense;

    DKey(uint32_t q_, uint32_t k1) : q(q_), digits(k1 * (k1 - 1) / 2) {
        space = 1;
        for (uint32_t i = 0; i < digits; ++i) {
            if (space > (uint64_t{1} << 62) / q) {
                space = 0;
                break;
            }
            space *= q;
        }
        if (space == 0) throw BudgetExceededError("distance-matrix key space too large");
        dense = space <= kDenseKeyCap;
    }

    std::vector<uint32_t> decode(uint64_t key) const {
        std::vector<uint32_t> e(digits);
        for (uint32_t i = 0; i < digits; ++i) {
            e[i] = static_cast<uint32_t>(key % q);
            key /= q;
        }
        return e;
    }
    uint64_t encode(const std::vector<uint32_t>& e) const {
        uint64_t key = 0;
        for (uint32_t i = digits; i-- > 0;) key = key * q + e[i];
        return key;
    }
};

// Distinct distance-matrix keys over E^{k+1} with degeneracy flags.
// flag bit0: realized by a non-degenerate tuple, bit1: by a degenerate one.
std::map<uint64_t, uint8_t> fast_distance_classes(const PointSet& e, uint32_t k,
                                                  const QuadraticForm& q) {
    const PrimeField& f = e.field();
    const uint32_t k1 = k + 1;
    std::vector<Vec> pts = e.points();
    const uint64_t m = pts.size();
    checked_tuple_count(m, k1);
    DKey dk(f.q(), k1);
    std::vector<uint32_t> lut = pair_norm_lut(q, pts);
    std::vector<uint8_t> dense;
    std::unordered_map<uint64_t, uint8_t> sparse;
    if (dk.dense) dense.assign(dk.space, 0);
    RankScratch rs;
    const uint32_t d = e.dim();
    for_each_tuple(m, k1, [&](const uint32_t* sel) {
        // digits in row-major (i<j) order, least significant pair (0,1)
        uint64_t key = 0;
        for (uint32_t i = k1; i-- > 0;)
            for (uint32_t j = k1; j-- > i + 1;) key = key * f.q() + lut[sel[i] * m + sel[j]];
        uint8_t bit = rs.degenerate(f, pts, sel, k1, d) ? 2 : 1;
        if (dk.dense)
            dense[key] |= bit;
        else
            sparse[key] |= bit;
    });
    std::map<uint64_t, uint8_t> out;
    if (dk.dense) {
        for (uint64_t key = 0; key < dk.space; ++key)
            if (dense[key]) out.emplace(key, dense[key]);
    } else {
        out.insert(sparse.begin(), sparse.end());
    }
    return out;
}

}  // namespace

DistanceMatrix distance_matrix(const QuadraticForm& q, const SimplexTuple& t) {
    DistanceMatrix d(static_cast<uint32_t>(t.size()));
    for (uint32_t i = 0; i < t.size(); ++i)
        for (uint32_t j = i + 1; j < t.size(); ++j) d.set(i, j, q.norm_of_difference(t[i], t[j]));
    return d;
}

bool tuple_degenerate(const PrimeField& f, const SimplexTuple& t) {
    if (t.size() <= 1) return false;
    std::vector<Vec> rows;
    for (size_t i = 1; i < t.size(); ++i) rows.push_back(vec_sub(f, t[i], t[0]));
    return rank(f, mat_from_rows(rows)) < t.size() - 1;
}

uint64_t mu_count(const PointSet& e, const QuadraticForm& q, const DistanceMatrix& d) {
    std::vector<Vec> pts = e.points();
    const uint64_t m = pts.size();
    const uint32_t k1 = d.arity;
    std::vector<uint32_t> lut = pair_norm_lut(q, pts);
    std::vector<uint32_t> sel(k1);
    uint64_t count = 0;
    // Depth-first with distance-constraint propagation.
    auto rec = [&](auto&& self, uint32_t depth) -> void {
        if (depth == k1) {
            ++count;
            return;
        }
        for (uint32_t cand = 0; cand < m; ++cand) {
            bool ok = true;
            for (uint32_t j = 0; j < depth; ++j) {
                if (lut[sel[j] * m + cand] != d.at(j, depth)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                sel[depth] = cand;
                self(self, depth + 1);
            }
        }
    };
    rec(rec, 0);
    return count;
}

std::vector<uint64_t> nu_table(const PointSet& e, const Mat& theta, uint32_t r) {
    const PrimeField& f = e.field();
    std::vector<Vec> pts = e.points();
    std::vector<uint64_t> tab(e.universe_size(), 0);
    std::vector<Vec> imgs;
    imgs.reserve(pts.size());
    for (const Vec& v : pts) imgs.push_back(vec_scale(f, r, mat_vec(f, theta, v)));
    for (const Vec& u : pts)
        for (const Vec& w : imgs) tab[e.encode(vec_sub(f, u, w))]++;
    return tab;
}

uint64_t nu_count(const PointSet& e, const Mat& theta, const Vec& z, uint32_t r) {
    const PrimeField& f = e.field();
    uint64_t count = 0;
    for (const Vec& v : e.points()) {
        Vec u = vec_add(f, vec_scale(f, r, mat_vec(f, theta, v)), z);
        if (e.contains(u)) ++count;
    }
    return count;
}

ClassCount count_congruence_classes(const PointSet& e, uint32_t k, const QuadraticForm& q,
                                    CongruenceMode mode, bool pinned, GroupVariant variant,
                                    uint64_t budget) {
    if (k > q.dim()) throw Error("count_congruence_classes: k > d is out of scope");
    ClassCount cc{mode, 0, 0, 0};
    if (mode == CongruenceMode::DistanceMatrixFast) {
        auto classes = fast_distance_classes(e, k, q);
        cc.total = classes.size();
        for (const auto& [key, flag] : classes)
            if (flag & 1) ++cc.nondegenerate_classes;
        cc.degenerate_classes = cc.total - cc.nondegenerate_classes;
        return cc;
    }
    IsometryGroup g = orthogonal_group(q, variant, budget);
    OrbitContext ctx(e, g);
    const uint64_t m = ctx.eidx.size();
    const uint32_t k1 = k + 1;
    checked_tuple_count(m, k1);
    std::unordered_map<u128, uint8_t, U128Hash> classes;
    RankScratch rs;
    for_each_tuple(m, k1, [&](const uint32_t* sel) {
        u128 key = pinned ? pinned_canonical(ctx, sel, k1, g.order())
                          : motion_canonical(ctx, sel, k1, g.order());
        uint8_t bit = rs.degenerate(e.field(), ctx.epts, sel, k1, e.dim()) ? 2 : 1;
        classes[key] |= bit;
    });
    cc.total = classes.size();
    for (const auto& [key, flag] : classes)
        if (flag & 1) ++cc.nondegenerate_classes;
    cc.degenerate_classes = cc.total - cc.nondegenerate_classes;
    return cc;
}

uint64_t count_unordered_classes(const PointSet& e, uint32_t k, const QuadraticForm& q) {
    const PrimeField& f = e.field();
    auto classes = fast_distance_classes(e, k, q);
    const uint32_t k1 = k + 1;
    DKey dk(f.q(), k1);
    std::vector<uint32_t> perm(k1);
    std::map<uint64_t, bool> canon;
    for (const auto& [key, flag] : classes) {
        std::vector<uint32_t> entries = dk.decode(key);
        for (uint32_t i = 0; i < k1; ++i) perm[i] = i;
        std::vector<uint32_t> best = entries, cur(entries.size());
        do {
            for (uint32_t i = 0; i < k1; ++i)
                for (uint32_t j = i + 1; j < k1; ++j)
                    cur[DistanceMatrix::pos(i, j, k1)] =
                        entries[DistanceMatrix::pos(perm[i], perm[j], k1)];
            if (cur < best) best = cur;
        } while (std::next_permutation(perm.begin(), perm.end()));
        canon[dk.encode(best)] = true;
    }
    return canon.size();
}

uint64_t count_similarity_classes(const PointSet& e, uint32_t k, const QuadraticForm& q,
                                  ScalingMode mode) {
    const PrimeField& f = e.field();
    auto classes = fast_distance_classes(e, k, q);
    DKey dk(f.q(), k + 1);
    std::vector<uint32_t> scalars;
    if (mode == ScalingMode::AllScalars) {
        for (uint32_t s = 1; s < f.q(); ++s) scalars.push_back(s);
    } else {
        for (uint32_t s = 1; s < f.q(); ++s) scalars.push_back(f.mul(s, s));
        std::sort(scalars.begin(), scalars.end());
        scalars.erase(std::unique(scalars.begin(), scalars.end()), scalars.end());
    }
    std::map<uint64_t, bool> canon;
    for (const auto& [key, flag] : classes) {
        std::vector<uint32_t> entries = dk.decode(key);
        // lexicographically minimal scaled matrix
        std::vector<uint32_t> best = entries;
        std::vector<uint32_t> cur(entries.size());
        for (uint32_t s : scalars) {
            for (size_t i = 0; i < entries.size(); ++i) cur[i] = f.mul(s, entries[i]);
            if (cur < best) best = cur;
        }
        canon[dk.encode(best)] = true;
    }
    return canon.size();
}

uint64_t class_stabilizer_size(const IsometryGroup& g, const SimplexTuple& t) {
    const PrimeField& f = g.form().field();
    std::vector<Vec> diffs;
    for (size_t i = 1; i < t.size(); ++i) diffs.push_back(vec_sub(f, t[i], t[0]));
    uint64_t count = 0;
    for (const Mat& m : g.elements()) {
        bool fixes = true;
        for (const Vec& v : diffs) {
            if (mat_vec(f, m, v) != v) {
                fixes = false;
                break;
            }
        }
        if (fixes) ++count;
    }
    return count;
}

std::pair<uint64_t, uint64_t> verify_counting_identity(const PointSet& e, uint32_t k,
                                                       const QuadraticForm& q, GroupVariant variant,
                                                       uint64_t budget) {
    IsometryGroup g = orthogonal_group(q, variant, budget);
    OrbitContext ctx(e, g);
    const uint64_t m = ctx.eidx.size();
    const uint32_t k1 = k + 1;
    checked_tuple_count(m, k1);
    std::unordered_map<u128, uint64_t, U128Hash> mu;
    for_each_tuple(m, k1, [&](const uint32_t* sel) {
        mu[motion_canonical(ctx, sel, k1, g.order())]++;
    });
    uint64_t lhs = 0;
    for (const auto& [key, cnt] : mu) {
        // stabilizer of the canonical pinned differences
        std::array<uint32_t, 8> v{};
        u128 kk = key;
        for (uint32_t i = k; i-- > 0;) {
            v[i] = static_cast<uint32_t>(kk & 0xFFFF);
            kk >>= 16;
        }
        uint64_t stab = 0;
        for (size_t gi = 0; gi < g.order(); ++gi) {
            bool fixes = true;
            for (uint32_t i = 0; i < k; ++i) {
                if (ctx.act[gi][v[i]] != v[i]) {
                    fixes = false;
                    break;
                }
            }
            if (fixes) ++stab;
        }
        lhs += stab * cnt * cnt;
    }
    uint64_t rhs = 0;
    for (const Mat& theta : g.elements()) {
        std::vector<uint64_t> tab = nu_table(e, theta);
        for (uint64_t c : tab) {
            uint64_t p = 1;
            for (uint32_t i = 0; i < k1; ++i) p *= c;
            rhs += p;
        }
    }
    return {lhs, rhs};
}

SphereDecomposition dot_level_decomposition(const PointSet& e, const QuadraticForm& q,
                                            uint64_t budget) {
    const PrimeField& f = e.field();
    SphereDecomposition out;
    auto idxs = e.indices();
    if (idxs.empty()) throw NotOnSphereError("empty set has no radius");
    std::vector<Vec> pts = e.points();
    out.radius = q.eval(pts[0]);
    if (out.radius == 0) throw NotOnSphereError("set lies on the null sphere (radius 0)");
    for (const Vec& p : pts)
        if (q.eval(p) != out.radius) throw NotOnSphereError("set is not contained in one sphere");
    IsometryGroup g = orthogonal_group(q, GroupVariant::Full, budget);
    OrbitContext ctx(e, g);
    out.group_order = g.order();
    out.sphere_size = sphere_points(q, out.radius).size();
    if (out.group_order % out.sphere_size != 0)
        throw Error("group order not divisible by sphere size");
    out.point_stabilizer = out.group_order / out.sphere_size;
    out.set_size = pts.size();
    out.sym_overlap = e.intersect(e.negated()).size();

    out.nu.assign(f.q(), 0);
    for (const Vec& x : pts)
        for (const Vec& y : pts) out.nu[q.bilinear(x, y)]++;
    for (uint64_t v : out.nu) out.sum_nu_sq += v * v;

    const uint64_t m = ctx.eidx.size();
    for (size_t gi = 0; gi < g.order(); ++gi) {
        uint64_t fg = 0;
        for (uint64_t zi = 0; zi < m; ++zi)
            if (e.contains(ctx.act[gi][ctx.eidx[zi]])) ++fg;
        out.f_l1 += fg;
        out.f_linf = std::max(out.f_linf, fg);
        out.sum_f_sq += fg * fg;
        // S: 4-tuples gx=y, gz=w with x != +-z
        uint64_t s = 0;
        for (uint64_t xi = 0; xi < m; ++xi) {
            uint32_t x = ctx.eidx[xi];
            if (!e.contains(ctx.act[gi][x])) continue;
            for (uint64_t zi = 0; zi < m; ++zi) {
                uint32_t z = ctx.eidx[zi];
                if (z == x || z == ctx.negidx[x]) continue;
                if (e.contains(ctx.act[gi][z])) ++s;
            }
        }
        out.S += s;
    }
    out.T = out.point_stabilizer * out.set_size * out.set_size;
    out.R = out.point_stabilizer * out.sym_overlap * out.sym_overlap;
    return out;
}

std::vector<ClassRow> class_inventory(const PointSet& e, uint32_t k, const QuadraticForm& q,
                                      GroupVariant variant, uint64_t budget) {
    const PrimeField& f = e.field();
    IsometryGroup g = orthogonal_group(q, variant, budget);
    OrbitContext ctx(e, g);
    const uint64_t m = ctx.eidx.size();
    const uint32_t k1 = k + 1;
    checked_tuple_count(m, k1);
    std::unordered_map<u128, uint64_t, U128Hash> mu;
    for_each_tuple(m, k1, [&](const uint32_t* sel) {
        mu[motion_canonical(ctx, sel, k1, g.order())]++;
    });
    std::map<u128, uint64_t> ordered(mu.begin(), mu.end());
    std::vector<ClassRow> rows;
    uint64_t id = 0;
    PointSet space(f, e.dim());
    for (const auto& [key, cnt] : ordered) {
        // representative tuple: origin followed by the canonical differences
        SimplexTuple rep;
        rep.push_back(Vec(e.dim(), 0));
        u128 kk = key;
        std::vector<uint32_t> slots(k);
        for (uint32_t i = k; i-- > 0;) {
            slots[i] = static_cast<uint32_t>(kk & 0xFFFF);
            kk >>= 16;
        }
        for (uint32_t i = 0; i < k; ++i) rep.push_back(space.decode(slots[i]));
        ClassRow row{id++, distance_matrix(q, rep), cnt, class_stabilizer_size(g, rep),
                     tuple_degenerate(f, rep)};
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_inventory_csv(std::ostream& out, const std::vector<ClassRow>& rows) {
    out << "class_id,representative_entries,mu,stabilizer_size,degenerate\n";
    for (const ClassRow& r : rows) {
        out << r.id << ',';
        for (size_t i = 0; i < r.rep.upper.size(); ++i) out << (i ? ";" : "") << r.rep.upper[i];
        out << ',' << r.mu << ',' << r.stabilizer_size << ',' << (r.degenerate ? 1 : 0) << '\n';
    }
}

SimilarityDiagnostic similarity_identity_diagnostic(const PointSet& e, const QuadraticForm& q,
                                                    uint64_t budget) {
    if (q.dim() != 2) throw Error("similarity diagnostic is planar (d = 2)");
    const PrimeField& f = e.field();
    SimilarityDiagnostic out;

    // Left side: squared multiplicities of scaling classes of distance
    // matrices over E^3.
    DKey dk(f.q(), 3);
    std::vector<Vec> pts = e.points();
    const uint64_t m = pts.size();
    checked_tuple_count(m, 3);
    std::vector<uint32_t> lut = pair_norm_lut(q, pts);
    std::unordered_map<uint64_t, uint64_t> mu_s;
    for_each_tuple(m, 3, [&](const uint32_t* sel) {
        std::vector<uint32_t> entries = {lut[sel[0] * m + sel[1]], lut[sel[0] * m + sel[2]],
                                         lut[sel[1] * m + sel[2]]};
        std::vector<uint32_t> best = entries, cur(3);
        for (uint32_t s = 1; s < f.q(); ++s) {
            for (int i = 0; i < 3; ++i) cur[i] = f.mul(s, entries[i]);
            if (cur < best) best = cur;
        }
        mu_s[dk.encode(best)]++;
    });
    for (const auto& [key, cnt] : mu_s) out.lhs += cnt * cnt;

    // Right side: dilations x rotations x translations, with the rotation
    // sum collapsed on nonzero null translations.
    IsometryGroup so = orthogonal_group(q, GroupVariant::SpecialOrthogonal, budget);
    PointSet space(f, 2);
    std::vector<bool> null_nonzero(space.universe_size(), false);
    for (uint64_t zi = 1; zi < space.universe_size(); ++zi)
        null_nonzero[zi] = q.eval(space.decode(zi)) == 0;
    for (uint32_t r = 1; r < f.q(); ++r) {
        for (const Mat& theta : so.elements()) {
            std::vector<uint64_t> tab = nu_table(e, theta, r);
            for (uint64_t zi = 0; zi < tab.size(); ++zi) {
                if (null_nonzero[zi]) continue;
                out.rhs += tab[zi] * tab[zi] * tab[zi];
            }
        }
    }
    // Collapsed part: nu~(r, z) = #{(u,v) : u - r theta v = z for some theta}.
    auto reachable = [&](const Vec& v, const Vec& w) {
        uint32_t nv = q.eval(v);
        bool vzero = v[0] == 0 && v[1] == 0;
        bool wzero = w[0] == 0 && w[1] == 0;
        if (vzero || wzero) return vzero && wzero;
        if (nv != 0) return q.eval(w) == nv;
        // null vectors: same line
        return f.mul(w[0], v[1]) == f.mul(w[1], v[0]) && q.eval(w) == 0;
    };
    for (uint64_t zi = 1; zi < space.universe_size(); ++zi) {
        if (!null_nonzero[zi]) continue;
        Vec z = space.decode(zi);
        for (uint32_t r = 1; r < f.q(); ++r) {
            uint32_t rinv = f.inv(r);
            uint64_t cnt = 0;
            for (const Vec& u : pts) {
                Vec w = vec_scale(f, rinv, vec_sub(f, u, z));
                for (const Vec& v : pts)
                    if (reachable(v, w)) ++cnt;
            }
            out.rhs += cnt * cnt * cnt;
        }
    }
    return out;
}

}  // namespace fqgeom
