#include "fqgeom/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>

namespace fqgeom {

namespace {

std::vector<std::complex<double>> character_table(uint32_t q) {
    std::vector<std::complex<double>> chi(q);
    for (uint32_t j = 0; j < q; ++j) {
        double a = 2.0 * std::numbers::pi * j / q;
        chi[j] = {std::cos(a), std::sin(a)};
    }
    return chi;
}

uint32_t dot_mod(const PrimeField& f, const Vec& a, const Vec& b) {
    uint64_t acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += static_cast<uint64_t>(a[i]) * b[i];
    return static_cast<uint32_t>(acc % f.q());
}

}  // namespace

SpectralTable fourier_transform(const PointSet& e) {
    const PrimeField& f = e.field();
    auto chi = character_table(f.q());
    const uint64_t n = e.universe_size();
    std::vector<Vec> pts = e.points();
    SpectralTable t{f, e.dim(), std::vector<std::complex<double>>(n)};
    const double scale = 1.0 / static_cast<double>(n);
    PointSet probe(f, e.dim());
    for (uint64_t xi = 0; xi < n; ++xi) {
        Vec x = probe.decode(xi);
        std::complex<double> acc = 0.0;
        for (const Vec& p : pts) acc += chi[f.neg(dot_mod(f, x, p))];
        t.v[xi] = acc * scale;
    }
    return t;
}

double nu_hat_identity_check(const PointSet& e, const Mat& theta) {
    const PrimeField& f = e.field();
    const uint64_t n = e.universe_size();
    SpectralTable ehat = fourier_transform(e);
    std::vector<uint64_t> nu = nu_table(e, theta);
    auto chi = character_table(f.q());
    PointSet probe(f, e.dim());
    // transform of nu with the same sign convention as hat(E)
    std::vector<std::complex<double>> nuhat(n);
    const double scale = 1.0 / static_cast<double>(n);
    for (uint64_t xi = 0; xi < n; ++xi) {
        Vec x = probe.decode(xi);
        std::complex<double> acc = 0.0;
        for (uint64_t zi = 0; zi < n; ++zi) {
            if (nu[zi] == 0) continue;
            acc += static_cast<double>(nu[zi]) * chi[f.neg(dot_mod(f, x, probe.decode(zi)))];
        }
        nuhat[xi] = acc * scale;
    }
    Mat tt = transpose(theta);
    const double qd = static_cast<double>(n);
    double maxerr = 0.0;
    for (uint64_t xi = 0; xi < n; ++xi) {
        Vec x = probe.decode(xi);
        uint64_t neg_xi = probe.encode(vec_neg(f, x));
        uint64_t ttxi = probe.encode(mat_vec(f, tt, x));
        // nu_hat read at -xi puts the identity in the product form
        // nu_hat(xi) = q^d hat(E)(-xi) hat(E)(theta^T xi).
        std::complex<double> lhs = nuhat[neg_xi];
        std::complex<double> rhs = qd * ehat.v[neg_xi] * ehat.v[ttxi];
        maxerr = std::max(maxerr, std::abs(lhs - rhs));
    }
    return maxerr;
}

SphericalEnergy spherical_energy(const PointSet& e, const QuadraticForm& q) {
    const PrimeField& f = e.field();
    SpectralTable ehat = fourier_transform(e);
    PointSet probe(f, e.dim());
    SphericalEnergy se;
    se.sigma.assign(f.q(), 0.0);
    for (uint64_t xi = 0; xi < e.universe_size(); ++xi) {
        se.sigma[q.eval(probe.decode(xi))] += std::norm(ehat.v[xi]);
    }
    for (uint32_t t = 1; t < f.q(); ++t) se.M += se.sigma[t] * se.sigma[t];
    return se;
}

std::vector<std::complex<double>> mixed_spherical_energy(const PointSet& e1, const PointSet& e2,
                                                         const QuadraticForm& q) {
    const PrimeField& f = e1.field();
    if (!(f == e2.field()) || e1.dim() != e2.dim()) throw Error("mixed energy: mismatched spaces");
    SpectralTable h1 = fourier_transform(e1);
    SpectralTable h2 = fourier_transform(e2);
    PointSet probe(f, e1.dim());
    std::vector<std::complex<double>> sigma(f.q(), 0.0);
    for (uint64_t xi = 0; xi < e1.universe_size(); ++xi) {
        sigma[q.eval(probe.decode(xi))] += h1.v[xi] * std::conj(h2.v[xi]);
    }
    return sigma;
}

std::pair<double, double> taylor_bound_check(const std::vector<double>& f, uint32_t n) {
    if (n < 2) throw BadExponentError("exponent must be at least 2");
    if (f.empty()) return {0.0, 0.0};
    double l1 = 0.0, linf = 0.0;
    for (double v : f) {
        if (v < 0) throw NegativeValueError("taylor_bound_check needs f >= 0");
        l1 += v;
        linf = std::max(linf, v);
    }
    const double mean = l1 / static_cast<double>(f.size());
    double lhs = 0.0, var = 0.0;
    for (double v : f) {
        lhs += std::pow(v, n);
        var += (v - mean) * (v - mean);
    }
    double rhs = static_cast<double>(f.size()) * std::pow(mean, n) +
                 0.5 * n * (n - 1) * std::pow(linf, n - 2) * var;
    return {lhs, rhs};
}

PruneReport null_coordinate_prune(const PointSet& e) {
    const PrimeField& f = e.field();
    if (e.dim() != 2) throw Error("null_coordinate_prune is planar (d = 2)");
    NullBasis nb = make_null_basis(f);  // throws WrongResidueClass unless q = 1 mod 4
    const uint64_t sz = e.size();
    std::vector<Vec> pts = e.points();
    std::vector<std::pair<uint32_t, uint32_t>> coords;
    coords.reserve(pts.size());
    std::vector<uint64_t> fib_p(f.q(), 0), fib_m(f.q(), 0);
    for (const Vec& p : pts) {
        auto [xp, xm] = nb.npm_coords(p);
        coords.emplace_back(xp, xm);
        ++fib_p[xp];
        ++fib_m[xm];
    }
    PruneReport rep{PointSet(f, 2), 0, 0, 0, 2 * sz, 0, PruneCase::AllPoor,
                    NullAxis::Plus, NullAxis::Plus, false, PointSet(f, 2), PointSet(f, 2)};
    auto wealthy = [&](uint64_t fiber) { return fiber * fiber >= rep.wealthy_threshold_sq; };
    for (uint32_t c = 0; c < f.q(); ++c) {
        if (fib_p[c] && wealthy(fib_p[c])) ++rep.wealthy_plus;
        if (fib_m[c] && wealthy(fib_m[c])) ++rep.wealthy_minus;
    }
    // drop points wealthy in both coordinates; bound: at most
    // wealthy_plus * wealthy_minus <= |E|/2 of them
    std::vector<size_t> kept;
    for (size_t i = 0; i < pts.size(); ++i) {
        auto [xp, xm] = coords[i];
        if (wealthy(fib_p[xp]) && wealthy(fib_m[xm])) {
            ++rep.discarded;
        } else {
            rep.pruned.insert(pts[i]);
            kept.push_back(i);
        }
    }
    if (2 * rep.discarded > sz) throw Error("pruning discarded more than half the set");

    const uint64_t psz = rep.pruned.size();
    rep.rich_threshold_sq = 4 * psz;
    std::vector<uint64_t> kfib_p(f.q(), 0), kfib_m(f.q(), 0);
    for (size_t i : kept) {
        ++kfib_p[coords[i].first];
        ++kfib_m[coords[i].second];
    }
    auto rich = [&](uint64_t fiber) { return fiber * fiber >= rep.rich_threshold_sq; };
    uint64_t max_p = 0, max_m = 0;
    uint32_t vals_p = 0, vals_m = 0;
    for (uint32_t c = 0; c < f.q(); ++c) {
        max_p = std::max(max_p, kfib_p[c]);
        max_m = std::max(max_m, kfib_m[c]);
        if (kfib_p[c]) ++vals_p;
        if (kfib_m[c]) ++vals_m;
    }
    if (psz == 0 || (!rich(max_p) && !rich(max_m))) {
        rep.kind = PruneCase::AllPoor;
        return rep;
    }
    rep.kind = PruneCase::RichPoor;
    rep.rich_axis = rich(max_p) && (!rich(max_m) || max_p >= max_m) ? NullAxis::Plus : NullAxis::Minus;
    // Split along the rich axis when it has at least two values; fall back to
    // the other axis otherwise. Whole fibers stay together, so the two parts
    // have disjoint projections on the split axis.
    auto values_of = [&](NullAxis a) { return a == NullAxis::Plus ? vals_p : vals_m; };
    NullAxis split = rep.rich_axis;
    if (values_of(split) < 2) split = split == NullAxis::Plus ? NullAxis::Minus : NullAxis::Plus;
    rep.split_axis = split;
    if (values_of(split) < 2) {
        rep.splittable = false;
        rep.part1 = rep.pruned;
        return rep;
    }
    rep.splittable = true;
    const auto& fib = split == NullAxis::Plus ? kfib_p : kfib_m;
    // greedy balance: biggest fibers first, to the lighter part
    std::vector<std::pair<uint64_t, uint32_t>> order;
    for (uint32_t c = 0; c < f.q(); ++c)
        if (fib[c]) order.emplace_back(fib[c], c);
    std::sort(order.begin(), order.end(),
              [](auto& a, auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    std::vector<uint8_t> side(f.q(), 0);
    uint64_t w1 = 0, w2 = 0;
    for (auto [cnt, c] : order) {
        if (w1 <= w2) {
            side[c] = 1;
            w1 += cnt;
        } else {
            side[c] = 2;
            w2 += cnt;
        }
    }
    for (size_t i : kept) {
        uint32_t c = split == NullAxis::Plus ? coords[i].first : coords[i].second;
        if (side[c] == 1)
            rep.part1.insert(pts[i]);
        else
            rep.part2.insert(pts[i]);
    }
    return rep;
}

uint64_t null_difference_pairs(const PointSet& e, const QuadraticForm& q) {
    std::vector<Vec> pts = e.points();
    uint64_t count = 0;
    for (const Vec& u : pts)
        for (const Vec& v : pts)
            if (q.norm_of_difference(u, v) == 0) ++count;
    return count;
}

void write_spectral_csv(std::ostream& out, const SpectralTable& t) {
    out << "xi_index,re,im\n";
    for (uint64_t i = 0; i < t.v.size(); ++i)
        out << i << ',' << t.v[i].real() << ',' << t.v[i].imag() << '\n';
}

}  // namespace fqgeom
