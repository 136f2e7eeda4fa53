#include <doctest.h>

#include <algorithm>

#include "fqgeom/group.hpp"
#include "fqgeom/rng.hpp"
#include "fqgeom/suites.hpp"

using namespace fqgeom;

TEST_CASE("orthogonal group orders, brute force and closure") {
    PrimeField f3(3), f7(7);
    CHECK(orthogonal_group(QuadraticForm::dot(f3, 2)).order() == 8);
    CHECK(orthogonal_group(QuadraticForm::dot(f7, 2)).order() == 16);
    CHECK(orthogonal_group(QuadraticForm::dot(f7, 2), GroupVariant::SpecialOrthogonal).order() == 8);
    CHECK(orthogonal_group(QuadraticForm::dot(f3, 3)).order() == 48);
}

TEST_CASE("group axioms hold exhaustively for small groups") {
    PrimeField f3(3);
    for (uint32_t d : {2u, 3u}) {
        QuadraticForm dot = QuadraticForm::dot(f3, d);
        IsometryGroup g = orthogonal_group(dot);
        CHECK(g.contains(Mat::identity(d)));
        for (const Mat& a : g.elements()) {
            CHECK(is_isometry(dot, a));
            bool has_inverse = false;
            for (const Mat& b : g.elements()) {
                Mat ab = mat_mul(f3, a, b);
                CHECK(g.contains(ab));
                if (ab == Mat::identity(d)) has_inverse = true;
            }
            CHECK(has_inverse);
        }
    }
}

TEST_CASE("sphere-product recursion reproduces explicit orders") {
    for (uint32_t q : {3u, 5u, 7u}) {
        PrimeField f(q);
        for (uint32_t d : {2u, 3u}) {
            for (const QuadraticForm& form : form_representatives(f, d)) {
                CHECK(group_order_recursion(form) == orthogonal_group(form).order());
            }
        }
        CHECK(group_order_recursion(QuadraticForm::dot(f, 1)) == 2);
    }
}

TEST_CASE("stabilizers") {
    PrimeField f3(3), f5(5);
    IsometryGroup o23 = orthogonal_group(QuadraticForm::dot(f3, 2));
    IsometryGroup fix = stabilizer(o23, {Vec{1, 0}});
    CHECK(fix.order() == 2);
    Mat refl = Mat::identity(2);
    refl.at(1, 1) = 2;  // diag(1, -1)
    CHECK(fix.contains(Mat::identity(2)));
    CHECK(fix.contains(refl));
    CHECK(stabilizer(o23, {}).order() == o23.order());
    // a nonzero null vector has trivial stabilizer in the plane
    IsometryGroup o25 = orthogonal_group(QuadraticForm::dot(f5, 2));
    CHECK(stabilizer(o25, {Vec{1, 2}}).order() == 1);
}

TEST_CASE("orbits") {
    PrimeField f3(3), f5(5);
    IsometryGroup o25 = orthogonal_group(QuadraticForm::dot(f5, 2));
    auto pinned_null = orbit(o25, {Vec{0, 0}, Vec{1, 2}});
    CHECK(pinned_null.size() == 8);  // 2(q - 1)
    IsometryGroup o23 = orthogonal_group(QuadraticForm::dot(f3, 2));
    CHECK(orbit(o23, {Vec{1, 0}}).size() == 4);  // the unit circle
    CHECK(orbit(o23, {Vec{0, 0}, Vec{0, 0}}).size() == 1);
}

TEST_CASE("orbit-stabilizer identity on random tuples") {
    SplitMix64 rng(2026);
    for (uint32_t q : {3u, 5u}) {
        PrimeField f(q);
        IsometryGroup g = orthogonal_group(QuadraticForm::dot(f, 2));
        for (int t = 0; t < 100; ++t) {
            std::vector<Vec> tuple;
            size_t arity = 1 + rng.next_below(3);
            for (size_t i = 0; i < arity; ++i)
                tuple.push_back({static_cast<uint32_t>(rng.next_below(q)),
                                 static_cast<uint32_t>(rng.next_below(q))});
            CHECK(orbit(g, tuple).size() * stabilizer(g, tuple).order() == g.order());
        }
    }
}

TEST_CASE("order ratio bands") {
    for (uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
        PrimeField f(q);
        uint64_t denom = 2 * q;  // 2 q^{d(d-1)/2} for d = 2
        std::vector<uint64_t> orders;
        for (const QuadraticForm& form : form_representatives(f, 2)) {
            uint64_t ord = orthogonal_group(form).order();
            double ratio = static_cast<double>(ord) / static_cast<double>(denom);
            CHECK(ratio >= 0.5);
            CHECK(ratio <= 2.0);
            orders.push_back(ord);
        }
        for (uint64_t a : orders)
            for (uint64_t b : orders) {
                double r = static_cast<double>(a) / static_cast<double>(b);
                CHECK(r >= 0.5);
                CHECK(r <= 2.0);
            }
    }
}

TEST_CASE("orders match the classical closed forms") {
    // independent algebraic route: |O_2| = 2(q -+ 1) by class, |O_3| = 2q(q^2 - 1)
    for (uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
        PrimeField f(q);
        uint64_t split = 2 * (q - 1), nonsplit = 2 * (q + 1);
        uint64_t dot2 = orthogonal_group(QuadraticForm::dot(f, 2)).order();
        CHECK(dot2 == (q % 4 == 1 ? split : nonsplit));
        CHECK(orthogonal_group(QuadraticForm::hyperbolic_plane(f)).order() == split);
        if (q <= 7) {
            CHECK(orthogonal_group(QuadraticForm::dot(f, 3)).order() ==
                  2ull * q * (static_cast<uint64_t>(q) * q - 1));
        }
        CHECK(group_order_recursion(QuadraticForm::dot(f, 3)) ==
              2ull * q * (static_cast<uint64_t>(q) * q - 1));
    }
    // d = 4 split form over F_3: 2 q^2 (q^2 - 1)^2 = 1152, by closure and recursion
    PrimeField f3(3);
    CHECK(orthogonal_group(QuadraticForm::dot(f3, 4)).order() == 1152);
    CHECK(group_order_recursion(QuadraticForm::dot(f3, 4)) == 1152);
}

TEST_CASE("budget guard refuses oversized groups") {
    PrimeField f(13);
    CHECK_THROWS_AS(orthogonal_group(QuadraticForm::dot(f, 4), GroupVariant::Full, 1000),
                    BudgetExceededError);
}

TEST_CASE("rigid motions compose") {
    PrimeField f(7);
    SplitMix64 rng(5);
    IsometryGroup g = orthogonal_group(QuadraticForm::dot(f, 2));
    for (int t = 0; t < 50; ++t) {
        RigidMotion a{g.elements()[rng.next_below(g.order())],
                      {static_cast<uint32_t>(rng.next_below(7)), static_cast<uint32_t>(rng.next_below(7))}};
        RigidMotion b{g.elements()[rng.next_below(g.order())],
                      {static_cast<uint32_t>(rng.next_below(7)), static_cast<uint32_t>(rng.next_below(7))}};
        Vec x = {static_cast<uint32_t>(rng.next_below(7)), static_cast<uint32_t>(rng.next_below(7))};
        CHECK(compose(f, a, b).apply(f, x) == a.apply(f, b.apply(f, x)));
    }
}
