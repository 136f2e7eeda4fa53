#include <doctest.h>

#include <sstream>

#include "fqgeom/quadform.hpp"
#include "fqgeom/rng.hpp"
#include "fqgeom/suites.hpp"

using namespace fqgeom;

namespace {

Mat random_invertible(const PrimeField& f, uint32_t d, SplitMix64& rng) {
    for (;;) {
        Mat m(d, d);
        for (uint32_t& v : m.a) v = static_cast<uint32_t>(rng.next_below(f.q()));
        if (det(f, m) != 0) return m;
    }
}

}  // namespace

TEST_CASE("form construction and evaluation") {
    PrimeField f5(5);
    QuadraticForm dot = QuadraticForm::dot(f5, 2);
    CHECK(dot.eval({1, 2}) == 0);  // 1 + 4 = 5
    QuadraticForm h = QuadraticForm::hyperbolic_plane(f5);
    CHECK(h.eval({1, 1}) == 2);  // Q((x,y)) = 2xy
    CHECK(h.eval({2, 3}) == 2);  // 12 mod 5
    QuadraticForm xy = QuadraticForm::xy_form(f5);
    CHECK(xy.eval({2, 3}) == 1);  // 6 mod 5
    Mat bad(2, 2);
    bad.at(0, 1) = 1;  // not symmetric
    CHECK_THROWS_AS(QuadraticForm(f5, bad), NotSymmetricError);
}

TEST_CASE("classification of the dot form") {
    PrimeField f5(5), f3(3);
    FormClass c25 = classify_form(QuadraticForm::dot(f5, 2));
    CHECK(c25.kind == FormKind::SplitEven);
    CHECK(c25.n == 1);
    FormClass c23 = classify_form(QuadraticForm::dot(f3, 2));
    CHECK(c23.kind == FormKind::NonSplitEven);
    FormClass c33 = classify_form(QuadraticForm::dot(f3, 3));
    CHECK(c33.kind == FormKind::Odd);
    CHECK(c33.n == 1);
    CHECK(c33.odd_coeff == 2);  // -1 mod 3, a non-residue
    CHECK_THROWS_AS(classify_form(QuadraticForm::diagonal(f3, {1, 0})), DegenerateFormError);
}

TEST_CASE("classification is a congruence invariant") {
    SplitMix64 rng(11);
    for (uint32_t q : {3u, 5u, 7u}) {
        PrimeField f(q);
        for (uint32_t d : {2u, 3u}) {
            for (const QuadraticForm& form : form_representatives(f, d)) {
                FormClass base = classify_form(form);
                for (int t = 0; t < 20; ++t) {
                    Mat a = random_invertible(f, d, rng);
                    Mat g = mat_mul(f, mat_mul(f, transpose(a), form.gram()), a);
                    CHECK(classify_form(QuadraticForm(f, g)) == base);
                }
            }
        }
    }
}

TEST_CASE("sphere enumeration matches the pinned examples") {
    PrimeField f3(3), f5(5);
    PointSet s = sphere_points(QuadraticForm::dot(f3, 2), 1);
    CHECK(s.size() == 4);
    CHECK(s.contains(Vec{0, 1}));
    CHECK(s.contains(Vec{0, 2}));
    CHECK(s.contains(Vec{1, 0}));
    CHECK(s.contains(Vec{2, 0}));
    CHECK(sphere_points(QuadraticForm::dot(f5, 2), 0).size() == 9);  // 2q - 1
    CHECK(sphere_points(QuadraticForm::dot(f3, 3), 1).size() == 6);
    CHECK(sphere_size_formula(QuadraticForm::dot(f5, 2), 0) == 9);
    CHECK(sphere_size_formula(QuadraticForm::dot(f3, 3), 1) == 6);
    CHECK(sphere_size_formula(QuadraticForm::dot(f3, 4), 1) == 24);
}

TEST_CASE("sphere counts equal the closed formula for every small form") {
    for (uint32_t q : {3u, 5u, 7u}) {
        PrimeField f(q);
        for (uint32_t d : {1u, 2u, 3u}) {
            for (const QuadraticForm& form : form_representatives(f, d)) {
                if (!form.non_degenerate()) continue;
                auto hist = sphere_histogram(form);
                for (uint32_t r = 0; r < q; ++r) CHECK(hist[r] == sphere_size_formula(form, r));
            }
        }
    }
}

TEST_CASE("polarization identity on random pairs") {
    SplitMix64 rng(7);
    for (uint32_t q : {3u, 7u}) {
        PrimeField f(q);
        for (const QuadraticForm& form : form_representatives(f, 3)) {
            for (int t = 0; t < 1000; ++t) {
                Vec x(3), y(3);
                for (auto& v : x) v = static_cast<uint32_t>(rng.next_below(q));
                for (auto& v : y) v = static_cast<uint32_t>(rng.next_below(q));
                uint32_t lhs = f.mul(2, form.bilinear(x, y));
                uint32_t rhs =
                    f.sub(f.sub(form.eval(vec_add(f, x, y)), form.eval(x)), form.eval(y));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("null structure search is deterministic") {
    PrimeField f5(5), f3(3);
    NullStructure n25 = find_null_structure(QuadraticForm::dot(f5, 2), 1);
    CHECK(n25.null_vectors == std::vector<Vec>{{1, 2}});
    CHECK_THROWS_AS(find_null_structure(QuadraticForm::dot(f3, 2), 1), NoNullVectorError);
    NullStructure n35 = find_null_structure(QuadraticForm::dot(f5, 3), 1);
    CHECK(n35.null_vectors == std::vector<Vec>{{1, 2, 0}});
    // split plane has isotropic lines but only 1-dimensional totally isotropic subspaces
    CHECK_THROWS_AS(find_null_structure(QuadraticForm::dot(f5, 2), 2), InfeasibleCountError);
}

TEST_CASE("null structure completion solves its three constraints") {
    for (uint32_t q : {3u, 5u, 7u}) {
        PrimeField f(q);
        QuadraticForm dot = QuadraticForm::dot(f, 4);
        NullStructure ns = find_null_structure(dot, 2, /*want_completion=*/true);
        REQUIRE(ns.completion.has_value());
        const Vec& e = *ns.completion;
        CHECK(dot.eval(e) == 1);
        CHECK(dot.bilinear(e, ns.null_vectors[0]) == 1);
        CHECK(dot.bilinear(e, ns.null_vectors[1]) == 0);
        for (const Vec& n : ns.null_vectors) {
            CHECK(dot.eval(n) == 0);
            for (const Vec& n2 : ns.null_vectors) CHECK(dot.bilinear(n, n2) == 0);
        }
    }
    PrimeField f3(3);
    CHECK_THROWS_AS(find_null_structure(QuadraticForm::dot(f3, 4), 3), InfeasibleCountError);
}

TEST_CASE("radical split") {
    PrimeField f5(5), f3(3);
    QuadraticForm dot5 = QuadraticForm::dot(f5, 2);
    auto [r1, q1] = radical_split(dot5, {Vec{1, 2}});
    CHECK(r1 == 1);
    CHECK(q1.dim() == 0);
    auto [r2, q2] = radical_split(dot5, {Vec{1, 0}});
    CHECK(r2 == 0);
    CHECK(q2.dim() == 1);
    CHECK(q2.gram().at(0, 0) == 1);
    QuadraticForm dot3 = QuadraticForm::dot(f3, 2);
    auto [r3, q3] = radical_split(dot3, {Vec{1, 0}, Vec{0, 1}});
    CHECK(r3 == 0);
    CHECK(q3.dim() == 2);
    CHECK(classify_form(q3) == classify_form(dot3));
    CHECK_THROWS_AS(radical_split(dot5, {Vec{1, 2}, Vec{2, 4}}), DependentBasisError);
}

TEST_CASE("point index encoding is a little-endian bijection") {
    PrimeField f(5);
    PointSet s(f, 3);
    CHECK(s.encode(Vec{1, 2, 0}) == 11);  // 1 + 2*5
    for (uint64_t idx = 0; idx < s.universe_size(); ++idx) {
        CHECK(s.encode(s.decode(idx)) == idx);
    }
    CHECK(PointSet::full(f, 2).size() == 25);
}

TEST_CASE("point set text round trip with comments") {
    std::stringstream buf(
        "# sample set\n"
        "5 2\n"
        "\n"
        "0 0\n"
        "1 2  # a null direction\n"
        "4 4\n");
    PointSet e = PointSet::read_text(buf);
    CHECK(e.size() == 3);
    CHECK(e.contains(Vec{1, 2}));
    std::stringstream out;
    e.write_text(out);
    PointSet back = PointSet::read_text(out);
    CHECK(back == e);
}

TEST_CASE("point set json round trip") {
    PrimeField f(7);
    PointSet e(f, 2);
    e.insert(Vec{3, 4});
    e.insert(Vec{0, 6});
    std::stringstream buf;
    e.write_json(buf);
    PointSet back = PointSet::read_json(buf);
    CHECK(back == e);
}

TEST_CASE("point set parse errors name the line") {
    std::stringstream missing("5 2\n7 0\n");
    try {
        PointSet::read_text(missing);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
    std::stringstream arity("5 2\n1 2 3\n");
    CHECK_THROWS_AS(PointSet::read_text(arity), ParseError);
    std::stringstream noheader("# only comments\n");
    CHECK_THROWS_AS(PointSet::read_text(noheader), ParseError);
}

TEST_CASE("null basis frame") {
    PrimeField f(13);
    NullBasis nb = make_null_basis(f);
    CHECK(nb.iota == 5);  // 5^2 = 25 = -1 mod 13
    CHECK(nb.kappa == 2);
    QuadraticForm dot = QuadraticForm::dot(f, 2);
    CHECK(dot.eval(nb.n_plus) == 0);
    CHECK(dot.eval(nb.n_minus) == 0);
    // product frame: Q(x b1 + y b2) = kappa x y
    for (uint32_t x = 0; x < 5; ++x)
        for (uint32_t y = 0; y < 5; ++y)
            CHECK(dot.eval(nb.product_point(x, y)) == f.mul(nb.kappa, f.mul(x, y)));
    // coordinates invert the basis expansion
    SplitMix64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Vec p = {static_cast<uint32_t>(rng.next_below(13)), static_cast<uint32_t>(rng.next_below(13))};
        auto [xp, xm] = nb.npm_coords(p);
        Vec back = vec_add(f, vec_scale(f, xp, nb.n_plus), vec_scale(f, xm, nb.n_minus));
        CHECK(back == p);
    }
    CHECK_THROWS_AS(make_null_basis(PrimeField(7)), WrongResidueClassError);
}
