#include <random>

#include "doctest.h"
#include "torigen/exactalg.hpp"
#include "torigen/fgl.hpp"
#include "torigen/render.hpp"
#include "torigen/symmfunc.hpp"
#include "support.hpp"

using namespace torigen;

using SeriesPoly = Poly<CobordismPoly>;

namespace {

SeriesPoly lift(const MultiPoly& p) {
    return p.map_coefficients([](const Rational& c) { return CobordismPoly(nullptr, c); });
}

MultiPoly X(const std::string& s, int k = 3) {
    return parse_poly(s, geometric_arena(k));
}

CobordismPoly A(const std::string& s) {
    return parse_poly(s, generator_arena());
}

MultiPoly random_poly(std::mt19937_64& rng, int k, int terms, int max_exp) {
    std::uniform_int_distribution<int> coef(-6, 6), expo(0, max_exp);
    MultiPoly p(geometric_arena(k));
    for (int t = 0; t < terms; ++t) {
        Exponents e(k);
        for (auto& v : e) v = expo(rng);
        Rational c(coef(rng), 1 + expo(rng));
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

}  // namespace

TEST_CASE("difference of squares and identity") {
    CHECK(X("x1 + x2", 2) * X("x1 - x2", 2) == X("x1^2 - x2^2", 2));
    MultiPoly f = parse_poly("1 + a1*u + a2*u^2", Arena::named({"u", "a1", "a2"}));
    CHECK(f * MultiPoly(f.arena(), Rational(1)) == f);
}

TEST_CASE("f(x1-x2) f(x2-x1) through degree 2") {
    ArenaPtr x = geometric_arena(2);
    CoeffSeries f = f_series(2);
    SeriesPoly d = lift(X("x1 - x2", 2));
    SeriesPoly left = substitute(f, std::vector<SeriesPoly>{d}, 2);
    SeriesPoly right = substitute(f, std::vector<SeriesPoly>{-d}, 2);
    SeriesPoly product = SeriesPoly::multiply(left, right, 2);
    SeriesPoly expected(x, A("1"));
    SeriesPoly d2 = SeriesPoly::multiply(d, d, 2);
    for (const auto& [e, c] : d2.terms()) expected.add_term(e, A("2*a2 - a1^2").scaled(c.constant_term()));
    CHECK(product == expected);
}

TEST_CASE("exact division examples") {
    CHECK(exact_div(X("x1^2 - x2^2", 2), X("x1 - x2", 2)) == X("x1 + x2", 2));
    MultiPoly v = X("x1 - x2") * X("x1 - x3") * X("x2 - x3");
    CHECK(exact_div(v, X("x1 - x2")) == X("x1 - x3") * X("x2 - x3"));
    // x1^2*x2 is the staircase monomial, so its alternating sum is the Vandermonde itself.
    MultiPoly anti = antisymmetrize(X("x1^2*x2"), 3);
    CHECK(anti.size() == 6);
    CHECK(exact_div(anti, vandermonde(3)) == X("1"));
    CHECK(exact_div(antisymmetrize(X("x1^3*x2^2"), 3), vandermonde(3)) == X("x1*x2 + x1*x3 + x2*x3"));
    CHECK_THROWS_AS(exact_div(X("x1^2 + 1"), X("x1 - x2")), NotDivisible);
    CHECK_THROWS_AS(exact_div(X("x1"), MultiPoly(geometric_arena(3))), NotDivisible);
}

TEST_CASE("substitution examples") {
    CHECK(evaluate(X("x1 - x2", 2), {Rational(2), Rational(1)}) == Rational(1));
    CoeffSeries f = f_series(3);
    SeriesPoly d = lift(X("x1 - x2", 2));
    SeriesPoly first = substitute(f, std::vector<SeriesPoly>{d}, 1);
    CHECK(first.coefficient({}) == A("1"));
    CHECK(first.coefficient({1, 0}) == A("a1"));
    CHECK(first.coefficient({0, 1}) == A("-a1"));
    CHECK(first.size() == 3);
    MultiPoly p = X("x1*x2*x3");
    CHECK(substitute(p, std::map<int, MultiPoly>{{2, X("-x1 - x2")}}) == X("-x1^2*x2 - x1*x2^2"));
}

TEST_CASE("series reversion") {
    ArenaPtr u = series_arena();
    CoeffSeries y = CoeffSeries::variable(u, 0);
    CHECK(reverse_series(y, 6) == y);

    CoeffSeries h = y + CoeffSeries::monomial(u, {2}, parse_poly("b1", log_generator_arena()));
    CoeffSeries r = reverse_series(h, 3);
    CHECK(r.coefficient({1}) == parse_poly("1", log_generator_arena()));
    CHECK(r.coefficient({2}) == parse_poly("-b1", log_generator_arena()));
    CHECK(r.coefficient({3}) == parse_poly("2*b1^2", log_generator_arena()));

    // x / f(x) reverted and composed back.
    const int N = 6;
    CoeffSeries xf = CoeffSeries::multiply(y, reciprocal_series(f_series(N), N), N);
    CoeffSeries inv = reverse_series(xf, N);
    CHECK(substitute(xf, std::vector<CoeffSeries>{inv}, N) == y);
    CHECK(substitute(inv, std::vector<CoeffSeries>{xf}, N) == y);
    CHECK(reverse_series(inv, N) == xf);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly p = random_poly(rng, 3, 4, 3), q = random_poly(rng, 3, 4, 3), r = random_poly(rng, 3, 3, 2);
        CHECK((p * q) * r == p * (q * r));
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK((p - p).is_zero());
        if (!q.is_zero()) CHECK(exact_div(p * q, q) == p);
    }
}

TEST_CASE("substitution respects composition at integer points") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly p = random_poly(rng, 3, 5, 3);
        std::vector<MultiPoly> images = {random_poly(rng, 3, 3, 2), random_poly(rng, 3, 3, 2),
                                         random_poly(rng, 3, 3, 2)};
        std::vector<Rational> point = {Rational(val(rng)), Rational(val(rng)), Rational(val(rng))};
        std::vector<Rational> inner;
        for (const auto& im : images) inner.push_back(evaluate(im, point));
        CHECK(evaluate(substitute(p, images), point) == evaluate(p, inner));
    }
}

TEST_CASE("truncated series arithmetic") {
    ArenaPtr x = geometric_arena(2);
    GradedSeries one(SeriesPoly(x, A("1")), 3);
    SeriesPoly x1 = lift(MultiPoly::variable(x, 0));
    GradedSeries s(x1.pow(2), 3);
    CHECK(one * s == s);
    CHECK((s * s).poly().is_zero());
    CHECK(s.homogeneous_part(2) == s);
}

TEST_CASE("canonical text and JSON round trips") {
    MultiPoly p = X("3*x1^2*x2 - x3 + 1/2");
    CHECK(to_text(p) == "3*x1^2*x2 - x3 + 1/2");
    CHECK(parse_poly(to_text(p), geometric_arena(3)) == p);
    CHECK(poly_from_json(to_json(p), geometric_arena(3)) == p);
    CHECK(to_text(A("6*a3 - 6*a1*a2 + 6*a1^3")) == "6*a1^3 - 6*a1*a2 + 6*a3");
    CHECK(to_text(MultiPoly(generator_arena())) == "0");
    CHECK_THROWS_AS(parse_poly("x4", geometric_arena(3)), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 +", geometric_arena(3)), ParseError);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
}
