#include "doctest.h"
#include "support.hpp"
#include "torigen/fgl.hpp"
#include "torigen/genus.hpp"

using namespace torigen;

namespace {

CobordismPoly B(const std::string& s) {
    return parse_poly(s, log_generator_arena());
}

CobordismPoly A(const std::string& s) {
    return parse_poly(s, generator_arena());
}

CoeffSeries var(const ArenaPtr& arena, int i) {
    return CoeffSeries::variable(arena, i);
}

CoeffSeries apply(const CoeffSeries& f, std::vector<CoeffSeries> args, int order) {
    return substitute(f, args, order);
}

}  // namespace

TEST_CASE("formal group law basics") {
    const int N = 6;
    CoeffSeries F = fgl_addition(N);
    ArenaPtr uv = bivariate_arena();
    CoeffSeries zero(uv);
    CHECK(apply(F, {var(uv, 0), zero}, N) == var(uv, 0));
    CHECK(apply(F, {zero, var(uv, 1)}, N) == var(uv, 1));
    CHECK(F.coefficient({1, 1}) == B("-2*b1"));
    CHECK(F.coefficient({1, 0}) == B("1"));
    CHECK(apply(F, {var(uv, 1), var(uv, 0)}, N) == F);
}

TEST_CASE("associativity to order 6") {
    for (int N = 2; N <= 6; ++N) {
        CoeffSeries F = fgl_addition(N);
        ArenaPtr a = bracket_arena(3);
        CoeffSeries x = var(a, 0), y = var(a, 1), z = var(a, 2);
        CHECK(apply(F, {apply(F, {x, y}, N), z}, N) == apply(F, {x, apply(F, {y, z}, N)}, N));
    }
}

TEST_CASE("power system") {
    const int N = 6;
    ArenaPtr u = series_arena();
    CHECK(power_system(0, N).is_zero());
    CHECK(power_system(1, N) == var(u, 0));
    CoeffSeries two = power_system(2, N);
    CHECK(two.coefficient({1}) == B("2"));
    CHECK(two.coefficient({2}) == B("-2*b1"));
    CoeffSeries F = fgl_addition(N);
    CHECK(two == apply(F, {var(u, 0), var(u, 0)}, N));
    for (int w = -4; w <= 4; ++w) {
        CAPTURE(w);
        CHECK(power_system(w, N) == power_system_recursive(w, N));
    }
    // w-fold iteration by hand.
    CoeffSeries acc(u);
    for (int w = 1; w <= 4; ++w) {
        acc = apply(F, {var(u, 0), acc}, N);
        CHECK(acc == power_system(w, N));
    }
    CHECK(power_system(-1, N) == formal_inverse(N));
    CHECK(apply(F, {var(u, 0), formal_inverse(N)}, N).is_zero());
}

TEST_CASE("multi brackets") {
    const int N = 5;
    ArenaPtr k1 = bracket_arena(1);
    CHECK(multi_bracket({1}, N) == var(k1, 0));
    ArenaPtr k2 = bracket_arena(2);
    CoeffSeries F = fgl_addition(N);
    CHECK(multi_bracket({1, 1}, N) == apply(F, {var(k2, 0), var(k2, 1)}, N));
    CoeffSeries m = multi_bracket({1, -1}, N);
    CHECK(m.homogeneous_part(1) == var(k2, 0) - var(k2, 1));
    for (const Weight& w : std::vector<Weight>{{1, -1}, {2, 1}, {1, 0, -1}, {1, 1, -2}, {0, 3}}) {
        CAPTURE(w.size());
        CHECK(multi_bracket(w, N) == multi_bracket_closed(w, N));
    }
}

TEST_CASE("Chern-Dold character of brackets") {
    const int N = 4;
    GradedSeries e1 = chern_dold_of_bracket({1}, N);
    CHECK(e1.coefficient({1}) == A("1"));
    CHECK(e1.coefficient({2}) == A("-a1"));
    CHECK(e1.coefficient({3}) == A("a1^2 - a2"));
    CHECK(e1.order() == N);

    // (x1 - x2) / f(x1 - x2) from the univariate x / f(x).
    GradedSeries d = chern_dold_of_bracket({1, -1}, N);
    ArenaPtr x = d.arena();
    CoeffSeries diff = CoeffSeries::variable(x, 0) - CoeffSeries::variable(x, 1);
    CoeffSeries expected = apply(e1.poly(), {diff}, N);
    expected.set_arena(x);
    CHECK(d.poly() == expected);
}

TEST_CASE("bridge between a and b") {
    for (int N = 1; N <= 5; ++N) {
        CoeffSeries g = log_series(N);
        CoeffSeries ginv = reverse_series(g, N);
        CHECK(apply(g, {ginv}, N) == var(series_arena(), 0));
        CoeffSeries x_over_f = CoeffSeries::multiply(var(series_arena(), 0), reciprocal_series(f_series(N), N), N);
        CHECK(rewrite_b_to_a(ginv) == x_over_f);
    }
    CHECK(b_in_terms_of_a(1) == A("a1"));
    CHECK(b_in_terms_of_a(2) == A("a1^2 + a2"));
    for (int n = 1; n <= 5; ++n) {
        CHECK(rewrite_a_to_b(b_in_terms_of_a(n)) == B("b" + std::to_string(n)));
        CHECK(rewrite_b_to_a(a_in_terms_of_b(n)) == A("a" + std::to_string(n)));
    }
}

TEST_CASE("logarithm coefficients are [CPn]/(n+1)") {
    for (int n = 1; n <= 4; ++n) {
        CobordismPoly cls = cobordism_class(fixed_point_weights(build_space("CP" + std::to_string(n))));
        CHECK(cls == b_in_terms_of_a(n).scaled(Rational(n + 1)));
    }
}
