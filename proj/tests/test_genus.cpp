#include "doctest.h"
#include "support.hpp"
#include "torigen/errors.hpp"
#include "torigen/genus.hpp"
#include "torigen/stablex.hpp"

using namespace torigen;

namespace {

CobordismPoly A(const std::string& s, int factor = 1) {
    return parse_poly(s, generator_arena()).scaled(Rational(factor));
}

FixedPointData data(const std::string& d, const std::string& structure = "standard") {
    return fixed_point_weights(with_structure(build_space(d), structure));
}

OmegaIndex top_generator(int n) {
    OmegaIndex o(n, 0);
    o[n - 1] = 1;
    return o;
}

}  // namespace

TEST_CASE("CP1 series against the closed form") {
    const int N = 8;
    GradedSeries s = chern_character_of_genus(data("CP1"), N);
    // 2 sum_k a_{2k+1} (x1 - x2)^{2k}, expanded with binomial coefficients.
    for (int d = 0; d <= N; ++d)
        for (int i = 0; i <= d; ++i) {
            Exponents e = {i, d - i};
            CobordismPoly expected(generator_arena());
            if (d % 2 == 0) {
                Integer binom;
                mpz_bin_uiui(binom.get_mpz_t(), d, i);
                if ((d - i) % 2) binom = -binom;
                expected = A("a" + std::to_string(d + 1), 2).scaled(Rational(binom));
            }
            CAPTURE(d);
            CAPTURE(i);
            CHECK(s.coefficient(e) == expected);
        }
}

TEST_CASE("cobordism classes") {
    CHECK(cobordism_class(data("CP1")) == A("2*a1"));
    CHECK(cobordism_class(data("U(3)/T3")) == A("a1^3 + a1*a2 - a3", 6));
    CHECK(cobordism_class(data("U(4)/U(2)xU(2)")) == A("3*a1^4 + 12*a1^2*a2 + 7*a2^2 + 2*a1*a3 - 10*a4", 2));
    CHECK(cobordism_class(data("SU(4)/S(U(1)xU(1)xU(2))", "J3")) ==
          A("3*a1^5 - 12*a1^3*a2 + 7*a1*a2^2 + 15*a1^2*a3 - 12*a2*a3 - 10*a1*a4 + 15*a5", 4));
    CHECK(cobordism_class(data("G2/SU(3)", "J")) == A("a1^3 - 3*a1*a2 + 3*a3", 2));
}

TEST_CASE("S6 series terms") {
    GradedSeries s = chern_character_of_genus(data("G2/SU(3)", "J"), 2);
    CHECK(s.coefficient({}) == A("a1^3 - 3*a1*a2 + 3*a3", 2));
    CHECK(s.homogeneous_part(1).poly().is_zero());
    auto sigma = sigma_expansion(s);
    CHECK(sigma.at({1, 0}) == A("a1*a2^2 - 2*a1^2*a3 - a2*a3 + 5*a1*a4 - 5*a5", 2));
}

TEST_CASE("sigma expansion of a constructed series") {
    ArenaPtr x = geometric_arena(2);
    auto lift = [](const MultiPoly& p) {
        return p.map_coefficients([](const Rational& c) { return CobordismPoly(nullptr, c); });
    };
    Poly<CobordismPoly> sigma2 = lift(parse_poly("-x1^2 - x1*x2 - x2^2", x));
    Poly<CobordismPoly> sigma3 = lift(parse_poly("-x1^2*x2 - x1*x2^2", x));
    Poly<CobordismPoly> p(x, A("a2"));
    for (const auto& [e, c] : sigma2.terms()) p.add_term(e, A("a1").scaled(c.constant_term()));
    for (const auto& [e, c] : sigma3.terms()) p.add_term(e, A("a3").scaled(c.constant_term()));
    auto expansion = sigma_expansion(GradedSeries(p, 3));
    CHECK(expansion.at({0, 0}) == A("a2"));
    CHECK(expansion.at({1, 0}) == A("a1"));
    CHECK(expansion.at({0, 1}) == A("a3"));
    Poly<CobordismPoly> bad = lift(parse_poly("x1", x));
    CHECK_THROWS_AS(sigma_expansion(GradedSeries(bad, 3)), NotDivisible);
}

TEST_CASE("low-degree vanishing") {
    for (const char* d : {"CP2", "U(3)/T3", "U(4)/U(2)xU(2)", "SU(3)/T2"}) CHECK(verify_low_vanishing(data(d)).ok);
    CHECK(verify_low_vanishing(data("U(3)/T3", "conjugate")).ok);

    // A CP3 sign table breaking the relations: a1(0) = -1 alone.
    HomogeneousSpaceSpec cp3 = build_space("CP3");
    SignAssignment a = SignAssignment::trivial(cp3);
    a.a[0][0] = -1;
    VanishingReport rep = verify_low_vanishing(derived_fixed_point_data(cp3, a));
    CHECK_FALSE(rep.ok);
    CHECK(rep.degree == 1);
    CHECK(rep.describe().find("weight 1") != std::string::npos);

    // One fixed point cannot cancel anything.
    FixedPointData single;
    single.rank = 1;
    single.points.push_back({WeylElement::identity(1), {{1}}, 1});
    VanishingReport lone = verify_low_vanishing(single);
    CHECK_FALSE(lone.ok);
    CHECK(lone.degree == 0);
    CHECK_THROWS_AS(chern_character_of_genus(single, 0), SingularSum);
    CHECK(s_numbers(single).at({1}) == 1);
    FixedPointData pair;
    pair.rank = 2;
    pair.points.push_back({WeylElement::identity(2), {{1, 0}, {0, 1}}, 1});
    CHECK_THROWS_AS(s_numbers(pair), NonConstantResult);
}

TEST_CASE("s-numbers") {
    SNumbers flag = s_numbers(data("U(3)/T3"));
    CHECK(flag.at({3, 0, 0}) == 6);
    CHECK(flag.at({1, 1, 0}) == 6);
    CHECK(flag.at({0, 0, 1}) == -6);
    SNumbers g42 = s_numbers(data("U(4)/U(2)xU(2)"));
    CHECK(g42.at({0, 2, 0, 0}) == 14);
    CHECK(g42.at({1, 0, 1, 0}) == 4);
    CHECK(g42.at({0, 0, 0, 1}) == -20);
    for (int n = 1; n <= 5; ++n) CHECK(s_numbers(data("CP" + std::to_string(n))).at(top_generator(n)) == n + 1);
}

TEST_CASE("numeric s-numbers") {
    CHECK(s_number_numeric(data("U(4)/U(2)xU(2)"), {0, 0, 0, 1}, {1, 2, 3, 4}) == -20);
    CHECK(s_number_numeric(data("CP1"), {1}, {1, 0}) == 2);
    CHECK(s_number_numeric(data("U(3)/T3"), {0, 0, 1}, {0, 1, 2}) == -6);
    CHECK_THROWS_AS(s_number_numeric(data("U(3)/T3"), {0, 0, 1}, {1, 1, 2}), SingularPoint);
    FixedPointData fp = data("SU(4)/S(U(1)xU(1)xU(2))", "J2");
    std::vector<Integer> p = default_numeric_point(fp);
    SNumbers s = s_numbers(fp);
    for (const auto& [omega, v] : s) CHECK(s_number_numeric(fp, omega, p) == Rational(v));
}

TEST_CASE("U(3)/T3 s_(0,0,1) by a direct six-term sum") {
    // sum over S3 of sum_j L_j^3 / prod_j L_j with L = (x_s(i) - x_s(j))_{i<j}
    std::vector<Rational> x = {Rational(0), Rational(1), Rational(2)};
    Rational total = 0;
    for (const auto& s : permutations(3)) {
        std::vector<Rational> l;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) l.push_back(x[s[i]] - x[s[j]]);
        Rational num = 0, den = 1;
        for (const auto& v : l) {
            num += v * v * v;
            den *= v;
        }
        total += num / den;
    }
    CHECK(total == -6);
    CHECK(s_number_numeric(data("U(3)/T3"), {0, 0, 1}, {0, 1, 2}) == total);
}

TEST_CASE("class and s-table conversions") {
    CobordismPoly cls = cobordism_class(data("U(4)/U(2)xU(2)"));
    SNumbers s = s_numbers_from_class(cls, 4);
    CHECK(s == s_numbers(data("U(4)/U(2)xU(2)")));
    CHECK(class_from_s_numbers(s) == cls);
    CHECK(indecomposable_part(cls) == A("-20*a4"));
}

TEST_CASE("fibration coefficients start with the class") {
    FixedPointData fp = data("U(3)/T3");
    auto g = genus_fibration_coefficients(fp, 2, 2);
    CHECK(g.at({}) == cobordism_class(fp));
    CHECK_THROWS_AS(genus_fibration_coefficients(fp, 1, 2), TruncationTooLow);
}

TEST_CASE("series invariants") {
    for (const auto& [d, structure] : std::vector<std::pair<std::string, std::string>>{
             {"CP2", "standard"}, {"U(3)/T3", "standard"}, {"G2/SU(3)", "J"}, {"U(4)/U(2)xU(2)", "conjugate"}}) {
        CAPTURE(d);
        HomogeneousSpaceSpec spec = with_structure(build_space(d), structure);
        GenusResult r = compute_genus(spec, 3);
        CHECK(r.vanishing);
        CHECK(r.weyl_invariance);
        CHECK(weight_graded(r.series, spec.dimension()));
        CHECK(r.cls == class_from_s_numbers(r.s));
        OmegaIndex top(spec.dimension(), 0);
        top[0] = spec.dimension();
        CHECK(r.s.at(top) == spec.point_sign * euler_characteristic(spec));
    }
    // A lone x1 is not Weyl invariant.
    HomogeneousSpaceSpec flag = build_space("U(3)/T3");
    Poly<CobordismPoly> p(geometric_arena(3));
    p.add_term({1}, A("a1"));
    CHECK_FALSE(weyl_invariant(GradedSeries(p, 2), weyl_generators(flag)));
    CHECK_FALSE(weight_graded(GradedSeries(p, 2), 3));
    CHECK(default_series_order(3) == 4);
    CHECK(default_series_order(6) == 1);
}
