#include <set>

#include "doctest.h"
#include "support.hpp"
#include "torigen/errors.hpp"
#include "torigen/stablex.hpp"

using namespace torigen;

namespace {

SignAssignment from_bits(const HomogeneousSpaceSpec& spec, unsigned bits) {
    SignAssignment s = SignAssignment::trivial(spec);
    int n = spec.dimension();
    for (std::size_t p = 0; p < s.a.size(); ++p)
        for (int i = 0; i < n; ++i)
            if ((bits >> (p * n + i)) & 1u) s.a[p][i] = -1;
    return s;
}

std::set<std::vector<std::vector<int>>> tables(const std::vector<SignAssignment>& v) {
    std::set<std::vector<std::vector<int>>> out;
    for (const auto& s : v) out.insert(s.a);
    return out;
}

std::vector<int> signs(const FixedPointData& fp) {
    std::vector<int> out;
    for (const auto& p : fp.points) out.push_back(p.sign);
    return out;
}

}  // namespace

TEST_CASE("trivial assignment reproduces the invariant structure") {
    for (const char* d : {"CP3", "U(3)/T3", "G2/SU(3)"}) {
        HomogeneousSpaceSpec spec = build_space(d);
        FixedPointData a = derived_fixed_point_data(spec, SignAssignment::trivial(spec));
        FixedPointData b = fixed_point_weights(spec);
        REQUIRE(a.points.size() == b.points.size());
        for (std::size_t p = 0; p < a.points.size(); ++p) {
            CHECK(a.points[p].weights == b.points[p].weights);
            CHECK(a.points[p].sign == 1);
        }
    }
}

TEST_CASE("conjugation") {
    HomogeneousSpaceSpec s6 = build_space("G2/SU(3)");
    SignAssignment all_minus = conjugate(SignAssignment::trivial(s6));
    CHECK(all_minus.epsilon == 1);
    FixedPointData derived = derived_fixed_point_data(s6, all_minus);
    FixedPointData conj = fixed_point_weights(with_structure(s6, "conjugate"));
    for (std::size_t p = 0; p < conj.points.size(); ++p) {
        CHECK(derived.points[p].weights == conj.points[p].weights);
        CHECK(derived.points[p].sign == conj.points[p].sign);
    }
    CHECK(signs(derived) == std::vector<int>{-1, -1});
    CHECK(conjugate(conjugate(all_minus)) == all_minus);
}

TEST_CASE("necessary conditions") {
    HomogeneousSpaceSpec flag = build_space("U(3)/T3");
    SignAssignment a = SignAssignment::trivial(flag);
    a.a[0][0] = -1;
    NecessaryReport r = check_necessary(flag, a);
    CHECK_FALSE(r.ok);
    CHECK(r.stage == "vanishing");

    HomogeneousSpaceSpec g42 = build_space("U(4)/U(2)xU(2)");
    SignAssignment b = SignAssignment::trivial(g42);
    b.a[0][0] = -1;
    CHECK_FALSE(check_necessary(g42, b).ok);

    HomogeneousSpaceSpec cp3 = build_space("CP3");
    CHECK(check_necessary(cp3, SignAssignment::trivial(cp3)).ok);
    SignAssignment c = SignAssignment::trivial(cp3);
    c.epsilon = -1;
    CHECK(check_necessary(cp3, c).ok);
}

TEST_CASE("S6 admissible sign systems") {
    HomogeneousSpaceSpec s6 = build_space("G2/SU(3)");
    auto sols = enumerate_feasible(s6);
    REQUIRE(sols.size() == 10);
    int opposite = 0;
    for (const auto& s : sols) {
        bool plus = true, minus = true, negated = true;
        for (int i = 0; i < 3; ++i) {
            for (int p = 0; p < 2; ++p) (s.a[p][i] > 0 ? minus : plus) = false;
            negated = negated && s.a[1][i] == -s.a[0][i];
        }
        if (plus || minus) {
            CHECK(s_numbers_for(s6, s).at({3, 0, 0}) == (plus ? 2 : -2));
            continue;
        }
        CHECK(negated);
        ++opposite;
        CHECK(class_from_s_numbers(s_numbers_for(s6, s)).is_zero());
    }
    CHECK(opposite == 8);
}

TEST_CASE("CP1 by brute force") {
    HomogeneousSpaceSpec cp1 = build_space("CP1");
    std::vector<SignAssignment> brute;
    for (unsigned bits = 0; bits < 4; ++bits)
        if (check_necessary(cp1, from_bits(cp1, bits)).ok) brute.push_back(from_bits(cp1, bits));
    CHECK(brute.size() == 4);
    CHECK(enumerate_feasible(cp1) == brute);
}

TEST_CASE("CP3 admissible assignments") {
    HomogeneousSpaceSpec cp3 = build_space("CP3");
    auto sols = enumerate_feasible(cp3);
    CHECK(sols.size() == 16);
    // Without the prefilter: every one of the 4096 tables through the full check.
    std::vector<SignAssignment> brute;
    for (unsigned bits = 0; bits < 4096; ++bits)
        if (check_necessary(cp3, from_bits(cp3, bits)).ok) brute.push_back(from_bits(cp3, bits));
    CHECK(tables(brute) == tables(sols));
    // Four free values: the table is fixed by a(0) and one entry at a second point.
    std::set<std::vector<int>> heads;
    for (const auto& s : sols) heads.insert({s.a[0][0], s.a[0][1], s.a[0][2], s.a[1][2]});
    CHECK(heads.size() == 16);
}

TEST_CASE("CP3 nonstandard structure") {
    HomogeneousSpaceSpec cp3 = build_space("CP3");
    CHECK(s_numbers_for(cp3, SignAssignment::trivial(cp3)).at({0, 0, 1}) == 4);
    // The only admissible table with eps = -1 whose signs are (-1, 1, 1, 1).
    int matches = 0;
    for (auto s : enumerate_feasible(cp3)) {
        s.epsilon = -1;
        if (signs(derived_fixed_point_data(cp3, s)) != std::vector<int>{-1, 1, 1, 1}) continue;
        ++matches;
        CHECK(s.a == std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, -1}, {1, 1, -1}, {1, 1, -1}});
        CHECK(s_numbers_for(cp3, s).at({0, 0, 1}) == -2);
    }
    CHECK(matches == 1);
}

TEST_CASE("budget") {
    CHECK_THROWS_AS(enumerate_feasible(build_space("U(4)/T4")), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_feasible(build_space("CP3"), 100), BudgetExceeded);
}

TEST_CASE("assignment JSON") {
    HomogeneousSpaceSpec cp3 = build_space("CP3");
    SignAssignment s = from_bits(cp3, 0b100100100100);
    s.epsilon = -1;
    CHECK(assignment_from_json(to_json(s), cp3) == s);
    CHECK(to_text(s) == "(1,1,-1) | (1,1,-1) | (1,1,-1) | (1,1,-1) eps=-1");
    nlohmann::json j = to_json(SignAssignment::trivial(cp3));
    CHECK(assignment_from_json(j, cp3).epsilon == 1);
    j.erase("2");
    CHECK_THROWS_AS(assignment_from_json(j, cp3), ParseError);
    CHECK_THROWS_AS(assignment_from_json({{"0", {1, 1}}}, cp3), ParseError);
    CHECK_THROWS_AS(assignment_from_json({{"9", {1, 1, 1}}}, cp3), ParseError);
    CHECK_THROWS_AS(assignment_from_json({{"0", {1, 2, 1}}}, cp3), ParseError);
}
