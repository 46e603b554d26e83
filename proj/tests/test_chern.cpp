#include <random>

#include "doctest.h"
#include "torigen/chern.hpp"
#include "torigen/errors.hpp"
#include "torigen/genus.hpp"
#include "torigen/render.hpp"

using namespace torigen;

namespace {

SNumbers table(int n, const std::vector<long>& values) {
    SNumbers s;
    auto parts = partitions(n);
    REQUIRE(parts.size() == values.size());
    for (std::size_t i = 0; i < parts.size(); ++i) s[partition_to_omega(parts[i], n)] = values[i];
    return s;
}

std::vector<long> chern_values(const ChernNumberTable& c, int n) {
    std::vector<long> out;
    for (const auto& key : chern_keys(n)) out.push_back(c.at(key).get_si());
    return out;
}

SNumbers class_table(const std::string& cls, int factor, int n) {
    return s_numbers_from_class(parse_poly(cls, generator_arena()).scaled(Rational(factor)), n);
}

}  // namespace

TEST_CASE("keys and labels") {
    CHECK(chern_keys(3) == std::vector<Exponents>{{0, 0, 1}, {1, 1, 0}, {3, 0, 0}});
    CHECK(chern_label({0, 0, 1}) == "c3");
    CHECK(chern_label({1, 1, 0}) == "c1*c2");
    CHECK(chern_label({3, 0, 0}) == "c1^3");
    CHECK(chern_label({2, 0, 1, 0, 0}) == "c1^2*c3");
}

TEST_CASE("s to Chern examples") {
    CHECK(chern_values(s_to_chern(table(3, {6, 6, -6}), 3), 3) == std::vector<long>{6, 24, 48});
    CHECK(chern_values(s_to_chern(table(4, {6, 24, 14, 4, -20}), 4), 4) == std::vector<long>{6, 48, 98, 224, 512});
    SNumbers j1 = class_table("3*a1^5 + 12*a1^3*a2 + 7*a1*a2^2 - 5*a1^2*a3 - 2*a2*a3 - 10*a1*a4 + 5*a5", 4, 5);
    CHECK(chern_values(s_to_chern(j1, 5), 5) == std::vector<long>{12, 108, 292, 612, 1028, 2148, 4500});
}

TEST_CASE("Chern to s examples") {
    // S6: c1c2 = c1^3 = 0, c3 = 2.
    ChernNumberTable s6 = {{{0, 0, 1}, 2}, {{1, 1, 0}, 0}, {{3, 0, 0}, 0}};
    SNumbers s = chern_to_s(s6, 3);
    CHECK(s.at({3, 0, 0}) == 2);
    CHECK(s.at({1, 1, 0}) == -6);
    CHECK(s.at({0, 0, 1}) == 6);
    CHECK(class_from_s_numbers(s) == parse_poly("2*a1^3 - 6*a1*a2 + 6*a3", generator_arena()));

    ChernNumberTable j3;
    std::vector<long> values = {12, 12, 4, 20, -4, -4, -20};
    auto keys = chern_keys(5);
    for (std::size_t i = 0; i < keys.size(); ++i) j3[keys[i]] = values[i];
    CHECK(chern_to_s(j3, 5) ==
          class_table("3*a1^5 - 12*a1^3*a2 + 7*a1*a2^2 + 15*a1^2*a3 - 12*a2*a3 - 10*a1*a4 + 15*a5", 4, 5));
}

TEST_CASE("round trips on random tables") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dist(-500, 500);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            ChernNumberTable c;
            for (const auto& key : chern_keys(n)) c[key] = dist(rng);
            CHECK(s_to_chern(chern_to_s(c, n), n) == c);
            SNumbers s = chern_to_s(c, n);
            CHECK(chern_to_s(s_to_chern(s, n), n) == s);
        }
    }
}

TEST_CASE("unit tables convert integrally both ways") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : partitions(n)) {
            SNumbers unit;
            for (const auto& mu : partitions(n)) unit[partition_to_omega(mu, n)] = mu == lambda ? 1 : 0;
            CHECK_NOTHROW(s_to_chern(unit, n));
            ChernNumberTable c;
            for (const auto& key : chern_keys(n)) c[key] = key == partition_to_omega(lambda, n) ? 1 : 0;
            CHECK_NOTHROW(chern_to_s(c, n));
        }
    }
}
