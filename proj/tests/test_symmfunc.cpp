#include "doctest.h"
#include "support.hpp"
#include "torigen/symmfunc.hpp"

using namespace torigen;

namespace {

Partition conjugate_partition(const Partition& p) {
    Partition c;
    for (int k = 1; !p.empty() && k <= p.front(); ++k) {
        int count = 0;
        for (int v : p)
            if (v >= k) ++count;
        c.push_back(count);
    }
    return c;
}

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

std::map<Exponents, Integer> padded_row(const std::map<Exponents, Integer>& row, int n) {
    std::map<Exponents, Integer> out;
    for (const auto& [xi, v] : row) out[padded(xi, n)] = v;
    return out;
}

MultiPoly in_arena(const std::string& text, const MultiPoly& like) {
    return parse_poly(text, like.arena());
}

}  // namespace

TEST_CASE("partitions and omega indices") {
    CHECK(partitions(4) == std::vector<Partition>{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}});
    CHECK(partitions(6).size() == 11);
    CHECK(partition_to_omega({3, 1}, 4) == OmegaIndex{1, 0, 1, 0});
    CHECK(omega_to_partition({1, 0, 1, 0}) == Partition{3, 1});
    CHECK(omega_weight({1, 0, 0, 0, 1, 0}) == 6);
    CHECK(omegas(3, 3) == std::vector<OmegaIndex>{{3, 0, 0}, {1, 1, 0}, {0, 0, 1}});
}

TEST_CASE("permutations") {
    auto perms = permutations(4);
    CHECK(perms.size() == 24);
    CHECK(perms.front() == Permutation{0, 1, 2, 3});
    CHECK(perms.back() == Permutation{3, 2, 1, 0});
    int even = 0;
    for (const auto& p : perms) {
        CHECK(compose(p, inverse(p)) == Permutation{0, 1, 2, 3});
        even += permutation_sign(p) == 1;
    }
    CHECK(even == 12);
    CHECK(permutation_sign({1, 0, 2}) == -1);
}

TEST_CASE("orbit monomials") {
    MultiPoly e3 = orbit_monomial({1, 1, 1}, 3);
    CHECK(e3 == elementary(3, 3, e3.arena()));
    CHECK(e3.size() == 1);
    MultiPoly p3 = orbit_monomial({3, 0, 0}, 3);
    CHECK(p3 == power_sum(3, 3, p3.arena()));
    MultiPoly m21 = orbit_monomial({2, 1, 0}, 3);
    CHECK(m21.size() == 6);
    for (const auto& [e, c] : m21.terms()) {
        CHECK(c == 1);
        Exponents s = padded(e, 3);
        std::sort(s.begin(), s.end());
        CHECK(s == Exponents{0, 1, 2});
    }
}

TEST_CASE("f_omega decomposition examples") {
    auto f = f_omega_decomposition(3, 3);
    MultiPoly t1 = f.at({1, 0, 0});
    CHECK(t1 == in_arena("t1 + t2 + t3", t1));
    CHECK(f.at({0, 0, 1}) == in_arena("t1^3 + t2^3 + t3^3", t1));
    // a1^2 comes only from pairs of distinct factors.
    CHECK(f.at({2, 0, 0}) == in_arena("t1*t2 + t1*t3 + t2*t3", t1));
    CHECK(f.at({1, 1, 0}) == in_arena("t1^2*t2 + t1^2*t3 + t1*t2^2 + t2^2*t3 + t1*t3^2 + t2*t3^2", t1));
}

TEST_CASE("f_omega decomposition rebuilds the product of f") {
    for (int n = 1; n <= 4; ++n) {
        const int nmax = 6 - (n > 2 ? n - 2 : 0);
        auto f = f_omega_decomposition(n, nmax);
        ArenaPtr t = f.begin()->second.arena();
        // Coefficient of a^omega in prod_i (1 + sum_k a_k t_i^k), by direct expansion over omega.
        std::map<OmegaIndex, MultiPoly> current = {{OmegaIndex(nmax, 0), MultiPoly(t, Rational(1))}};
        for (int i = 0; i < n; ++i) {
            std::map<OmegaIndex, MultiPoly> next;
            for (const auto& [omega, p] : current) {
                next[omega] += p;
                for (int k = 1; k <= nmax; ++k) {
                    if (omega_weight(omega) + k > nmax) break;
                    OmegaIndex o = omega;
                    ++o[k - 1];
                    Exponents e(n, 0);
                    e[i] = k;
                    next[o] += p * MultiPoly::monomial(t, e, Rational(1));
                }
            }
            current = std::move(next);
        }
        for (const auto& [omega, p] : current) {
            if (omega_weight(omega) == 0) continue;
            auto it = f.find(omega);
            if (p.is_zero()) {
                CHECK((it == f.end() || it->second.is_zero()));
            } else {
                REQUIRE(it != f.end());
                CHECK(it->second == p);
            }
        }
    }
}

TEST_CASE("monomial to elementary examples") {
    // p3 = e1^3 - 3 e1 e2 + 3 e3
    CHECK(padded_row(monomial_to_elementary({0, 0, 1}), 3) ==
          std::map<Exponents, Integer>{{{3, 0, 0}, 1}, {{1, 1, 0}, -3}, {{0, 0, 1}, 3}});
    CHECK(padded_row(monomial_to_elementary({3, 0, 0}), 3) == std::map<Exponents, Integer>{{{0, 0, 1}, 1}});
    // m_(2,1,1,1) = e1 e4 - 5 e5
    CHECK(padded_row(monomial_to_elementary({3, 1, 0, 0, 0}), 5) ==
          std::map<Exponents, Integer>{{{1, 0, 0, 1, 0}, 1}, {{0, 0, 0, 0, 1}, -5}});
}

TEST_CASE("beta: counting route equals polynomial elimination") {
    for (int n = 1; n <= 6; ++n) {
        BetaMatrix counted = beta_by_counting(n);
        const BetaMatrix& cached = beta_matrix(n);
        for (const auto& lambda : partitions(n)) {
            OmegaIndex omega = partition_to_omega(lambda, n);
            auto by_poly = padded_row(monomial_to_elementary(omega), n);
            CHECK(padded_row(counted.at(omega), n) == by_poly);
            CHECK(padded_row(cached.at(omega), n) == by_poly);
        }
    }
}

TEST_CASE("beta rows rebuild orbit monomials") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions(n)) {
            MultiPoly orbit = orbit_monomial(partition_exponents(lambda, n), n);
            OmegaIndex omega = partition_to_omega(lambda, n);
            CHECK(elementary_expansion(beta_matrix(n).at(omega), n, orbit.arena()) == orbit);
        }
    }
}

TEST_CASE("beta is unitriangular under dominance") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : partitions(n)) {
            const auto& row = beta_matrix(n).at(partition_to_omega(lambda, n));
            Partition lc = conjugate_partition(lambda);
            CHECK(row.count(trimmed(partition_to_omega(lc, n))) + row.count(partition_to_omega(lc, n)) >= 1);
            for (const auto& [xi, v] : row) {
                Partition mu = omega_to_partition(padded(xi, n));
                CHECK(dominates(lambda, conjugate_partition(mu)));
                if (conjugate_partition(mu) == lambda) CHECK(v == 1);
            }
        }
    }
}

TEST_CASE("Schur polynomials") {
    MultiPoly one = schur({}, 3);
    CHECK(one.is_constant());
    CHECK(one.constant_term() == 1);
    MultiPoly s1 = schur({1}, 3);
    CHECK(s1 == in_arena("x1 + x2 + x3", s1));
    MultiPoly s11 = schur({1, 1}, 3);
    CHECK(s11 == elementary(2, 3, s11.arena()));
    for (const Partition& lambda : std::vector<Partition>{{2, 1}, {3, 1}, {2, 2}, {3, 2, 1}}) {
        MultiPoly s = schur(lambda, 4);
        for (int i = 0; i + 1 < 4; ++i) {
            Permutation swap = {0, 1, 2, 3};
            std::swap(swap[i], swap[i + 1]);
            CHECK(permute_variables(s, swap) == s);
        }
    }
}
