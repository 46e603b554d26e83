#include "torigen/divdiff.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "torigen/chern.hpp"
#include "torigen/diskcache.hpp"
#include "torigen/genus.hpp"
#include "torigen/parallel.hpp"
#include "torigen/render.hpp"

namespace torigen {

namespace {

template <class C>
Poly<C> antisymmetrize_parallel(const Poly<C>& p, int n, int threads) {
    std::vector<Permutation> perms = permutations(n);
    std::vector<Poly<C>> parts(perms.size());
    parallel_for(perms.size(), threads, [&](std::size_t i) {
        parts[i] = permute_variables_generic(p, perms[i]);
        if (permutation_sign(perms[i]) < 0) parts[i] = -parts[i];
    });
    Poly<C> r(p.arena());
    for (const auto& part : parts) r += part;
    return r;
}

template <class C>
Poly<C> apply_L(const Poly<C>& p, int n, int threads) {
    ArenaPtr arena = p.arena() ? p.arena() : geometric_arena(n);
    Poly<C> alt = antisymmetrize_parallel(p, n, threads);
    if (alt.is_zero()) return Poly<C>(arena);
    return exact_div(alt, vandermonde(n, arena));
}

Permutation transposition(int n, int i) {
    Permutation s(n);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[i - 1], s[i]);
    return s;
}

int arity_of(const MultiPoly& p) {
    int n = p.arena() && !p.arena()->open() ? p.arena()->arity() : 0;
    for (const auto& [e, c] : p.terms()) n = std::max(n, static_cast<int>(e.size()));
    return n;
}

enum class FactorKind { Full, Odd };

struct RootFactor {
    int i, j;  // 0-based, i < j
    FactorKind kind = FactorKind::Full;
};

// f(x_i - x_j) (or its odd part) through total degree `degree`.
SeriesPoly root_factor(int n, const RootFactor& r, int degree) {
    ArenaPtr x = geometric_arena(n);
    MultiPoly diff = MultiPoly::variable(x, r.i) - MultiPoly::variable(x, r.j);
    SeriesPoly f(x);
    if (r.kind == FactorKind::Full) f.add_term({}, CoeffTraits<CobordismPoly>::one());
    MultiPoly power(x, Rational(1));
    for (int k = 1; k <= degree; ++k) {
        power *= diff;
        if (r.kind == FactorKind::Odd && k % 2 == 0) continue;
        CobordismPoly a = generator(k, generator_arena());
        for (const auto& [e, c] : power.terms()) f.add_term(e, a.scaled(c));
    }
    return f;
}

SeriesPoly capped(const SeriesPoly& p, int cap) {
    if (cap < 0) return p;
    SeriesPoly r(p.arena());
    for (const auto& [e, c] : p.terms())
        if (std::all_of(e.begin(), e.end(), [cap](int v) { return v <= cap; })) r.add_term(e, c);
    return r;
}

// Product of root factors truncated at total degree `degree`; when cap >= 0,
// monomials with an exponent above cap are dropped as they appear.
SeriesPoly root_product(int n, const std::vector<RootFactor>& factors, int degree, int cap) {
    SeriesPoly prod(geometric_arena(n), CoeffTraits<CobordismPoly>::one());
    for (const auto& r : factors) prod = capped(SeriesPoly::multiply(prod, root_factor(n, r, degree), degree), cap);
    return prod;
}

std::vector<RootFactor> all_roots(int n) {
    std::vector<RootFactor> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back({i, j});
    return out;
}

std::vector<RootFactor> grassmann_roots(int q, int l) {
    std::vector<RootFactor> out;
    for (int i = 0; i < q; ++i)
        for (int j = q; j < q + l; ++j) out.push_back({i, j});
    return out;
}

SeriesPoly lift(const MultiPoly& p) {
    return p.map_coefficients([](const Rational& c) { return CobordismPoly(nullptr, c); });
}

CobordismPoly constant_of(const SeriesPoly& p, const char* what) {
    if (!p.is_constant()) throw std::logic_error(std::string(what) + " did not reduce to a constant");
    CobordismPoly c = p.constant_term();
    c.set_arena(generator_arena());
    return c;
}

const SeriesPoly& flag_product(int n, int degree, int cap) {
    static std::shared_mutex mutex;
    static std::map<std::tuple<int, int, int>, SeriesPoly> memo;
    auto key = std::make_tuple(n, degree, cap);
    {
        std::shared_lock lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    SeriesPoly prod = root_product(n, all_roots(n), degree, cap);
    std::unique_lock lock(mutex);
    return memo.try_emplace(key, std::move(prod)).first->second;
}

const SeriesPoly& grassmann_numerator(int q, int l) {
    static std::shared_mutex mutex;
    static std::map<std::pair<int, int>, SeriesPoly> memo;
    auto key = std::make_pair(q, l);
    {
        std::shared_lock lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    int n = q + l;
    int m = n * (n - 1) / 2;
    ArenaPtr x = geometric_arena(n);
    SeriesPoly prod = root_product(n, grassmann_roots(q, l), q * l, -1);
    MultiPoly deltas = vandermonde_range(1, q, n, x) * vandermonde_range(q + 1, n, n, x);
    SeriesPoly full = SeriesPoly::multiply(lift(deltas), prod, m).homogeneous_part(m);
    std::unique_lock lock(mutex);
    return memo.try_emplace(key, std::move(full)).first->second;
}

std::string exponent_key(const Exponents& e) {
    std::ostringstream out;
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "-" : "") << e[i];
    return out.str();
}

template <class Compute>
CobordismPoly memo_coefficient(const std::string& key, Compute&& compute) {
    static std::shared_mutex mutex;
    static std::map<std::string, CobordismPoly> memo;
    {
        std::shared_lock lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    CobordismPoly value;
    if (auto text = cache_read(key)) {
        value = parse_poly(*text, generator_arena());
    } else {
        value = compute();
        value.set_arena(generator_arena());
        cache_write(key, to_text(value));
    }
    std::unique_lock lock(mutex);
    return memo.try_emplace(key, value).first->second;
}

Rational factorial(int k) {
    Rational r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace

MultiPoly operator_L(const MultiPoly& p, int n, int threads) {
    return apply_L(p, n, threads);
}

SeriesPoly operator_L(const SeriesPoly& p, int n, int threads) {
    return apply_L(p, n, threads);
}

MultiPoly divided_difference(int i, const MultiPoly& p) {
    int n = std::max(arity_of(p), i + 1);
    if (i < 1) throw std::invalid_argument("divided difference index must be positive");
    ArenaPtr arena = p.arena() ? p.arena() : geometric_arena(n);
    MultiPoly num = p - permute_variables_generic(p, transposition(n, i));
    if (num.is_zero()) return MultiPoly(arena);
    return exact_div(num, MultiPoly::variable(arena, i - 1) - MultiPoly::variable(arena, i));
}

MultiPoly apply_divided_differences(const std::vector<int>& word, const MultiPoly& p) {
    MultiPoly r = p;
    for (int i : word) r = divided_difference(i, r);
    return r;
}

Permutation longest_element(int n) {
    Permutation w(n);
    for (int i = 0; i < n; ++i) w[i] = n - 1 - i;
    return w;
}

std::vector<int> reduced_word(const Permutation& v, bool rightmost_descent) {
    Permutation u = v;
    int n = static_cast<int>(u.size());
    std::vector<int> reversed;
    for (;;) {
        int descent = -1;
        for (int j = 0; j + 1 < n; ++j)
            if (u[j] > u[j + 1]) {
                descent = j;
                if (!rightmost_descent) break;
            }
        if (descent < 0) break;
        std::swap(u[descent], u[descent + 1]);
        reversed.push_back(descent + 1);
    }
    return {reversed.rbegin(), reversed.rend()};
}

MultiPoly staircase_monomial(int n, ArenaPtr arena) {
    if (!arena) arena = geometric_arena(n);
    Exponents delta(n);
    for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;
    return MultiPoly::monomial(arena, delta, Rational(1));
}

MultiPoly schubert_polynomial(const Permutation& w, int n, bool rightmost_descent) {
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("permutation length differs from n");
    Permutation check = w;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < n; ++i)
        if (check[i] != i) throw std::invalid_argument("not a permutation");
    Permutation v = compose(longest_element(n), w);
    return apply_divided_differences(reduced_word(v, rightmost_descent), staircase_monomial(n));
}

std::vector<std::pair<Exponents, int>> staircase_orbit(int n) {
    std::vector<std::pair<Exponents, int>> out;
    for (const auto& sigma : permutations(n)) {
        Exponents e(n);
        for (int i = 0; i < n; ++i) e[sigma[i]] = n - 1 - i;
        out.emplace_back(e, permutation_sign(sigma));
    }
    return out;
}

CobordismPoly flag_P_polynomial(int n, const Exponents& xi) {
    Exponents e = padded(xi, n);
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent vector longer than n");
    return memo_coefficient("P_" + std::to_string(n) + "_" + exponent_key(e), [&] {
        int cap = *std::max_element(e.begin(), e.end());
        return flag_product(n, total_degree(e), cap).coefficient(e);
    });
}

CobordismPoly grassmann_Q_polynomial(int q, int l, const Exponents& xi) {
    int n = q + l;
    Exponents e = padded(xi, n);
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent vector longer than q+l");
    return memo_coefficient("Q_" + std::to_string(q) + "_" + std::to_string(l) + "_" + exponent_key(e), [&] {
        int m = n * (n - 1) / 2;
        if (total_degree(e) != m) throw std::invalid_argument("Q polynomials are tabulated at |xi| = dim");
        return grassmann_numerator(q, l).coefficient(e);
    });
}

FlagMethod parse_flag_method(std::string_view name) {
    if (name == "corL") return FlagMethod::CorL;
    if (name == "tchi") return FlagMethod::TChi;
    if (name == "thm8") return FlagMethod::Thm8;
    throw ParseError("unknown flag method '" + std::string(name) + "' (expected corL, tchi or thm8)");
}

std::string flag_method_name(FlagMethod m) {
    switch (m) {
        case FlagMethod::CorL: return "corL";
        case FlagMethod::TChi: return "tchi";
        case FlagMethod::Thm8: return "thm8";
    }
    return "";
}

CobordismPoly flag_class(int n, FlagMethod method, int threads) {
    if (n < 2) throw std::invalid_argument("flag manifolds need n >= 2");
    int m = n * (n - 1) / 2;
    CobordismPoly cls(generator_arena());
    switch (method) {
        case FlagMethod::CorL:
            for (const auto& [e, sign] : staircase_orbit(n)) {
                CobordismPoly p = flag_P_polynomial(n, e);
                if (sign > 0)
                    cls += p;
                else
                    cls -= p;
            }
            return cls;
        case FlagMethod::TChi: {
            const SeriesPoly& prod = flag_product(n, m, n - 1);
            Exponents delta = padded(staircase_monomial(n).leading().first, n);
            std::vector<Permutation> perms = permutations(n);
            std::vector<CobordismPoly> parts(perms.size());
            parallel_for(perms.size(), threads, [&](std::size_t i) {
                parts[i] = permute_variables_generic(prod, perms[i]).coefficient(delta);
                if (permutation_sign(perms[i]) < 0) parts[i] = -parts[i];
            });
            for (const auto& p : parts) cls += p;
            return cls;
        }
        case FlagMethod::Thm8: {
            if (n < 4) throw std::invalid_argument("the odd-factor formula needs n >= 4");
            std::vector<RootFactor> factors;
            for (auto r : all_roots(n)) {
                if ((r.i == 0 && r.j == 1) || (r.i == n - 2 && r.j == n - 1)) r.kind = FactorKind::Odd;
                factors.push_back(r);
            }
            SeriesPoly top = root_product(n, factors, m, -1).homogeneous_part(m);
            return constant_of(operator_L(top, n, threads), "L of the odd-factor product");
        }
    }
    return cls;
}

GrassmannMethod parse_grassmann_method(std::string_view name) {
    if (name == "L" || name == "corL" || name == "default") return GrassmannMethod::L;
    if (name == "Q") return GrassmannMethod::Q;
    throw ParseError("unknown Grassmann method '" + std::string(name) + "' (expected L or Q)");
}

CobordismPoly grassmann_class(int q, int l, GrassmannMethod method, int threads) {
    if (q < 1 || l < 1) throw std::invalid_argument("Grassmann blocks must be positive");
    int n = q + l;
    Rational norm = 1 / (factorial(q) * factorial(l));
    if (method == GrassmannMethod::L) {
        CobordismPoly c = constant_of(operator_L(grassmann_numerator(q, l), n, threads), "L of the Grassmann product");
        return c.scaled(norm);
    }
    CobordismPoly cls(generator_arena());
    for (const auto& [e, sign] : staircase_orbit(n)) {
        CobordismPoly p = grassmann_Q_polynomial(q, l, e);
        if (sign > 0)
            cls += p;
        else
            cls -= p;
    }
    return cls.scaled(norm);
}

bool FlagVanishingReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const FlagCheck& c) { return c.ok; });
}

FlagVanishingReport flag_vanishing_checks(int n, int threads) {
    if (n < 2 || n > 5) throw std::invalid_argument("flag checks are tabulated for 2 <= n <= 5");
    FlagVanishingReport report;
    report.n = n;
    int m = n * (n - 1) / 2;
    CobordismPoly cls = flag_class(n, FlagMethod::CorL, threads);
    SNumbers s = s_numbers_from_class(cls, m);

    {
        ArenaPtr x = geometric_arena(n);
        MultiPoly sum(x);
        for (const auto& r : all_roots(n))
            sum += operator_L((MultiPoly::variable(x, r.i) - MultiPoly::variable(x, r.j)).pow(m), n, threads);
        OmegaIndex top(m, 0);
        top[m - 1] = 1;
        Integer from_class = s.at(top);
        Integer expected = n == 2 ? 2 : n == 3 ? -6 : 0;
        bool ok = sum.is_constant() && sum.constant_term() == Rational(from_class) && from_class == expected;
        std::ostringstream d;
        d << "s_" << m << " = " << from_class << " (sum of L(x_i - x_j)^" << m << " = " << to_text(sum) << ")";
        report.checks.push_back({"s_m", ok, d.str()});
    }

    {
        int forced = 0, bad = 0;
        int cor9_forced = 0, cor9_bad = 0;
        for (const auto& [omega, v] : s) {
            bool cor8 = false;
            for (int k = 2 * n - 3 + 1; k <= m; ++k)
                if (omega[k - 1]) cor8 = true;
            if (cor8) {
                ++forced;
                if (v != 0) ++bad;
                continue;
            }
            std::vector<int> sizes;
            for (int k = m; k >= 1; --k)
                if (omega[k - 1]) sizes.push_back(k);
            bool cor9 = false;
            for (int l = 1; 2 * l <= n && l <= static_cast<int>(sizes.size()); ++l) {
                int sum = std::accumulate(sizes.begin(), sizes.begin() + l, 0);
                if (sum > 2 * l * n - 2 * l * l - l) cor9 = true;
            }
            if (cor9) {
                ++cor9_forced;
                if (v != 0) ++cor9_bad;
            }
        }
        report.checks.push_back({"part above 2n-3", bad == 0,
                                 std::to_string(forced) + " forced zeros, " + std::to_string(bad) + " violations"});
        report.checks.push_back({"large distinct parts", cor9_bad == 0,
                                 std::to_string(cor9_forced) + " forced zeros, " + std::to_string(cor9_bad) +
                                     " violations"});
    }

    {
        ChernNumberTable c = s_to_chern(s, m);
        int odd = 0;
        for (const auto& [xi, v] : c)
            if (mpz_odd_p(v.get_mpz_t())) ++odd;
        report.checks.push_back({"even Chern numbers", odd == 0,
                                 std::to_string(c.size()) + " Chern numbers, " + std::to_string(odd) + " odd"});
    }

    if (n % 4 == 0 || n % 4 == 1) {
        int forced = 0, bad = 0;
        for (const auto& [omega, v] : s) {
            bool even_only = true;
            for (int k = 1; k <= m; k += 2)
                if (omega[k - 1]) even_only = false;
            if (!even_only) continue;
            ++forced;
            if (v != 0) ++bad;
        }
        report.checks.push_back({"even parts only", bad == 0,
                                 std::to_string(forced) + " forced zeros, " + std::to_string(bad) + " violations"});
    }
    return report;
}

}  // namespace torigen
