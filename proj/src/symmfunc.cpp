#include "torigen/symmfunc.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "torigen/diskcache.hpp"
#include "torigen/render.hpp"

namespace torigen {

int omega_weight(const OmegaIndex& omega) {
    int w = 0;
    for (std::size_t k = 0; k < omega.size(); ++k) w += static_cast<int>(k + 1) * omega[k];
    return w;
}

Partition omega_to_partition(const OmegaIndex& omega) {
    Partition p;
    for (int k = static_cast<int>(omega.size()); k >= 1; --k)
        for (int r = 0; r < omega[k - 1]; ++r) p.push_back(k);
    return p;
}

OmegaIndex partition_to_omega(const Partition& lambda, int length) {
    OmegaIndex omega(length, 0);
    for (int part : lambda) {
        if (part < 1 || part > length) throw std::invalid_argument("part does not fit omega length");
        ++omega[part - 1];
    }
    return omega;
}

namespace {

void partitions_desc(int n, int max_part, Partition& prefix, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_desc(n - k, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition prefix;
    partitions_desc(n, n, prefix, out);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<OmegaIndex> omegas(int weight, int length) {
    std::vector<OmegaIndex> out;
    for (const auto& p : partitions(weight)) {
        if (!p.empty() && p.front() > length) continue;
        out.push_back(partition_to_omega(p, length));
    }
    return out;
}

Exponents partition_exponents(const Partition& lambda, int n) {
    Exponents e(lambda.begin(), lambda.end());
    if (static_cast<int>(e.size()) > n) throw std::invalid_argument("partition longer than arity");
    return e;
}

std::vector<Permutation> permutations(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int permutation_sign(const Permutation& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

Permutation inverse(const Permutation& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

MultiPoly permute_variables(const MultiPoly& p, const Permutation& sigma) {
    return permute_variables_generic(p, sigma);
}

MultiPoly orbit_monomial(const Exponents& xi, int n, ArenaPtr arena) {
    if (!arena) arena = geometric_arena(n);
    if (static_cast<int>(xi.size()) > n) throw std::invalid_argument("exponent vector longer than arity");
    Exponents e = padded(xi, n);
    std::sort(e.begin(), e.end());
    MultiPoly r(arena);
    do {
        r.add_term(e, Rational(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

MultiPoly elementary(int k, int n, ArenaPtr arena) {
    if (k < 0 || k > n) return MultiPoly(arena ? arena : geometric_arena(n));
    Exponents e(n, 0);
    std::fill(e.begin(), e.begin() + k, 1);
    return orbit_monomial(e, n, arena);
}

MultiPoly power_sum(int k, int n, ArenaPtr arena) {
    return orbit_monomial(Exponents{k}, n, arena);
}

MultiPoly vandermonde_range(int first, int last, int n, ArenaPtr arena) {
    if (!arena) arena = geometric_arena(n);
    MultiPoly r(arena, Rational(1));
    for (int i = first; i <= last; ++i)
        for (int j = i + 1; j <= last; ++j)
            r *= MultiPoly::variable(arena, i - 1) - MultiPoly::variable(arena, j - 1);
    return r;
}

MultiPoly vandermonde(int n, ArenaPtr arena) {
    return vandermonde_range(1, n, n, std::move(arena));
}

MultiPoly antisymmetrize(const MultiPoly& p, int n) {
    MultiPoly r(p.arena());
    for (const auto& sigma : permutations(n)) {
        MultiPoly q = permute_variables(p, sigma);
        if (permutation_sign(sigma) < 0)
            r -= q;
        else
            r += q;
    }
    return r;
}

MultiPoly schur(const Partition& lambda, int n, ArenaPtr arena) {
    if (!arena) arena = geometric_arena(n);
    Exponents e = padded(partition_exponents(lambda, n), n);
    for (int i = 0; i < n; ++i) e[i] += n - 1 - i;
    MultiPoly alt = antisymmetrize(MultiPoly::monomial(arena, e, Rational(1)), n);
    return exact_div(alt, vandermonde(n, arena));
}

std::map<OmegaIndex, MultiPoly> f_omega_decomposition(int n, int nmax, ArenaPtr arena) {
    if (!arena) arena = Arena::fixed("t", n);
    ArenaPtr a = generator_arena();
    Poly<CobordismPoly> prod(arena, CoeffTraits<CobordismPoly>::one());
    for (int i = 0; i < n; ++i) {
        Poly<CobordismPoly> f(arena, CoeffTraits<CobordismPoly>::one());
        for (int k = 1; k <= nmax; ++k) {
            Exponents e(i + 1, 0);
            e[i] = k;
            f.add_term(e, generator(k, a));
        }
        prod = Poly<CobordismPoly>::multiply(prod, f, nmax);
    }
    std::map<OmegaIndex, MultiPoly> out;
    for (const auto& [te, coeff] : prod.terms()) {
        for (const auto& [ae, c] : coeff.terms()) {
            if (ae.empty()) continue;
            OmegaIndex omega = padded(ae, std::max<std::size_t>(ae.size(), nmax));
            omega.resize(nmax);
            auto [it, inserted] = out.try_emplace(omega, MultiPoly(arena));
            it->second.add_term(te, c);
        }
    }
    return out;
}

namespace {

class ElementaryProducts {
public:
    ElementaryProducts(int n, ArenaPtr arena) : n_(n), arena_(std::move(arena)) {
        for (int k = 0; k <= n; ++k) e_.push_back(elementary(k, n, arena_));
    }
    const MultiPoly& get(const Exponents& xi) {
        auto it = memo_.find(xi);
        if (it != memo_.end()) return it->second;
        MultiPoly r(arena_, Rational(1));
        for (std::size_t i = 0; i < xi.size(); ++i)
            if (xi[i]) r *= e_[i + 1].pow(xi[i]);
        return memo_.emplace(xi, std::move(r)).first->second;
    }

private:
    int n_;
    ArenaPtr arena_;
    std::vector<MultiPoly> e_;
    std::map<Exponents, MultiPoly> memo_;
};

std::map<Exponents, Integer> expand_in_elementary(const OmegaIndex& omega, ElementaryProducts& products) {
    int n = omega_weight(omega);
    MultiPoly rest = orbit_monomial(partition_exponents(omega_to_partition(omega), n), n);
    std::map<Exponents, Integer> row;
    while (!rest.is_zero()) {
        const auto& [lead, c] = rest.leading();
        Exponents mu = padded(lead, n);
        Exponents xi(n, 0);
        for (int i = 0; i < n; ++i) {
            xi[i] = mu[i] - (i + 1 < n ? mu[i + 1] : 0);
            if (xi[i] < 0) throw std::logic_error("leading monomial of a symmetric polynomial not decreasing");
        }
        if (c.get_den() != 1) throw std::logic_error("non-integral elementary coefficient");
        Integer coeff = c.get_num();
        rest -= products.get(xi).scaled(Rational(coeff));
        row[xi] += coeff;
    }
    return row;
}

// Number of 0-1 matrices with the given row and column sums.
class ZeroOneCounter {
public:
    Integer count(const Partition& rows, std::vector<int> cols) {
        std::sort(cols.begin(), cols.end(), std::greater<>());
        while (!cols.empty() && cols.back() == 0) cols.pop_back();
        return rec(rows, 0, cols);
    }

private:
    Integer rec(const Partition& rows, std::size_t r, const std::vector<int>& cols) {
        if (r == rows.size()) return cols.empty() ? Integer(1) : Integer(0);
        auto key = std::make_pair(r, cols);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        // Group columns by remaining capacity and choose how many to hit in each group.
        std::vector<std::pair<int, int>> groups;
        for (int c : cols) {
            if (!groups.empty() && groups.back().first == c)
                ++groups.back().second;
            else
                groups.emplace_back(c, 1);
        }
        Integer total = 0;
        std::vector<int> take(groups.size(), 0);
        std::function<void(std::size_t, int, Integer)> choose = [&](std::size_t g, int left, Integer ways) {
            if (g == groups.size()) {
                if (left) return;
                std::vector<int> next;
                for (std::size_t i = 0; i < groups.size(); ++i) {
                    for (int k = 0; k < take[i]; ++k) next.push_back(groups[i].first - 1);
                    for (int k = take[i]; k < groups[i].second; ++k) next.push_back(groups[i].first);
                }
                std::sort(next.begin(), next.end(), std::greater<>());
                while (!next.empty() && next.back() == 0) next.pop_back();
                total += ways * rec(rows, r + 1, next);
                return;
            }
            for (int t = 0; t <= std::min(left, groups[g].second); ++t) {
                take[g] = t;
                Integer b;
                mpz_bin_uiui(b.get_mpz_t(), groups[g].second, t);
                choose(g + 1, left - t, ways * b);
            }
            take[g] = 0;
        };
        choose(0, rows[r], Integer(1));
        memo_.emplace(key, total);
        return total;
    }

    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo_;
};

}  // namespace

// e_mu = sum_lambda N(mu, lambda) m_lambda with N counting 0-1 matrices; beta is
// the inverse of N, read row by row as m_lambda in the e basis.
BetaMatrix beta_by_counting(int n) {
    std::vector<Partition> parts = partitions(n);
    std::size_t d = parts.size();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(2 * d, Rational(0)));
    for (std::size_t mu = 0; mu < d; ++mu) {
        ZeroOneCounter counter;
        for (std::size_t la = 0; la < d; ++la) a[la][mu] = Rational(counter.count(parts[mu], parts[la]));
        a[mu][d + mu] = 1;
    }
    // a holds [N^T | I]; after reduction the right half is (N^{-1})^T.
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && sgn(a[pivot][col]) == 0) ++pivot;
        if (pivot == d) throw std::logic_error("elementary transition matrix is singular");
        std::swap(a[pivot], a[col]);
        Rational inv = 1 / a[col][col];
        for (auto& v : a[col]) v *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rational f = a[r][col];
            for (std::size_t k = 0; k < 2 * d; ++k) a[r][k] -= f * a[col][k];
        }
    }
    BetaMatrix m;
    for (std::size_t la = 0; la < d; ++la) {
        auto& row = m[partition_to_omega(parts[la], n)];
        for (std::size_t mu = 0; mu < d; ++mu) {
            Rational v = a[mu][d + la];
            if (sgn(v) == 0) continue;
            if (v.get_den() != 1) throw std::logic_error("non-integral elementary coefficient");
            row[partition_to_omega(parts[mu], n)] = v.get_num();
        }
    }
    return m;
}

namespace {

std::string beta_to_text(const BetaMatrix& m, int n) {
    ArenaPtr c = Arena::fixed("c", n);
    std::ostringstream out;
    for (const auto& [omega, row] : m) {
        MultiPoly p(c);
        for (const auto& [xi, v] : row) p.add_term(xi, Rational(v));
        for (std::size_t i = 0; i < omega.size(); ++i) out << (i ? "," : "") << omega[i];
        out << ": " << to_text(p) << "\n";
    }
    return out.str();
}

BetaMatrix beta_from_text(const std::string& text, int n) {
    ArenaPtr c = Arena::fixed("c", n);
    BetaMatrix m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("bad cached beta line");
        OmegaIndex omega;
        std::istringstream os(line.substr(0, colon));
        std::string tok;
        while (std::getline(os, tok, ',')) omega.push_back(std::stoi(tok));
        if (static_cast<int>(omega.size()) != n) throw ParseError("cached beta row has wrong length");
        MultiPoly p = parse_poly(line.substr(colon + 1), c);
        auto& row = m[omega];
        for (const auto& [xi, v] : p.terms()) {
            if (v.get_den() != 1) throw ParseError("cached beta entry not integral");
            row[padded(xi, n)] = v.get_num();
        }
    }
    return m;
}

}  // namespace

std::map<Exponents, Integer> monomial_to_elementary(const OmegaIndex& omega) {
    int n = omega_weight(omega);
    if (n <= 0) throw std::invalid_argument("omega must have positive weight");
    ElementaryProducts products(n, geometric_arena(n));
    return expand_in_elementary(omega, products);
}

const BetaMatrix& beta_matrix(int n) {
    static std::shared_mutex mutex;
    static std::map<int, BetaMatrix> cache;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::unique_lock lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    BetaMatrix m;
    std::string key = "beta_" + std::to_string(n);
    bool loaded = false;
    if (auto text = cache_read(key)) {
        m = beta_from_text(*text, n);
        loaded = m.size() == omegas(n, n).size();
    }
    if (!loaded) {
        m = beta_by_counting(n);
        cache_write(key, beta_to_text(m, n));
    }
    return cache.emplace(n, std::move(m)).first->second;
}

MultiPoly elementary_expansion(const std::map<Exponents, Integer>& row, int n, ArenaPtr arena) {
    if (!arena) arena = geometric_arena(n);
    ElementaryProducts products(n, arena);
    MultiPoly r(arena);
    for (const auto& [xi, v] : row) r += products.get(xi).scaled(Rational(v));
    return r;
}

}  // namespace torigen
