#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torigen/errors.hpp"

namespace torigen {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponent vectors are stored with trailing zeros removed, so equal monomials
// compare equal regardless of the arena arity.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
void trim(Exponents& e);
Exponents trimmed(Exponents e);
Exponents padded(const Exponents& e, std::size_t n);
bool divides(const Exponents& a, const Exponents& b);
Exponents add_exponents(const Exponents& a, const Exponents& b);
Exponents sub_exponents(const Exponents& a, const Exponents& b);

struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Variable naming scope. Fixed arenas have a known arity (x1..xk); open
// families (a1, a2, ...) accept any number of generators.
class Arena {
public:
    static std::shared_ptr<const Arena> fixed(std::string prefix, int arity);
    static std::shared_ptr<const Arena> named(std::vector<std::string> names);
    static std::shared_ptr<const Arena> family(std::string prefix);

    bool open() const { return open_; }
    int arity() const { return arity_; }
    const std::string& prefix() const { return prefix_; }
    std::string name(int index) const;
    int index_of(std::string_view name) const;

    bool operator==(const Arena& other) const;
    bool operator!=(const Arena& other) const { return !(*this == other); }

private:
    Arena() = default;
    std::string prefix_;
    std::vector<std::string> names_;
    bool open_ = false;
    int arity_ = 0;
};

using ArenaPtr = std::shared_ptr<const Arena>;

ArenaPtr generator_arena();      // a1, a2, ...
ArenaPtr log_generator_arena();  // b1, b2, ...
ArenaPtr geometric_arena(int k); // x1..xk

// Returns the common arena of two operands; a null arena marks a bare
// constant that adopts whatever it is combined with.
ArenaPtr unify_arenas(const ArenaPtr& a, const ArenaPtr& b);

template <class C>
class Poly;

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& c) { return sgn(c) == 0; }
};

template <>
struct CoeffTraits<Integer> {
    static Integer zero() { return Integer(0); }
    static Integer one() { return Integer(1); }
    static bool is_zero(const Integer& c) { return sgn(c) == 0; }
};

template <class C>
struct CoeffTraits<Poly<C>> {
    static Poly<C> zero() { return Poly<C>(); }
    static Poly<C> one() { return Poly<C>(nullptr, CoeffTraits<C>::one()); }
    static bool is_zero(const Poly<C>& c) { return c.is_zero(); }
};

inline Rational scale_coeff(const Rational& c, const Rational& s) { return Rational(c * s); }
inline Integer scale_coeff(const Integer& c, const Integer& s) { return Integer(c * s); }
template <class C, class S>
Poly<C> scale_coeff(const Poly<C>& c, const S& s) { return c.scaled(s); }

template <class C>
class Poly {
public:
    using Coeff = C;
    using Terms = std::map<Exponents, C, GradedLexGreater>;
    using Term = typename Terms::value_type;

    Poly() = default;
    explicit Poly(ArenaPtr arena) : arena_(std::move(arena)) {}
    Poly(ArenaPtr arena, const C& constant) : arena_(std::move(arena)) { add_term({}, constant); }

    static Poly variable(ArenaPtr arena, int index) {
        Exponents e(static_cast<std::size_t>(index) + 1, 0);
        e[index] = 1;
        return monomial(std::move(arena), std::move(e), CoeffTraits<C>::one());
    }
    static Poly monomial(ArenaPtr arena, Exponents e, const C& c) {
        Poly p(std::move(arena));
        p.add_term(std::move(e), c);
        return p;
    }

    const ArenaPtr& arena() const { return arena_; }
    void set_arena(ArenaPtr arena) {
        arena_ = std::move(arena);
        for (const auto& [e, c] : terms_) check_fits(e);
    }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    C constant_term() const { return coefficient({}); }
    C coefficient(Exponents e) const {
        trim(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? CoeffTraits<C>::zero() : it->second;
    }
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }
    int min_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = total_degree(e);
            if (d < 0 || t < d) d = t;
        }
        return d;
    }
    const Term& leading() const { return *terms_.begin(); }

    void add_term(Exponents e, const C& c) {
        if (CoeffTraits<C>::is_zero(c)) return;
        trim(e);
        check_fits(e);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
            return;
        }
        it->second += c;
        if (CoeffTraits<C>::is_zero(it->second)) terms_.erase(it);
    }

    Poly homogeneous_part(int d) const {
        Poly r(arena_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) r.terms_.emplace(e, c);
        return r;
    }
    Poly truncated(int max_degree) const {
        if (max_degree < 0) return *this;
        Poly r(arena_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) <= max_degree) r.terms_.emplace(e, c);
        return r;
    }

    template <class S>
    Poly scaled(const S& s) const {
        Poly r(arena_);
        for (const auto& [e, c] : terms_) r.add_term(e, scale_coeff(c, s));
        return r;
    }
    template <class F>
    auto map_coefficients(F&& f) const {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        Poly<D> r(arena_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    Poly& operator+=(const Poly& o) {
        arena_ = unify_arenas(arena_, o.arena_);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        arena_ = unify_arenas(arena_, o.arena_);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r(arena_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b, -1); }
    Poly& operator*=(const Poly& o) { return *this = multiply(*this, o, -1); }

    // Product with every term of total degree above max_degree dropped
    // (max_degree < 0 keeps everything).
    static Poly multiply(const Poly& a, const Poly& b, int max_degree) {
        Poly r(unify_arenas(a.arena_, b.arena_));
        if (a.is_zero() || b.is_zero()) return r;
        std::vector<int> db;
        db.reserve(b.terms_.size());
        for (const auto& [e, c] : b.terms_) db.push_back(total_degree(e));
        for (const auto& [ea, ca] : a.terms_) {
            int da = total_degree(ea);
            std::size_t k = 0;
            for (const auto& [eb, cb] : b.terms_) {
                if (max_degree >= 0 && da + db[k++] > max_degree) continue;
                r.add_term(add_exponents(ea, eb), C(ca * cb));
            }
        }
        return r;
    }

    Poly pow(int k, int max_degree = -1) const {
        Poly r(arena_, CoeffTraits<C>::one());
        Poly base = *this;
        while (k > 0) {
            if (k & 1) r = multiply(r, base, max_degree);
            k >>= 1;
            if (k) base = multiply(base, base, max_degree);
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        if (arena_ && o.arena_ && *arena_ != *o.arena_) return false;
        return terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void check_fits(const Exponents& e) const {
        if (arena_ && !arena_->open() && static_cast<int>(e.size()) > arena_->arity())
            throw ArenaMismatch("exponent vector longer than arena arity");
        if (!arena_ && !e.empty())
            throw ArenaMismatch("non-constant term without a variable arena");
    }

    ArenaPtr arena_;
    Terms terms_;
};

template <class C>
Poly<C> operator*(const Poly<C>& a, const C& c) {
    return a.scaled(c);
}

using MultiPoly = Poly<Rational>;
using IntPoly = Poly<Integer>;
// Polynomial in the cobordism generators a_i (or b_i), weight(a_i) = i.
using CobordismPoly = Poly<Rational>;

int generator_weight(const Exponents& e);
bool is_homogeneous_weight(const CobordismPoly& p, int w);
bool has_integer_coefficients(const CobordismPoly& p);
CobordismPoly generator(int i, ArenaPtr arena = nullptr);

MultiPoly to_rational(const IntPoly& p);

// Exact division. Throws NotDivisible when q does not divide p.
template <class C>
Poly<C> exact_div(const Poly<C>& p, const MultiPoly& q) {
    if (q.is_zero()) throw NotDivisible("division by the zero polynomial");
    ArenaPtr arena = unify_arenas(p.arena(), q.arena());
    Poly<C> quotient(arena);
    Poly<C> rest = p;
    const auto& [lq_e, lq_c] = q.leading();
    const Rational inv = 1 / lq_c;
    while (!rest.is_zero()) {
        const auto& [le, lc] = rest.leading();
        if (!divides(lq_e, le)) throw NotDivisible("remainder is not zero");
        Exponents shift = sub_exponents(le, lq_e);
        C c = scale_coeff(lc, inv);
        Poly<C> sub(arena);
        for (const auto& [e, qc] : q.terms()) sub.add_term(add_exponents(e, shift), scale_coeff(c, qc));
        rest -= sub;
        quotient.add_term(std::move(shift), c);
    }
    return quotient;
}

// Replaces variable i of p by images[i]; variables beyond images.size()
// must not occur. Terms above max_degree are dropped (max_degree < 0 keeps all).
template <class C>
Poly<C> substitute(const Poly<C>& p, const std::vector<Poly<C>>& images, int max_degree = -1) {
    ArenaPtr target;
    for (const auto& im : images) target = unify_arenas(target, im.arena());
    std::vector<std::vector<Poly<C>>> powers(images.size());
    auto power = [&](std::size_t i, int k) -> const Poly<C>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.emplace_back(target, CoeffTraits<C>::one());
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(Poly<C>::multiply(cache.back(), images[i], max_degree));
        return cache[k];
    };
    Poly<C> r(target);
    for (const auto& [e, c] : p.terms()) {
        if (e.size() > images.size()) throw ArenaMismatch("substitution leaves a variable unbound");
        Poly<C> term(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = Poly<C>::multiply(term, power(i, e[i]), max_degree);
        r += term;
    }
    return r;
}

// Partial substitution: unbound variables are kept as they are.
template <class C>
Poly<C> substitute(const Poly<C>& p, const std::map<int, Poly<C>>& bindings, int max_degree = -1) {
    int nvars = 0;
    for (const auto& [e, c] : p.terms()) nvars = std::max(nvars, static_cast<int>(e.size()));
    for (const auto& [i, im] : bindings) nvars = std::max(nvars, i + 1);
    std::vector<Poly<C>> images;
    for (int i = 0; i < nvars; ++i) {
        auto it = bindings.find(i);
        images.push_back(it != bindings.end() ? it->second : Poly<C>::variable(p.arena(), i));
    }
    return substitute(p, images, max_degree);
}

template <class C>
C evaluate(const Poly<C>& p, const std::vector<Rational>& point) {
    C r = CoeffTraits<C>::zero();
    for (const auto& [e, c] : p.terms()) {
        if (e.size() > point.size()) throw ArenaMismatch("evaluation point too short");
        Rational m = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            Rational f;
            mpz_pow_ui(f.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
            mpz_pow_ui(f.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
            m *= f;
        }
        r += scale_coeff(c, m);
    }
    return r;
}

// Univariate helpers: the series variable is variable 0 of the arena.
template <class C>
C series_coefficient(const Poly<C>& h, int k) {
    return h.coefficient(Exponents{k});
}

// 1/h for h with constant term 1, truncated at degree order.
template <class C>
Poly<C> reciprocal_series(const Poly<C>& h, int order) {
    if (h.constant_term() != CoeffTraits<C>::one())
        throw BadLeadingTerm("reciprocal needs constant term 1");
    std::vector<C> g{CoeffTraits<C>::one()};
    for (int k = 1; k <= order; ++k) {
        C acc = CoeffTraits<C>::zero();
        for (int i = 1; i <= k; ++i) acc += C(series_coefficient(h, i) * g[k - i]);
        g.push_back(-acc);
    }
    Poly<C> r(h.arena());
    for (int k = 0; k <= order; ++k) r.add_term(Exponents{k}, g[k]);
    return r;
}

// Compositional inverse g of h (h(0)=0, h'(0)=1): h(g(y)) = y mod y^{order+1}.
template <class C>
Poly<C> reverse_series(const Poly<C>& h, int order) {
    if (!CoeffTraits<C>::is_zero(h.constant_term()) || series_coefficient(h, 1) != CoeffTraits<C>::one())
        throw BadLeadingTerm("series must start y + ...");
    for (const auto& [e, c] : h.terms())
        if (e.size() > 1) throw BadLeadingTerm("series must be univariate");
    Poly<C> y = Poly<C>::variable(h.arena(), 0);
    Poly<C> g = y;
    for (int k = 2; k <= order; ++k) {
        Poly<C> hg = substitute(h, std::vector<Poly<C>>{g}, k);
        C c = series_coefficient(hg, k);
        if (!CoeffTraits<C>::is_zero(c)) g.add_term(Exponents{k}, -c);
    }
    return g.truncated(order);
}

// Truncated series in geometric variables with cobordism coefficients.
class GradedSeries {
public:
    GradedSeries() = default;
    GradedSeries(Poly<CobordismPoly> poly, int order);

    const Poly<CobordismPoly>& poly() const { return poly_; }
    int order() const { return order_; }
    const ArenaPtr& arena() const { return poly_.arena(); }
    CobordismPoly coefficient(const Exponents& e) const { return poly_.coefficient(e); }
    GradedSeries homogeneous_part(int d) const;

    GradedSeries& operator+=(const GradedSeries& o);
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    bool operator==(const GradedSeries& o) const { return order_ == o.order_ && poly_ == o.poly_; }
    bool operator!=(const GradedSeries& o) const { return !(*this == o); }

private:
    Poly<CobordismPoly> poly_;
    int order_ = 0;
};

GradedSeries mul(const GradedSeries& a, const GradedSeries& b);
GradedSeries substitute(const GradedSeries& s, const std::vector<Poly<CobordismPoly>>& images);

}  // namespace torigen
