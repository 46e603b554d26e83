#include "torigen/fgl.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>

namespace torigen {

ArenaPtr series_arena() {
    static const ArenaPtr a = Arena::fixed("u", 1);
    return a;
}

ArenaPtr bivariate_arena() {
    static const ArenaPtr a = Arena::named({"u", "v"});
    return a;
}

ArenaPtr bracket_arena(int k) {
    return Arena::fixed("u", k);
}

namespace {

CoeffSeries var(const ArenaPtr& arena, int i) {
    return CoeffSeries::variable(arena, i);
}

CobordismPoly constant(const Rational& c) {
    return CobordismPoly(nullptr, c);
}

// Composes a univariate series with an image series.
CoeffSeries compose(const CoeffSeries& outer, const CoeffSeries& inner, int order) {
    return substitute(outer, std::vector<CoeffSeries>{inner}, order);
}

CoeffSeries univariate_to(const CoeffSeries& s, const ArenaPtr& arena, int var_index, int order) {
    return compose(s, CoeffSeries::variable(arena, var_index), order);
}

}  // namespace

CoeffSeries log_series(int order) {
    CoeffSeries g = var(series_arena(), 0);
    for (int n = 1; n + 1 <= order; ++n) g.add_term(Exponents{n + 1}, generator(n, log_generator_arena()));
    return g;
}

CoeffSeries f_series(int order, ArenaPtr arena) {
    if (!arena) arena = series_arena();
    CoeffSeries f(arena, constant(1));
    for (int i = 1; i <= order; ++i) f.add_term(Exponents{i}, generator(i, generator_arena()));
    return f;
}

CoeffSeries fgl_addition(int order) {
    CoeffSeries g = log_series(order);
    CoeffSeries ginv = reverse_series(g, order);
    CoeffSeries sum = univariate_to(g, bivariate_arena(), 0, order) + univariate_to(g, bivariate_arena(), 1, order);
    return compose(ginv, sum, order);
}

CoeffSeries power_system(int w, int order) {
    CoeffSeries g = log_series(order);
    CoeffSeries ginv = reverse_series(g, order);
    return compose(ginv, g.scaled(Rational(w)), order);
}

CoeffSeries formal_inverse(int order) {
    CoeffSeries F = fgl_addition(order);
    CoeffSeries u = var(series_arena(), 0);
    CoeffSeries inv = -u;
    for (int k = 2; k <= order; ++k) {
        CoeffSeries val = substitute(F, std::vector<CoeffSeries>{u, inv}, k);
        CobordismPoly c = val.coefficient(Exponents{k});
        if (!c.is_zero()) inv.add_term(Exponents{k}, -c);
    }
    return inv;
}

CoeffSeries power_system_recursive(int w, int order) {
    CoeffSeries F = fgl_addition(order);
    CoeffSeries u = var(series_arena(), 0);
    CoeffSeries step = w >= 0 ? u : formal_inverse(order);
    CoeffSeries acc(series_arena());
    for (int i = 0; i < std::abs(w); ++i) acc = substitute(F, std::vector<CoeffSeries>{step, acc}, order);
    return acc;
}

CoeffSeries multi_bracket(const Weight& lambda, int order) {
    int k = static_cast<int>(lambda.size());
    if (k < 1) throw std::invalid_argument("weight must have at least one coordinate");
    ArenaPtr arena = bracket_arena(k);
    CoeffSeries F = fgl_addition(order);
    CoeffSeries acc = univariate_to(power_system(lambda[0], order), arena, 0, order);
    for (int l = 1; l < k; ++l) {
        CoeffSeries term = univariate_to(power_system(lambda[l], order), arena, l, order);
        acc = substitute(F, std::vector<CoeffSeries>{acc, term}, order);
    }
    return acc;
}

CoeffSeries multi_bracket_closed(const Weight& lambda, int order) {
    int k = static_cast<int>(lambda.size());
    ArenaPtr arena = bracket_arena(k);
    CoeffSeries g = log_series(order);
    CoeffSeries sum(arena);
    for (int l = 0; l < k; ++l) sum += univariate_to(g, arena, l, order).scaled(Rational(lambda[l]));
    return compose(reverse_series(g, order), sum, order);
}

GradedSeries chern_dold_of_bracket(const Weight& lambda, int order) {
    bool zero = std::all_of(lambda.begin(), lambda.end(), [](int c) { return c == 0; });
    if (zero) throw ZeroWeight("the zero weight has no Chern-Dold image");
    int k = static_cast<int>(lambda.size());
    ArenaPtr x = geometric_arena(k);
    CoeffSeries s = var(series_arena(), 0);
    CoeffSeries h = CoeffSeries::multiply(s, reciprocal_series(f_series(order), order), order);
    MultiPoly form = linear_form(lambda, x);
    CoeffSeries image = form.map_coefficients([](const Rational& c) { return constant(c); });
    return GradedSeries(compose(h, image, order), order);
}

namespace {

struct Bridge {
    int order = 0;
    std::vector<CobordismPoly> b_of_a;  // index n -> b_n
    std::vector<CobordismPoly> a_of_b;  // index n -> a_n
};

Bridge build_bridge(int order) {
    Bridge br;
    br.order = order;
    CoeffSeries s = var(series_arena(), 0);
    CoeffSeries h = CoeffSeries::multiply(s, reciprocal_series(f_series(order + 1), order + 1), order + 1);
    CoeffSeries g = reverse_series(h, order + 1);
    br.b_of_a.push_back(CobordismPoly());
    for (int n = 1; n <= order; ++n) br.b_of_a.push_back(g.coefficient(Exponents{n + 1}));

    CoeffSeries ginv = reverse_series(log_series(order + 1), order + 1);
    CoeffSeries psi(series_arena());
    for (const auto& [e, c] : ginv.terms()) psi.add_term(Exponents{e.at(0) - 1}, c);
    CoeffSeries f = reciprocal_series(psi, order);
    br.a_of_b.push_back(CobordismPoly());
    for (int n = 1; n <= order; ++n) br.a_of_b.push_back(f.coefficient(Exponents{n}));
    return br;
}

const Bridge& bridge(int n) {
    // Grows monotonically; earlier bridges stay alive for readers holding references.
    static std::shared_mutex mutex;
    static std::vector<std::unique_ptr<Bridge>> built;
    {
        std::shared_lock lock(mutex);
        if (!built.empty() && built.back()->order >= n) return *built.back();
    }
    std::unique_lock lock(mutex);
    if (built.empty() || built.back()->order < n)
        built.push_back(std::make_unique<Bridge>(build_bridge(std::max(n, 8))));
    return *built.back();
}

CobordismPoly rewrite(const CobordismPoly& p, bool b_to_a) {
    int len = 0;
    for (const auto& [e, c] : p.terms()) len = std::max(len, static_cast<int>(e.size()));
    const Bridge& br = bridge(len);
    std::vector<CobordismPoly> images;
    for (int i = 1; i <= len; ++i) images.push_back(b_to_a ? br.b_of_a[i] : br.a_of_b[i]);
    CobordismPoly r = substitute(p, images);
    r.set_arena(b_to_a ? generator_arena() : log_generator_arena());
    return r;
}

}  // namespace

CobordismPoly b_in_terms_of_a(int n) {
    return bridge(n).b_of_a.at(n);
}

CobordismPoly a_in_terms_of_b(int n) {
    return bridge(n).a_of_b.at(n);
}

CobordismPoly rewrite_b_to_a(const CobordismPoly& p) {
    return rewrite(p, true);
}

CobordismPoly rewrite_a_to_b(const CobordismPoly& p) {
    return rewrite(p, false);
}

CoeffSeries rewrite_b_to_a(const CoeffSeries& s) {
    return s.map_coefficients([](const CobordismPoly& c) { return rewrite_b_to_a(c); });
}

int default_fgl_order(int complex_dimension) {
    return complex_dimension + 1;
}

}  // namespace torigen
