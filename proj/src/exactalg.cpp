#include "torigen/exactalg.hpp"

#include <mutex>

namespace torigen {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

void trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponents trimmed(Exponents e) {
    trim(e);
    return e;
}

Exponents padded(const Exponents& e, std::size_t n) {
    Exponents r = e;
    if (r.size() < n) r.resize(n, 0);
    return r;
}

bool divides(const Exponents& a, const Exponents& b) {
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    const Exponents& longer = a.size() >= b.size() ? a : b;
    const Exponents& shorter = a.size() >= b.size() ? b : a;
    Exponents r = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i) r[i] += shorter[i];
    return r;
}

Exponents sub_exponents(const Exponents& a, const Exponents& b) {
    Exponents r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        if (x != y) return x > y;
    }
    return false;
}

std::shared_ptr<const Arena> Arena::fixed(std::string prefix, int arity) {
    auto a = std::shared_ptr<Arena>(new Arena());
    a->prefix_ = std::move(prefix);
    a->arity_ = arity;
    return a;
}

std::shared_ptr<const Arena> Arena::named(std::vector<std::string> names) {
    auto a = std::shared_ptr<Arena>(new Arena());
    a->arity_ = static_cast<int>(names.size());
    a->names_ = std::move(names);
    return a;
}

std::shared_ptr<const Arena> Arena::family(std::string prefix) {
    auto a = std::shared_ptr<Arena>(new Arena());
    a->prefix_ = std::move(prefix);
    a->open_ = true;
    return a;
}

std::string Arena::name(int index) const {
    if (!names_.empty()) return names_.at(index);
    return prefix_ + std::to_string(index + 1);
}

int Arena::index_of(std::string_view name) const {
    if (!names_.empty()) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }
    if (name.size() <= prefix_.size() || name.substr(0, prefix_.size()) != prefix_) return -1;
    int idx = 0;
    for (char ch : name.substr(prefix_.size())) {
        if (ch < '0' || ch > '9') return -1;
        idx = idx * 10 + (ch - '0');
        if (idx > 1000000) return -1;
    }
    if (idx < 1 || (!open_ && idx > arity_)) return -1;
    return idx - 1;
}

bool Arena::operator==(const Arena& other) const {
    return open_ == other.open_ && arity_ == other.arity_ && prefix_ == other.prefix_ &&
           names_ == other.names_;
}

ArenaPtr generator_arena() {
    static const ArenaPtr a = Arena::family("a");
    return a;
}

ArenaPtr log_generator_arena() {
    static const ArenaPtr b = Arena::family("b");
    return b;
}

ArenaPtr geometric_arena(int k) {
    static std::mutex m;
    static std::map<int, ArenaPtr> cache;
    std::lock_guard lock(m);
    auto& slot = cache[k];
    if (!slot) slot = Arena::fixed("x", k);
    return slot;
}

ArenaPtr unify_arenas(const ArenaPtr& a, const ArenaPtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (*a != *b) throw ArenaMismatch("operands live in different variable arenas");
    return a;
}

int generator_weight(const Exponents& e) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
    return w;
}

bool is_homogeneous_weight(const CobordismPoly& p, int w) {
    for (const auto& [e, c] : p.terms())
        if (generator_weight(e) != w) return false;
    return true;
}

bool has_integer_coefficients(const CobordismPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c.get_den() != 1) return false;
    return true;
}

CobordismPoly generator(int i, ArenaPtr arena) {
    if (!arena) arena = generator_arena();
    return CobordismPoly::variable(std::move(arena), i - 1);
}

MultiPoly to_rational(const IntPoly& p) {
    MultiPoly r(p.arena());
    for (const auto& [e, c] : p.terms()) r.add_term(e, Rational(c));
    return r;
}

GradedSeries::GradedSeries(Poly<CobordismPoly> poly, int order)
    : poly_(poly.truncated(order)), order_(order) {}

GradedSeries GradedSeries::homogeneous_part(int d) const {
    return GradedSeries(poly_.homogeneous_part(d), order_);
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    if (order_ != o.order_) throw ArenaMismatch("series truncation orders differ");
    poly_ += o.poly_;
    return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    if (a.order_ != b.order_) throw ArenaMismatch("series truncation orders differ");
    return GradedSeries(Poly<CobordismPoly>::multiply(a.poly_, b.poly_, a.order_), a.order_);
}

GradedSeries mul(const GradedSeries& a, const GradedSeries& b) {
    return a * b;
}

GradedSeries substitute(const GradedSeries& s, const std::vector<Poly<CobordismPoly>>& images) {
    return GradedSeries(substitute(s.poly(), images, s.order()), s.order());
}

}  // namespace torigen
