#include "torigen/render.hpp"

#include <cctype>

namespace torigen {

std::string to_string(const Rational& r) {
    return r.get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: '" + s + "'");
    }
}

std::string monomial_text(const Exponents& e, const ArenaPtr& arena) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!out.empty()) out += '*';
        out += arena ? arena->name(static_cast<int>(i)) : "?";
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

namespace {

template <class C>
std::string scalar_poly_text(const Poly<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool neg = sgn(c) < 0;
        C mag = neg ? C(-c) : c;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono = monomial_text(e, p.arena());
        if (mono.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += mono;
        }
    }
    return out;
}

std::vector<std::pair<const Exponents*, const CobordismPoly*>> ascending_terms(const Poly<CobordismPoly>& p) {
    std::vector<std::pair<const Exponents*, const CobordismPoly*>> terms;
    for (const auto& [e, c] : p.terms()) terms.emplace_back(&e, &c);
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return total_degree(*x.first) < total_degree(*y.first);
    });
    return terms;
}

nlohmann::json exponents_json(const Exponents& e, const ArenaPtr& arena) {
    if (arena && !arena->open()) return padded(e, static_cast<std::size_t>(arena->arity()));
    return e;
}

Exponents exponents_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("exponents must be an array");
    Exponents e;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<int>() < 0) throw ParseError("bad exponent");
        e.push_back(v.get<int>());
    }
    return e;
}

}  // namespace

std::string to_text(const MultiPoly& p) {
    return scalar_poly_text(p);
}

std::string to_text(const IntPoly& p) {
    return scalar_poly_text(p);
}

std::string to_text(const Poly<CobordismPoly>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : ascending_terms(p)) {
        if (!out.empty()) out += " + ";
        out += "(" + to_text(*c) + ")";
        std::string mono = monomial_text(*e, p.arena());
        if (!mono.empty()) out += "*" + mono;
    }
    return out;
}

std::string to_text(const GradedSeries& s) {
    return to_text(s.poly()) + " + O(" + std::to_string(s.order() + 1) + ")";
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const ArenaPtr& arena) : s_(text), arena_(arena) {}

    MultiPoly parse() {
        MultiPoly result(arena_);
        skip();
        if (pos_ == s_.size()) throw ParseError("empty polynomial text");
        bool first = true;
        while (true) {
            skip();
            if (pos_ == s_.size()) break;
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw error("expected '+' or '-'");
            }
            first = false;
            MultiPoly t = term();
            if (sign < 0) t = -t;
            result += t;
        }
        return result;
    }

private:
    ParseError error(const std::string& what) const {
        return ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    MultiPoly term() {
        Rational coeff = 1;
        Exponents e;
        while (true) {
            skip();
            if (pos_ == s_.size()) throw error("unexpected end");
            char ch = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                coeff *= number();
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::size_t start = pos_;
                while (pos_ < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                    ++pos_;
                std::string_view name = s_.substr(start, pos_ - start);
                int idx = arena_ ? arena_->index_of(name) : -1;
                if (idx < 0) throw error("unknown variable '" + std::string(name) + "'");
                int power = 1;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    skip();
                    power = static_cast<int>(integer().get_si());
                }
                if (static_cast<int>(e.size()) <= idx) e.resize(idx + 1, 0);
                e[idx] += power;
            } else {
                throw error("unexpected character");
            }
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return MultiPoly::monomial(arena_, e, coeff);
    }
    Integer integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw error("expected digits");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }
    Rational number() {
        Integer num = integer();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip();
            Integer den = integer();
            if (den == 0) throw error("zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    std::string_view s_;
    ArenaPtr arena_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const ArenaPtr& arena) {
    return PolyParser(text, arena).parse();
}

nlohmann::json to_json(const MultiPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back({{"exponents", exponents_json(e, p.arena())}, {"coefficient", to_string(c)}});
    return out;
}

MultiPoly poly_from_json(const nlohmann::json& j, const ArenaPtr& arena) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
    MultiPoly p(arena);
    for (const auto& t : j) {
        if (!t.contains("exponents") || !t.contains("coefficient") || !t["coefficient"].is_string())
            throw ParseError("polynomial term needs exponents and a string coefficient");
        p.add_term(exponents_from_json(t["exponents"]), parse_rational(t["coefficient"].get<std::string>()));
    }
    return p;
}

nlohmann::json to_json(const GradedSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : ascending_terms(s.poly()))
        terms.push_back({{"exponents", exponents_json(*e, s.arena())}, {"coefficient", to_json(*c)}});
    return {{"order", s.order()}, {"terms", terms}};
}

GradedSeries series_from_json(const nlohmann::json& j, const ArenaPtr& arena, const ArenaPtr& coeff_arena) {
    if (!j.is_object() || !j.contains("order") || !j.contains("terms"))
        throw ParseError("series JSON needs order and terms");
    Poly<CobordismPoly> p(arena);
    for (const auto& t : j["terms"])
        p.add_term(exponents_from_json(t.at("exponents")), poly_from_json(t.at("coefficient"), coeff_arena));
    return GradedSeries(p, j["order"].get<int>());
}

}  // namespace torigen
