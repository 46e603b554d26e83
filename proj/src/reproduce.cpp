#include "torigen/reproduce.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "torigen/chern.hpp"
#include "torigen/divdiff.hpp"
#include "torigen/fgl.hpp"
#include "torigen/genus.hpp"
#include "torigen/render.hpp"
#include "torigen/stablex.hpp"

namespace torigen {

namespace {

std::string s_table_text(const SNumbers& s, int n) {
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (const auto& lambda : partitions(n)) {
        out << (first ? "" : ",") << s.at(partition_to_omega(lambda, n));
        first = false;
    }
    out << ")";
    return out.str();
}

std::string chern_text(const ChernNumberTable& c, int n) {
    std::ostringstream out;
    bool first = true;
    for (const auto& key : chern_keys(n)) {
        out << (first ? "" : ", ") << chern_label(key) << "=" << c.at(key);
        first = false;
    }
    return out.str();
}

CobordismPoly a_poly(const std::string& text, int factor = 1) {
    return parse_poly(text, generator_arena()).scaled(Rational(factor));
}

FixedPointData space_data(const std::string& descriptor, const std::string& structure = "standard") {
    return fixed_point_weights(with_structure(build_space(descriptor), structure));
}

std::string yes(bool b) {
    return b ? "true" : "false";
}

class Table {
public:
    Table(const std::set<int>& criteria) : criteria_(criteria) {}

    bool wants(int c) const { return criteria_.empty() || criteria_.count(c); }

    void add(int c, const std::string& name, const std::string& expected, const std::function<std::string()>& f) {
        ReproRow row{c, name, expected, "", false};
        try {
            row.actual = f();
            row.pass = row.actual == expected;
        } catch (const std::exception& e) {
            row.actual = std::string("error: ") + e.what();
        }
        rows_.push_back(std::move(row));
    }

    std::vector<ReproRow> rows() && { return std::move(rows_); }

private:
    std::set<int> criteria_;
    std::vector<ReproRow> rows_;
};

// The CP^3 example labels the fixed point w by the transposition (k 4) and
// lists the weights w(x_i - x_4), i = 1..3.
std::vector<std::vector<Weight>> cp3_reference_bases() {
    std::vector<std::vector<Weight>> bases;
    for (int k = 0; k < 4; ++k) {
        Permutation w{0, 1, 2, 3};
        if (k > 0) std::swap(w[k - 1], w[3]);
        std::vector<Weight> pt;
        for (int i = 0; i < 3; ++i) {
            Weight v(4, 0);
            v[w[i]] += 1;
            v[w[3]] -= 1;
            pt.push_back(v);
        }
        bases.push_back(pt);
    }
    return bases;
}

// For each of our (point, root): the reference (point, root) with the same line and the relative sign.
struct Cp3Map {
    std::vector<std::vector<std::tuple<int, int, int>>> to_ref;
    int point_of_ref[4] = {0, 0, 0, 0};
};

Cp3Map cp3_map(const FixedPointData& base) {
    auto ref = cp3_reference_bases();
    Cp3Map m;
    m.to_ref.resize(base.points.size());
    for (std::size_t p = 0; p < base.points.size(); ++p) {
        for (int k = 0; k < 4; ++k) {
            std::vector<std::tuple<int, int, int>> hits;
            for (std::size_t i = 0; i < base.points[p].weights.size(); ++i) {
                const Weight& w = base.points[p].weights[i];
                for (int j = 0; j < 3; ++j) {
                    if (ref[k][j] == w) hits.emplace_back(k, j, 1);
                    if (ref[k][j] == negated(w)) hits.emplace_back(k, j, -1);
                }
            }
            if (hits.size() == 3) {
                m.to_ref[p] = hits;
                m.point_of_ref[k] = static_cast<int>(p);
            }
        }
        if (m.to_ref[p].size() != 3) throw std::logic_error("CP3 fixed point does not match a reference point");
    }
    return m;
}

std::vector<std::vector<int>> to_reference(const Cp3Map& m, const SignAssignment& s) {
    std::vector<std::vector<int>> a(4, std::vector<int>(3, 0));
    for (std::size_t p = 0; p < s.a.size(); ++p)
        for (std::size_t i = 0; i < 3; ++i) {
            auto [k, j, sign] = m.to_ref[p][i];
            a[k][j] = s.a[p][i] * sign;
        }
    return a;
}

SignAssignment from_reference(const Cp3Map& m, const std::vector<std::vector<int>>& a, int epsilon) {
    SignAssignment s;
    s.epsilon = epsilon;
    s.a.assign(m.to_ref.size(), std::vector<int>(3, 1));
    for (std::size_t p = 0; p < m.to_ref.size(); ++p)
        for (std::size_t i = 0; i < 3; ++i) {
            auto [k, j, sign] = m.to_ref[p][i];
            s.a[p][i] = a[k][j] * sign;
        }
    return s;
}

bool cp3_relations(const std::vector<std::vector<int>>& a) {
    return a[0][0] == a[3][0] && a[3][0] == a[2][0] && a[0][1] == a[1][1] && a[1][1] == a[3][1] &&
           a[0][2] == a[1][2] && a[1][2] == a[2][2] && a[1][0] == a[2][1] && a[2][1] == a[3][2];
}

struct SpaceCase {
    std::string descriptor;
    std::string structure;
    int order;
};

std::vector<SpaceCase> property_spaces() {
    return {{"CP1", "standard", 6},         {"CP1", "conjugate", 6},
            {"CP2", "standard", 4},         {"CP3", "standard", 4},
            {"CP4", "standard", 3},         {"CP5", "standard", 2},
            {"U(3)/T3", "standard", 4},     {"U(3)/T3", "conjugate", 4},
            {"SU(3)/T2", "standard", 4},    {"U(4)/T4", "standard", 1},
            {"U(4)/U(2)xU(2)", "standard", 3}, {"U(4)/U(2)xU(2)", "conjugate", 3},
            {"U(5)/U(2)xU(3)", "standard", 1}, {"SU(4)/S(U(1)xU(1)xU(2))", "J1", 2},
            {"SU(4)/S(U(1)xU(1)xU(2))", "J2", 2}, {"SU(4)/S(U(1)xU(1)xU(2))", "J3", 2},
            {"G2/SU(3)", "J", 6}};
}

struct SpaceProperties {
    std::string label;
    bool vanishing = false, weyl = false, graded = false, euler = false, numeric = false, routes = false,
         chern_round_trip = false;
};

SpaceProperties check_space(const SpaceCase& c, int threads) {
    SpaceProperties r;
    r.label = c.descriptor + "[" + c.structure + "]";
    HomogeneousSpaceSpec spec = with_structure(build_space(c.descriptor), c.structure);
    FixedPointData fp = fixed_point_weights(spec);
    int n = fp.dimension();
    GradedSeries series = chern_character_of_genus(fp, c.order, threads);
    r.vanishing = verify_low_vanishing(fp, threads).ok;
    r.weyl = weyl_invariant(series, weyl_generators(spec));
    r.graded = weight_graded(series, n);
    SNumbers s = s_numbers(fp, threads);
    OmegaIndex top(n, 0);
    top[0] = n;
    r.euler = s.at(top) == spec.point_sign * euler_characteristic(spec);
    CobordismPoly cls = series.coefficient({});
    cls.set_arena(generator_arena());
    r.routes = class_from_s_numbers(s) == cls;
    std::mt19937_64 rng(std::hash<std::string>{}(r.label) & 0xffffffffu);
    std::uniform_int_distribution<long> dist(-60, 60);
    r.numeric = true;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Integer> point(fp.rank);
        for (;;) {
            for (auto& x : point) x = dist(rng);
            bool singular = false;
            for (const auto& pt : fp.points)
                for (const auto& w : pt.weights) {
                    Integer v = 0;
                    for (int l = 0; l < fp.rank; ++l) v += w[l] * point[l];
                    if (v == 0) singular = true;
                }
            if (!singular) break;
        }
        for (const auto& [omega, v] : s)
            if (s_number_numeric(fp, omega, point) != Rational(v)) r.numeric = false;
    }
    r.chern_round_trip = chern_to_s(s_to_chern(s, n), n) == s;
    return r;
}

std::string failing(const std::vector<SpaceProperties>& all, bool SpaceProperties::*field) {
    std::string bad;
    for (const auto& p : all)
        if (!(p.*field)) bad += (bad.empty() ? "" : ", ") + p.label;
    return bad.empty() ? "all " + std::to_string(all.size()) + " spaces" : "fails: " + bad;
}

bool fgl_axioms(int order) {
    CoeffSeries F = fgl_addition(order);
    ArenaPtr uv = bivariate_arena();
    CoeffSeries u = CoeffSeries::variable(uv, 0), v = CoeffSeries::variable(uv, 1);
    CoeffSeries zero(uv);
    bool unit = substitute(F, std::vector<CoeffSeries>{u, zero}, order) == u;
    bool comm = substitute(F, std::vector<CoeffSeries>{v, u}, order) == F;
    ArenaPtr three = bracket_arena(3);
    CoeffSeries x = CoeffSeries::variable(three, 0), y = CoeffSeries::variable(three, 1),
                z = CoeffSeries::variable(three, 2);
    CoeffSeries left = substitute(F, std::vector<CoeffSeries>{substitute(F, std::vector<CoeffSeries>{x, y}, order), z},
                                  order);
    CoeffSeries right = substitute(F, std::vector<CoeffSeries>{x, substitute(F, std::vector<CoeffSeries>{y, z}, order)},
                                   order);
    bool assoc = left == right;
    bool power = true;
    for (int w = -2; w <= 3; ++w)
        if (power_system(w, order) != power_system_recursive(w, order)) power = false;
    return unit && comm && assoc && power;
}

bool divdiff_identities() {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> coef(-5, 5), expo(0, 4);
    for (int n = 3; n <= 4; ++n) {
        ArenaPtr x = geometric_arena(n);
        for (int trial = 0; trial < 4; ++trial) {
            MultiPoly p(x);
            for (int t = 0; t < 6; ++t) {
                Exponents e(n);
                for (auto& v : e) v = expo(rng);
                p.add_term(e, Rational(coef(rng)));
            }
            for (int i = 1; i < n; ++i) {
                if (!divided_difference(i, divided_difference(i, p)).is_zero()) return false;
                if (i + 1 < n) {
                    MultiPoly a = apply_divided_differences({i, i + 1, i}, p);
                    MultiPoly b = apply_divided_differences({i + 1, i, i + 1}, p);
                    if (a != b) return false;
                }
            }
            std::vector<int> word;
            for (int k = 1; k < n; ++k)
                for (int i = k; i >= 1; --i) word.push_back(i);
            if (apply_divided_differences(word, p) != operator_L(p, n)) return false;
        }
    }
    return true;
}

bool chern_round_trips() {
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int n = 1; n <= 6; ++n) {
        ChernNumberTable c;
        for (const auto& key : chern_keys(n)) c[key] = dist(rng);
        SNumbers s = chern_to_s(c, n);
        if (s_to_chern(s, n) != c) return false;
        if (chern_to_s(s_to_chern(s, n), n) != s) return false;
    }
    return true;
}

}  // namespace

std::string criterion_title(int criterion) {
    switch (criterion) {
        case 1: return "CP1 class and series";
        case 2: return "U(3)/T3 by localization and operator L";
        case 3: return "Grassmannian G(4,2)";
        case 4: return "M10 with J1, J2, J3";
        case 5: return "S6 = G2/SU(3)";
        case 6: return "flag manifolds";
        case 7: return "projective spaces and CP3 stable structures";
        case 8: return "property suites";
    }
    return "unknown";
}

std::vector<ReproRow> reproduce_table(const std::set<int>& criteria, int threads) {
    Table t(criteria);

    if (t.wants(1)) {
        t.add(1, "CP1 class", "2*a1", [&] { return to_text(cobordism_class(space_data("CP1"), threads)); });
        t.add(1, "CP1 series through degree 6", "true", [&] {
            ArenaPtr x = geometric_arena(2);
            MultiPoly d = MultiPoly::variable(x, 0) - MultiPoly::variable(x, 1);
            Poly<CobordismPoly> expected(x);
            for (int k = 0; 2 * k <= 6; ++k) {
                CobordismPoly a = generator(2 * k + 1, generator_arena()).scaled(Rational(2));
                MultiPoly power = d.pow(2 * k);
                for (const auto& [e, c] : power.terms()) expected.add_term(e, a.scaled(c));
            }
            return yes(chern_character_of_genus(space_data("CP1"), 6, threads).poly() == expected);
        });
    }

    if (t.wants(2)) {
        const std::string cls = "6*a1^3 + 6*a1*a2 - 6*a3";
        t.add(2, "U(3)/T3 class, localization", cls, [&] { return to_text(cobordism_class(space_data("U(3)/T3"), threads)); });
        t.add(2, "U(3)/T3 class, operator L", cls, [&] { return to_text(flag_class(3, FlagMethod::CorL, threads)); });
        t.add(2, "U(3)/T3 s, localization", "(6,6,-6)", [&] { return s_table_text(s_numbers(space_data("U(3)/T3"), threads), 3); });
        t.add(2, "U(3)/T3 s, operator L", "(6,6,-6)", [&] {
            return s_table_text(s_numbers_from_class(flag_class(3, FlagMethod::CorL, threads), 3), 3);
        });
        const std::string chern = "c3=6, c1*c2=24, c1^3=48";
        t.add(2, "U(3)/T3 Chern, localization", chern, [&] {
            return chern_text(s_to_chern(s_numbers(space_data("U(3)/T3"), threads), 3), 3);
        });
        t.add(2, "U(3)/T3 Chern, operator L", chern, [&] {
            return chern_text(s_to_chern(s_numbers_from_class(flag_class(3, FlagMethod::CorL, threads), 3), 3), 3);
        });
    }

    if (t.wants(3)) {
        const std::string cls = to_text(a_poly("3*a1^4 + 12*a1^2*a2 + 7*a2^2 + 2*a1*a3 - 10*a4", 2));
        t.add(3, "G(4,2) class, localization", cls, [&] { return to_text(cobordism_class(space_data("U(4)/U(2)xU(2)"), threads)); });
        t.add(3, "G(4,2) class, operator L", cls, [&] { return to_text(grassmann_class(2, 2, GrassmannMethod::L, threads)); });
        t.add(3, "G(4,2) class, Q polynomials", cls, [&] { return to_text(grassmann_class(2, 2, GrassmannMethod::Q, threads)); });
        t.add(3, "G(4,2) s-table", "(6,24,14,4,-20)", [&] { return s_table_text(s_numbers(space_data("U(4)/U(2)xU(2)"), threads), 4); });
        t.add(3, "G(4,2) Chern table", "c4=6, c1*c3=48, c2^2=98, c1^2*c2=224, c1^4=512", [&] {
            return chern_text(s_to_chern(s_numbers(space_data("U(4)/U(2)xU(2)"), threads), 4), 4);
        });
        t.add(3, "G(4,2) s4 at (1,2,3,4)", "-20", [&] {
            return to_string(s_number_numeric(space_data("U(4)/U(2)xU(2)"), {0, 0, 0, 1}, {1, 2, 3, 4}));
        });
        t.add(3, "Q_(3,2,1,0)", to_text(a_poly("a1^4 + 4*a2^2 - 4*a1*a3")), [&] {
            return to_text(grassmann_Q_polynomial(2, 2, {3, 2, 1, 0}));
        });
    }

    if (t.wants(4)) {
        const std::string m10 = "SU(4)/S(U(1)xU(1)xU(2))";
        struct M10Case {
            std::string structure, cls, chern;
        };
        std::vector<M10Case> cases = {
            {"J1", to_text(a_poly("3*a1^5 + 12*a1^3*a2 + 7*a1*a2^2 - 5*a1^2*a3 - 2*a2*a3 - 10*a1*a4 + 5*a5", 4)),
             "c5=12, c1*c4=108, c2*c3=292, c1^2*c3=612, c1*c2^2=1028, c1^3*c2=2148, c1^5=4500"},
            {"J2", to_text(a_poly("3*a1^5 + 12*a1^3*a2 + 7*a1*a2^2 - 5*a1^2*a3 + 8*a2*a3 - 10*a1*a4 - 5*a5", 4)),
             "c5=12, c1*c4=108, c2*c3=292, c1^2*c3=612, c1*c2^2=1068, c1^3*c2=2268, c1^5=4860"},
            {"J3", to_text(a_poly("3*a1^5 - 12*a1^3*a2 + 7*a1*a2^2 + 15*a1^2*a3 - 12*a2*a3 - 10*a1*a4 + 15*a5", 4)),
             "c5=12, c1*c4=12, c2*c3=4, c1^2*c3=20, c1*c2^2=-4, c1^3*c2=-4, c1^5=-20"}};
        for (const auto& c : cases) {
            t.add(4, "M10 " + c.structure + " class", c.cls, [&] { return to_text(cobordism_class(space_data(m10, c.structure), threads)); });
            t.add(4, "M10 " + c.structure + " Chern table", c.chern, [&] {
                return chern_text(s_to_chern(s_numbers(space_data(m10, c.structure), threads), 5), 5);
            });
        }
    }

    if (t.wants(5)) {
        t.add(5, "S6 class", to_text(a_poly("a1^3 - 3*a1*a2 + 3*a3", 2)), [&] { return to_text(cobordism_class(space_data("G2/SU(3)", "J"), threads)); });
        struct SigmaRow {
            std::string name;
            std::pair<int, int> key;
            std::string poly;
        };
        std::vector<SigmaRow> sigma = {
            {"sigma2", {1, 0}, "a1*a2^2 - 2*a1^2*a3 - a2*a3 + 5*a1*a4 - 5*a5"},
            {"sigma2^2", {2, 0}, "a1*a3^2 - 2*a1*a2*a4 - a3*a4 + 2*a1^2*a5 + 3*a2*a5 - 7*a1*a6 + 7*a7"},
            {"sigma2^3", {3, 0}, "-9*a9 + 9*a1*a8 - 5*a2*a7 + 3*a3*a6 - a4*a5 - 2*a1^2*a7 + 2*a1*a2*a6 - 2*a1*a3*a5 + a1*a4^2"},
            {"sigma3^2", {0, 2},
             "3*a9 - 3*a1*a8 - 3*a2*a7 + 6*a3*a6 - 3*a4*a5 + 3*a1^2*a7 - 3*a1*a2*a6 - 3*a1*a3*a5 + 3*a1*a4^2 + "
             "3*a2^2*a5 - 3*a2*a3*a4 + a3^3"}};
        std::shared_ptr<std::map<std::pair<int, int>, CobordismPoly>> expansion;
        auto get = [&]() -> const std::map<std::pair<int, int>, CobordismPoly>& {
            if (!expansion)
                expansion = std::make_shared<std::map<std::pair<int, int>, CobordismPoly>>(
                    sigma_expansion(chern_character_of_genus(space_data("G2/SU(3)", "J"), 6, threads)));
            return *expansion;
        };
        for (const auto& row : sigma)
            t.add(5, "S6 series coefficient of " + row.name, to_text(a_poly(row.poly, 2)), [&] {
                auto it = get().find(row.key);
                return it == get().end() ? std::string("0") : to_text(it->second);
            });
        HomogeneousSpaceSpec s6 = with_structure(build_space("G2/SU(3)"), "J");
        std::shared_ptr<std::vector<SignAssignment>> sols;
        auto solutions = [&]() -> const std::vector<SignAssignment>& {
            if (!sols) sols = std::make_shared<std::vector<SignAssignment>>(enumerate_feasible(s6, 1LL << 20, threads));
            return *sols;
        };
        t.add(5, "S6 admissible sign systems", "10", [&] { return std::to_string(solutions().size()); });
        t.add(5, "S6 non-J systems give the zero class", "8 of 8", [&] {
            int total = 0, zero = 0;
            for (const auto& s : solutions()) {
                bool plus = true, minus = true;
                for (const auto& row : s.a)
                    for (int v : row) (v > 0 ? minus : plus) = false;
                if (plus || minus) continue;
                ++total;
                if (cobordism_class(derived_fixed_point_data(s6, s), threads).is_zero()) ++zero;
            }
            return std::to_string(zero) + " of " + std::to_string(total);
        });
    }

    if (t.wants(6)) {
        auto top = [&](int n) {
            int m = n * (n - 1) / 2;
            OmegaIndex o(m, 0);
            o[m - 1] = 1;
            return o;
        };
        t.add(6, "s1(U(2)/T2)", "2", [&] { return s_numbers(space_data("U(2)/T2"), threads).at(top(2)).get_str(); });
        t.add(6, "s3(U(3)/T3)", "-6", [&] { return s_numbers(space_data("U(3)/T3"), threads).at(top(3)).get_str(); });
        t.add(6, "s6(U(4)/T4)", "0", [&] { return s_numbers(space_data("U(4)/T4"), threads).at(top(4)).get_str(); });
        t.add(6, "s_(1,0,0,0,1,0)(U(4)/T4)", "80", [&] {
            return s_numbers_from_class(flag_class(4, FlagMethod::CorL, threads), 6).at({1, 0, 0, 0, 1, 0}).get_str();
        });
        t.add(6, "U(4)/T4 class, localization = operator L", "true", [&] {
            return yes(cobordism_class(space_data("U(4)/T4"), threads) == flag_class(4, FlagMethod::CorL, threads));
        });
        for (int n = 2; n <= 4; ++n) {
            std::shared_ptr<FlagVanishingReport> rep;
            auto report = [&, n]() -> const FlagVanishingReport& {
                if (!rep) rep = std::make_shared<FlagVanishingReport>(flag_vanishing_checks(n, threads));
                return *rep;
            };
            for (const auto& check : report().checks) {
                if (n < 4 && check.name != "even Chern numbers" && check.name != "s_m") continue;
                t.add(6, "flags n=" + std::to_string(n) + " " + check.name, "true", [&] { return yes(check.ok); });
            }
        }
        t.add(6, "P_delta, n=3", to_text(a_poly("a1^3 - a1*a2 - 3*a3")), [&] { return to_text(flag_P_polynomial(3, {2, 1, 0})); });
        t.add(6, "(23)P_delta, n=3", to_text(a_poly("a1^3 + 5*a1*a2 + 3*a3", -1)), [&] {
            return to_text(flag_P_polynomial(3, {2, 0, 1}));
        });
        t.add(6, "n=4 methods corL, tchi, thm8 agree", "true", [&] {
            CobordismPoly a = flag_class(4, FlagMethod::CorL, threads);
            return yes(a == flag_class(4, FlagMethod::TChi, threads) && a == flag_class(4, FlagMethod::Thm8, threads));
        });
    }

    if (t.wants(7)) {
        for (int n = 1; n <= 5; ++n)
            t.add(7, "s_n(CP" + std::to_string(n) + ")", std::to_string(n + 1), [&, n] {
                OmegaIndex o(n, 0);
                o[n - 1] = 1;
                return s_numbers(space_data("CP" + std::to_string(n)), threads).at(o).get_str();
            });
        HomogeneousSpaceSpec cp3 = build_space("CP3");
        FixedPointData base = fixed_point_weights(cp3);
        Cp3Map map = cp3_map(base);
        std::vector<std::vector<int>> ref(4, std::vector<int>(3, 1));
        ref[1][0] = ref[2][1] = ref[3][2] = -1;
        SignAssignment nonstandard = from_reference(map, ref, -1);
        t.add(7, "CP3 nonstandard signs", "(-1,1,1,1)", [&] {
            FixedPointData fp = derived_fixed_point_data(cp3, nonstandard);
            std::ostringstream out;
            for (int k = 0; k < 4; ++k) out << (k ? "," : "(") << fp.points[map.point_of_ref[k]].sign;
            out << ")";
            return out.str();
        });
        t.add(7, "CP3 nonstandard weights", "true", [&] {
            FixedPointData fp = derived_fixed_point_data(cp3, nonstandard);
            auto x = [](int i, int j) {
                Weight w(4, 0);
                w[i - 1] += 1;
                w[j - 1] -= 1;
                return w;
            };
            std::vector<std::vector<Weight>> shown = {{x(1, 4), x(2, 4), x(3, 4)},
                                                      {x(1, 4), x(2, 1), x(3, 1)},
                                                      {x(1, 2), x(2, 4), x(3, 2)},
                                                      {x(1, 3), x(2, 3), x(3, 4)}};
            for (int k = 0; k < 4; ++k) {
                auto a = fp.points[map.point_of_ref[k]].weights;
                auto b = shown[k];
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b) return std::string("false");
            }
            return std::string("true");
        });
        t.add(7, "CP3 nonstandard s3", "-2", [&] { return s_numbers_for(cp3, nonstandard, threads).at({0, 0, 1}).get_str(); });
        t.add(7, "CP3 admissible = solutions of the a-relations", "16 = 16, same set", [&] {
            auto sols = enumerate_feasible(cp3, 1LL << 20, threads);
            std::set<std::vector<std::vector<int>>> found, predicted;
            for (const auto& s : sols) found.insert(s.a);
            for (unsigned bits = 0; bits < (1u << 12); ++bits) {
                SignAssignment s = SignAssignment::trivial(cp3);
                for (int b = 0; b < 12; ++b)
                    if ((bits >> b) & 1u) s.a[b / 3][b % 3] = -1;
                if (cp3_relations(to_reference(map, s))) predicted.insert(s.a);
            }
            return std::to_string(found.size()) + " = " + std::to_string(predicted.size()) +
                   (found == predicted ? ", same set" : ", different sets");
        });
    }

    if (t.wants(8)) {
        std::vector<SpaceProperties> props;
        std::string error;
        try {
            for (const auto& c : property_spaces()) props.push_back(check_space(c, threads));
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto all = "all " + std::to_string(property_spaces().size()) + " spaces";
        auto prop_row = [&](const std::string& name, bool SpaceProperties::*field) {
            t.add(8, name, all, [&] {
                if (!error.empty()) throw std::runtime_error(error);
                return failing(props, field);
            });
        };
        prop_row("low-degree vanishing", &SpaceProperties::vanishing);
        prop_row("Weyl invariance of the series", &SpaceProperties::weyl);
        prop_row("weight grading of series coefficients", &SpaceProperties::graded);
        prop_row("s_(n,0,...,0) = signed Euler characteristic", &SpaceProperties::euler);
        prop_row("series and s-number routes agree", &SpaceProperties::routes);
        prop_row("numeric = symbolic s at 10 random points", &SpaceProperties::numeric);
        prop_row("s -> Chern -> s on computed tables", &SpaceProperties::chern_round_trip);
        t.add(8, "formal group law axioms to order 6", "true", [&] { return yes(fgl_axioms(6)); });
        t.add(8, "divided difference identities", "true", [&] { return yes(divdiff_identities()); });
        t.add(8, "s <-> Chern round trip, n <= 6", "true", [&] { return yes(chern_round_trips()); });
        t.add(8, "conjugate structure flips s_n for odd n only", "true", [&] {
            bool ok = true;
            for (std::string d : {"CP1", "U(3)/T3", "U(4)/U(2)xU(2)"}) {
                FixedPointData a = space_data(d), b = space_data(d, "conjugate");
                int n = a.dimension();
                OmegaIndex top(n, 0);
                top[n - 1] = 1;
                Integer sa = s_numbers(a, threads).at(top), sb = s_numbers(b, threads).at(top);
                ok = ok && (n % 2 ? sb == -sa : sb == sa);
            }
            return yes(ok);
        });
    }
    return std::move(t).rows();
}

}  // namespace torigen
