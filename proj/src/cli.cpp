#include "torigen/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "torigen/chern.hpp"
#include "torigen/diskcache.hpp"
#include "torigen/divdiff.hpp"
#include "torigen/errors.hpp"
#include "torigen/fgl.hpp"
#include "torigen/genus.hpp"
#include "torigen/parallel.hpp"
#include "torigen/render.hpp"
#include "torigen/reproduce.hpp"
#include "torigen/stablex.hpp"

namespace torigen {

namespace {

using nlohmann::json;

struct Extra {
    int n = 0, q = 0, l = 0;
    bool checks = false;
    std::string xi;
    std::string assignment;
    long long budget = 1LL << 20;
    int power = 0;
    bool has_power = false, log = false, bridge = false;
    bool all = false;
    std::vector<int> criteria;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad " + what + " entry '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(what + " is empty");
    return out;
}

HomogeneousSpaceSpec make_spec(const RunConfig& cfg) {
    if (cfg.space.empty()) throw std::invalid_argument("--space is required");
    HomogeneousSpaceSpec spec = build_space(cfg.space);
    if (!cfg.signs.empty()) return with_signs(spec, parse_signs(cfg.signs));
    if (!cfg.structure.empty()) return with_structure(spec, cfg.structure);
    return spec;
}

json omega_json(const Exponents& e, int n) {
    return padded(e, static_cast<std::size_t>(n));
}

json class_json(const CobordismPoly& cls, int n) {
    json out = json::array();
    for (const auto& [e, c] : cls.terms()) out.push_back({{"omega", omega_json(e, n)}, {"coeff", to_string(c)}});
    return out;
}

std::string omega_text(const OmegaIndex& o) {
    std::string s = "(";
    for (std::size_t i = 0; i < o.size(); ++i) s += (i ? "," : "") + std::to_string(o[i]);
    return s + ")";
}

json s_json(const SNumbers& s, int n) {
    json out = json::array();
    for (const auto& lambda : partitions(n)) {
        OmegaIndex o = partition_to_omega(lambda, n);
        out.push_back({{"omega", o}, {"value", s.at(o).get_str()}});
    }
    return out;
}

json header(const HomogeneousSpaceSpec& spec) {
    return {{"space", spec.descriptor}, {"structure", spec.structure}};
}

void emit(std::ostream& out, const json& j) {
    out << j.dump(2) << "\n";
}

const char* ok_text(bool ok) {
    return ok ? "ok" : "FAIL";
}

int cmd_genus(const RunConfig& cfg, std::ostream& out) {
    HomogeneousSpaceSpec spec = make_spec(cfg);
    int order = cfg.trunc >= 0 ? cfg.trunc : default_series_order(spec.dimension());
    GenusResult r = compute_genus(spec, order, cfg.threads);
    bool ok = r.vanishing && r.weyl_invariance;
    if (cfg.format == "json") {
        json j = header(spec);
        j["order"] = order;
        j["series"] = to_json(r.series);
        j["class"] = class_json(r.cls, spec.dimension());
        j["s_numbers"] = s_json(r.s, spec.dimension());
        j["checks"] = {{"vanishing", r.vanishing}, {"weyl_invariance", r.weyl_invariance}};
        emit(out, j);
    } else {
        out << "space: " << spec.descriptor << " [" << spec.structure << "]\n";
        out << "class: " << to_text(r.cls) << "\n";
        out << "ch_U Phi: " << to_text(r.series) << "\n";
        out << "vanishing: " << ok_text(r.vanishing) << "\n";
        out << "weyl invariance: " << ok_text(r.weyl_invariance) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_class(const RunConfig& cfg, std::ostream& out) {
    HomogeneousSpaceSpec spec = make_spec(cfg);
    CobordismPoly cls = cobordism_class(fixed_point_weights(spec), cfg.threads);
    if (cfg.format == "json") {
        json j = header(spec);
        j["class"] = class_json(cls, spec.dimension());
        emit(out, j);
    } else {
        out << to_text(cls) << "\n";
    }
    return 0;
}

int cmd_snumbers(const RunConfig& cfg, std::ostream& out) {
    HomogeneousSpaceSpec spec = make_spec(cfg);
    FixedPointData fp = fixed_point_weights(spec);
    int n = fp.dimension();
    std::vector<OmegaIndex> wanted;
    if (!cfg.omega.empty()) {
        OmegaIndex o = parse_int_list(cfg.omega, "--omega");
        if (static_cast<int>(o.size()) > n) throw std::invalid_argument("--omega has more than n entries");
        o = padded(o, n);
        for (int v : o)
            if (v < 0) throw std::invalid_argument("--omega entries must be nonnegative");
        if (omega_weight(o) != n) throw std::invalid_argument("--omega must have weight " + std::to_string(n));
        wanted.push_back(o);
    } else {
        for (const auto& lambda : partitions(n)) wanted.push_back(partition_to_omega(lambda, n));
    }
    std::vector<std::string> values;
    if (!cfg.numeric.empty()) {
        std::vector<Integer> point;
        for (int v : parse_int_list(cfg.numeric, "--numeric")) point.emplace_back(v);
        if (static_cast<int>(point.size()) != fp.rank)
            throw std::invalid_argument("--numeric needs " + std::to_string(fp.rank) + " coordinates");
        for (const auto& o : wanted) values.push_back(to_string(s_number_numeric(fp, o, point)));
    } else {
        SNumbers s = s_numbers(fp, cfg.threads);
        for (const auto& o : wanted) values.push_back(s.at(o).get_str());
    }
    if (cfg.format == "json") {
        json j = header(spec);
        j["s_numbers"] = json::array();
        for (std::size_t i = 0; i < wanted.size(); ++i)
            j["s_numbers"].push_back({{"omega", wanted[i]}, {"value", values[i]}});
        emit(out, j);
    } else if (!cfg.omega.empty()) {
        out << values.front() << "\n";
    } else {
        for (std::size_t i = 0; i < wanted.size(); ++i) out << "s" << omega_text(wanted[i]) << " = " << values[i] << "\n";
    }
    return 0;
}

Partition chern_partition(const Exponents& xi) {
    Partition p;
    for (int k = static_cast<int>(xi.size()); k >= 1; --k)
        for (int r = 0; r < xi[k - 1]; ++r) p.push_back(k);
    return p;
}

int cmd_chern(const RunConfig& cfg, std::ostream& out) {
    HomogeneousSpaceSpec spec = make_spec(cfg);
    int n = spec.dimension();
    ChernNumberTable c = s_to_chern(s_numbers(fixed_point_weights(spec), cfg.threads), n);
    if (cfg.format == "json") {
        json j = header(spec);
        j["chern"] = json::array();
        for (const auto& key : chern_keys(n))
            j["chern"].push_back({{"partition", chern_partition(key)}, {"value", c.at(key).get_str()}});
        emit(out, j);
    } else {
        for (const auto& key : chern_keys(n)) out << chern_label(key) << " = " << c.at(key) << "\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    HomogeneousSpaceSpec spec = make_spec(cfg);
    FixedPointData fp = fixed_point_weights(spec);
    int n = fp.dimension();
    VanishingReport vanishing = verify_low_vanishing(fp, cfg.threads);
    int order = cfg.trunc >= 0 ? cfg.trunc : default_series_order(n);
    bool weyl = false, integral = false, euler = false;
    std::string integral_detail;
    if (vanishing.ok) {
        weyl = weyl_invariant(chern_character_of_genus(fp, order, cfg.threads), weyl_generators(spec));
        try {
            SNumbers s = s_numbers(fp, cfg.threads);
            integral = true;
            OmegaIndex top(n, 0);
            top[0] = n;
            euler = s.at(top) == spec.point_sign * euler_characteristic(spec);
        } catch (const NonIntegerClass& e) {
            integral_detail = e.what();
        }
    }
    bool ok = vanishing.ok && weyl && integral && euler;
    if (cfg.format == "json") {
        json j = header(spec);
        j["checks"] = {{"vanishing", vanishing.ok}, {"weyl_invariance", weyl}, {"integrality", integral}, {"euler", euler}};
        emit(out, j);
    } else {
        out << "vanishing: " << ok_text(vanishing.ok);
        if (!vanishing.ok) out << " (" << vanishing.describe() << ")";
        out << "\nweyl invariance: " << ok_text(weyl) << "\nintegrality: " << ok_text(integral);
        if (!integral_detail.empty()) out << " (" << integral_detail << ")";
        out << "\ns_(n,0,...,0) = signed Euler characteristic: " << ok_text(euler) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_flag(const RunConfig& cfg, const Extra& x, std::ostream& out) {
    if (x.n < 1) throw std::invalid_argument("--n must be at least 1");
    json j = {{"space", "U(" + std::to_string(x.n) + ")/T" + std::to_string(x.n)}};
    int code = 0;
    std::string text;
    if (!x.xi.empty()) {
        Exponents xi = parse_int_list(x.xi, "--xi");
        CobordismPoly p = flag_P_polynomial(x.n, xi);
        j["xi"] = xi;
        j["P"] = to_json(p);
        text = to_text(p) + "\n";
    } else if (x.checks) {
        FlagVanishingReport rep = flag_vanishing_checks(x.n, cfg.threads);
        j["checks"] = json::array();
        for (const auto& c : rep.checks) {
            j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            text += c.name + ": " + ok_text(c.ok) + (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
        }
        code = rep.ok() ? 0 : 1;
    } else {
        FlagMethod m = parse_flag_method(cfg.method.empty() ? "corL" : cfg.method);
        CobordismPoly cls = flag_class(x.n, m, cfg.threads);
        j["method"] = flag_method_name(m);
        j["class"] = class_json(cls, x.n * (x.n - 1) / 2);
        text = to_text(cls) + "\n";
    }
    if (cfg.format == "json")
        emit(out, j);
    else
        out << text;
    return code;
}

int cmd_grassmann(const RunConfig& cfg, const Extra& x, std::ostream& out) {
    if (x.q < 1 || x.l < 1) throw std::invalid_argument("--q and --l must be positive");
    json j = {{"space", "U(" + std::to_string(x.q + x.l) + ")/U(" + std::to_string(x.q) + ")xU(" + std::to_string(x.l) + ")"}};
    std::string text;
    if (!x.xi.empty()) {
        Exponents xi = parse_int_list(x.xi, "--xi");
        CobordismPoly p = grassmann_Q_polynomial(x.q, x.l, xi);
        j["xi"] = xi;
        j["Q"] = to_json(p);
        text = to_text(p);
    } else {
        GrassmannMethod m = parse_grassmann_method(cfg.method.empty() ? "L" : cfg.method);
        CobordismPoly cls = grassmann_class(x.q, x.l, m, cfg.threads);
        j["class"] = class_json(cls, x.q * x.l);
        text = to_text(cls);
    }
    if (cfg.format == "json")
        emit(out, j);
    else
        out << text << "\n";
    return 0;
}

int cmd_stable(const RunConfig& cfg, const Extra& x, std::ostream& out) {
    HomogeneousSpaceSpec spec = make_spec(cfg);
    int n = spec.dimension();
    json j = header(spec);
    if (!x.assignment.empty()) {
        std::ifstream in(x.assignment);
        if (!in) throw std::invalid_argument("cannot read " + x.assignment);
        json aj;
        try {
            aj = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("assignment file: ") + e.what());
        }
        SignAssignment a = assignment_from_json(aj, spec);
        NecessaryReport rep = check_necessary(spec, a, cfg.threads);
        j["assignment"] = to_json(a);
        j["admissible"] = rep.ok;
        std::string text = to_text(a) + "\n";
        if (rep.ok) {
            SNumbers s = s_numbers_for(spec, a, cfg.threads);
            j["class"] = class_json(class_from_s_numbers(s), n);
            j["s_numbers"] = s_json(s, n);
            text += "admissible\nclass: " + to_text(class_from_s_numbers(s)) + "\n";
        } else {
            text += "not admissible: " + rep.describe() + "\n";
        }
        if (cfg.format == "json")
            emit(out, j);
        else
            out << text;
        return rep.ok ? 0 : 1;
    }
    auto sols = enumerate_feasible(spec, x.budget, cfg.threads);
    j["count"] = sols.size();
    j["assignments"] = json::array();
    std::string text = "admissible sign systems: " + std::to_string(sols.size()) + "\n";
    for (const auto& a : sols) {
        CobordismPoly cls = class_from_s_numbers(s_numbers_for(spec, a, cfg.threads));
        j["assignments"].push_back({{"assignment", to_json(a)}, {"class", class_json(cls, n)}});
        text += to_text(a) + "  class " + to_text(cls) + "\n";
    }
    if (cfg.format == "json")
        emit(out, j);
    else
        out << text;
    return 0;
}

int cmd_fgl(const RunConfig& cfg, const Extra& x, std::ostream& out) {
    int order = cfg.trunc >= 0 ? cfg.trunc : 6;
    if (x.bridge) {
        json j = {{"order", order}, {"b_in_a", json::array()}};
        for (int k = 1; k <= order; ++k) {
            CobordismPoly b = b_in_terms_of_a(k);
            j["b_in_a"].push_back({{"n", k}, {"value", to_json(b)}});
            if (cfg.format != "json") out << "b" << k << " = " << to_text(b) << "\n";
        }
        if (cfg.format == "json") emit(out, j);
        return 0;
    }
    CoeffSeries s;
    std::string name;
    if (x.has_power) {
        s = power_system(x.power, order);
        name = "[" + std::to_string(x.power) + "](u)";
    } else if (x.log) {
        s = log_series(order);
        name = "g(u)";
    } else {
        s = fgl_addition(order);
        name = "F(u,v)";
    }
    if (cfg.format == "json") {
        json j = {{"series", name}, {"value", to_json(GradedSeries(s, order))}};
        emit(out, j);
    } else {
        out << name << " = " << to_text(GradedSeries(s, order)) << "\n";
    }
    return 0;
}

int cmd_reproduce(const RunConfig& cfg, const Extra& x, std::ostream& out) {
    std::set<int> criteria(x.criteria.begin(), x.criteria.end());
    for (int c : criteria)
        if (c < 1 || c > 8) throw std::invalid_argument("criteria are numbered 1..8");
    if (x.all) criteria.clear();
    auto rows = reproduce_table(criteria, cfg.threads);
    std::map<int, bool> verdict;
    for (const auto& r : rows) verdict.try_emplace(r.criterion, true).first->second &= r.pass;
    bool ok = true;
    for (const auto& [c, pass] : verdict) ok = ok && pass;
    if (cfg.format == "json") {
        json j = {{"rows", json::array()}, {"criteria", json::array()}};
        for (const auto& r : rows)
            j["rows"].push_back({{"criterion", r.criterion}, {"name", r.name}, {"expected", r.expected},
                                 {"actual", r.actual}, {"pass", r.pass}});
        for (const auto& [c, pass] : verdict)
            j["criteria"].push_back({{"criterion", c}, {"title", criterion_title(c)}, {"pass", pass}});
        emit(out, j);
    } else {
        for (const auto& r : rows) {
            out << (r.pass ? "PASS" : "FAIL") << "  [" << r.criterion << "] " << r.name << ": " << r.actual;
            if (!r.pass) out << "  (expected " << r.expected << ")";
            out << "\n";
        }
        for (const auto& [c, pass] : verdict)
            out << (pass ? "PASS" : "FAIL") << " criterion " << c << ": " << criterion_title(c) << "\n";
    }
    return ok ? 0 : 1;
}

bool mentions_grammar(const std::string& what) {
    return what.find(space_grammar()) != std::string::npos;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    Extra x;
    CLI::App app{"Universal toric genus of homogeneous spaces", "torigen"};
    app.require_subcommand(1);
    app.add_option("--space", cfg.space, "space descriptor");
    app.add_option("--structure", cfg.structure, "standard, conjugate, J, J1, J2, J3");
    app.add_option("--signs", cfg.signs, "structure signs, e.g. +,-,+");
    app.add_option("--omega", cfg.omega, "omega index, e.g. 0,0,0,1");
    app.add_option("--numeric", cfg.numeric, "integer evaluation point");
    app.add_option("--trunc", cfg.trunc, "truncation order");
    app.add_option("--method", cfg.method, "route selector");
    app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", cfg.threads, "worker threads (default TORIGEN_THREADS)");
    app.add_option("--cache", cfg.cache, "directory for cached tables");

    std::map<std::string, CLI::App*> sub;
    for (const char* verb : {"genus", "class", "snumbers", "chern", "verify", "flag", "grassmann", "stable", "fgl",
                             "reproduce"}) {
        CLI::App* s = app.add_subcommand(verb);
        s->fallthrough();
        sub[verb] = s;
    }
    sub["genus"]->description("ch_U Phi, class and checks");
    sub["class"]->description("cobordism class in the a-basis");
    sub["snumbers"]->description("characteristic numbers s_omega");
    sub["chern"]->description("Chern numbers");
    sub["verify"]->description("vanishing, Weyl invariance, integrality, Euler characteristic");
    sub["flag"]->description("U(n)/Tn class by divided differences, vanishing checks");
    sub["grassmann"]->description("G(q+l, q) class by the L or Q route");
    sub["stable"]->description("admissible stable sign systems, or check one from a file");
    sub["fgl"]->description("formal group law series");
    sub["reproduce"]->description("acceptance table");
    sub["flag"]->add_option("--n", x.n, "U(n)/Tn")->required();
    sub["flag"]->add_flag("--checks", x.checks, "vanishing and evenness suite");
    sub["flag"]->add_option("--xi", x.xi, "exponent vector for P_xi");
    sub["grassmann"]->add_option("--q", x.q)->required();
    sub["grassmann"]->add_option("--l", x.l)->required();
    sub["grassmann"]->add_option("--xi", x.xi, "exponent vector for Q_xi");
    sub["stable"]->add_option("--assignment", x.assignment, "JSON sign assignment file");
    sub["stable"]->add_option("--budget", x.budget, "maximum number of candidates");
    sub["fgl"]->add_option("--power", x.power, "power system [w](u)");
    sub["fgl"]->add_flag("--log", x.log, "logarithm g(u)");
    sub["fgl"]->add_flag("--bridge", x.bridge, "b_n in terms of a");
    sub["reproduce"]->add_flag("--all", x.all, "every criterion");
    sub["reproduce"]->add_option("--criterion", x.criteria, "criterion number (repeatable)");

    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "torigen");
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        if (code == 0) return 0;
        err << space_grammar() << "\n";
        return 2;
    }
    for (const auto& [name, s] : sub)
        if (s->parsed()) cfg.verb = name;
    x.has_power = sub["fgl"]->count("--power") > 0;

    try {
        if (cfg.threads > 0) set_default_threads(cfg.threads);
        if (!cfg.cache.empty()) set_cache_directory(cfg.cache);
        if (cfg.verb == "genus") return cmd_genus(cfg, out);
        if (cfg.verb == "class") return cmd_class(cfg, out);
        if (cfg.verb == "snumbers") return cmd_snumbers(cfg, out);
        if (cfg.verb == "chern") return cmd_chern(cfg, out);
        if (cfg.verb == "verify") return cmd_verify(cfg, out);
        if (cfg.verb == "flag") return cmd_flag(cfg, x, out);
        if (cfg.verb == "grassmann") return cmd_grassmann(cfg, x, out);
        if (cfg.verb == "stable") return cmd_stable(cfg, x, out);
        if (cfg.verb == "fgl") return cmd_fgl(cfg, x, out);
        if (cfg.verb == "reproduce") return cmd_reproduce(cfg, x, out);
        err << "unknown verb\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (!mentions_grammar(e.what())) err << space_grammar() << "\n";
        return 2;
    } catch (const UnsupportedGroup& e) {
        err << "error: " << e.what() << "\n";
        if (!mentions_grammar(e.what())) err << space_grammar() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << space_grammar() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace torigen
