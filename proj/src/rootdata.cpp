#include "torigen/rootdata.hpp"

#include <cctype>
#include <numeric>
#include <regex>
#include <set>

namespace torigen {

MultiPoly linear_form(const Weight& w, ArenaPtr arena) {
    if (!arena) arena = geometric_arena(static_cast<int>(w.size()));
    MultiPoly p(arena);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i]) continue;
        Exponents e(i + 1, 0);
        e[i] = 1;
        p.add_term(e, Rational(w[i]));
    }
    return p;
}

bool is_primitive(const Weight& w) {
    int g = 0;
    for (int c : w) g = std::gcd(g, c);
    return g == 1;
}

Weight negated(const Weight& w) {
    Weight r = w;
    for (int& c : r) c = -c;
    return r;
}

WeylElement WeylElement::identity(int k) {
    Permutation p(k);
    std::iota(p.begin(), p.end(), 0);
    return from_permutation(p);
}

WeylElement WeylElement::from_permutation(const Permutation& p) {
    WeylElement w;
    std::size_t k = p.size();
    w.matrix.assign(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) w.matrix[p[i]][i] = 1;
    w.perm = p;
    return w;
}

WeylElement WeylElement::from_matrix(std::vector<std::vector<int>> m) {
    WeylElement w;
    w.matrix = std::move(m);
    std::size_t k = w.matrix.size();
    Permutation p(k, -1);
    bool is_perm = true;
    for (std::size_t j = 0; j < k && is_perm; ++j) {
        int ones = 0;
        for (std::size_t i = 0; i < k; ++i) {
            int v = w.matrix[i][j];
            if (v == 1) {
                ++ones;
                p[j] = static_cast<int>(i);
            } else if (v != 0) {
                is_perm = false;
            }
        }
        if (ones != 1) is_perm = false;
    }
    if (is_perm) w.perm = p;
    return w;
}

Weight WeylElement::apply(const Weight& v) const {
    Weight r(matrix.size(), 0);
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += matrix[i][j] * v[j];
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    std::size_t k = matrix.size();
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) m[i][j] += matrix[i][l] * o.matrix[l][j];
    return from_matrix(std::move(m));
}

Weight HomogeneousSpaceSpec::structure_root(int i) const {
    Weight r = roots.at(i);
    if (signs.at(i) < 0) r = negated(r);
    return r;
}

std::string space_grammar() {
    return "space descriptors: U(n)/U(k1)x...xU(km) with k1+...+km = n; U(n)/Tn; "
           "SU(n)/S(U(k1)x...xU(km)); G2/SU(3); CPn (= U(n+1)/U(1)xU(n))";
}

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

std::vector<int> parse_blocks(const std::string& text) {
    static const std::regex block(R"(U\((\d+)\))");
    std::vector<int> blocks;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::smatch m;
        std::string rest = text.substr(pos);
        if (!std::regex_search(rest, m, block, std::regex_constants::match_continuous))
            throw ParseError("cannot read subgroup block in '" + text + "'\n" + space_grammar());
        blocks.push_back(std::stoi(m[1]));
        pos += m.length(0);
        if (pos < text.size()) {
            if (text[pos] != 'x' && text[pos] != 'X')
                throw ParseError("expected 'x' between blocks in '" + text + "'\n" + space_grammar());
            ++pos;
        }
    }
    return blocks;
}

HomogeneousSpaceSpec a_series(std::string descriptor, GroupKind kind, int n, std::vector<int> blocks) {
    if (n < 1) throw ParseError("group rank must be positive\n" + space_grammar());
    int total = 0;
    for (int b : blocks) {
        if (b < 1) throw ParseError("block sizes must be positive\n" + space_grammar());
        total += b;
    }
    if (total != n)
        throw ParseError("subgroup blocks sum to " + std::to_string(total) + ", expected " +
                         std::to_string(n) + "\n" + space_grammar());
    if (blocks.size() < 2) throw ParseError("quotient by the whole group is a point\n" + space_grammar());
    std::stable_sort(blocks.begin(), blocks.end(), std::greater<>());

    HomogeneousSpaceSpec spec;
    spec.descriptor = std::move(descriptor);
    spec.group = kind;
    spec.group_rank = n;
    spec.blocks = blocks;
    spec.rank = n;
    std::vector<int> block_of;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int r = 0; r < blocks[b]; ++r) block_of.push_back(static_cast<int>(b));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (block_of[i] == block_of[j]) continue;
            Weight w(n, 0);
            w[i] = 1;
            w[j] = -1;
            spec.roots.push_back(w);
        }
    spec.signs.assign(spec.roots.size(), 1);
    return spec;
}

bool is_m10(const HomogeneousSpaceSpec& s) {
    return s.group != GroupKind::G2 && s.group_rank == 4 && s.blocks == std::vector<int>{2, 1, 1};
}

}  // namespace

HomogeneousSpaceSpec build_space(std::string_view descriptor) {
    std::string d = strip_spaces(descriptor);
    std::smatch m;
    static const std::regex cp(R"(CP\^?(\d+))");
    static const std::regex torus(R"((S?U)\((\d+)\)/T\^?(\d*))");
    static const std::regex unitary(R"(U\((\d+)\)/(.+))");
    static const std::regex special(R"(SU\((\d+)\)/S\((.+)\))");
    if (d == "G2/SU(3)") {
        HomogeneousSpaceSpec spec;
        spec.descriptor = d;
        spec.group = GroupKind::G2;
        spec.group_rank = 2;
        spec.rank = 2;
        spec.roots = {{1, 0}, {0, 1}, {-1, -1}};
        spec.signs = {1, 1, 1};
        return spec;
    }
    if (std::regex_match(d, m, cp)) {
        int n = std::stoi(m[1]);
        if (n < 1) throw ParseError("CPn needs n >= 1\n" + space_grammar());
        return a_series(d, GroupKind::Unitary, n + 1, {1, n});
    }
    if (std::regex_match(d, m, torus)) {
        int n = std::stoi(m[2]);
        GroupKind kind = m[1] == "SU" ? GroupKind::SpecialUnitary : GroupKind::Unitary;
        if (m[3].length()) {
            int t = std::stoi(m[3]);
            if (t != n && !(kind == GroupKind::SpecialUnitary && t == n - 1))
                throw ParseError("torus rank must match the group in '" + d + "'\n" + space_grammar());
        }
        return a_series(d, kind, n, std::vector<int>(n, 1));
    }
    if (std::regex_match(d, m, special))
        return a_series(d, GroupKind::SpecialUnitary, std::stoi(m[1]), parse_blocks(m[2]));
    if (std::regex_match(d, m, unitary))
        return a_series(d, GroupKind::Unitary, std::stoi(m[1]), parse_blocks(m[2]));
    if (d.rfind("G2", 0) == 0 || d.rfind("SO", 0) == 0 || d.rfind("Sp", 0) == 0 || d.rfind("E", 0) == 0 ||
        d.rfind("F4", 0) == 0)
        throw UnsupportedGroup("unsupported group in '" + d + "'\n" + space_grammar());
    throw ParseError("cannot parse space descriptor '" + d + "'\n" + space_grammar());
}

std::vector<int> parse_signs(std::string_view text) {
    std::vector<int> signs;
    std::string t = strip_spaces(text);
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t comma = t.find(',', pos);
        std::string tok = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok == "+" || tok == "+1" || tok == "1")
            signs.push_back(1);
        else if (tok == "-" || tok == "-1")
            signs.push_back(-1);
        else
            throw ParseError("sign list entries must be + or -: '" + std::string(text) + "'");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return signs;
}

HomogeneousSpaceSpec with_signs(HomogeneousSpaceSpec spec, const std::vector<int>& signs) {
    if (signs.size() != spec.roots.size())
        throw ParseError("expected " + std::to_string(spec.roots.size()) + " structure signs, got " +
                         std::to_string(signs.size()));
    for (int s : signs)
        if (s != 1 && s != -1) throw ParseError("structure signs must be +1 or -1");
    spec.signs = signs;
    spec.point_sign = 1;
    spec.structure = "custom";
    return spec;
}

HomogeneousSpaceSpec with_structure(HomogeneousSpaceSpec spec, std::string_view name) {
    std::size_t n = spec.roots.size();
    if (name == "standard" || name == "J" || (name == "J1" && is_m10(spec))) {
        spec.signs.assign(n, 1);
        spec.point_sign = 1;
    } else if (name == "conjugate") {
        // Every weight reversed while the orientation of the standard
        // structure is kept: each point then carries the sign (-1)^n.
        spec.signs.assign(n, -1);
        spec.point_sign = n % 2 ? -1 : 1;
    } else if (name == "J2" && is_m10(spec)) {
        spec.signs = {1, -1, 1, -1, -1};
        spec.point_sign = 1;
    } else if (name == "J3" && is_m10(spec)) {
        spec.signs = {1, -1, 1, -1, 1};
        spec.point_sign = 1;
    } else {
        throw ParseError("unknown structure '" + std::string(name) + "' for " + spec.descriptor +
                         " (standard, conjugate; J1, J2, J3 on SU(4)/S(U(1)xU(1)xU(2)))");
    }
    spec.structure = std::string(name);
    return spec;
}

std::vector<WeylElement> weyl_generators(const HomogeneousSpaceSpec& spec) {
    if (spec.group == GroupKind::G2)
        return {WeylElement::from_matrix({{-1, 1}, {0, 1}}), WeylElement::from_matrix({{0, 1}, {1, 0}})};
    std::vector<WeylElement> gens;
    for (int i = 0; i + 1 < spec.rank; ++i) {
        Permutation p(spec.rank);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[i], p[i + 1]);
        gens.push_back(WeylElement::from_permutation(p));
    }
    return gens;
}

std::vector<WeylElement> subgroup_generators(const HomogeneousSpaceSpec& spec) {
    if (spec.group == GroupKind::G2)
        return {WeylElement::from_matrix({{0, 1}, {1, 0}}), WeylElement::from_matrix({{1, -1}, {0, -1}})};
    std::vector<WeylElement> gens;
    int start = 0;
    for (int b : spec.blocks) {
        for (int i = start; i + 1 < start + b; ++i) {
            Permutation p(spec.rank);
            std::iota(p.begin(), p.end(), 0);
            std::swap(p[i], p[i + 1]);
            gens.push_back(WeylElement::from_permutation(p));
        }
        start += b;
    }
    return gens;
}

std::vector<WeylElement> generate_group(const std::vector<WeylElement>& gens, int k) {
    std::vector<WeylElement> order{WeylElement::identity(k)};
    std::set<WeylElement> seen{order.front()};
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (const auto& g : gens) {
            WeylElement next = g * order[head];
            if (seen.insert(next).second) order.push_back(next);
            if (order.size() > 100000) throw std::logic_error("Weyl group did not close");
        }
    }
    return order;
}

std::vector<WeylElement> weyl_cosets(const HomogeneousSpaceSpec& spec) {
    if (spec.group == GroupKind::G2) {
        // -1 is central in W(G2) and lies outside W(SU(3)), so {1, -1} is a
        // transversal; the second point then carries exactly the negated roots.
        return {WeylElement::identity(2), WeylElement::from_matrix({{-1, 0}, {0, -1}})};
    }
    std::vector<int> block_of;
    for (std::size_t b = 0; b < spec.blocks.size(); ++b)
        for (int r = 0; r < spec.blocks[b]; ++r) block_of.push_back(static_cast<int>(b));
    std::vector<WeylElement> reps;
    for (const auto& p : permutations(spec.rank)) {
        bool minimal = true;
        for (int i = 0; i + 1 < spec.rank && minimal; ++i)
            if (block_of[i] == block_of[i + 1] && p[i] > p[i + 1]) minimal = false;
        if (minimal) reps.push_back(WeylElement::from_permutation(p));
    }
    return reps;
}

long euler_characteristic(const HomogeneousSpaceSpec& spec) {
    if (spec.group == GroupKind::G2) {
        long g = static_cast<long>(generate_group(weyl_generators(spec), 2).size());
        long h = static_cast<long>(generate_group(subgroup_generators(spec), 2).size());
        return g / h;
    }
    auto fact = [](int n) {
        long r = 1;
        for (int i = 2; i <= n; ++i) r *= i;
        return r;
    };
    long r = fact(spec.group_rank);
    for (int b : spec.blocks) r /= fact(b);
    return r;
}

FixedPointData fixed_point_weights(const HomogeneousSpaceSpec& spec) {
    FixedPointData fp;
    fp.rank = spec.rank;
    for (const auto& w : weyl_cosets(spec)) {
        FixedPoint p;
        p.rep = w;
        p.sign = spec.point_sign;
        for (int i = 0; i < spec.dimension(); ++i) {
            Weight lambda = w.apply(spec.structure_root(i));
            if (!is_primitive(lambda))
                throw NonPrimitiveWeight("weight at a fixed point is zero or has a common factor");
            p.weights.push_back(std::move(lambda));
        }
        fp.points.push_back(std::move(p));
    }
    return fp;
}

}  // namespace torigen
