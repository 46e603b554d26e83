#include "torigen/genus.hpp"

#include <random>
#include <sstream>

#include "torigen/fgl.hpp"
#include "torigen/parallel.hpp"
#include "torigen/render.hpp"

namespace torigen {

namespace {

Weight normalized_line(const Weight& w) {
    for (int c : w) {
        if (c > 0) return w;
        if (c < 0) return negated(w);
    }
    throw ZeroWeight("fixed point with a zero weight");
}

ArenaPtr tangent_arena(int n) {
    return Arena::fixed("t", n);
}

MultiPoly f_omega_at(const OmegaIndex& omega, const std::vector<MultiPoly>& forms) {
    int n = static_cast<int>(forms.size());
    Partition lambda = omega_to_partition(omega);
    if (static_cast<int>(lambda.size()) > n) return MultiPoly(forms.empty() ? nullptr : forms.front().arena());
    MultiPoly orbit = orbit_monomial(partition_exponents(lambda, n), n, tangent_arena(n));
    return substitute(orbit, forms);
}

// All products prod_j L_j^{i_j} with sum i_j <= wmax, grouped by the multiset
// {i_j}, which is the a-monomial a_{i_1}...a_{i_n}.
void composition_dfs(const std::vector<std::vector<MultiPoly>>& powers, std::size_t j, int budget,
                     Exponents& omega, const MultiPoly& partial, std::map<Exponents, MultiPoly>& out) {
    if (j == powers.size()) {
        auto it = out.find(trimmed(omega));
        if (it == out.end())
            out.emplace(trimmed(omega), partial);
        else
            it->second += partial;
        return;
    }
    for (int i = 0; i <= budget; ++i) {
        if (i > 0) {
            if (static_cast<int>(omega.size()) < i) omega.resize(i, 0);
            ++omega[i - 1];
        }
        composition_dfs(powers, j + 1, budget - i, omega, i == 0 ? partial : partial * powers[j][i], out);
        if (i > 0) --omega[i - 1];
    }
}

// Sum over points of cofactor * (grouped numerators), reduced in point order.
std::map<Exponents, MultiPoly> grouped(const FixedPointData& fp, const LocalizationFrame& frame, int wmax, int threads) {
    std::size_t np = fp.points.size();
    std::vector<std::map<Exponents, MultiPoly>> per_point(np);
    parallel_for(np, threads, [&](std::size_t p) {
        const auto& forms = frame.forms[p];
        std::vector<std::vector<MultiPoly>> powers;
        for (const auto& l : forms) {
            std::vector<MultiPoly> row{MultiPoly(frame.x, Rational(1))};
            for (int e = 1; e <= wmax; ++e) row.push_back(row.back() * l);
            powers.push_back(std::move(row));
        }
        Exponents omega;
        std::map<Exponents, MultiPoly> local;
        composition_dfs(powers, 0, wmax, omega, MultiPoly(frame.x, Rational(1)), local);
        for (auto& [w, poly] : local) poly = poly * frame.cofactor[p];
        per_point[p] = std::move(local);
    });
    std::map<Exponents, MultiPoly> total;
    for (auto& local : per_point)
        for (auto& [w, poly] : local) {
            auto it = total.find(w);
            if (it == total.end())
                total.emplace(w, std::move(poly));
            else
                it->second += poly;
        }
    return total;
}

}  // namespace

LocalizationFrame localization_frame(const FixedPointData& fp) {
    LocalizationFrame frame;
    frame.x = geometric_arena(fp.rank);
    std::map<Weight, int> multiplicity;
    for (const auto& pt : fp.points) {
        std::map<Weight, int> here;
        for (const auto& w : pt.weights) ++here[normalized_line(w)];
        for (const auto& [line, m] : here) multiplicity[line] = std::max(multiplicity[line], m);
    }
    frame.denominator = MultiPoly(frame.x, Rational(1));
    for (const auto& [line, m] : multiplicity) frame.denominator *= linear_form(line, frame.x).pow(m);
    for (const auto& pt : fp.points) {
        std::vector<MultiPoly> forms;
        MultiPoly prod(frame.x, Rational(1));
        for (const auto& w : pt.weights) {
            forms.push_back(linear_form(w, frame.x));
            prod *= forms.back();
        }
        frame.cofactor.push_back(exact_div(frame.denominator, prod).scaled(Rational(pt.sign)));
        frame.forms.push_back(std::move(forms));
    }
    return frame;
}

std::map<Exponents, MultiPoly> fixed_point_numerators(const FixedPointData& fp, const LocalizationFrame& frame,
                                                      int max_weight, int threads) {
    if (max_weight < 0) return {};
    return grouped(fp, frame, max_weight, threads);
}

MultiPoly omega_numerator(const FixedPointData& fp, const LocalizationFrame& frame, const OmegaIndex& omega,
                          int threads) {
    std::size_t np = fp.points.size();
    std::vector<MultiPoly> parts(np);
    parallel_for(np, threads, [&](std::size_t p) { parts[p] = f_omega_at(omega, frame.forms[p]) * frame.cofactor[p]; });
    MultiPoly total(frame.x);
    for (const auto& part : parts) total += part;
    return total;
}

std::string VanishingReport::describe() const {
    if (ok) return "low-degree coefficients vanish";
    std::ostringstream out;
    out << "weight " << degree << " part is nonzero: (" << to_text(numerator) << ") / (" << to_text(denominator)
        << ")";
    return out.str();
}

GradedSeries chern_character_of_genus(const FixedPointData& fp, int order, int threads) {
    int n = fp.dimension();
    if (order < 0) throw TruncationTooLow("negative truncation");
    LocalizationFrame frame = localization_frame(fp);
    auto numerators = grouped(fp, frame, n + order, threads);
    Poly<CobordismPoly> series(frame.x);
    for (const auto& [omega, num] : numerators) {
        if (num.is_zero()) continue;
        int w = generator_weight(omega);
        if (w < n) throw SingularSum("fixed-point sum has a pole in weight " + std::to_string(w));
        MultiPoly q;
        try {
            q = exact_div(num, frame.denominator);
        } catch (const NotDivisible&) {
            throw SingularSum("fixed-point sum is not a polynomial in weight " + std::to_string(w));
        }
        CobordismPoly am = CobordismPoly::monomial(generator_arena(), omega, Rational(1));
        for (const auto& [e, c] : q.terms()) series.add_term(e, am.scaled(c));
    }
    return GradedSeries(series.truncated(order), order);
}

CobordismPoly cobordism_class(const FixedPointData& fp, int threads) {
    CobordismPoly cls = chern_character_of_genus(fp, 0, threads).coefficient({});
    if (!has_integer_coefficients(cls)) throw NonIntegerClass("cobordism class has non-integer coefficients");
    cls.set_arena(generator_arena());
    return cls;
}

VanishingReport verify_low_vanishing(const FixedPointData& fp, int threads) {
    int n = fp.dimension();
    VanishingReport report;
    LocalizationFrame frame = localization_frame(fp);
    report.denominator = frame.denominator;
    auto numerators = fixed_point_numerators(fp, frame, n - 1, threads);
    std::map<int, Poly<CobordismPoly>> by_weight;
    for (const auto& [omega, num] : numerators) {
        if (num.is_zero()) continue;
        CobordismPoly am = CobordismPoly::monomial(generator_arena(), omega, Rational(1));
        auto& slot = by_weight.try_emplace(generator_weight(omega), frame.x).first->second;
        for (const auto& [e, c] : num.terms()) slot.add_term(e, am.scaled(c));
    }
    if (!by_weight.empty()) {
        report.ok = false;
        report.degree = by_weight.begin()->first;
        report.numerator = by_weight.begin()->second;
    }
    return report;
}

SNumbers s_numbers(const FixedPointData& fp, int threads) {
    int n = fp.dimension();
    LocalizationFrame frame = localization_frame(fp);
    SNumbers out;
    for (const auto& omega : omegas(n, n)) {
        MultiPoly num = omega_numerator(fp, frame, omega, threads);
        MultiPoly q;
        try {
            q = exact_div(num, frame.denominator);
        } catch (const NotDivisible&) {
            throw NonConstantResult("s-number sum does not collapse to a constant");
        }
        if (!q.is_constant()) throw NonConstantResult("s-number sum does not collapse to a constant");
        Rational v = q.constant_term();
        if (v.get_den() != 1) throw NonIntegerClass("s-number is not an integer");
        out[omega] = v.get_num();
    }
    return out;
}

Rational s_number_numeric(const FixedPointData& fp, const OmegaIndex& omega, const std::vector<Integer>& point) {
    if (static_cast<int>(point.size()) != fp.rank)
        throw std::invalid_argument("numeric point must have " + std::to_string(fp.rank) + " coordinates");
    int n = fp.dimension();
    Partition lambda = omega_to_partition(omega);
    if (static_cast<int>(lambda.size()) > n) return Rational(0);
    MultiPoly orbit = orbit_monomial(partition_exponents(lambda, n), n, tangent_arena(n));
    Rational total = 0;
    for (const auto& pt : fp.points) {
        std::vector<Rational> t;
        Rational denom = 1;
        for (const auto& w : pt.weights) {
            Integer v = 0;
            for (std::size_t l = 0; l < w.size(); ++l) v += w[l] * point[l];
            if (v == 0) throw SingularPoint("a weight vanishes at the numeric point");
            t.emplace_back(v);
            denom *= v;
        }
        total += pt.sign * evaluate(orbit, t) / denom;
    }
    total.canonicalize();
    return total;
}

std::vector<Integer> default_numeric_point(const FixedPointData& fp) {
    int k = fp.rank;
    auto nonsingular = [&](const std::vector<Integer>& x) {
        for (const auto& pt : fp.points)
            for (const auto& w : pt.weights) {
                Integer v = 0;
                for (int l = 0; l < k; ++l) v += w[l] * x[l];
                if (v == 0) return false;
            }
        return true;
    };
    std::vector<Integer> x(k);
    for (int i = 0; i < k; ++i) x[i] = i;
    for (int attempt = 0; attempt < 64; ++attempt) {
        if (nonsingular(x)) return x;
        for (int i = 0; i < k; ++i) x[i] += k * (i + 1);
    }
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (;;) {
        for (int i = 0; i < k; ++i) x[i] = dist(rng);
        if (nonsingular(x)) return x;
    }
}

std::map<Exponents, CobordismPoly> genus_fibration_coefficients(const FixedPointData& fp, int order, int max_xi) {
    if (order < max_xi) throw TruncationTooLow("truncation must reach the requested |xi|");
    GradedSeries ch = chern_character_of_genus(fp, order);
    // x = r(y) inverts y = x / f(x).
    CoeffSeries u = CoeffSeries::variable(series_arena(), 0);
    CoeffSeries h = CoeffSeries::multiply(u, reciprocal_series(f_series(order), order), order);
    CoeffSeries r = reverse_series(h, order);
    ArenaPtr x = ch.arena() ? ch.arena() : geometric_arena(fp.rank);
    std::vector<Poly<CobordismPoly>> images;
    for (int i = 0; i < fp.rank; ++i)
        images.push_back(substitute(r, std::vector<CoeffSeries>{Poly<CobordismPoly>::variable(x, i)}, order));
    Poly<CobordismPoly> in_y = substitute(ch.poly(), images, order);
    std::map<Exponents, CobordismPoly> out;
    for (const auto& [e, c] : in_y.terms())
        if (total_degree(e) <= max_xi) out.emplace(e, c);
    return out;
}

CobordismPoly class_from_s_numbers(const SNumbers& s) {
    CobordismPoly cls(generator_arena());
    for (const auto& [omega, v] : s) cls.add_term(omega, Rational(v));
    return cls;
}

SNumbers s_numbers_from_class(const CobordismPoly& cls, int n) {
    SNumbers out;
    for (const auto& omega : omegas(n, n)) {
        Rational c = cls.coefficient(omega);
        if (c.get_den() != 1) throw NonIntegerClass("class coefficient is not an integer");
        out[omega] = c.get_num();
    }
    return out;
}

CobordismPoly indecomposable_part(const CobordismPoly& p) {
    CobordismPoly r(p.arena());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == 1) r.add_term(e, c);
    return r;
}

bool weyl_invariant(const GradedSeries& s, const std::vector<WeylElement>& gens) {
    for (const auto& g : gens)
        if (act_on_polynomial(g, s.poly()) != s.poly()) return false;
    return true;
}

bool weight_graded(const GradedSeries& s, int n) {
    for (const auto& [e, c] : s.poly().terms())
        if (!is_homogeneous_weight(c, n + total_degree(e))) return false;
    return true;
}

std::map<std::pair<int, int>, CobordismPoly> sigma_expansion(const GradedSeries& s) {
    ArenaPtr x = geometric_arena(2);
    MultiPoly x1 = MultiPoly::variable(x, 0), x2 = MultiPoly::variable(x, 1);
    MultiPoly sigma2 = -(x1 * x1 + x1 * x2 + x2 * x2);
    MultiPoly sigma3 = -(x1 * x2 * (x1 + x2));
    Poly<CobordismPoly> rest = s.poly();
    rest.set_arena(x);
    std::map<std::pair<int, int>, CobordismPoly> out;
    // The leading monomial of sigma2^i sigma3^j is x1^{2i+2j} x2^j, with coefficient (-1)^{i+j}.
    while (!rest.is_zero()) {
        const auto& [e, c] = rest.leading();
        Exponents lead = padded(e, 2);
        int j = lead[1], i2 = lead[0] - 2 * lead[1];
        if (i2 < 0 || i2 % 2) throw NotDivisible("series is not a polynomial in sigma_2, sigma_3");
        int i = i2 / 2;
        MultiPoly basis = sigma2.pow(i) * sigma3.pow(j);
        CobordismPoly coeff = c.scaled(1 / basis.leading().second);
        Poly<CobordismPoly> sub = basis.map_coefficients([&](const Rational& b) { return coeff.scaled(b); });
        rest -= sub;
        out.emplace(std::make_pair(i, j), coeff);
    }
    return out;
}

GenusResult compute_genus(const HomogeneousSpaceSpec& spec, int order, int threads) {
    FixedPointData fp = fixed_point_weights(spec);
    GenusResult r;
    r.series = chern_character_of_genus(fp, order, threads);
    r.cls = r.series.coefficient({});
    r.cls.set_arena(generator_arena());
    if (!has_integer_coefficients(r.cls)) throw NonIntegerClass("cobordism class has non-integer coefficients");
    r.s = s_numbers(fp, threads);
    if (class_from_s_numbers(r.s) != r.cls) throw SingularSum("series and s-number routes disagree");
    r.vanishing = verify_low_vanishing(fp, threads).ok;
    r.weyl_invariance = weyl_invariant(r.series, weyl_generators(spec));
    return r;
}

int default_series_order(int complex_dimension) {
    return std::max(1, 7 - complex_dimension);
}

}  // namespace torigen
