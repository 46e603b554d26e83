#include "torigen/stablex.hpp"

#include <random>
#include <sstream>

#include "torigen/parallel.hpp"
#include "torigen/render.hpp"

namespace torigen {

SignAssignment SignAssignment::trivial(const HomogeneousSpaceSpec& spec) {
    SignAssignment s;
    s.a.assign(weyl_cosets(spec).size(), std::vector<int>(spec.dimension(), 1));
    return s;
}

namespace {

void validate(const FixedPointData& base, const SignAssignment& assign) {
    if (assign.epsilon != 1 && assign.epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
    if (assign.a.size() != base.points.size())
        throw std::invalid_argument("assignment must list all " + std::to_string(base.points.size()) + " cosets");
    for (const auto& row : assign.a) {
        if (static_cast<int>(row.size()) != base.dimension())
            throw std::invalid_argument("each coset needs " + std::to_string(base.dimension()) + " signs");
        for (int v : row)
            if (v != 1 && v != -1) throw std::invalid_argument("signs must be +1 or -1");
    }
}

FixedPointData derive(const FixedPointData& base, const SignAssignment& assign) {
    validate(base, assign);
    FixedPointData fp = base;
    for (std::size_t p = 0; p < fp.points.size(); ++p) {
        int sign = assign.epsilon;
        for (std::size_t i = 0; i < fp.points[p].weights.size(); ++i) {
            int a = assign.a[p][i];
            sign *= a;
            if (a < 0) fp.points[p].weights[i] = negated(fp.points[p].weights[i]);
        }
        fp.points[p].sign = sign;
    }
    return fp;
}

std::string omega_text(const OmegaIndex& omega) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < omega.size(); ++i) out << (i ? "," : "") << omega[i];
    out << ")";
    return out.str();
}

// Linear k = 1 relation at fixed integer points: sum_p eps sum_i a_i v_pi / prod_i v_pi = 0,
// scaled to integers. A nonzero value at any point rules the candidate out; the
// relation is a vanishing condition only when n >= 2.
struct LinearFilter {
    std::vector<std::vector<std::vector<Integer>>> coeff;  // [point sample][coset][root]

    LinearFilter(const FixedPointData& base, int samples) {
        std::mt19937_64 rng(7919);
        std::uniform_int_distribution<long> dist(-97, 97);
        std::vector<Integer> x = default_numeric_point(base);
        for (int s = 0; s < samples; ++s) {
            if (s > 0) {
                bool ok = false;
                while (!ok) {
                    for (auto& xi : x) xi = dist(rng);
                    ok = true;
                    for (const auto& pt : base.points)
                        for (const auto& w : pt.weights)
                            if (value(w, x) == 0) ok = false;
                }
            }
            std::vector<std::vector<Rational>> c;
            Integer lcm = 1;
            for (const auto& pt : base.points) {
                Integer prod = 1;
                for (const auto& w : pt.weights) prod *= value(w, x);
                std::vector<Rational> row;
                for (const auto& w : pt.weights) {
                    Rational r(value(w, x), prod);
                    r.canonicalize();
                    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den_mpz_t());
                    row.push_back(r);
                }
                c.push_back(std::move(row));
            }
            std::vector<std::vector<Integer>> scaled;
            for (const auto& row : c) {
                std::vector<Integer> srow;
                for (const auto& r : row) srow.push_back(Integer(r * lcm));
                scaled.push_back(std::move(srow));
            }
            coeff.push_back(std::move(scaled));
        }
    }

    static Integer value(const Weight& w, const std::vector<Integer>& x) {
        Integer v = 0;
        for (std::size_t l = 0; l < w.size(); ++l) v += w[l] * x[l];
        return v;
    }

    bool passes(unsigned long long bits, int n) const {
        Integer total;
        for (const auto& sample : coeff) {
            total = 0;
            for (std::size_t p = 0; p < sample.size(); ++p)
                for (int i = 0; i < n; ++i) {
                    if ((bits >> (p * n + i)) & 1ULL)
                        total -= sample[p][i];
                    else
                        total += sample[p][i];
                }
            if (total != 0) return false;
        }
        return true;
    }
};

SignAssignment from_bits(unsigned long long bits, std::size_t points, int n) {
    SignAssignment s;
    s.a.assign(points, std::vector<int>(n, 1));
    for (std::size_t p = 0; p < points; ++p)
        for (int i = 0; i < n; ++i)
            if ((bits >> (p * n + i)) & 1ULL) s.a[p][i] = -1;
    return s;
}

NecessaryReport check_derived(const FixedPointData& fp, int threads) {
    NecessaryReport report;
    int n = fp.dimension();
    LocalizationFrame frame = localization_frame(fp);
    auto numerators = fixed_point_numerators(fp, frame, n - 1, threads);
    std::vector<OmegaIndex> low;
    for (int w = 0; w < n; ++w)
        for (const auto& o : omegas(w, n)) low.push_back(o);
    for (const auto& omega : low) {
        auto it = numerators.find(trimmed(omega));
        if (it == numerators.end() || it->second.is_zero()) continue;
        report.ok = false;
        report.stage = "vanishing";
        report.omega = omega;
        report.value = "(" + to_text(it->second) + ") / (" + to_text(frame.denominator) + ")";
        return report;
    }
    for (const auto& omega : omegas(n, n)) {
        MultiPoly num = omega_numerator(fp, frame, omega, threads);
        MultiPoly q;
        bool polynomial = true;
        try {
            q = exact_div(num, frame.denominator);
        } catch (const NotDivisible&) {
            polynomial = false;
        }
        if (!polynomial || !q.is_constant()) {
            report.ok = false;
            report.stage = "integrality";
            report.omega = omega;
            report.value = "(" + to_text(num) + ") / (" + to_text(frame.denominator) + ")";
            return report;
        }
        Rational v = q.constant_term();
        if (v.get_den() != 1) {
            report.ok = false;
            report.stage = "integrality";
            report.omega = omega;
            report.value = to_string(v);
            return report;
        }
    }
    return report;
}

}  // namespace

FixedPointData derived_fixed_point_data(const HomogeneousSpaceSpec& spec, const SignAssignment& assign) {
    return derive(fixed_point_weights(spec), assign);
}

std::string NecessaryReport::describe() const {
    if (ok) return "admissible";
    return stage + " fails at omega " + omega_text(omega) + ": " + value;
}

NecessaryReport check_necessary(const HomogeneousSpaceSpec& spec, const SignAssignment& assign, int threads) {
    return check_derived(derived_fixed_point_data(spec, assign), threads);
}

std::vector<SignAssignment> enumerate_feasible(const HomogeneousSpaceSpec& spec, long long budget, int threads) {
    FixedPointData base = fixed_point_weights(spec);
    int n = base.dimension();
    std::size_t points = base.points.size();
    std::size_t bits = points * n;
    if (bits >= 62 || (1LL << bits) > budget)
        throw BudgetExceeded("2^" + std::to_string(bits) + " candidates exceed the budget of " +
                             std::to_string(budget));
    unsigned long long total = 1ULL << bits;
    LinearFilter filter(base, 2);

    const unsigned long long chunk = 1ULL << 12;
    std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
    std::vector<std::vector<unsigned long long>> survivors(chunks);
    parallel_for(chunks, threads, [&](std::size_t c) {
        unsigned long long end = std::min(total, (c + 1) * chunk);
        for (unsigned long long m = c * chunk; m < end; ++m)
            if (n < 2 || filter.passes(m, n)) survivors[c].push_back(m);
    });
    std::vector<unsigned long long> candidates;
    for (const auto& s : survivors) candidates.insert(candidates.end(), s.begin(), s.end());

    std::vector<char> ok(candidates.size(), 0);
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
        ok[i] = check_derived(derive(base, from_bits(candidates[i], points, n)), 1).ok;
    });
    std::vector<SignAssignment> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (ok[i]) out.push_back(from_bits(candidates[i], points, n));
    return out;
}

SNumbers s_numbers_for(const HomogeneousSpaceSpec& spec, const SignAssignment& assign, int threads) {
    return s_numbers(derived_fixed_point_data(spec, assign), threads);
}

SignAssignment conjugate(const SignAssignment& assign) {
    SignAssignment r = assign;
    for (auto& row : r.a)
        for (auto& v : row) v = -v;
    return r;
}

SignAssignment assignment_from_json(const nlohmann::json& j, const HomogeneousSpaceSpec& spec) {
    if (!j.is_object()) throw ParseError("assignment must be a JSON object");
    std::size_t cosets = weyl_cosets(spec).size();
    SignAssignment s;
    s.a.assign(cosets, {});
    std::vector<bool> seen(cosets, false);
    for (const auto& [key, value] : j.items()) {
        if (key == "epsilon") {
            if (!value.is_number_integer()) throw ParseError("epsilon must be an integer");
            s.epsilon = value.get<int>();
            continue;
        }
        std::size_t idx;
        try {
            std::size_t used = 0;
            idx = std::stoul(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("unexpected key '" + key + "' in assignment");
        }
        if (idx >= cosets) throw ParseError("coset index " + key + " out of range");
        if (!value.is_array()) throw ParseError("coset " + key + " must map to an array");
        s.a[idx] = value.get<std::vector<int>>();
        seen[idx] = true;
    }
    for (std::size_t i = 0; i < cosets; ++i)
        if (!seen[i]) throw ParseError("assignment is missing coset " + std::to_string(i));
    validate(fixed_point_weights(spec), s);
    return s;
}

nlohmann::json to_json(const SignAssignment& assign) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < assign.a.size(); ++i) j[std::to_string(i)] = assign.a[i];
    j["epsilon"] = assign.epsilon;
    return j;
}

std::string to_text(const SignAssignment& assign) {
    std::ostringstream out;
    for (std::size_t p = 0; p < assign.a.size(); ++p) {
        out << (p ? " | " : "") << "(";
        for (std::size_t i = 0; i < assign.a[p].size(); ++i) out << (i ? "," : "") << assign.a[p][i];
        out << ")";
    }
    out << " eps=" << assign.epsilon;
    return out.str();
}

}  // namespace torigen
