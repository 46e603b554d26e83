#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "torigen/exactalg.hpp"
#include "torigen/symmfunc.hpp"

namespace torigen {

using SeriesPoly = Poly<CobordismPoly>;

// L p = (sum_sigma sign(sigma) sigma(p)) / Delta_n.
MultiPoly operator_L(const MultiPoly& p, int n, int threads = 0);
SeriesPoly operator_L(const SeriesPoly& p, int n, int threads = 0);

// d_i p = (p - s_i p) / (x_i - x_{i+1}), 1 <= i < n.
MultiPoly divided_difference(int i, const MultiPoly& p);
// Applies d_{word[0]} first, then d_{word[1]}, ...
MultiPoly apply_divided_differences(const std::vector<int>& word, const MultiPoly& p);

Permutation longest_element(int n);
// Word (i_1, ..., i_p), 1-based, with v = s_{i_1} ... s_{i_p}; descents are
// peeled from the right, taking the leftmost (default) or rightmost one.
std::vector<int> reduced_word(const Permutation& v, bool rightmost_descent = false);
MultiPoly staircase_monomial(int n, ArenaPtr arena = nullptr);
// G_w = nabla_w x^delta, nabla_w from a reduced word of w0 w.
MultiPoly schubert_polynomial(const Permutation& w, int n, bool rightmost_descent = false);

// Coefficient of x^xi in prod_{i<j} f(x_i - x_j) (the t-degree equals |xi|).
CobordismPoly flag_P_polynomial(int n, const Exponents& xi);
// Q_{(q+l,l) xi}: coefficient of x^xi in Delta_q Delta_{q+1,q+l} prod_{i<=q<j} f(x_i - x_j).
CobordismPoly grassmann_Q_polynomial(int q, int l, const Exponents& xi);

enum class FlagMethod { CorL, TChi, Thm8 };
FlagMethod parse_flag_method(std::string_view name);
std::string flag_method_name(FlagMethod m);
CobordismPoly flag_class(int n, FlagMethod method, int threads = 0);

enum class GrassmannMethod { L, Q };
GrassmannMethod parse_grassmann_method(std::string_view name);
CobordismPoly grassmann_class(int q, int l, GrassmannMethod method = GrassmannMethod::L, int threads = 0);

// Exponent vectors sigma(delta) with their signs, in lexicographic order of sigma.
std::vector<std::pair<Exponents, int>> staircase_orbit(int n);

struct FlagCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct FlagVanishingReport {
    int n = 0;
    std::vector<FlagCheck> checks;
    bool ok() const;
};

FlagVanishingReport flag_vanishing_checks(int n, int threads = 0);

}  // namespace torigen
