#pragma once

#include "torigen/exactalg.hpp"
#include "torigen/rootdata.hpp"

namespace torigen {

// Series in one or more formal variables with cobordism coefficients,
// truncated by total degree.
using CoeffSeries = Poly<CobordismPoly>;

ArenaPtr series_arena();          // u
ArenaPtr bivariate_arena();       // u, v
ArenaPtr bracket_arena(int k);    // u1..uk

// g(u) = u + sum_{n>=1} b_n u^{n+1}.
CoeffSeries log_series(int order);
// f(s) = 1 + sum a_i s^i in the single variable of `arena` (default u).
CoeffSeries f_series(int order, ArenaPtr arena = nullptr);

// F(u, v) = g^{-1}(g(u) + g(v)).
CoeffSeries fgl_addition(int order);
// [w](u) = g^{-1}(w g(u)).
CoeffSeries power_system(int w, int order);
// [0] = 0, [w] = F(u, [w-1]); negative w through the formal inverse.
CoeffSeries power_system_recursive(int w, int order);
// i(u) with F(u, i(u)) = 0, solved degree by degree from F alone.
CoeffSeries formal_inverse(int order);
// Iterated formal sum F([L_1](u_1), ..., [L_k](u_k)).
CoeffSeries multi_bracket(const Weight& lambda, int order);
// Same series from the logarithm: g^{-1}(sum_l L_l g(u_l)).
CoeffSeries multi_bracket_closed(const Weight& lambda, int order);

// <L, x> / f(<L, x>) in x_1..x_k with a-coefficients.
GradedSeries chern_dold_of_bracket(const Weight& lambda, int order);

// Coefficient rewrites between the generator families, derived from
// x / f(x) = g^{-1}(x) and cached per order.
CobordismPoly b_in_terms_of_a(int n);
CobordismPoly a_in_terms_of_b(int n);
CobordismPoly rewrite_b_to_a(const CobordismPoly& p);
CobordismPoly rewrite_a_to_b(const CobordismPoly& p);
CoeffSeries rewrite_b_to_a(const CoeffSeries& s);

// Truncation used when a caller does not give one: half the real dimension plus one.
int default_fgl_order(int complex_dimension);

}  // namespace torigen
