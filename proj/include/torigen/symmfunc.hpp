#pragma once

#include <map>
#include <vector>

#include "torigen/exactalg.hpp"

namespace torigen {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;
// (i_1, ..., i_n): i_k counts the parts equal to k.
using OmegaIndex = std::vector<int>;
// One-line notation, 0-based: perm[i] is the image of i.
using Permutation = std::vector<int>;

int omega_weight(const OmegaIndex& omega);
Partition omega_to_partition(const OmegaIndex& omega);
OmegaIndex partition_to_omega(const Partition& lambda, int length);
// Partitions of n in ascending lexicographic order: (1,...,1) first, (n) last.
std::vector<Partition> partitions(int n);
// All omega of the given weight with `length` entries, in partition order.
std::vector<OmegaIndex> omegas(int weight, int length);
// The partition written as an exponent vector of length n.
Exponents partition_exponents(const Partition& lambda, int n);

std::vector<Permutation> permutations(int n);  // lexicographic
int permutation_sign(const Permutation& p);
Permutation inverse(const Permutation& p);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b

// sigma acts on polynomials by x_i -> x_{sigma(i)}.
MultiPoly permute_variables(const MultiPoly& p, const Permutation& sigma);
template <class C>
Poly<C> permute_variables_generic(const Poly<C>& p, const Permutation& sigma) {
    Poly<C> r(p.arena());
    for (const auto& [e, c] : p.terms()) {
        Exponents f(sigma.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[sigma[i]] = e[i];
        r.add_term(std::move(f), c);
    }
    return r;
}

MultiPoly orbit_monomial(const Exponents& xi, int n, ArenaPtr arena = nullptr);
MultiPoly elementary(int k, int n, ArenaPtr arena = nullptr);
MultiPoly power_sum(int k, int n, ArenaPtr arena = nullptr);
MultiPoly vandermonde(int n, ArenaPtr arena = nullptr);
// Delta over the variables first..last (1-based, inclusive).
MultiPoly vandermonde_range(int first, int last, int n, ArenaPtr arena = nullptr);
MultiPoly antisymmetrize(const MultiPoly& p, int n);
MultiPoly schur(const Partition& lambda, int n, ArenaPtr arena = nullptr);

// f_omega(t_1..t_n) = coefficient of a^omega in prod_i f(t_i), all weights <= nmax.
std::map<OmegaIndex, MultiPoly> f_omega_decomposition(int n, int nmax, ArenaPtr arena = nullptr);

// Expansion O(shape omega) = sum_xi beta_{omega,xi} sigma_1^{l_1}...sigma_n^{l_n},
// n = weight of omega; xi = (l_1, ..., l_n).
std::map<Exponents, Integer> monomial_to_elementary(const OmegaIndex& omega);

using BetaMatrix = std::map<OmegaIndex, std::map<Exponents, Integer>>;
// Cached per n (thread-safe; persisted through the disk cache when enabled).
const BetaMatrix& beta_matrix(int n);
// Same table from the inverse of the 0-1 matrix counts N(mu, lambda) in e_mu = sum N m_lambda.
BetaMatrix beta_by_counting(int n);
// Rebuilds an orbit polynomial from a beta row, for round-trip checks.
MultiPoly elementary_expansion(const std::map<Exponents, Integer>& row, int n, ArenaPtr arena = nullptr);

}  // namespace torigen
