#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "torigen/exactalg.hpp"
#include "torigen/symmfunc.hpp"

namespace torigen {

// Coefficients of a linear form sum_l w_l x_l.
using Weight = std::vector<int>;

MultiPoly linear_form(const Weight& w, ArenaPtr arena = nullptr);
bool is_primitive(const Weight& w);
Weight negated(const Weight& w);

struct WeylElement {
    std::vector<std::vector<int>> matrix;  // acts on weight coefficient vectors
    Permutation perm;                       // set for permutation matrices

    static WeylElement identity(int k);
    static WeylElement from_permutation(const Permutation& p);
    static WeylElement from_matrix(std::vector<std::vector<int>> m);

    Weight apply(const Weight& w) const;
    WeylElement operator*(const WeylElement& o) const;  // this after o
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    bool operator<(const WeylElement& o) const { return matrix < o.matrix; }
};

// Pulls a polynomial in x back along w: p(x) -> p(M^T x), so that the linear
// form of w.apply(L) is the pullback of the linear form of L.
template <class C>
Poly<C> act_on_polynomial(const WeylElement& w, const Poly<C>& p) {
    int k = static_cast<int>(w.matrix.size());
    ArenaPtr arena = p.arena();
    std::vector<Poly<C>> images;
    for (int i = 0; i < k; ++i) {
        Poly<C> img(arena);
        for (int j = 0; j < k; ++j)
            if (w.matrix[j][i]) {
                Exponents e(j + 1, 0);
                e[j] = 1;
                img.add_term(e, scale_coeff(CoeffTraits<C>::one(), Rational(w.matrix[j][i])));
            }
        images.push_back(img);
    }
    return substitute(p, images);
}

enum class GroupKind { Unitary, SpecialUnitary, G2 };

struct HomogeneousSpaceSpec {
    std::string descriptor;
    GroupKind group = GroupKind::Unitary;
    int group_rank = 0;           // n of U(n); 2 for G2
    std::vector<int> blocks;      // block sizes in layout order (A-series)
    int rank = 0;                 // k, number of torus coordinates
    std::vector<Weight> roots;    // complementary roots, fixed order
    std::vector<int> signs;       // structure signs epsilon_i
    int point_sign = 1;           // sign attached to every fixed point
    std::string structure = "standard";

    int dimension() const { return static_cast<int>(roots.size()); }  // complex dimension n
    Weight structure_root(int i) const;
};

HomogeneousSpaceSpec build_space(std::string_view descriptor);
// Presets: standard, conjugate, J1, J2, J3 (the last three for M10 only).
HomogeneousSpaceSpec with_structure(HomogeneousSpaceSpec spec, std::string_view name);
HomogeneousSpaceSpec with_signs(HomogeneousSpaceSpec spec, const std::vector<int>& signs);
std::vector<int> parse_signs(std::string_view text);
std::string space_grammar();

std::vector<WeylElement> weyl_generators(const HomogeneousSpaceSpec& spec);
std::vector<WeylElement> subgroup_generators(const HomogeneousSpaceSpec& spec);
std::vector<WeylElement> generate_group(const std::vector<WeylElement>& gens, int k);
std::vector<WeylElement> weyl_cosets(const HomogeneousSpaceSpec& spec);
long euler_characteristic(const HomogeneousSpaceSpec& spec);

struct FixedPoint {
    WeylElement rep;
    std::vector<Weight> weights;
    int sign = 1;
};

struct FixedPointData {
    int rank = 0;
    std::vector<FixedPoint> points;
    int dimension() const { return points.empty() ? 0 : static_cast<int>(points.front().weights.size()); }
};

FixedPointData fixed_point_weights(const HomogeneousSpaceSpec& spec);

}  // namespace torigen
