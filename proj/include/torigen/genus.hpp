#pragma once

#include <map>
#include <string>
#include <vector>

#include "torigen/exactalg.hpp"
#include "torigen/rootdata.hpp"
#include "torigen/symmfunc.hpp"

namespace torigen {

using SNumbers = std::map<OmegaIndex, Integer>;

// Common denominator for a fixed-point sum: D is the product of the distinct
// weight lines (each to its largest multiplicity at a single point) and
// cofactor[p] = sign(p) * D / prod_j <L_j(p), x>.
struct LocalizationFrame {
    ArenaPtr x;
    MultiPoly denominator;
    std::vector<MultiPoly> cofactor;
    std::vector<std::vector<MultiPoly>> forms;
};

LocalizationFrame localization_frame(const FixedPointData& fp);

// Numerator of sum_p sign(p) f_omega(L(p)) / prod L(p) over the common
// denominator; omega may have any weight.
MultiPoly omega_numerator(const FixedPointData& fp, const LocalizationFrame& frame, const OmegaIndex& omega,
                          int threads = 0);

// Grouped numerators over the common denominator, keyed by the a-monomial
// (an omega exponent vector, trimmed), for all omega of weight <= max_weight.
std::map<Exponents, MultiPoly> fixed_point_numerators(const FixedPointData& fp, const LocalizationFrame& frame,
                                                      int max_weight, int threads = 0);

struct VanishingReport {
    bool ok = true;
    int degree = -1;                   // first weight l < n with a nonzero part
    Poly<CobordismPoly> numerator;     // that part over the common denominator
    MultiPoly denominator;
    std::string describe() const;
};

// ch_U Phi through geometric degree `order`.
GradedSeries chern_character_of_genus(const FixedPointData& fp, int order, int threads = 0);
CobordismPoly cobordism_class(const FixedPointData& fp, int threads = 0);
VanishingReport verify_low_vanishing(const FixedPointData& fp, int threads = 0);
SNumbers s_numbers(const FixedPointData& fp, int threads = 0);
Rational s_number_numeric(const FixedPointData& fp, const OmegaIndex& omega, const std::vector<Integer>& point);
std::vector<Integer> default_numeric_point(const FixedPointData& fp);

// [G_xi] for |xi| <= max_xi, reading ch_U Phi in y_i = x_i / f(x_i).
std::map<Exponents, CobordismPoly> genus_fibration_coefficients(const FixedPointData& fp, int order, int max_xi);

CobordismPoly class_from_s_numbers(const SNumbers& s);
SNumbers s_numbers_from_class(const CobordismPoly& cls, int n);
CobordismPoly indecomposable_part(const CobordismPoly& p);

bool weyl_invariant(const GradedSeries& s, const std::vector<WeylElement>& gens);
bool weight_graded(const GradedSeries& s, int n);

struct GenusResult {
    GradedSeries series;
    CobordismPoly cls;
    SNumbers s;
    bool vanishing = true;
    bool weyl_invariance = true;
};

// Expansion of a series in x1, x2 (x3 = -x1 - x2) in sigma_2^i sigma_3^j of
// (x1, x2, x3); key (i, j). Throws NotDivisible when the series is not of that form.
std::map<std::pair<int, int>, CobordismPoly> sigma_expansion(const GradedSeries& s);

GenusResult compute_genus(const HomogeneousSpaceSpec& spec, int order, int threads = 0);
// Truncation used for series checks when none is requested; keeps the larger
// flag manifolds at desk-scale cost.
int default_series_order(int complex_dimension);

}  // namespace torigen
