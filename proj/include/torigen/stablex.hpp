#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "torigen/genus.hpp"
#include "torigen/rootdata.hpp"

namespace torigen {

// a[w][i] = +-1 for coset w and complementary root i; epsilon compares orientations.
struct SignAssignment {
    std::vector<std::vector<int>> a;
    int epsilon = 1;

    static SignAssignment trivial(const HomogeneousSpaceSpec& spec);
    bool operator==(const SignAssignment& o) const { return a == o.a && epsilon == o.epsilon; }
};

// Weights a_i(w) w(alpha_i) and signs epsilon * prod_i a_i(w).
FixedPointData derived_fixed_point_data(const HomogeneousSpaceSpec& spec, const SignAssignment& assign);

struct NecessaryReport {
    bool ok = true;
    std::string stage;  // "vanishing" or "integrality" on failure
    OmegaIndex omega;
    std::string value;
    std::string describe() const;
};

NecessaryReport check_necessary(const HomogeneousSpaceSpec& spec, const SignAssignment& assign, int threads = 0);

// Admissible assignments, reported with epsilon = +1 (the conditions do not
// depend on epsilon). Candidates are ordered by the bit pattern of -1 entries,
// coset-major; BudgetExceeded when 2^{n chi} exceeds the budget.
std::vector<SignAssignment> enumerate_feasible(const HomogeneousSpaceSpec& spec, long long budget = 1LL << 20,
                                               int threads = 0);

SNumbers s_numbers_for(const HomogeneousSpaceSpec& spec, const SignAssignment& assign, int threads = 0);

// Negates every a with epsilon kept, giving the conjugate weights and the
// point signs multiplied by (-1)^n.
SignAssignment conjugate(const SignAssignment& assign);

// {"0": [1, -1, ...], "1": [...], "epsilon": -1}
SignAssignment assignment_from_json(const nlohmann::json& j, const HomogeneousSpaceSpec& spec);
nlohmann::json to_json(const SignAssignment& assign);
std::string to_text(const SignAssignment& assign);

}  // namespace torigen
