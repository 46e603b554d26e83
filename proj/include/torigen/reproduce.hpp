#pragma once

#include <set>
#include <string>
#include <vector>

namespace torigen {

struct ReproRow {
    int criterion = 0;
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

// Every acceptance value, recomputed and compared exactly. An empty set runs all criteria (1..8).
std::vector<ReproRow> reproduce_table(const std::set<int>& criteria = {}, int threads = 0);

// Short titles for the eight criteria.
std::string criterion_title(int criterion);

}  // namespace torigen
