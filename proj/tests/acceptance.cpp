#include <iostream>
#include <map>

#include "torigen/reproduce.hpp"

int main() {
    auto rows = torigen::reproduce_table();
    std::map<int, bool> verdict;
    for (int c = 1; c <= 8; ++c) verdict[c] = true;
    for (const auto& r : rows) {
        verdict[r.criterion] = verdict[r.criterion] && r.pass;
        if (!r.pass) std::cerr << "  [" << r.criterion << "] " << r.name << ": expected " << r.expected << ", got " << r.actual << "\n";
    }
    bool ok = true;
    for (const auto& [c, pass] : verdict) {
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c << ": " << torigen::criterion_title(c) << "\n";
        ok = ok && pass;
    }
    return ok ? 0 : 1;
}
