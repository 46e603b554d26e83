#pragma once

#include <map>

#include "torigen/genus.hpp"
#include "torigen/symmfunc.hpp"

namespace torigen {

// Keyed by xi = (l_1, ..., l_n) with sum k*l_k = n, value c_1^{l_1}...c_n^{l_n}[M].
using ChernNumberTable = std::map<Exponents, Integer>;

ChernNumberTable s_to_chern(const SNumbers& s, int n);
SNumbers chern_to_s(const ChernNumberTable& c, int n);

// Printing order: c_n first, c_1^n last (descending lexicographic partitions).
std::vector<Exponents> chern_keys(int n);
// "c1^2*c2" style label; "1" for n = 0.
std::string chern_label(const Exponents& xi);

}  // namespace torigen
