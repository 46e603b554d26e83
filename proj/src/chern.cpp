#include "torigen/chern.hpp"

#include <algorithm>
#include <sstream>

namespace torigen {

std::vector<Exponents> chern_keys(int n) {
    std::vector<Exponents> keys;
    for (const auto& lambda : partitions(n)) keys.push_back(partition_to_omega(lambda, n));
    std::reverse(keys.begin(), keys.end());
    return keys;
}

std::string chern_label(const Exponents& xi) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < xi.size(); ++k) {
        if (!xi[k]) continue;
        if (!first) out << "*";
        first = false;
        out << "c" << k + 1;
        if (xi[k] > 1) out << "^" << xi[k];
    }
    if (first) out << "1";
    return out.str();
}

SNumbers chern_to_s(const ChernNumberTable& c, int n) {
    const BetaMatrix& beta = beta_matrix(n);
    SNumbers s;
    for (const auto& [omega, row] : beta) {
        Integer v = 0;
        for (const auto& [xi, b] : row) {
            auto it = c.find(padded(xi, n));
            if (it == c.end()) throw std::invalid_argument("Chern table is missing " + chern_label(xi));
            v += b * it->second;
        }
        s[omega] = v;
    }
    return s;
}

ChernNumberTable s_to_chern(const SNumbers& s, int n) {
    const BetaMatrix& beta = beta_matrix(n);
    std::vector<Exponents> keys = chern_keys(n);
    std::map<Exponents, std::size_t> column;
    for (std::size_t j = 0; j < keys.size(); ++j) column[keys[j]] = j;
    std::size_t dim = keys.size();

    // Augmented system rows in omega order; Gaussian elimination over Q.
    std::vector<std::vector<Rational>> a;
    for (const auto& omega : omegas(n, n)) {
        auto it = s.find(omega);
        if (it == s.end()) throw std::invalid_argument("s-number table is incomplete");
        std::vector<Rational> row(dim + 1, Rational(0));
        for (const auto& [xi, b] : beta.at(omega)) row[column.at(padded(xi, n))] = Rational(b);
        row[dim] = Rational(it->second);
        a.push_back(std::move(row));
    }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && sgn(a[pivot][col]) == 0) ++pivot;
        if (pivot == dim) throw std::logic_error("transition matrix is singular");
        std::swap(a[pivot], a[col]);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k <= dim; ++k) a[r][k] -= f * a[col][k];
        }
    }
    ChernNumberTable c;
    for (std::size_t j = 0; j < dim; ++j) {
        Rational v = a[j][dim] / a[j][j];
        v.canonicalize();
        if (v.get_den() != 1) throw NonIntegerSolution("Chern number " + chern_label(keys[j]) + " is not an integer");
        c[keys[j]] = v.get_num();
    }
    return c;
}

}  // namespace torigen
