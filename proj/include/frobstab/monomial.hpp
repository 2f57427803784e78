#pragma once

#include <string>
#include <vector>

#include "frobstab/fp.hpp"
#include "frobstab/linalg.hpp"

namespace frobstab {

// Exponent vector K = (k_1, ..., k_n) of an alpha-monomial
// alpha_1^{k_1} ... alpha_n^{k_n}. Comparison is lexicographic, which fixes
// the basis order used everywhere.
struct ExponentVec {
    std::vector<int> k;

    ExponentVec() = default;
    explicit ExponentVec(std::vector<int> e) : k(std::move(e)) {}

    int size() const { return static_cast<int>(k.size()); }
    int degree() const;
    bool is_zero() const { return degree() == 0; }
    int operator[](int i) const { return k[static_cast<std::size_t>(i)]; }

    friend bool operator==(const ExponentVec& a, const ExponentVec& b) { return a.k == b.k; }
    friend bool operator!=(const ExponentVec& a, const ExponentVec& b) { return a.k != b.k; }
    friend bool operator<(const ExponentVec& a, const ExponentVec& b) { return a.k < b.k; }

    std::string str() const; // "(1,0,2)"
};

// All K in [0, bound]^n in lexicographic order.
std::vector<ExponentVec> cube_lex(int n, int bound);

// All K in [0, bound]^n with |K| = total, in lexicographic order.
std::vector<ExponentVec> bounded_compositions(int n, int bound, int total);

// Position of K in the lexicographic listing of the full cube [0, p-1]^n.
Index monomial_index(const ExponentVec& K, std::uint32_t p);

// Monomial basis of the subspace spanned by alpha-monomials of degree at
// least min_degree; min_degree = 0 gives all p^n monomials and
// min_degree = n(p-1)+1 gives the empty list.
std::vector<ExponentVec> alpha_basis(PrimeChar p, int n, int min_degree);

// Exact binomial coefficient; throws on 64-bit overflow. Zero outside the
// Pascal triangle.
long long binomial(long long n, long long k);

// base^exp with overflow detection.
long long checked_pow(long long base, int exp);

} // namespace frobstab
