#pragma once

#include <cstdint>
#include <vector>

#include "frobstab/caps.hpp"
#include "frobstab/fp.hpp"
#include "frobstab/linalg.hpp"
#include "frobstab/monomial.hpp"
#include "frobstab/report.hpp"

namespace frobstab {

// Words over the alphabet {1..n} of length l index the basis of the l-fold
// tensor power of the standard n-dimensional space: the word (w_1..w_l)
// stands for e_{w_1} (x) ... (x) e_{w_l}. Position 0 is the most significant
// digit of the index.
Index word_index(const std::vector<int>& word, int n);
std::vector<int> word_at(Index idx, int n, int l);

// Letter multiplicities of a word: content(w)_i = #{t : w_t = i}.
ExponentVec word_content(const std::vector<int>& word, int n);

// Symmetrized vector v(K) = sum over all sigma in S_l of the base word
// 1^{k_1} 2^{k_2} ... n^{k_n} with positions permuted by sigma, l = |K|.
// Coordinates in the word basis, length n^l. Cost l! terms.
FpVector v_vector_naive(PrimeChar p, int n, const ExponentVec& K, const Caps& caps = {});

// Same vector by the closed form: (k_1! ... k_n!) times the sum of the
// distinct words of content K. Vanishes exactly when some k_i >= p.
FpVector v_vector_closed(PrimeChar p, int n, const ExponentVec& K, const Caps& caps = {});

// Span of { v(K) : |K| = l, 0 <= k_i <= p-1 } inside the l-fold tensor power.
SubspaceBasis rep_subspace_basis(PrimeChar p, int n, int l, const Caps& caps = {});

// Number of K in [0, bound]^n with |K| = total, by inclusion-exclusion.
long long dim_bounded_compositions(int n, int bound, int total);

// dim Sym^l of an n-dimensional space: C(n+l-1, l).
long long sym_dim(int n, int l);

// Checks that the span of the v(K) is carried to itself by g^{(x) l} for
// `samples` pseudo-random g in GL_n(F_p). Deterministic for fixed
// (seed, p, n, l).
VerificationReport gl_equivariance_check(PrimeChar p, int n, int l, int samples,
                                         std::uint64_t seed, const Caps& caps = {});

// Comparison of the span of the v(K) with Sym^l via the content projection
// (word -> its letter multiplicities). Requires 0 < l < p: below the
// characteristic the projection is injective and the dimensions agree.
struct SymComparison {
    long long subspace_dim = 0;
    long long symmetric_dim = 0;
    bool dims_equal = false;
    bool projection_injective = false;
};

SymComparison sym_compare(PrimeChar p, int n, int l, const Caps& caps = {});

} // namespace frobstab
