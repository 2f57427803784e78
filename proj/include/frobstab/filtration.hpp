#pragma once

#include <vector>

#include "frobstab/caps.hpp"
#include "frobstab/linalg.hpp"
#include "frobstab/local_algebra.hpp"
#include "frobstab/report.hpp"

namespace frobstab {

// Canonical filtration of the rank-r pullback fiber: the ambient space is
// r * p^n dimensional, indexed component-major (component s, monomial K at
// s * p^n + index(K)), the connection acts on each component separately, and
//   V_0 = everything, V_1 = ker(alpha^0 coefficient per component),
//   V_{i+1} = { v in V_i : D_j v in V_i for all j }.
// The chain is stored through the first zero term.
class CanonicalFiltration {
public:
    CanonicalFiltration(PrimeChar p, int n, int r, const Caps& caps = {});

    PrimeChar characteristic() const { return p_; }
    int vars() const { return n_; }
    int rank() const { return r_; }
    Index ambient_dim() const { return ambient_; }

    // number of steps before the zero subspace; equals n(p-1)+1 when the
    // expected shape holds
    int zero_index() const { return static_cast<int>(steps_.size()) - 1; }
    const std::vector<SubspaceBasis>& steps() const { return steps_; }
    // V_i; indices past the stored chain give the zero subspace
    const SubspaceBasis& step(int i) const;
    Index graded_dim(int i) const; // dim V_i/V_{i+1}

    const std::vector<FpMatrix>& connection() const { return connection_; }

private:
    PrimeChar p_;
    int n_;
    int r_;
    Index ambient_;
    std::vector<SubspaceBasis> steps_;
    std::vector<FpMatrix> connection_;
};

// Matrix of the map V_i/V_{i+1} -> (V_{i-1}/V_i)^n induced by v -> (D_j v)_j
// in canonical quotient coordinates (entries of the reduced representative
// at the pivot columns of the subspace that are not pivots of the next one).
struct GradedMap {
    int level = 0;
    FpMatrix matrix; // (n * dim gr_{i-1}) x (dim gr_i)
    Index source_dim = 0;
    Index target_dim = 0;
    bool injective = false;
};

GradedMap graded_map(const CanonicalFiltration& filt, int i);

// Image of the degree-l monomials under l applications of the connection
// followed by evaluation at alpha = 0: a subspace of the l-fold tensor power
// of the n-dimensional cotangent space, computed by term rewriting.
SubspaceBasis nabla_power_image(PrimeChar p, int n, int l, const Caps& caps = {});

// Dense matrix of the l-fold connection fiber -> fiber (x) (cotangent)^{(x)l}
// as a product of one-step matrices (Kronecker construction). Row index is
// fiber_index * n^l + word_index. Intended for small cross-checks.
FpMatrix nabla_power_matrix(PrimeChar p, int n, int l, const Caps& caps = {});

// Full clause-by-clause verification for one (p, n, r):
//   (a) the chain has length n(p-1)+1 before hitting zero, and the last
//       nonzero step sits at n(p-1);
//   (b) each step is carried into the previous one by the connection;
//   (c) the graded maps are injective for 1 <= i <= n(p-1);
//   (d) recursion agrees with the monomial description span{alpha^K:|K|>=i},
//       graded dimensions are r times the bounded-composition counts, and
//       the l-fold connection image equals the span of the symmetrized
//       tensors v(K);
//   (e) below the characteristic the graded dimensions match r * dim Sym^l.
VerificationReport verify_canonical_filtration(PrimeChar p, int n, int r,
                                               const Caps& caps = {});

} // namespace frobstab
