#pragma once

#include <map>
#include <string>
#include <vector>

#include "frobstab/caps.hpp"
#include "frobstab/fp.hpp"
#include "frobstab/linalg.hpp"
#include "frobstab/monomial.hpp"
#include "frobstab/report.hpp"

namespace frobstab {

// Element of the fiber algebra in characteristic p with n local coordinates:
// an Fp-combination of alpha-monomials alpha^K with K in [0, p-1]^n, where
// alpha_i satisfies alpha_i^p = 0. The fiber has dimension p^n.
class FiberVector {
public:
    FiberVector(PrimeChar p, int n);

    PrimeChar characteristic() const { return p_; }
    int vars() const { return n_; }

    Fp coeff(const ExponentVec& K) const;
    void set_coeff(const ExponentVec& K, Fp c);
    void add_coeff(const ExponentVec& K, Fp c);

    bool is_zero() const;
    const std::map<ExponentVec, Fp>& terms() const { return terms_; }

    FiberVector& operator+=(const FiberVector& other);
    FiberVector& operator*=(Fp c);
    friend FiberVector operator+(FiberVector a, const FiberVector& b) { return a += b; }

    std::string str() const;

private:
    void check_compatible(const FiberVector& other) const;
    void check_exponent(const ExponentVec& K) const;

    PrimeChar p_;
    int n_;
    std::map<ExponentVec, Fp> terms_; // nonzero coefficients only
};

// Product in the fiber algebra: alpha^K * alpha^L = alpha^{K+L}, zero as soon
// as some k_i + l_i >= p.
FiberVector algebra_multiply(const FiberVector& a, const FiberVector& b);

// Value of the canonical connection on a fiber element: the dx_j component
// for each coordinate. D_j(alpha^K) = -k_j alpha^{K - e_j}.
struct ConnectionOutput {
    std::vector<FiberVector> components; // size n, component j pairs with dx_{j+1}
};

ConnectionOutput connection_apply(const FiberVector& v);

// Dense coordinates of a fiber element in the lexicographic monomial basis
// of the full cube (length p^n), and back.
FpVector fiber_to_dense(const FiberVector& v);
FiberVector fiber_from_dense(const FpVector& coords, PrimeChar p, int n);

// Matrix of D_j on the full fiber in the lexicographic basis, one per
// coordinate, acting on column vectors.
std::vector<FpMatrix> connection_matrices(PrimeChar p, int n);

// Decreasing filtration V_0 = fiber > V_1 > ... computed from the recursion
//   V_0 = fiber, V_1 = ker(evaluation at alpha = 0),
//   V_{i+1} = { v in V_i : D_j v in V_i for all j },
// continued until the zero subspace, which is included as the last entry.
std::vector<SubspaceBasis> filtration_from_definition(PrimeChar p, int n, const Caps& caps = {});

// The same filtration step in closed form: span of alpha^K with |K| >= i.
SubspaceBasis filtration_closed_form(PrimeChar p, int n, int i);

// --- bimodule model -------------------------------------------------------
//
// The fiber algebra is a quotient of A (x)_{A^p} A for A = k[x_1..x_n]
// localized at the origin. We model elements as finite maps
//   right exponent L (componentwise < p)  ->  left polynomial in the x_i,
// truncated at total degree D on the left. Right exponents reduce modulo the
// relation 1 (x) x_i^p = x_i^p (x) 1, which moves overflow to the left side.

// Polynomial in x_1..x_n over Fp truncated at total degree <= D.
class TruncatedPoly {
public:
    TruncatedPoly(PrimeChar p, int n, int max_degree);

    PrimeChar characteristic() const { return p_; }
    int vars() const { return n_; }
    int max_degree() const { return max_degree_; }

    Fp coeff(const ExponentVec& M) const;
    void add_coeff(const ExponentVec& M, Fp c); // silently drops degree > D
    bool is_zero() const;
    const std::map<ExponentVec, Fp>& terms() const { return terms_; }

    TruncatedPoly& operator+=(const TruncatedPoly& other);
    TruncatedPoly& operator*=(Fp c);
    friend TruncatedPoly multiply(const TruncatedPoly& a, const TruncatedPoly& b);

    std::string str() const;

private:
    PrimeChar p_;
    int n_;
    int max_degree_;
    std::map<ExponentVec, Fp> terms_;
};

// Element of the truncated bimodule: sum over right exponents L in [0,p-1]^n
// of f_L(x) (x) x^L with f_L a truncated left polynomial.
class BimoduleElement {
public:
    BimoduleElement(PrimeChar p, int n, int max_degree);

    PrimeChar characteristic() const { return p_; }
    int vars() const { return n_; }
    int max_degree() const { return max_degree_; }

    const std::map<ExponentVec, TruncatedPoly>& parts() const { return parts_; }
    TruncatedPoly part(const ExponentVec& L) const;
    // Adds c * x^M (x) x^L, wrapping right-exponent overflow to the left via
    // 1 (x) x_i^p = x_i^p (x) 1.
    void add_term(const ExponentVec& M, const ExponentVec& L, Fp c);
    bool is_zero() const;

    BimoduleElement& operator+=(const BimoduleElement& other);
    BimoduleElement& operator*=(Fp c);
    friend BimoduleElement multiply(const BimoduleElement& a, const BimoduleElement& b);

    std::string str() const;

private:
    PrimeChar p_;
    int n_;
    int max_degree_;
    std::map<ExponentVec, TruncatedPoly> parts_; // nonzero parts only
};

// x^K (x) 1 - 1 (x) x^K, the generator attached to the monomial x^K.
// Requires K nonzero and max_degree >= p * n.
BimoduleElement embed_generator(PrimeChar p, int n, const ExponentVec& K, int max_degree);

// Expansion of a bimodule element in the alpha-monomial basis over the left
// factor: v = sum_L g_L(x) * alpha^L with alpha_i = x_i (x) 1 - 1 (x) x_i.
// Exact below the truncation order: terms of g_L of degree
// <= max_degree - |L| are correct.
std::map<ExponentVec, TruncatedPoly> alpha_expansion(const BimoduleElement& v);

// Checks that every alpha-monomial with K nonzero lies in the left submodule
// generated by the elements x^K (x) 1 - 1 (x) x^K: concretely, that the
// alpha^0 coefficient of each generator's expansion vanishes and the degree-1
// exponents recover each alpha_i with unit leading coefficient.
VerificationReport verify_generation(PrimeChar p, int n, int max_degree, const Caps& caps = {});

} // namespace frobstab
