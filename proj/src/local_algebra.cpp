#include "frobstab/local_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "frobstab/errors.hpp"

namespace frobstab {

namespace {

std::string monomial_str(const ExponentVec& K, const char* letter) {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < K.size(); ++i) {
        if (K[i] == 0) continue;
        if (any) os << '*';
        os << letter << (i + 1);
        if (K[i] > 1) os << '^' << K[i];
        any = true;
    }
    if (!any) os << '1';
    return os.str();
}

std::string combination_str(const std::map<ExponentVec, Fp>& terms, const char* letter) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [K, c] : terms) {
        if (!first) os << " + ";
        os << c.value() << '*' << monomial_str(K, letter);
        first = false;
    }
    return os.str();
}

} // namespace

// --- FiberVector -----------------------------------------------------------

FiberVector::FiberVector(PrimeChar p, int n) : p_(p), n_(n) {
    if (n < 1) throw usage_error("FiberVector: n must be positive");
}

void FiberVector::check_exponent(const ExponentVec& K) const {
    if (K.size() != n_) throw usage_error("FiberVector: exponent length mismatch");
    for (int i = 0; i < n_; ++i)
        if (K[i] < 0 || static_cast<std::uint32_t>(K[i]) >= p_.value())
            throw usage_error("FiberVector: exponent out of range [0, p-1]");
}

void FiberVector::check_compatible(const FiberVector& other) const {
    if (!(p_ == other.p_) || n_ != other.n_)
        throw usage_error("FiberVector: mixed characteristic or variable count");
}

Fp FiberVector::coeff(const ExponentVec& K) const {
    check_exponent(K);
    auto it = terms_.find(K);
    return it == terms_.end() ? Fp(p_, 0) : it->second;
}

void FiberVector::set_coeff(const ExponentVec& K, Fp c) {
    check_exponent(K);
    c = Fp(p_, 0) + c; // adopt context, validate characteristic
    if (c.is_zero()) terms_.erase(K);
    else terms_[K] = c;
}

void FiberVector::add_coeff(const ExponentVec& K, Fp c) {
    set_coeff(K, coeff(K) + c);
}

bool FiberVector::is_zero() const { return terms_.empty(); }

FiberVector& FiberVector::operator+=(const FiberVector& other) {
    check_compatible(other);
    for (const auto& [K, c] : other.terms_) add_coeff(K, c);
    return *this;
}

FiberVector& FiberVector::operator*=(Fp c) {
    FiberVector out(p_, n_);
    for (const auto& [K, v] : terms_) out.add_coeff(K, v * c);
    *this = std::move(out);
    return *this;
}

std::string FiberVector::str() const { return combination_str(terms_, "a"); }

FiberVector algebra_multiply(const FiberVector& a, const FiberVector& b) {
    if (!(a.characteristic() == b.characteristic()) || a.vars() != b.vars())
        throw usage_error("algebra_multiply: mixed characteristic or variable count");
    const auto p = a.characteristic();
    const int n = a.vars();
    FiberVector out(p, n);
    for (const auto& [K, c] : a.terms()) {
        for (const auto& [L, d] : b.terms()) {
            std::vector<int> sum(static_cast<std::size_t>(n));
            bool dead = false;
            for (int i = 0; i < n; ++i) {
                sum[static_cast<std::size_t>(i)] = K[i] + L[i];
                if (sum[static_cast<std::size_t>(i)] >= static_cast<int>(p.value())) {
                    dead = true; // alpha_i^p = 0
                    break;
                }
            }
            if (!dead) out.add_coeff(ExponentVec(std::move(sum)), c * d);
        }
    }
    return out;
}

ConnectionOutput connection_apply(const FiberVector& v) {
    const auto p = v.characteristic();
    const int n = v.vars();
    ConnectionOutput out;
    out.components.assign(static_cast<std::size_t>(n), FiberVector(p, n));
    for (const auto& [K, c] : v.terms()) {
        for (int j = 0; j < n; ++j) {
            if (K[j] == 0) continue;
            std::vector<int> down = K.k;
            --down[static_cast<std::size_t>(j)];
            out.components[static_cast<std::size_t>(j)].add_coeff(
                ExponentVec(std::move(down)), c * Fp(p, -static_cast<long long>(K[j])));
        }
    }
    return out;
}

FpVector fiber_to_dense(const FiberVector& v) {
    const auto p = v.characteristic();
    const Index dim = static_cast<Index>(checked_pow(p.value(), v.vars()));
    FpVector out = FpVector::Constant(dim, Fp(p, 0));
    for (const auto& [K, c] : v.terms()) out(monomial_index(K, p.value())) = c;
    return out;
}

FiberVector fiber_from_dense(const FpVector& coords, PrimeChar p, int n) {
    const Index dim = static_cast<Index>(checked_pow(p.value(), n));
    if (coords.size() != dim) throw usage_error("fiber_from_dense: coordinate length mismatch");
    FiberVector out(p, n);
    const auto basis = cube_lex(n, static_cast<int>(p.value()) - 1);
    for (Index i = 0; i < dim; ++i)
        if (!coords(i).is_zero()) out.set_coeff(basis[static_cast<std::size_t>(i)], coords(i));
    return out;
}

std::vector<FpMatrix> connection_matrices(PrimeChar p, int n) {
    const Index dim = static_cast<Index>(checked_pow(p.value(), n));
    const auto basis = cube_lex(n, static_cast<int>(p.value()) - 1);
    std::vector<FpMatrix> mats(static_cast<std::size_t>(n), fp_zeros(p, dim, dim));
    for (Index col = 0; col < dim; ++col) {
        FiberVector mono(p, n);
        mono.set_coeff(basis[static_cast<std::size_t>(col)], Fp(p, 1));
        ConnectionOutput d = connection_apply(mono);
        for (int j = 0; j < n; ++j)
            for (const auto& [K, c] : d.components[static_cast<std::size_t>(j)].terms())
                mats[static_cast<std::size_t>(j)](monomial_index(K, p.value()), col) = c;
    }
    return mats;
}

std::vector<SubspaceBasis> filtration_from_definition(PrimeChar p, int n, const Caps& caps) {
    const long long dim_ll = checked_pow(p.value(), n);
    caps.check_fiber(dim_ll);
    const Index N = static_cast<Index>(dim_ll);
    const auto mats = connection_matrices(p, n);

    std::vector<SubspaceBasis> chain;
    chain.push_back(SubspaceBasis::span_of_rows(fp_identity(p, N), p));

    // Step one is the kernel of evaluation at alpha = 0, i.e. of the row
    // functional picking out the alpha^0 coefficient (index 0).
    FpMatrix ev = fp_zeros(p, 1, N);
    ev(0, 0) = Fp(p, 1);
    FpMatrix k1 = kernel_basis(ev, p);
    chain.push_back(SubspaceBasis::span_of_rows(k1.transpose(), p));

    // V_{i+1} = { v in V_i : D_j v in V_i for all j }, via the kernel of the
    // stacked residuals of D_j on a basis of V_i.
    while (!chain.back().is_zero()) {
        const SubspaceBasis& Vi = chain.back();
        const Index d = Vi.dim();
        FpMatrix residuals = fp_zeros(p, static_cast<Index>(n) * N, d);
        for (Index t = 0; t < d; ++t) {
            FpVector b = Vi.rows().row(t).transpose();
            for (int j = 0; j < n; ++j) {
                FpVector res = Vi.reduce(mats[static_cast<std::size_t>(j)] * b);
                residuals.block(static_cast<Index>(j) * N, t, N, 1) = res;
            }
        }
        FpMatrix coeffs = kernel_basis(residuals, p); // d x m
        FpMatrix new_rows = coeffs.transpose() * Vi.rows();
        SubspaceBasis next = SubspaceBasis::span_of_rows(new_rows, p);
        if (next.dim() == Vi.dim())
            throw std::logic_error("filtration_from_definition: recursion stalled");
        chain.push_back(std::move(next));
    }
    return chain;
}

SubspaceBasis filtration_closed_form(PrimeChar p, int n, int i) {
    const Index N = static_cast<Index>(checked_pow(p.value(), n));
    const auto monos = alpha_basis(p, n, std::max(i, 0));
    FpMatrix rows = fp_zeros(p, static_cast<Index>(monos.size()), N);
    for (std::size_t t = 0; t < monos.size(); ++t)
        rows(static_cast<Index>(t), monomial_index(monos[t], p.value())) = Fp(p, 1);
    return SubspaceBasis::span_of_rows(rows, p);
}

// --- TruncatedPoly ----------------------------------------------------------

TruncatedPoly::TruncatedPoly(PrimeChar p, int n, int max_degree)
    : p_(p), n_(n), max_degree_(max_degree) {
    if (n < 1) throw usage_error("TruncatedPoly: n must be positive");
    if (max_degree < 0) throw usage_error("TruncatedPoly: max_degree must be nonnegative");
}

Fp TruncatedPoly::coeff(const ExponentVec& M) const {
    auto it = terms_.find(M);
    return it == terms_.end() ? Fp(p_, 0) : it->second;
}

void TruncatedPoly::add_coeff(const ExponentVec& M, Fp c) {
    if (M.size() != n_) throw usage_error("TruncatedPoly: exponent length mismatch");
    for (int i = 0; i < n_; ++i)
        if (M[i] < 0) throw usage_error("TruncatedPoly: negative exponent");
    if (M.degree() > max_degree_) return; // truncated away
    Fp sum = coeff(M) + c;
    if (sum.is_zero()) terms_.erase(M);
    else terms_[M] = Fp(p_, 0) + sum;
}

bool TruncatedPoly::is_zero() const { return terms_.empty(); }

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& other) {
    if (!(p_ == other.p_) || n_ != other.n_ || max_degree_ != other.max_degree_)
        throw usage_error("TruncatedPoly: incompatible operands");
    for (const auto& [M, c] : other.terms_) add_coeff(M, c);
    return *this;
}

TruncatedPoly& TruncatedPoly::operator*=(Fp c) {
    TruncatedPoly out(p_, n_, max_degree_);
    for (const auto& [M, v] : terms_) out.add_coeff(M, v * c);
    *this = std::move(out);
    return *this;
}

TruncatedPoly multiply(const TruncatedPoly& a, const TruncatedPoly& b) {
    if (!(a.p_ == b.p_) || a.n_ != b.n_ || a.max_degree_ != b.max_degree_)
        throw usage_error("TruncatedPoly: incompatible operands");
    TruncatedPoly out(a.p_, a.n_, a.max_degree_);
    for (const auto& [M, c] : a.terms_) {
        for (const auto& [L, d] : b.terms_) {
            std::vector<int> sum(static_cast<std::size_t>(a.n_));
            for (int i = 0; i < a.n_; ++i) sum[static_cast<std::size_t>(i)] = M[i] + L[i];
            out.add_coeff(ExponentVec(std::move(sum)), c * d);
        }
    }
    return out;
}

std::string TruncatedPoly::str() const { return combination_str(terms_, "x"); }

// --- BimoduleElement --------------------------------------------------------

BimoduleElement::BimoduleElement(PrimeChar p, int n, int max_degree)
    : p_(p), n_(n), max_degree_(max_degree) {
    if (n < 1) throw usage_error("BimoduleElement: n must be positive");
    if (max_degree < 0) throw usage_error("BimoduleElement: max_degree must be nonnegative");
}

TruncatedPoly BimoduleElement::part(const ExponentVec& L) const {
    auto it = parts_.find(L);
    return it == parts_.end() ? TruncatedPoly(p_, n_, max_degree_) : it->second;
}

void BimoduleElement::add_term(const ExponentVec& M, const ExponentVec& L, Fp c) {
    if (M.size() != n_ || L.size() != n_)
        throw usage_error("BimoduleElement: exponent length mismatch");
    const int p = static_cast<int>(p_.value());
    // Reduce the right exponent modulo x_i^p, carrying p-th powers across:
    // 1 (x) x_i^p = x_i^p (x) 1.
    std::vector<int> left = M.k, right(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        if (L[i] < 0) throw usage_error("BimoduleElement: negative right exponent");
        right[static_cast<std::size_t>(i)] = L[i] % p;
        left[static_cast<std::size_t>(i)] += (L[i] / p) * p;
    }
    ExponentVec rkey(std::move(right));
    auto [it, inserted] = parts_.try_emplace(rkey, TruncatedPoly(p_, n_, max_degree_));
    it->second.add_coeff(ExponentVec(std::move(left)), c);
    if (it->second.is_zero()) parts_.erase(it);
}

bool BimoduleElement::is_zero() const { return parts_.empty(); }

BimoduleElement& BimoduleElement::operator+=(const BimoduleElement& other) {
    if (!(p_ == other.p_) || n_ != other.n_ || max_degree_ != other.max_degree_)
        throw usage_error("BimoduleElement: incompatible operands");
    for (const auto& [L, poly] : other.parts_)
        for (const auto& [M, c] : poly.terms()) add_term(M, L, c);
    return *this;
}

BimoduleElement& BimoduleElement::operator*=(Fp c) {
    BimoduleElement out(p_, n_, max_degree_);
    for (const auto& [L, poly] : parts_)
        for (const auto& [M, v] : poly.terms()) out.add_term(M, L, v * c);
    *this = std::move(out);
    return *this;
}

BimoduleElement multiply(const BimoduleElement& a, const BimoduleElement& b) {
    if (!(a.p_ == b.p_) || a.n_ != b.n_ || a.max_degree_ != b.max_degree_)
        throw usage_error("BimoduleElement: incompatible operands");
    BimoduleElement out(a.p_, a.n_, a.max_degree_);
    for (const auto& [L, f] : a.parts_) {
        for (const auto& [Lb, g] : b.parts_) {
            TruncatedPoly prod = multiply(f, g);
            std::vector<int> rsum(static_cast<std::size_t>(a.n_));
            for (int i = 0; i < a.n_; ++i) rsum[static_cast<std::size_t>(i)] = L[i] + Lb[i];
            ExponentVec rexp(std::move(rsum));
            for (const auto& [M, c] : prod.terms()) out.add_term(M, rexp, c);
        }
    }
    return out;
}

std::string BimoduleElement::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [L, poly] : parts_) {
        if (!first) os << " + ";
        os << '(' << poly.str() << ") (x) " << monomial_str(L, "x");
        first = false;
    }
    return os.str();
}

BimoduleElement embed_generator(PrimeChar p, int n, const ExponentVec& K, int max_degree) {
    if (K.size() != n) throw usage_error("embed_generator: exponent length mismatch");
    if (K.is_zero()) throw usage_error("embed_generator: K must be nonzero");
    if (max_degree < static_cast<int>(p.value()) * n)
        throw usage_error("embed_generator: max_degree must be at least p*n");
    BimoduleElement out(p, n, max_degree);
    ExponentVec zero(std::vector<int>(static_cast<std::size_t>(n), 0));
    out.add_term(K, zero, Fp(p, 1));
    out.add_term(zero, K, Fp(p, -1));
    return out;
}

std::map<ExponentVec, TruncatedPoly> alpha_expansion(const BimoduleElement& v) {
    const auto p = v.characteristic();
    const int n = v.vars();
    const int D = v.max_degree();
    const int pm1 = static_cast<int>(p.value()) - 1;

    // Writing v = sum_L g_L(x) alpha^L and expanding alpha^L in the tensor
    // basis gives, for each right exponent M,
    //   f_M = (-1)^{|M|} sum_{L >= M} C(L, M) x^{L-M} g_L.
    // The system is triangular for the componentwise order, so solve with M
    // running lexicographically downward (a linear extension of it).
    auto cube = cube_lex(n, pm1);
    std::map<ExponentVec, TruncatedPoly> g;
    for (auto it = cube.rbegin(); it != cube.rend(); ++it) {
        const ExponentVec& M = *it;
        TruncatedPoly acc = v.part(M);
        acc *= Fp(p, (M.degree() % 2 == 0) ? 1 : -1); // (-1)^{|M|} f_M
        // subtract C(L, M) x^{L-M} g_L over L > M with L >= M componentwise
        for (const auto& [L, gL] : g) {
            long long binom = 1;
            bool dominates = true;
            std::vector<int> diff(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                if (L[i] < M[i]) { dominates = false; break; }
                diff[static_cast<std::size_t>(i)] = L[i] - M[i];
                binom *= binomial(L[i], M[i]);
            }
            if (!dominates || L == M) continue;
            TruncatedPoly shifted(p, n, D);
            for (const auto& [E, c] : gL.terms()) {
                std::vector<int> sum(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    sum[static_cast<std::size_t>(i)] = E[i] + diff[static_cast<std::size_t>(i)];
                shifted.add_coeff(ExponentVec(std::move(sum)), c * Fp(p, -binom));
            }
            acc += shifted;
        }
        if (!acc.is_zero()) g.emplace(M, std::move(acc));
    }
    return g;
}

VerificationReport verify_generation(PrimeChar p, int n, int max_degree, const Caps& caps) {
    if (max_degree < static_cast<int>(p.value()) * n)
        throw usage_error("verify_generation: max_degree must be at least p*n");
    caps.check_fiber(checked_pow(p.value(), n));
    const int pm1 = static_cast<int>(p.value()) - 1;
    const ExponentVec zero(std::vector<int>(static_cast<std::size_t>(n), 0));

    VerificationReport rep;
    {
        std::ostringstream os;
        os << "generation p=" << p.value() << " n=" << n << " trunc=" << max_degree;
        rep.subject = os.str();
    }

    // alpha^L as a bimodule element, for every L in the cube
    std::map<ExponentVec, BimoduleElement> alpha_powers;
    {
        std::vector<BimoduleElement> alphas;
        for (int i = 0; i < n; ++i) {
            std::vector<int> ei(static_cast<std::size_t>(n), 0);
            ei[static_cast<std::size_t>(i)] = 1;
            alphas.push_back(embed_generator(p, n, ExponentVec(ei), max_degree));
        }
        for (const auto& L : cube_lex(n, pm1)) {
            BimoduleElement pow(p, n, max_degree);
            pow.add_term(zero, zero, Fp(p, 1));
            for (int i = 0; i < n; ++i)
                for (int t = 0; t < L[i]; ++t)
                    pow = multiply(pow, alphas[static_cast<std::size_t>(i)]);
            alpha_powers.emplace(L, std::move(pow));
        }
    }

    // (1) Every x^K (x) 1 - 1 (x) x^K with K nonzero has vanishing alpha^0
    // part, hence lies in the left submodule spanned by alpha^L, L nonzero.
    bool span_ok = true;
    std::string span_witness;
    // (2) The expansion recomposes to the original element (exactness check).
    bool roundtrip_ok = true;
    std::string roundtrip_witness;
    for (const auto& K : cube_lex(n, pm1)) {
        if (K.is_zero()) continue;
        BimoduleElement gen = embed_generator(p, n, K, max_degree);
        auto expansion = alpha_expansion(gen);
        auto it = expansion.find(zero);
        if (it != expansion.end() && !it->second.is_zero()) {
            span_ok = false;
            span_witness = "K=" + K.str() + " alpha^0 part " + it->second.str();
            break;
        }
        BimoduleElement recomposed(p, n, max_degree);
        for (const auto& [L, gL] : expansion) {
            BimoduleElement gl_elem(p, n, max_degree);
            for (const auto& [E, c] : gL.terms()) gl_elem.add_term(E, zero, c);
            recomposed += multiply(gl_elem, alpha_powers.at(L));
        }
        recomposed *= Fp(p, -1);
        recomposed += gen;
        if (!recomposed.is_zero()) {
            roundtrip_ok = false;
            roundtrip_witness = "K=" + K.str() + " residual " + recomposed.str();
            break;
        }
    }
    rep.add("augmentation-span",
            "alpha^0 part of x^K (x) 1 - 1 (x) x^K vanishes for all nonzero K in [0,p-1]^n",
            span_ok, span_witness);
    rep.add("expansion-roundtrip",
            "sum_L g_L alpha^L recomposes each generator below the truncation order",
            roundtrip_ok, roundtrip_witness);

    // (3) K = e_i recovers alpha_i itself with unit coefficient.
    bool unit_ok = true;
    std::string unit_witness;
    for (int i = 0; i < n && unit_ok; ++i) {
        std::vector<int> ei(static_cast<std::size_t>(n), 0);
        ei[static_cast<std::size_t>(i)] = 1;
        ExponentVec Ei(ei);
        auto expansion = alpha_expansion(embed_generator(p, n, Ei, max_degree));
        bool exact = expansion.size() == 1 && expansion.count(Ei) == 1 &&
                     expansion.at(Ei).terms().size() == 1 &&
                     expansion.at(Ei).coeff(zero) == Fp(p, 1);
        if (!exact) {
            unit_ok = false;
            unit_witness = "i=" + std::to_string(i + 1);
        }
    }
    rep.add("coordinate-generators",
            "x_i (x) 1 - 1 (x) x_i expands to exactly alpha_i", unit_ok, unit_witness);

    // (4) alpha_i^p = 0, exercising the right-exponent carry.
    bool nilpotent_ok = true;
    std::string nil_witness;
    for (int i = 0; i < n && nilpotent_ok; ++i) {
        std::vector<int> ei(static_cast<std::size_t>(n), 0);
        ei[static_cast<std::size_t>(i)] = 1;
        BimoduleElement ai = embed_generator(p, n, ExponentVec(ei), max_degree);
        BimoduleElement pow(p, n, max_degree);
        pow.add_term(zero, zero, Fp(p, 1));
        for (std::uint32_t t = 0; t < p.value(); ++t) pow = multiply(pow, ai);
        if (!pow.is_zero()) {
            nilpotent_ok = false;
            nil_witness = "i=" + std::to_string(i + 1) + " power " + pow.str();
        }
    }
    rep.add("alpha-nilpotence", "(x_i (x) 1 - 1 (x) x_i)^p = 0", nilpotent_ok, nil_witness);

    return rep;
}

} // namespace frobstab
