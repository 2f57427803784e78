#include "frobstab/tensor_rep.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "frobstab/errors.hpp"

namespace frobstab {

Index word_index(const std::vector<int>& word, int n) {
    Index idx = 0;
    for (int letter : word) {
        if (letter < 1 || letter > n) throw usage_error("word_index: letter out of range [1, n]");
        idx = idx * n + (letter - 1);
    }
    return idx;
}

std::vector<int> word_at(Index idx, int n, int l) {
    if (idx < 0 || l < 0) throw usage_error("word_at: negative argument");
    std::vector<int> word(static_cast<std::size_t>(l));
    for (int t = l - 1; t >= 0; --t) {
        word[static_cast<std::size_t>(t)] = static_cast<int>(idx % n) + 1;
        idx /= n;
    }
    if (idx != 0) throw usage_error("word_at: index out of range");
    return word;
}

ExponentVec word_content(const std::vector<int>& word, int n) {
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (int letter : word) {
        if (letter < 1 || letter > n) throw usage_error("word_content: letter out of range");
        ++counts[static_cast<std::size_t>(letter - 1)];
    }
    return ExponentVec(std::move(counts));
}

namespace {

std::vector<int> base_word(const ExponentVec& K) {
    std::vector<int> w;
    for (int i = 0; i < K.size(); ++i) {
        if (K[i] < 0) throw usage_error("v_vector: negative exponent");
        w.insert(w.end(), static_cast<std::size_t>(K[i]), i + 1);
    }
    return w;
}

Index tensor_space_dim(int n, int l, const Caps& caps) {
    if (n < 1) throw usage_error("tensor space: n must be positive");
    if (l < 0) throw usage_error("tensor space: l must be nonnegative");
    long long dim = checked_pow(n, l);
    caps.check_tensor(dim);
    return static_cast<Index>(dim);
}

} // namespace

FpVector v_vector_naive(PrimeChar p, int n, const ExponentVec& K, const Caps& caps) {
    if (K.size() != n) throw usage_error("v_vector_naive: exponent length mismatch");
    const int l = K.degree();
    caps.check_naive(l);
    const Index dim = tensor_space_dim(n, l, caps);
    FpVector out = FpVector::Constant(dim, Fp(p, 0));

    const std::vector<int> base = base_word(K);
    std::vector<int> perm(static_cast<std::size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    // one term per element of S_l, repeats included
    do {
        std::vector<int> w(static_cast<std::size_t>(l));
        for (int t = 0; t < l; ++t)
            w[static_cast<std::size_t>(t)] = base[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])];
        out(word_index(w, n)) += Fp(p, 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

FpVector v_vector_closed(PrimeChar p, int n, const ExponentVec& K, const Caps& caps) {
    if (K.size() != n) throw usage_error("v_vector_closed: exponent length mismatch");
    const int l = K.degree();
    const Index dim = tensor_space_dim(n, l, caps);
    FpVector out = FpVector::Constant(dim, Fp(p, 0));

    Fp coeff(p, 1);
    for (int i = 0; i < K.size(); ++i) coeff *= factorial_mod_p(K[i], p);
    if (coeff.is_zero()) return out; // some k_i >= p

    std::vector<int> w = base_word(K); // ascending, the lex-least arrangement
    do {
        out(word_index(w, n)) = coeff;
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

SubspaceBasis rep_subspace_basis(PrimeChar p, int n, int l, const Caps& caps) {
    const Index dim = tensor_space_dim(n, l, caps);
    const auto contents = bounded_compositions(n, static_cast<int>(p.value()) - 1, l);
    FpMatrix rows = fp_zeros(p, static_cast<Index>(contents.size()), dim);
    for (std::size_t t = 0; t < contents.size(); ++t)
        rows.row(static_cast<Index>(t)) = v_vector_closed(p, n, contents[t], caps).transpose();
    SubspaceBasis span = SubspaceBasis::span_of_rows(rows, p);
    // Distinct contents occupy disjoint sets of words, and each coefficient
    // k_1!...k_n! is a unit for k_i <= p-1, so the v(K) are independent.
    if (span.dim() != static_cast<Index>(contents.size()))
        throw std::logic_error("rep_subspace_basis: generators unexpectedly dependent");
    return span;
}

long long dim_bounded_compositions(int n, int bound, int total) {
    if (n < 0 || bound < 0) throw usage_error("dim_bounded_compositions: bad arguments");
    if (total < 0) return 0;
    long long acc = 0;
    for (int j = 0; j <= n; ++j) {
        long long rem = static_cast<long long>(total) - static_cast<long long>(j) * (bound + 1);
        if (rem < 0) break;
        long long term = binomial(n, j) * binomial(rem + n - 1, n - 1);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

long long sym_dim(int n, int l) {
    if (n < 1 || l < 0) throw usage_error("sym_dim: bad arguments");
    return binomial(n + l - 1, l);
}

namespace {

// vec <- (g along mode t) vec for the word-index layout above
FpVector apply_mode(PrimeChar p, const FpMatrix& g, const FpVector& vec, int n, int l, int t) {
    const Index before = static_cast<Index>(checked_pow(n, t));
    const Index after = static_cast<Index>(checked_pow(n, l - 1 - t));
    FpVector out = FpVector::Constant(vec.size(), Fp(p, 0));
    for (Index a = 0; a < before; ++a)
        for (Index b = 0; b < after; ++b) {
            const Index off = a * static_cast<Index>(n) * after + b;
            for (int i = 0; i < n; ++i) {
                Fp acc(p, 0);
                for (int j = 0; j < n; ++j)
                    acc += g(i, j) * vec(off + static_cast<Index>(j) * after);
                out(off + static_cast<Index>(i) * after) = acc;
            }
        }
    return out;
}

FpVector apply_tensor_power(PrimeChar p, const FpMatrix& g, const FpVector& vec, int n, int l) {
    FpVector cur = vec;
    for (int t = 0; t < l; ++t) cur = apply_mode(p, g, cur, n, l, t);
    return cur;
}

} // namespace

VerificationReport gl_equivariance_check(PrimeChar p, int n, int l, int samples,
                                         std::uint64_t seed, const Caps& caps) {
    if (samples < 1) throw usage_error("gl_equivariance_check: samples must be positive");
    VerificationReport rep;
    {
        std::ostringstream os;
        os << "equivariance p=" << p.value() << " n=" << n << " l=" << l
           << " samples=" << samples << " seed=" << seed;
        rep.subject = os.str();
    }
    SubspaceBasis span = rep_subspace_basis(p, n, l, caps);

    std::seed_seq sseq{seed, static_cast<std::uint64_t>(p.value()),
                       static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(l)};
    std::mt19937_64 rng(sseq);
    auto random_entry = [&] { return Fp(p, static_cast<long long>(rng() % p.value())); };

    bool ok = true;
    std::string witness;
    for (int s = 0; s < samples && ok; ++s) {
        FpMatrix g = fp_zeros(p, n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) g(i, j) = random_entry();
        } while (rank_of(g, p) != n);

        for (Index r = 0; r < span.dim() && ok; ++r) {
            FpVector moved = apply_tensor_power(p, g, span.rows().row(r).transpose(), n, l);
            if (!span.contains(moved)) {
                ok = false;
                std::ostringstream os;
                os << "sample " << s << " basis row " << r << " leaves the span";
                witness = os.str();
            }
        }
    }
    rep.add("stable-under-gl",
            "g^{(x) l} maps span{v(K)} into itself for sampled g in GL_n(F_p)", ok, witness);
    return rep;
}

SymComparison sym_compare(PrimeChar p, int n, int l, const Caps& caps) {
    if (l <= 0 || static_cast<std::uint32_t>(l) >= p.value())
        throw usage_error("sym_compare: requires 0 < l < p");
    SymComparison out;
    SubspaceBasis span = rep_subspace_basis(p, n, l, caps);
    out.subspace_dim = span.dim();
    out.symmetric_dim = sym_dim(n, l);
    out.dims_equal = out.subspace_dim == out.symmetric_dim;

    // content projection: word basis -> compositions of l into n parts
    const auto targets = bounded_compositions(n, l, l);
    auto target_pos = [&](const ExponentVec& c) {
        auto it = std::lower_bound(targets.begin(), targets.end(), c);
        return static_cast<Index>(it - targets.begin());
    };
    FpMatrix projected = fp_zeros(p, span.dim(), static_cast<Index>(targets.size()));
    for (Index r = 0; r < span.dim(); ++r)
        for (Index c = 0; c < span.ambient(); ++c) {
            Fp v = span.rows()(r, c);
            if (!v.is_zero())
                projected(r, target_pos(word_content(word_at(c, n, l), n))) += v;
        }
    out.projection_injective = rank_of(projected, p) == span.dim();
    return out;
}

} // namespace frobstab
