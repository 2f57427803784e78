#include "frobstab/filtration.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "frobstab/errors.hpp"
#include "frobstab/tensor_rep.hpp"

namespace frobstab {

CanonicalFiltration::CanonicalFiltration(PrimeChar p, int n, int r, const Caps& caps)
    : p_(p), n_(n), r_(r) {
    if (n < 1) throw usage_error("CanonicalFiltration: n must be positive");
    if (r < 1) throw usage_error("CanonicalFiltration: r must be positive");
    const long long fiber = checked_pow(p.value(), n);
    const long long total = static_cast<long long>(r) * fiber;
    caps.check_fiber(total);
    const Index N = static_cast<Index>(fiber);
    ambient_ = static_cast<Index>(total);

    FpMatrix id_r = fp_identity(p, r);
    for (const FpMatrix& m : connection_matrices(p, n)) connection_.push_back(kron(id_r, m));

    steps_.push_back(SubspaceBasis::span_of_rows(fp_identity(p, ambient_), p));

    // kernel of the alpha^0 coefficient functional on each component
    FpMatrix ev = fp_zeros(p, r, ambient_);
    for (int s = 0; s < r; ++s) ev(s, static_cast<Index>(s) * N) = Fp(p, 1);
    steps_.push_back(SubspaceBasis::span_of_rows(kernel_basis(ev, p).transpose(), p));

    while (!steps_.back().is_zero()) {
        const SubspaceBasis& Vi = steps_.back();
        const Index d = Vi.dim();
        FpMatrix residuals = fp_zeros(p, static_cast<Index>(n_) * ambient_, d);
        for (Index t = 0; t < d; ++t) {
            FpVector b = Vi.rows().row(t).transpose();
            for (int j = 0; j < n_; ++j)
                residuals.block(static_cast<Index>(j) * ambient_, t, ambient_, 1) =
                    Vi.reduce(connection_[static_cast<std::size_t>(j)] * b);
        }
        FpMatrix coeffs = kernel_basis(residuals, p);
        SubspaceBasis next = SubspaceBasis::span_of_rows(coeffs.transpose() * Vi.rows(), p);
        if (next.dim() == Vi.dim())
            throw std::logic_error("CanonicalFiltration: recursion stalled");
        steps_.push_back(std::move(next));
    }
}

const SubspaceBasis& CanonicalFiltration::step(int i) const {
    if (i < 0) throw usage_error("CanonicalFiltration::step: negative index");
    if (i >= static_cast<int>(steps_.size())) return steps_.back(); // zero subspace
    return steps_[static_cast<std::size_t>(i)];
}

Index CanonicalFiltration::graded_dim(int i) const {
    return step(i).dim() - step(i + 1).dim();
}

namespace {

std::vector<Index> pivot_difference(const SubspaceBasis& big, const SubspaceBasis& small) {
    std::vector<Index> out;
    std::set_difference(big.pivots().begin(), big.pivots().end(),
                        small.pivots().begin(), small.pivots().end(),
                        std::back_inserter(out));
    return out;
}

} // namespace

GradedMap graded_map(const CanonicalFiltration& filt, int i) {
    if (i < 1) throw usage_error("graded_map: level must be at least 1");
    const auto p = filt.characteristic();
    const int n = filt.vars();
    const SubspaceBasis& prev = filt.step(i - 1);
    const SubspaceBasis& cur = filt.step(i);
    const SubspaceBasis& next = filt.step(i + 1);

    // canonical quotient coordinates: pivots of the space minus pivots of
    // the subspace (nested RREF pivots are nested as sets)
    const std::vector<Index> src_cols = pivot_difference(cur, next);
    const std::vector<Index> tgt_cols = pivot_difference(prev, cur);

    GradedMap out;
    out.level = i;
    out.source_dim = static_cast<Index>(src_cols.size());
    out.target_dim = static_cast<Index>(n) * static_cast<Index>(tgt_cols.size());
    out.matrix = fp_zeros(p, out.target_dim, out.source_dim);

    // lift basis of gr_i: the RREF rows of V_i whose pivot is not a pivot of
    // V_{i+1}; their images form a basis of the quotient
    Index col = 0;
    for (Index t = 0; t < cur.dim(); ++t) {
        if (!std::binary_search(src_cols.begin(), src_cols.end(), cur.pivots()[static_cast<std::size_t>(t)]))
            continue;
        FpVector v = cur.rows().row(t).transpose();
        for (int j = 0; j < n; ++j) {
            FpVector red = cur.reduce(filt.connection()[static_cast<std::size_t>(j)] * v);
            for (std::size_t q = 0; q < tgt_cols.size(); ++q)
                out.matrix(static_cast<Index>(j) * static_cast<Index>(tgt_cols.size()) +
                               static_cast<Index>(q),
                           col) = red(tgt_cols[q]);
        }
        ++col;
    }
    out.injective = rank_of(out.matrix, p) == out.source_dim;
    return out;
}

SubspaceBasis nabla_power_image(PrimeChar p, int n, int l, const Caps& caps) {
    if (n < 1) throw usage_error("nabla_power_image: n must be positive");
    if (l < 0) throw usage_error("nabla_power_image: l must be nonnegative");
    const long long dim = checked_pow(n, l);
    caps.check_tensor(dim);

    const auto contents = bounded_compositions(n, static_cast<int>(p.value()) - 1, l);
    FpMatrix rows = fp_zeros(p, static_cast<Index>(contents.size()), static_cast<Index>(dim));
    for (std::size_t t = 0; t < contents.size(); ++t) {
        // c * alpha^M (x) dx_word, applied connection appends the new letter
        // on the right
        std::map<std::pair<std::vector<int>, ExponentVec>, Fp> terms;
        terms.emplace(std::make_pair(std::vector<int>{}, contents[t]), Fp(p, 1));
        for (int step = 0; step < l; ++step) {
            std::map<std::pair<std::vector<int>, ExponentVec>, Fp> next;
            for (const auto& [key, c] : terms) {
                const auto& [word, M] = key;
                for (int j = 0; j < n; ++j) {
                    if (M[j] == 0) continue;
                    std::vector<int> w = word;
                    w.push_back(j + 1);
                    std::vector<int> down = M.k;
                    --down[static_cast<std::size_t>(j)];
                    auto [it, inserted] = next.try_emplace(
                        std::make_pair(std::move(w), ExponentVec(std::move(down))), Fp(p, 0));
                    it->second += c * Fp(p, -M[j]);
                }
            }
            terms = std::move(next);
        }
        for (const auto& [key, c] : terms) {
            // after l steps only degree-zero monomials survive
            rows(static_cast<Index>(t), word_index(key.first, n)) = c;
        }
    }
    return SubspaceBasis::span_of_rows(rows, p);
}

FpMatrix nabla_power_matrix(PrimeChar p, int n, int l, const Caps& caps) {
    if (n < 1) throw usage_error("nabla_power_matrix: n must be positive");
    if (l < 0) throw usage_error("nabla_power_matrix: l must be nonnegative");
    const long long fiber = checked_pow(p.value(), n);
    caps.check_fiber(fiber);
    caps.check_tensor(fiber * checked_pow(n, l));
    const Index N = static_cast<Index>(fiber);

    const auto mats = connection_matrices(p, n);
    FpMatrix cur = fp_identity(p, N);
    for (int t = 0; t < l; ++t) {
        const Index wt = static_cast<Index>(checked_pow(n, t));
        FpMatrix step = fp_zeros(p, N * wt * static_cast<Index>(n), N * wt);
        for (int j = 0; j < n; ++j) {
            FpMatrix append = fp_zeros(p, static_cast<Index>(n), 1);
            append(j, 0) = Fp(p, 1);
            step += kron(mats[static_cast<std::size_t>(j)], kron(fp_identity(p, wt), append));
        }
        cur = step * cur;
    }
    return cur;
}

VerificationReport verify_canonical_filtration(PrimeChar p, int n, int r, const Caps& caps) {
    CanonicalFiltration filt(p, n, r, caps);
    const int L = n * (static_cast<int>(p.value()) - 1);
    const Index N = static_cast<Index>(checked_pow(p.value(), n));

    VerificationReport rep;
    {
        std::ostringstream os;
        os << "filtration p=" << p.value() << " n=" << n << " r=" << r;
        rep.subject = os.str();
    }

    // (a) chain length
    {
        bool ok = filt.zero_index() == L + 1 && !filt.step(L).is_zero() &&
                  filt.step(L + 1).is_zero();
        std::ostringstream w;
        if (!ok) w << "first zero step at " << filt.zero_index() << ", expected " << L + 1;
        rep.add("chain-length", "V_i = 0 exactly from i = n(p-1)+1 on", ok, w.str());
    }

    // recursion matches the monomial description
    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i <= L + 1 && ok; ++i) {
            const auto monos = alpha_basis(p, n, i);
            FpMatrix expect = fp_zeros(
                p, static_cast<Index>(r) * static_cast<Index>(monos.size()), filt.ambient_dim());
            Index row = 0;
            for (int s = 0; s < r; ++s)
                for (const auto& K : monos)
                    expect(row++, static_cast<Index>(s) * N + monomial_index(K, p.value())) =
                        Fp(p, 1);
            if (!(SubspaceBasis::span_of_rows(expect, p) == filt.step(i))) {
                ok = false;
                witness = "mismatch at step " + std::to_string(i);
            }
        }
        rep.add("monomial-form", "V_i = span{alpha^K : |K| >= i} in each component", ok, witness);
    }

    // (b) the connection lowers the filtration by at most one step
    {
        bool ok = true;
        std::string witness;
        for (int i = 1; i <= L && ok; ++i) {
            const SubspaceBasis& inner = filt.step(i + 1);
            for (Index t = 0; t < inner.dim() && ok; ++t) {
                FpVector v = inner.rows().row(t).transpose();
                for (int j = 0; j < n && ok; ++j) {
                    if (!is_zero_vec(filt.step(i).reduce(filt.connection()[static_cast<std::size_t>(j)] * v))) {
                        ok = false;
                        witness = "D_" + std::to_string(j + 1) + " V_" + std::to_string(i + 1) +
                                  " not inside V_" + std::to_string(i);
                    }
                }
            }
        }
        rep.add("horizontal-step", "D_j(V_{i+1}) lies in V_i for 1 <= i <= n(p-1)", ok, witness);
    }

    // (c) injectivity of the graded maps
    {
        bool ok = true;
        std::string witness;
        for (int i = 1; i <= L && ok; ++i) {
            GradedMap gm = graded_map(filt, i);
            if (!gm.injective) {
                ok = false;
                witness = "kernel at level " + std::to_string(i);
            }
        }
        rep.add("graded-injectivity",
                "V_i/V_{i+1} -> (V_{i-1}/V_i)^n induced by the connection is injective", ok,
                witness);
    }

    // (d) graded dimensions and the tensor image
    {
        bool ok = true;
        std::string witness;
        for (int l = 0; l <= L && ok; ++l) {
            long long want =
                static_cast<long long>(r) *
                dim_bounded_compositions(n, static_cast<int>(p.value()) - 1, l);
            if (filt.graded_dim(l) != want) {
                ok = false;
                witness = "dim V_" + std::to_string(l) + "/V_" + std::to_string(l + 1) + " = " +
                          std::to_string(filt.graded_dim(l)) + ", expected " + std::to_string(want);
            }
        }
        rep.add("graded-dimension",
                "dim V_l/V_{l+1} = r * #{K in [0,p-1]^n : |K| = l}", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int l = 0; l <= L && ok; ++l) {
            if (!(nabla_power_image(p, n, l, caps) == rep_subspace_basis(p, n, l, caps))) {
                ok = false;
                witness = "image differs from span{v(K)} at l = " + std::to_string(l);
            }
        }
        rep.add("tensor-image",
                "l-fold connection image of degree-l monomials equals span{v(K) : |K| = l}", ok,
                witness);
    }

    // (e) below the characteristic the graded pieces have symmetric-power size
    {
        bool ok = true;
        std::string witness;
        for (int l = 1; l < static_cast<int>(p.value()) && l <= L && ok; ++l) {
            long long want = static_cast<long long>(r) * sym_dim(n, l);
            if (filt.graded_dim(l) != want) {
                ok = false;
                witness = "dim V_" + std::to_string(l) + "/V_" + std::to_string(l + 1) + " = " +
                          std::to_string(filt.graded_dim(l)) + ", expected " + std::to_string(want);
            }
        }
        rep.add("symmetric-dimension", "dim V_l/V_{l+1} = r * C(n+l-1, l) for 0 < l < p", ok,
                witness);
    }

    return rep;
}

} // namespace frobstab
