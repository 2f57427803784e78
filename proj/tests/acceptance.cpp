// Acceptance gate: twelve criteria, one line of output each, exit code equal
// to the number of failures. All arithmetic is exact; the only numeric
// tolerances are the two wall-clock limits pinned below.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frobstab/cli.hpp"
#include "frobstab/filtration.hpp"
#include "frobstab/local_algebra.hpp"
#include "frobstab/monomial.hpp"
#include "frobstab/slope.hpp"
#include "frobstab/tensor_rep.hpp"

using namespace frobstab;

namespace {

constexpr double kFiltrationTimeLimit = 10.0; // seconds
constexpr double kSlopeTimeLimit = 30.0;      // seconds
constexpr long long kTensorDimLimit = 65536;

const std::vector<std::pair<std::uint32_t, int>> kGrid = {
    {2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {2, 3}, {7, 1}};

int failures = 0;

void report(int num, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what << "\n";
    if (!ok) ++failures;
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string with_time(const std::string& what, double sec, double limit) {
    std::ostringstream os;
    os << what << " (" << std::fixed << std::setprecision(2) << sec << " s, limit "
       << std::setprecision(0) << limit << ")";
    return os.str();
}

bool vec_eq(const FpVector& a, const FpVector& b) {
    if (a.size() != b.size()) return false;
    for (Index i = 0; i < a.size(); ++i)
        if (!(a(i) == b(i))) return false;
    return true;
}

FiberVector monomial(PrimeChar p, int n, const ExponentVec& K) {
    FiberVector v(p, n);
    v.set_coeff(K, Fp(p, 1));
    return v;
}

bool run_twice_identical(const std::vector<std::string>& args) {
    std::ostringstream o1, e1, o2, e2;
    int c1 = run_cli(args, o1, e1);
    int c2 = run_cli(args, o2, e2);
    return c1 == 0 && c2 == 0 && !o1.str().empty() && o1.str() == o2.str();
}

} // namespace

int main() {
    // 1 + 2: the kernel recursion agrees with the closed-form monomial
    // filtration at every level, and vanishes exactly from step n(p-1)+1
    bool c1 = true, c2 = true;
    const auto t1 = std::chrono::steady_clock::now();
    for (const auto& [q, n] : kGrid) {
        PrimeChar p(q);
        const auto chain = filtration_from_definition(p, n);
        const int expected_zero = n * (static_cast<int>(q) - 1) + 1;
        c2 = c2 && static_cast<int>(chain.size()) - 1 == expected_zero;
        c2 = c2 && !chain[static_cast<std::size_t>(expected_zero) - 1].is_zero();
        c2 = c2 && chain.back().is_zero();
        for (std::size_t i = 0; i < chain.size(); ++i)
            c1 = c1 && chain[i] == filtration_closed_form(p, n, static_cast<int>(i));
    }
    const double sec1 = elapsed_seconds(t1);
    c1 = c1 && sec1 < kFiltrationTimeLimit;
    report(1,
           with_time("kernel-defined filtration equals the closed-form monomial filtration "
                     "at every level on the grid",
                     sec1, kFiltrationTimeLimit),
           c1);
    report(2, "the filtration is nonzero at step n(p-1) and zero from step n(p-1)+1", c2);

    // 3: on a curve every graded connection map below the characteristic is
    // bijective
    bool c3 = true;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        CanonicalFiltration f(PrimeChar(q), 1, 1);
        for (int i = 1; i <= static_cast<int>(q) - 1; ++i) {
            GradedMap gm = graded_map(f, i);
            c3 = c3 && gm.injective && gm.source_dim == gm.target_dim && gm.source_dim == 1;
        }
    }
    report(3, "for n = 1 the graded maps are bijective for 1 <= i <= p-1", c3);

    // 4: the l-fold connection image of the degree-l monomials equals the
    // span of the symmetrized tensors
    bool c4 = true;
    for (const auto& [q, n] : kGrid) {
        PrimeChar p(q);
        for (int l = 0; l <= n * (static_cast<int>(q) - 1); ++l) {
            if (checked_pow(n, l) > kTensorDimLimit) continue;
            c4 = c4 && nabla_power_image(p, n, l) == rep_subspace_basis(p, n, l);
        }
    }
    report(4, "the iterated connection image matches the symmetrized tensor span "
              "for every l with n^l within the cap",
           c4);

    // 5: the l!-term and closed-form symmetrizations agree, vanishing exactly
    // when some exponent reaches p
    bool c5 = true;
    for (std::uint32_t q : {2u, 3u, 5u}) {
        PrimeChar p(q);
        for (int n = 1; n <= 3; ++n)
            for (int total = 0; total <= 6; ++total)
                for (const auto& K : bounded_compositions(n, 6, total)) {
                    FpVector a = v_vector_naive(p, n, K);
                    FpVector b = v_vector_closed(p, n, K);
                    c5 = c5 && vec_eq(a, b);
                    bool overflow = false;
                    for (int i = 0; i < n; ++i) overflow = overflow || K[i] >= static_cast<int>(q);
                    c5 = c5 && is_zero_vec(a) == overflow;
                }
    }
    report(5, "permutation-sum and factorial-coefficient symmetrizations agree for "
              "|K| <= 6 and vanish exactly when some exponent reaches p",
           c5);

    // 6: below the characteristic the subrepresentation has the symmetric
    // power dimension and the content projection is injective
    bool c6 = true;
    for (const auto& [q, n] : kGrid)
        for (int l = 1; l < static_cast<int>(q); ++l) {
            SymComparison sc = sym_compare(PrimeChar(q), n, l);
            c6 = c6 && sc.dims_equal && sc.projection_injective &&
                 sc.symmetric_dim == sym_dim(n, l);
        }
    report(6, "for 0 < l < p the tensor subrepresentation has dimension C(n+l-1, l) "
              "and injects into the content quotient",
           c6);

    // 7: 25 seeded pseudo-random invertible matrices per grid point carry the
    // subrepresentation into itself, reproducibly for a fixed seed
    bool c7 = true;
    for (const auto& [q, n] : kGrid)
        for (int l = 0; l <= n * (static_cast<int>(q) - 1); ++l)
            c7 = c7 && gl_equivariance_check(PrimeChar(q), n, l, 25, 0).all_passed();
    {
        VerificationReport r1 = gl_equivariance_check(PrimeChar(3), 2, 2, 25, 123);
        VerificationReport r2 = gl_equivariance_check(PrimeChar(3), 2, 2, 25, 123);
        c7 = c7 && r1.all_passed() && r2.all_passed() && r1.subject == r2.subject;
    }
    report(7, "25 seeded invertible matrices per grid point preserve the "
              "subrepresentation at every degree",
           c7);

    // 8: exhaustive weighted-sum scan: nonnegative, zero exactly on constant
    // profiles of length p, split identity for long odd profiles, strict
    // positivity for short profiles
    bool c8 = true;
    const auto t8 = std::chrono::steady_clock::now();
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        PrimeChar p(q);
        for (long long rw = 1; rw <= 4; ++rw)
            for (long long re = 1; re <= static_cast<long long>(q) * rw; ++re)
                for (const auto& prof : enumerate_profiles(p, rw, re)) {
                    const Rational ws = weighted_sum(prof, p);
                    c8 = c8 && !(ws < Rational(0));
                    const bool zero_shape =
                        prof.constant() &&
                        static_cast<std::uint32_t>(prof.length()) == q;
                    c8 = c8 && (ws == Rational(0)) == zero_shape;
                    c8 = c8 && verify_rearrangement(prof, p).all_passed();
                    const int m = prof.length() - 1;
                    if (2 * m <= static_cast<int>(q) - 3) c8 = c8 && Rational(0) < ws;
                }
    }
    const double sec8 = elapsed_seconds(t8);
    c8 = c8 && sec8 < kSlopeTimeLimit;
    report(8,
           with_time("weighted sums are nonnegative over all profiles with rank cap 4, "
                     "vanish only on constant length-p profiles, and satisfy the split "
                     "identity and short-profile positivity",
                     sec8, kSlopeTimeLimit),
           c8);

    // 9: stability certificates: strictly positive certified minimum for
    // every proper subbundle rank, zero exactly at the full rank through the
    // unique constant profile
    bool c9 = true;
    for (int g : {2, 3})
        for (std::uint32_t q : {2u, 3u, 5u})
            for (long long rw : {1LL, 2LL}) {
                CurveContext ctx(g, PrimeChar(q));
                const long long full = static_cast<long long>(q) * rw;
                for (long long re = 1; re <= full; ++re) {
                    MinGapResult res = min_gap_report(rw, re, ctx);
                    c9 = c9 && res.report.all_passed();
                    if (re < full) {
                        c9 = c9 && Rational(0) < res.minimum;
                    } else {
                        c9 = c9 && res.minimum == Rational(0);
                        int zeros = 0;
                        bool shape = true;
                        for (const auto& cert : res.certificates)
                            if (cert.equality_possible) {
                                ++zeros;
                                shape = shape && cert.profile.constant() &&
                                        cert.profile.value(0) == rw &&
                                        static_cast<std::uint32_t>(cert.profile.length()) == q;
                            }
                        c9 = c9 && zeros == 1 && shape;
                    }
                }
            }
    report(9, "certified slope gap is strictly positive for every proper subbundle "
              "rank and vanishes only on the full-rank constant profile",
           c9);

    // 10: the connection is a derivation with commuting components whose
    // p-th powers vanish
    bool c10 = true;
    for (const auto& [q, n] : kGrid) {
        PrimeChar p(q);
        const auto cube = cube_lex(n, static_cast<int>(q) - 1);
        for (const auto& K : cube)
            for (const auto& L : cube) {
                FiberVector a = monomial(p, n, K), b = monomial(p, n, L);
                FiberVector prod = algebra_multiply(a, b);
                ConnectionOutput dp = connection_apply(prod);
                ConnectionOutput da = connection_apply(a);
                ConnectionOutput db = connection_apply(b);
                for (int j = 0; j < n; ++j) {
                    FiberVector expect =
                        algebra_multiply(da.components[static_cast<std::size_t>(j)], b) +
                        algebra_multiply(a, db.components[static_cast<std::size_t>(j)]);
                    expect *= Fp(p, -1);
                    FiberVector diff = dp.components[static_cast<std::size_t>(j)] + expect;
                    c10 = c10 && diff.is_zero();
                }
            }
        const auto mats = connection_matrices(p, n);
        const Index dim = static_cast<Index>(checked_pow(static_cast<long long>(q), n));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                FpMatrix ij = mats[static_cast<std::size_t>(i)] * mats[static_cast<std::size_t>(j)];
                FpMatrix ji = mats[static_cast<std::size_t>(j)] * mats[static_cast<std::size_t>(i)];
                c10 = c10 && mat_equal(ij, ji);
            }
            FpMatrix pw = fp_identity(p, dim);
            for (std::uint32_t t = 0; t < q; ++t)
                pw = FpMatrix(mats[static_cast<std::size_t>(i)] * pw);
            c10 = c10 && rank_of(pw, p) == 0;
        }
    }
    report(10, "the connection satisfies the Leibniz rule on all monomial pairs, its "
               "components commute, and each p-th power vanishes",
           c10);

    // 11: every generator expansion recomposes exactly and generates the
    // maximal ideal of the fiber algebra
    bool c11 = true;
    for (const auto& [q, n] :
         std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
        PrimeChar p(q);
        c11 = c11 && verify_generation(p, n, 2 * static_cast<int>(q) * n).all_passed();
    }
    report(11, "generator expansions recompose exactly at truncation order 2pn on "
               "(p, n) in {(2,1), (3,1), (2,2), (3,2)}",
           c11);

    // 12: identical CLI configurations produce byte-identical JSON
    bool c12 = run_twice_identical({"verify-filtration", "--p", "2,3", "--n", "1", "--seed",
                                    "9", "--format", "json"}) &&
               run_twice_identical({"slope-certify", "--g", "2,3", "--p", "2,3", "--rank-w",
                                    "1,2", "--format", "json"}) &&
               run_twice_identical({"rep-dims", "--p", "2,3,5", "--n", "1,2", "--format",
                                    "json"});
    report(12, "repeated CLI runs with identical configuration and seed emit "
               "byte-identical JSON",
           c12);

    std::cout << (12 - failures) << " of 12 criteria passed\n";
    return failures;
}
