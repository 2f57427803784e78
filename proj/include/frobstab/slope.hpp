#pragma once

#include <string>
#include <vector>

#include "frobstab/fp.hpp"
#include "frobstab/rational.hpp"
#include "frobstab/report.hpp"

namespace frobstab {

// Slope bookkeeping for the pushforward along the degree-p cover of a smooth
// projective curve of the given genus.
struct CurveContext {
    int genus = 2;
    PrimeChar p;

    CurveContext(int g, PrimeChar prime);
};

// mu(pushforward of W) = (mu(W) + (p-1)(g-1)) / p.
Rational mu_pushforward(const Rational& mu_w, const CurveContext& ctx);

// Slope of the i-th graded piece W (x) Omega^{(x) i}: mu(W) + i(2g-2).
Rational graded_slope(const Rational& mu_w, const CurveContext& ctx, int i);

// Ranks r_0 >= r_1 >= ... >= r_m >= 1 of the graded quotients of the induced
// filtration on a subbundle pullback. Length m+1 is at most p.
class RankProfile {
public:
    explicit RankProfile(std::vector<long long> ranks);

    int length() const { return static_cast<int>(ranks_.size()); } // m + 1
    long long value(int i) const { return ranks_[static_cast<std::size_t>(i)]; }
    long long total() const; // rank of the subbundle
    const std::vector<long long>& values() const { return ranks_; }
    bool constant() const;

    // length <= p, and r_0 <= rank_w when the ambient rank is known
    void validate_for(PrimeChar p) const;
    void validate_for(PrimeChar p, long long rank_w) const;

    std::string str() const; // "(3,2,2,1)"

    friend bool operator==(const RankProfile& a, const RankProfile& b) {
        return a.ranks_ == b.ranks_;
    }
    friend bool operator<(const RankProfile& a, const RankProfile& b) {
        return a.ranks_ < b.ranks_;
    }

private:
    std::vector<long long> ranks_;
};

// sum_{i=1}^{m+1} ((p+1)/2 - i) r_{i-1}, the combinatorial core of the slope
// gap. Integer for odd p, half-integer for p = 2.
Rational weighted_sum(const RankProfile& profile, PrimeChar p);

// Identity behind the nonnegativity of the weighted sum for odd p and long
// profiles (m > (p-1)/2):
//   sum ((p+1)/2 - i) r_{i-1}
//     = sum_{i=1}^{(p-1)/2} i r_{(p-1)/2-i} - sum_{i=1}^{m-(p-1)/2} i r_{(p-1)/2+i}
//    >= sum_{i=1}^{m-(p-1)/2} i (r_{(p-1)/2-i} - r_{(p-1)/2+i}) >= 0.
// Short profiles (2m <= p-1) instead give strict positivity directly; the
// clauses that do not apply to the given shape are reported not_applicable.
VerificationReport verify_rearrangement(const RankProfile& profile, PrimeChar p);

// All admissible profiles with the given total: non-increasing, positive,
// r_0 <= rank_w, length <= p. Lexicographically ascending.
std::vector<RankProfile> enumerate_profiles(PrimeChar p, long long rank_w, long long rank_e);

// (2g-2) / (p * rank_e) * weighted_sum: lower bound for
// mu(pushforward) - mu(subbundle) attached to one profile.
Rational gap_lower_bound(const RankProfile& profile, const CurveContext& ctx);

struct GapCertificate {
    RankProfile profile;
    Rational weighted;        // weighted_sum of the profile
    Rational bound;           // gap_lower_bound
    bool equality_possible;   // weighted == 0
    std::string note;
};

struct MinGapResult {
    VerificationReport report;
    // least bound over the profiles a stable bundle can realize: for
    // rank_e < p * rank_w the equality profiles are excluded (their note
    // records why), so the minimum is strictly positive there for g >= 2
    Rational minimum;
    std::vector<GapCertificate> certificates;
};

// Scans every admissible profile for a subbundle of rank rank_e inside the
// pushforward of a bundle of rank rank_w and certifies the slope gap:
// the bound is nonnegative everywhere; it vanishes only on constant profiles
// of length exactly p; and for rank_e < p * rank_w any vanishing profile has
// r_i < rank_w, which equality would forbid for a stable W, so the gap is
// strictly positive on proper subbundles. Genus below 2 reports the
// stability clauses as not_applicable.
MinGapResult min_gap_report(long long rank_w, long long rank_e, const CurveContext& ctx);

} // namespace frobstab
