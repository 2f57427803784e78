#include "frobstab/slope.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "frobstab/errors.hpp"

namespace frobstab {

CurveContext::CurveContext(int g, PrimeChar prime) : genus(g), p(prime) {
    if (g < 0) throw usage_error("CurveContext: genus must be nonnegative");
}

Rational mu_pushforward(const Rational& mu_w, const CurveContext& ctx) {
    const long long p = ctx.p.value();
    return (mu_w + Rational((p - 1) * (ctx.genus - 1))) / Rational(p);
}

Rational graded_slope(const Rational& mu_w, const CurveContext& ctx, int i) {
    if (i < 0) throw usage_error("graded_slope: index must be nonnegative");
    return mu_w + Rational(static_cast<long long>(i) * (2 * ctx.genus - 2));
}

RankProfile::RankProfile(std::vector<long long> ranks) : ranks_(std::move(ranks)) {
    if (ranks_.empty()) throw usage_error("RankProfile: empty profile");
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        if (ranks_[i] < 1) throw usage_error("RankProfile: ranks must be positive");
        if (i > 0 && ranks_[i] > ranks_[i - 1])
            throw usage_error("RankProfile: ranks must be non-increasing");
    }
}

long long RankProfile::total() const {
    return std::accumulate(ranks_.begin(), ranks_.end(), 0LL);
}

bool RankProfile::constant() const {
    return std::all_of(ranks_.begin(), ranks_.end(),
                       [&](long long v) { return v == ranks_.front(); });
}

void RankProfile::validate_for(PrimeChar p) const {
    if (static_cast<std::uint32_t>(length()) > p.value())
        throw usage_error("RankProfile: length exceeds p");
}

void RankProfile::validate_for(PrimeChar p, long long rank_w) const {
    validate_for(p);
    if (ranks_.front() > rank_w)
        throw usage_error("RankProfile: leading rank exceeds rank of the bundle");
}

std::string RankProfile::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        if (i) os << ',';
        os << ranks_[i];
    }
    os << ')';
    return os.str();
}

Rational weighted_sum(const RankProfile& profile, PrimeChar p) {
    profile.validate_for(p);
    Rational acc(0);
    for (int i = 1; i <= profile.length(); ++i) {
        // weight (p+1)/2 - i
        Rational w = Rational(p.value() + 1, 2) - Rational(i);
        acc += w * Rational(profile.value(i - 1));
    }
    return acc;
}

VerificationReport verify_rearrangement(const RankProfile& profile, PrimeChar p) {
    profile.validate_for(p);
    VerificationReport rep;
    rep.subject = "rearrangement p=" + std::to_string(p.value()) + " profile=" + profile.str();

    const int m = profile.length() - 1;
    const Rational ws = weighted_sum(profile, p);
    const bool odd = p.value() % 2 == 1;
    const long long half = odd ? (p.value() - 1) / 2 : 0; // (p-1)/2

    if (odd && m > half) {
        // sum_{i=1}^{(p-1)/2} i r_{(p-1)/2 - i} - sum_{i=1}^{m-(p-1)/2} i r_{(p-1)/2 + i}
        Rational lhs(0), drop(0);
        for (long long i = 1; i <= half; ++i)
            lhs += Rational(i) * Rational(profile.value(static_cast<int>(half - i)));
        for (long long i = 1; i <= m - half; ++i)
            lhs -= Rational(i) * Rational(profile.value(static_cast<int>(half + i)));
        for (long long i = 1; i <= m - half; ++i)
            drop += Rational(i) * Rational(profile.value(static_cast<int>(half - i)) -
                                           profile.value(static_cast<int>(half + i)));
        rep.add("split-identity",
                "weighted sum equals the centered two-block form for m > (p-1)/2", ws == lhs,
                "weighted " + ws.str() + " vs split " + lhs.str());
        rep.add("drop-lower-bound",
                "the two-block form dominates the paired-difference sum", !(lhs < drop),
                "split " + lhs.str() + " vs paired " + drop.str());
        bool pairs_ok = true;
        for (long long i = 1; i <= m - half && pairs_ok; ++i)
            pairs_ok = profile.value(static_cast<int>(half - i)) >=
                       profile.value(static_cast<int>(half + i));
        rep.add("paired-differences",
                "r_{(p-1)/2 - i} >= r_{(p-1)/2 + i} for 1 <= i <= m - (p-1)/2", pairs_ok);
        rep.add_na("short-profile-positivity", "weighted sum > 0 when 2m <= p-1",
                   "profile is long: 2m > p-1");
    } else {
        rep.add_na("split-identity",
                   "weighted sum equals the centered two-block form for m > (p-1)/2",
                   odd ? "profile is short: 2m <= p-1" : "p = 2 has no centered split");
        rep.add_na("drop-lower-bound", "the two-block form dominates the paired-difference sum",
                   odd ? "profile is short: 2m <= p-1" : "p = 2 has no centered split");
        rep.add_na("paired-differences",
                   "r_{(p-1)/2 - i} >= r_{(p-1)/2 + i} for 1 <= i <= m - (p-1)/2",
                   odd ? "profile is short: 2m <= p-1" : "p = 2 has no centered split");
        if (2 * m <= static_cast<long long>(p.value()) - 1)
            rep.add("short-profile-positivity", "weighted sum > 0 when 2m <= p-1",
                    Rational(0) < ws, "weighted sum " + ws.str());
        else
            rep.add_na("short-profile-positivity", "weighted sum > 0 when 2m <= p-1",
                       "profile is long: 2m > p-1");
    }

    rep.add("nonnegative", "weighted sum >= 0 for every admissible profile", !(ws < Rational(0)),
            "weighted sum " + ws.str());
    rep.add("zero-shape", "weighted sum = 0 exactly for constant profiles of length p",
            (ws == Rational(0)) ==
                (profile.constant() && static_cast<std::uint32_t>(profile.length()) == p.value()),
            "weighted sum " + ws.str() + " for profile " + profile.str());
    return rep;
}

namespace {

void profiles_rec(long long remaining, long long max_part, int slots_left,
                  std::vector<long long>& cur, std::vector<RankProfile>& out) {
    if (remaining == 0) {
        if (!cur.empty()) out.emplace_back(cur);
        return;
    }
    if (slots_left == 0) return;
    long long hi = std::min(max_part, remaining);
    for (long long v = 1; v <= hi; ++v) {
        // non-increasing: later parts bounded by v; but we fill left to right
        // in non-increasing order, so recurse with max_part = v
        cur.push_back(v);
        profiles_rec(remaining - v, v, slots_left - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<RankProfile> enumerate_profiles(PrimeChar p, long long rank_w, long long rank_e) {
    if (rank_w < 1) throw usage_error("enumerate_profiles: rank_w must be positive");
    if (rank_e < 1) throw usage_error("enumerate_profiles: rank_e must be positive");
    std::vector<RankProfile> out;
    std::vector<long long> cur;
    profiles_rec(rank_e, rank_w, static_cast<int>(p.value()), cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

Rational gap_lower_bound(const RankProfile& profile, const CurveContext& ctx) {
    profile.validate_for(ctx.p);
    const Rational scale(2 * ctx.genus - 2,
                         static_cast<long long>(ctx.p.value()) * profile.total());
    return scale * weighted_sum(profile, ctx.p);
}

MinGapResult min_gap_report(long long rank_w, long long rank_e, const CurveContext& ctx) {
    if (rank_w < 1) throw usage_error("min_gap_report: rank_w must be positive");
    const long long full = static_cast<long long>(ctx.p.value()) * rank_w;
    if (rank_e < 1 || rank_e > full)
        throw usage_error("min_gap_report: rank_e must lie in [1, p * rank_w]");

    MinGapResult out;
    {
        std::ostringstream os;
        os << "slope gap g=" << ctx.genus << " p=" << ctx.p.value() << " rank_w=" << rank_w
           << " rank_e=" << rank_e;
        out.report.subject = os.str();
    }

    const auto profiles = enumerate_profiles(ctx.p, rank_w, rank_e);
    out.report.add("profiles-exist", "at least one admissible profile has the requested total",
                   !profiles.empty(), "none found");
    if (profiles.empty()) {
        out.minimum = Rational(0);
        return out;
    }

    bool nonneg = true, zero_shape_ok = true, proper_strict = true;
    std::string nonneg_w, zero_w, strict_w;
    bool have_min = false;
    for (const auto& prof : profiles) {
        GapCertificate cert{prof, weighted_sum(prof, ctx.p), gap_lower_bound(prof, ctx),
                            false, ""};
        cert.equality_possible = cert.weighted == Rational(0);
        // equality profiles below rank_w cannot arise from a stable bundle,
        // so they are excluded from the reported minimum for proper rank_e
        const bool refuted = cert.equality_possible && rank_e < full;
        if (!refuted && (!have_min || cert.bound < out.minimum)) {
            out.minimum = cert.bound;
            have_min = true;
        }

        if (cert.weighted < Rational(0) && nonneg) {
            nonneg = false;
            nonneg_w = "profile " + prof.str() + " has weighted sum " + cert.weighted.str();
        }
        const bool is_zero_shape =
            prof.constant() && static_cast<std::uint32_t>(prof.length()) == ctx.p.value();
        if ((cert.equality_possible != is_zero_shape) && zero_shape_ok) {
            zero_shape_ok = false;
            zero_w = "profile " + prof.str() + " has weighted sum " + cert.weighted.str();
        }
        if (cert.equality_possible) {
            if (rank_e < full) {
                // constant value below rank_w: equality in the slope chain
                // would force every r_i = rank_w, so a stable W rules it out
                if (prof.value(0) >= rank_w && proper_strict) {
                    proper_strict = false;
                    strict_w = "profile " + prof.str() + " meets the bound with full ranks";
                }
                cert.note = "bound 0 needs slope equality in every step, forcing r_i = rank_w; "
                            "here r_i = " + std::to_string(prof.value(0)) +
                            " < " + std::to_string(rank_w) + ", impossible for stable W";
            } else {
                cert.note = "constant full profile of length p: the subbundle is the whole "
                            "pushforward, not a proper subbundle";
            }
        }
        out.certificates.push_back(std::move(cert));
    }
    // a proper rank_e always admits a non-equality profile, so the minimum
    // is taken over a nonempty set
    if (!have_min) throw std::logic_error("min_gap_report: no attainable profile");

    out.report.add("nonnegative-weighted", "weighted sum >= 0 for every admissible profile",
                   nonneg, nonneg_w);
    out.report.add("zero-shape",
                   "weighted sum = 0 exactly for constant profiles of length p", zero_shape_ok,
                   zero_w);

    if (ctx.genus < 2) {
        out.report.add_na("proper-strict",
                          "stable W gives a strictly positive gap on proper subbundles",
                          "genus < 2: factor 2g-2 is not positive");
        out.report.add_na("full-rank-equality",
                          "the bound vanishes at rank_e = p * rank_w only for the constant "
                          "profile of full ranks",
                          "genus < 2: factor 2g-2 is not positive");
        return out;
    }

    if (rank_e < full) {
        out.report.add("proper-strict",
                       "stable W gives a strictly positive gap on proper subbundles",
                       proper_strict, strict_w);
        out.report.add_na("full-rank-equality",
                          "the bound vanishes at rank_e = p * rank_w only for the constant "
                          "profile of full ranks",
                          "rank_e < p * rank_w");
    } else {
        long long zero_count = 0;
        bool zero_is_full = true;
        for (const auto& cert : out.certificates)
            if (cert.equality_possible) {
                ++zero_count;
                zero_is_full = zero_is_full && cert.profile.constant() &&
                               cert.profile.value(0) == rank_w &&
                               static_cast<std::uint32_t>(cert.profile.length()) == ctx.p.value();
            }
        out.report.add_na("proper-strict",
                          "stable W gives a strictly positive gap on proper subbundles",
                          "rank_e = p * rank_w is the whole pushforward");
        out.report.add("full-rank-equality",
                       "the bound vanishes at rank_e = p * rank_w only for the constant "
                       "profile of full ranks",
                       zero_count == 1 && zero_is_full,
                       "zero profiles: " + std::to_string(zero_count));
    }
    return out;
}

} // namespace frobstab
