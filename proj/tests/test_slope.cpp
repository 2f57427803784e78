#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "frobstab/errors.hpp"
#include "frobstab/slope.hpp"

using namespace frobstab;

namespace {

const Clause* find_clause(const VerificationReport& rep, const std::string& label) {
    for (const auto& c : rep.clauses)
        if (c.label == label) return &c;
    return nullptr;
}

// all non-increasing positive tuples with entries <= rank_w, length <= p,
// and the given sum, by filtering raw tuples
std::vector<std::vector<long long>> brute_profiles(PrimeChar p, long long rank_w,
                                                   long long rank_e) {
    std::vector<std::vector<long long>> out;
    for (int len = 1; len <= static_cast<int>(p.value()); ++len) {
        std::vector<long long> t(static_cast<std::size_t>(len), 1);
        while (true) {
            long long sum = 0;
            bool mono = true;
            for (int i = 0; i < len; ++i) {
                sum += t[static_cast<std::size_t>(i)];
                if (i > 0 && t[static_cast<std::size_t>(i)] > t[static_cast<std::size_t>(i - 1)])
                    mono = false;
            }
            if (mono && sum == rank_e) out.push_back(t);
            int pos = len - 1;
            while (pos >= 0 && t[static_cast<std::size_t>(pos)] == rank_w) {
                t[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++t[static_cast<std::size_t>(pos)];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("pushforward and graded slopes") {
    CurveContext g2p3(2, PrimeChar(3));
    CHECK(mu_pushforward(Rational(0), g2p3) == Rational(2, 3));
    CHECK(mu_pushforward(Rational(1), CurveContext(3, PrimeChar(2))) == Rational(3, 2));
    CHECK(mu_pushforward(Rational(1, 2), CurveContext(2, PrimeChar(5))) == Rational(9, 10));
    CHECK(graded_slope(Rational(1, 3), g2p3, 0) == Rational(1, 3));
    CHECK(graded_slope(Rational(1, 3), g2p3, 2) == Rational(13, 3));
    CHECK_THROWS_AS(graded_slope(Rational(0), g2p3, -1), usage_error);
    CHECK_THROWS_AS(CurveContext(-1, PrimeChar(3)), usage_error);
}

TEST_CASE("rank profile validation and shape") {
    CHECK_THROWS_AS(RankProfile({}), usage_error);
    CHECK_THROWS_AS(RankProfile({0}), usage_error);
    CHECK_THROWS_AS(RankProfile({2, -1}), usage_error);
    CHECK_THROWS_AS(RankProfile({1, 2}), usage_error);

    RankProfile pr({3, 2, 2, 1});
    CHECK(pr.length() == 4);
    CHECK(pr.total() == 8);
    CHECK_FALSE(pr.constant());
    CHECK(RankProfile({2, 2}).constant());
    CHECK(pr.str() == "(3,2,2,1)");
    CHECK_NOTHROW(pr.validate_for(PrimeChar(5)));
    CHECK_THROWS_AS(pr.validate_for(PrimeChar(3)), usage_error);
    CHECK_THROWS_AS(RankProfile({2, 1}).validate_for(PrimeChar(3), 1), usage_error);
    CHECK_NOTHROW(RankProfile({2, 1}).validate_for(PrimeChar(3), 2));
}

TEST_CASE("weighted sums of known profiles") {
    CHECK(weighted_sum(RankProfile({1, 1, 1}), PrimeChar(3)) == Rational(0));
    CHECK(weighted_sum(RankProfile({2, 1, 1, 1, 1}), PrimeChar(5)) == Rational(2));
    CHECK(weighted_sum(RankProfile({1}), PrimeChar(3)) == Rational(1));
    CHECK(weighted_sum(RankProfile({1, 1}), PrimeChar(2)) == Rational(0));
    CHECK(weighted_sum(RankProfile({1}), PrimeChar(2)) == Rational(1, 2));
    CHECK(weighted_sum(RankProfile({3, 2, 2, 1}), PrimeChar(5)) == Rational(7));
}

TEST_CASE("rearrangement identity for a long odd profile") {
    VerificationReport rep = verify_rearrangement(RankProfile({3, 2, 2, 1}), PrimeChar(5));
    CHECK(rep.all_passed());
    CHECK(find_clause(rep, "split-identity")->status == ClauseStatus::pass);
    CHECK(find_clause(rep, "drop-lower-bound")->status == ClauseStatus::pass);
    CHECK(find_clause(rep, "paired-differences")->status == ClauseStatus::pass);
    CHECK(find_clause(rep, "short-profile-positivity")->status == ClauseStatus::not_applicable);

    VerificationReport flat = verify_rearrangement(RankProfile({1, 1, 1}), PrimeChar(3));
    CHECK(flat.all_passed());
    CHECK(find_clause(flat, "split-identity")->status == ClauseStatus::pass);
    CHECK(find_clause(flat, "zero-shape")->status == ClauseStatus::pass);
}

TEST_CASE("rearrangement clauses for short and even profiles") {
    VerificationReport shortp = verify_rearrangement(RankProfile({2, 1}), PrimeChar(5));
    CHECK(shortp.all_passed());
    CHECK(find_clause(shortp, "split-identity")->status == ClauseStatus::not_applicable);
    CHECK(find_clause(shortp, "short-profile-positivity")->status == ClauseStatus::pass);

    VerificationReport even = verify_rearrangement(RankProfile({1, 1}), PrimeChar(2));
    CHECK(even.all_passed());
    CHECK(find_clause(even, "split-identity")->status == ClauseStatus::not_applicable);
    CHECK(find_clause(even, "short-profile-positivity")->status == ClauseStatus::not_applicable);
    CHECK(find_clause(even, "nonnegative")->status == ClauseStatus::pass);
    CHECK(find_clause(even, "zero-shape")->status == ClauseStatus::pass);
}

TEST_CASE("profile enumeration matches brute force") {
    auto got = enumerate_profiles(PrimeChar(3), 2, 3);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == RankProfile({1, 1, 1}));
    CHECK(got[1] == RankProfile({2, 1}));
    CHECK(enumerate_profiles(PrimeChar(3), 2, 7).empty());
    CHECK(enumerate_profiles(PrimeChar(3), 1, 3).size() == 1);

    for (std::uint32_t q : {2u, 3u, 5u}) {
        PrimeChar p(q);
        for (long long rw = 1; rw <= 3; ++rw)
            for (long long re = 1; re <= static_cast<long long>(q) * rw; ++re) {
                auto fast = enumerate_profiles(p, rw, re);
                auto slow = brute_profiles(p, rw, re);
                REQUIRE(fast.size() == slow.size());
                for (std::size_t i = 0; i < fast.size(); ++i) {
                    CHECK(fast[i].values() == slow[i]);
                    CHECK(fast[i].total() == re);
                }
            }
    }
}

TEST_CASE("gap lower bounds for known profiles") {
    CHECK(gap_lower_bound(RankProfile({2, 1}), CurveContext(2, PrimeChar(3))) == Rational(4, 9));
    CHECK(gap_lower_bound(RankProfile({1}), CurveContext(3, PrimeChar(3))) == Rational(4, 3));
    CHECK(gap_lower_bound(RankProfile({1}), CurveContext(1, PrimeChar(3))) == Rational(0));
    CHECK(gap_lower_bound(RankProfile({1}), CurveContext(0, PrimeChar(3))) == Rational(-2, 3));
}

TEST_CASE("minimum gap for a line bundle") {
    CurveContext ctx(2, PrimeChar(3));
    MinGapResult r1 = min_gap_report(1, 1, ctx);
    CHECK(r1.report.all_passed());
    CHECK(r1.minimum == Rational(2, 3));
    CHECK(r1.certificates.size() == 1);

    MinGapResult r2 = min_gap_report(1, 2, ctx);
    CHECK(r2.report.all_passed());
    CHECK(r2.minimum == Rational(1, 3));
    CHECK(find_clause(r2.report, "proper-strict")->status == ClauseStatus::pass);

    MinGapResult r3 = min_gap_report(1, 3, ctx);
    CHECK(r3.report.all_passed());
    CHECK(r3.minimum == Rational(0));
    CHECK(find_clause(r3.report, "proper-strict")->status == ClauseStatus::not_applicable);
    CHECK(find_clause(r3.report, "full-rank-equality")->status == ClauseStatus::pass);
    int zero_certs = 0;
    for (const auto& c : r3.certificates)
        if (c.equality_possible) {
            ++zero_certs;
            CHECK(c.profile == RankProfile({1, 1, 1}));
            CHECK(c.note.find("whole") != std::string::npos);
        }
    CHECK(zero_certs == 1);

    CHECK(min_gap_report(1, 1, CurveContext(2, PrimeChar(2))).minimum == Rational(1, 2));
}

TEST_CASE("refuted equality profiles do not drag the minimum to zero") {
    // p=3, rank_w=2, rank_e=3: profile (1,1,1) has weighted sum 0 but cannot
    // come from a stable bundle; the minimum comes from (2,1)
    MinGapResult res = min_gap_report(2, 3, CurveContext(2, PrimeChar(3)));
    CHECK(res.report.all_passed());
    CHECK(res.minimum == Rational(4, 9));
    CHECK(find_clause(res.report, "proper-strict")->status == ClauseStatus::pass);
    REQUIRE(res.certificates.size() == 2);
    CHECK(res.certificates[0].profile == RankProfile({1, 1, 1}));
    CHECK(res.certificates[0].equality_possible);
    CHECK(res.certificates[0].note.find("impossible for stable") != std::string::npos);
    CHECK(res.certificates[1].profile == RankProfile({2, 1}));
    CHECK(res.certificates[1].bound == Rational(4, 9));

    // p=5, rank_w=2, rank_e=5: (1,1,1,1,1) is refuted, (2,1,1,1) gives 8/25
    MinGapResult res5 = min_gap_report(2, 5, CurveContext(2, PrimeChar(5)));
    CHECK(res5.report.all_passed());
    CHECK(res5.minimum == Rational(8, 25));
}

TEST_CASE("low genus marks stability clauses not applicable") {
    MinGapResult res = min_gap_report(1, 1, CurveContext(1, PrimeChar(3)));
    CHECK(res.minimum == Rational(0)); // factor 2g-2 vanishes
    CHECK(find_clause(res.report, "proper-strict")->status == ClauseStatus::not_applicable);
    CHECK(find_clause(res.report, "full-rank-equality")->status == ClauseStatus::not_applicable);
    CHECK(find_clause(res.report, "nonnegative-weighted")->status == ClauseStatus::pass);
    CHECK(res.report.all_passed());
}

TEST_CASE("rank bounds are enforced") {
    CurveContext ctx(2, PrimeChar(3));
    CHECK_THROWS_AS(min_gap_report(0, 1, ctx), usage_error);
    CHECK_THROWS_AS(min_gap_report(1, 0, ctx), usage_error);
    CHECK_THROWS_AS(min_gap_report(2, 7, ctx), usage_error);
    CHECK_NOTHROW(min_gap_report(2, 6, ctx));
}

TEST_CASE("weighted sum is nonnegative and vanishes only on full constant profiles") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        PrimeChar p(q);
        for (long long rw = 1; rw <= 3; ++rw)
            for (long long re = 1; re <= static_cast<long long>(q) * rw; ++re)
                for (const auto& prof : enumerate_profiles(p, rw, re)) {
                    Rational ws = weighted_sum(prof, p);
                    CHECK_FALSE(ws < Rational(0));
                    bool zero_shape =
                        prof.constant() && static_cast<std::uint32_t>(prof.length()) == q;
                    CHECK((ws == Rational(0)) == zero_shape);
                    CHECK(verify_rearrangement(prof, p).all_passed());
                }
    }
}
