#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "cupqec/modelsearch.hpp"

using namespace cupqec;

namespace {

ParameterSet make_set(std::size_t p0, std::size_t s0, std::size_t p1, std::size_t s1,
                      std::size_t p2, std::size_t s2) {
    ParameterSet set;
    set.factor[0] = {p0, s0};
    set.factor[1] = {p1, s1};
    set.factor[2] = {p2, s2};
    return set;
}

// Membership test for a single dimension, written as a direct scan over
// the defining sums rather than set construction.
bool ref_is_bad(const ParameterSet& set, std::size_t d) {
    for (std::size_t i = 0; i < 3; ++i) {
        const FhModel& fi = set.factor[i];
        auto pool_j = set.factor[(i + 1) % 3].short_risk();
        auto pool_k = set.factor[(i + 2) % 3].short_risk();
        for (std::size_t base : {fi.p, fi.s})
            for (std::size_t x : pool_j)
                for (std::size_t y : pool_k)
                    if (base + x + y == d) return true;
    }
    auto p0 = set.factor[0].short_risk();
    auto p1 = set.factor[1].short_risk();
    auto p2 = set.factor[2].short_risk();
    for (std::size_t x : p0)
        for (std::size_t y : p1)
            for (std::size_t z : p2)
                if (x + y + z == d) return true;
    return false;
}

} // namespace

TEST_CASE("fh model well formedness") {
    CHECK(FhModel{4, 7}.well_formed());
    CHECK(!FhModel{3, 8}.well_formed());
    CHECK(!FhModel{4, 6}.well_formed());
    CHECK(FhModel{9, 16}.r() == 25);
    auto risk = FhModel{9, 16}.short_risk();
    CHECK(risk == std::array<std::size_t, 6>{0, 1, 2, 25, 24, 23});
}

TEST_CASE("linked condition chains the degrees") {
    ParameterSet good = make_set(9, 16, 12, 22, 15, 19);
    CHECK(good.linked());
    CHECK(good.well_formed());
    CHECK(good.q() == 31);
    ParameterSet bad = make_set(9, 16, 12, 22, 15, 20);
    CHECK(!bad.linked());
}

TEST_CASE("bad dimensions agree with the direct membership scan") {
    std::vector<ParameterSet> sets = {
        make_set(9, 16, 12, 22, 15, 19),
        make_set(9, 17, 12, 23, 15, 20),
        make_set(6, 12, 9, 18, 12, 15),
        make_set(4, 7, 4, 7, 4, 7),
    };
    for (const auto& set : sets) {
        std::vector<std::size_t> bad = bad_dimensions(set);
        CHECK(std::is_sorted(bad.begin(), bad.end()));
        CHECK(std::adjacent_find(bad.begin(), bad.end()) == bad.end());
        std::set<std::size_t> bad_set(bad.begin(), bad.end());
        for (std::size_t d = 0; d <= 3 * set.q() + 2; ++d)
            CHECK(bad_set.count(d) == std::size_t(ref_is_bad(set, d)));

        std::vector<std::size_t> gaps = dimension_gaps(set);
        for (std::size_t g : gaps) {
            CHECK(!ref_is_bad(set, g));
            CHECK(g <= 3 * set.q());
        }
        std::size_t in_range = 0;
        for (std::size_t d : bad)
            if (d <= 3 * set.q()) ++in_range;
        CHECK(in_range + gaps.size() == 3 * set.q() + 1);
    }
}

TEST_CASE("bad set is closed under complementation to 3q") {
    // 3q - (p_i + x + y) = s_i + (r_j - x) + (r_k - y) and the risk pools
    // are closed under r - value, so gaps must mirror around 3q / 2.
    std::vector<ParameterSet> sets = {
        make_set(9, 16, 12, 22, 15, 19),
        make_set(6, 12, 9, 18, 12, 15),
        make_set(10, 18, 13, 24, 16, 21),
    };
    for (const auto& set : sets) {
        std::size_t total = 3 * set.q();
        for (std::size_t d = 0; d <= total; ++d)
            CHECK(ref_is_bad(set, d) == ref_is_bad(set, total - d));
        std::vector<std::size_t> gaps = dimension_gaps(set);
        std::vector<std::size_t> mirrored;
        for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) mirrored.push_back(total - *it);
        CHECK(gaps == mirrored);
    }
}

TEST_CASE("frozen gap lists of the two reference sets") {
    CHECK(dimension_gaps(make_set(9, 16, 12, 22, 15, 19)) ==
          std::vector<std::size_t>{7, 8, 30, 31, 62, 63, 85, 86});
    CHECK(dimension_gaps(make_set(9, 17, 12, 23, 15, 20)) ==
          std::vector<std::size_t>{7, 8, 31, 32, 64, 65, 88, 89});
    CHECK(valid(make_set(9, 16, 12, 22, 15, 19)));
    CHECK(valid(make_set(9, 17, 12, 23, 15, 20)));
}

TEST_CASE("validity needs q and 2q in the gaps") {
    ParameterSet set = make_set(9, 16, 12, 22, 15, 19);
    CHECK(valid(set));
    ParameterSet junk = make_set(4, 7, 4, 7, 4, 7);
    CHECK(junk.linked());
    CHECK(!valid(junk));
    ParameterSet malformed = make_set(3, 8, 3, 8, 3, 8);
    CHECK(!valid(malformed));
}

TEST_CASE("search rows carry frozen counts and ordering") {
    std::vector<SearchRow> rows = search_min_q(32);
    REQUIRE(rows.size() == 22);
    CHECK(rows.front().q == 11);
    CHECK(rows.back().q == 32);

    std::vector<std::size_t> want_counts(22, 0);
    want_counts[24 - 11] = 3;
    want_counts[25 - 11] = 3;
    want_counts[26 - 11] = 9;
    want_counts[27 - 11] = 15;
    want_counts[28 - 11] = 27;
    want_counts[29 - 11] = 39;
    want_counts[30 - 11] = 63;
    want_counts[31 - 11] = 87;
    want_counts[32 - 11] = 126;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].q == 11 + i);
        CHECK(rows[i].sets.size() == want_counts[i]);
        for (const auto& s : rows[i].sets) {
            CHECK(valid(s));
            CHECK(s.q() == rows[i].q);
        }
        auto by_p = [](const ParameterSet& a, const ParameterSet& b) {
            return std::array{a.factor[0].p, a.factor[1].p, a.factor[2].p} <
                   std::array{b.factor[0].p, b.factor[1].p, b.factor[2].p};
        };
        CHECK(std::is_sorted(rows[i].sets.begin(), rows[i].sets.end(), by_p));
    }

    // The reference sets appear in their rows.
    auto has = [&](std::size_t q, const ParameterSet& s) {
        const auto& sets = rows[q - 11].sets;
        return std::find(sets.begin(), sets.end(), s) != sets.end();
    };
    CHECK(has(31, make_set(9, 16, 12, 22, 15, 19)));
    CHECK(has(32, make_set(9, 17, 12, 23, 15, 20)));
    CHECK(has(24, make_set(6, 12, 9, 18, 12, 15)));

    CHECK_THROWS_AS(search_min_q(10), InvalidParameterSet);
}

TEST_CASE("every set the search returns really passes the membership scan") {
    std::vector<SearchRow> rows = search_min_q(26);
    for (const auto& row : rows)
        for (const auto& set : row.sets) {
            CHECK(!ref_is_bad(set, set.q()));
            CHECK(!ref_is_bad(set, 2 * set.q()));
            for (std::size_t i = 0; i < 3; ++i) CHECK(set.factor[i].well_formed());
        }
}

TEST_CASE("systolic ratio model prints the scaling") {
    ParameterSet set = make_set(9, 16, 12, 22, 15, 19);
    std::string rep = systolic_ratio_model(set, 10);
    CHECK(rep.find("q=31") != std::string::npos);
    CHECK(rep.find("n=10") != std::string::npos);
    CHECK(rep.find("sysq=100") != std::string::npos);
    CHECK(rep.find("sys2q=100") != std::string::npos);
    CHECK(rep.find("vol=1000") != std::string::npos);
    CHECK(rep.find("ratio=10") != std::string::npos);
    CHECK(rep.find("exponent=1/3") != std::string::npos);
    CHECK_THROWS_AS(systolic_ratio_model(make_set(4, 7, 4, 7, 4, 7), 10),
                    InvalidParameterSet);
}
