#include "cupqec/modelsearch.hpp"

#include <algorithm>
#include <sstream>

namespace cupqec {

bool ParameterSet::linked() const {
    const std::size_t mid = q();
    for (std::size_t i = 0; i < 3; ++i)
        if (factor[i].p + factor[(i + 1) % 3].s != mid) return false;
    return true;
}

bool ParameterSet::well_formed() const {
    return factor[0].well_formed() && factor[1].well_formed() && factor[2].well_formed() &&
           linked();
}

std::vector<std::size_t> bad_dimensions(const ParameterSet& set) {
    if (!set.well_formed())
        throw InvalidParameterSet("parameter set breaks the degree linkage");
    std::vector<std::size_t> bad;
    // One large term p_i or s_i, short terms from the other two factors.
    for (std::size_t i = 0; i < 3; ++i) {
        const auto xs = set.factor[(i + 1) % 3].short_risk();
        const auto ys = set.factor[(i + 2) % 3].short_risk();
        for (std::size_t x : xs)
            for (std::size_t y : ys) {
                bad.push_back(set.factor[i].p + x + y);
                bad.push_back(set.factor[i].s + x + y);
            }
    }
    // Short terms only, one from each factor.
    for (std::size_t x : set.factor[0].short_risk())
        for (std::size_t y : set.factor[1].short_risk())
            for (std::size_t z : set.factor[2].short_risk()) bad.push_back(x + y + z);
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    return bad;
}

std::vector<std::size_t> dimension_gaps(const ParameterSet& set) {
    const std::vector<std::size_t> bad = bad_dimensions(set);
    const std::size_t top = 3 * set.q();
    std::vector<std::size_t> gaps;
    std::size_t at = 0;
    for (std::size_t d = 0; d <= top; ++d) {
        while (at < bad.size() && bad[at] < d) ++at;
        if (at == bad.size() || bad[at] != d) gaps.push_back(d);
    }
    return gaps;
}

bool valid(const ParameterSet& set) {
    if (!set.well_formed()) return false;
    const std::vector<std::size_t> bad = bad_dimensions(set);
    const std::size_t q = set.q();
    const bool q_bad = std::binary_search(bad.begin(), bad.end(), q);
    const bool qq_bad = std::binary_search(bad.begin(), bad.end(), 2 * q);
    return !q_bad && !qq_bad;
}

std::vector<SearchRow> search_min_q(std::size_t q_max) {
    if (q_max < 11) throw InvalidParameterSet("search floor is q = 11");
    std::vector<SearchRow> rows;
    for (std::size_t q = 11; q <= q_max; ++q) {
        SearchRow row;
        row.q = q;
        // s_{i+1} = q - p_i, so scanning the three p's covers every
        // linked set; p <= q-7 keeps every s >= p+3 satisfiable.
        for (std::size_t p0 = 4; p0 + 7 <= q; ++p0) {
            for (std::size_t p1 = 4; p1 + 7 <= q; ++p1) {
                for (std::size_t p2 = 4; p2 + 7 <= q; ++p2) {
                    ParameterSet set;
                    set.factor[0] = {p0, q - p2};
                    set.factor[1] = {p1, q - p0};
                    set.factor[2] = {p2, q - p1};
                    if (!set.well_formed()) continue;
                    if (valid(set)) row.sets.push_back(set);
                }
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string systolic_ratio_model(const ParameterSet& set, std::size_t n) {
    if (!valid(set)) throw InvalidParameterSet("systolic ratio model needs a valid set");
    std::size_t sys = n * n;
    std::size_t vol = n * n * n;
    std::ostringstream out;
    out << "q=" << set.q() << "\n";
    out << "n=" << n << "\n";
    out << "sysq=" << sys << "\n";
    out << "sys2q=" << sys << "\n";
    out << "vol=" << vol << "\n";
    out << "ratio=" << (vol == 0 ? 0 : sys * sys / vol) << "\n";
    out << "exponent=1/3\n";
    return out.str();
}

} // namespace cupqec
