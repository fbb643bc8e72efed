#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cupqec/errors.hpp"

namespace cupqec {

// Abstract record of one constituent manifold: a closed (p+s)-manifold
// whose only large homology sits in degrees p and s, with possible junk
// classes in degrees 1, 2, r-2, r-1.  Nothing geometric is stored; the
// degrees are all the search needs.
struct FhModel {
    std::size_t p = 0;
    std::size_t s = 0;

    std::size_t r() const { return p + s; }
    bool well_formed() const { return p >= 4 && s >= p + 3; }
    // Degrees whose (co)systoles may be short: 0, 1, 2 and their duals.
    std::array<std::size_t, 6> short_risk() const {
        return {0, 1, 2, r(), r() - 1, r() - 2};
    }

    bool operator==(const FhModel& other) const { return p == other.p && s == other.s; }
};

// Three constituents chained so the middle degree q is shared:
// p_i + s_{(i+1) mod 3} = q for every i, making the product 3q-dimensional.
struct ParameterSet {
    std::array<FhModel, 3> factor;

    std::size_t q() const { return factor[0].p + factor[1].s; }
    bool linked() const;
    bool well_formed() const;

    bool operator==(const ParameterSet& other) const { return factor == other.factor; }
};

// Degrees of the product where a class built from at most one large
// factor term can live; such classes can be short, so these dimensions
// must avoid q and 2q.  Sorted, deduplicated.
std::vector<std::size_t> bad_dimensions(const ParameterSet& set);

// Complement of bad_dimensions within [0, 3q].
std::vector<std::size_t> dimension_gaps(const ParameterSet& set);

// Well-formed and q, 2q both fall in the gaps.  Never throws.
bool valid(const ParameterSet& set);

struct SearchRow {
    std::size_t q = 0;
    std::vector<ParameterSet> sets;  // lexicographic by (p0, p1, p2)
};

// Scans every linked (p0, p1, p2) triple for q = 11..q_max and keeps the
// valid sets.  The first nonempty row appears at q = 24.
std::vector<SearchRow> search_min_q(std::size_t q_max);

// key=value lines instantiating the systole/volume scaling of a valid
// set at size parameter n: sys_q = sys_2q = n^2, vol = n^3, so the
// systolic ratio is n = vol^(1/3).  Throws InvalidParameterSet.
std::string systolic_ratio_model(const ParameterSet& set, std::size_t n);

} // namespace cupqec
