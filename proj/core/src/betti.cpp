#include "cupqec/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <vector>

namespace cupqec {

namespace {

// Rank of one boundary map by column reduction.  Columns are processed
// in cell order and repeatedly cancelled against the column owning
// their largest remaining row entry; a column that survives nonempty
// claims that entry and counts toward the rank.  Staircase products
// put most of a cell's boundary next to its neighbours', so the
// cancellation chains stay short and fill stays low in this order.
std::size_t boundary_rank(std::size_t n_rows, const IncidenceCsr& down, std::size_t n_cols) {
    std::vector<std::int64_t> owner(n_rows, -1);
    std::vector<std::vector<std::uint32_t>> cols(n_cols);
    std::vector<std::uint32_t> merged;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < n_cols; ++j) {
        auto [first, last] = down.range(j);
        auto& c = cols[j];
        c.assign(first, last);
        std::sort(c.begin(), c.end());
        while (!c.empty()) {
            const std::uint32_t low = c.back();
            if (owner[low] < 0) {
                owner[low] = static_cast<std::int64_t>(j);
                ++rank;
                break;
            }
            const auto& o = cols[static_cast<std::size_t>(owner[low])];
            merged.clear();
            std::set_symmetric_difference(c.begin(), c.end(), o.begin(), o.end(),
                                          std::back_inserter(merged));
            c.swap(merged);
        }
        if (c.empty()) c.shrink_to_fit();
    }
    return rank;
}

} // namespace

// Betti numbers from per-level boundary ranks, b_q = n_q - r_q - r_{q+1}.
// Each rank is an independent sparse elimination, so no dense matrix is
// ever formed and product complexes far beyond the dense packing limit
// stay tractable.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& sc) {
    const std::size_t n = sc.dimension();
    std::vector<std::size_t> ranks(n + 2, 0);
    for (std::size_t q = 1; q <= n; ++q)
        ranks[q] = boundary_rank(sc.num_cells(q - 1), sc.faces(q), sc.num_cells(q));

    std::vector<std::size_t> betti(n + 1, 0);
    for (std::size_t q = 0; q <= n; ++q)
        betti[q] = sc.num_cells(q) - ranks[q] - ranks[q + 1];
    return betti;
}

} // namespace cupqec
