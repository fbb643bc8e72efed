#include "cupqec/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace cupqec {

void SimplexList::push(const std::vector<std::uint32_t>& t) {
    if (t.size() != width_)
        throw NotAComplex("simplex has " + std::to_string(t.size()) + " vertices, expected " +
                          std::to_string(width_));
    push(t.data());
}

std::optional<std::size_t> SimplexList::find(const std::uint32_t* t) const {
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        const std::uint32_t* m = tuple(mid);
        if (std::equal(m, m + width_, t)) return mid;
        if (std::lexicographical_compare(m, m + width_, t, t + width_))
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

void SimplexList::sort_unique() {
    std::size_t n = size();
    if (n < 2) return;
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    const std::uint32_t* base = flat_.data();
    std::size_t w = width_;
    std::sort(idx.begin(), idx.end(), [base, w](std::uint32_t x, std::uint32_t y) {
        return std::lexicographical_compare(base + std::size_t{x} * w, base + std::size_t{x} * w + w,
                                            base + std::size_t{y} * w, base + std::size_t{y} * w + w);
    });
    std::vector<std::uint32_t> out;
    out.reserve(flat_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t* t = base + std::size_t{idx[i]} * w;
        if (!out.empty() && std::equal(out.end() - w, out.end(), t)) continue;
        out.insert(out.end(), t, t + w);
    }
    flat_ = std::move(out);
}

SimplicialComplex SimplicialComplex::from_top_simplices(
    std::size_t dim, std::size_t num_vertices,
    const std::vector<std::vector<std::uint32_t>>& tops) {
    SimplexList list(dim);
    for (const auto& t : tops) list.push(t);
    return from_top_list(dim, num_vertices, std::move(list));
}

SimplicialComplex SimplicialComplex::from_top_list(std::size_t dim, std::size_t num_vertices,
                                                   SimplexList tops) {
    if (num_vertices == 0)
        throw TooSmall("complex needs at least one vertex");
    if (tops.size() == 0)
        throw TooSmall("complex needs at least one top simplex");

    for (std::size_t i = 0; i < tops.size(); ++i) {
        const std::uint32_t* t = tops.tuple(i);
        for (std::size_t j = 0; j <= dim; ++j) {
            if (t[j] >= num_vertices)
                throw NotAComplex("vertex id " + std::to_string(t[j]) + " out of range");
            if (j > 0 && t[j] <= t[j - 1])
                throw NotAComplex("simplex vertices must be strictly increasing");
        }
    }
    tops.sort_unique();

    SimplicialComplex sc;
    sc.dim_ = dim;
    sc.num_vertices_ = num_vertices;
    sc.levels_.resize(dim + 1);
    sc.levels_[dim] = std::move(tops);

    // Closure, one level at a time: the (q-1)-cells are exactly the facets
    // of the q-cells, plus every declared vertex at the bottom.
    for (std::size_t q = dim; q >= 1; --q) {
        const SimplexList& upper = sc.levels_[q];
        SimplexList lower(q - 1);
        std::vector<std::uint32_t> facet(q);
        for (std::size_t i = 0; i < upper.size(); ++i) {
            const std::uint32_t* t = upper.tuple(i);
            for (std::size_t drop = 0; drop <= q; ++drop) {
                std::size_t k = 0;
                for (std::size_t j = 0; j <= q; ++j)
                    if (j != drop) facet[k++] = t[j];
                lower.push(facet.data());
            }
        }
        if (q == 1) {
            for (std::uint32_t v = 0; v < num_vertices; ++v) lower.push(&v);
        }
        lower.sort_unique();
        sc.levels_[q - 1] = std::move(lower);
    }
    if (dim == 0) {
        SimplexList verts(0);
        for (std::uint32_t v = 0; v < num_vertices; ++v) verts.push(&v);
        verts.sort_unique();
        // Top simplices of a 0-complex are vertices; keep the declared set.
        sc.levels_[0] = std::move(verts);
    }

    sc.faces_.assign(dim + 1, std::nullopt);
    sc.cofaces_.assign(dim + 1, std::nullopt);
    sc.detect_closed();
    return sc;
}

const SimplexList& SimplicialComplex::cells(std::size_t q) const {
    if (q >= levels_.size())
        throw DegreeOutOfRange("no cells of degree " + std::to_string(q) +
                               " in a complex of dimension " + std::to_string(dim_));
    return levels_[q];
}

std::size_t SimplicialComplex::total_cells() const {
    std::size_t n = 0;
    for (const auto& lvl : levels_) n += lvl.size();
    return n;
}

bool SimplicialComplex::level_equal(const SimplicialComplex& other) const {
    if (levels_.size() != other.levels_.size()) return false;
    for (std::size_t q = 0; q < levels_.size(); ++q)
        if (levels_[q].flat() != other.levels_[q].flat()) return false;
    return true;
}

const IncidenceCsr& SimplicialComplex::faces(std::size_t q) const {
    if (q == 0 || q > dim_)
        throw DegreeOutOfRange("faces: degree " + std::to_string(q) + " out of range");
    auto& slot = faces_[q];
    if (slot) return *slot;

    const SimplexList& upper = levels_[q];
    const SimplexList& lower = levels_[q - 1];
    IncidenceCsr csr;
    csr.offsets.resize(upper.size() + 1);
    csr.targets.resize(upper.size() * (q + 1));
    std::vector<std::uint32_t> facet(q);
    for (std::size_t i = 0; i < upper.size(); ++i) {
        const std::uint32_t* t = upper.tuple(i);
        csr.offsets[i] = i * (q + 1);
        for (std::size_t drop = 0; drop <= q; ++drop) {
            std::size_t k = 0;
            for (std::size_t j = 0; j <= q; ++j)
                if (j != drop) facet[k++] = t[j];
            auto idx = lower.find(facet.data());
            if (!idx)
                throw NotAComplex("closure is missing a facet");
            csr.targets[i * (q + 1) + drop] = static_cast<std::uint32_t>(*idx);
        }
    }
    csr.offsets[upper.size()] = upper.size() * (q + 1);
    slot = std::move(csr);
    return *slot;
}

const IncidenceCsr& SimplicialComplex::cofaces(std::size_t q) const {
    if (q >= dim_)
        throw DegreeOutOfRange("cofaces: degree " + std::to_string(q) + " out of range");
    auto& slot = cofaces_[q];
    if (slot) return *slot;

    const IncidenceCsr& down = faces(q + 1);
    std::size_t n_lower = levels_[q].size();
    std::size_t n_upper = levels_[q + 1].size();
    IncidenceCsr csr;
    csr.offsets.assign(n_lower + 1, 0);
    for (std::uint32_t f : down.targets) ++csr.offsets[f + 1];
    for (std::size_t i = 0; i < n_lower; ++i) csr.offsets[i + 1] += csr.offsets[i];
    csr.targets.resize(down.targets.size());
    std::vector<std::size_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
    for (std::size_t up = 0; up < n_upper; ++up)
        for (std::size_t k = down.offsets[up]; k < down.offsets[up + 1]; ++k)
            csr.targets[cursor[down.targets[k]]++] = static_cast<std::uint32_t>(up);
    slot = std::move(csr);
    return *slot;
}

void SimplicialComplex::detect_closed() {
    if (dim_ == 0) {
        closed_ = levels_[0].size() > 0;
        return;
    }
    // Closed means every codimension-1 cell sits under exactly two top cells.
    std::vector<std::uint32_t> count(levels_[dim_ - 1].size(), 0);
    const SimplexList& tops = levels_[dim_];
    std::vector<std::uint32_t> facet(dim_);
    for (std::size_t i = 0; i < tops.size(); ++i) {
        const std::uint32_t* t = tops.tuple(i);
        for (std::size_t drop = 0; drop <= dim_; ++drop) {
            std::size_t k = 0;
            for (std::size_t j = 0; j <= dim_; ++j)
                if (j != drop) facet[k++] = t[j];
            auto idx = levels_[dim_ - 1].find(facet.data());
            ++count[*idx];
        }
    }
    closed_ = std::all_of(count.begin(), count.end(),
                          [](std::uint32_t c) { return c == 2; });
}

SimplicialComplex point() {
    SimplexList tops(0);
    std::uint32_t v = 0;
    tops.push(&v);
    return SimplicialComplex::from_top_list(0, 1, std::move(tops));
}

SimplicialComplex circle(std::size_t length) {
    if (length < 3)
        throw TooSmall("circle needs length >= 3");
    SimplexList tops(1);
    for (std::uint32_t i = 0; i + 1 < length; ++i) {
        std::uint32_t e[2] = {i, i + 1};
        tops.push(e);
    }
    std::uint32_t wrap[2] = {0, static_cast<std::uint32_t>(length - 1)};
    tops.push(wrap);
    return SimplicialComplex::from_top_list(1, length, std::move(tops));
}

SimplicialComplex torus(std::size_t length) {
    SimplicialComplex c = circle(length);
    return ordered_product(c, c);
}

SimplicialComplex ordered_product(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::size_t pa = a.dimension(), pb = b.dimension();
    std::size_t n = pa + pb;
    if (n + 1 > 8)
        throw CapacityExceeded("product dimension above 7 is not supported");
    std::size_t va = a.num_vertices(), vb = b.num_vertices();
    if (va > (std::size_t{1} << 32) / vb)
        throw CapacityExceeded("product vertex count overflows 32-bit ids");

    const SimplexList& ta = a.cells(pa);
    const SimplexList& tb = b.cells(pb);

    // Number of staircases per top-cell pair is C(pa+pb, pa).
    std::size_t paths = 1;
    for (std::size_t i = 1; i <= pb; ++i) paths = paths * (pa + i) / i;
    if (ta.size() * tb.size() > (std::size_t{1} << 26) / paths)
        throw CapacityExceeded("product would have too many top simplices");

    // Each staircase is encoded by the positions of the a-steps among the
    // n steps of the path.
    std::vector<std::vector<bool>> step_patterns;
    std::vector<bool> pattern(n, false);
    std::fill(pattern.begin(), pattern.begin() + pa, true);
    step_patterns.push_back(pattern);
    while (std::prev_permutation(pattern.begin(), pattern.end()))
        step_patterns.push_back(pattern);
    std::sort(step_patterns.begin(), step_patterns.end());

    SimplexList tops(n);
    std::vector<std::uint32_t> tuple(n + 1);
    for (std::size_t i = 0; i < ta.size(); ++i) {
        const std::uint32_t* sa = ta.tuple(i);
        for (std::size_t j = 0; j < tb.size(); ++j) {
            const std::uint32_t* sb = tb.tuple(j);
            for (const auto& steps : step_patterns) {
                std::size_t x = 0, y = 0;
                tuple[0] = sa[0] * vb + sb[0];
                for (std::size_t s = 0; s < n; ++s) {
                    if (steps[s])
                        ++x;
                    else
                        ++y;
                    tuple[s + 1] = sa[x] * vb + sb[y];
                }
                tops.push(tuple.data());
            }
        }
    }
    return SimplicialComplex::from_top_list(n, va * vb, std::move(tops));
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.dimension() != b.dimension())
        throw DegreeMismatch("disjoint_union: dimensions differ");
    std::size_t n = a.dimension();
    std::uint32_t shift = static_cast<std::uint32_t>(a.num_vertices());
    SimplexList tops(n);
    const SimplexList& ta = a.cells(n);
    const SimplexList& tb = b.cells(n);
    for (std::size_t i = 0; i < ta.size(); ++i) tops.push(ta.tuple(i));
    std::vector<std::uint32_t> shifted(n + 1);
    for (std::size_t i = 0; i < tb.size(); ++i) {
        const std::uint32_t* t = tb.tuple(i);
        for (std::size_t j = 0; j <= n; ++j) shifted[j] = t[j] + shift;
        tops.push(shifted.data());
    }
    return SimplicialComplex::from_top_list(n, a.num_vertices() + b.num_vertices(),
                                            std::move(tops));
}

SimplicialComplex drop_top(const SimplicialComplex& sc, std::size_t k) {
    const SimplexList& tops = sc.cells(sc.dimension());
    if (k >= tops.size())
        throw IndexOutOfRange("drop_top: no top simplex " + std::to_string(k));
    SimplexList rest(sc.dimension());
    for (std::size_t i = 0; i < tops.size(); ++i)
        if (i != k) rest.push(tops.tuple(i));
    return SimplicialComplex::from_top_list(sc.dimension(), sc.num_vertices(), std::move(rest));
}

namespace {

bool is_zero(const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t w = 0; w < m.words_per_row(); ++w)
            if (m.row_ptr(r)[w]) return false;
    return true;
}

}  // namespace

ChainComplex chain_complex_of(const SimplicialComplex& sc) {
    ChainComplex cc;
    cc.boundary.resize(sc.dimension() + 1);
    cc.boundary[0] = BitMatrix(0, sc.num_cells(0));
    for (std::size_t q = 1; q <= sc.dimension(); ++q) {
        BitMatrix d(sc.num_cells(q - 1), sc.num_cells(q));
        const IncidenceCsr& fc = sc.faces(q);
        for (std::size_t i = 0; i < sc.num_cells(q); ++i)
            for (std::size_t k = fc.offsets[i]; k < fc.offsets[i + 1]; ++k)
                d.set(fc.targets[k], i, true);
        cc.boundary[q] = std::move(d);
    }
    for (std::size_t q = 1; q < sc.dimension(); ++q)
        if (!is_zero(matmul(cc.boundary[q], cc.boundary[q + 1])))
            throw NotAComplex("boundary of boundary is nonzero");
    return cc;
}

ChainComplex tensor_chain_product(const ChainComplex& a, const ChainComplex& b) {
    std::size_t na = a.dimension(), nb = b.dimension();
    std::size_t n = na + nb;

    // dim of the tensor space at each degree, and the offset of each (i, j)
    // block inside it; blocks are ordered by ascending first factor degree.
    auto block_dims = [&](std::size_t k) {
        std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (i, offset)
        std::size_t off = 0;
        for (std::size_t i = (k > nb ? k - nb : 0); i <= std::min(na, k); ++i) {
            blocks.emplace_back(i, off);
            off += a.dim_chain(i) * b.dim_chain(k - i);
        }
        blocks.emplace_back(std::size_t(-1), off);  // sentinel: total size
        return blocks;
    };

    ChainComplex out;
    out.boundary.resize(n + 1);
    out.boundary[0] = BitMatrix(0, block_dims(0).back().second);

    for (std::size_t k = 1; k <= n; ++k) {
        auto rows_blocks = block_dims(k - 1);
        auto cols_blocks = block_dims(k);
        auto row_offset = [&](std::size_t i) -> std::size_t {
            for (auto& [bi, off] : rows_blocks)
                if (bi == i) return off;
            throw IndexOutOfRange("tensor block lookup");
        };
        BitMatrix d(rows_blocks.back().second, cols_blocks.back().second);

        for (std::size_t bi = 0; bi + 1 < cols_blocks.size(); ++bi) {
            std::size_t i = cols_blocks[bi].first;
            std::size_t j = k - i;
            std::size_t col_off = cols_blocks[bi].second;
            std::size_t dim_bj = b.dim_chain(j);

            if (i >= 1) {
                // d_a (x) id: column (x, y) hits rows (x', y).
                const BitMatrix& da = a.boundary[i];
                std::size_t roff = row_offset(i - 1);
                std::size_t dim_bj_rows = b.dim_chain(j);
                for (std::size_t xp = 0; xp < da.rows(); ++xp) {
                    const std::uint64_t* rp = da.row_ptr(xp);
                    for (std::size_t w = 0; w < da.words_per_row(); ++w) {
                        std::uint64_t word = rp[w];
                        while (word) {
                            std::size_t x = w * 64 + std::countr_zero(word);
                            word &= word - 1;
                            for (std::size_t y = 0; y < dim_bj; ++y)
                                d.set(roff + xp * dim_bj_rows + y, col_off + x * dim_bj + y, true);
                        }
                    }
                }
            }
            if (j >= 1) {
                // id (x) d_b: column (x, y) hits rows (x, y').
                const BitMatrix& db = b.boundary[j];
                std::size_t roff = row_offset(i);
                std::size_t dim_bj1 = b.dim_chain(j - 1);
                for (std::size_t yp = 0; yp < db.rows(); ++yp) {
                    const std::uint64_t* rp = db.row_ptr(yp);
                    for (std::size_t w = 0; w < db.words_per_row(); ++w) {
                        std::uint64_t word = rp[w];
                        while (word) {
                            std::size_t y = w * 64 + std::countr_zero(word);
                            word &= word - 1;
                            for (std::size_t x = 0; x < a.dim_chain(i); ++x)
                                d.set(roff + x * dim_bj1 + yp, col_off + x * dim_bj + y, true);
                        }
                    }
                }
            }
        }
        out.boundary[k] = std::move(d);
    }

    for (std::size_t q = 1; q < n; ++q)
        if (!is_zero(matmul(out.boundary[q], out.boundary[q + 1])))
            throw NotAComplex("tensor product boundary squared is nonzero");
    return out;
}

SimplicialComplex read_complex(std::istream& in) {
    std::string kw_dim, kw_vert;
    std::size_t n = 0, v = 0;
    if (!(in >> kw_dim >> n >> kw_vert >> v) || kw_dim != "dim" || kw_vert != "vertices")
        throw ParseError("complex: expected header 'dim N vertices V'");
    SimplexList tops(n);
    std::vector<std::uint32_t> tuple(n + 1);
    while (true) {
        if (!(in >> tuple[0])) break;
        for (std::size_t j = 1; j <= n; ++j)
            if (!(in >> tuple[j]))
                throw ParseError("complex: truncated top simplex line");
        tops.push(tuple.data());
    }
    if (!in.eof()) {
        in.clear();
        std::string rest;
        in >> rest;
        throw ParseError("complex: unexpected token '" + rest + "'");
    }
    return SimplicialComplex::from_top_list(n, v, std::move(tops));
}

void write_complex(std::ostream& out, const SimplicialComplex& sc) {
    out << "dim " << sc.dimension() << " vertices " << sc.num_vertices() << "\n";
    const SimplexList& tops = sc.cells(sc.dimension());
    for (std::size_t i = 0; i < tops.size(); ++i) {
        const std::uint32_t* t = tops.tuple(i);
        for (std::size_t j = 0; j < tops.width(); ++j) out << (j ? " " : "") << t[j];
        out << "\n";
    }
}

}  // namespace cupqec
