#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "cupqec/errors.hpp"
#include "cupqec/gf2.hpp"

namespace cupqec {

// All cells of one dimension, stored as a flat array of strictly increasing
// vertex tuples in lexicographic order.  The position of a tuple in this
// order is the cell's index, which is also its qubit number when the level
// backs a code block.
class SimplexList {
public:
    SimplexList() = default;
    explicit SimplexList(std::size_t q) : width_(q + 1) {}

    std::size_t degree() const { return width_ - 1; }
    std::size_t width() const { return width_; }
    std::size_t size() const { return width_ ? flat_.size() / width_ : 0; }

    const std::uint32_t* tuple(std::size_t i) const { return flat_.data() + i * width_; }
    std::vector<std::uint32_t> tuple_vec(std::size_t i) const {
        return {tuple(i), tuple(i) + width_};
    }

    void push(const std::uint32_t* t) { flat_.insert(flat_.end(), t, t + width_); }
    void push(const std::vector<std::uint32_t>& t);

    // Binary search; the list must already be sorted.
    std::optional<std::size_t> find(const std::uint32_t* t) const;

    void sort_unique();

    const std::vector<std::uint32_t>& flat() const { return flat_; }

private:
    std::size_t width_ = 0;
    std::vector<std::uint32_t> flat_;
};

// Indices of the cells one dimension up/down that are incident to each cell,
// in CSR layout.  Face rows have fixed width q+1; coface rows are ragged.
struct IncidenceCsr {
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> targets;

    std::size_t degree(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
    const std::uint32_t* row(std::size_t i) const { return targets.data() + offsets[i]; }
    std::pair<const std::uint32_t*, const std::uint32_t*> range(std::size_t i) const {
        return {targets.data() + offsets[i], targets.data() + offsets[i + 1]};
    }
};

// Finite simplicial complex, pure of dimension n, generated by its top
// simplices.  Vertices are 0..num_vertices-1; cells of every dimension are
// kept sorted so indices are stable under rebuilds.
class SimplicialComplex {
public:
    // `tops` holds the top simplices as sorted vertex tuples.  The closure
    // is generated here; every declared vertex becomes a 0-cell even if no
    // top simplex touches it.
    static SimplicialComplex from_top_simplices(std::size_t dim, std::size_t num_vertices,
                                                const std::vector<std::vector<std::uint32_t>>& tops);

    // Same, taking an already-flat list.  This is the allocation-friendly
    // entry point the product construction uses.
    static SimplicialComplex from_top_list(std::size_t dim, std::size_t num_vertices,
                                           SimplexList tops);

    std::size_t dimension() const { return dim_; }
    std::size_t num_vertices() const { return num_vertices_; }
    bool closed_manifold() const { return closed_; }

    const SimplexList& cells(std::size_t q) const;
    std::size_t num_cells(std::size_t q) const { return cells(q).size(); }
    std::size_t total_cells() const;

    // Cells one dimension down from each q-cell (width q+1, ordered by
    // dropped vertex position).
    const IncidenceCsr& faces(std::size_t q) const;
    // Cells one dimension up from each q-cell.
    const IncidenceCsr& cofaces(std::size_t q) const;

    bool operator==(const SimplicialComplex& other) const {
        return dim_ == other.dim_ && num_vertices_ == other.num_vertices_ &&
               level_equal(other);
    }

    // Empty shell, same state a moved-from complex is left in.  Only useful
    // as a slot to move a real complex into.
    SimplicialComplex() = default;

private:
    bool level_equal(const SimplicialComplex& other) const;
    void detect_closed();

    std::size_t dim_ = 0;
    std::size_t num_vertices_ = 0;
    bool closed_ = false;
    std::vector<SimplexList> levels_;
    mutable std::vector<std::optional<IncidenceCsr>> faces_;
    mutable std::vector<std::optional<IncidenceCsr>> cofaces_;
};

// Generators.
SimplicialComplex point();
SimplicialComplex circle(std::size_t length);                       // length >= 3
SimplicialComplex torus(std::size_t length);                        // circle x circle

// Staircase triangulation of |a| x |b|: one product vertex per vertex pair
// (ordered a-major), one top simplex per monotone staircase path through
// each pair of top simplices.
SimplicialComplex ordered_product(const SimplicialComplex& a, const SimplicialComplex& b);

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

// Same complex with top simplex `k` removed (closure recomputed).  This is
// how the verification suite builds its broken-manifold controls.
SimplicialComplex drop_top(const SimplicialComplex& sc, std::size_t k);

// Chain complex over GF(2).  boundary[q] maps q-chains to (q-1)-chains;
// boundary[0] is the empty map with zero rows.
struct ChainComplex {
    std::vector<BitMatrix> boundary;

    std::size_t dimension() const { return boundary.size() - 1; }
    std::size_t dim_chain(std::size_t q) const { return boundary.at(q).cols(); }
};

// Dense boundary matrices of sc, with d(q) o d(q+1) = 0 verified before
// returning.  Throws CapacityExceeded when any matrix is too big to pack.
ChainComplex chain_complex_of(const SimplicialComplex& sc);

// Tensor product of chain complexes: blocks C_i (x) C_j at total degree
// i + j, ordered by ascending i, row-major inside each block.
ChainComplex tensor_chain_product(const ChainComplex& a, const ChainComplex& b);

// GF(2) cochain supported on the degree-q cells of some complex.
struct Cochain {
    std::size_t degree = 0;
    BitVector values;

    bool operator==(const Cochain& other) const {
        return degree == other.degree && values == other.values;
    }
};

// Text format: "dim N vertices V" header, one top simplex per line.
SimplicialComplex read_complex(std::istream& in);
void write_complex(std::ostream& out, const SimplicialComplex& sc);

}  // namespace cupqec
