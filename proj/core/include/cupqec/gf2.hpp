#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cupqec/errors.hpp"

namespace cupqec {

// Dense GF(2) vector packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0u) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    // this ^= other
    void xor_in(const BitVector& other);

    std::size_t weight() const;
    bool is_zero() const;
    bool dot(const BitVector& other) const;

    bool operator==(const BitVector& other) const {
        return n_ == other.n_ && words_ == other.words_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    std::vector<std::size_t> support() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense GF(2) matrix, row major, each row packed into words.  Construction
// refuses anything over kDenseBitLimit total bits; callers that outgrow the
// dense representation are expected to stay on sparse incidence paths.
class BitMatrix {
public:
    static constexpr std::size_t kDenseBitLimit = std::size_t{1} << 26;

    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            data_[r * wpr_ + (c >> 6)] |= mask;
        else
            data_[r * wpr_ + (c >> 6)] &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * wpr_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    // row r ^= row s (word-parallel; this is the elimination workhorse)
    void xor_rows(std::size_t r, std::size_t s);
    void swap_rows(std::size_t r, std::size_t s);

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);

    bool operator==(const BitMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    static BitMatrix identity(std::size_t n);

    const std::uint64_t* row_ptr(std::size_t r) const { return data_.data() + r * wpr_; }
    std::uint64_t* row_ptr(std::size_t r) { return data_.data() + r * wpr_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

std::size_t rank(const BitMatrix& m);

// Basis of {x : m x = 0}, one vector per free column of the reduced echelon
// form, ordered by ascending free column.  The result is canonical for a
// given matrix because pivots always take the lowest available row.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

// Extends `subspace` to a basis of span(space) and returns only the added
// vectors, fully reduced against everything inserted before them.  Throws
// SubspaceNotContained if some subspace vector is outside span(space).
std::vector<BitVector> quotient_basis(const std::vector<BitVector>& space,
                                      const std::vector<BitVector>& subspace);

// One solution of m x = b with free variables at zero, or nullopt.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

// Inverse of a square matrix; throws DegeneratePairing when singular, since
// the only square systems the library inverts are pairing matrices.
BitMatrix inverse(const BitMatrix& m);

BitMatrix transpose(const BitMatrix& m);
BitVector apply(const BitMatrix& m, const BitVector& x);
BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);

// Incremental RREF over inserted rows.  Used wherever the library needs
// "reduce this vector against a growing span" without re-eliminating.
class Eliminator {
public:
    explicit Eliminator(std::size_t width) : width_(width) {}

    // Reduces v by the current rows; if a residue survives, it becomes a new
    // row (existing rows are cleared on its pivot) and true is returned.
    bool insert(const BitVector& v);

    // Residue of v after reduction, without inserting.
    BitVector reduce(const BitVector& v) const;

    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<BitVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t width_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;  // pivot column of each row
};

// Coordinate text format: header "rows cols", then one "r c" line per set
// entry in lexicographic order.
BitMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const BitMatrix& m);

}  // namespace cupqec
