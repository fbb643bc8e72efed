#include "cupqec/gf2.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace cupqec {

void BitVector::xor_in(const BitVector& other) {
    if (n_ != other.n_)
        throw LengthMismatch("xor_in: vector lengths differ");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
}

bool BitVector::is_zero() const {
    for (std::uint64_t word : words_)
        if (word) return false;
    return true;
}

bool BitVector::dot(const BitVector& other) const {
    if (n_ != other.n_)
        throw LengthMismatch("dot: vector lengths differ");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1u;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            out.push_back(wi * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64) {
    if (rows != 0 && cols != 0 && rows > kDenseBitLimit / cols)
        throw CapacityExceeded("dense matrix of " + std::to_string(rows) + "x" +
                               std::to_string(cols) + " bits exceeds the 2^26 packing limit");
    data_.assign(rows_ * wpr_, 0u);
}

void BitMatrix::xor_rows(std::size_t r, std::size_t s) {
    std::uint64_t* a = data_.data() + r * wpr_;
    const std::uint64_t* b = data_.data() + s * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) a[i] ^= b[i];
}

void BitMatrix::swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    std::uint64_t* a = data_.data() + r * wpr_;
    std::uint64_t* b = data_.data() + s * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(a[i], b[i]);
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    for (std::size_t i = 0; i < wpr_; ++i) v.words()[i] = data_[r * wpr_ + i];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_)
        throw LengthMismatch("set_row: width mismatch");
    for (std::size_t i = 0; i < wpr_; ++i) data_[r * wpr_ + i] = v.words()[i];
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

namespace {

// Forward elimination in place.  Pivot search takes the lowest-index row with
// a one in the current column, so the pivot layout is deterministic.  Returns
// (pivot column -> pivot row) pairs in pivot order.
std::vector<std::pair<std::size_t, std::size_t>> eliminate(BitMatrix& m, bool reduced) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t pr = next_row;
        while (pr < m.rows() && !m.get(pr, c)) ++pr;
        if (pr == m.rows()) continue;
        if (pr != next_row) m.xor_rows(next_row, pr), m.xor_rows(pr, next_row), m.xor_rows(next_row, pr);
        for (std::size_t r = reduced ? 0 : next_row + 1; r < m.rows(); ++r) {
            if (r != next_row && m.get(r, c)) m.xor_rows(r, next_row);
        }
        pivots.emplace_back(c, next_row);
        ++next_row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    BitMatrix work = m;
    return eliminate(work, /*reduced=*/false).size();
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    BitMatrix work = m;
    auto pivots = eliminate(work, /*reduced=*/true);

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto& [c, r] : pivots) is_pivot[c] = true;

    std::vector<BitVector> basis;
    basis.reserve(m.cols() - pivots.size());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector x(m.cols());
        x.set(f, true);
        for (auto& [c, r] : pivots)
            if (work.get(r, f)) x.set(c, true);
        basis.push_back(std::move(x));
    }
    return basis;
}

bool Eliminator::insert(const BitVector& v) {
    BitVector res = reduce(v);
    if (res.is_zero()) return false;
    std::size_t pivot = res.support().front();
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(pivot)) rows_[i].xor_in(res);
    rows_.push_back(std::move(res));
    pivots_.push_back(pivot);
    return true;
}

BitVector Eliminator::reduce(const BitVector& v) const {
    if (v.size() != width_)
        throw LengthMismatch("Eliminator: width mismatch");
    BitVector res = v;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (res.get(pivots_[i])) res.xor_in(rows_[i]);
    return res;
}

std::vector<BitVector> quotient_basis(const std::vector<BitVector>& space,
                                      const std::vector<BitVector>& subspace) {
    std::size_t width = space.empty() ? (subspace.empty() ? 0 : subspace.front().size())
                                      : space.front().size();

    Eliminator span_of_space(width);
    for (const auto& v : space) span_of_space.insert(v);
    for (const auto& v : subspace)
        if (!span_of_space.contains(v))
            throw SubspaceNotContained("quotient_basis: subspace vector outside span(space)");

    Eliminator acc(width);
    for (const auto& v : subspace) acc.insert(v);

    std::vector<BitVector> reps;
    for (const auto& v : space) {
        BitVector res = acc.reduce(v);
        if (res.is_zero()) continue;
        acc.insert(res);
        reps.push_back(acc.rows().back());
    }
    return reps;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows())
        throw LengthMismatch("solve: rhs length != rows");

    // Augmented column lives one past the end.
    BitMatrix work(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t w = 0; w < m.words_per_row(); ++w)
            work.row_ptr(r)[w] = m.row_ptr(r)[w];
        if (b.get(r)) work.set(r, m.cols(), true);
    }
    auto pivots = eliminate(work, /*reduced=*/true);

    BitVector x(m.cols());
    for (auto& [c, r] : pivots) {
        if (c == m.cols()) return std::nullopt;  // pivot in the rhs column
        if (work.get(r, m.cols())) x.set(c, true);
    }
    return x;
}

BitMatrix inverse(const BitMatrix& m) {
    if (m.rows() != m.cols())
        throw LengthMismatch("inverse: matrix not square");
    std::size_t n = m.rows();
    BitMatrix work(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            if (m.get(r, c)) work.set(r, c, true);
        work.set(r, n + r, true);
    }
    auto pivots = eliminate(work, /*reduced=*/true);
    if (pivots.size() != n || (n > 0 && pivots.back().first >= n))
        throw DegeneratePairing("inverse: matrix is singular");
    BitMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (work.get(r, n + c)) inv.set(r, c, true);
    return inv;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const std::uint64_t* row = m.row_ptr(r);
        for (std::size_t w = 0; w < m.words_per_row(); ++w) {
            std::uint64_t word = row[w];
            while (word) {
                std::size_t c = w * 64 + std::countr_zero(word);
                word &= word - 1;
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BitVector apply(const BitMatrix& m, const BitVector& x) {
    if (x.size() != m.cols())
        throw LengthMismatch("apply: vector length != cols");
    BitVector y(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint64_t acc = 0;
        const std::uint64_t* row = m.row_ptr(r);
        for (std::size_t w = 0; w < m.words_per_row(); ++w)
            acc ^= row[w] & x.words()[w];
        if (std::popcount(acc) & 1u) y.set(r, true);
    }
    return y;
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw LengthMismatch("matmul: inner dimensions differ");
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const std::uint64_t* arow = a.row_ptr(r);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) {
            std::uint64_t word = arow[w];
            while (word) {
                std::size_t k = w * 64 + std::countr_zero(word);
                word &= word - 1;
                for (std::size_t i = 0; i < c.words_per_row(); ++i)
                    c.row_ptr(r)[i] ^= b.row_ptr(k)[i];
            }
        }
    }
    return c;
}

BitMatrix read_matrix(std::istream& in) {
    std::size_t rows = 0, cols = 0;
    if (!(in >> rows >> cols))
        throw ParseError("matrix: missing 'rows cols' header");
    BitMatrix m(rows, cols);
    std::size_t r = 0, c = 0;
    while (in >> r >> c) {
        if (r >= rows || c >= cols)
            throw ParseError("matrix: entry " + std::to_string(r) + " " + std::to_string(c) +
                             " out of bounds");
        m.set(r, c, true);
    }
    if (!in.eof()) {
        in.clear();
        std::string rest;
        in >> rest;
        throw ParseError("matrix: unexpected token '" + rest + "'");
    }
    return m;
}

void write_matrix(std::ostream& out, const BitMatrix& m) {
    out << m.rows() << " " << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const std::uint64_t* row = m.row_ptr(r);
        for (std::size_t w = 0; w < m.words_per_row(); ++w) {
            std::uint64_t word = row[w];
            while (word) {
                std::size_t c = w * 64 + std::countr_zero(word);
                word &= word - 1;
                out << r << " " << c << "\n";
            }
        }
    }
}

}  // namespace cupqec
