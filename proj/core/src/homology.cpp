#include "cupqec/homology.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cupqec/cupgate.hpp"

namespace cupqec {

namespace {

std::vector<BitVector> columns_of(const BitMatrix& m) {
    std::vector<BitVector> cols;
    cols.reserve(m.cols());
    BitMatrix t = transpose(m);
    for (std::size_t c = 0; c < t.rows(); ++c) cols.push_back(t.row(c));
    return cols;
}

}  // namespace

HomologyBasis homology_basis(const ChainComplex& cc, std::size_t q) {
    std::size_t n = cc.dimension();
    if (q > n)
        throw DegreeOutOfRange("homology_basis: degree " + std::to_string(q) +
                               " above dimension " + std::to_string(n));

    // Chain side: Ker d_q modulo Im d_{q+1}.
    std::vector<BitVector> cycle_space = kernel_basis(cc.boundary[q]);
    std::vector<BitVector> boundaries =
        q < n ? columns_of(cc.boundary[q + 1]) : std::vector<BitVector>{};

    // Cochain side: the coboundary at degree q is the transpose of d_{q+1},
    // and its image one degree down is spanned by the rows of d_q.
    std::vector<BitVector> cocycle_space;
    if (q < n) {
        cocycle_space = kernel_basis(transpose(cc.boundary[q + 1]));
    } else {
        std::size_t dim_top = cc.dim_chain(n);
        for (std::size_t i = 0; i < dim_top; ++i) {
            BitVector e(dim_top);
            e.set(i, true);
            cocycle_space.push_back(std::move(e));
        }
    }
    std::vector<BitVector> coboundaries;
    for (std::size_t r = 0; r < cc.boundary[q].rows(); ++r)
        coboundaries.push_back(cc.boundary[q].row(r));

    HomologyBasis basis;
    basis.degree = q;
    basis.cycles = quotient_basis(cycle_space, boundaries);
    basis.cocycles = quotient_basis(cocycle_space, coboundaries);
    if (basis.cycles.size() != basis.cocycles.size())
        throw Error("homology_basis: chain and cochain ranks disagree");
    return basis;
}

BitMatrix pairing_matrix(const std::vector<BitVector>& cycles,
                         const std::vector<BitVector>& cocycles) {
    for (const auto& c : cycles)
        for (const auto& x : cocycles)
            if (c.size() != x.size())
                throw LengthMismatch("pairing_matrix: representative lengths differ");
    BitMatrix p(cycles.size(), cocycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = 0; j < cocycles.size(); ++j)
            if (cycles[i].dot(cocycles[j])) p.set(i, j, true);
    return p;
}

HomologyBasis normalize_pairing(const HomologyBasis& basis) {
    BitMatrix p = pairing_matrix(basis.cycles, basis.cocycles);
    BitMatrix m = inverse(p);  // throws DegeneratePairing when singular

    HomologyBasis out;
    out.degree = basis.degree;
    out.cycles = basis.cycles;
    out.normalized = true;
    out.cocycles.reserve(basis.count());
    // new_j = sum_k m(k, j) old_k, which turns the pairing into P * M = I.
    for (std::size_t j = 0; j < basis.count(); ++j) {
        BitVector x(basis.cocycles.empty() ? 0 : basis.cocycles.front().size());
        for (std::size_t k = 0; k < basis.count(); ++k)
            if (m.get(k, j)) x.xor_in(basis.cocycles[k]);
        out.cocycles.push_back(std::move(x));
    }
    return out;
}

BitMatrix poincare_pairing(const SimplicialComplex& sc, std::size_t p) {
    std::size_t n = sc.dimension();
    if (p > n)
        throw DegreeOutOfRange("poincare_pairing: degree out of range");
    ChainComplex cc = chain_complex_of(sc);
    HomologyBasis at_p = normalize_pairing(homology_basis(cc, p));
    HomologyBasis at_q = p == n - p ? at_p : normalize_pairing(homology_basis(cc, n - p));
    return poincare_pairing(sc, at_p, at_q);
}

BitMatrix poincare_pairing(const SimplicialComplex& sc, const HomologyBasis& at_p,
                           const HomologyBasis& at_n_minus_p) {
    std::size_t n = sc.dimension();
    if (at_p.degree + at_n_minus_p.degree != n)
        throw DegreeMismatch("poincare_pairing: degrees do not sum to the dimension");
    if (!sc.closed_manifold())
        throw NotClosedManifold("poincare_pairing needs a closed manifold");

    BitMatrix out(at_p.count(), at_n_minus_p.count());
    CupTable table(sc, at_p.degree, at_n_minus_p.degree);
    for (std::size_t i = 0; i < at_p.count(); ++i)
        for (std::size_t j = 0; j < at_n_minus_p.count(); ++j)
            if (table.pair_sum(at_p.cocycles[i], at_n_minus_p.cocycles[j]))
                out.set(i, j, true);
    return out;
}

void write_basis(std::ostream& out, const HomologyBasis& basis) {
    for (std::size_t i = 0; i < basis.count(); ++i) {
        out << "cycle " << basis.degree << " " << i;
        for (std::size_t c : basis.cycles[i].support()) out << " " << c;
        out << "\n";
    }
    for (std::size_t i = 0; i < basis.count(); ++i) {
        out << "cocycle " << basis.degree << " " << i;
        for (std::size_t c : basis.cocycles[i].support()) out << " " << c;
        out << "\n";
    }
}

HomologyBasis read_basis(std::istream& in, std::size_t cycle_len, std::size_t cocycle_len) {
    HomologyBasis basis;
    bool degree_seen = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        std::size_t q = 0, idx = 0;
        if (!(ls >> kind >> q >> idx) || (kind != "cycle" && kind != "cocycle"))
            throw ParseError("basis: bad line '" + line + "'");
        if (!degree_seen) {
            basis.degree = q;
            degree_seen = true;
        } else if (q != basis.degree) {
            throw ParseError("basis: mixed degrees in one file");
        }
        bool is_cycle = kind == "cycle";
        auto& vec = is_cycle ? basis.cycles : basis.cocycles;
        if (idx != vec.size())
            throw ParseError("basis: representative " + std::to_string(idx) + " out of order");
        BitVector v(is_cycle ? cycle_len : cocycle_len);
        std::size_t coord = 0;
        while (ls >> coord) {
            if (coord >= v.size())
                throw ParseError("basis: coordinate out of range");
            v.set(coord, true);
        }
        vec.push_back(std::move(v));
    }
    if (basis.cycles.size() != basis.cocycles.size())
        throw ParseError("basis: cycle and cocycle counts differ");
    return basis;
}

}  // namespace cupqec
