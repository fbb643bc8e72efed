#pragma once

#include <iosfwd>
#include <vector>

#include "cupqec/gf2.hpp"
#include "cupqec/simplicial.hpp"

namespace cupqec {

// Homology and cohomology representatives of one degree, over GF(2).
// `cycles[i]` is a chain representative of the i-th class, `cocycles[i]` a
// cochain representative of the i-th dual class.  After normalization the
// pairing <cycles[i], cocycles[j]> is the identity matrix.
struct HomologyBasis {
    std::size_t degree = 0;
    std::vector<BitVector> cycles;
    std::vector<BitVector> cocycles;
    bool normalized = false;

    std::size_t count() const { return cycles.size(); }
};

// Representatives at degree q: kernel-of-boundary echelon vectors reduced
// modulo the image one degree up, and dually for cochains.  Representatives
// come out in row-echelon order straight from the elimination; no weight
// minimization of any kind.
HomologyBasis homology_basis(const ChainComplex& cc, std::size_t q);

// <cycles[i], cocycles[j]> as a dense matrix.
BitMatrix pairing_matrix(const std::vector<BitVector>& cycles,
                         const std::vector<BitVector>& cocycles);

// Replaces the cocycles by combinations of themselves so the pairing with
// the (unchanged) cycles becomes the identity.  Throws DegeneratePairing if
// the pairing matrix is singular.  Idempotent.
HomologyBasis normalize_pairing(const HomologyBasis& basis);

// Intersection-form style pairing at degree p on a closed n-manifold:
// entry (i, j) integrates the cup product of the i-th degree-p cocycle
// against the j-th degree-(n-p) cocycle over all top simplices.
// Bases are computed densely (and normalized) on the fly.
BitMatrix poincare_pairing(const SimplicialComplex& sc, std::size_t p);
BitMatrix poincare_pairing(const SimplicialComplex& sc, const HomologyBasis& at_p,
                           const HomologyBasis& at_n_minus_p);

// Betti numbers b_0..b_n of the complex.  Boundary ranks come from sparse
// column reduction, so this stays usable on complexes far beyond the dense
// matrix limit.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& sc);

// Text format: "cycle q i ..." / "cocycle q i ..." lines, one per
// representative, listing the set coordinates.
void write_basis(std::ostream& out, const HomologyBasis& basis);
HomologyBasis read_basis(std::istream& in, std::size_t cycle_len, std::size_t cocycle_len);

}  // namespace cupqec
