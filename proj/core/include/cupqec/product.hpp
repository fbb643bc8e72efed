#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cupqec/cupgate.hpp"
#include "cupqec/homology.hpp"
#include "cupqec/simplicial.hpp"

namespace cupqec {

// Dense homology bases at every degree, pairing-normalized.  Only for
// factor-sized complexes; products use cross_bases instead.
std::vector<HomologyBasis> dense_bases(const SimplicialComplex& sc);

// Where a crossed class came from: degree and basis index in each factor.
struct CrossOrigin {
    std::size_t deg_a = 0, idx_a = 0;
    std::size_t deg_b = 0, idx_b = 0;
};

// Homology bases of ordered_product(a, b) assembled from factor bases
// without touching the product's boundary matrices.  Cycle
// representatives are sums of staircase lifts of factor cycle pairs;
// cocycle representatives evaluate factor cocycles on the front
// a-projection and back b-projection.  That construction pairs
// factor-wise, so the result is born normalized; this is re-verified
// here and a failure throws BasisMismatch.  Representatives are ordered
// by (a-degree, a-index, b-index) within each degree, reported through
// `origins` when given.
std::vector<HomologyBasis> cross_bases(const SimplicialComplex& a, const SimplicialComplex& b,
                                       const SimplicialComplex& ab,
                                       const std::vector<HomologyBasis>& basis_a,
                                       const std::vector<HomologyBasis>& basis_b,
                                       std::vector<std::vector<CrossOrigin>>* origins = nullptr);

enum class Family { alpha, beta, gamma, residual };

const char* family_name(Family f);

// One product class at degree l+m+t, tagged with the family its degree
// composition falls in: alpha = (l, m, 0), beta = (0, m, t),
// gamma = (l, 0, t) with nonzero entries >= 1; everything else is
// residual.  class_index is the position of the class in the product
// basis at that degree, under the canonical (degrees, indices) order.
struct KunnethLabel {
    Family family = Family::residual;
    std::array<std::size_t, 3> degrees{};
    std::array<std::size_t, 3> indices{};
    std::size_t class_index = 0;

    bool operator==(const KunnethLabel& other) const {
        return family == other.family && degrees == other.degrees &&
               indices == other.indices && class_index == other.class_index;
    }
};

// Enumerates all labels at degree q_tilde from factor Betti data alone,
// grouped family-major (alpha block, then beta, gamma, residual); the
// class_index fields still point at canonical basis positions.
std::vector<KunnethLabel> kunneth_families(const std::array<std::vector<HomologyBasis>, 3>& fb,
                                           std::size_t q_tilde);

// Product complex of three closed manifolds.
SimplicialComplex triple_product(const SimplicialComplex& a, const SimplicialComplex& b,
                                 const SimplicialComplex& c);

// The full bundle for triple-product codes: the complex, per-factor
// bases, crossed bases in canonical label order at every degree, and
// the matching labels.
struct TripleProduct {
    std::array<SimplicialComplex, 3> factors;
    SimplicialComplex pair_ab;
    SimplicialComplex full;
    std::array<std::vector<HomologyBasis>, 3> factor_bases;
    std::vector<HomologyBasis> bases;
    std::vector<std::vector<KunnethLabel>> labels;
};

TripleProduct make_triple_product(const SimplicialComplex& a, const SimplicialComplex& b,
                                  const SimplicialComplex& c);

// Nonzero-entry counts of a logical CCZ tensor whose three axes carry
// the given labels, split by which (alpha, beta, gamma) orientation the
// entry realizes.  Indexing of `by_orientation` follows the six
// family-triple permutations in lexicographic order.  Every tensor
// entry, zero or not, is re-derived as the product of per-factor cup
// integrals; a disagreement throws, since the two readings must match.
struct CczCounts {
    std::array<std::size_t, 6> by_orientation{};
    std::size_t family_total = 0;
    std::size_t other_support = 0;
    std::size_t support = 0;
};

CczCounts ccz_count(const LogicalCczTensor& t, const std::vector<KunnethLabel>& labels,
                    const TripleProduct& tp);

// Family table: one `family deg deg deg idx idx idx class` line per label.
void write_families(std::ostream& out, const std::vector<KunnethLabel>& labels);
std::vector<KunnethLabel> read_families(std::istream& in);

} // namespace cupqec
