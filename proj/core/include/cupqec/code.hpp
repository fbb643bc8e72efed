#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cupqec/gf2.hpp"
#include "cupqec/homology.hpp"

namespace cupqec {

// CSS stabilizer code read off a chain complex at one degree: qubits sit
// on the degree-q cells, X checks are the rows of the boundary into
// degree q-1, Z checks are the transposed boundary out of degree q+1.
// The logical basis is kept in normalized conjugate pairing so class
// membership of any (co)cycle is a plain dot product.
struct CssCode {
    std::size_t n_qubits = 0;
    std::size_t degree = 0;
    BitMatrix h_x;
    BitMatrix h_z;
    HomologyBasis logical;
    // Kept logical indices, sorted; absent means every class is kept.
    std::optional<std::vector<std::size_t>> subsystem_mask;

    std::size_t kept_count() const {
        return subsystem_mask ? subsystem_mask->size() : logical.count();
    }
    std::size_t max_stabilizer_weight() const;
};

// q may be the top degree, in which case there are no Z checks and the
// result degenerates to a classical code.
CssCode css_from_complex(const ChainComplex& cc, std::size_t q);

// Re-assembles an exported code and re-checks the commutation and
// pairing invariants.  Throws LengthMismatch / BasisMismatch /
// IndexOutOfRange when the pieces do not fit together.
CssCode assemble_code(BitMatrix h_x, BitMatrix h_z, HomologyBasis logical,
                      std::optional<std::vector<std::size_t>> mask = std::nullopt);

// One side of a distance result.  `no_logicals` is the infinity
// sentinel: nothing to bound, never encoded as a large number.
struct DistanceBound {
    bool no_logicals = false;
    std::size_t lower = 0;
    std::size_t upper = 0;

    bool exact() const { return !no_logicals && lower == upper; }
    std::string text() const;
};

struct DistanceReport {
    DistanceBound d_z;
    DistanceBound d_x;
    std::string method;   // "exhaustive" when both sides are exact
    std::size_t budget = 0;
    std::uint64_t seed = 0;
};

// Minimum weight of a logical operator on each side, honoring the
// subsystem mask: only combinations that act nontrivially on kept
// classes count, so dropped classes are free gauge directions.
//
// The search grows supports weight by weight against the check matrix,
// which proves minimality when it completes; `budget` caps the number
// of search steps.  If the cap is hit, the result degrades to a proven
// lower bound plus a randomized information-set upper bound and is
// tagged "randomized".  The seed only feeds that fallback but is echoed
// always.
DistanceReport distance(const CssCode& code, std::size_t budget, std::uint64_t seed);

// Marks the classes in `keep` as the protected subsystem.  Distance
// calls on the result then minimize over cosets that include the
// dropped-class spans.
CssCode subsystem_select(const CssCode& code, const std::vector<std::size_t>& keep);

// Per-kept-class minimum coset weights (representative + stabilizers +
// dropped spans), one bound per kept index, in mask order.
enum class Side { z, x };
std::vector<DistanceBound> class_weights(const CssCode& code, Side side,
                                         std::size_t budget, std::uint64_t seed);

// key=value lines: N, K, dZ, dX, w, method, seed, then one line per
// kept class and side with its minimum coset weight.
std::string parameters_report(const CssCode& code, std::size_t budget,
                              std::uint64_t seed);

} // namespace cupqec
